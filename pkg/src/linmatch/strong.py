"""Strong matchings: isomorphisms ``A -> B`` that match every basis of ``A``
to its image.  One exists iff ``AB ∩ A = {0}``, and then every isomorphism is
one."""

from __future__ import annotations

from typing import Sequence

from . import _linalg as la
from .subspace import DEFAULT_CAP, Subspace, _check_cap, back_division


def _nonzero_elements(A: Subspace, cap: int):
    _check_cap(A.p**A.dim, cap, "strong matching element scan")
    for c in la.all_vectors(A.dim, A.p):
        if any(c):
            yield c, A.element(c)


def strong_matching_exists(A: Subspace, B: Subspace, cap: int = DEFAULT_CAP) -> bool:
    """``a^{-1}A ∩ B = 0`` for every nonzero ``a`` in ``A`` (not just a basis)."""
    if A.dim != B.dim or A.dim < 1:
        raise ValueError("need dim A = dim B >= 1")
    return all(back_division(a, A, B).dim == 0 for _, a in _nonzero_elements(A, cap))


def _projective_functionals(n: int, p: int):
    for f in la.all_vectors(n, p):
        nz = next((x for x in f if x), 0)
        if nz == 1:
            yield f


def is_strong_matching(phi: Sequence[Sequence[int]], A: Subspace, B: Subspace, cap: int = DEFAULT_CAP) -> bool:
    """Check the isomorphism ``phi`` directly: for each nonzero ``a`` and each
    complement ``H`` of ``<a>`` in ``A``, require ``a^{-1}A ∩ B ⊂ phi(H)``.

    ``phi`` acts on RREF coordinates as row vectors: the element of ``A`` with
    coordinates ``c`` goes to the element of ``B`` with coordinates ``c @ phi``.
    """
    n = A.dim
    if B.dim != n or n < 1:
        raise ValueError("need dim A = dim B >= 1")
    phi = tuple(tuple(int(x) % A.p for x in row) for row in phi)
    if len(phi) != n or any(len(r) != n for r in phi) or la.rank(phi, A.p) != n:
        raise ValueError("phi is not an invertible n x n matrix")
    _check_cap(A.p ** (2 * n), cap, "strong matching complement scan")
    functionals = list(_projective_functionals(n, A.p))
    for c, a in _nonzero_elements(A, cap):
        C = back_division(a, A, B)
        if C.dim == 0:
            continue
        for f in functionals:
            # complements of <a> are the kernels of functionals with f(a) != 0
            if sum(x * y for x, y in zip(f, c)) % A.p == 0:
                continue
            H = la.nullspace([f], n, A.p)
            image = Subspace(B.field, *la.rref([B.element(la.vecmat(h, phi, A.p)).coeffs for h in H], B.p))
            if not C <= image:
                return False
    return True
