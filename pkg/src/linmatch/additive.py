"""Product-span lower bounds, used as executable sanity oracles.

``kemperman_check`` tests the linear Kemperman bound
``dim <AB> >= dim A + dim B - 1`` under its hypotheses;
``olson_consequence_check`` tests what the linear Olson theorem implies in an
extension of prime degree, where the only intermediate fields are K and L.
"""

from __future__ import annotations

import itertools

from . import _linalg as la
from .gf_tower import is_prime
from .subspace import Subspace, _check_cap, product_span

HOLDS = "holds"
HYPOTHESES_NOT_MET = "hypothesesNotMet"

COMPLEMENT_CAP = 4096


class InvariantBreach(AssertionError):
    """A theorem's conclusion failed although its hypotheses held."""


def complements_of_one(A: Subspace):
    """Complements of ``K = <1>`` inside ``A`` (requires ``1 in A``).

    The first one yielded drops the 1-coordinate of the echelon basis.
    """
    one = A.field.one
    c1 = A.coords(one)
    m = A.dim
    for tail in itertools.product(range(A.p), repeat=m - 1):
        f = (1,) + tail
        # rescale so that f(1) = 1; c1 = e_0 because 1 is the first RREF row
        if sum(x * y for x, y in zip(f, c1)) % A.p != 1:
            continue
        ker = la.nullspace([f], m, A.p)
        yield A._like(A.element(h).coeffs for h in ker)


def kemperman_check(A: Subspace, B: Subspace, cap: int = COMPLEMENT_CAP) -> str:
    """``holds`` or ``hypothesesNotMet``; raises :class:`InvariantBreach` if the
    hypotheses are met and the bound fails."""
    A._require_same(B)
    one = A.field.one
    if one not in A or one not in B:
        return HYPOTHESES_NOT_MET
    _check_cap(A.p ** (A.dim - 1 + B.dim - 1), cap, "complement pairs")
    met = False
    for Abar in complements_of_one(A):
        for Bbar in complements_of_one(B):
            S = Abar + Bbar + product_span(Abar, Bbar)
            if one not in S:
                met = True
                break
        if met:
            break
    if not met:
        return HYPOTHESES_NOT_MET
    if product_span(A, B).dim < A.dim + B.dim - 1:
        raise InvariantBreach(f"dim <AB> = {product_span(A, B).dim} < {A.dim + B.dim - 1} for A={A}, B={B}")
    return HOLDS


def olson_consequence_check(A: Subspace, B: Subspace) -> bool:
    """``dim <AB> >= min(k, dim A + dim B - 1)`` in a field of prime degree."""
    A._require_same(B)
    k = A.field.k
    if k != 1 and not is_prime(k):
        raise ValueError(f"degree k={k} is composite; intermediate fields break the bound")
    if A.dim == 0 or B.dim == 0:
        raise ValueError("A and B must be nonzero")
    return product_span(A, B).dim >= min(k, A.dim + B.dim - 1)
