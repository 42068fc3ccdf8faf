"""Matched bases between subspaces of a field extension.

A basis ``a_1..a_n`` of ``A`` is matched to a basis ``b_1..b_n`` of ``B``
when every ``a_i^{-1}A ∩ B`` lies in the hyperplane of ``B`` spanned by the
``b_j`` with ``j != i``.  Such a target basis exists iff
``dim V_J <= n - |J|`` for every index set ``J``, where ``V_J`` is the
intersection of the ``a_i^{-1}A ∩ B`` over ``i in J``.  :func:`match_basis`
builds the target basis from a free transversal of the annihilators in the
dual space.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from . import _linalg as la
from .gf_tower import ExtensionField, element_degree, n0, subfield
from .subspace import (
    DEFAULT_CAP,
    Basis,
    GuardExceeded,
    Subspace,
    annihilator,
    back_division,
    contains_one,
    dual_basis_to_primal,
    enumerate_bases,
    hyperplane_omitting,
    intersect,
    random_basis,
    span,
)
from .transversal import free_transversal

CRITERION_CAP = 20


@dataclass(frozen=True)
class MatchCertificate:
    source: Basis
    target: Basis
    verified: bool = False

    kind = "match"

    def to_json(self) -> dict:
        return {"kind": "match", "source": self.source.to_json(), "target": self.target.to_json()}


@dataclass(frozen=True)
class ViolationCertificate:
    """``dim V_J = vdim > bound = n - |J|``; ``J`` holds 1-based indices."""

    J: tuple[int, ...]
    vdim: int
    bound: int

    kind = "violation"

    def __post_init__(self):
        if not self.vdim > self.bound:
            raise ValueError(f"not a violation: vdim={self.vdim} <= bound={self.bound}")

    def to_json(self) -> dict:
        return {"kind": "violation", "J": list(self.J), "vdim": self.vdim, "bound": self.bound}


def _check_dims(src: Basis, B: Subspace) -> None:
    if src.parent.field is None or not src.parent.same_space(B):
        raise ValueError("source basis and target subspace live in different fields")
    if len(src) != B.dim:
        raise ValueError(f"dimension mismatch: dim A = {len(src)}, dim B = {B.dim}")


def back_divisions(src: Basis, B: Subspace) -> list[Subspace]:
    """``[a_i^{-1}A ∩ B for each a_i]``."""
    A = src.parent
    return [back_division(a, A, B) for a in src]


def _matched_against(cs: Sequence[Subspace], tgt: Basis) -> bool:
    return all(C <= hyperplane_omitting(tgt, i) for i, C in enumerate(cs, start=1))


def is_matched(src: Basis, tgt: Basis) -> bool:
    """Whether ``src`` is matched to ``tgt``; pure subspace inclusions."""
    _check_dims(src, tgt.parent)
    return _matched_against(back_divisions(src, tgt.parent), tgt)


def _v(cs: Sequence[Subspace], J: Sequence[int], B: Subspace) -> Subspace:
    out = B
    for i in J:
        out = intersect(out, cs[i - 1])
    return out


def dim_criterion(src: Basis, B: Subspace, cap: int = CRITERION_CAP) -> ViolationCertificate | None:
    """``None`` when ``dim V_J <= n - |J|`` for every ``J``, otherwise the first
    violating ``J`` by size and then lexicographically."""
    _check_dims(src, B)
    n = len(src)
    if n > cap:
        raise GuardExceeded(f"criterion scans 2^{n} index sets; cap is n <= {cap}")
    cs = back_divisions(src, B)
    seen = {(): B}
    for size in range(1, n + 1):
        for J in itertools.combinations(range(1, n + 1), size):
            V = seen[J] = intersect(seen[J[:-1]], cs[J[-1] - 1])
            if V.dim > n - size:
                return ViolationCertificate(J, V.dim, n - size)
    return None


def match_basis(src: Basis, B: Subspace) -> MatchCertificate | ViolationCertificate:
    """Construct a basis of ``B`` matched to ``src``, or explain why none exists."""
    _check_dims(src, B)
    n = len(src)
    cs = back_divisions(src, B)
    ref = B.basis()
    family = [Subspace.coordinate(B.p, n, annihilator(C, B, ref)) for C in cs]
    result = free_transversal(family)
    if not result.ok:
        J = result.violator
        return ViolationCertificate(J, _v(cs, J, B).dim, n - len(J))
    target = dual_basis_to_primal(result.vectors, B, ref)
    if not _matched_against(cs, target):
        raise AssertionError("constructed target basis fails the matching inclusions")
    return MatchCertificate(src, target, verified=True)


def automatch(B: Subspace, src: Basis) -> MatchCertificate | ViolationCertificate:
    """Match a basis of ``B`` to another basis of ``B``; possible iff ``1 ∉ B``."""
    if src.parent != B:
        raise ValueError("source basis does not span B")
    return match_basis(src, B)


@dataclass(frozen=True)
class SpaceVerdict:
    """``status`` is one of ``matched``, ``notMatched``, ``inconclusive``."""

    status: str
    witness: Basis | None = None
    certificate: ViolationCertificate | None = None
    checked: int = 0


def space_matched(
    A: Subspace,
    B: Subspace,
    mode: str = "exhaustive",
    samples: int = 100,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
) -> SpaceVerdict:
    """Is every basis of ``A`` matchable to a basis of ``B``?

    Sampled mode never answers ``matched``: a universal statement over bases
    cannot be settled by sampling.
    """
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} != {B.dim}")
    if mode == "exhaustive":
        bases = enumerate_bases(A, cap)
    elif mode == "sampled":
        rng = random.Random(seed)
        bases = (random_basis(A, rng) for _ in range(samples))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    checked = 0
    for src in bases:
        checked += 1
        res = match_basis(src, B)
        if isinstance(res, ViolationCertificate):
            return SpaceVerdict("notMatched", src, res, checked)
    return SpaceVerdict("matched" if mode == "exhaustive" else "inconclusive", checked=checked)


def matching_property_prediction(field: ExtensionField) -> bool:
    """``F_{p^k}`` has the linear matching property iff it has no proper
    intermediate subfield, i.e. iff ``k`` is 1 or prime."""
    return field.k == 1 or n0(field) == field.k


def non_matchable_witness(field: ExtensionField):
    """``(A, B, basis)`` with ``1 ∉ B`` and ``basis`` of ``A`` not matchable to
    any basis of ``B``; ``None`` when the field has the matching property.

    ``A = K(a)`` for an element ``a`` of the smallest proper subfield degree
    ``n``, ``B = <a, .., a^(n-1), x>`` with ``x ∉ K(a)``, basis ``1, a, .., a^(n-1)``.
    """
    if matching_property_prediction(field):
        return None
    n = n0(field)
    sub = subfield(field, n)
    a = min((e for e in sub.space.vectors() if element_degree(e) == n), key=int)
    powers = [a**j for j in range(n)]
    A = span(powers)
    x = next(field((0,) * j + (1,)) for j in range(field.k) if field((0,) * j + (1,)) not in A)
    B = span(powers[1:] + [x])
    basis = Basis(powers, A)
    if contains_one(B) or dim_criterion(basis, B) is None:
        raise AssertionError("witness construction did not produce a violation")
    return A, B, basis


def refined_guarantee(field: ExtensionField, n: int) -> bool:
    """True iff ``n < n0``; then every ``n``-dimensional ``A`` is matched to every
    ``n``-dimensional ``B`` avoiding 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return n < n0(field)


def brute_force_match(src: Basis, B: Subspace, cap: int = DEFAULT_CAP) -> Basis | None:
    """First ordered basis of ``B`` that ``src`` is matched to, by exhaustion.

    Applies the definition directly to every candidate target, working in
    coordinates relative to the RREF basis of ``B``; shares no code with the
    dual construction of :func:`match_basis`.
    """
    _check_dims(src, B)
    n, p = B.dim, B.p
    if la.gl_order(n, p) > cap:
        raise GuardExceeded(f"basis enumeration: {la.gl_order(n, p)} items exceeds cap {cap}")
    gens = [[B.coords(r) for r in C.rows] for C in back_divisions(src, B)]
    for m, hyperplanes in zip(la.gl_matrices(n, p), la.gl_hyperplanes(n, p)):
        if all(
            la.in_rowspace(g, rows, pivots, p)
            for (rows, pivots), cg in zip(hyperplanes, gens)
            for g in cg
        ):
            tgt = Basis([B.element(row) for row in m], B)
            if not _matched_against(back_divisions(src, B), tgt):
                raise AssertionError("coordinate check disagrees with the subspace check")
            return tgt
    return None


__all__ = [
    "MatchCertificate",
    "SpaceVerdict",
    "ViolationCertificate",
    "automatch",
    "back_divisions",
    "brute_force_match",
    "dim_criterion",
    "is_matched",
    "match_basis",
    "matching_property_prediction",
    "non_matchable_witness",
    "refined_guarantee",
    "space_matched",
]
