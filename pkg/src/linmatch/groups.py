"""Matchings between finite subsets of abelian groups.

A matching from ``A`` to ``B`` is a bijection ``phi`` with ``a + phi(a) ∉ A``
for all ``a``.  Only cyclic groups ``Z_n`` and lattices ``Z^d`` are modelled.
"""

from __future__ import annotations

import itertools
import re
from math import comb
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .subspace import GuardExceeded

SCAN_CAP = 10**6


@dataclass(frozen=True)
class GroupDescriptor:
    """``cyclic`` with order ``n``, or ``freeAbelian`` of rank ``n``."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("cyclic", "freeAbelian") or self.n < 1:
            raise ValueError(f"bad group {self.kind}({self.n})")

    @property
    def identity(self):
        return 0 if self.kind == "cyclic" else (0,) * self.n

    def op(self, x, y):
        if self.kind == "cyclic":
            return (x + y) % self.n
        return tuple(a + b for a, b in zip(x, y))

    def elements(self, radius: int = 1) -> list:
        """All elements (cyclic) or the box ``[-radius, radius]^d`` (lattice)."""
        if self.kind == "cyclic":
            return list(range(self.n))
        return list(itertools.product(range(-radius, radius + 1), repeat=self.n))

    @property
    def name(self) -> str:
        return f"Z{self.n}" if self.kind == "cyclic" else f"Z^{self.n}"

    def __str__(self):
        return self.name


def cyclic(n: int) -> GroupDescriptor:
    return GroupDescriptor("cyclic", n)


def free_abelian(d: int) -> GroupDescriptor:
    return GroupDescriptor("freeAbelian", d)


def parse_group(text: str) -> GroupDescriptor:
    """``Z7`` / ``Z_7`` for cyclic groups, ``Z^2`` for lattices."""
    m = re.fullmatch(r"Z_?(\d+)", text.strip())
    if m:
        return cyclic(int(m.group(1)))
    m = re.fullmatch(r"Z\^(\d+)", text.strip())
    if m:
        return free_abelian(int(m.group(1)))
    raise ValueError(f"unrecognised group {text!r}")


def _canonical(S: Iterable[Hashable]) -> list:
    return sorted(set(S))


def _adjacency(A: Sequence, B: Sequence, G: GroupDescriptor) -> list[list[int]]:
    inA = set(A)
    return [[j for j, b in enumerate(B) if G.op(a, b) not in inA] for a in A]


def _max_matching(adj: list[list[int]], nb: int) -> tuple[list[int], list[int]]:
    """Augmenting paths (Kuhn); returns ``(match_a, match_b)`` with -1 for free."""
    match_a = [-1] * len(adj)
    match_b = [-1] * nb

    def augment(u, seen):
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if match_b[v] == -1 or augment(match_b[v], seen):
                match_a[u] = v
                match_b[v] = u
                return True
        return False

    for u in range(len(adj)):
        augment(u, set())
    return match_a, match_b


def _check(A, B, G):
    A = _canonical(A)
    B = _canonical(B)
    if len(A) != len(B):
        raise ValueError(f"|A| = {len(A)} != |B| = {len(B)}")
    return A, B


def find_matching(A: Iterable, B: Iterable, G: GroupDescriptor) -> dict | None:
    """A perfect matching ``{a: phi(a)}`` or ``None``."""
    A, B = _check(A, B, G)
    match_a, _ = _max_matching(_adjacency(A, B, G), len(B))
    if -1 in match_a:
        return None
    phi = {a: B[v] for a, v in zip(A, match_a)}
    for a, b in phi.items():
        if G.op(a, b) in set(A):
            raise AssertionError(f"matching edge {a} -> {b} lands in A")
    return phi


def hall_violator(A: Iterable, B: Iterable, G: GroupDescriptor) -> list | None:
    """A subset ``S`` of ``A`` with fewer than ``|S|`` admissible partners, or
    ``None`` when a perfect matching exists."""
    A, B = _check(A, B, G)
    adj = _adjacency(A, B, G)
    match_a, match_b = _max_matching(adj, len(B))
    free = [u for u, v in enumerate(match_a) if v == -1]
    if not free:
        return None
    # alternating reachability from one unmatched vertex (Kőnig)
    S = {free[0]}
    stack = [free[0]]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            w = match_b[v]
            if w != -1 and w not in S:
                S.add(w)
                stack.append(w)
    return [A[u] for u in sorted(S)]


@dataclass
class GroupScanReport:
    group: str
    max_size: int
    pairs_checked: int = 0
    counterexample: dict | None = None
    automatch_checked: int = 0
    automatch_failure: list | None = None

    @property
    def has_matching_property(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "maxSize": self.max_size,
            "pairsChecked": self.pairs_checked,
            "counterexample": self.counterexample,
            "automatchChecked": self.automatch_checked,
            "automatchFailure": self.automatch_failure,
        }


def matching_property_scan(G: GroupDescriptor, max_size: int, radius: int = 1, cap: int = SCAN_CAP) -> GroupScanReport:
    """Check every ``(A, B)`` with ``|A| = |B| <= max_size`` and ``0 ∉ B``.

    Lattices are scanned inside the box of the given radius.  The first
    counterexample in (size, A, B) lexicographic order is recorded; every
    ``B`` is also checked for a matching to itself.
    """
    elems = sorted(G.elements(radius))
    e = G.identity
    nonid = [x for x in elems if x != e]
    total = sum(comb(len(elems), s) * comb(len(nonid), s) for s in range(1, max_size + 1))
    if total > cap:
        raise GuardExceeded(f"group scan needs {total} pairs, cap {cap}")
    report = GroupScanReport(G.name, max_size)
    for size in range(1, max_size + 1):
        Bs = list(itertools.combinations(nonid, size))
        for A in itertools.combinations(elems, size):
            for B in Bs:
                report.pairs_checked += 1
                if report.counterexample is None and find_matching(A, B, G) is None:
                    report.counterexample = {"group": G.name, "A": _jsonable(A), "B": _jsonable(B), "matching": None}
        for B in Bs:
            report.automatch_checked += 1
            if find_matching(B, B, G) is None and report.automatch_failure is None:
                report.automatch_failure = _jsonable(B)
    return report


def _jsonable(S):
    return [list(x) if isinstance(x, tuple) else x for x in S]
