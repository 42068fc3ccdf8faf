"""Free transversals of a family of subspaces (linear Hall / Rado).

The search is unweighted matroid intersection.  The ground set is the
disjoint union of the RREF bases of the ``E_i``; one matroid is linear
independence of the vectors, the other allows at most one vector per index.
When no augmenting path is left, the set ``U`` of ground elements that can
still reach an unused index certifies optimality, and the indices whose
whole basis lies in ``U`` form a set ``J`` with ``dim sum E_J < |J|``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import _linalg as la
from .subspace import Subspace


@dataclass(frozen=True)
class TransversalResult:
    """Either ``vectors`` (one per subspace, jointly independent) or a 1-based
    ``violator`` index set with ``dim(sum of E_i, i in J) < |J|``."""

    vectors: tuple | None = None
    violator: tuple[int, ...] | None = None

    @property
    def ok(self) -> bool:
        return self.vectors is not None


def free_transversal(family: Sequence[Subspace]) -> TransversalResult:
    family = list(family)
    if not family:
        return TransversalResult(vectors=())
    first = family[0]
    for E in family[1:]:
        if not first.same_space(E):
            raise ValueError("subspaces of the family live in different ambient spaces")
    p = first.p
    n = len(family)

    owner: list[int] = []
    vecs: list[tuple] = []
    for i, E in enumerate(family):
        for r in E.rows:
            owner.append(i)
            vecs.append(r)
    size = len(vecs)

    def independent(idx) -> bool:
        idx = list(idx)
        return la.rank([vecs[j] for j in idx], p) == len(idx)

    chosen: set[int] = set()
    arcs: dict[int, list[int]] = {}
    sinks: set[int] = set()
    while len(chosen) < n:
        used = {owner[j] for j in chosen}
        outside = [z for z in range(size) if z not in chosen]
        sources = {z for z in outside if independent(chosen | {z})}
        sinks = {z for z in outside if owner[z] not in used}

        arcs: dict[int, list[int]] = {v: [] for v in range(size)}
        for y in chosen:
            rest = chosen - {y}
            for z in outside:
                if independent(rest | {z}):
                    arcs[y].append(z)
                if owner[z] == owner[y] or owner[z] not in used:
                    arcs[z].append(y)

        path = _shortest_path(sources, sinks, arcs)
        if path is None:
            break
        chosen.symmetric_difference_update(path)

    if len(chosen) == n:
        pick = {owner[j]: vecs[j] for j in chosen}
        return TransversalResult(vectors=tuple(pick[i] for i in range(n)))

    # vertices that can still reach a sink
    reverse: dict[int, list[int]] = {v: [] for v in range(size)}
    for u, outs in arcs.items():
        for v in outs:
            reverse[v].append(u)
    reach = set(sinks)
    queue = deque(sinks)
    while queue:
        v = queue.popleft()
        for u in reverse[v]:
            if u not in reach:
                reach.add(u)
                queue.append(u)
    J = tuple(i + 1 for i in range(n) if all(j in reach for j in range(size) if owner[j] == i))
    rank_J = la.rank([r for i in J for r in family[i - 1].rows], p)
    if not rank_J < len(J):
        raise AssertionError(f"transversal search produced a non-violating set J={J}")
    return TransversalResult(violator=J)


def _shortest_path(sources, sinks, arcs):
    if not sources:
        return None
    prev = {s: None for s in sources}
    queue = deque(sorted(sources))
    while queue:
        v = queue.popleft()
        if v in sinks:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path
        for w in arcs[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    return None

