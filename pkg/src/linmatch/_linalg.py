"""Dense linear algebra over a prime field F_p on tuples of ints.

Row vectors are tuples; matrices are sequences of rows.  Everything here is
exact and pure.  Nothing knows about field extensions.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Vector = tuple
Matrix = Sequence[Vector]


def rref(rows: Iterable[Sequence[int]], p: int) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Reduced row echelon form with the zero rows dropped.

    Returns ``(rows, pivots)`` with rows ordered by pivot column and every
    pivot entry equal to 1.
    """
    work = [[c % p for c in r] for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    top = 0
    for col in range(ncols):
        piv = None
        for r in range(top, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        row = work[top]
        lead = row[col]
        if lead != 1:
            s = pow(lead, p - 2, p)
            row = [(x * s) % p for x in row]
            work[top] = row
        for r in range(len(work)):
            if r != top:
                f = work[r][col]
                if f:
                    other = work[r]
                    work[r] = [(x - f * y) % p for x, y in zip(other, row)]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return tuple(tuple(r) for r in work[:top]), tuple(pivots)


def rank(rows: Iterable[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def reduce_against(v: Sequence[int], rows: Matrix, pivots: Sequence[int], p: int) -> list[int]:
    """Residue of ``v`` after eliminating the pivot columns of an RREF basis."""
    out = [c % p for c in v]
    for row, col in zip(rows, pivots):
        f = out[col]
        if f:
            out = [(x - f * y) % p for x, y in zip(out, row)]
    return out


def in_rowspace(v: Sequence[int], rows: Matrix, pivots: Sequence[int], p: int) -> bool:
    return not any(reduce_against(v, rows, pivots, p))


def nullspace(rows: Matrix, ncols: int, p: int) -> tuple[Vector, ...]:
    """Basis of ``{x : M x = 0}`` (right kernel), in a canonical order."""
    red, pivots = rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, col in zip(red, pivots):
            x[col] = (-row[f]) % p
        basis.append(tuple(x))
    return tuple(basis)


def matmul(a: Matrix, b: Matrix, p: int) -> tuple[Vector, ...]:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) % p for c in cols) for r in a)


def vecmat(v: Sequence[int], m: Matrix, p: int) -> Vector:
    """Row vector times matrix: the combination ``sum v[i] * m[i]``."""
    if not m:
        return ()
    out = [0] * len(m[0])
    for coef, row in zip(v, m):
        if coef:
            for j, x in enumerate(row):
                out[j] += coef * x
    return tuple(x % p for x in out)


def transpose(m: Matrix) -> tuple[Vector, ...]:
    return tuple(zip(*m))


def identity(n: int) -> tuple[Vector, ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def inverse(m: Matrix, p: int) -> tuple[Vector, ...]:
    n = len(m)
    aug = [tuple(row) + e for row, e in zip(m, identity(n))]
    red, pivots = rref(aug, p)
    if pivots[:n] != tuple(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return tuple(r[n:] for r in red)


class CoordinateMap:
    """Solve ``c @ rows = v`` for an independent list of rows.

    Rows need not be in echelon form; the elimination is done once, so
    repeated coordinate queries are cheap.
    """

    def __init__(self, rows: Matrix, p: int):
        self.p = p
        self.n = len(rows)
        if not rows:
            self._red, self._piv, self._width = (), (), 0
            return
        self._width = len(rows[0])
        aug = [tuple(r) + e for r, e in zip(rows, identity(self.n))]
        red, pivots = rref(aug, p)
        if len(red) != self.n or (pivots and pivots[-1] >= self._width):
            raise ValueError("rows are linearly dependent")
        self._red, self._piv = red, pivots

    def __call__(self, v: Sequence[int]) -> Vector:
        """Coordinates of ``v``; raises ValueError if ``v`` is outside the span."""
        p = self.p
        w = self._width
        work = [c % p for c in v] + [0] * self.n
        for row, col in zip(self._red, self._piv):
            f = work[col]
            if f:
                work = [(x - f * y) % p for x, y in zip(work, row)]
        if any(work[:w]):
            raise ValueError("vector is not in the span")
        return tuple((-x) % p for x in work[w:])


def all_vectors(n: int, p: int) -> Iterator[Vector]:
    return itertools.product(range(p), repeat=n)


def gl_order(n: int, p: int) -> int:
    out = 1
    for i in range(n):
        out *= p**n - p**i
    return out


def gaussian_binomial(n: int, d: int, q: int) -> int:
    """Number of ``d``-dimensional subspaces of ``F_q^n``."""
    if d < 0 or d > n:
        return 0
    num = den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@lru_cache(maxsize=64)
def gl_matrices(n: int, p: int) -> tuple[tuple[Vector, ...], ...]:
    """All invertible ``n x n`` matrices over F_p, rows chosen lexicographically."""
    vecs = list(all_vectors(n, p))
    out = []

    def extend(chosen, red, pivots):
        if len(chosen) == n:
            out.append(tuple(chosen))
            return
        for v in vecs:
            if any(v) and not in_rowspace(v, red, pivots, p):
                red2, piv2 = rref(list(red) + [v], p)
                extend(chosen + [v], red2, piv2)

    extend([], (), ())
    return tuple(out)


def enumerate_rref(m: int, d: int, p: int) -> Iterator[tuple[Vector, ...]]:
    """Every ``d``-dimensional subspace of ``F_p^m`` once, as RREF rows.

    Order: pivot sets lexicographically, then the free entries
    lexicographically (row-major).
    """
    for pivots in itertools.combinations(range(m), d):
        pivset = set(pivots)
        slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, m) if c not in pivset]
        for values in itertools.product(range(p), repeat=len(slots)):
            rows = [[0] * m for _ in range(d)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), val in zip(slots, values):
                rows[r][c] = val
            yield tuple(tuple(r) for r in rows)


@lru_cache(maxsize=64)
def gl_hyperplanes(n: int, p: int) -> tuple:
    """For each matrix of :func:`gl_matrices`, the RREF ``(rows, pivots)`` of
    the span of its rows with row ``i`` left out, for every ``i``."""
    return tuple(
        tuple(rref(m[:i] + m[i + 1 :], p) for i in range(n))
        for m in gl_matrices(n, p)
    )
