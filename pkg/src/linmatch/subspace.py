"""K-subspaces of L in canonical reduced row echelon form, and their calculus.

A :class:`Subspace` normally lives inside a field extension ``L`` and its
rows are coefficient vectors of field elements.  The same class also models
subspaces of a bare coordinate space ``F_p^m`` (``field is None``); the dual
space ``B*`` used by the matching construction is one of those.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence

from . import _linalg as la
from .gf_tower import ExtensionField, FieldElement, FieldError

DEFAULT_CAP = 10**7

DualFunctional = tuple
"""A linear form on B, as a row vector in the coordinates of a reference basis."""


class GuardExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured cap."""


def _check_cap(count: int, cap: int, what: str) -> None:
    if count > cap:
        raise GuardExceeded(f"{what}: {count} items exceeds cap {cap}")


class Subspace:
    """An immutable subspace; equality is equality of the RREF row matrices."""

    __slots__ = ("field", "p", "ambient", "rows", "pivots")

    def __init__(self, field: ExtensionField | None, rows, pivots, *, p: int | None = None, ambient: int | None = None):
        # rows/pivots must already be canonical; use the constructors below
        self.field = field
        self.p = field.p if field is not None else p
        self.ambient = field.k if field is not None else ambient
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field: ExtensionField, vectors: Iterable[Sequence[int]]) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != field.k:
                raise FieldError(f"vector {v} does not have length k={field.k}")
        rows, pivots = la.rref(vectors, field.p)
        return cls(field, rows, pivots)

    @classmethod
    def coordinate(cls, p: int, m: int, vectors: Iterable[Sequence[int]] = ()) -> "Subspace":
        """Subspace of the bare coordinate space ``F_p^m``."""
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != m:
                raise ValueError(f"vector {v} does not have length {m}")
        rows, pivots = la.rref(vectors, p)
        return cls(None, rows, pivots, p=p, ambient=m)

    @classmethod
    def whole(cls, field: ExtensionField) -> "Subspace":
        return cls.from_vectors(field, la.identity(field.k))

    @classmethod
    def zero(cls, field: ExtensionField) -> "Subspace":
        return cls(field, (), ())

    def _like(self, vectors) -> "Subspace":
        rows, pivots = la.rref(list(vectors), self.p)
        return Subspace(self.field, rows, pivots, p=self.p, ambient=self.ambient)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def same_space(self, other: "Subspace") -> bool:
        return self.field == other.field and self.p == other.p and self.ambient == other.ambient

    def _require_same(self, other: "Subspace") -> None:
        if not self.same_space(other):
            raise FieldError("subspaces live in different ambient spaces")

    def _vec(self, x) -> tuple:
        if isinstance(x, FieldElement):
            if x.field != self.field:
                raise FieldError("element belongs to a different field")
            return x.coeffs
        return tuple(x)

    def __contains__(self, x) -> bool:
        return la.in_rowspace(self._vec(x), self.rows, self.pivots, self.p)

    def __le__(self, other: "Subspace") -> bool:
        self._require_same(other)
        return all(r in other for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.same_space(other) and self.rows == other.rows

    def __hash__(self):
        return hash((self.p, self.ambient, self.rows))

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def coords(self, x) -> tuple:
        """Coordinates of ``x`` in the RREF basis (read off the pivot columns)."""
        v = self._vec(x)
        if v not in self:
            raise ValueError("element is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def element(self, coords: Sequence[int]) -> tuple | FieldElement:
        v = la.vecmat(coords, self.rows, self.p) if self.rows else (0,) * self.ambient
        return FieldElement(self.field, v) if self.field is not None else v

    def basis(self) -> "Basis":
        """The RREF rows as a basis (the library's reference basis)."""
        return Basis(tuple(self._wrap(r) for r in self.rows), self)

    def _wrap(self, v):
        return FieldElement(self.field, tuple(v)) if self.field is not None else tuple(v)

    def vectors(self, cap: int = DEFAULT_CAP) -> Iterator:
        """Every element of the subspace (oracle use only)."""
        _check_cap(self.p**self.dim, cap, "subspace elements")
        for c in la.all_vectors(self.dim, self.p):
            yield self.element(c)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        if self.field is not None:
            gens = ", ".join(repr(FieldElement(self.field, r)) for r in self.rows)
            return f"Subspace<{self.field}>{{{gens}}}"
        return f"Subspace<F_{self.p}^{self.ambient}>{list(self.rows)}"


class Basis:
    """An ordered basis of a subspace.

    Indexing into ``elements`` is the usual 0-based Python indexing; the
    matching API that takes a basis index (``hyperplane_omitting``, the sets
    ``J`` in certificates) uses 1-based indices, as ``a_1 .. a_n``.
    """

    __slots__ = ("elements", "parent", "_coord")

    def __init__(self, elements: Sequence, parent: Subspace | None = None):
        elements = tuple(elements)
        if parent is None:
            if not elements:
                raise ValueError("cannot infer the parent of an empty basis")
            parent = span(elements)
        vecs = [parent._vec(e) for e in elements]
        if len(vecs) != parent.dim or la.rank(vecs, parent.p) != parent.dim:
            raise ValueError("elements are not a basis of the parent subspace")
        if not all(v in parent for v in vecs):
            raise ValueError("basis elements lie outside the parent subspace")
        self.elements = elements
        self.parent = parent
        self._coord = None

    @property
    def vectors(self) -> tuple[tuple, ...]:
        return tuple(self.parent._vec(e) for e in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def coords(self, x) -> tuple:
        """Coordinates of ``x`` in this basis."""
        if self._coord is None:
            self._coord = la.CoordinateMap(self.vectors, self.parent.p)
        return self._coord(self.parent._vec(x))

    def __eq__(self, other):
        return isinstance(other, Basis) and self.parent == other.parent and self.vectors == other.vectors

    def __hash__(self):
        return hash(self.vectors)

    def to_json(self) -> list[list[int]]:
        return [list(v) for v in self.vectors]

    def __repr__(self):
        return f"Basis{list(self.elements)}"


# ---------------------------------------------------------------------------
# operations


def span(elements: Iterable, field: ExtensionField | None = None) -> Subspace:
    """Canonical span of field elements.  ``field`` is needed only for an empty list."""
    elements = list(elements)
    if not elements:
        if field is None:
            raise ValueError("span of an empty list needs an explicit field")
        return Subspace.zero(field)
    f = elements[0].field
    if field is not None and field != f:
        raise FieldError("elements do not belong to the given field")
    for e in elements:
        if not isinstance(e, FieldElement) or e.field != f:
            raise FieldError("span of elements from mixed fields")
    return Subspace.from_vectors(f, [e.coeffs for e in elements])


def sum_(A: Subspace, B: Subspace) -> Subspace:
    A._require_same(B)
    return A._like(A.rows + B.rows)


def intersect(A: Subspace, B: Subspace) -> Subspace:
    """Zassenhaus: reduce ``[[A | A], [B | 0]]``; rows ``[0 | v]`` span ``A ∩ B``."""
    A._require_same(B)
    if not A.rows or not B.rows:
        return A._like(())
    m = A.ambient
    zero = (0,) * m
    block = [r + r for r in A.rows] + [r + zero for r in B.rows]
    red, pivots = la.rref(block, A.p)
    inter = [r[m:] for r, c in zip(red, pivots) if c >= m]
    return A._like(inter)


def scale_left(a: FieldElement, A: Subspace) -> Subspace:
    """The image ``aA`` of ``A`` under ``x -> a*x``."""
    if A.field is None or a.field != A.field:
        raise FieldError("scalar and subspace belong to different fields")
    if not a:
        raise ZeroDivisionError("scaling by zero is not injective")
    return A._like(A.field._mul(a.coeffs, r) for r in A.rows)


def back_division(a: FieldElement, A: Subspace, B: Subspace) -> Subspace:
    """``a^{-1}A ∩ B = {x in B : a*x in A}``."""
    A._require_same(B)
    if not a:
        raise ZeroDivisionError("back-division by zero")
    return intersect(scale_left(a.inv(), A), B)


def product_span(A: Subspace, B: Subspace) -> Subspace:
    """``<AB>``, the span of all products ``a*b``."""
    A._require_same(B)
    if A.field is None:
        raise FieldError("products need a field")
    mul = A.field._mul
    return A._like(mul(x, y) for x in A.rows for y in B.rows)


def contains_one(B: Subspace) -> bool:
    return B.field.one in B


def hyperplane_omitting(basis: Basis, i: int) -> Subspace:
    """Span of the basis with its ``i``-th element (1-based) removed."""
    n = len(basis)
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")
    vecs = basis.vectors
    return basis.parent._like(vecs[: i - 1] + vecs[i:])


def annihilator(C: Subspace, B: Subspace, ref: Basis) -> list[DualFunctional]:
    """Basis of ``C^⊥ ⊂ B*``, functionals written against ``ref``."""
    if ref.parent != B:
        raise ValueError("reference basis does not span B")
    if not C <= B:
        raise ValueError("C is not contained in B")
    coords = [ref.coords(r) for r in C.rows]
    if not coords:
        return [tuple(e) for e in la.identity(B.dim)]
    # f vanishes on C iff coords @ f = 0
    return list(la.nullspace(coords, B.dim, B.p))


def apply_functional(f: DualFunctional, x, ref: Basis) -> int:
    return sum(a * b for a, b in zip(f, ref.coords(x))) % ref.parent.p


def dual_basis_to_primal(functionals: Sequence[DualFunctional], B: Subspace, ref: Basis) -> Basis:
    """The basis ``b_1..b_n`` of ``B`` with ``functionals[i](b_j) = δ_ij``."""
    n = B.dim
    if len(functionals) != n:
        raise ValueError(f"need {n} functionals, got {len(functionals)}")
    phi = [tuple(f) for f in functionals]
    # phi @ beta^T = I, so beta^T = phi^{-1}: b_j has ref-coordinates column j
    try:
        cols = la.transpose(la.inverse(phi, B.p)) if n else ()
    except ValueError as exc:
        raise ValueError("functionals are linearly dependent") from exc
    refvecs = ref.vectors
    elems = [B._wrap(la.vecmat(c, refvecs, B.p)) for c in cols]
    return Basis(elems, B)


def enumerate_subspaces(field: ExtensionField, d: int, cap: int = DEFAULT_CAP) -> Iterator[Subspace]:
    """Every ``d``-dimensional subspace of ``L`` exactly once (RREF order)."""
    if not 0 <= d <= field.k:
        raise ValueError(f"dimension {d} outside 0..{field.k}")
    _check_cap(la.gaussian_binomial(field.k, d, field.p), cap, "subspace enumeration")
    for rows in la.enumerate_rref(field.k, d, field.p):
        yield Subspace(field, rows, _pivots_of(rows))


def enumerate_coordinate_subspaces(p: int, m: int, d: int, cap: int = DEFAULT_CAP) -> Iterator[Subspace]:
    _check_cap(la.gaussian_binomial(m, d, p), cap, "subspace enumeration")
    for rows in la.enumerate_rref(m, d, p):
        yield Subspace(None, rows, _pivots_of(rows), p=p, ambient=m)


def _pivots_of(rows) -> tuple[int, ...]:
    return tuple(next(i for i, c in enumerate(r) if c) for r in rows)


def enumerate_bases(A: Subspace, cap: int = DEFAULT_CAP) -> Iterator[Basis]:
    """Every ordered basis of ``A``; there are ``|GL_n(F_p)|`` of them."""
    n = A.dim
    _check_cap(la.gl_order(n, A.p), cap, "basis enumeration")
    for m in la.gl_matrices(n, A.p):
        yield _basis_from_matrix(m, A)


def _basis_from_matrix(m, A: Subspace) -> Basis:
    b = Basis.__new__(Basis)
    b.elements = tuple(A._wrap(la.vecmat(row, A.rows, A.p)) for row in m)
    b.parent = A
    b._coord = None
    return b


def random_invertible(n: int, p: int, rng: random.Random) -> tuple[tuple[int, ...], ...]:
    while True:
        m = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
        if la.rank(m, p) == n:
            return m


def random_basis(A: Subspace, rng: random.Random) -> Basis:
    return _basis_from_matrix(random_invertible(A.dim, A.p, rng), A)


def random_subspace(field: ExtensionField, d: int, rng: random.Random) -> Subspace:
    while True:
        vecs = [tuple(rng.randrange(field.p) for _ in range(field.k)) for _ in range(d)]
        S = Subspace.from_vectors(field, vecs)
        if S.dim == d:
            return S


def random_coordinate_subspace(p: int, m: int, d: int, rng: random.Random) -> Subspace:
    while True:
        S = Subspace.coordinate(p, m, [tuple(rng.randrange(p) for _ in range(m)) for _ in range(d)])
        if S.dim == d:
            return S


def subspace_from_json(field: ExtensionField, gens) -> Subspace:
    if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
        raise ValueError(f"subspace must be a list of coefficient vectors, got {gens!r}")
    return Subspace.from_vectors(field, [[int(c) % field.p for c in g] for g in gens])


__all__ = [
    "DEFAULT_CAP",
    "Basis",
    "DualFunctional",
    "GuardExceeded",
    "Subspace",
    "annihilator",
    "apply_functional",
    "back_division",
    "contains_one",
    "dual_basis_to_primal",
    "enumerate_bases",
    "enumerate_coordinate_subspaces",
    "enumerate_subspaces",
    "hyperplane_omitting",
    "intersect",
    "product_span",
    "random_basis",
    "random_subspace",
    "scale_left",
    "span",
    "sum_",
]
