"""Finite field extensions ``F_p ⊂ F_{p^k}`` in the power basis.

Elements of ``F_{p^k} = F_p[t]/(f)`` are stored as coefficient tuples of
length ``k``, constant term first.  The same little-endian convention is
used for the modulus and for every JSON payload.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from dataclasses import dataclass, field as dc_field
from typing import TYPE_CHECKING, Iterator, Sequence

from . import _linalg as la

if TYPE_CHECKING:
    from .subspace import Subspace

MAX_ORDER = 2**32


class FieldError(ValueError):
    """Invalid field parameters or mixing elements of different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over F_p, coefficient lists constant term first


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        f = (a[-1] * inv_lead) % p
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return _trim(q), a


def poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return poly_divmod(prod, m, p)[1]


def poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_divmod(a, m, p)[1]
    while e:
        if e & 1:
            result = poly_mulmod(result, base, m, p)
        base = poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a:
        s = pow(a[-1], p - 2, p)
        a = [(x * s) % p for x in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` over F_p."""
    f = _trim([c % p for c in f])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if poly_powmod(x, p**k, f, p) != x:
        return False
    for q in prime_factors(k):
        h = poly_powmod(x, p ** (k // q), f, p)
        h = h + [0] * (2 - len(h)) if len(h) < 2 else list(h)
        h[1] = (h[1] - 1) % p
        if len(poly_gcd(f, h, p)) != 1:
            return False
    return True


def monic_polys(p: int, degree: int) -> Iterator[tuple[int, ...]]:
    """Monic polynomials of the given degree in increasing order of their
    base-``p`` encoding ``sum c_i p^i`` (constant term least significant)."""
    for high_first in itertools.product(range(p), repeat=degree):
        yield tuple(reversed(high_first)) + (1,)


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for f in monic_polys(p, k):
        if is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionField:
    """``L = F_p[t]/(modulus)`` viewed as a ``k``-dimensional space over ``K = F_p``."""

    p: int
    k: int
    modulus: tuple[int, ...]
    _red: tuple = dc_field(default=(), repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    @property
    def gen(self) -> "FieldElement":
        """The class of ``t``.  For ``k = 1`` this is ``-modulus[0]``."""
        if self.k == 1:
            return self(-self.modulus[0])
        return self((0, 1))

    def __call__(self, value) -> "FieldElement":
        """Coerce an int (prime-field scalar) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.k - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.k:
            raise FieldError(f"coefficient vector longer than k={self.k}")
        return FieldElement(self, tuple(coeffs) + (0,) * (self.k - len(coeffs)))

    def from_int(self, n: int) -> "FieldElement":
        """Inverse of ``int(element)``: base-``p`` digits, constant term first."""
        coeffs = []
        for _ in range(self.k):
            n, r = divmod(n, self.p)
            coeffs.append(r)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator["FieldElement"]:
        for n in range(self.order):
            yield self.from_int(n)

    def __str__(self) -> str:
        return f"GF({self.p}^{self.k})"

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    # raw coordinate arithmetic, shared by FieldElement and subspace code

    def _mul(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] += a * b
        out = prod[:k]
        for e, c in enumerate(prod[k:]):
            if c:
                for j, r in enumerate(self._red[e]):
                    out[j] += c * r
        return tuple(v % p for v in out)

    def _pow(self, x: Sequence[int], e: int) -> tuple[int, ...]:
        result = self.one.coeffs
        base = tuple(x)
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def _inv(self, x: Sequence[int]) -> tuple[int, ...]:
        if not any(x):
            raise ZeroDivisionError("zero has no inverse")
        return _cached_inverse(self, tuple(x))

    def frobenius_matrix(self, d: int = 1) -> tuple[tuple[int, ...], ...]:
        """Rows are the images of ``t^j`` under ``x -> x^(p^d)``."""
        q = self.p**d
        rows = []
        for j in range(self.k):
            tj = [0] * self.k
            tj[j] = 1
            rows.append(self._pow(tj, q))
        return tuple(rows)


@lru_cache(maxsize=1 << 16)
def _cached_inverse(field: ExtensionField, x: tuple[int, ...]) -> tuple[int, ...]:
    return field._pow(x, field.order - 2)


def _reduction_table(p: int, k: int, modulus: Sequence[int]) -> tuple:
    # t^(k+e) expressed in the power basis, e = 0 .. k-2
    table = []
    cur = [(-c) % p for c in modulus[:k]]  # t^k
    for _ in range(max(k - 1, 0)):
        table.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(c - top * m) % p for c, m in zip(cur, modulus[:k])]
    return tuple(table)


def make_field(p: int, k: int, modulus: Sequence[int] | None = None) -> ExtensionField:
    """Build ``F_{p^k}``; the default modulus is the first monic irreducible of
    degree ``k`` in :func:`monic_polys` order (so ``t^3+t+1`` for ``F_8``)."""
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"p={p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise FieldError(f"degree k={k!r} must be a positive integer")
    if p**k > MAX_ORDER:
        raise FieldError(f"p^k = {p}^{k} exceeds the supported size {MAX_ORDER}")
    if modulus is None:
        modulus = smallest_irreducible(p, k)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1:
            raise FieldError(f"modulus must have {k + 1} coefficients, got {len(modulus)}")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over F_{p}")
    return ExtensionField(p, k, tuple(modulus), _reduction_table(p, k, modulus))


def field_from_json(obj: dict) -> ExtensionField:
    try:
        return make_field(int(obj["p"]), int(obj["k"]), obj.get("modulus"))
    except (KeyError, TypeError) as exc:
        raise FieldError(f"bad field descriptor {obj!r}") from exc


class FieldElement:
    """An element of an :class:`ExtensionField`; immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtensionField, coeffs: tuple[int, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other) -> tuple[int, ...]:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements belong to different fields")
            return other.coeffs
        if isinstance(other, int):
            return self.field(other).coeffs
        return NotImplemented

    def __add__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, y)))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, y)))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.field, self.field._mul(self.coeffs, y))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return FieldElement(self.field, self.field._pow(self.coeffs, e))

    def __truediv__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return self * FieldElement(self.field, self.field._inv(y))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.coeffs))

    def frobenius(self, d: int = 1) -> "FieldElement":
        return self ** (self.field.p**d)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.coeffs))

    def __int__(self):
        p = self.field.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(mono if c == 1 and i else f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(reversed(terms)) or "0"


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def neg(x: FieldElement) -> FieldElement:
    return -x


def inv(x: FieldElement) -> FieldElement:
    return x.inv()


def element_degree(x: FieldElement) -> int:
    """Degree of ``x`` over the prime field: the least ``d | k`` with ``x^(p^d) = x``."""
    k = x.field.k
    for d in range(1, k + 1):
        if k % d == 0 and x.frobenius(d) == x:
            return d
    raise AssertionError("Frobenius^k must fix every element")  # pragma: no cover


def n0(field: ExtensionField) -> float | int:
    """Smallest degree of a field ``M`` with ``K ⊊ M ⊂ L``; ``inf`` when ``L = K``."""
    if field.k == 1:
        return math.inf
    return min(prime_factors(field.k))


@dataclass(frozen=True)
class SubfieldDescriptor:
    degree: int
    space: "Subspace"

    def __contains__(self, x) -> bool:
        return x in self.space


def subfield(field: ExtensionField, d: int) -> SubfieldDescriptor:
    """The unique subfield ``F_{p^d}``: the kernel of ``x -> x^(p^d) - x``."""
    from .subspace import Subspace

    if d < 1 or field.k % d:
        raise FieldError(f"{d} does not divide k={field.k}")
    frob = field.frobenius_matrix(d)
    shifted = [tuple((a - int(i == j)) % field.p for j, a in enumerate(row)) for i, row in enumerate(frob)]
    # x (row vector) is fixed iff x @ (F - I) = 0, i.e. (F - I)^T x^T = 0
    kernel = la.nullspace(la.transpose(shifted), field.k, field.p)
    space = Subspace.from_vectors(field, kernel)
    if space.dim != d:
        raise AssertionError(f"Frobenius fixed space has dim {space.dim}, expected {d}")
    return SubfieldDescriptor(d, space)
