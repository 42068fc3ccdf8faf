import random

import pytest
from hypothesis import given, settings, strategies as st

from linmatch import _linalg as la
from linmatch.gf_tower import FieldError, make_field, subfield
from linmatch.subspace import (
    Basis,
    GuardExceeded,
    Subspace,
    annihilator,
    apply_functional,
    back_division,
    contains_one,
    dual_basis_to_primal,
    enumerate_bases,
    enumerate_subspaces,
    hyperplane_omitting,
    intersect,
    product_span,
    random_basis,
    random_invertible,
    random_subspace,
    scale_left,
    span,
    subspace_from_json,
    sum_,
)
from oracles import elements_of_span, gaussian_binomial_recursive


def elems(S):
    return {x.coeffs for x in S.vectors()}


def test_span_examples(F4, F8):
    assert span([], F8).dim == 0
    t = F4.gen
    assert span([t, t, t + 1]) == Subspace.whole(F4)
    s = F8.gen
    S = span([s, s**2])
    assert S.dim == 2
    assert S.rows == ((0, 1, 0), (0, 0, 1))


def test_span_needs_field_when_empty():
    with pytest.raises(ValueError):
        span([])


def test_intersection_example(F8):
    t = F8.gen
    A, B = span([F8.one, t]), span([t, t**2])
    want = elements_of_span([(1, 0, 0), (0, 1, 0)], 2, 3) & elements_of_span([(0, 1, 0), (0, 0, 1)], 2, 3)
    assert elems(intersect(A, B)) == want
    assert intersect(A, B) == span([t])
    assert intersect(A, A) == A
    assert intersect(A, Subspace.zero(F8)).dim == 0
    assert (A & B) == intersect(A, B)


@pytest.mark.parametrize("p,k,d1,d2", [(2, 4, 2, 2), (2, 4, 3, 2), (3, 3, 2, 2), (2, 5, 3, 3), (3, 2, 1, 1)])
def test_intersection_against_enumeration(p, k, d1, d2):
    F = make_field(p, k)
    rng = random.Random(p * 100 + k * 10 + d1)
    for _ in range(30):
        A, B = random_subspace(F, d1, rng), random_subspace(F, d2, rng)
        inter = intersect(A, B)
        assert elems(inter) == elems(A) & elems(B)
        assert inter.dim + sum_(A, B).dim == A.dim + B.dim


def test_scale_left_examples(F8):
    t = F8.gen
    A = span([F8.one, t])
    assert scale_left(F8.one, A) == A
    assert scale_left(t, A) == span([t, t**2])
    with pytest.raises(ZeroDivisionError):
        scale_left(F8.zero, A)


def test_back_division_examples(F16, omega):
    t = F16.gen
    A = subfield(F16, 2).space
    assert A == span([F16.one, omega])
    B = span([omega, t])
    assert back_division(F16.one, A, B) == span([omega])
    assert back_division(t, Subspace.whole(F16), B) == B
    assert back_division(t, Subspace.zero(F16), B).dim == 0


def test_back_division_against_enumeration(F16):
    rng = random.Random(5)
    for _ in range(40):
        A, B = random_subspace(F16, 2, rng), random_subspace(F16, 3, rng)
        a = F16.from_int(rng.randrange(1, 16))
        want = {x.coeffs for x in B.vectors() if a * x in A}
        assert elems(back_division(a, A, B)) == want


def test_product_span_examples(F4, F16):
    t = F4.gen
    assert product_span(span([t]), span([t])) == span([t + 1])
    rng = random.Random(1)
    B = random_subspace(F16, 2, rng)
    assert product_span(span([F16.one]), B) == B


def test_product_span_against_enumeration(F16):
    rng = random.Random(2)
    for _ in range(20):
        A, B = random_subspace(F16, 2, rng), random_subspace(F16, 2, rng)
        prods = [(a * b).coeffs for a in A.vectors() for b in B.vectors()]
        assert elems(product_span(A, B)) == elements_of_span(prods, 2, 4)


def test_contains_one(F8):
    t = F8.gen
    assert contains_one(span([F8.one, t]))
    assert not contains_one(span([t, t**2]))
    assert not contains_one(Subspace.zero(F8))


def test_hyperplane_omitting(F4, F8):
    b = span([F4.gen]).basis()
    assert hyperplane_omitting(b, 1).dim == 0
    t = F8.gen
    S = span([t, t**2])
    assert hyperplane_omitting(Basis([t, t**2], S), 1) == span([t**2])
    with pytest.raises(IndexError):
        hyperplane_omitting(Basis([t, t**2], S), 0)


def test_basis_validation(F8):
    t = F8.gen
    S = span([t, t**2])
    with pytest.raises(ValueError):
        Basis([t, t], S)
    with pytest.raises(ValueError):
        Basis([t, F8.one], S)
    with pytest.raises(ValueError):
        Basis([t], S)


def test_annihilator_extremes(F16):
    rng = random.Random(3)
    B = random_subspace(F16, 3, rng)
    ref = random_basis(B, rng)
    assert annihilator(B, B, ref) == []
    full = annihilator(Subspace.zero(F16), B, ref)
    assert len(full) == 3 and la.rank(full, 2) == 3


def test_annihilator_dimension_and_vanishing(F16):
    rng = random.Random(4)
    for _ in range(30):
        B = random_subspace(F16, 3, rng)
        ref = random_basis(B, rng)
        C = intersect(B, random_subspace(F16, 2, rng))
        fs = annihilator(C, B, ref)
        assert len(fs) == B.dim - C.dim
        assert la.rank(fs, 2) == len(fs) if fs else True
        for f in fs:
            assert all(apply_functional(f, c, ref) == 0 for c in C.vectors())


def test_dual_basis_identity_gives_reference(F16):
    rng = random.Random(6)
    B = random_subspace(F16, 3, rng)
    ref = random_basis(B, rng)
    assert dual_basis_to_primal(la.identity(3), B, ref) == ref


def test_dual_basis_random(F16):
    rng = random.Random(7)
    for _ in range(20):
        B = random_subspace(F16, 3, rng)
        ref = random_basis(B, rng)
        phi = random_invertible(3, 2, rng)
        out = dual_basis_to_primal(phi, B, ref)
        for i, f in enumerate(phi):
            for j, b in enumerate(out):
                assert apply_functional(f, b, ref) == int(i == j)
        # matrix-inverse oracle: coordinates of b_j are the columns of phi^{-1}
        inv = la.inverse(phi, 2)
        assert [ref.coords(b) for b in out] == [tuple(c) for c in la.transpose(inv)]


def test_dual_basis_singular(F16):
    rng = random.Random(8)
    B = random_subspace(F16, 2, rng)
    with pytest.raises(ValueError):
        dual_basis_to_primal([(1, 0), (1, 0)], B, B.basis())


def test_enumerate_subspace_examples(F4, F16):
    assert len(list(enumerate_subspaces(F4, 1))) == 3
    assert len(list(enumerate_subspaces(F16, 2))) == 35
    zero = list(enumerate_subspaces(F16, 0))
    assert zero == [Subspace.zero(F16)]


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("k", range(1, 7))
def test_enumerate_subspace_counts(p, k):
    F = make_field(p, k)
    for d in range(k + 1):
        subs = list(enumerate_subspaces(F, d))
        assert len(subs) == gaussian_binomial_recursive(k, d, p)
        assert all(S.dim == d for S in subs)
        if len(subs) < 2000:
            assert len(set(subs)) == len(subs)


def test_enumerate_guard(F16):
    with pytest.raises(GuardExceeded):
        list(enumerate_subspaces(F16, 2, cap=10))


def test_enumerate_bases_counts(F16):
    rng = random.Random(9)
    for d, want in ((1, 1), (2, 6), (3, 168)):
        A = random_subspace(F16, d, rng)
        bases = list(enumerate_bases(A))
        assert len(bases) == want
        assert len({b.vectors for b in bases}) == want
        for b in bases[:20]:
            Basis(list(b), A)  # independent and spanning


def test_json_round_trip(F16):
    rng = random.Random(10)
    A = random_subspace(F16, 2, rng)
    assert subspace_from_json(F16, A.to_json()) == A
    with pytest.raises(ValueError):
        subspace_from_json(F16, [1, 2])
    with pytest.raises(FieldError):
        subspace_from_json(F16, [[1, 0, 1]])


def test_different_fields_rejected(F8, F16):
    with pytest.raises(FieldError):
        intersect(span([F8.one]), span([F16.one]))


# -- properties -------------------------------------------------------------

FIELDS = [make_field(*pk) for pk in [(2, 3), (2, 4), (3, 2), (3, 3), (2, 5)]]


@st.composite
def subspaces(draw, n=3):
    F = draw(st.sampled_from(FIELDS))
    out = []
    for _ in range(n):
        count = draw(st.integers(0, F.k))
        vecs = [tuple(draw(st.integers(0, F.p - 1)) for _ in range(F.k)) for _ in range(count)]
        out.append(Subspace.from_vectors(F, vecs))
    return F, out


@settings(max_examples=150, deadline=None)
@given(subspaces())
def test_canonical_form_is_generator_independent(fs):
    F, (A, B, C) = fs
    rng = random.Random(A.dim * 7 + B.dim)
    if A.dim:
        m = random_invertible(A.dim, F.p, rng)
        mixed = [la.vecmat(r, A.rows, F.p) for r in m] + [la.vecmat(m[0], A.rows, F.p)]
        assert Subspace.from_vectors(F, mixed) == A


@settings(max_examples=150, deadline=None)
@given(subspaces())
def test_lattice_laws(fs):
    F, (A, B, C) = fs
    assert intersect(A, B) <= A and intersect(A, B) <= B
    assert A <= sum_(A, B)
    assert intersect(A, B) == intersect(B, A)
    assert (A.dim + B.dim) == intersect(A, B).dim + sum_(A, B).dim
    # modular law: A <= C implies A + (B & C) == (A + B) & C
    AC = intersect(A, C)
    assert sum_(AC, intersect(B, C)) == intersect(sum_(AC, B), C)


@settings(max_examples=150, deadline=None)
@given(subspaces(2), st.integers(1, 10**6))
def test_back_division_property(fs, seed):
    F, (A, B) = fs
    a = F.from_int(seed % (F.order - 1) + 1)
    D = back_division(a, A, B)
    assert D <= B
    assert scale_left(a, D) <= A
    assert scale_left(a.inv(), scale_left(a, A)) == A
    assert scale_left(a, A).dim == A.dim


@settings(max_examples=100, deadline=None)
@given(subspaces(2))
def test_product_span_contains_products(fs):
    F, (A, B) = fs
    P = product_span(A, B)
    for a in A.basis():
        for b in B.basis():
            assert a * b in P
    if A.dim and B.dim:
        assert P.dim >= max(A.dim, B.dim)
