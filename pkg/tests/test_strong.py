import random

import pytest

from linmatch import _linalg as la
from linmatch.gf_tower import subfield
from linmatch.matching import is_matched
from linmatch.strong import is_strong_matching, strong_matching_exists
from linmatch.subspace import Basis, back_division, enumerate_bases, enumerate_subspaces, random_invertible, span


def image_basis(phi, src, A, B):
    return Basis([B.element(la.vecmat(A.coords(a), phi, A.p)) for a in src], B)


def strong_by_definition(phi, A, B):
    return all(is_matched(src, image_basis(phi, src, A, B)) for src in enumerate_bases(A))


def test_examples(F4, F16):
    t = F4.gen
    T = span([t])
    assert strong_matching_exists(T, T)
    assert strong_matching_exists(span([F4.one]), T)
    S = subfield(F16, 2).space
    assert not strong_matching_exists(S, S)
    assert is_strong_matching(la.identity(1), T, T)
    for phi in (((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1))):
        assert not is_strong_matching(phi, S, S)


def test_singular_phi_rejected(F16):
    S = subfield(F16, 2).space
    with pytest.raises(ValueError):
        is_strong_matching(((1, 1), (1, 1)), S, S)
    with pytest.raises(ValueError):
        is_strong_matching(((1,),), S, S)


def test_quantifies_over_all_elements(F16):
    # a pair where every echelon basis element passes but some other nonzero
    # element of A fails: checking a basis only would be wrong
    found = None
    for A in enumerate_subspaces(F16, 2):
        for B in enumerate_subspaces(F16, 2):
            basis_ok = all(back_division(a, A, B).dim == 0 for a in A.basis())
            if basis_ok and not strong_matching_exists(A, B):
                found = (A, B)
                break
        if found:
            break
    assert found is not None


def test_against_definition_f16(F16):
    F = F16
    rng = random.Random(12)
    subs = list(enumerate_subspaces(F, 2))
    for _ in range(60):
        A, B = rng.choice(subs), rng.choice(subs)
        phi = random_invertible(2, 2, rng)
        assert is_strong_matching(phi, A, B) == strong_by_definition(phi, A, B)
        assert is_strong_matching(phi, A, B) == strong_matching_exists(A, B)
