"""Matchings of subspaces in finite field extensions, with exact linear
algebra over F_p, free transversals, and small group matchings."""

from .gf_tower import ExtensionField, FieldElement, FieldError, element_degree, make_field, n0, subfield
from .matching import (
    MatchCertificate,
    ViolationCertificate,
    automatch,
    brute_force_match,
    dim_criterion,
    is_matched,
    match_basis,
    matching_property_prediction,
    non_matchable_witness,
    refined_guarantee,
    space_matched,
)
from .subspace import Basis, GuardExceeded, Subspace, intersect, span
from .transversal import free_transversal

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "ExtensionField",
    "FieldElement",
    "FieldError",
    "GuardExceeded",
    "MatchCertificate",
    "Subspace",
    "ViolationCertificate",
    "automatch",
    "brute_force_match",
    "dim_criterion",
    "element_degree",
    "free_transversal",
    "intersect",
    "is_matched",
    "make_field",
    "match_basis",
    "matching_property_prediction",
    "n0",
    "non_matchable_witness",
    "refined_guarantee",
    "space_matched",
    "span",
    "subfield",
]
