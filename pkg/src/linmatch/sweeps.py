"""Theorem-level sweeps over exhaustive or seeded random instance corpora.

Every sweep returns a :class:`SweepReport`.  ``success`` counts instances
consistent with the theorem under test, ``failure`` counts contradicting
ones; the first contradiction is kept as ``counterexample``.  Randomness comes
from ``random.Random(seed)`` (MT19937), which is reproducible across
platforms, so a report is a pure function of its parameters.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field

from . import _linalg as la
from .additive import HOLDS, kemperman_check, olson_consequence_check
from .gf_tower import ExtensionField, is_prime, n0, prime_factors
from .groups import matching_property_scan
from .matching import (
    MatchCertificate,
    ViolationCertificate,
    brute_force_match,
    is_matched,
    match_basis,
    matching_property_prediction,
    non_matchable_witness,
    refined_guarantee,
)
from .strong import is_strong_matching, strong_matching_exists
from .subspace import (
    DEFAULT_CAP,
    Basis,
    GuardExceeded,
    Subspace,
    contains_one,
    enumerate_bases,
    enumerate_subspaces,
    random_basis,
    random_invertible,
    random_subspace,
)

RNG_NAME = "MT19937 (python random.Random)"
TASKS = ("automatch", "matchingProperty", "strongMatching", "refinement", "olson", "groups")


@dataclass
class SweepReport:
    task: str
    params: dict
    seed: int | None = None
    total: int = 0
    success: int = 0
    failure: int = 0
    counterexample: dict | None = None
    details: dict = dc_field(default_factory=dict)
    duration: float = 0.0

    def record(self, ok: bool, example=None) -> None:
        self.total += 1
        if ok:
            self.success += 1
        else:
            self.failure += 1
            if self.counterexample is None:
                self.counterexample = example() if callable(example) else example

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "task": self.task,
            "params": self.params,
            "rng": RNG_NAME,
            "seed": self.seed,
            "total": self.total,
            "success": self.success,
            "failure": self.failure,
            "counterexample": self.counterexample,
            "details": self.details,
        }
        if timing:
            out["durationSeconds"] = round(self.duration, 3)
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [
            f"task      {self.task}",
            f"params    {json.dumps(self.params, sort_keys=True)}",
            f"seed      {self.seed}",
            f"total     {self.total}",
            f"success   {self.success}",
            f"failure   {self.failure}",
            f"duration  {self.duration:.2f}s",
        ]
        if self.counterexample is not None:
            lines.append(f"first counterexample  {json.dumps(self.counterexample)}")
        return "\n".join(lines)


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.duration = time.perf_counter() - start
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _field_params(field: ExtensionField) -> dict:
    return {"p": field.p, "k": field.k, "modulus": list(field.modulus)}


def _triple(A: Subspace, B: Subspace, src: Basis, result=None) -> dict:
    out = {"A": A.to_json(), "B": B.to_json(), "basis": src.to_json()}
    if result is not None:
        out["result"] = result.to_json()
    return out


# ---------------------------------------------------------------------------


@_timed
def sweep_automatch(field: ExtensionField, dims, cap: int = DEFAULT_CAP) -> SweepReport:
    """Every basis of every ``B`` of the given dimensions: automatch succeeds
    exactly when ``1 ∉ B``."""
    report = SweepReport("automatch", {"field": _field_params(field), "dims": list(dims)})
    with_one = without_one = 0
    for d in dims:
        for B in enumerate_subspaces(field, d, cap):
            has_one = contains_one(B)
            with_one += has_one
            without_one += not has_one
            for src in enumerate_bases(B, cap):
                res = match_basis(src, B)
                ok = isinstance(res, MatchCertificate) != has_one
                report.record(ok, lambda: _triple(B, B, src, res))
    report.details = {"subspacesWithOne": with_one, "subspacesWithoutOne": without_one}
    return report


def _exhaustive_triples(field, n, cap):
    subs = list(enumerate_subspaces(field, n, cap))
    targets = [B for B in subs if not contains_one(B)]
    count = len(subs) * la.gl_order(n, field.p) * len(targets)
    if count > cap:
        raise GuardExceeded(f"{count} triples for n={n} exceeds cap {cap}")
    for A in subs:
        for src in enumerate_bases(A, cap):
            for B in targets:
                yield A, B, src


@_timed
def sweep_matching_property(
    field: ExtensionField,
    max_dim: int,
    instance_cap: int = 200_000,
    oracle: bool = False,
) -> SweepReport:
    """Exhaustive ``(A, B, basis)`` triples with ``1 ∉ B`` and ``n <= max_dim``.

    With the matching property every triple must match.  Without it the
    constructed witness must fail, confirmed by exhaustion.  Dimensions whose
    corpus exceeds ``instance_cap`` are skipped and listed in the details.
    """
    predicted = matching_property_prediction(field)
    report = SweepReport("matchingProperty", {"field": _field_params(field), "maxDim": max_dim})
    skipped, unmatched = [], 0
    for n in range(1, min(max_dim, field.k) + 1):
        try:
            triples = list(_exhaustive_triples(field, n, instance_cap))
        except GuardExceeded:
            skipped.append(n)
            continue
        for A, B, src in triples:
            res = match_basis(src, B)
            if oracle and (brute_force_match(src, B) is None) != isinstance(res, ViolationCertificate):
                report.record(False, lambda: dict(_triple(A, B, src, res), reason="oracle disagreement"))
                continue
            if isinstance(res, ViolationCertificate):
                unmatched += 1
            report.record(isinstance(res, MatchCertificate) or not predicted, lambda: _triple(A, B, src, res))
    report.details = {"predictedMatchingProperty": predicted, "unmatchedTriples": unmatched, "skippedDims": skipped}
    if not predicted:
        A, B, src = non_matchable_witness(field)
        res = match_basis(src, B)
        confirmed = isinstance(res, ViolationCertificate) and brute_force_match(src, B) is None
        report.record(confirmed, lambda: dict(_triple(A, B, src, res), reason="witness matched"))
        report.details["witness"] = _triple(A, B, src, res)
    return report


@_timed
def sweep_strong_matching(field: ExtensionField, dims, phis: int = 50, seed: int = 0, cap: int = DEFAULT_CAP) -> SweepReport:
    """All pairs of the given dimensions: a strong matching exists iff every
    sampled isomorphism is one; when it exists, one isomorphism is also checked
    to match a random basis to its image."""
    rng = random.Random(seed)
    report = SweepReport("strongMatching", {"field": _field_params(field), "dims": list(dims), "phis": phis}, seed)
    strong = 0
    for d in dims:
        subs = list(enumerate_subspaces(field, d, cap))
        for A in subs:
            for B in subs:
                exists = strong_matching_exists(A, B, cap)
                strong += exists
                maps = [random_invertible(d, field.p, rng) for _ in range(phis)]
                verdicts = [is_strong_matching(m, A, B, cap) for m in maps]
                ok = all(v == exists for v in verdicts)
                if ok and exists:
                    src = random_basis(A, rng)
                    tgt = _image_basis(maps[0], src, A, B)
                    ok = is_matched(src, tgt)
                report.record(ok, lambda: {"A": A.to_json(), "B": B.to_json(), "exists": exists})
    report.details = {"strongPairs": strong}
    return report


def _image_basis(phi, src: Basis, A: Subspace, B: Subspace) -> Basis:
    return Basis([B.element(la.vecmat(A.coords(a), phi, A.p)) for a in src], B)


def random_pair_avoiding_one(field: ExtensionField, n: int, rng: random.Random):
    A = random_subspace(field, n, rng)
    while True:
        B = random_subspace(field, n, rng)
        if not contains_one(B):
            return A, B


@_timed
def sweep_refinement(field: ExtensionField, n: int, samples: int = 500, seed: int = 42) -> SweepReport:
    """Random pairs of dimension ``n < n0`` with ``1 ∉ B``: every random basis
    of ``A`` must match."""
    if not refined_guarantee(field, n):
        raise ValueError(f"n={n} is not below n0={n0(field)}; nothing is guaranteed")
    rng = random.Random(seed)
    report = SweepReport("refinement", {"field": _field_params(field), "n": n, "samples": samples}, seed)
    for _ in range(samples):
        A, B = random_pair_avoiding_one(field, n, rng)
        src = random_basis(A, rng)
        res = match_basis(src, B)
        report.record(isinstance(res, MatchCertificate), lambda: _triple(A, B, src, res))
    return report


@_timed
def sweep_olson(field: ExtensionField, samples: int = 1000, seed: int = 0, max_dim: int | None = None) -> SweepReport:
    """Random pairs in a prime-degree field: the product-span bound, plus the
    Kemperman check on each pair and on the pair with ``K`` adjoined."""
    if field.k != 1 and not is_prime(field.k):
        raise ValueError(f"olson sweep needs a prime-degree field, got k={field.k}")
    max_dim = max_dim or field.k
    rng = random.Random(seed)
    report = SweepReport("olson", {"field": _field_params(field), "samples": samples, "maxDim": max_dim}, seed)
    kemp = {"holds": 0, "hypothesesNotMet": 0}
    one = field.one.coeffs
    for _ in range(samples):
        A = random_subspace(field, rng.randint(1, max_dim), rng)
        B = random_subspace(field, rng.randint(1, max_dim), rng)
        report.record(olson_consequence_check(A, B), lambda: {"A": A.to_json(), "B": B.to_json()})
        for X, Y in ((A, B), (A._like(A.rows + (one,)), B._like(B.rows + (one,)))):
            kemp[kemperman_check(X, Y)] += 1
    report.details = {"kemperman": kemp, "kempermanHolds": kemp[HOLDS]}
    return report


@_timed
def sweep_groups(groups, max_size: int = 3, radius: int = 1) -> SweepReport:
    """Group matching scans; contradictions are a counterexample in a group that
    should have the matching property, a missing one in a composite cyclic
    group when ``max_size`` reaches its smallest prime factor, or any failed
    ``B``-to-``B`` matching."""
    report = SweepReport("groups", {"groups": [g.name for g in groups], "maxSize": max_size, "radius": radius})
    for G in groups:
        scan = matching_property_scan(G, max_size, radius)
        report.details[G.name] = scan.to_json()
        has_property = G.kind == "freeAbelian" or G.n == 1 or is_prime(G.n)
        if has_property:
            ok = scan.counterexample is None
        else:
            ok = scan.counterexample is not None or max_size < min(prime_factors(G.n))
        report.record(ok, {"group": G.name, "counterexample": scan.counterexample})
        report.record(scan.automatch_failure is None, {"group": G.name, "automatchFailure": scan.automatch_failure})
    return report


__all__ = [
    "RNG_NAME",
    "SweepReport",
    "TASKS",
    "random_pair_avoiding_one",
    "sweep_automatch",
    "sweep_groups",
    "sweep_matching_property",
    "sweep_olson",
    "sweep_refinement",
    "sweep_strong_matching",
]
