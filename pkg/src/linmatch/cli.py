"""Command line front end.

Exit codes: 0 matched / property holds, 1 violation / contradiction found,
2 input or guard error.  Machine-readable JSON goes to stdout (and to
``--json FILE``); the human summary of a sweep goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gf_tower import FieldError, make_field
from .groups import cyclic, matching_property_scan, parse_group
from .instance import InstanceError, load_instance
from .matching import MatchCertificate, automatch, match_basis
from .strong import strong_matching_exists
from .subspace import DEFAULT_CAP, GuardExceeded
from . import sweeps

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2


def parse_field(text: str):
    """``p,k`` or ``p,k,c0 c1 ... ck`` / ``p,k,c0,c1,...,ck``."""
    parts = [x for x in text.replace(" ", ",").split(",") if x]
    try:
        nums = [int(x) for x in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad field descriptor {text!r}") from None
    if len(nums) < 2:
        raise argparse.ArgumentTypeError("field needs at least p,k")
    p, k, modulus = nums[0], nums[1], nums[2:] or None
    try:
        return make_field(p, k, modulus)
    except FieldError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(obj, args) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    print(text)
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            fh.write(text + "\n")


def cmd_match(args) -> int:
    inst = load_instance(args.instance, args.field)
    if inst.task == "automatch" or args.command == "automatch":
        name = "B" if "B" in inst.subspaces else "A"
        B = inst.subspace(name)
        res = automatch(B, inst.basis_of(name))
    elif inst.task == "strong":
        return cmd_strong(args)
    else:
        res = match_basis(inst.basis_of("A"), inst.subspace("B"))
    _emit(res.to_json(), args)
    return EXIT_OK if isinstance(res, MatchCertificate) else EXIT_VIOLATION


def cmd_strong(args) -> int:
    inst = load_instance(args.instance, args.field)
    exists = strong_matching_exists(inst.subspace("A"), inst.subspace("B"), args.cap)
    _emit({"kind": "strong", "exists": exists}, args)
    return EXIT_OK if exists else EXIT_VIOLATION


def _require_field(args):
    if args.field is None:
        raise InstanceError("this task needs --field p,k[,modulus]")
    return args.field


def cmd_sweep(args) -> int:
    task = args.task
    if task == "automatch":
        report = sweeps.sweep_automatch(_require_field(args), range(1, (args.dim or 3) + 1), args.cap)
    elif task == "matchingProperty":
        report = sweeps.sweep_matching_property(_require_field(args), args.dim or 2, args.instance_cap)
    elif task == "strongMatching":
        report = sweeps.sweep_strong_matching(
            _require_field(args), range(1, (args.dim or 2) + 1), args.samples or 50, args.seed, args.cap
        )
    elif task == "refinement":
        report = sweeps.sweep_refinement(_require_field(args), args.dim or 2, args.samples or 500, args.seed)
    elif task == "olson":
        report = sweeps.sweep_olson(_require_field(args), args.samples or 1000, args.seed)
    elif task == "groups":
        groups = [parse_group(g) for g in args.group] or [cyclic(n) for n in (2, 3, 4, 5, 6, 7)]
        report = sweeps.sweep_groups(groups, args.max_size)
    else:  # argparse restricts choices
        raise InstanceError(f"unknown task {task!r}")
    print(report.summary(), file=sys.stderr)
    _emit(report.to_json(timing=args.timing), args)
    return EXIT_OK if report.failure == 0 else EXIT_VIOLATION


def cmd_groups(args) -> int:
    groups = [parse_group(g) for g in args.group] or [cyclic(4)]
    out = []
    for G in groups:
        scan = matching_property_scan(G, args.max_size, args.radius)
        out.append(scan.counterexample or {"group": G.name, "counterexample": None, "pairsChecked": scan.pairs_checked})
    _emit(out if len(out) > 1 else out[0], args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=parse_field, help="p,k[,modulus coefficients constant term first]")
    common.add_argument("--dim", type=int, help="subspace dimension (or maximum dimension for sweeps)")
    common.add_argument("--samples", type=int, help="number of random samples")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration guard")
    common.add_argument("--json", metavar="FILE", help="also write the JSON result here")

    parser = argparse.ArgumentParser(prog="linmatch", description="Matchings of subspaces in finite field extensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("match", "match a basis of A to a basis of B"),
        ("automatch", "match a basis of B to a basis of B"),
        ("strong", "decide whether a strong matching A -> B exists"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("instance", help="instance JSON file")
        p.set_defaults(func=cmd_strong if name == "strong" else cmd_match)

    p = sub.add_parser("sweep", parents=[common], help="theorem-level sweep")
    p.add_argument("task", choices=sweeps.TASKS)
    p.add_argument("--group", action="append", default=[], help="group such as Z4 or Z^2 (repeatable)")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--instance-cap", type=int, default=200_000)
    p.add_argument("--timing", action="store_true", help="include wall-clock duration in the JSON")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("groups", parents=[common], help="group matching tools")
    p.add_argument("action", choices=["scan"])
    p.add_argument("--group", action="append", default=[])
    p.add_argument("--max-size", type=int, default=2)
    p.add_argument("--radius", type=int, default=1, help="box radius for Z^d")
    p.set_defaults(func=cmd_groups)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InstanceError, FieldError, GuardExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
