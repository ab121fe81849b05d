"""Command-line front end.

Every subcommand prints deterministic, golden-file-friendly output: decimal
integers only, fixed key order in JSON.  Exit codes: 0 success, 1 failed
verification, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import blocking
from .extremal import (
    PrimePower,
    case_trace,
    classify_prime_power,
    equality_candidates,
    max_size_bound,
)
from .families import (
    baer_complement,
    baer_subplane,
    characterize,
    hermitian_unital,
    load_point_set,
    plane_minus_point,
    save_point_set,
)
from .gf import make_field
from .plane import PlaneFormatError, build_desarguesian_plane, load_plane, save_plane
from .search import SearchTask, certify_no_other_t, exhaustive_extremal_search

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blocksets",
        description="Construct, verify, search, and classify extremal "
        "minimal t-fold blocking sets in projective planes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="evaluate the maximal-size bound for (n, t)")
    p.add_argument("n", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="closed-form extremal t values for prime power q")
    p.add_argument("q", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("candidates", help="brute-force equality candidates for any order n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("construct", help="build one of the extremal families in PG(2, q)")
    p.add_argument(
        "family", choices=["unital", "baer", "baer-complement", "minus-point"]
    )
    p.add_argument("q", type=int, help="plane order (square prime power except for minus-point)")
    p.add_argument("--point", type=int, default=0, help="point removed by minus-point")
    p.add_argument("--output", help="point-set file to write (default: stdout)")
    p.add_argument("--plane-out", help="also write the plane file here")

    p = sub.add_parser("verify", help="check blocking/minimality of a point-set file")
    p.add_argument("--plane", required=True)
    p.add_argument("--set", dest="set_path", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("spectrum", help="line-intersection spectrum of a point-set file")
    p.add_argument("--plane", required=True)
    p.add_argument("--set", dest="set_path", required=True)

    p = sub.add_parser("search", help="exhaustive search for extremal sets in a plane file")
    p.add_argument("--plane", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=10**9)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--output", help="directory for found point-set files")

    p = sub.add_parser("certify", help="desk-scale certification for PG(2, q), q <= 4")
    p.add_argument("q", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=10**9)
    p.add_argument("--json", action="store_true")

    return parser


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _cmd_bound(args) -> int:
    bv = max_size_bound(args.n, args.t)
    if args.json:
        print(
            json.dumps(
                {
                    "n": bv.n,
                    "t": bv.t,
                    "discriminant": bv.discriminant,
                    "attainable": bv.attainable,
                    "bound": bv.bound,
                    "b": bv.b,
                    "size_floor": bv.size_floor,
                }
            )
        )
    elif bv.attainable:
        print(f"bound={bv.bound} b={bv.b} attainable=true")
    else:
        print("bound=- b=- attainable=false")
    return EXIT_OK


def _cmd_classify(args) -> int:
    try:
        entries = classify_prime_power(args.q)
    except ValueError:
        print(
            f"error: {args.q} is not a prime power; use 'candidates {args.q}' "
            "for necessary-condition solutions",
            file=sys.stderr,
        )
        return EXIT_USAGE
    traces = {e.t: case_trace(args.q, e.t, e.b) for e in entries}
    rows = []
    for e in entries:
        bv = max_size_bound(args.q, e.t)
        rows.append(
            {
                "t": e.t,
                "b": e.b,
                "bound": bv.bound,
                "family": e.family.value,
                "case": traces[e.t].case,
            }
        )
    if args.json:
        print(json.dumps(rows))
    else:
        for row in rows:
            print(
                f"t={row['t']} b={row['b']} bound={row['bound']} "
                f"family={row['family']} case={row['case']}"
            )
    return EXIT_OK


def _cmd_candidates(args) -> int:
    params = equality_candidates(args.n)
    prime_power = True
    try:
        PrimePower.from_order(args.n)
    except ValueError:
        prime_power = False
    rows = []
    for e in params:
        bv = max_size_bound(args.n, e.t)
        if prime_power:
            trace = case_trace(args.n, e.t, e.b)
            family, case = trace.family.value, trace.case
        else:
            family, case = "Unclassified", None
        rows.append({"t": e.t, "b": e.b, "bound": bv.bound, "family": family, "case": case})
    if args.json:
        print(json.dumps(rows))
    else:
        for row in rows:
            case = row["case"] if row["case"] is not None else "-"
            print(
                f"t={row['t']} b={row['b']} bound={row['bound']} "
                f"family={row['family']} case={case}"
            )
    return EXIT_OK


def _cmd_construct(args) -> int:
    pp = PrimePower.from_order(args.q)
    if args.family != "minus-point" and pp.k % 2:
        print(
            f"error: {args.q} is not a square; the {args.family} family "
            "lives in planes of square order",
            file=sys.stderr,
        )
        return EXIT_USAGE
    spec = make_field(pp.p, pp.k)
    plane = build_desarguesian_plane(spec)
    if args.family == "unital":
        ps = hermitian_unital(plane)
    elif args.family == "baer":
        ps = baer_subplane(plane)
    elif args.family == "baer-complement":
        ps = baer_complement(plane)
    else:
        ps = plane_minus_point(plane, args.point)
    if args.plane_out:
        save_plane(plane, args.plane_out)
    if args.output:
        save_point_set(ps, args.output)
    else:
        print(f"order {plane.order}")
        print(f"size {ps.size}")
        print(" ".join(str(i) for i in ps.indices()))
    return EXIT_OK


def _cmd_verify(args) -> int:
    plane = load_plane(args.plane)
    ps = load_point_set(args.set_path, plane)
    spec = blocking.spectrum(plane, ps)
    blocked = blocking.is_t_fold_blocking(plane, ps, args.t)
    failure = None
    minimal = None
    if blocked:
        minimal = blocking.is_minimal(plane, ps, args.t)
        if not minimal:
            failure = "a set point lies on no line meeting the set in exactly t points"
    else:
        if min(spec) < args.t:
            for j, lm in enumerate(plane.line_masks):
                if (ps.mask & lm).bit_count() < args.t:
                    failure = f"line {j} meets the set in {(ps.mask & lm).bit_count()} < t points"
                    break
        else:
            failure = f"no line meets the set in exactly {args.t} points"
    ok = blocked and bool(minimal)
    if args.json:
        print(
            json.dumps(
                {
                    "t": args.t,
                    "size": ps.size,
                    "blocking": blocked,
                    "minimal": minimal,
                    "spectrum": {str(k): spec[k] for k in sorted(spec)},
                    "failure": failure,
                }
            )
        )
    else:
        minimal_text = "-" if minimal is None else _bool(minimal)
        print(
            f"size={ps.size} blocking={_bool(blocked)} minimal={minimal_text} "
            f"spectrum={blocking.spectrum_to_json(spec)}"
        )
        if failure:
            print(f"failure: {failure}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_spectrum(args) -> int:
    plane = load_plane(args.plane)
    ps = load_point_set(args.set_path, plane)
    print(blocking.spectrum_to_json(blocking.spectrum(plane, ps)))
    return EXIT_OK


def _cmd_search(args) -> int:
    plane = load_plane(args.plane)
    task = SearchTask(
        plane,
        args.t,
        size=args.size,
        pruning=not args.no_prune,
        workers=args.workers,
        node_budget=args.budget,
    )
    result = exhaustive_extremal_search(task)
    bv = max_size_bound(plane.order, args.t)
    families: dict[str, int] = {}
    for ps in result.sets:
        label = characterize(plane, ps, args.t).value
        families[label] = families.get(label, 0) + 1
    if args.output:
        os.makedirs(args.output, exist_ok=True)
        for idx, ps in enumerate(result.sets):
            save_point_set(ps, os.path.join(args.output, f"set_{idx:04d}.txt"))
    print(
        json.dumps(
            {
                "t": args.t,
                "size": bv.bound if bv.attainable else None,
                "found": len(result.sets),
                "complete": result.complete,
                "families": dict(sorted(families.items())),
            }
        )
    )
    return EXIT_OK


def _cmd_certify(args) -> int:
    if not 2 <= args.q <= 4:
        print("error: certification is desk-scale only, q must be 2, 3, or 4", file=sys.stderr)
        return EXIT_USAGE
    pp = PrimePower.from_order(args.q)
    plane = build_desarguesian_plane(make_field(pp.p, pp.k))
    report = certify_no_other_t(plane, workers=args.workers, node_budget=args.budget)
    if args.json:
        print(json.dumps(report.as_dict()))
    else:
        for e in report.entries:
            fams = ",".join(f"{k}:{v}" for k, v in sorted(e.families.items())) or "-"
            print(
                f"t={e.t} attainable={_bool(e.attainable)} found={e.found} "
                f"complete={_bool(e.complete)} families={fams} "
                f"expected={e.expected_family or '-'}"
            )
        print(f"matches_theory={_bool(bool(report.matches_theory))}")
    return EXIT_OK if report.matches_theory else EXIT_VERIFY_FAILED


_HANDLERS = {
    "bound": _cmd_bound,
    "classify": _cmd_classify,
    "candidates": _cmd_candidates,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
    "search": _cmd_search,
    "certify": _cmd_certify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except (PlaneFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
