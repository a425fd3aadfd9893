"""``sn-tiler`` command line.

Exit codes shared by all subcommands: 0 definitive positive (excluded,
found, verified), 10 definitive negative (open, none, not verified),
11 inconclusive (search budget ran out), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from sn_tiler.characters import hoffman_report, parse_fraction, spectrum
from sn_tiler.criteria import DEFAULT_BETA, aggregate
from sn_tiler.errors import InputError
from sn_tiler.partitions import (
    Partition,
    content_square_sum,
    content_sum,
    dimension,
    enumerate_partitions,
    is_two_column_hookless,
    single_class_partition,
)
from sn_tiler.perms import ClassSet, Target, generator_classes, sigma_classes
from sn_tiler.report import emit_report, load_witness, save_witness, scan
from sn_tiler.tiling import avoids_intersection, is_lambda_transitive, search, verify_tiling

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 10
EXIT_INCONCLUSIVE = 11
EXIT_INPUT = 2


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2))


def parse_beta(text: str):
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != 3:
        raise InputError(f"--beta needs three comma-separated values, got {text!r}")
    return tuple(parse_fraction(p) for p in parts)


def parse_connection(n: int, text: str, identity: bool) -> ClassSet:
    """Named set (tn, tnstar, sigma, sigmastar) or ';'-separated cycle types like ``"3;2,2"``."""
    key = text.strip().lower()
    named = {
        "tn": lambda: generator_classes(n, Target.T),
        "tnstar": lambda: generator_classes(n, Target.T_STAR),
        "sigma": lambda: sigma_classes(n, Target.T),
        "sigmastar": lambda: sigma_classes(n, Target.T_STAR),
    }
    if key in named:
        cs = named[key]()
        return ClassSet(n, cs.cycle_types, cs.include_identity or identity)
    types = []
    for chunk in key.split(";"):
        mu = Partition.parse(chunk)
        types.append(mu if mu.n == n else single_class_partition(n, tuple(p for p in mu.parts if p > 1)))
    return ClassSet(n, frozenset(types), identity)


def cmd_partitions(args) -> int:
    rows = [
        {
            "lambda": str(lam),
            "content_sum": content_sum(lam),
            "content_square_sum": content_square_sum(lam),
            "dimension": dimension(lam),
            "two_column": is_two_column_hookless(lam),
        }
        for lam in enumerate_partitions(args.n)
    ]
    if args.json:
        _dump({"n": args.n, "rows": rows})
    else:
        for r in rows:
            print(f"{r['lambda']:<24} {r['content_sum']:>6} {r['dimension']:>12}")
    return EXIT_POSITIVE


def cmd_spectrum(args) -> int:
    _dump(spectrum(args.n, parse_connection(args.n, args.connection, args.identity)).to_json())
    return EXIT_POSITIVE


def cmd_hoffman(args) -> int:
    beta = parse_beta(args.beta) if args.beta else DEFAULT_BETA[Target.parse(args.target)]
    _dump(hoffman_report(args.n, beta).to_json())
    return EXIT_POSITIVE


def cmd_check(args) -> int:
    beta = parse_beta(args.beta) if args.beta else None
    agg = aggregate(args.n, Target.parse(args.target), beta=beta, all_violators=args.all_violators)
    _dump(agg.to_json())
    return EXIT_POSITIVE if agg.overall == "excluded" else EXIT_NEGATIVE


def cmd_search(args) -> int:
    cert = search(
        args.n,
        Target.parse(args.target),
        deterministic=args.deterministic or args.threads <= 1,
        time_budget=args.budget,
        threads=args.threads,
        max_n=args.max_n,
    )
    out = {"n": args.n, "target": Target.parse(args.target).value, **cert.to_json(include_time=not args.deterministic)}
    _dump(out)
    if cert.witness is not None and args.out:
        save_witness(cert.witness, args.out)
    return {"found": EXIT_POSITIVE, "none": EXIT_NEGATIVE}.get(cert.status, EXIT_INCONCLUSIVE)


def cmd_verify(args) -> int:
    w = load_witness(args.witness)
    check = verify_tiling(w)
    n = w.n
    out = {"n": n, "target": w.target.value, "size": len(w), "valid": check.ok, "diagnostic": check.diagnostic}
    if n >= 3:
        out["avoids_intersection_n_minus_3"] = avoids_intersection(w.members, n - 3)[0]
    _dump(out)
    return EXIT_POSITIVE if check.ok else EXIT_NEGATIVE


def cmd_transitivity(args) -> int:
    w = load_witness(args.witness)
    lam = Partition.parse(args.lam)
    if lam.n != w.n:
        raise InputError(f"{lam} is not a partition of {w.n}")
    rep = is_lambda_transitive(w.members, lam)
    out = {"lambda": str(lam), "transitive": rep.is_transitive, "r": rep.r}
    if rep.counterexample:
        out["counterexample"] = [
            {"P": [list(b) for b in P], "Q": [list(b) for b in Q], "count": k} for P, Q, k in rep.counterexample
        ]
    _dump(out)
    return EXIT_POSITIVE if rep.is_transitive else EXIT_NEGATIVE


def cmd_scan(args) -> int:
    targets = [Target.parse(t) for t in args.targets.split(",") if t.strip()]
    rows = scan(
        args.n_min,
        args.n_max,
        targets,
        with_search=args.search,
        time_budget=args.budget,
        threads=args.threads,
        deterministic=args.deterministic or args.threads <= 1,
    )
    print(emit_report(rows, "json" if args.json else "table"))
    return EXIT_POSITIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="search worker threads")
    common.add_argument("--deterministic", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="sn-tiler", description="Tilings of S_n by transpositions.")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--deterministic", action="store_true")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[common], help="list partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("spectrum", parents=[common], help="exact Cayley graph spectrum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connection", default="tn", help="tn, tnstar, sigma, sigmastar or e.g. '3;2,2'")
    p.add_argument("--identity", action="store_true", help="add the identity to the connection set")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("hoffman", parents=[common], help="weighted Hoffman bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", help="b1,b2,b3 (rationals allowed)")
    p.add_argument("--target", default="tn", help="picks the default beta")
    p.set_defaults(func=cmd_hoffman)

    p = sub.add_parser("check", parents=[common], help="run the criteria battery")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--beta")
    p.add_argument("--all-violators", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", parents=[common], help="exhaustive tiling search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--budget", type=float, help="seconds")
    p.add_argument("--out", help="write the witness here")
    p.add_argument("--max-n", type=int, help="raise the search bound (at most 8)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="verify a witness file")
    p.add_argument("--witness", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transitivity", parents=[common], help="lambda-transitivity of a witness")
    p.add_argument("--witness", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_transitivity)

    p = sub.add_parser("scan", parents=[common], help="criteria (and search) over a range of n")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--targets", default="tn,tnstar")
    p.add_argument("--search", action="store_true")
    p.add_argument("--budget", type=float)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"sn-tiler: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"sn-tiler: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
