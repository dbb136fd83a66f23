"""Command-line front end.

Exit codes: 0 success / verified, 1 a counterexample was found, 2 usage or
input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from finitetop import laws
from finitetop.classes import classify
from finitetop.io import dumps, load_operator, load_space, parse_subset_arg, space_to_json
from finitetop.mining import census, intersection_nonclosure_witness, mine, strictness, witness_to_json
from finitetop.operators import CANONICAL_PAIR, BiOperatorSpace, is_B_closed, is_B_open, is_T_open, is_T_star_open
from finitetop.sets import SizeExceeded
from finitetop.topology import MAX_ENUM_POINTS, enumerate_topologies

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "text", "count"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for table-operator sampling (default 0)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $FINITETOP_JOBS or 1)")
    p.add_argument("--max-points", type=int, default=None)
    p.add_argument("--t1", default=CANONICAL_PAIR[0], help="first operator: a name or a table file")
    p.add_argument("--t2", default=CANONICAL_PAIR[1], help="second operator: a name or a table file")
    p.add_argument("--tn", action="append", default=[], help="further chain operators (repeatable)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="finitetop", description="Finite bi-operator topological spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify every subset of a space")
    p.add_argument("space", help="space JSON file")
    p.add_argument("--subset", default=None, help='comma-separated labels; "" is the empty set')

    p = sub.add_parser("enumerate", parents=[common], help="list all topologies on n points")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--mode", choices=("labeled", "canonical"), default="labeled")

    p = sub.add_parser("verify", parents=[common], help="check registered laws")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--law")
    g.add_argument("--all", action="store_true")
    g.add_argument("--list", action="store_true")
    p.add_argument("--include-selftests", action="store_true", help="with --all, also run the negative controls")

    p = sub.add_parser("mine", parents=[common], help="search for (topology, subset) witnesses")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--predicate")
    g.add_argument("--strictness", action="store_true", help="separate each inclusion of the classical chain")
    g.add_argument("--intersection-witness", action="store_true",
                   help="smallest pair of B-open sets whose intersection is not B-open")
    p.add_argument("--limit", type=int, default=10)

    sub.add_parser("census", parents=[common], help="class-membership counts per point count")
    return parser


def _operator_names(args: argparse.Namespace) -> tuple[str, ...]:
    names = (args.t1, args.t2, *args.tn)
    from finitetop.operators import NAMED_OPERATORS

    bad = [n for n in names if n not in NAMED_OPERATORS]
    if bad:
        raise UsageError(f"operator {bad[0]!r} must be one of {', '.join(NAMED_OPERATORS)} for this command")
    return names


def _emit(obj: Any) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _table(rows: list[dict[str, Any]], cols: Sequence[str]) -> str:
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in cols]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(str(r[c]).ljust(w) for c, w in zip(cols, widths)).rstrip() for r in rows]
    return "\n".join(lines)


def cmd_classify(args: argparse.Namespace) -> int:
    t = load_space(args.space)
    operators = tuple(load_operator(ref, t.ground) for ref in (args.t1, args.t2, *args.tn))
    space = BiOperatorSpace(t, operators)
    subsets = [parse_subset_arg(t.ground, args.subset)] if args.subset is not None else range(t.full + 1)
    rows = []
    for s in subsets:
        row: dict[str, Any] = {"subset": t.ground.labels(s)}
        row.update(classify(t, s).to_json())
        for i in range(len(operators)):
            row[f"T_open_{i + 1}"] = is_T_open(space, i, s)
            row[f"T_star_open_{i + 1}"] = is_T_star_open(space, i, s)
        row["B_open"] = is_B_open(space, s)
        row["B_closed"] = is_B_closed(space, s)
        rows.append(row)
    if args.format == "json":
        _emit(rows)
    elif args.format == "count":
        print(len(rows))
    else:
        cols = list(rows[0])
        shown = [{k: ("{" + ",".join(v) + "}" if k == "subset" else int(v)) for k, v in r.items()} for r in rows]
        print(_table(shown, cols))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if not 1 <= args.points <= MAX_ENUM_POINTS:
        raise SizeExceeded(f"SizeExceeded: enumeration supports 1..{MAX_ENUM_POINTS} points, got {args.points}")
    tops = enumerate_topologies(args.points, args.mode)
    if args.format == "count":
        print(len(tops))
    elif args.format == "json":
        _emit([space_to_json(t) for t in tops])
    else:
        for t in tops:
            print(t)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        rows = [{"law": k, "bound": laws.REGISTRY[k].max_points, "kind": _kind(laws.REGISTRY[k]),
                 "description": laws.REGISTRY[k].description} for k in laws.law_ids(True)]
        if args.format == "json":
            _emit(rows)
        else:
            print(_table(rows, ("law", "bound", "kind", "description")))
        return EXIT_OK
    ids = laws.law_ids(args.include_selftests) if args.all else [args.law]
    reports = [laws.verify(k, args.max_points, args.jobs, args.seed) for k in ids]
    if args.format == "json":
        _emit(reports[0].to_json() if args.law else {"reports": [r.to_json() for r in reports]})
    else:
        rows = [{"law": r.law, "status": r.status, "instances": r.instances_checked, "hits": r.hypothesis_hits,
                 "trivial": "yes" if r.trivial_on_finite else "", "ms": f"{r.runtime_ms:.0f}"} for r in reports]
        print(_table(rows, ("law", "status", "instances", "hits", "trivial", "ms")))
        for r in reports:
            if r.witness is not None and args.law:
                print("witness:", json.dumps(r.witness, sort_keys=True))
    return EXIT_COUNTEREXAMPLE if any(r.status == "counterexample" for r in reports) else EXIT_OK


def _kind(law: laws.Law) -> str:
    if law.selftest:
        return "selftest"
    if law.probe:
        return "probe"
    return "finite-trivial" if law.trivial_on_finite else "law"


def cmd_mine(args: argparse.Namespace) -> int:
    max_points = args.max_points if args.max_points is not None else 4
    names = _operator_names(args)
    if args.strictness:
        rows = strictness(max_points)
        if args.format == "json":
            _emit(rows)
        else:
            for r in rows:
                if r["witness"]:
                    w = r["witness"]
                    print(f"{r['inclusion']}: strict, n={w['n']} S={{{','.join(w['subset'])}}} in {w['space']['opens']}")
                else:
                    print(f"{r['inclusion']}: no witness up to {max_points} points (exhaustive)")
        return EXIT_OK
    if args.intersection_witness:
        w = witness_to_json(intersection_nonclosure_witness(max_points if args.max_points else 3, names[:2]))
        if args.format == "json":
            _emit(w)
        else:
            print(f"n={w['n']} opens={w['space']['opens']} S1={w['s1']} S2={w['s2']} none at n in {w['absent_at']}")
        return EXIT_OK
    res = mine(args.predicate, max_points, names, args.limit)
    if args.format == "json":
        _emit(res.to_json())
    elif args.format == "count":
        print(len(res.witnesses))
    else:
        for w in res.witnesses:
            print(f"n={w.n} S={{{','.join(w.topology.ground.labels(w.subset))}}} in {w.topology}")
        if res.absent:
            scanned = ", ".join(f"n={r['n']}: {r['topologies']} topologies/{r['pairs']} pairs" for r in res.searched)
            print(f"no witness: exhaustive scan found none ({scanned})")
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    rows = census(args.max_points if args.max_points is not None else 4, _operator_names(args))
    if args.format == "json":
        _emit(rows)
    else:
        print(_table(rows, list(rows[0])))
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "mine": cmd_mine,
    "census": cmd_census,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError, LookupError, OSError, UsageError) as e:
        msg = str(e) if not isinstance(e, KeyError) or isinstance(e, laws.UnknownLaw) else f"missing key {e}"
        print(f"finitetop: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
