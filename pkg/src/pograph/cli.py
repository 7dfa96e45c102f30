"""Command-line front end: classify, export, verify, search.

Every verdict printed here comes from a library call with the same inputs;
the CLI only parses arguments, formats output and picks exit codes.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .classes import DEFAULT_BUDGET
from .corpus import FAMILIES, family
from .grammar import GroupSpecError
from .graph import build_gamma
from .groups import build
from .report import CHECKS, classify
from .verifier import SUITES, run_suite, suite_exit_code

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_UNCERTIFIED = 3

DERIVED_FAMILIES = ("corpus", "p-groups", "2-groups", "3-groups", "odd-p-groups", "odd-order", "abelian-2-groups")


def _default_max_order() -> int:
    env = os.environ.get("POGRAPH_MAX_ORDER")
    return int(env) if env else 256


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def _checks_arg(value: str) -> list[str]:
    names = [v.strip() for v in value.split(",") if v.strip()]
    bad = [n for n in names if n not in CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown check(s): {', '.join(bad)}")
    return names


def cmd_classify(args) -> int:
    try:
        report = classify(args.spec, args.checks, args.budget_seconds, args.max_order)
    except GroupSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(_dump(report.to_dict()) if args.format == "json" else report.to_table())
    if args.require_certified and report.has_unknown:
        return EXIT_UNCERTIFIED
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        g = build_gamma(build(args.spec, max_order=args.max_order))
    except GroupSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = g.to_dot() if args.format == "dot" else g.to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        _emit(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, args.max_order, args.budget_seconds)
    if args.format == "json":
        _emit(_dump([r.to_dict() for r in results]))
    else:
        lines = [f"{'id':<28} {'status':<8} {'instances':>9} {'seconds':>8}  note"]
        for r in results:
            note = r.reason or ""
            if r.counterexample is not None:
                note = json.dumps(r.counterexample, sort_keys=True, ensure_ascii=False)
            lines.append(f"{r.id:<28} {r.status.value:<8} {r.instances:>9} {r.elapsed:>8.2f}  {note}".rstrip())
        passed = sum(r.status.value == "Pass" for r in results)
        lines.append(f"{passed}/{len(results)} Pass")
        _emit("\n".join(lines))
    return suite_exit_code(results)


def search(cls: str, specs, budget: float = DEFAULT_BUDGET, max_order: int = 256) -> list[dict]:
    """Classify each group for one class; the library routine behind ``search``."""
    rows = []
    for spec in specs:
        report = classify(spec, [cls], budget, max_order)
        check = report.checks[cls]
        rows.append(
            {
                "certified": check["certified"],
                "exponent": report.exponent,
                "order": report.order,
                "spec": spec,
                "verdict": check["verdict"],
                "witness": check["witness"],
            }
        )
    return rows


def cmd_search(args) -> int:
    if args.groups is not None:
        specs = args.groups
    else:
        specs = family(args.family, args.max_order)
    try:
        rows = search(args.cls, specs, args.budget_seconds, args.max_order)
    except GroupSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.members_only:
        rows = [r for r in rows if r["verdict"] == "InClass"]
    if args.format == "json":
        _emit(_dump(rows))
    else:
        lines = [f"{'group':<32} {'order':>5} {'exp':>4} verdict"]
        for r in rows:
            w = r["witness"]
            wtxt = "" if w["kind"] == "None" else f"  {w['kind']}: " + " ~ ".join(w["vertices"])
            lines.append(f"{r['spec']:<32} {r['order']:>5} {r['exponent']:>4} {r['verdict']}{wtxt}")
        _emit("\n".join(lines))
    if args.require_certified and any(r["verdict"] == "Unknown" for r in rows):
        return EXIT_UNCERTIFIED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-seconds", type=float, default=DEFAULT_BUDGET, help="wall-clock budget per search")
    common.add_argument("--max-order", type=int, default=_default_max_order(), help="largest group order (env POGRAPH_MAX_ORDER)")
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--require-certified", action="store_true", help="exit 3 if any verdict is Unknown")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized corpora")

    parser = argparse.ArgumentParser(prog="pograph", description="Prime-order element graphs of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify Gamma(G) for one group")
    p.add_argument("spec", help='group expression, e.g. "S:4" or "C:2 x D:5"')
    p.add_argument("--checks", type=_checks_arg, default=None, help=f"comma list from {','.join(CHECKS)}")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("export", help="write Gamma(G) as DOT or JSON")
    p.add_argument("spec")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--max-order", type=int, default=_default_max_order())
    p.add_argument("-o", "--output", default=None, help="file to write (default stdout)")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", parents=[common], help="run theorem checks")
    p.add_argument("--suite", default="all", choices=("all", *SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="scan a family of groups for one class")
    p.add_argument("--class", dest="cls", required=True, choices=tuple(CHECKS))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=(*FAMILIES, *DERIVED_FAMILIES))
    src.add_argument("--groups", nargs="*", help="explicit group expressions")
    p.add_argument("--members-only", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", None) is not None:
        random.seed(args.seed)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
