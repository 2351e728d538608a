"""Command line front end: ``eval``, ``table``, ``check`` and ``sweep``.

Exit status: 0 when everything passes, 1 when a check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .checks import SUITES, run_checks, summarize
from .errors import GrafError
from .expr import parse, to_source, evaluate
from .forms import Signature, format_coeff, render_blade, signatures_up_to
from .products import ProductKind
from .tables import emit_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _signature(text: str) -> Signature:
    try:
        p, q = (int(part) for part in text.split(","))
        return Signature(p, q)
    except (ValueError, GrafError) as exc:
        raise argparse.ArgumentTypeError(f"expected P,Q with 1 <= P+Q <= 16, got {text!r}: {exc}")


def _product(text: str) -> ProductKind:
    try:
        return ProductKind.parse(text)
    except GrafError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grafclifford", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a form expression")
    p_eval.add_argument("expression")
    p_eval.add_argument("--sig", type=_signature, required=True, metavar="P,Q")
    p_eval.add_argument("--format", choices=("text", "json"), default="text")

    p_table = sub.add_parser("table", help="emit a multiplication table")
    p_table.add_argument("--sig", type=_signature, required=True, metavar="P,Q")
    p_table.add_argument("--product", type=_product, default=ProductKind("graf"), metavar="K",
                         help="wedge, graf, triangle, tgp, tgm, cw:L or cg:L")
    p_table.add_argument("--format", choices=("json", "csv", "text"), default="json")

    for name, helptext in (("check", "run identity suites"), ("sweep", "run identity suites over all signatures")):
        p = sub.add_parser(name, help=helptext)
        if name == "check":
            target = p.add_mutually_exclusive_group(required=True)
            target.add_argument("--sig", type=_signature, metavar="P,Q")
            target.add_argument("--sweep", action="store_true", help="every signature with 1 <= p+q <= --max-n")
        p.add_argument("--max-n", type=int, default=6)
        p.add_argument("--suite", choices=("all",) + SUITES, default="all")
        p.add_argument("--samples", type=int, default=50, help="random samples per property")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _form_json(form) -> list:
    return [{"blade": render_blade(m, form.sig.n), "coeff": format_coeff(c)} for m, c in form]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            node = parse(args.expression)
            result = evaluate(node, args.sig)
            if args.format == "json":
                print(json.dumps({
                    "signature": {"p": args.sig.p, "q": args.sig.q},
                    "expression": to_source(node),
                    "result": _form_json(result),
                }))
            else:
                print(result)
            return EXIT_OK
        if args.command == "table":
            sys.stdout.write(emit_table(args.sig, args.product, args.format))
            return EXIT_OK
        if args.command == "sweep" or args.sweep:
            if not 1 <= args.max_n <= 16:
                parser.error("--max-n must lie in 1..16")
            sigs = signatures_up_to(args.max_n)
        else:
            sigs = [args.sig]
        report = run_checks(sigs, args.suite, samples=args.samples, seed=args.seed)
        text = summarize(report)
        if args.format == "json":
            print(json.dumps(report, indent=1))
            print(text, file=sys.stderr)
        else:
            print(text)
        return EXIT_OK if report["pass"] else EXIT_FAIL
    except GrafError as exc:
        print(f"grafclifford: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
