"""Command-line front end: ``hookzeta <suite> ...`` and a few utilities.

Exit codes: 0 when every case is as expected, 1 on a verification failure,
2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bernoulli import IDENTITIES, bernoulli, check_identity
from .checks import frac_str, to_text
from .involution import trace, trace_json
from .partition import parse_partition
from .symexpr import BASES, SymExpr, convert
from .transition import cached_char_table, char_table
from .verify import SUITES, UsageError, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _add_range(sp, with_m=False):
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--n", type=int, help="run a single parameter value")
    group.add_argument("--max-n", type=int, help="run every parameter up to this bound")
    if with_m:
        sp.add_argument("--m", type=int, help="largest first-row length m (triple_sum only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookzeta", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hookzeta {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in SUITES + ("all",):
        sp = sub.add_parser(name, help=f"run the {name} verification suite" if name != "all"
                            else "run every suite with default ranges")
        if name != "all":
            _add_range(sp, with_m=True)
        sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
        sp.add_argument("--trace", action="store_true", help="involution: print every orbit of the map")
        sp.add_argument("--timing", action="store_true", help="include wall time in the report")
        sp.add_argument("--verbose", "-v", action="store_true", help="show notes for passing cases")

    sp = sub.add_parser("expand", help="convert an e/h/p/s basis element")
    sp.add_argument("--basis", choices=BASES, required=True)
    sp.add_argument("--index", required=True, help="partition such as [3,1]")
    sp.add_argument("--to", choices=("h", "s"), default="h")
    sp.add_argument("--format", choices=("text", "json", "latex"), default="text")

    sp = sub.add_parser("char-table", help="character table of the symmetric group S_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--no-cache", action="store_true", help="skip the HOOKZETA_CACHE_DIR disk cache")

    sp = sub.add_parser("bernoulli", help="print B_n as an exact fraction")
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("check", help="check one Bernoulli identity over a range of n")
    sp.add_argument("--identity", choices=sorted(IDENTITIES), required=True)
    _add_range(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _run_suite_command(args, out) -> int:
    names = SUITES if args.command == "all" else (args.command,)
    reports = []
    for name in names:
        kwargs = {} if args.command == "all" else {"n": args.n, "max_n": args.max_n, "m": args.m}
        report = run_suite(name, jobs=max(1, args.jobs), **kwargs)
        if args.trace and name == "involution":
            ns = [r.params["n"] for r in report.results]
            if args.format == "json":
                report.extras["trace"] = {str(k): trace_json(k) for k in ns}
            else:
                report.extras["trace_text"] = {k: trace(k) for k in ns}
        reports.append(report)

    if args.format == "json":
        payload = [r.to_dict(args.timing) for r in reports]
        out.write(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n")
    else:
        for report in reports:
            text_extras = report.extras.pop("trace_text", None)
            out.write(report.to_latex() if args.format == "latex"
                      else report.to_text(timing=args.timing, verbose=args.verbose))
            if text_extras:
                for k, body in text_extras.items():
                    out.write(f"\norbits for n = {k}\n{body}\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def _expand(args, out) -> int:
    expr = SymExpr(args.basis, {parse_partition(args.index): 1})
    result = convert(expr, args.to)
    if args.format == "json":
        out.write(result.to_json() + "\n")
    elif args.format == "latex":
        out.write(f"{expr.to_latex()} = {result.to_latex()}\n")
    else:
        out.write(f"{expr.to_text()} = {result.to_text()}\n")
    return EXIT_OK


def _char_table(args, out) -> int:
    if not 1 <= args.n <= 12:
        raise UsageError("char-table supports 1 <= n <= 12")
    table = char_table(args.n) if args.no_cache else cached_char_table(args.n)
    out.write(table.to_json() if args.format == "json" else table.to_text() + "\n")
    return EXIT_OK if table.is_orthonormal() else EXIT_FAIL


def _check(args, out) -> int:
    _, lowest, parity, _ = IDENTITIES[args.identity]
    if args.n is not None:
        ns = [args.n]
    else:
        top = 20 if args.max_n is None else args.max_n
        ns = [k for k in range(lowest, top + 1) if parity is None or k % 2 == parity]
    results = []
    for k in ns:
        try:
            results.append(check_identity(args.identity, k))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(json.dumps([r.to_dict() for r in results], indent=2) + "\n")
    else:
        for r in results:
            out.write(f"{r.status:5} {r.identity} n={r.n}  lhs={to_text(r.lhs)} rhs={to_text(r.rhs)}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in SUITES or args.command == "all":
            return _run_suite_command(args, out)
        if args.command == "expand":
            return _expand(args, out)
        if args.command == "char-table":
            return _char_table(args, out)
        if args.command == "bernoulli":
            if args.n < 0:
                raise UsageError("n must be nonnegative")
            out.write(frac_str(bernoulli(args.n)) + "\n")
            return EXIT_OK
        if args.command == "check":
            return _check(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hookzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"hookzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
