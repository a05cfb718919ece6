"""Command-line entry point: ``desargues run | verify | table``.

Exit status is 0 when everything passed, 1 when a check or assertion failed and
2 for usage, parse or model-compatibility errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .dsl import ParseError, execute, parse
from .errors import GeometryError, NotEnumerableError, NotPlottableError, SuiteModelMismatchError
from .line_algebra import Frame, cayley_tables
from .plane import PlaneModel, parse_point
from .scalars import parse_ring
from .svg import render_svg
from .verification import SUITES, Mode, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _model(text: str) -> PlaneModel:
    try:
        return PlaneModel(parse_ring(text))
    except ValueError as exc:
        raise _Usage(f"bad --model {text!r}: {exc}") from exc


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_run(args) -> int:
    try:
        source = Path(args.script).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Usage(str(exc)) from exc
    try:
        script = parse(source)
    except ParseError as exc:
        for d in exc.diagnostics:
            print(d.format(args.script), file=sys.stderr)
        return EXIT_USAGE
    result = execute(script, seed=args.seed)
    for d in result.diagnostics:
        print(d.format(args.script), file=sys.stderr)
    if args.trace:
        _write(args.trace, json.dumps(result.to_json(), indent=2) + "\n")
    if args.svg:
        try:
            _write(args.svg, render_svg([t for _, t in result.traces]))
        except NotPlottableError as exc:
            print(f"{args.script}: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.json:
        print(json.dumps(result.to_json(), indent=2))
    else:
        for name, value in result.bindings.items():
            print(f"{name} = {value if not isinstance(value, Frame) else value.to_json()}")
        for a in result.assertions:
            print(f"{'PASS' if a.passed else 'FAIL'} line {a.span.line}: {a.text}" + (f" ({a.detail})" if a.detail else ""))
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    model = _model(args.model)
    mode = Mode(args.exhaustive, args.seed, args.samples)
    try:
        report = run_suite(args.suite, model, mode)
    except SuiteModelMismatchError as exc:
        raise _Usage(str(exc)) from exc
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(f"suite {report.suite} on {report.model} ({mode.to_json()['kind']}, seed {mode.seed})")
        for c in sorted(report.checks, key=lambda c: c.claim):
            line = f"  {c.status:<17} {c.claim:<30} tested {c.tested:>8}  failures {c.failures}"
            print(line + (f"  [{c.note}]" if c.note else ""))
            for w in c.witnesses[:1]:
                print(f"      witness: {json.dumps(w, default=str)}")
        for suite, why in report.skipped_suites.items():
            print(f"  skipped suite {suite}: {why}")
        print(f"{'PASS' if report.passed else 'FAIL'} in {report.wall_time:.2f}s")
    return EXIT_OK if report.passed else EXIT_FAIL


def _frame(model: PlaneModel, text: str) -> Frame:
    try:
        o_text, i_text = text.split(";")
        return Frame.through(parse_point(o_text, model.ring), parse_point(i_text, model.ring))
    except (ValueError, GeometryError) as exc:
        raise _Usage(f"bad --frame {text!r}: expected 'O;I' such as '(0, 0);(1, 0)' ({exc})") from exc


def cmd_table(args) -> int:
    model = _model(args.model)
    if not model.ring.finite:
        raise _Usage(f"table needs a finite model; {model} is infinite")
    frame = _frame(model, args.frame)
    aux = None
    if args.aux:
        try:
            aux = parse_point(args.aux, model.ring)
        except ValueError as exc:
            raise _Usage(f"bad --aux {args.aux!r}: {exc}") from exc
    try:
        tables = cayley_tables(frame, aux)
    except (NotEnumerableError, GeometryError) as exc:
        raise _Usage(str(exc)) from exc
    ops = ("add", "mul") if args.op == "both" else (args.op,)
    for i, op in enumerate(ops):
        if i:
            print()
        print(tables.to_csv(op) if args.csv else tables.to_text(op), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="desargues", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a .geo construction script")
    run.add_argument("script")
    run.add_argument("--trace", metavar="OUT.json", help="write the run result as JSON")
    run.add_argument("--svg", metavar="OUT.svg", help="draw every construction of the script")
    run.add_argument("--seed", type=int, default=0, help="seed for the auxiliary point (0 = canonical)")
    run.add_argument("--json", action="store_true")
    run.set_defaults(func=cmd_run)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=[*SUITES, "all"])
    verify.add_argument("--model", required=True, help="coordinate ring, e.g. rational or gf(5)")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--exhaustive", action="store_true")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_verify)

    table = sub.add_parser("table", help="print Cayley tables built by the constructions")
    table.add_argument("--model", required=True, help="a prime field, e.g. gf(5)")
    table.add_argument("--frame", default="(0, 0);(1, 0)", help="'O;I', default '(0, 0);(1, 0)'")
    table.add_argument("--aux", help="auxiliary point B off the frame line")
    table.add_argument("--op", choices=("add", "mul", "both"), default="both")
    table.add_argument("--csv", action="store_true")
    table.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "samples", 1) < 1:
        print("desargues: error: --samples must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"desargues: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
