"""Command-line entry point.

Exit codes: 0 success, 1 a property violation was found, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .classify import ClassificationResult, classify
from .errors import FormatError, SchurToeplitzError
from .exact import ComplexRational
from .jsonio import decode_algebra, dumps, encode_algebra, encode_result, loads
from .verify import TARGETS, ConfigError, RunConfig, run_suite
from . import worked_examples as wx

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BAD_INPUT = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 already; route it through our handler so
    # the message format matches other input errors
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> ComplexRational:
    try:
        if "." in text:
            raise ValueError("use p/q, not decimals")
        return ComplexRational(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}: {exc}") from None


def _u64(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schurtoeplitz", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a seeded randomized property suite")
    v.add_argument("target", help=f"one of: {', '.join(TARGETS)}")
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--sigma", type=int, default=2)
    v.add_argument("--tau", type=int, default=1)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=_u64, default=0)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--relaxed", action="store_true", help="allow |sigma - tau| > 1")
    v.add_argument("--output", type=Path)

    c = sub.add_parser("classify", help="classify an algebra given as JSON")
    c.add_argument("--input", type=Path, required=True)
    c.add_argument("--output", type=Path)
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.add_argument("--relaxed", action="store_true")

    e = sub.add_parser("example", help="emit a worked example as a JSON fixture")
    e.add_argument("which", type=int, choices=(1, 2, 3))
    e.add_argument("--mu", type=_rational, default=ComplexRational(2))
    e.add_argument("--lambda", dest="lam", type=_rational, default=ComplexRational(1))
    for name, default in zip("abcd", (1, 2, 3, 4)):
        e.add_argument(f"--{name}", type=_rational, default=ComplexRational(default))
    e.add_argument("--output", type=Path)
    return p


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def cmd_verify(args) -> int:
    config = RunConfig(
        seed=args.seed, trials=args.trials, n=args.n, sigma=args.sigma,
        tau=args.tau, format=args.format, relaxed=args.relaxed,
    )
    report = run_suite(args.target, config)
    text = dumps(report.to_json()) if args.format == "json" else report.to_text()
    _emit(text, args.output)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _result_text(name: Optional[str], res: ClassificationResult) -> str:
    head = f"[{name}] " if name else ""
    lines = [
        f"{head}verdict: {res.verdict.value}",
        f"  n={res.n} sigma={res.shape.sigma} tau={res.shape.tau}",
        f"  dimension: {res.dimension} of {res.ambient_dimension}",
        f"  certificate: {res.certificate.label if res.certificate else 'inconclusive'}",
    ]
    if res.pair is not None:
        lines.append(f"  pair: A = {res.pair.A}, B = {res.pair.B}")
    if res.codimension is not None:
        lines.append(f"  codimension: {res.codimension}")
    if res.reason:
        lines.append(f"  reason: {res.reason}")
    lines.extend(f"  note: {note}" for note in res.notes)
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    try:
        raw = args.input.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {args.input}: {exc.strerror or exc}") from None
    obj = loads(raw)
    if isinstance(obj, dict) and "fixtures" in obj:
        fixtures = obj["fixtures"]
        if not isinstance(fixtures, dict) or not fixtures:
            raise FormatError("$.fixtures: expected a nonempty object")
        parsed = {k: decode_algebra(v, f"$.fixtures[{k!r}]", args.relaxed) for k, v in fixtures.items()}
        results = {k: classify(v) for k, v in parsed.items()}
        if args.format == "json":
            text = dumps({"results": {k: encode_result(r) for k, r in results.items()}})
        else:
            text = "".join(_result_text(k, r) for k, r in results.items())
    else:
        res = classify(decode_algebra(obj, "$", args.relaxed))
        text = dumps(encode_result(res)) if args.format == "json" else _result_text(None, res)
    _emit(text, args.output)
    return EXIT_OK


def cmd_example(args) -> int:
    meta = {"n": wx.N, "sigma": wx.SHAPE.sigma, "tau": wx.SHAPE.tau}
    if args.which == 1:
        payload = {
            "example": 1,
            "erratum": wx.EXAMPLE1_ERRATUM,
            "fixtures": {
                "as-displayed": encode_algebra(wx.example1_as_displayed(), **meta),
                "as-defined": encode_algebra(wx.example1_as_defined(), closed=True, **meta),
            },
        }
    elif args.which == 2:
        if not args.mu:
            raise ConfigError("Example 2 requires mu != 0")
        payload = {"example": 2, **encode_algebra(wx.example2(args.mu), mu=str(args.mu.re), **meta)}
    else:
        params = dict(lam=args.lam, a=args.a, b=args.b, c=args.c, d=args.d)
        payload = {"example": 3, "erratum": wx.EXAMPLE3_ERRATUM, **encode_algebra(wx.example3(**params), **meta)}
    _emit(dumps(payload), args.output)
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "classify": cmd_classify, "example": cmd_example}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
    except (ConfigError, SchurToeplitzError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
