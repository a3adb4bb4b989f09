"""``devlin-hopf`` command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 numerical blow-up.  Errors are reported as a single line on stderr of the
form ``error: <kind>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import abel
from .abel import BlowUpError, InputPair
from .antipode import (
    antipode,
    antipode_generator,
    compose,
    feedback,
    feedback_fixpoint,
    group_inverse,
    group_inverse_fixpoint,
    mod_compose,
    unity_feedback,
)
from .devlin import devlin_antipode, devlin_closed, devlin_recursive
from .hopf import HElement, _mono_order
from .parsing import ParseError, parse_h, parse_poly, parse_series, parse_word
from .series import Series, ferfera, format_rational, render_order, shuffle_series
from .verify import SUITES, run_suites
from .words import format_word

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BLOWUP = 3

MAX_DEGREE_ENV = "DEVLIN_HOPF_MAX_DEGREE"
DEFAULT_MAX_DEGREE = 8

METHODS = ("left", "right", "direct")


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    status: int
    output: str
    error: str = ""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _default_max_degree() -> int:
    raw = os.environ.get(MAX_DEGREE_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_DEGREE
    try:
        return _positive_int(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"{MAX_DEGREE_ENV}: {exc}")


def build_parser(default_max_degree: int = DEFAULT_MAX_DEGREE) -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-degree", type=_positive_int, default=default_max_degree,
                        help=f"truncation degree (default {default_max_degree}, env {MAX_DEGREE_ENV})")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    p = _Parser(prog="devlin-hopf", description="Output feedback Hopf algebra and Devlin polynomials.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("shuffle", parents=[common], help="shuffle product of two series")
    s.add_argument("c")
    s.add_argument("d")

    s = sub.add_parser("devlin", parents=[common], help="Devlin polynomial a_n")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--route", choices=("recursive", "closed", "antipode"), default="recursive")
    s.add_argument("--method", choices=METHODS, default="left")

    s = sub.add_parser("antipode", parents=[common], help="antipode of a coordinate function or H element")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--expr", help='H element, e.g. "a[x1]a[e] - a[x0]"')
    s.add_argument("--method", choices=METHODS, default="left")

    s = sub.add_parser("inverse", parents=[common], help="feedback group inverse")
    s.add_argument("c")
    s.add_argument("--method", choices=METHODS + ("fixpoint",), default="left")

    for name, helptext in (("compose", "composition c o d"), ("mod-compose", "modified composition")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("c")
        s.add_argument("d")

    s = sub.add_parser("feedback", parents=[common], help="closed loop of plant c with feedback d")
    s.add_argument("c")
    s.add_argument("d")
    s.add_argument("--method", choices=("formula", "fixpoint"), default="formula")

    s = sub.add_parser("unity-feedback", parents=[common], help="closed loop with identity feedback")
    s.add_argument("c")
    s.add_argument("--method", choices=METHODS, default="left")

    s = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    s.add_argument("--suite", action="append", choices=sorted(SUITES), help="restrict to this suite (repeatable)")

    for name in ("abel-sim", "return-map"):
        s = sub.add_parser(name, parents=[common],
                           help="integrate the Abel equation" if name == "abel-sim" else "return map coefficients")
        s.add_argument("--alpha", default="0", help='coefficient of z^3, e.g. "1 - t"')
        s.add_argument("--beta", default="0", help="coefficient of z^2")
        if name == "abel-sim":
            s.add_argument("--t", type=_rational, required=True, dest="t_end", help="end time, e.g. 0.1 or 1/10")
            s.add_argument("--z0", type=_rational, default=Fraction(1), help="initial value r = z(0)")
            s.add_argument("--step", type=_positive_float, default=1e-4, help="RK4 step (default 1e-4)")
            s.add_argument("--bound", type=_positive_float, default=abel.DEFAULT_BLOWUP_BOUND,
                           help="blow-up threshold on |z| (default 1e6)")
            s.add_argument("--no-jit", action="store_true", help="force the pure numpy kernel")
        else:
            s.add_argument("--omega", type=_rational, required=True, help="evaluation time")
            s.add_argument("--n", type=_positive_int, required=True)
    return p


# operands

def _series_operand(text: str, n: int) -> Series:
    """A series literal, or the keyword ``ferfera`` for sum_k k! x1^k."""
    if text.strip() == "ferfera":
        return ferfera(n)
    return parse_series(text, n)


# JSON rendering

def _q(c) -> dict:
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def _f(x: float) -> str:
    return format(x, ".17g")


def series_json(s: Series) -> dict:
    return {
        "kind": "series",
        "truncation": s.truncation,
        "terms": [{"word": format_word(w), **_q(s.coefficient(w))} for w in sorted(s.words(), key=render_order)],
        "text": str(s),
    }


def h_json(h: HElement) -> dict:
    terms = sorted(h.items(), key=lambda mc: _mono_order(mc[0]))
    return {
        "kind": "h",
        "terms": [{"factors": [format_word(w) for w in reversed(m)], **_q(c)} for m, c in terms],
        "text": str(h),
    }


def _render(args, payload: dict, text: str) -> str:
    if args.format == "json":
        doc = {"command": args.command, "max_degree": args.max_degree, "result": payload}
        return json.dumps(doc, indent=2) + "\n"
    return text + "\n"


# commands

def _cmd_shuffle(a):
    n = a.max_degree
    out = shuffle_series(_series_operand(a.c, n), _series_operand(a.d, n), n)
    return EXIT_OK, series_json(out), str(out)


def _cmd_devlin(a):
    if a.route == "recursive":
        p = devlin_recursive(a.n)
    elif a.route == "closed":
        p = devlin_closed(a.n)
    else:
        p = devlin_antipode(a.n, method=a.method)
    payload = series_json(p.poly)
    payload["n"] = a.n
    return EXIT_OK, payload, str(p)


def _cmd_antipode(a):
    if a.word is not None:
        h = antipode_generator(parse_word(a.word), a.method)
    else:
        h = antipode(parse_h(a.expr), a.method)
    return EXIT_OK, h_json(h), str(h)


def _cmd_inverse(a):
    c = _series_operand(a.c, a.max_degree)
    if a.method == "fixpoint":
        out = group_inverse_fixpoint(c, a.max_degree)
    else:
        out = group_inverse(c, a.max_degree, a.method)
    return EXIT_OK, series_json(out), str(out)


def _binary(op):
    def run(a):
        n = a.max_degree
        out = op(_series_operand(a.c, n), _series_operand(a.d, n), n)
        return EXIT_OK, series_json(out), str(out)

    return run


def _cmd_feedback(a):
    op = feedback if a.method == "formula" else feedback_fixpoint
    return _binary(op)(a)


def _cmd_unity(a):
    out = unity_feedback(_series_operand(a.c, a.max_degree), a.max_degree, a.method)
    return EXIT_OK, series_json(out), str(out)


def _cmd_verify(a):
    results = run_suites(a.max_degree, a.seed, a.suite)
    ok = all(r.passed for r in results)
    width = max(len(r.name) for r in results)
    lines = [f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}" for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} suites passed at max degree {a.max_degree}")
    payload = {
        "kind": "verify",
        "passed": ok,
        "seed": a.seed,
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }
    return (EXIT_OK if ok else EXIT_VERIFY_FAILED), payload, "\n".join(lines)


def _inputs(a) -> InputPair:
    return InputPair(parse_poly(a.alpha), parse_poly(a.beta))


def _cmd_abel_sim(a):
    u = _inputs(a)
    if a.t_end < 0:
        raise ValueError("--t must be nonnegative")
    z = abel.abel_numeric(u, float(a.z0), float(a.t_end), a.step, a.bound, use_jit=False if a.no_jit else None)
    # z(t) = sum_n z0^n a_n(t), truncated at the requested degree
    coeffs = abel.return_map_coeffs(u, a.t_end, a.max_degree)
    series_value = sum(a.z0 ** k * c for k, c in enumerate(coeffs, start=1))
    payload = {
        "kind": "abel",
        "t": _f(float(a.t_end)),
        "z0": _f(float(a.z0)),
        "step": _f(a.step),
        "z_numeric": _f(z),
        "z_series": _f(float(series_value)),
        "difference": _f(float(series_value) - z),
    }
    text = "\n".join([
        f"z_numeric  {_f(z)}",
        f"z_series   {_f(float(series_value))}  (degree <= {a.max_degree})",
        f"difference {_f(float(series_value) - z)}",
    ])
    return EXIT_OK, payload, text


def _cmd_return_map(a):
    coeffs = abel.return_map_coeffs(_inputs(a), a.omega, a.n)
    payload = {"kind": "rationals", "values": [_q(c) for c in coeffs]}
    text = "\n".join(f"a_{k}  {format_rational(c)}" for k, c in enumerate(coeffs, start=1))
    return EXIT_OK, payload, text


COMMANDS = {
    "shuffle": _cmd_shuffle,
    "devlin": _cmd_devlin,
    "antipode": _cmd_antipode,
    "inverse": _cmd_inverse,
    "compose": _binary(compose),
    "mod-compose": _binary(mod_compose),
    "feedback": _cmd_feedback,
    "unity-feedback": _cmd_unity,
    "verify": _cmd_verify,
    "abel-sim": _cmd_abel_sim,
    "return-map": _cmd_return_map,
}


def _fail(status: int, kind: str, message: str, fmt: str, command: str | None) -> Outcome:
    line = f"error: {kind}: {' '.join(str(message).split())}"
    out = ""
    if fmt == "json":
        doc = {"command": command, "error": {"kind": kind, "message": str(message)}}
        out = json.dumps(doc, indent=2) + "\n"
    return Outcome(status, out, line + "\n")


def run(argv: list[str]) -> Outcome:
    """Parse ``argv`` and execute it; never raises, never exits."""
    # there are no short options besides -h, so "-x1" or "-1/2*e" is an operand
    argv = [" " + a if a.startswith("-") and not a.startswith("--") and a != "-h" else a for a in argv]
    wants_json = "--format=json" in argv or any(a == "--format" and b == "json" for a, b in zip(argv, argv[1:]))
    fmt = "json" if wants_json else "text"
    try:
        args = build_parser(_default_max_degree()).parse_args(argv)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc), fmt, None)
    except SystemExit as exc:  # --help inside a subcommand
        return Outcome(exc.code or 0, "")
    try:
        status, payload, text = COMMANDS[args.command](args)
    except ParseError as exc:
        return _fail(EXIT_USAGE, "parse", str(exc), args.format, args.command)
    except BlowUpError as exc:
        return _fail(EXIT_BLOWUP, "blowup", str(exc), args.format, args.command)
    except (ValueError, ArithmeticError) as exc:
        return _fail(EXIT_USAGE, "invalid", str(exc), args.format, args.command)
    return Outcome(status, _render(args, payload, text))


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv in (["-h"], ["--help"]) or not argv:
        build_parser().print_help()
        return EXIT_OK if argv else EXIT_USAGE
    out = run(argv)
    sys.stdout.write(out.output)
    sys.stderr.write(out.error)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
