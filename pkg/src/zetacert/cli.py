"""Batch command-line front end.

Exit codes: 0 success, 1 malformed flags, 2 precondition violation (pole,
parity, primitivity, domain), 3 precision infeasible.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Sequence

from . import characters, em_engine, exact_values, special_values
from .errors import PrecisionInfeasible, ZetaDomainError

__all__ = ["main", "run", "query_to_argv"]

DEFAULT_TARGET = 1e-10
EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_PRECISION = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _complex_arg(text: str) -> complex:
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"expected RE[,IM], got {text!r}")
    try:
        re_part = float(parts[0])
        im_part = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE[,IM], got {text!r}") from None
    return complex(re_part, im_part)


def _rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a number or p/q, got {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON record per line")
    common.add_argument("--target", type=float, default=argparse.SUPPRESS,
                        help=f"absolute error target (default {DEFAULT_TARGET:g})")

    parser = _Parser(prog="zetacert", parents=[common],
                     description="Hurwitz zeta, Dirichlet L-values and exact values at negative integers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("zeta", "Riemann zeta(s)")
    p.add_argument("--s", type=_complex_arg, required=True)
    for name, text in (("hurwitz", "Hurwitz zeta(s, alpha)"),
                       ("hurwitz-deriv", "d/ds zeta(s, alpha)")):
        p = add(name, text)
        p.add_argument("--s", type=_complex_arg, required=True)
        p.add_argument("--alpha", type=_rational_arg, required=True)
    p = add("zeta-neg", "exact zeta(-m, alpha) polynomial or value")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=_rational_arg)
    p = add("zeta-deriv-neg", "zeta'(-m, alpha) for 0 < alpha <= 1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=_rational_arg, required=True)
    p = add("zeta-odd", "zeta(2m+1) from zeta'(-2m)")
    p.add_argument("--m", type=int, required=True)
    p = add("chars", "list Dirichlet characters mod q")
    p.add_argument("--q", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true")
    group.add_argument("--index", type=int, nargs="*")
    p = add("gauss", "Gauss sum tau(chi)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--index", type=int, nargs="*", default=[])
    p = add("lvalue", "L(s, chi)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--index", type=int, nargs="*", default=[])
    p.add_argument("--s", type=_complex_arg, required=True)
    p = add("lspecial", "L(2m+1, chi) (odd-arg) or L(2m, chi) (even-arg) via zeta'")
    p.add_argument("--kind", choices=["odd-arg", "even-arg"], required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--index", type=int, nargs="*", default=[])
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    # "--s -3.5,1" would read as an option; rewrite to "--s=-3.5,1".
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--s", "--alpha"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _complex_json(z: complex) -> list[float]:
    return [z.real, z.imag]


def _query(args: argparse.Namespace, target: float) -> dict:
    q: dict = {"command": args.command}
    for key in ("s", "alpha", "m", "q", "kind"):
        if getattr(args, key, None) is not None:
            val = getattr(args, key)
            if isinstance(val, complex):
                val = _complex_json(val)
            elif isinstance(val, Fraction):
                val = _frac_str(val)
            q[key] = val
    if getattr(args, "index", None) is not None:
        q["index"] = list(args.index)
    if args.command == "chars":
        q["list"] = bool(args.list) or args.index is None
    if args.command not in ("zeta-neg", "chars"):
        q["target"] = target
    return q


def query_to_argv(query: dict) -> list[str]:
    """Rebuild an argv list from an echoed query record."""
    argv = [query["command"]]
    for key in ("kind", "m", "q"):
        if key in query:
            argv += [f"--{key}", str(query[key])]
    if "s" in query:
        re_part, im_part = query["s"]
        argv.append(f"--s={float(re_part)!r},{float(im_part)!r}")
    if "alpha" in query:
        argv.append(f"--alpha={query['alpha']}")
    if "index" in query and not query.get("list"):
        argv += ["--index", *map(str, query["index"])]
    elif query.get("list"):
        argv.append("--list")
    if "target" in query:
        argv += ["--target", repr(float(query["target"]))]
    return argv + ["--json"]


def _evaluate(args: argparse.Namespace, target: float):
    """Returns (json value, error bound or "exact", plain-text value)."""
    cmd = args.command
    if cmd == "zeta":
        v, e = em_engine.riemann_zeta(args.s, target, return_error=True)
        return _complex_json(v), e, _fmt_complex(v)
    if cmd in ("hurwitz", "hurwitz-deriv"):
        fn = em_engine.hurwitz_zeta if cmd == "hurwitz" else em_engine.hurwitz_zeta_deriv
        v, e = fn(args.s, float(args.alpha), target, return_error=True)
        return _complex_json(v), e, _fmt_complex(v)
    if cmd == "zeta-neg":
        if args.m < 0:
            raise ZetaDomainError("m must be >= 0")
        poly = exact_values.hurwitz_neg_poly(args.m)
        if args.alpha is None:
            return poly.to_json(args.m)["coeffs"], "exact", poly.format()
        v = poly(args.alpha)
        return _frac_str(v), "exact", str(v)
    if cmd == "zeta-deriv-neg":
        v, e = em_engine.zeta_deriv_neg(args.m, float(args.alpha), target, return_error=True)
        return v, e, f"{v:.15g}"
    if cmd == "zeta-odd":
        v, e = special_values.zeta_odd(args.m, target, return_error=True)
        return v, e, f"{v:.15g}"
    if cmd == "chars":
        if args.index is not None and not args.list:
            chis = [characters.get_character(args.q, args.index)]
        else:
            chis = characters.enumerate_characters(args.q)
        text = "\n".join(
            f"index={list(c.index)} conductor={c.conductor} parity={c.parity}"
            f"{' primitive' if c.is_primitive else ''}{' real' if c.is_real else ''}"
            for c in chis
        )
        return [c.to_json() for c in chis], "exact", text
    chi = characters.get_character(args.q, args.index)
    if cmd == "gauss":
        v = characters.gauss_sum(chi)
        e = 4 * 2.0**-52 * args.q
        return _complex_json(v), e, _fmt_complex(v)
    if cmd == "lvalue":
        v, e = characters.l_series(args.s, chi, target, return_error=True)
        return _complex_json(v), e, _fmt_complex(v)
    if cmd == "lspecial":
        fn = special_values.l_odd_arg if args.kind == "odd-arg" else special_values.l_even_arg
        v, e = fn(args.m, chi, target, return_error=True)
        return _complex_json(v), e, _fmt_complex(v)
    raise _UsageError(f"unknown command {cmd!r}")


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:.15g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.15g} {sign} {abs(z.imag):.15g}i"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    target = getattr(args, "target", DEFAULT_TARGET)
    as_json = getattr(args, "json", False)
    start = time.perf_counter()
    try:
        value, bound, text = _evaluate(args, target)
    except ZetaDomainError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except PrecisionInfeasible as exc:
        print(f"precision infeasible: {exc}", file=stderr)
        return EXIT_PRECISION
    elapsed = (time.perf_counter() - start) * 1e3
    if as_json:
        record = {"query": _query(args, target), "value": value, "error_bound": bound,
                  "elapsed_ms": elapsed}
        print(json.dumps(record, ensure_ascii=False), file=stdout)
    else:
        suffix = "  (exact)" if bound == "exact" else f"  ± {bound:.3g}"
        if args.command == "chars":
            print(text, file=stdout)
        else:
            print(text + suffix, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
