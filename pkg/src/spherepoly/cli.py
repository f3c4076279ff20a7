"""Command-line interface: ``spherepoly <command> [options]``.

Exact rationals are printed as ``num/den`` (integers without ``/1``).
Exit status is 0 on success, 1 when ``verify`` finds a failing property
and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .harmonic import La_project, base_r2_expansion, reduce_mod_sphere
from .operators import casimir
from .ortho import LIMIT_KINDS, gegenbauer_monic, hermite_poly, limit_table, zonal_poly
from .pairing import SphereSpec, gaussian_inner, sphere_inner
from .poly import PolyLimitError, PolySyntaxError, parse_poly
from .sphere_laplacian import sphere_laplacian
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _a2(text: str):
    return "N" if text == "N" else _fraction(text)


def _n_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _spec(args) -> SphereSpec:
    if args.N is None:
        raise UsageError("--N is required")
    a2 = Fraction(args.N) if args.a2 == "N" else args.a2
    return SphereSpec(args.N, a2)


def _poly(text: str):
    try:
        return parse_poly(text)
    except (PolySyntaxError, PolyLimitError) as exc:
        raise UsageError(f"cannot parse polynomial {text!r}: {exc}") from None


def _cmd_hermite(args):
    return {"poly": str(hermite_poly(args.m))}


def _cmd_gegenbauer(args):
    return {"poly": str(gegenbauer_monic(args.b, args.m))}


def _cmd_zonal(args):
    return {"poly": str(zonal_poly(args.m, _spec(args)))}


def _cmd_inner(args):
    p, q = _poly(args.p), _poly(args.q)
    value = gaussian_inner(p, q) if args.gaussian else sphere_inner(p, q, _spec(args))
    return {"value": str(value)}


def _cmd_slap(args):
    return {"poly": str(sphere_laplacian(_poly(args.p), _spec(args)).value)}


def _cmd_decompose(args):
    p = _poly(args.p)
    exp = base_r2_expansion(p, _n_required(args))
    return {"harmonic_components": [str(c) for c in exp.components], "check": exp.reassemble() == p}


def _cmd_la(args):
    return {"poly": str(La_project(_poly(args.p), _spec(args)))}


def _cmd_casimir(args):
    return {"poly": str(casimir(_poly(args.p), _n_required(args)))}


def _cmd_reduce(args):
    r = reduce_mod_sphere(_poly(args.p), _spec(args))
    return {"remainder": str(r.remainder), "quotient": str(r.quotient)}


def _cmd_limit_table(args):
    if args.kind == "inner_product":
        if len(args.payload) != 2:
            raise UsageError("inner_product takes two polynomials")
        payload = (_poly(args.payload[0]), _poly(args.payload[1]))
    elif len(args.payload) != 1:
        raise UsageError(f"{args.kind} takes a single payload")
    elif args.kind == "zonal_to_hermite":
        try:
            payload = int(args.payload[0])
        except ValueError:
            raise UsageError("zonal_to_hermite takes a degree m") from None
    else:
        payload = _poly(args.payload[0])
    table = limit_table(args.kind, payload, args.N_list)
    return {"kind": table.kind, "target": table.target, "rows": table.records()}


def _cmd_verify(args):
    results = run_suite(args.suite, seed=args.seed, samples=args.samples)
    return {
        "suite": args.suite,
        "seed": args.seed,
        "samples": args.samples,
        "passed": all(r.passed for r in results),
        "properties": [r.as_dict() for r in results],
    }


def _n_required(args) -> int:
    if args.N is None:
        raise UsageError("--N is required")
    return args.N


def _add_sphere(sp, required: bool = True):
    sp.add_argument("--N", type=int, required=required, help="ambient dimension")
    sp.add_argument("--a2", type=_a2, default="N", help='squared radius "p/q", or "N" (default)')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--samples", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="spherepoly", parents=[common], description="Exact polynomial analysis on spheres."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("hermite", _cmd_hermite, "monic Hermite polynomial H_m")
    sp.add_argument("m", type=int)
    sp = add("gegenbauer", _cmd_gegenbauer, "monic Gegenbauer polynomial with parameter b")
    sp.add_argument("b", type=_fraction)
    sp.add_argument("m", type=int)
    sp = add("zonal", _cmd_zonal, "zonal polynomial q_m on the sphere")
    sp.add_argument("m", type=int)
    _add_sphere(sp)
    sp = add("inner", _cmd_inner, "sphere (or Gaussian) inner product")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--gaussian", action="store_true", help="use the standard Gaussian pairing")
    _add_sphere(sp, required=False)
    sp = add("slap", _cmd_slap, "spherical Laplacian")
    sp.add_argument("p")
    _add_sphere(sp)
    sp = add("decompose", _cmd_decompose, "harmonic expansion in powers of |x|^2")
    sp.add_argument("p")
    sp.add_argument("--N", type=int, required=True)
    sp = add("la", _cmd_la, "harmonic polynomial agreeing with p on the sphere")
    sp.add_argument("p")
    _add_sphere(sp)
    sp = add("casimir", _cmd_casimir, "sum of squared rotation generators")
    sp.add_argument("p")
    sp.add_argument("--N", type=int, required=True)
    sp = add("reduce", _cmd_reduce, "canonical form modulo |x|^2 - a2")
    sp.add_argument("p")
    _add_sphere(sp)
    sp = add("limit-table", _cmd_limit_table, "exact large-N error table (a2 = N)")
    sp.add_argument("kind", choices=LIMIT_KINDS)
    sp.add_argument("payload", nargs="+", help="polynomial(s), or the degree m for zonal_to_hermite")
    sp.add_argument("--N-list", dest="N_list", type=_n_list, default=[10, 100, 1000])
    sp = add("verify", _cmd_verify, "run a named verification suite")
    sp.add_argument("suite", choices=SUITES)
    return parser


def _render_csv(command: str, result: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    if command == "limit-table":
        w.writerow(["N", "error", "error_float"])
        for row in result["rows"]:
            w.writerow([row["N"], row["error"], format(row["error_float"], ".17g")])
    elif command == "verify":
        w.writerow(["property", "passed", "checked", "detail"])
        for r in result["properties"]:
            w.writerow([r["property"], str(r["passed"]).lower(), r["checked"], r["detail"]])
    elif command == "decompose":
        w.writerow(["power", "component"])
        for i, c in enumerate(result["harmonic_components"]):
            w.writerow([i, c])
    else:
        keys = list(result)
        w.writerow(keys)
        w.writerow([result[k] for k in keys])
    return buf.getvalue()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "json"), ("out", None), ("seed", 42), ("samples", 100_000)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.samples < 1 or args.seed < 0:
        parser.error("--samples must be positive and --seed non-negative")
    try:
        result = args.func(args)
    except (UsageError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"spherepoly {args.command}: error: {exc}", file=sys.stderr)
        return 2

    text = json.dumps(result, indent=2) + "\n" if args.format == "json" else _render_csv(args.command, result)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
