"""Command-line front end: ``hclif <subcommand> [flags]``.

Exit status: 0 on success, 1 for usage errors, 2 when a solver or input
precondition fails.  Output is JSON with sorted keys (or CSV for numeric
Bessel values), so identical requests give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import serialize as ser
from .besselexp import (
    ExpParams,
    bessel_csv,
    bessel_series,
    exp_closed_forms,
    exp_residuals,
    exp_solution,
)
from .ck import (
    ck_class1,
    ck_class2,
    ck_class3,
    ck_double,
    component_residuals,
    decompose,
    inhomogeneous_data,
    residual_orders,
    residuals_hmonogenic,
    residuals_hmsF,
    residuals_submonogenic,
)
from .hermite import hermite_closed_form, hermite_rodrigues
from .polyfun import PolyFunction
from .vekua import (
    NuSeries,
    alpha_coefficient,
    axial_expand,
    delta_coefficient,
    generalized_powers,
    vekua_residuals,
    vekua_solve_plain,
    vekua_solve_z0barpower,
    vekua_solve_z0power,
)

SUBCOMMANDS = ("hermite", "ck", "vekua", "powers", "bessel", "verify")
DEFAULT_MAX_K = 32

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2


class UsageError(Exception):
    pass


class PreconditionError(Exception):
    pass


@dataclass
class CommandRequest:
    subcommand: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    input_path: Optional[str] = None
    output_format: str = "json"


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/3" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _rational(text: str) -> Fraction:
    try:
        return ser.parse_rat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed rational {text!r} (expected p/q)")


_rational.__name__ = "rational"


def _float_list(text: str) -> List[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed number list {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _common(p: argparse.ArgumentParser, n_required: bool = False) -> None:
    p.add_argument("--n", type=int, required=n_required, default=None if n_required else 1,
                   help="complex dimension n >= 1")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hclif", description="Hermitian Clifford special functions.")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)

    p = sub.add_parser("hermite", help="Hermite polynomials: Rodrigues vs closed form")
    _common(p, n_required=True)
    p.add_argument("--type", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("ck", help="CK-extension tables (Gaussian data unless --input)")
    _common(p)
    p.add_argument("--kind", choices=("I", "II", "III", "double"), default="I")
    p.add_argument("--K", type=int, default=4)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--input", help="JSON file with initial data")

    p = sub.add_parser("vekua", help="axial Vekua solutions from initial nu-series")
    _common(p)
    p.add_argument("--kind", choices=("plain", "z0_power", "z0bar_power"), default="plain")
    p.add_argument("--K", type=int, default=4)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--s", type=int, default=1)
    for name in ("alpha1", "alpha2", "delta1", "delta2"):
        p.add_argument(f"--{name}", type=_rational, default=Fraction(0))
    p.add_argument("--input", help="JSON file with initial nu-series")
    p.add_argument("--expand", action="store_true")

    p = sub.add_parser("powers", help="generalized powers")
    _common(p)
    p.add_argument("--s", type=_rational, required=True)
    p.add_argument("--K", type=int, default=None)
    for name in ("alpha1", "alpha2", "delta1", "delta2"):
        p.add_argument(f"--{name}", type=_rational, default=Fraction(0))
    p.add_argument("--expand", action="store_true")

    p = sub.add_parser("bessel", help="numeric J/I values, or exponential-type series with --lambda/--mu")
    _common(p)
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--kind", choices=("J", "I"), default="J")
    p.add_argument("--t", type=_float_list, default=None)
    p.add_argument("--lambda", dest="lambda_", type=_rational, default=None)
    p.add_argument("--mu", type=_rational, default=None)
    p.add_argument("--M", type=int, default=8)
    p.add_argument("--alpha1", type=_rational, default=Fraction(0))
    p.add_argument("--alpha2", type=_rational, default=Fraction(0))

    p = sub.add_parser("verify", help="residual report for a serialized PolyFunction")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json",), default="json")
    return parser


def _max_k() -> int:
    raw = os.environ.get("HCLIF_MAX_K")
    if raw is None:
        return DEFAULT_MAX_K
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"HCLIF_MAX_K must be an integer, got {raw!r}")
    if value < 0:
        raise UsageError("HCLIF_MAX_K must be nonnegative")
    return value


def parse_args(argv: Sequence[str]) -> CommandRequest:
    ns = build_parser().parse_args(list(argv))
    if ns.subcommand is None:
        raise UsageError(f"hclif: error: a subcommand is required ({', '.join(SUBCOMMANDS)})")
    params = {k: v for k, v in vars(ns).items() if k not in ("subcommand", "input", "format")}
    fmt = ns.format
    if fmt == "csv" and not (ns.subcommand == "bessel" and ns.lambda_ is None):
        raise UsageError("--format csv is only available for numeric bessel output")
    if ns.subcommand == "bessel":
        numeric = ns.lambda_ is None and ns.mu is None
        if numeric and (ns.alpha is None or ns.t is None):
            raise UsageError("bessel: numeric mode needs --alpha and --t (or give --lambda and --mu)")
        if not numeric and (ns.lambda_ is None or ns.mu is None):
            raise UsageError("bessel: series mode needs both --lambda and --mu")
    return CommandRequest(ns.subcommand, params, getattr(ns, "input", None), fmt)


# dispatch ------------------------------------------------------------------------


def _cap(name: str, value: Optional[int]) -> None:
    if value is None:
        return
    if value < 0:
        raise PreconditionError(f"--{name} must be nonnegative")
    cap = _max_k()
    if value > cap:
        raise PreconditionError(f"--{name}={value} exceeds HCLIF_MAX_K={cap}")


def _check_n(n: int) -> None:
    if n < 1:
        raise PreconditionError("--n must be at least 1")


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"{path} is not valid JSON: {exc.msg}")


def _poly(d) -> PolyFunction:
    obj = ser.from_dict(d) if "type" in d else ser.poly_from_dict(d)
    if not isinstance(obj, PolyFunction):
        raise PreconditionError("expected a serialized PolyFunction")
    return obj


def _poly_report(g: PolyFunction) -> Dict[str, Any]:
    return {"zero": g.is_zero(), "value": ser.poly_to_dict(g)}


def _cmd_hermite(q: Dict[str, Any], _inp) -> Dict[str, Any]:
    _check_n(q["n"])
    if q["p"] < 0:
        raise PreconditionError("--p must be nonnegative")
    rod = hermite_rodrigues(q["type"], q["p"], q["n"])
    closed = hermite_closed_form(q["type"], q["p"], q["n"])
    return {
        "type": q["type"], "p": q["p"], "n": q["n"], "degree": rod.degree,
        "rodrigues": ser.poly_to_dict(rod.value),
        "closed_form": ser.poly_to_dict(closed.value),
        "verdict": "equal" if rod.value == closed.value else "different",
    }


def _gaussian(n: int) -> PolyFunction:
    return PolyFunction.gaussian(n)


def _cmd_ck(q: Dict[str, Any], inp) -> Dict[str, Any]:
    n, K, s, kind = q["n"], q["K"], q["s"], q["kind"]
    _check_n(n)
    _cap("K", K)
    data = _read_json(inp) if inp else None

    def get(name, default):
        if data is None:
            return default
        if name not in data:
            raise PreconditionError(f"input file lacks {name!r}")
        return _poly(data[name])

    g = _gaussian(n)
    if kind == "I":
        table = ck_class1(get("A0", g), get("D0", PolyFunction.zero(n)), K)
    elif kind == "II":
        table = ck_class2(get("C0", g), get("D0", g), s, K)
    elif kind == "III":
        table = ck_class3(get("A0", g), get("B0", g), s, K)
    else:
        if data is None:
            raise PreconditionError("double series need --input with A0row, B0row, Ccol, Dcol")
        rows = {}
        for name in ("A0row", "B0row", "Ccol", "Dcol"):
            if name not in data:
                raise PreconditionError(f"input file lacks {name!r}")
            rows[name] = [_poly(d) for d in data[name]]
        table = ck_double(rows["A0row"], rows["B0row"], rows["Ccol"], rows["Dcol"], K)
    f = table.assemble()
    orders = residual_orders(f)
    lowest = min((o for v in orders.values() for o in v), default=None)
    return {
        "table": ser.cktable_to_dict(table),
        "residuals": {
            "surviving_z0_orders": orders,
            "lowest_surviving_order": lowest,
            "all_zero": lowest is None,
        },
    }


def _vekua_report(sol) -> Dict[str, Any]:
    res = vekua_residuals(sol)
    nonzero = {name: sorted(k for k, r in table.items() if r) for name, table in res.items()}
    return {"equations": nonzero, "vanish": not any(nonzero.values())}


def _expand(sol) -> Dict[str, Any]:
    try:
        f = axial_expand(sol)
    except ValueError as exc:
        raise PreconditionError(str(exc))
    s1, s2 = residuals_submonogenic(f)
    return {
        "function": ser.poly_to_dict(f),
        "degrees": sorted(f.degrees()),
        "submonogenic_residuals_zero": s1.is_zero() and s2.is_zero(),
    }


def _const(n: int, value: Fraction) -> NuSeries:
    return NuSeries(n, {0: value})


def _cmd_vekua(q: Dict[str, Any], inp) -> Dict[str, Any]:
    n, K, M, kind, s = q["n"], q["K"], q["M"], q["kind"], q["s"]
    _check_n(n)
    _cap("K", K)
    _cap("M", M)
    data = _read_json(inp) if inp else None

    def get(name, default):
        if data is None:
            return _const(n, default)
        if name not in data:
            raise PreconditionError(f"input file lacks {name!r}")
        series = ser.nuseries_from_dict(data[name])
        if series.n != n:
            raise PreconditionError(f"series {name!r} has n={series.n}, expected {n}")
        return series

    a1, a2, d1, d2 = q["alpha1"], q["alpha2"], q["delta1"], q["delta2"]
    if kind == "plain":
        sol = vekua_solve_plain(get("a1", a1), get("a2", a2), get("d1", d1), get("d2", d2), K, M)
    elif kind == "z0_power":
        sol = vekua_solve_z0power(get("c", a1), get("d1", d1), get("d2", d2), s, K, M)
    else:
        sol = vekua_solve_z0barpower(get("a1", a1), get("a2", a2), get("b", d1), s, K, M)
    out = {"solution": ser.axial_to_dict(sol), "residuals": _vekua_report(sol),
           "terminated": sol.terminated}
    if q["expand"]:
        out["expanded"] = _expand(sol)
    return out


def _cmd_powers(q: Dict[str, Any], _inp) -> Dict[str, Any]:
    n, s = q["n"], q["s"]
    _check_n(n)
    K = q["K"]
    if K is None:
        K = max(int(s) + 2, 2) if s >= 0 else 4
    _cap("K", K)
    args = (s, q["alpha1"], q["alpha2"], q["delta1"], q["delta2"], n)
    sol = generalized_powers(*args[:5], K, n)
    out = {
        "solution": ser.axial_to_dict(sol),
        "alpha": [ser.betapoly_to_list(alpha_coefficient(k, *args)) for k in range(K + 1)],
        "delta": [ser.betapoly_to_list(delta_coefficient(k, *args)) for k in range(K + 1)],
        "residuals": _vekua_report(sol),
        "terminated": sol.terminated,
    }
    if q["expand"]:
        if s.denominator != 1 or s < 0:
            raise PreconditionError("--expand needs a nonnegative integer --s")
        out["expanded"] = _expand(sol)
    return out


def _cmd_bessel(q: Dict[str, Any], _inp, fmt: str):
    if q["lambda_"] is None:
        alpha, kind, ts = q["alpha"], q["kind"], q["t"]
        if alpha < 0:
            raise PreconditionError("--alpha must be a nonnegative integer")
        if any(t < 0 for t in ts):
            raise PreconditionError("--t values must be nonnegative")
        if fmt == "csv":
            return bessel_csv(alpha, kind, ts)
        return {"alpha": alpha, "kind": kind,
                "values": [{"t": t, "value": bessel_series(alpha, kind, t)} for t in ts]}
    n, M = q["n"], q["M"]
    _check_n(n)
    _cap("M", M)
    if q["lambda_"] == 0 or q["mu"] == 0:
        raise PreconditionError("--lambda and --mu must be nonzero")
    params = ExpParams(q["lambda_"], q["mu"], n, q["alpha1"], q["alpha2"])
    sol = exp_solution(params, M)
    res = exp_residuals(sol)
    closed = exp_closed_forms(params, M)
    return {
        "branch": params.branch,
        "prefactor": {"base": "lambda*mu", "value": ser.rat(params.a), "half_power": n},
        "series": {k: ser.nuseries_to_dict(v) for k, v in sol.series.items()},
        "residuals": {k: not v for k, v in res.items()},
        "closed_forms_match": {k: closed[k].agrees(sol[k]) for k in closed},
    }


def _cmd_verify(_q, inp) -> Dict[str, Any]:
    data = _read_json(inp)
    try:
        f = _poly(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"cannot decode PolyFunction: {exc}")
    if not f.has_z0:
        f = f.embed()
    families = {
        "submonogenic": dict(zip(("s1", "s2"), residuals_submonogenic(f))),
        "hmonogenic": dict(zip(("r1", "r2"), residuals_hmonogenic(f))),
        "hmsF": dict(zip(("q1", "q2", "q3", "q4"), residuals_hmsF(f))),
        "components": dict(zip(("w1", "w2", "w3", "w4"), component_residuals(decompose(f)))),
        "inhomogeneous_data": dict(zip(("g", "h"), inhomogeneous_data(f))),
    }
    report = {fam: {k: _poly_report(v) for k, v in items.items()} for fam, items in families.items()}
    zero = {fam: all(r["zero"] for r in items.values()) for fam, items in report.items()}
    return {"residuals": report, "zero": zero}


_HANDLERS = {
    "hermite": _cmd_hermite,
    "ck": _cmd_ck,
    "vekua": _cmd_vekua,
    "powers": _cmd_powers,
    "verify": _cmd_verify,
}


def dispatch(req: CommandRequest) -> str:
    """Run a validated request and return the text to print."""
    if req.subcommand == "bessel":
        result = _cmd_bessel(req.parameters, req.input_path, req.output_format)
    else:
        result = _HANDLERS[req.subcommand](req.parameters, req.input_path)
    if isinstance(result, str):
        return result
    return ser.dumps(result) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_args(argv)
        text = dispatch(req)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ValueError, ZeroDivisionError) as exc:
        print(f"hclif: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
