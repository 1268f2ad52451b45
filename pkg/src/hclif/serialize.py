"""JSON encoding of the exact objects.

Rationals are written as "p/q" strings (or plain integers as "p") so that
nothing passes through floating point.  Every ``*_to_dict`` has an inverse
``*_from_dict``; :func:`dumps` and :func:`loads` add a ``type`` tag.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from .clifford import CliffordElement, GaussianRational, indices_to_mask, mask_to_indices
from .ck import CKTable
from .polyfun import PolyFunction, var_index, var_name
from .vekua import FIELDS, AxialSolution, BetaPoly, NuSeries

__all__ = [
    "rat",
    "parse_rat",
    "clifford_to_dict",
    "clifford_from_dict",
    "poly_to_dict",
    "poly_from_dict",
    "betapoly_to_list",
    "betapoly_from_list",
    "nuseries_to_dict",
    "nuseries_from_dict",
    "cktable_to_dict",
    "cktable_from_dict",
    "axial_to_dict",
    "axial_from_dict",
    "to_dict",
    "from_dict",
    "dumps",
    "loads",
]


def rat(x) -> str:
    return str(Fraction(x))


def parse_rat(text) -> Fraction:
    """Parse "p/q", "p" or an int.  Floats and decimal strings are rejected."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str) or any(ch in text for ch in ".eE"):
        raise ValueError(f"not a rational: {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


# Clifford elements ----------------------------------------------------------


def clifford_to_dict(x: CliffordElement) -> Dict[str, Any]:
    return {
        "n": x.n,
        "with_z0": x.with_z0,
        "terms": _blade_records(x.terms),
    }


def _blade_records(terms) -> List[Dict[str, Any]]:
    return [
        {"blade": list(mask_to_indices(mask)), "re": rat(c.re), "im": rat(c.im)}
        for mask, c in sorted(terms.items())
    ]


def _blade_terms(records, m: int) -> Dict[int, GaussianRational]:
    out: Dict[int, GaussianRational] = {}
    for rec in records:
        mask = indices_to_mask(rec["blade"], m)
        out[mask] = out.get(mask, GaussianRational(0)) + GaussianRational(
            parse_rat(rec["re"]), parse_rat(rec["im"]))
    return out


def clifford_from_dict(d: Dict[str, Any]) -> CliffordElement:
    n, with_z0 = int(d["n"]), bool(d.get("with_z0", False))
    m = 2 * n + (2 if with_z0 else 0)
    return CliffordElement(n, _blade_terms(d["terms"], m), with_z0)


# PolyFunction ----------------------------------------------------------------


def poly_to_dict(f: PolyFunction) -> Dict[str, Any]:
    terms = []
    for mono, coeff in sorted(f.terms.items()):
        exps = {var_name(i, f.n): k for i, k in enumerate(mono) if k}
        terms.append({"exponents": exps, "coeff": _blade_records(coeff.terms)})
    return {"n": f.n, "has_z0": f.has_z0, "weight": f.weight, "terms": terms}


def poly_from_dict(d: Dict[str, Any]) -> PolyFunction:
    n, has_z0 = int(d["n"]), bool(d["has_z0"])
    m = 2 * n + (2 if has_z0 else 0)
    terms = {}
    for rec in d["terms"]:
        mono = [0] * (2 * n + 2)
        for var, k in rec["exponents"].items():
            mono[var_index(var, n, has_z0)] += int(k)
        coeff = CliffordElement(n, _blade_terms(rec["coeff"], m), has_z0)
        mono = tuple(mono)
        terms[mono] = terms[mono] + coeff if mono in terms else coeff
    return PolyFunction(n, has_z0, d.get("weight", "none"), terms)


# beta polynomials and nu-series --------------------------------------------


def betapoly_to_list(p: BetaPoly) -> List[str]:
    return [rat(c) for c in p.coeffs]


def betapoly_from_list(items, n: int) -> BetaPoly:
    return BetaPoly(n, [parse_rat(c) for c in items])


def nuseries_to_dict(s: NuSeries, prefactor: Dict[str, Any] | None = None) -> Dict[str, Any]:
    """Dense ``coeffs`` list when all exponents are integers >= 0, else sparse ``terms``."""
    out: Dict[str, Any] = {"n": s.n, "M": None if s.order is None else rat(s.order)}
    if prefactor is not None:
        out["prefactor"] = {k: (rat(v) if isinstance(v, Fraction) else v) for k, v in prefactor.items()}
    exps = s.exponents()
    if all(e.denominator == 1 and e >= 0 for e in exps):
        top = int(max(exps, default=-1))
        if s.order is not None and s.order.denominator == 1:
            top = max(top, int(s.order))
        out["coeffs"] = [betapoly_to_list(s.coefficient(k)) for k in range(top + 1)]
    else:
        out["terms"] = [{"exponent": rat(e), "coeff": betapoly_to_list(s.terms[e])} for e in exps]
    return out


def nuseries_from_dict(d: Dict[str, Any]) -> NuSeries:
    n = int(d["n"])
    order = None if d.get("M") is None else parse_rat(d["M"])
    if "coeffs" in d:
        terms = {k: betapoly_from_list(c, n) for k, c in enumerate(d["coeffs"])}
    else:
        terms = {parse_rat(t["exponent"]): betapoly_from_list(t["coeff"], n) for t in d["terms"]}
    return NuSeries(n, terms, order)


# CK tables -------------------------------------------------------------------


def _key_str(key) -> str:
    return f"{key[0]},{key[1]}" if isinstance(key, tuple) else str(key)


def _key_parse(text: str):
    if "," in text:
        a, b = text.split(",")
        return int(a), int(b)
    return int(text)


def cktable_to_dict(t: CKTable) -> Dict[str, Any]:
    coeffs = {}
    for name in "ABCD":
        table = t.coefficients[name]
        coeffs[name] = {_key_str(k): poly_to_dict(table[k]) for k in sorted(table)}
    return {
        "class": t.cls,
        "s": t.s,
        "K": t.K,
        "n": t.n,
        "terminated": t.terminated,
        "weight": t.weight,
        "coefficients": coeffs,
    }


def cktable_from_dict(d: Dict[str, Any]) -> CKTable:
    coeffs = {
        name: {_key_parse(k): poly_from_dict(v) for k, v in d["coefficients"][name].items()}
        for name in "ABCD"
    }
    return CKTable(d["class"], int(d["n"]), int(d["K"]), coeffs, int(d["s"]),
                   bool(d["terminated"]), d.get("weight", "none"))


# axial solutions ---------------------------------------------------------------


def axial_to_dict(sol: AxialSolution) -> Dict[str, Any]:
    tables = {
        f: {str(k): nuseries_to_dict(sol.tables[f][k]) for k in sorted(sol.tables[f])}
        for f in FIELDS
    }
    return {"kind": sol.kind, "s": rat(sol.s), "K": sol.K, "M": sol.M, "n": sol.n, "tables": tables}


def axial_from_dict(d: Dict[str, Any]) -> AxialSolution:
    tables = {
        f: {int(k): nuseries_from_dict(v) for k, v in d["tables"][f].items()} for f in FIELDS
    }
    M = d.get("M")
    return AxialSolution(d["kind"], int(d["n"]), int(d["K"]), tables,
                         parse_rat(d["s"]), None if M is None else int(M))


# tagged documents ----------------------------------------------------------------

_ENCODERS = [
    (CliffordElement, "clifford", clifford_to_dict),
    (PolyFunction, "polyfunction", poly_to_dict),
    (CKTable, "cktable", cktable_to_dict),
    (AxialSolution, "axial", axial_to_dict),
    (NuSeries, "nuseries", nuseries_to_dict),
]
_DECODERS = {
    "clifford": clifford_from_dict,
    "polyfunction": poly_from_dict,
    "cktable": cktable_from_dict,
    "axial": axial_from_dict,
    "nuseries": nuseries_from_dict,
}


def to_dict(obj) -> Dict[str, Any]:
    for cls, tag, enc in _ENCODERS:
        if isinstance(obj, cls):
            return {"type": tag, **enc(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_dict(d: Dict[str, Any]):
    try:
        dec = _DECODERS[d["type"]]
    except KeyError as exc:
        raise ValueError(f"unknown or missing document type: {d.get('type')!r}") from exc
    return dec(d)


def dumps(obj_or_dict) -> str:
    """Deterministic JSON text (sorted keys, two-space indent)."""
    d = obj_or_dict if isinstance(obj_or_dict, dict) else to_dict(obj_or_dict)
    return json.dumps(d, sort_keys=True, indent=2, ensure_ascii=False)


def loads(text: str):
    return from_dict(json.loads(text))
