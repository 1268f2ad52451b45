"""Exponential-type axial solutions and Bessel series.

For A = exp(lambda z0 + mu z̄0)(a1 + z^dagger z a2) and friends, the radial
profiles b and c solve nu y'' + (n + 1) y' + lambda mu y = 0.  The regular
solution is nu^(-n/2) J_n(2 sqrt(lambda mu nu)) (or I_n when lambda mu < 0),
which equals |lambda mu|^(n/2) times the entire series

    S_n(nu) = sum_k (-a)^k nu^k / (k! (k + n)!),    a = lambda mu.

All six profiles share the factor |a|^(n/2), so it is tracked symbolically
and the series themselves stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from .vekua import BetaPoly, NuSeries

__all__ = [
    "ExpParams",
    "ExpSolution",
    "bessel_series",
    "bessel_series_exact",
    "bessel_csv",
    "scaled_bessel_nuseries",
    "exp_solution",
    "exp_closed_forms",
    "exp_residuals",
    "ode_residual",
    "bessel_derivative_identity_check",
]

_REL_STOP = 1e-16
_ABS_FLOOR = 1e-300


def _check_kind(kind: str) -> str:
    kind = kind.upper()
    if kind not in ("J", "I"):
        raise ValueError(f"kind must be 'J' or 'I', got {kind!r}")
    return kind


def bessel_series(alpha: int, kind: str, t: float) -> float:
    """J_alpha(t) or I_alpha(t) by direct power-series summation."""
    kind = _check_kind(kind)
    if alpha < 0 or int(alpha) != alpha:
        raise ValueError("alpha must be a nonnegative integer")
    if t < 0:
        raise ValueError("t must be nonnegative")
    alpha = int(alpha)
    # terms are generated exactly from the binary value of t and rounded once,
    # so the only float error left is the (correctly rounded) fsum
    half = Fraction(t) / 2
    q = half * half if kind == "I" else -half * half
    term = half ** alpha / math.factorial(alpha)
    terms = [float(term)]
    partial = terms[0]
    k = 0
    while True:
        k += 1
        term = term * q / (k * (k + alpha))
        value = float(term)
        if abs(value) < max(_REL_STOP * abs(partial), _ABS_FLOOR):
            break
        terms.append(value)
        partial += value
    return math.fsum(terms)


def bessel_series_exact(alpha: int, kind: str, t, terms: int = 60) -> Fraction:
    """Exact rational partial sum with ``terms`` terms, used as a reference value."""
    kind = _check_kind(kind)
    half = Fraction(t) / 2
    sign = 1 if kind == "I" else -1
    q = sign * half * half
    term = half ** alpha / math.factorial(alpha)
    acc = Fraction(0)
    for k in range(terms):
        acc += term
        term = term * q / ((k + 1) * (k + 1 + alpha))
    return acc


def bessel_csv(alpha: int, kind: str, ts: Iterable[float]) -> str:
    """CSV rows ``t,value`` for plotting."""
    lines = [f"t,{_check_kind(kind)}_{alpha}(t)"]
    for t in ts:
        lines.append(f"{t!r},{bessel_series(alpha, kind, t)!r}")
    return "\n".join(lines) + "\n"


def scaled_bessel_nuseries(n: int, lambda_mu, M: int, dim: Optional[int] = None) -> NuSeries:
    """S_n(nu) = sum_{k<=M} (-a)^k nu^k / (k! (k+n)!), with BetaPoly coefficients over C_{2 dim}."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    a = Fraction(lambda_mu)
    dim = n if dim is None else dim
    coeffs = {k: (-a) ** k / (math.factorial(k) * math.factorial(k + n)) for k in range(M + 1)}
    return NuSeries(dim, coeffs, order=M)


@dataclass(frozen=True)
class ExpParams:
    lambda_: Fraction
    mu: Fraction
    n: int
    alpha1: Fraction = Fraction(0)
    alpha2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("lambda_", "mu", "alpha1", "alpha2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @property
    def a(self) -> Fraction:
        return self.lambda_ * self.mu

    @property
    def branch(self) -> str:
        return "J" if self.a > 0 else "I"


@dataclass
class ExpSolution:
    """Six profiles, each equal to |lambda mu|^(half_power/2) times the stored series."""

    params: ExpParams
    M: int
    series: Dict[str, NuSeries]
    prefactor: Dict[str, object] = field(default_factory=dict)

    def __getitem__(self, name: str) -> NuSeries:
        return self.series[name]


def exp_solution(params: ExpParams, M: int) -> ExpSolution:
    """Regular exponential-type solution truncated at nu^M."""
    p = params
    if p.lambda_ == 0 or p.mu == 0:
        raise ValueError("lambda and mu must both be nonzero")
    n, lam, mu = p.n, p.lambda_, p.mu
    beta = BetaPoly.beta(n)
    S = scaled_bessel_nuseries(n, p.a, M)
    b = S * p.alpha1
    c = S * p.alpha2
    a1 = c * beta / lam
    a2 = c.derivative() / lam
    d2 = -b.derivative() / mu - a2
    d1 = b * (n - beta) / mu - c * beta / lam - (a2 + d2).mul_nu()
    series = {"a1": a1, "a2": a2, "b": b, "c": c, "d1": d1, "d2": d2}
    return ExpSolution(p, M, series, {"base": "lambda*mu", "value": p.a, "half_power": n})


def exp_closed_forms(params: ExpParams, M: int) -> Dict[str, NuSeries]:
    """The Bessel-of-order-(n+1) closed forms of a2 and d2, same prefactor convention.

    Using |a|^((n+1)/2) sqrt|a| = |a|^(n/2) * |a| and the sign of a, both
    branches reduce to a multiple of S_{n+1}.
    """
    p = params
    S1 = scaled_bessel_nuseries(p.n + 1, p.a, M, dim=p.n)
    return {
        "a2": S1 * (-p.alpha2 * p.a / p.lambda_),
        "d2": S1 * (p.a * (p.alpha1 / p.mu + p.alpha2 / p.lambda_)),
    }


def ode_residual(y: NuSeries, n: int, lambda_mu) -> NuSeries:
    """nu y'' + (n + 1) y' + lambda mu y."""
    d1 = y.derivative()
    return d1.derivative().mul_nu() + d1 * (n + 1) + y * Fraction(lambda_mu)


def exp_residuals(sol: ExpSolution) -> Dict[str, NuSeries]:
    """Residuals of the two three-equation systems and of both ODEs."""
    p = sol.params
    n, lam, mu = p.n, p.lambda_, p.mu
    beta = BetaPoly.beta(n)
    s = sol.series
    a1, a2, b, c, d1, d2 = (s[k] for k in ("a1", "a2", "b", "c", "d1", "d2"))
    ad1, ad2 = a1 + d1, a2 + d2
    return {
        "E1": a1 - c * beta / lam,
        "E2": a2 - c.derivative() / lam,
        "E3": a1.derivative() + a2.derivative().mul_nu() + c * mu - a2 * (beta - (n + 1)),
        "E4": ad1.derivative() + b * lam - ad2 * beta,
        "E5": ad1 - (b * (n - beta) + b.derivative().mul_nu()) / mu,
        "E6": ad2 + b.derivative() / mu,
        "ode_b": ode_residual(b, n, p.a),
        "ode_c": ode_residual(c, n, p.a),
    }


def bessel_derivative_identity_check(n: int, a, M: int) -> List[dict]:
    """Per-coefficient comparison of S_n' with -a S_{n+1} up to nu^(M-1)."""
    a = Fraction(a)
    lhs = scaled_bessel_nuseries(n, a, M, dim=max(n, 1)).derivative()
    rhs = scaled_bessel_nuseries(n + 1, a, M - 1, dim=max(n, 1)) * (-a)
    report = []
    for k in range(M):
        left, right = lhs.coefficient(k).coeffs[0], rhs.coefficient(k).coeffs[0]
        report.append({"k": k, "derivative": left, "target": right, "match": left == right})
    return report
