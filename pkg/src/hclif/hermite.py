"""Hermitian Clifford-Hermite polynomials and Gaussian CK coefficients.

The four polynomial families are defined by applying Dirac operators and
powers of the Laplacian to the weight exp(-|z|^2/2).  Their Laguerre-type
closed forms are evaluated independently so the two routes can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Optional, Tuple

from .clifford import CliffordElement, beta
from .polyfun import (
    GAUSSIAN,
    PolyFunction,
    dirac_z,
    dirac_zdagger,
    laplacian,
    nu,
    vector_var,
)

__all__ = [
    "LaguerrePoly",
    "HermitePoly",
    "laguerre",
    "hermite_rodrigues",
    "hermite_closed_form",
    "gaussian_ck_coefficients",
    "gaussian_class2",
    "gaussian_class3",
]


@dataclass(frozen=True)
class LaguerrePoly:
    """Generalized Laguerre polynomial L_p^(alpha) with exact coefficients."""

    p: int
    alpha: Fraction
    coeffs: Tuple[Fraction, ...]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, arg: PolyFunction) -> PolyFunction:
        """Evaluate at a scalar polynomial argument (Horner scheme)."""
        acc = PolyFunction.zero(arg.n, arg.has_z0)
        for c in reversed(self.coeffs):
            acc = acc * arg + PolyFunction.constant(arg.n, c, arg.has_z0)
        return acc


def laguerre(p: int, alpha=0) -> LaguerrePoly:
    """L_p^(alpha)(x) = sum_i (-1)^i binom(p + alpha, p - i) x^i / i!."""
    if p < 0:
        raise ValueError("degree p must be nonnegative")
    alpha = Fraction(alpha)
    coeffs = []
    for i in range(p + 1):
        binom = Fraction(1)
        for j in range(1, p - i + 1):
            binom = binom * (alpha + i + j) / j
        coeffs.append(binom * (-1) ** i / factorial(i))
    return LaguerrePoly(p, alpha, tuple(coeffs))


@dataclass(frozen=True)
class HermitePoly:
    type_id: int
    p: int
    n: int
    value: PolyFunction

    @property
    def degree(self) -> int:
        return 2 * self.p + (1 if self.type_id in (1, 2) else 2)


def _check_type(type_id: int) -> None:
    if type_id not in (1, 2, 3, 4):
        raise ValueError(f"invalid Hermite type {type_id!r}; expected 1..4")


def hermite_rodrigues(type_id: int, p: int, n: int) -> HermitePoly:
    """Polynomial factor of D Delta^p exp(-|z|^2/2) for the Dirac combination of ``type_id``.

    Type 1: dirac_zdagger; 2: dirac_z; 3: dirac_z dirac_zdagger; 4: dirac_zdagger dirac_z.
    """
    _check_type(type_id)
    if p < 0 or n < 1:
        raise ValueError("need p >= 0 and n >= 1")
    g = PolyFunction.gaussian(n)
    for _ in range(p):
        g = laplacian(g)
    if type_id == 1:
        g = dirac_zdagger(g)
    elif type_id == 2:
        g = dirac_z(g)
    elif type_id == 3:
        g = dirac_z(dirac_zdagger(g))
    else:
        g = dirac_zdagger(dirac_z(g))
    return HermitePoly(type_id, p, n, g.strip_weight())


def _half_nu(n: int) -> PolyFunction:
    return nu(n).scale(Fraction(1, 2))


def _beta_or_eigen(n: int, eigenvalue: Optional[int]):
    if eigenvalue is None:
        return beta(n)
    return CliffordElement.scalar(n, eigenvalue)


def hermite_closed_form(type_id: int, p: int, n: int, eigenvalue: Optional[int] = None) -> HermitePoly:
    """Laguerre form of the Hermite polynomials.

    With ``eigenvalue=l`` the Euler element beta is replaced by the number l,
    which is valid on spinor-valued outputs of homogeneity l.
    """
    _check_type(type_id)
    prefactor = Fraction((-1) ** (p - 1)) * Fraction(2) ** (p - 1) * factorial(p)
    x = _half_nu(n)
    Ln = laguerre(p, n).compose(x)
    z, zd = vector_var("z", n), vector_var("zdagger", n)
    b = _beta_or_eigen(n, eigenvalue)
    if type_id == 1:
        value = z * Ln
    elif type_id == 2:
        value = zd * Ln
    else:
        Ln1 = laguerre(p, n + 1).compose(x)
        if type_id == 3:
            value = Ln.left_mul(b) - (zd * z * Ln1).scale(Fraction(1, 2))
        else:
            nb = CliffordElement.scalar(n, n) - b
            value = Ln.left_mul(nb) - (z * zd * Ln1).scale(Fraction(1, 2))
    return HermitePoly(type_id, p, n, value.scale(prefactor))


def _L(p: int, alpha: int, n: int) -> PolyFunction:
    return laguerre(p, alpha).compose(_half_nu(n))


def _H3_form(k: int, n: int) -> PolyFunction:
    """beta L_{k-1}^n - (1/2) z^dagger z L_{k-1}^{n+1}."""
    z, zd = vector_var("z", n), vector_var("zdagger", n)
    return _L(k - 1, n, n).left_mul(beta(n)) - (zd * z * _L(k - 1, n + 1, n)).scale(Fraction(1, 2))


def _H4_form(k: int, n: int) -> PolyFunction:
    """(n - beta) L_{k-1}^n - (1/2) z z^dagger L_{k-1}^{n+1}."""
    z, zd = vector_var("z", n), vector_var("zdagger", n)
    nb = CliffordElement.scalar(n, n) - beta(n)
    return _L(k - 1, n, n).left_mul(nb) - (z * zd * _L(k - 1, n + 1, n)).scale(Fraction(1, 2))


def _weighted(g: PolyFunction) -> PolyFunction:
    return g.with_weight(GAUSSIAN)


def gaussian_ck_coefficients(k: int, n: int, which: str = "ABCD") -> Dict[str, PolyFunction]:
    """Laguerre-form Class I coefficients for the initial data A0 = exp(-|z|^2/2), D0 = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0 and any(name in which for name in "AD"):
        raise ValueError("A_k and D_k closed forms require k >= 1 (A_0, D_0 are the initial data)")
    z, zd = vector_var("z", n), vector_var("zdagger", n)
    out = {}
    if "A" in which:
        out["A"] = _H3_form(k, n).scale(Fraction(1, 2 ** k * k * factorial(k)))
    if "B" in which:
        out["B"] = (zd * _L(k, n, n)).scale(Fraction(1, 2 ** (k + 1) * factorial(k + 1)))
    if "C" in which:
        out["C"] = (z * _L(k, n, n)).scale(Fraction(1, 2 ** (k + 1) * factorial(k + 1)))
    if "D" in which:
        zdz = zd * z
        body = (_L(k, n, n).scale(k)
                - _L(k - 1, n, n).left_mul(beta(n).scale(2) + CliffordElement.scalar(n, k))
                + zdz * _L(k - 1, n + 1, n))
        out["D"] = body.scale(Fraction(1, 2 ** k * k * factorial(k)))
    return {name: _weighted(g) for name, g in out.items()}


def _check_s(s: int) -> None:
    if s < 1:
        raise ValueError("s must be a positive integer")


def gaussian_class2(k: int, s: int, n: int) -> Dict[str, PolyFunction]:
    """Class II coefficients for C0 = D0 = exp(-|z|^2/2) (k = 0 returns the data for C, D)."""
    _check_s(s)
    z, zd = vector_var("z", n), vector_var("zdagger", n)
    fs, fs1 = factorial(s), factorial(s - 1)
    out = {
        "A": (zd * _L(k, n, n)).scale(Fraction(-fs1, 2 ** (k + 1) * factorial(s + k))),
        "B": (zd * _L(k, n, n)).scale(Fraction(fs, 2 ** (k + 1) * factorial(s + 1 + k))),
    }
    if k == 0:
        out["C"] = PolyFunction.constant(n, 1)
        out["D"] = PolyFunction.constant(n, 1)
    else:
        out["C"] = _H4_form(k, n).scale(Fraction(fs1, 2 ** k * k * factorial(s + k - 1)))
        out["D"] = (_H4_form(k, n).scale(Fraction(2 * s, k)) + zd * _L(k, n, n)).scale(
            Fraction(fs1, 2 ** (k + 1) * factorial(s + k)))
    return {name: _weighted(g) for name, g in out.items()}


def gaussian_class3(k: int, s: int, n: int) -> Dict[str, PolyFunction]:
    """Class III coefficients for A0 = B0 = exp(-|z|^2/2) (k = 0 returns the data for A, B)."""
    _check_s(s)
    z = vector_var("z", n)
    fs, fs1 = factorial(s), factorial(s - 1)
    out = {"C": (z * _L(k, n, n)).scale(Fraction(fs, 2 ** (k + 1) * factorial(s + k + 1)))}
    if k == 0:
        out["A"] = PolyFunction.constant(n, 1)
        out["B"] = PolyFunction.constant(n, 1)
        out["D"] = -(z.scale(Fraction(1, 2 * s)) + PolyFunction.constant(n, 1))
    else:
        out["A"] = _H3_form(k, n).scale(Fraction(fs, 2 ** k * k * factorial(s + k)))
        out["B"] = _H3_form(k, n).scale(Fraction(fs1, 2 ** k * k * factorial(s + k - 1)))
        out["D"] = -(z * _L(k, n, n) + _H3_form(k, n).scale(Fraction(2 * s, k))).scale(
            Fraction(fs1, 2 ** (k + 1) * factorial(s + k)))
    return {name: _weighted(g) for name, g in out.items()}
