"""Axial-type solutions: the beta quotient ring, nu-series and Vekua recurrences.

Axial functions depend on (nu0, nu) = (|z0|^2, |z|^2) and take values in the
commutative algebra generated by beta, i.e. polynomials in beta modulo
beta (beta - 1) ... (beta - n).  A solution is stored as six tables
``k -> NuSeries`` holding the coefficient of nu0^k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .clifford import CliffordElement, beta as beta_element
from .polyfun import PolyFunction, nu as nu_poly, vector_var

__all__ = [
    "BetaPoly",
    "NuSeries",
    "AxialSolution",
    "beta_reduce",
    "vekua_solve_plain",
    "vekua_solve_z0power",
    "vekua_solve_z0barpower",
    "generalized_powers",
    "alpha_coefficient",
    "delta_coefficient",
    "vekua_residuals",
    "axial_expand",
]

Number = Union[int, Fraction]
FIELDS = ("a1", "a2", "b", "c", "d1", "d2")


def _char_poly(n: int) -> List[Fraction]:
    """Coefficients (low to high) of beta (beta - 1) ... (beta - n)."""
    poly = [Fraction(1)]
    for j in range(n + 1):
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= j * c
        poly = nxt
    return poly


def beta_reduce(coeffs: Sequence[Number], n: int) -> "BetaPoly":
    """Remainder of a polynomial in beta modulo the characteristic polynomial."""
    rem = [Fraction(c) for c in coeffs]
    char = _char_poly(n)
    top = len(char) - 1
    for deg in range(len(rem) - 1, top - 1, -1):
        lead = rem[deg]
        if lead:
            for i, c in enumerate(char):
                rem[deg - top + i] -= lead * c
    rem = rem[:top] + [Fraction(0)] * max(0, top - len(rem))
    return BetaPoly._raw(n, tuple(rem))


class BetaPoly:
    """Element of Q[beta] / (beta (beta - 1) ... (beta - n))."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence[Number] = ()):
        reduced = beta_reduce(coeffs, n)
        self.n = n
        self.coeffs = reduced.coeffs

    @classmethod
    def _raw(cls, n: int, coeffs: Tuple[Fraction, ...]) -> "BetaPoly":
        obj = object.__new__(cls)
        obj.n = n
        obj.coeffs = coeffs
        return obj

    @classmethod
    def const(cls, n: int, value: Number) -> "BetaPoly":
        return cls(n, [value])

    @classmethod
    def beta(cls, n: int) -> "BetaPoly":
        return cls(n, [0, 1])

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, BetaPoly):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def _lift(self, other) -> "BetaPoly":
        if isinstance(other, BetaPoly):
            if other.n != self.n:
                raise ValueError("BetaPoly dimension mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return BetaPoly.const(self.n, other)
        raise TypeError

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return BetaPoly._raw(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "BetaPoly":
        return BetaPoly._raw(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BetaPoly._raw(self.n, tuple(a * other for a in self.coeffs))
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return beta_reduce(prod, self.n)

    __rmul__ = __mul__

    def __truediv__(self, c: Number) -> "BetaPoly":
        c = Fraction(c)
        return BetaPoly._raw(self.n, tuple(a / c for a in self.coeffs))

    def evaluate(self, eigenvalue: Number) -> Fraction:
        """Value on the spinor sector where beta acts as ``eigenvalue``."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * eigenvalue + c
        return acc

    def to_clifford(self, with_z0: bool = False) -> CliffordElement:
        b = beta_element(self.n, with_z0)
        acc = CliffordElement.zero(self.n, with_z0)
        power = CliffordElement.scalar(self.n, 1, with_z0)
        for c in self.coeffs:
            if c:
                acc = acc + power.scale(c)
            power = power * b
        return acc

    def __repr__(self) -> str:
        return f"BetaPoly(n={self.n}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(str(c) if i == 0 else f"{c}*beta" + (f"^{i}" if i > 1 else ""))
        return " + ".join(parts) if parts else "0"


class NuSeries:
    """Sum of c_e nu^e with BetaPoly coefficients and rational exponents e.

    ``order`` is the largest exponent known exactly; terms above it are
    dropped.  ``order=None`` marks an exact (finite) expression.
    """

    __slots__ = ("n", "terms", "order")

    def __init__(self, n: int, terms: Mapping[Number, BetaPoly | Number] | None = None,
                 order: Optional[Number] = None):
        self.n = n
        self.order = None if order is None else Fraction(order)
        clean: Dict[Fraction, BetaPoly] = {}
        for e, c in (terms or {}).items():
            e = Fraction(e)
            if not isinstance(c, BetaPoly):
                c = BetaPoly.const(n, c)
            if self.order is not None and e > self.order:
                continue
            if c:
                clean[e] = clean[e] + c if e in clean else c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def zero(cls, n: int, order=None) -> "NuSeries":
        return cls(n, {}, order)

    @classmethod
    def monomial(cls, n: int, exponent: Number, coeff: BetaPoly | Number = 1, order=None) -> "NuSeries":
        return cls(n, {exponent: coeff}, order)

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Sequence, order=None) -> "NuSeries":
        return cls(n, {i: c for i, c in enumerate(coeffs)}, order)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, NuSeries):
            return self.n == other.n and self.terms == other.terms and self.order == other.order
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        return NotImplemented

    def agrees(self, other: "NuSeries") -> bool:
        """Equality of all coefficients up to the smaller of the two orders."""
        order = _min_order(self.order, other.order)
        return (self - other).truncate(order).terms == {}

    def truncate(self, order) -> "NuSeries":
        return NuSeries(self.n, self.terms, _min_order(self.order, order))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, BetaPoly)):
            other = NuSeries(self.n, {0: other})
        if not isinstance(other, NuSeries):
            return NotImplemented
        order = _min_order(self.order, other.order)
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged[e] + c if e in merged else c
        return NuSeries(self.n, merged, order)

    __radd__ = __add__

    def __neg__(self) -> "NuSeries":
        return NuSeries(self.n, {e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, BetaPoly)):
            return NuSeries(self.n, {e: c * other for e, c in self.terms.items()}, self.order)
        if isinstance(other, NuSeries):
            out: Dict[Fraction, BetaPoly] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    out[e] = out[e] + c1 * c2 if e in out else c1 * c2
            # product is exact up to (min exponent of one factor) + (order of the other)
            order = None
            for a, b in ((self, other), (other, self)):
                if a.order is not None:
                    low = min(b.terms, default=None)
                    cand = a.order + (low if low is not None else 0)
                    order = cand if order is None else min(order, cand)
            return NuSeries(self.n, out, order)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c: Number) -> "NuSeries":
        return NuSeries(self.n, {e: v / c for e, v in self.terms.items()}, self.order)

    def mul_nu(self, k: Number = 1) -> "NuSeries":
        order = None if self.order is None else self.order + k
        return NuSeries(self.n, {e + k: c for e, c in self.terms.items()}, order)

    def derivative(self) -> "NuSeries":
        order = None if self.order is None else self.order - 1
        return NuSeries(self.n, {e - 1: c * e for e, c in self.terms.items() if e != 0}, order)

    def exponents(self) -> List[Fraction]:
        return sorted(self.terms)

    def coefficient(self, e: Number) -> BetaPoly:
        return self.terms.get(Fraction(e), BetaPoly.const(self.n, 0))

    def __repr__(self) -> str:
        return f"NuSeries(n={self.n}, order={self.order}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*nu^{e}" for e, c in sorted(self.terms.items()))


def _min_order(a, b):
    if a is None:
        return None if b is None else Fraction(b)
    if b is None:
        return a
    return min(a, Fraction(b))


# ---------------------------------------------------------------------------
# axial solutions

KINDS = ("plain", "z0_power", "z0bar_power")


@dataclass
class AxialSolution:
    """Tables ``k -> NuSeries`` for the six radial profiles, k = 0..K."""

    kind: str
    n: int
    K: int
    tables: Dict[str, Dict[int, NuSeries]]
    s: Fraction = Fraction(0)
    M: Optional[int] = None

    def __getitem__(self, name: str) -> Dict[int, NuSeries]:
        return self.tables[name]

    @property
    def terminated(self) -> bool:
        return any(all(not self.tables[f].get(k) for f in FIELDS) for k in range(self.K + 1))

    def equals(self, other: "AxialSolution", k_max: Optional[int] = None) -> bool:
        k_max = min(self.K, other.K) if k_max is None else k_max
        for f in FIELDS:
            for k in range(k_max + 1):
                a = self.tables[f].get(k, NuSeries.zero(self.n))
                b = other.tables[f].get(k, NuSeries.zero(self.n))
                if not a.agrees(b):
                    return False
        return True


def _prep(series: NuSeries, M: Optional[int]) -> NuSeries:
    return series if M is None else series.truncate(M)


def _beta(n: int) -> BetaPoly:
    return BetaPoly.beta(n)


def _c_step(prev: NuSeries, n: int) -> NuSeries:
    """(n + 1) prev' + nu prev''."""
    d1 = prev.derivative()
    return d1 * (n + 1) + d1.derivative().mul_nu()


def vekua_solve_plain(a1_0: NuSeries, a2_0: NuSeries, d1_0: NuSeries, d2_0: NuSeries,
                      K: int, M: Optional[int] = None) -> AxialSolution:
    """Power-series solution of the two axial Vekua systems from a_j(0, nu), d_j(0, nu)."""
    n = a1_0.n
    a1_0, a2_0, d1_0, d2_0 = (_prep(x, M) for x in (a1_0, a2_0, d1_0, d2_0))
    b_ = _beta(n)
    t = {f: {} for f in FIELDS}
    t["a1"][0], t["a2"][0], t["d1"][0], t["d2"][0] = a1_0, a2_0, d1_0, d2_0
    t["c"][0] = a2_0 * (b_ - (n + 1)) - a1_0.derivative() - a2_0.derivative().mul_nu()
    t["b"][0] = (a2_0 + d2_0) * b_ - a1_0.derivative() - d1_0.derivative()
    for k in range(1, K + 1):
        c_prev, b_prev = t["c"][k - 1], t["b"][k - 1]
        t["c"][k] = _c_step(c_prev, n) / (-k * (k + 1))
        t["b"][k] = _c_step(b_prev, n) / (-k * (k + 1))
        t["a1"][k] = c_prev * b_ / k
        t["a2"][k] = c_prev.derivative() / k
        t["d1"][k] = (b_prev * (n - b_) + b_prev.derivative().mul_nu() - c_prev * b_) / k
        t["d2"][k] = -(b_prev.derivative() + c_prev.derivative()) / k
    return AxialSolution("plain", n, K, t, M=M)


def _check_s(s: int) -> None:
    if s < 1:
        raise ValueError("s must be a positive integer")


def vekua_solve_z0power(c_0: NuSeries, d1_0: NuSeries, d2_0: NuSeries, s: int,
                        K: int, M: Optional[int] = None) -> AxialSolution:
    """Axial solutions with A = z0^s (a1 + z^dagger z a2), from c(0, nu), d_j(0, nu)."""
    _check_s(s)
    n = c_0.n
    c_0, d1_0, d2_0 = (_prep(x, M) for x in (c_0, d1_0, d2_0))
    b_ = _beta(n)
    t = {f: {} for f in FIELDS}
    t["c"][0], t["d1"][0], t["d2"][0] = c_0, d1_0, d2_0
    t["b"][0] = (d2_0 * b_ - d1_0.derivative()) / (s + 1)
    for k in range(1, K + 1):
        t["c"][k] = _c_step(t["c"][k - 1], n) / (-k * (k + s - 1))
        t["b"][k] = _c_step(t["b"][k - 1], n) / (-k * (k + s + 1))
    for k in range(K + 1):
        t["a1"][k] = t["c"][k] * b_ / (k + s)
        t["a2"][k] = t["c"][k].derivative() / (k + s)
        if k >= 1:
            b_prev = t["b"][k - 1]
            t["d1"][k] = ((b_prev * (n - b_) + b_prev.derivative().mul_nu()) / k
                          - t["c"][k] * b_ / (k + s))
            t["d2"][k] = -b_prev.derivative() / k - t["c"][k].derivative() / (k + s)
    return AxialSolution("z0_power", n, K, t, s=Fraction(s), M=M)


def vekua_solve_z0barpower(a1_0: NuSeries, a2_0: NuSeries, b_0: NuSeries, s: int,
                           K: int, M: Optional[int] = None) -> AxialSolution:
    """Axial solutions with A = z̄0^s (a1 + z^dagger z a2), from a_j(0, nu), b(0, nu)."""
    _check_s(s)
    n = a1_0.n
    a1_0, a2_0, b_0 = (_prep(x, M) for x in (a1_0, a2_0, b_0))
    b_ = _beta(n)
    t = {f: {} for f in FIELDS}
    t["a1"][0], t["a2"][0], t["b"][0] = a1_0, a2_0, b_0
    t["c"][0] = (a2_0 * (b_ - (n + 1)) - a1_0.derivative() - a2_0.derivative().mul_nu()) / (s + 1)
    for k in range(1, K + 1):
        t["c"][k] = _c_step(t["c"][k - 1], n) / (-k * (k + s + 1))
        t["b"][k] = _c_step(t["b"][k - 1], n) / (-k * (k + s - 1))
        t["a1"][k] = t["c"][k - 1] * b_ / k
        t["a2"][k] = t["c"][k - 1].derivative() / k
    for k in range(K + 1):
        bk = t["b"][k]
        t["d1"][k] = (bk * (n - b_) + bk.derivative().mul_nu()) / (k + s) - t["a1"][k]
        t["d2"][k] = -bk.derivative() / (k + s) - t["a2"][k]
    return AxialSolution("z0bar_power", n, K, t, s=Fraction(s), M=M)


def _falling(s: Fraction, k: int, shift: int = 0) -> Fraction:
    out = Fraction(1)
    for l in range(1, k + 1):
        out *= shift + s - l
    return out


def _fact(k: int) -> int:
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


def alpha_coefficient(k: int, s, a1, a2, d1, d2, n: int) -> BetaPoly:
    """Coefficient of nu^(s-k-1) in b_k for generalized-power data."""
    s = Fraction(s)
    num = _falling(s, k) * _falling(s, k, n) * (-1) ** k
    core = BetaPoly.beta(n) * Fraction(a2 + d2) - Fraction(a1 + d1) * s
    return core * (num / ((k + 1) * _fact(k) ** 2))


def delta_coefficient(k: int, s, a1, a2, d1, d2, n: int) -> BetaPoly:
    """Coefficient of nu^(s-k-1) in c_k for generalized-power data."""
    s = Fraction(s)
    num = _falling(s, k) * _falling(s, k, n) * (-1) ** k
    core = (BetaPoly.beta(n) - (n + s)) * Fraction(a2) - Fraction(a1) * s
    return core * (num / ((k + 1) * _fact(k) ** 2))


def generalized_powers(s, alpha1, alpha2, delta1, delta2, K: int, n: int) -> AxialSolution:
    """Closed-form solution for a_{0,1} = alpha1 nu^s, a_{0,2} = alpha2 nu^(s-1), etc."""
    s = Fraction(s)
    args = (s, Fraction(alpha1), Fraction(alpha2), Fraction(delta1), Fraction(delta2), n)
    alpha = [alpha_coefficient(k, *args) for k in range(K + 1)]
    delta = [delta_coefficient(k, *args) for k in range(K + 1)]
    b_ = BetaPoly.beta(n)
    mono = NuSeries.monomial
    t = {f: {} for f in FIELDS}
    t["a1"][0] = mono(n, s, Fraction(alpha1))
    t["a2"][0] = mono(n, s - 1, Fraction(alpha2))
    t["d1"][0] = mono(n, s, Fraction(delta1))
    t["d2"][0] = mono(n, s - 1, Fraction(delta2))
    for k in range(K + 1):
        t["b"][k] = mono(n, s - k - 1, alpha[k])
        t["c"][k] = mono(n, s - k - 1, delta[k])
        if k >= 1:
            al, de = alpha[k - 1], delta[k - 1]
            t["a1"][k] = mono(n, s - k, b_ * de / k)
            t["a2"][k] = mono(n, s - k - 1, de * ((s - k) / k))
            t["d1"][k] = mono(n, s - k, (al * ((n + s - k) - b_) - b_ * de) / k)
            t["d2"][k] = mono(n, s - k - 1, (al + de) * (-(s - k) / k))
    return AxialSolution("plain", n, K, t, s=s)


# ---------------------------------------------------------------------------
# residuals of the axial systems


def _table(sol: AxialSolution, name: str, k: int) -> NuSeries:
    return sol.tables[name].get(k, NuSeries.zero(sol.n))


def vekua_residuals(sol: AxialSolution) -> Dict[str, Dict[int, NuSeries]]:
    """Residuals of the six axial equations at each nu0-order k < K."""
    n, s = sol.n, sol.s
    b_ = BetaPoly.beta(n)
    T = lambda name, k: _table(sol, name, k)  # noqa: E731
    out: Dict[str, Dict[int, NuSeries]] = {f"R{i}": {} for i in range(1, 7)}
    for k in range(sol.K):
        a1, a2, b, c, d1, d2 = (T(f, k) for f in FIELDS)
        da1, da2, db, dc, dd1, dd2 = ((k + 1) * T(f, k + 1) for f in FIELDS)  # d/dnu0
        ad1, ad2 = a1 + d1, a2 + d2
        if sol.kind == "plain":
            R = [
                da1 - c * b_,
                da2 - c.derivative(),
                a1.derivative() + a2.derivative().mul_nu() + c * k - a2 * (b_ - (n + 1)) + c,
                ad1.derivative() + b * k - ad2 * b_ + b,
                (da1 + dd1) - b.derivative().mul_nu() - b * (n - b_),
                (da2 + dd2) + b.derivative(),
            ]
        elif sol.kind == "z0_power":
            R = [
                a1 * (k + s) - c * b_,
                a2 * (k + s) - c.derivative(),
                a1.derivative() + a2.derivative().mul_nu() + dc - a2 * (b_ - (n + 1)),
                ad1.derivative() + b * (k + s + 1) - ad2 * b_,
                (da1 + dd1) - b.derivative().mul_nu() - b * (n - b_),
                (da2 + dd2) + b.derivative(),
            ]
        elif sol.kind == "z0bar_power":
            R = [
                da1 - c * b_,
                da2 - c.derivative(),
                a1.derivative() + a2.derivative().mul_nu() + c * (k + s + 1) - a2 * (b_ - (n + 1)),
                ad1.derivative() + db - ad2 * b_,
                ad1 * (k + s) - b.derivative().mul_nu() - b * (n - b_),
                ad2 * (k + s) + b.derivative(),
            ]
        else:
            raise ValueError(f"unknown axial kind {sol.kind!r}")
        for i, r in enumerate(R, start=1):
            out[f"R{i}"][k] = r
    return out


def residuals_vanish(res: Mapping[str, Mapping[int, NuSeries]]) -> bool:
    return all(not r for table in res.values() for r in table.values())


# ---------------------------------------------------------------------------
# expansion to Clifford-valued polynomials


def axial_expand(sol: AxialSolution) -> PolyFunction:
    """Substitute nu0 = z0 z̄0, nu = |z|^2 and beta, then assemble f in C_{2n+2}."""
    from .ck import Decomposition, _shift, compose

    if not sol.terminated:
        raise ValueError("solution does not terminate within K; cannot expand to a polynomial")
    n = sol.n
    nu_powers: Dict[int, PolyFunction] = {}

    def profile(series: NuSeries) -> PolyFunction:
        out = PolyFunction.zero(n, True)
        for e, coeff in series.terms.items():
            if e.denominator != 1 or e < 0:
                raise ValueError(f"exponent {e} is not a nonnegative integer; no polynomial expansion")
            e = int(e)
            if e not in nu_powers:
                nu_powers[e] = nu_poly(n, True) ** e
            out = out + nu_powers[e].left_mul(coeff.to_clifford(True))
        return out

    z = vector_var("z", n, True)
    zd = vector_var("zdagger", n, True)
    zdz = zd * z
    s = int(sol.s)
    if sol.kind == "plain":
        pw = {"A": (0, 0), "B": (1, 0), "C": (0, 1), "D": (0, 0)}
    elif sol.kind == "z0_power":
        pw = {"A": (s, 0), "B": (s + 1, 0), "C": (s - 1, 0), "D": (s, 0)}
    else:
        pw = {"A": (0, s), "B": (0, s - 1), "C": (0, s + 1), "D": (0, s)}
    parts = {name: PolyFunction.zero(n, True) for name in "ABCD"}
    for k in range(sol.K + 1):
        T = lambda name: _table(sol, name, k)  # noqa: E731
        pieces = {
            "A": profile(T("a1")) + zdz * profile(T("a2")),
            "B": zd * profile(T("b")),
            "C": z * profile(T("c")),
            "D": profile(T("d1")) + zdz * profile(T("d2")),
        }
        for name, g in pieces.items():
            a, b = pw[name]
            parts[name] = parts[name] + _shift(g, a + k, b + k)
    return compose(Decomposition(parts["A"], parts["B"], parts["C"], parts["D"]))
