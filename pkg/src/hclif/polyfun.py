"""Clifford-valued polynomials in the formal variables z_j, z̄_j (and z_0, z̄_0).

A :class:`PolyFunction` may carry the Gaussian weight exp(-|z|^2 / 2); the
stored polynomial is then implicitly multiplied by it and derivatives use the
product rule.  Variables are named ``z1..zn``, ``zb1..zbn``, ``z0``, ``zb0``.

Internally a function is a flat dictionary ``(exponents, blade_mask) ->
GaussianRational`` where ``exponents`` is a tuple of length ``2n + 2``
ordered as (z_1..z_n, z̄_1..z̄_n, z_0, z̄_0).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple

from .clifford import (
    CliffordElement,
    GaussianRational,
    _mask_product,
    beta,
    witt,
    witt_dagger,
)

__all__ = [
    "PolyFunction",
    "partial",
    "dirac_z",
    "dirac_zdagger",
    "dirac_X",
    "laplacian",
    "vector_var",
    "restrict_z0",
    "nu",
]

NONE = "none"
GAUSSIAN = "gaussian"
_HALF = Fraction(1, 2)

Monomial = Tuple[int, ...]
_VAR_RE = re.compile(r"^(zb|z)(\d+)$")


def var_index(var: str, n: int, has_z0: bool) -> int:
    """Position of a variable name inside an exponent tuple."""
    match = _VAR_RE.match(var)
    if not match:
        raise ValueError(f"unknown variable {var!r}")
    conj, j = match.group(1) == "zb", int(match.group(2))
    if j == 0:
        if not has_z0:
            raise ValueError(f"variable {var!r} requires has_z0=True")
        return 2 * n + (1 if conj else 0)
    if not 1 <= j <= n:
        raise ValueError(f"unknown variable {var!r} for n={n}")
    return (n if conj else 0) + j - 1


def var_name(pos: int, n: int) -> str:
    if pos == 2 * n:
        return "z0"
    if pos == 2 * n + 1:
        return "zb0"
    if pos < n:
        return f"z{pos + 1}"
    return f"zb{pos - n + 1}"


class PolyFunction:
    """Clifford-coefficient polynomial, optionally Gaussian-weighted."""

    __slots__ = ("n", "has_z0", "weight", "_data")

    def __init__(self, n: int, has_z0: bool = False, weight: str = NONE,
                 terms: Mapping[Monomial, CliffordElement] | None = None):
        if weight not in (NONE, GAUSSIAN):
            raise ValueError(f"unknown weight {weight!r}")
        self.n = n
        self.has_z0 = has_z0
        self.weight = weight
        data: Dict[Tuple[Monomial, int], GaussianRational] = {}
        for mono, coeff in (terms or {}).items():
            mono = self._check_mono(tuple(mono))
            if not isinstance(coeff, CliffordElement):
                coeff = CliffordElement.scalar(n, coeff, has_z0)
            elif coeff.with_z0 != has_z0:
                coeff = coeff.embed() if has_z0 else coeff.restrict()
            if coeff.n != n:
                raise ValueError("coefficient dimension mismatch")
            for mask, c in coeff.terms.items():
                key = (mono, mask)
                v = data.get(key)
                v = c if v is None else v + c
                if v:
                    data[key] = v
                else:
                    data.pop(key, None)
        self._data = data

    def _check_mono(self, mono: Monomial) -> Monomial:
        if len(mono) != 2 * self.n + 2 or min(mono, default=0) < 0:
            raise ValueError(f"bad exponent tuple {mono!r}")
        if not self.has_z0 and (mono[-1] or mono[-2]):
            raise ValueError("z0 exponents require has_z0=True")
        return mono

    @classmethod
    def _raw(cls, n, has_z0, weight, data) -> "PolyFunction":
        obj = object.__new__(cls)
        obj.n = n
        obj.has_z0 = has_z0
        obj.weight = weight
        obj._data = data
        return obj

    # constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int, has_z0: bool = False, weight: str = NONE) -> "PolyFunction":
        return cls._raw(n, has_z0, weight, {})

    @classmethod
    def constant(cls, n: int, value=1, has_z0: bool = False, weight: str = NONE) -> "PolyFunction":
        zero = (0,) * (2 * n + 2)
        return cls(n, has_z0, weight, {zero: value})

    @classmethod
    def monomial(cls, n: int, exponents: Mapping[str, int], coeff=1,
                 has_z0: bool = False, weight: str = NONE) -> "PolyFunction":
        mono = [0] * (2 * n + 2)
        for var, k in exponents.items():
            mono[var_index(var, n, has_z0)] += k
        return cls(n, has_z0, weight, {tuple(mono): coeff})

    @classmethod
    def gaussian(cls, n: int, has_z0: bool = False) -> "PolyFunction":
        """The weight exp(-|z|^2/2) itself."""
        return cls.constant(n, 1, has_z0, GAUSSIAN)

    # structure --------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, CliffordElement]:
        grouped: Dict[Monomial, Dict[int, GaussianRational]] = {}
        for (mono, mask), c in self._data.items():
            grouped.setdefault(mono, {})[mask] = c
        return {mono: CliffordElement._raw(self.n, self.has_z0, t) for mono, t in grouped.items()}

    def items(self) -> Iterator[Tuple[Tuple[Monomial, int], GaussianRational]]:
        return iter(self._data.items())

    def is_zero(self) -> bool:
        return not self._data

    def __bool__(self) -> bool:
        return bool(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def same_space(self, other: "PolyFunction") -> None:
        if (self.n, self.has_z0) != (other.n, other.has_z0):
            raise ValueError(
                f"space mismatch: (n={self.n}, has_z0={self.has_z0}) vs "
                f"(n={other.n}, has_z0={other.has_z0})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyFunction):
            if isinstance(other, (int, Fraction, GaussianRational)) and not other:
                return not self._data
            return NotImplemented
        if not self._data and not other._data:
            return (self.n, self.has_z0) == (other.n, other.has_z0)
        return (self.n == other.n and self.has_z0 == other.has_z0
                and self.weight == other.weight and self._data == other._data)

    def __hash__(self):
        return hash((self.n, self.has_z0, self.weight, frozenset(self._data.items())))

    def degrees(self) -> set:
        """Set of total degrees (all variables) of the stored monomials."""
        return {sum(mono) for (mono, _) in self._data}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def z0_orders(self) -> set:
        """Set of combined z0/z̄0 degrees of the stored monomials."""
        return {mono[-1] + mono[-2] for (mono, _) in self._data}

    def max_generator(self) -> int:
        return max((mask.bit_length() for (_, mask) in self._data), default=0)

    # arithmetic -------------------------------------------------------

    def _combine(self, other: "PolyFunction", sign: int) -> "PolyFunction":
        self.same_space(other)
        if self.weight != other.weight:
            if not other._data:
                return self
            if not self._data:
                return other if sign > 0 else -other
            raise ValueError("cannot add functions with different weights")
        out = dict(self._data)
        for key, c in other._data.items():
            if sign < 0:
                c = -c
            v = out.get(key)
            v = c if v is None else v + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return PolyFunction._raw(self.n, self.has_z0, self.weight, out)

    def _lift(self, other) -> "PolyFunction":
        if isinstance(other, PolyFunction):
            return other
        if isinstance(other, CliffordElement):
            return PolyFunction.constant(self.n, other, self.has_z0, self.weight)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return PolyFunction.constant(self.n, other, self.has_z0, self.weight)
        raise TypeError

    def __add__(self, other):
        try:
            return self._combine(self._lift(other), 1)
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return self._combine(self._lift(other), -1)
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "PolyFunction":
        return PolyFunction._raw(self.n, self.has_z0, self.weight,
                                 {k: -v for k, v in self._data.items()})

    def scale(self, c) -> "PolyFunction":
        c = GaussianRational.coerce(c)
        if not c:
            return PolyFunction.zero(self.n, self.has_z0, self.weight)
        return PolyFunction._raw(self.n, self.has_z0, self.weight,
                                 {k: v * c for k, v in self._data.items()})

    def __truediv__(self, c):
        return self.scale(GaussianRational(1) / GaussianRational.coerce(c))

    def left_mul(self, elem: CliffordElement) -> "PolyFunction":
        """elem * self with elem a constant Clifford number."""
        return PolyFunction._raw(self.n, self.has_z0, self.weight,
                                 _left_mul(self._coerce_elem(elem).terms, self._data))

    def right_mul(self, elem: CliffordElement) -> "PolyFunction":
        elem = self._coerce_elem(elem)
        out: Dict = {}
        for (mono, mask), c in self._data.items():
            for mb, cb in elem.terms.items():
                sign, m2 = _mask_product(mask, mb)
                v = c * cb
                _acc(out, (mono, m2), -v if sign < 0 else v)
        return PolyFunction._raw(self.n, self.has_z0, self.weight, _prune(out))

    def _coerce_elem(self, elem: CliffordElement) -> CliffordElement:
        if elem.n != self.n:
            raise ValueError("Clifford dimension mismatch")
        if elem.with_z0 != self.has_z0:
            if not self.has_z0:
                raise ValueError("coefficient lives in C_{2n+2} but function has no z0")
            elem = elem.embed()
        return elem

    def __mul__(self, other):
        if isinstance(other, PolyFunction):
            return poly_mul(self, other)
        if isinstance(other, CliffordElement):
            return self.right_mul(other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, CliffordElement):
            return self.left_mul(other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "PolyFunction":
        out = PolyFunction.constant(self.n, 1, self.has_z0)
        for _ in range(k):
            out = out * self
        return out

    # conversions ------------------------------------------------------

    def embed(self) -> "PolyFunction":
        """View a function of z as a function of (z0, z) in C_{2n+2}."""
        if self.has_z0:
            return self
        return PolyFunction._raw(self.n, True, self.weight, dict(self._data))

    def strip_weight(self) -> "PolyFunction":
        """Polynomial factor of a weighted function."""
        return PolyFunction._raw(self.n, self.has_z0, NONE, dict(self._data))

    def with_weight(self, weight: str = GAUSSIAN) -> "PolyFunction":
        return PolyFunction._raw(self.n, self.has_z0, weight, dict(self._data))

    def map_coefficients(self, fn) -> "PolyFunction":
        terms = {mono: fn(c) for mono, c in self.terms.items()}
        return PolyFunction(self.n, self.has_z0, self.weight, terms)

    def __repr__(self) -> str:
        return (f"PolyFunction(n={self.n}, has_z0={self.has_z0}, weight={self.weight!r}, "
                f"{len(self._data)} terms)")

    def __str__(self) -> str:
        if not self._data:
            return "0"
        parts = []
        for mono, coeff in sorted(self.terms.items()):
            vars_ = "*".join(
                f"{var_name(i, self.n)}^{k}" if k > 1 else var_name(i, self.n)
                for i, k in enumerate(mono) if k)
            parts.append(f"({coeff})" + (f"*{vars_}" if vars_ else ""))
        body = " + ".join(parts)
        if self.weight == GAUSSIAN:
            body = f"[{body}]*exp(-|z|^2/2)"
        return body


def _acc(out: Dict, key, c: GaussianRational) -> None:
    v = out.get(key)
    out[key] = c if v is None else v + c


def _prune(out: Dict) -> Dict:
    return {k: v for k, v in out.items() if v}


def _left_mul(elem_terms: Mapping[int, GaussianRational], data: Mapping) -> Dict:
    out: Dict = {}
    for (mono, mask), c in data.items():
        for ma, ca in elem_terms.items():
            sign, m2 = _mask_product(ma, mask)
            v = ca * c
            _acc(out, (mono, m2), -v if sign < 0 else v)
    return _prune(out)


def poly_mul(x: PolyFunction, y: PolyFunction) -> PolyFunction:
    """Pointwise Clifford product x * y."""
    x.same_space(y)
    if x.weight == GAUSSIAN and y.weight == GAUSSIAN:
        raise ValueError("product of two Gaussian-weighted functions is not supported")
    weight = GAUSSIAN if GAUSSIAN in (x.weight, y.weight) else NONE
    out: Dict = {}
    for (ma_mono, ma), ca in x._data.items():
        for (mb_mono, mb), cb in y._data.items():
            sign, m2 = _mask_product(ma, mb)
            mono = tuple(a + b for a, b in zip(ma_mono, mb_mono))
            v = ca * cb
            _acc(out, (mono, m2), -v if sign < 0 else v)
    return PolyFunction._raw(x.n, x.has_z0, weight, _prune(out))


def _partial_pos(g: PolyFunction, pos: int) -> PolyFunction:
    n = g.n
    out: Dict = {}
    for (mono, mask), c in g._data.items():
        k = mono[pos]
        if k:
            m2 = mono[:pos] + (k - 1,) + mono[pos + 1:]
            _acc(out, (m2, mask), c * k)
    if g.weight == GAUSSIAN and pos < 2 * n:
        # d/dz_j e^w = -z̄_j e^w / 2 and d/dz̄_j e^w = -z_j e^w / 2
        partner = pos + n if pos < n else pos - n
        for (mono, mask), c in g._data.items():
            m2 = mono[:partner] + (mono[partner] + 1,) + mono[partner + 1:]
            _acc(out, (m2, mask), c * (-_HALF))
    return PolyFunction._raw(n, g.has_z0, g.weight, _prune(out))


def partial(var: str, g: PolyFunction) -> PolyFunction:
    """Formal partial derivative with respect to ``var`` (e.g. ``'zb2'``)."""
    return _partial_pos(g, var_index(var, g.n, g.has_z0))


def _witt_terms(j: int, n: int, has_z0: bool, dagger: bool):
    return (witt_dagger if dagger else witt)(j, n, has_z0).terms


def dirac_z(g: PolyFunction) -> PolyFunction:
    """sum_j f_j^dagger d/dz_j acting from the left."""
    out = PolyFunction.zero(g.n, g.has_z0, g.weight)
    for j in range(1, g.n + 1):
        d = _partial_pos(g, j - 1)
        if d:
            out = out + PolyFunction._raw(
                g.n, g.has_z0, g.weight, _left_mul(_witt_terms(j, g.n, g.has_z0, True), d._data))
    return out


def dirac_zdagger(g: PolyFunction) -> PolyFunction:
    """sum_j f_j d/dz̄_j acting from the left."""
    out = PolyFunction.zero(g.n, g.has_z0, g.weight)
    for j in range(1, g.n + 1):
        d = _partial_pos(g, g.n + j - 1)
        if d:
            out = out + PolyFunction._raw(
                g.n, g.has_z0, g.weight, _left_mul(_witt_terms(j, g.n, g.has_z0, False), d._data))
    return out


def dirac_X(g: PolyFunction) -> PolyFunction:
    """Orthogonal Dirac operator 2 (dirac_zdagger - dirac_z)."""
    return (dirac_zdagger(g) - dirac_z(g)).scale(2)


def laplacian(g: PolyFunction) -> PolyFunction:
    """Laplacian in the 2n real variables, 4 sum_j d/dz_j d/dz̄_j.

    Equal to 4 (dirac_z dirac_zdagger + dirac_zdagger dirac_z) by the Witt
    duality relations; the test-suite checks that factorization.
    """
    out = PolyFunction.zero(g.n, g.has_z0, g.weight)
    for j in range(g.n):
        out = out + _partial_pos(_partial_pos(g, g.n + j), j)
    return out.scale(4)


def nu(n: int, has_z0: bool = False) -> PolyFunction:
    """Scalar polynomial |z|^2 = sum_j z_j z̄_j."""
    out = PolyFunction.zero(n, has_z0)
    for j in range(1, n + 1):
        out = out + PolyFunction.monomial(n, {f"z{j}": 1, f"zb{j}": 1}, has_z0=has_z0)
    return out


def vector_var(kind: str, n: int, has_z0: bool = False) -> PolyFunction:
    """Hermitian vector variables: ``'z'``, ``'zdagger'`` or ``'X'`` (= z - z^dagger)."""
    if kind == "X":
        return vector_var("z", n, has_z0) - vector_var("zdagger", n, has_z0)
    if kind not in ("z", "zdagger"):
        raise ValueError(f"unknown vector variable {kind!r}")
    out = PolyFunction.zero(n, has_z0)
    for j in range(1, n + 1):
        if kind == "z":
            out = out + PolyFunction.monomial(n, {f"z{j}": 1}, witt(j, n, has_z0), has_z0)
        else:
            out = out + PolyFunction.monomial(n, {f"zb{j}": 1}, witt_dagger(j, n, has_z0), has_z0)
    return out


def beta_function(n: int, has_z0: bool = False) -> PolyFunction:
    return PolyFunction.constant(n, beta(n, has_z0), has_z0)


def restrict_z0(f: PolyFunction) -> PolyFunction:
    """Set z0 = z̄0 = 0; drop to C_{2n} when no f_0 blade survives."""
    if not f.has_z0:
        raise ValueError("restrict_z0 needs a function with has_z0=True")
    kept = {(mono, mask): c for (mono, mask), c in f._data.items() if not (mono[-1] or mono[-2])}
    out = PolyFunction._raw(f.n, True, f.weight, kept)
    if out.max_generator() <= 2 * f.n:
        return PolyFunction._raw(f.n, False, f.weight, kept)
    return out
