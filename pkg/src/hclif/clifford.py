"""Exact arithmetic in the complex Clifford algebras C_{2n} and C_{2n+2}.

Blades are stored as bitmasks: generator e_j (1-based) is bit ``j - 1``.
The algebra C_{2n+2} reserves its last two generators e_{2n+1}, e_{2n+2}
for the extra Witt pair (f_0, f_0^dagger), so C_{2n} embeds into it by the
identity map on blade masks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

__all__ = [
    "GaussianRational",
    "CliffordElement",
    "blade_mul",
    "mask_to_indices",
    "indices_to_mask",
    "witt",
    "witt_dagger",
    "beta",
    "idempotent",
    "hermitian_inner",
    "norm_sq",
    "scalar_part",
]

RationalLike = Union[int, Fraction]


class GaussianRational:
    """Complex number ``re + i*im`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact; pass GaussianRational")
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re + other, self.im)
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re - other, self.im)
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        den = other.re * other.re + other.im * other.im
        if den == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


I = GaussianRational(0, 1)
ONE = GaussianRational(1)


def indices_to_mask(indices: Iterable[int], m: int | None = None) -> int:
    mask = 0
    for j in indices:
        if j < 1 or (m is not None and j > m):
            raise ValueError(f"generator index {j} out of range 1..{m}")
        mask ^= 1 << (j - 1)
    return mask


def mask_to_indices(mask: int) -> Tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


_SIGN_CACHE: Dict[Tuple[int, int], int] = {}


def _mask_product(a: int, b: int) -> Tuple[int, int]:
    """Return ``(sign, mask)`` with ``e_a e_b = sign * e_mask``."""
    key = (a, b)
    hit = _SIGN_CACHE.get(key)
    if hit is None:
        swaps = 0
        x = a >> 1
        while x:
            swaps += bin(x & b).count("1")
            x >>= 1
        swaps += bin(a & b).count("1")
        hit = -1 if swaps & 1 else 1
        _SIGN_CACHE[key] = hit
    return hit, a ^ b


def blade_mul(a: Sequence[int], b: Sequence[int], m: int) -> Tuple[GaussianRational, Tuple[int, ...]]:
    """Geometric product of two canonical blades given as index lists.

    >>> blade_mul([1], [1], 2)
    (GaussianRational(-1, 0), ())
    """
    for blade in (a, b):
        if list(blade) != sorted(set(blade)):
            raise ValueError(f"blade {blade!r} is not strictly increasing")
    sign, mask = _mask_product(indices_to_mask(a, m), indices_to_mask(b, m))
    return GaussianRational(sign), mask_to_indices(mask)


def _grade(mask: int) -> int:
    return bin(mask).count("1")


class CliffordElement:
    """Element of C_{2n} (``with_z0=False``) or C_{2n+2} (``with_z0=True``).

    ``terms`` maps blade bitmasks to nonzero :class:`GaussianRational`
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("n", "with_z0", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[int, GaussianRational] | None = None,
                 with_z0: bool = False):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.with_z0 = with_z0
        clean = {}
        limit = 1 << self.m
        for mask, c in (terms or {}).items():
            if mask < 0 or mask >= limit:
                raise ValueError(f"blade {mask_to_indices(mask)} outside C_{self.m}")
            c = GaussianRational.coerce(c)
            if c:
                clean[mask] = c
        self.terms: Dict[int, GaussianRational] = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, with_z0: bool, terms: Dict[int, GaussianRational]) -> "CliffordElement":
        obj = object.__new__(cls)
        obj.n = n
        obj.with_z0 = with_z0
        obj.terms = terms
        obj._hash = None
        return obj

    @property
    def m(self) -> int:
        return 2 * self.n + (2 if self.with_z0 else 0)

    @classmethod
    def scalar(cls, n: int, value=1, with_z0: bool = False) -> "CliffordElement":
        return cls(n, {0: GaussianRational.coerce(value)}, with_z0)

    @classmethod
    def zero(cls, n: int, with_z0: bool = False) -> "CliffordElement":
        return cls._raw(n, with_z0, {})

    @classmethod
    def generator(cls, j: int, n: int, with_z0: bool = False) -> "CliffordElement":
        m = 2 * n + (2 if with_z0 else 0)
        if not 1 <= j <= m:
            raise ValueError(f"generator index {j} out of range 1..{m}")
        return cls._raw(n, with_z0, {1 << (j - 1): ONE})

    @classmethod
    def blade(cls, indices: Sequence[int], n: int, coeff=1, with_z0: bool = False) -> "CliffordElement":
        m = 2 * n + (2 if with_z0 else 0)
        sign = 1
        mask = 0
        for j in indices:
            s, mask = _mask_product(mask, indices_to_mask([j], m))
            sign *= s
        return cls(n, {mask: GaussianRational.coerce(coeff) * sign}, with_z0)

    def _check(self, other: "CliffordElement") -> None:
        if self.n != other.n or self.with_z0 != other.with_z0:
            raise ValueError(
                f"dimension mismatch: C_{self.m} (n={self.n}) vs C_{other.m} (n={other.n})")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, CliffordElement):
            return (self.n == other.n and self.with_z0 == other.with_z0
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = GaussianRational.coerce(other)
            if not other:
                return not self.terms
            return self.terms == {0: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.with_z0, frozenset(self.terms.items())))
        return self._hash

    def __iter__(self) -> Iterator[Tuple[int, GaussianRational]]:
        return iter(sorted(self.terms.items()))

    def _lift(self, other) -> "CliffordElement":
        if isinstance(other, CliffordElement):
            self._check(other)
            return other
        return CliffordElement.scalar(self.n, other, self.with_z0)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for mask, c in other.terms.items():
            v = out.get(mask)
            v = c if v is None else v + c
            if v:
                out[mask] = v
            else:
                out.pop(mask, None)
        return CliffordElement._raw(self.n, self.with_z0, out)

    __radd__ = __add__

    def __neg__(self) -> "CliffordElement":
        return CliffordElement._raw(self.n, self.with_z0, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "CliffordElement":
        c = GaussianRational.coerce(c)
        if not c:
            return CliffordElement.zero(self.n, self.with_z0)
        return CliffordElement._raw(self.n, self.with_z0, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return mul(self, other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(ONE / GaussianRational.coerce(other))
        return NotImplemented

    def __pow__(self, k: int) -> "CliffordElement":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = CliffordElement.scalar(self.n, 1, self.with_z0)
        for _ in range(k):
            out = out * self
        return out

    def bar(self) -> "CliffordElement":
        """Anti-involution with bar(e_j) = -e_j, complex-linear."""
        out = {}
        for mask, c in self.terms.items():
            r = _grade(mask)
            out[mask] = -c if (r * (r + 1) // 2) & 1 else c
        return CliffordElement._raw(self.n, self.with_z0, out)

    def dagger(self) -> "CliffordElement":
        """Hermitian conjugation: (a + i b)^dagger = bar(a) - i bar(b)."""
        out = {}
        for mask, c in self.terms.items():
            r = _grade(mask)
            c = c.conjugate()
            out[mask] = -c if (r * (r + 1) // 2) & 1 else c
        return CliffordElement._raw(self.n, self.with_z0, out)

    def scalar_part(self) -> GaussianRational:
        return self.terms.get(0, GaussianRational(0))

    def max_generator(self) -> int:
        top = 0
        for mask in self.terms:
            top = max(top, mask.bit_length())
        return top

    def embed(self) -> "CliffordElement":
        """Include C_{2n} into C_{2n+2}."""
        if self.with_z0:
            return self
        return CliffordElement._raw(self.n, True, dict(self.terms))

    def restrict(self) -> "CliffordElement":
        """Inverse of :meth:`embed`; fails if an f_0 generator is present."""
        if not self.with_z0:
            return self
        if self.max_generator() > 2 * self.n:
            raise ValueError("element involves the z0 generators; cannot restrict to C_2n")
        return CliffordElement._raw(self.n, False, dict(self.terms))

    def grade_involution(self) -> "CliffordElement":
        return CliffordElement._raw(
            self.n, self.with_z0,
            {k: (-v if _grade(k) & 1 else v) for k, v in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return f"CliffordElement(n={self.n}, 0)"
        return f"CliffordElement(n={self.n}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask, c in sorted(self.terms.items()):
            idx = mask_to_indices(mask)
            blade = "e" + "_".join(str(j) for j in idx) if idx else "1"
            parts.append(f"{c}*{blade}")
        return " + ".join(parts)


def mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """Geometric product, bilinear extension of the blade product."""
    x._check(y)
    out: Dict[int, GaussianRational] = {}
    for ma, ca in x.terms.items():
        for mb, cb in y.terms.items():
            sign, mask = _mask_product(ma, mb)
            c = ca * cb
            if sign < 0:
                c = -c
            v = out.get(mask)
            out[mask] = c if v is None else v + c
    return CliffordElement._raw(x.n, x.with_z0, {k: v for k, v in out.items() if v})


def scalar_part(x: CliffordElement) -> GaussianRational:
    return x.scalar_part()


def hermitian_inner(x: CliffordElement, y: CliffordElement) -> GaussianRational:
    """(x, y) = [x^dagger y]_0."""
    x._check(y)
    return mul(x.dagger(), y).scalar_part()


def norm_sq(x: CliffordElement) -> Fraction:
    value = hermitian_inner(x, x)
    assert value.im == 0
    return value.re


HALF = Fraction(1, 2)


def _witt_indices(j: int, n: int, with_z0: bool) -> Tuple[int, int]:
    if j == 0:
        if not with_z0:
            raise ValueError("f_0 only exists in C_{2n+2} (with_z0=True)")
        return 2 * n + 1, 2 * n + 2
    if not 1 <= j <= n:
        raise ValueError(f"Witt index {j} out of range 1..{n}")
    return j, n + j


def witt(j: int, n: int, with_z0: bool = False) -> CliffordElement:
    """f_j = (e_j - i e_{n+j}) / 2; ``j = 0`` gives f_0 in C_{2n+2}."""
    a, b = _witt_indices(j, n, with_z0)
    return CliffordElement._raw(n, with_z0, {
        1 << (a - 1): GaussianRational(HALF),
        1 << (b - 1): GaussianRational(0, -HALF),
    })


def witt_dagger(j: int, n: int, with_z0: bool = False) -> CliffordElement:
    """f_j^dagger = -(e_j + i e_{n+j}) / 2."""
    a, b = _witt_indices(j, n, with_z0)
    return CliffordElement._raw(n, with_z0, {
        1 << (a - 1): GaussianRational(-HALF),
        1 << (b - 1): GaussianRational(0, -HALF),
    })


def beta(n: int, with_z0: bool = False) -> CliffordElement:
    """Fermionic Euler element sum_j f_j^dagger f_j over j = 1..n."""
    out = CliffordElement.zero(n, with_z0)
    for j in range(1, n + 1):
        out = out + witt_dagger(j, n, with_z0) * witt(j, n, with_z0)
    return out


def idempotent(n: int, with_z0: bool = False) -> CliffordElement:
    """Primitive idempotent I = f_1 f_1^dagger ... f_n f_n^dagger."""
    out = CliffordElement.scalar(n, 1, with_z0)
    for j in range(1, n + 1):
        out = out * witt(j, n, with_z0) * witt_dagger(j, n, with_z0)
    return out
