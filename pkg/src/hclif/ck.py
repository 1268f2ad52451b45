"""h-submonogenic system: decomposition, residuals and CK-extension solvers.

Functions of (z0, z) take values in C_{2n+2}.  Every such function splits
uniquely as ``f = A + f0 B + f0^dagger C + f0^dagger f0 D`` with A..D free of
the f0 generators.  The solvers below build power series in z0, z̄0 whose
coefficients are functions of z only (``has_z0=False``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .clifford import CliffordElement, GaussianRational, witt, witt_dagger
from .polyfun import NONE, PolyFunction, _partial_pos, dirac_z, dirac_zdagger, restrict_z0

__all__ = [
    "Decomposition",
    "CKTable",
    "decompose",
    "compose",
    "residuals_submonogenic",
    "residuals_hmonogenic",
    "residuals_hmsF",
    "inhomogeneous_data",
    "component_residuals",
    "ck_class1",
    "ck_class2",
    "ck_class3",
    "ck_double",
    "class1_by_recurrence",
    "class2_by_recurrence",
    "class3_by_recurrence",
    "double_by_recurrence",
    "residual_orders",
]

_I = GaussianRational(0, 1)


def _f0(n: int) -> CliffordElement:
    return witt(0, n, True)


def _f0d(n: int) -> CliffordElement:
    return witt_dagger(0, n, True)


def _need_z0(f: PolyFunction) -> None:
    if not f.has_z0:
        raise ValueError("function must live in C_{2n+2} (has_z0=True)")


def d_z0(f: PolyFunction) -> PolyFunction:
    return _partial_pos(f, 2 * f.n)


def d_zb0(f: PolyFunction) -> PolyFunction:
    return _partial_pos(f, 2 * f.n + 1)


@dataclass(frozen=True)
class Decomposition:
    """Components of f = A + f0 B + f0^dagger C + f0^dagger f0 D."""

    A: PolyFunction
    B: PolyFunction
    C: PolyFunction
    D: PolyFunction

    def as_tuple(self) -> Tuple[PolyFunction, PolyFunction, PolyFunction, PolyFunction]:
        return self.A, self.B, self.C, self.D


def decompose(f: PolyFunction) -> Decomposition:
    _need_z0(f)
    n = f.n
    low_mask = (1 << (2 * n)) - 1
    bit_a, bit_b = 1 << (2 * n), 1 << (2 * n + 1)
    # f = X0 + X1 e_a + X2 e_b + X3 e_a e_b with e_a = f0 - f0^dagger,
    # e_b = i (f0 + f0^dagger), e_a e_b = i - 2i f0^dagger f0, and
    # X f0 = f0 hat(X) for X in C_{2n}
    parts: List[Dict] = [{}, {}, {}, {}]
    for (mono, mask), c in f.items():
        low = mask & low_mask
        slot = (1 if mask & bit_a else 0) + (2 if mask & bit_b else 0)
        parts[slot][(mono, low)] = c

    def poly(data: Dict, factor: GaussianRational, hat: bool = False) -> PolyFunction:
        out = {}
        for (mono, low), c in data.items():
            v = c * factor
            if hat and bin(low).count("1") & 1:
                v = -v
            out[(mono, low)] = v
        return PolyFunction._raw(n, True, f.weight, out)

    X0 = poly(parts[0], GaussianRational(1))
    X1 = poly(parts[1], GaussianRational(1), hat=True)
    X2 = poly(parts[2], _I, hat=True)
    X3 = poly(parts[3], GaussianRational(1))
    A = X0 + X3.scale(_I)
    B = X1 + X2
    C = X2 - X1
    D = X3.scale(GaussianRational(0, -2))
    return Decomposition(A, B, C, D)


def compose(d: Decomposition) -> PolyFunction:
    A, B, C, D = (x.embed() for x in d.as_tuple())
    n = A.n
    f0, f0d = _f0(n), _f0d(n)
    return A + B.left_mul(f0) + C.left_mul(f0d) + D.left_mul(f0d * f0)


def residuals_submonogenic(f: PolyFunction) -> Tuple[PolyFunction, PolyFunction]:
    """Residuals of the h-submonogenic system; both vanish iff f is a solution."""
    _need_z0(f)
    n = f.n
    f0, f0d = _f0(n), _f0d(n)
    s1 = d_z0(f).left_mul(f0d) + dirac_z(f).left_mul(f0d * f0)
    s2 = d_zb0(f).left_mul(f0) + dirac_zdagger(f).left_mul(f0 * f0d)
    return s1, s2


def residuals_hmonogenic(f: PolyFunction) -> Tuple[PolyFunction, PolyFunction]:
    _need_z0(f)
    n = f.n
    r1 = d_z0(f).left_mul(_f0d(n)) + dirac_z(f)
    r2 = d_zb0(f).left_mul(_f0(n)) + dirac_zdagger(f)
    return r1, r2


def residuals_hmsF(f: PolyFunction) -> Tuple[PolyFunction, PolyFunction, PolyFunction, PolyFunction]:
    """The four equations equivalent to the h-monogenic system."""
    _need_z0(f)
    n = f.n
    f0, f0d = _f0(n), _f0d(n)
    dz, dzd = dirac_z(f), dirac_zdagger(f)
    q1 = d_z0(f).left_mul(f0d) + dz.left_mul(f0d * f0)
    q2 = dz.left_mul(f0 * f0d)
    q3 = d_zb0(f).left_mul(f0) + dzd.left_mul(f0 * f0d)
    q4 = dzd.left_mul(f0d * f0)
    return q1, q2, q3, q4


def inhomogeneous_data(f: PolyFunction) -> Tuple[PolyFunction, PolyFunction]:
    """Right-hand sides g = f0^dagger dirac_z f, h = f0 dirac_zdagger f."""
    _need_z0(f)
    n = f.n
    return dirac_z(f).left_mul(_f0d(n)), dirac_zdagger(f).left_mul(_f0(n))


def component_residuals(d: Decomposition) -> Tuple[PolyFunction, PolyFunction, PolyFunction, PolyFunction]:
    """Residuals of the two component systems for (A, B, C, D)."""
    A, B, C, D = (x.embed() for x in d.as_tuple())
    AD = A + D
    return (
        d_z0(A) - dirac_z(C),
        dirac_zdagger(A) + d_zb0(C),
        d_z0(B) + dirac_z(AD),
        dirac_zdagger(B) - d_zb0(AD),
    )


def residual_orders(f: PolyFunction) -> Dict[str, List[int]]:
    """z0-orders of the surviving terms of every residual family."""
    s1, s2 = residuals_submonogenic(f)
    return {"s1": sorted(s1.z0_orders()), "s2": sorted(s2.z0_orders())}


# ---------------------------------------------------------------------------
# CK tables


def _shift(g: PolyFunction, a: int, b: int) -> PolyFunction:
    """z0^a z̄0^b * g, with g embedded into the (z0, z) space."""
    g = g.embed()
    n = g.n
    out = {}
    for (mono, mask), c in g.items():
        m2 = mono[:2 * n] + (mono[2 * n] + a, mono[2 * n + 1] + b)
        out[(m2, mask)] = c
    return PolyFunction._raw(n, True, g.weight, out)


@dataclass
class CKTable:
    """Coefficient table of a CK-type series solution.

    ``coefficients`` maps each of ``"A"``, ``"B"``, ``"C"``, ``"D"`` to a
    dictionary keyed by ``k`` (single series) or ``(k, l)`` (double series).
    """

    cls: str
    n: int
    K: int
    coefficients: Dict[str, Dict]
    s: int = 0
    terminated: bool = False
    weight: str = NONE

    def __getitem__(self, name: str) -> Dict:
        return self.coefficients[name]

    def assemble(self) -> PolyFunction:
        """Sum the truncated series into a single function of (z0, z)."""
        n = self.n
        parts = {}
        for name in "ABCD":
            total = PolyFunction.zero(n, True, self.weight)
            for key, g in self.coefficients[name].items():
                total = total + _shift(g, *self._powers(name, key))
            parts[name] = total
        return compose(Decomposition(parts["A"], parts["B"], parts["C"], parts["D"]))

    def _powers(self, name: str, key) -> Tuple[int, int]:
        s = self.s
        if self.cls == "double":
            return key
        k = key
        if self.cls == "I":
            return {"A": (k, k), "B": (k + 1, k), "C": (k, k + 1), "D": (k, k)}[name]
        if self.cls == "II":
            return {"A": (s + k, k), "B": (s + 1 + k, k), "C": (s - 1 + k, k), "D": (s + k, k)}[name]
        if self.cls == "III":
            return {"A": (k, s + k), "B": (k, s - 1 + k), "C": (k, s + 1 + k), "D": (k, s + k)}[name]
        raise ValueError(f"unknown class {self.cls!r}")

    def equals(self, other: "CKTable") -> bool:
        if (self.cls, self.n, self.K, self.s) != (other.cls, other.n, other.K, other.s):
            return False
        for name in "ABCD":
            a, b = self.coefficients[name], other.coefficients[name]
            if set(a) != set(b) or any(a[k] != b[k] for k in a):
                return False
        return True


def _weight_of(*gs: PolyFunction) -> str:
    weights = {g.weight for g in gs if g}
    if len(weights) > 1:
        raise ValueError("initial data mix weighted and unweighted functions")
    return weights.pop() if weights else gs[0].weight


def _check_initial(*gs: PolyFunction) -> int:
    n = gs[0].n
    for g in gs:
        if g.has_z0:
            raise ValueError("initial data must be functions of z only (has_z0=False)")
        if g.n != n:
            raise ValueError("initial data dimension mismatch")
    return n


def _align(g: PolyFunction, weight: str) -> PolyFunction:
    return g.with_weight(weight) if not g else g


def _check_K(K: int) -> None:
    if K < 0:
        raise ValueError("truncation order K must be nonnegative")


def _powers(op: Callable, g: PolyFunction, K: int) -> List[PolyFunction]:
    out = [g]
    for _ in range(K):
        out.append(op(out[-1]))
    return out


def _dd(g):  # dirac_z dirac_zdagger
    return dirac_z(dirac_zdagger(g))


def _ddt(g):  # dirac_zdagger dirac_z
    return dirac_zdagger(dirac_z(g))


def _row_zero(coeffs: Mapping[str, Mapping], k) -> bool:
    return all(not coeffs[name].get(k, PolyFunction.zero(1)) for name in "ABCD")


def _terminated(coeffs: Mapping[str, Mapping], K: int) -> bool:
    return any(_row_zero(coeffs, k) for k in range(K + 1))


def ck_class1(A0: PolyFunction, D0: PolyFunction, K: int) -> CKTable:
    """Class I CK-extension of f|_{z0=0} = A0 + f0^dagger f0 D0 (closed forms)."""
    _check_K(K)
    n = _check_initial(A0, D0)
    w = _weight_of(A0, D0)
    A0, D0 = _align(A0, w), _align(D0, w)
    P = _powers(_dd, A0, K)        # (d dt)^k A0
    Q = _powers(_ddt, A0, K)       # (dt d)^k A0
    R = _powers(_ddt, D0, K)       # (dt d)^k D0
    A, B, C, D = {}, {}, {}, {}
    for k in range(K + 1):
        f2 = factorial(k) ** 2
        sign = -1 if k & 1 else 1
        A[k] = P[k].scale(Fraction(sign, f2))
        C[k] = dirac_zdagger(P[k]).scale(Fraction(-sign, (k + 1) * f2))
        B[k] = dirac_z(Q[k] + R[k]).scale(Fraction(-sign, (k + 1) * f2))
        D[k] = D0 if k == 0 else (R[k] + Q[k] - P[k]).scale(Fraction(sign, f2))
    coeffs = {"A": A, "B": B, "C": C, "D": D}
    return CKTable("I", n, K, coeffs, terminated=_terminated(coeffs, K), weight=w)


def class1_by_recurrence(A0: PolyFunction, D0: PolyFunction, K: int) -> CKTable:
    """Class I table obtained by iterating the raw recurrences step by step."""
    _check_K(K)
    n = _check_initial(A0, D0)
    w = _weight_of(A0, D0)
    A, B, C, D = {0: _align(A0, w)}, {}, {}, {0: _align(D0, w)}
    for k in range(K + 1):
        C[k] = dirac_zdagger(A[k]) / -(k + 1)
        B[k] = dirac_z(A[k] + D[k]) / -(k + 1)
        if k < K:
            A[k + 1] = dirac_z(C[k]) / (k + 1)
            D[k + 1] = dirac_zdagger(B[k]) / (k + 1) - A[k + 1]
    coeffs = {"A": A, "B": B, "C": C, "D": D}
    return CKTable("I", n, K, coeffs, terminated=_terminated(coeffs, K), weight=w)


def _check_s(s: int) -> None:
    if s < 1:
        raise ValueError("s must be a positive integer")


def ck_class2(C0: PolyFunction, D0: PolyFunction, s: int, K: int) -> CKTable:
    """Class II solution (A ~ z0^s) from the starting values C0, D0."""
    _check_s(s)
    _check_K(K)
    n = _check_initial(C0, D0)
    w = _weight_of(C0, D0)
    C0, D0 = _align(C0, w), _align(D0, w)
    TC = _powers(_ddt, C0, K)
    TD = _powers(_ddt, D0, K)
    A, B, C, D = {}, {}, {}, {}
    fs1 = factorial(s - 1)
    for k in range(K + 1):
        sign = -1 if k & 1 else 1
        fk = factorial(k)
        dTC = dirac_z(TC[k])
        A[k] = dTC.scale(Fraction(sign * fs1, fk * factorial(s + k)))
        C[k] = C0 if k == 0 else TC[k].scale(Fraction(sign * fs1, fk * factorial(s - 1 + k)))
        B[k] = dirac_z(TD[k]).scale(Fraction(-sign * factorial(s), fk * factorial(s + 1 + k)))
        D[k] = D0 if k == 0 else (TD[k].scale(s) - dTC).scale(
            Fraction(sign * fs1, fk * factorial(s + k)))
    coeffs = {"A": A, "B": B, "C": C, "D": D}
    return CKTable("II", n, K, coeffs, s=s, terminated=_terminated(coeffs, K), weight=w)


def class2_by_recurrence(C0: PolyFunction, D0: PolyFunction, s: int, K: int) -> CKTable:
    _check_s(s)
    _check_K(K)
    n = _check_initial(C0, D0)
    w = _weight_of(C0, D0)
    A, B, C, D = {}, {}, {0: _align(C0, w)}, {0: _align(D0, w)}
    for k in range(K + 1):
        A[k] = dirac_z(C[k]) / (s + k)
        B[k] = dirac_z(A[k] + D[k]) / -(s + 1 + k)
        if k < K:
            C[k + 1] = dirac_zdagger(A[k]) / -(k + 1)
            D[k + 1] = dirac_zdagger(B[k]) / (k + 1) - dirac_z(C[k + 1]) / (s + k + 1)
    coeffs = {"A": A, "B": B, "C": C, "D": D}
    return CKTable("II", n, K, coeffs, s=s, terminated=_terminated(coeffs, K), weight=w)


def ck_class3(A0: PolyFunction, B0: PolyFunction, s: int, K: int) -> CKTable:
    """Class III solution (A ~ z̄0^s) from the starting values A0, B0."""
    _check_s(s)
    _check_K(K)
    n = _check_initial(A0, B0)
    w = _weight_of(A0, B0)
    A0, B0 = _align(A0, w), _align(B0, w)
    TA = _powers(_dd, A0, K)
    TB = _powers(_dd, B0, K)
    A, B, C, D = {}, {}, {}, {}
    fs, fs1 = factorial(s), factorial(s - 1)
    for k in range(K + 1):
        sign = -1 if k & 1 else 1
        fk = factorial(k)
        A[k] = A0 if k == 0 else TA[k].scale(Fraction(sign * fs, fk * factorial(s + k)))
        C[k] = dirac_zdagger(TA[k]).scale(Fraction(-sign * fs, fk * factorial(s + k + 1)))
        B[k] = B0 if k == 0 else TB[k].scale(Fraction(sign * fs1, fk * factorial(s + k - 1)))
        D[k] = (dirac_zdagger(TB[k]) - TA[k].scale(s)).scale(
            Fraction(sign * fs1, fk * factorial(s + k)))
    coeffs = {"A": A, "B": B, "C": C, "D": D}
    return CKTable("III", n, K, coeffs, s=s, terminated=_terminated(coeffs, K), weight=w)


def class3_by_recurrence(A0: PolyFunction, B0: PolyFunction, s: int, K: int) -> CKTable:
    _check_s(s)
    _check_K(K)
    n = _check_initial(A0, B0)
    w = _weight_of(A0, B0)
    A, B, C, D = {0: _align(A0, w)}, {0: _align(B0, w)}, {}, {}
    for k in range(K + 1):
        C[k] = dirac_zdagger(A[k]) / -(s + 1 + k)
        D[k] = dirac_zdagger(B[k]) / (s + k) - A[k]
        if k < K:
            A[k + 1] = dirac_z(C[k]) / (k + 1)
            B[k + 1] = dirac_z(A[k] + D[k]) / -(k + 1)
    coeffs = {"A": A, "B": B, "C": C, "D": D}
    return CKTable("III", n, K, coeffs, s=s, terminated=_terminated(coeffs, K), weight=w)


# ---------------------------------------------------------------------------
# double power series


def _double_inputs(A0row, B0row, Ccol, Dcol, K):
    _check_K(K)
    families = [list(A0row), list(B0row), list(Ccol), list(Dcol)]
    if any(len(fam) != K + 1 for fam in families):
        raise ValueError("inconsistent corner data: every family needs K + 1 entries")
    flat = [g for fam in families for g in fam]
    n = _check_initial(*flat)
    w = _weight_of(*flat)
    return n, w, [[_align(g, w) for g in fam] for fam in families]


def ck_double(A0row: Sequence[PolyFunction], B0row: Sequence[PolyFunction],
              Ccol: Sequence[PolyFunction], Dcol: Sequence[PolyFunction], K: int) -> CKTable:
    """Double power series solution from A_{0,l}, B_{0,l}, C_{k,0}, D_{k,0} (closed forms)."""
    n, w, (Ar, Br, Cc, Dc) = _double_inputs(A0row, B0row, Ccol, Dcol, K)
    # (A+D)_{k,0}, with A_{k,0} = (1/k) dz C_{k-1,0} for k >= 1
    AD0 = [(Ar[0] if k == 0 else dirac_z(Cc[k - 1]) / k) + Dc[k] for k in range(K + 1)]
    f = factorial
    A, B, C, AD = {}, {}, {}, {}

    def pw(op, g, times):
        for _ in range(times):
            g = op(g)
        return g

    for k in range(K + 1):
        for l in range(K + 1):
            # A_{k,l}
            if k == 0:
                A[k, l] = Ar[l]
            elif l == 0:
                A[k, l] = dirac_z(Cc[k - 1]) / k
            elif k <= l:
                A[k, l] = pw(_dd, Ar[l - k], k).scale(Fraction((-1) ** k * f(l - k), f(k) * f(l)))
            else:
                A[k, l] = dirac_z(pw(_ddt, Cc[k - 1 - l], l)).scale(
                    Fraction((-1) ** l * f(k - 1 - l), f(k) * f(l)))
            # C_{k,l}
            if l == 0:
                C[k, l] = Cc[k]
            elif k == 0:
                C[k, l] = dirac_zdagger(Ar[l - 1]) / -l
            elif k < l:
                C[k, l] = dirac_zdagger(pw(_dd, Ar[l - 1 - k], k)).scale(
                    Fraction((-1) ** (k + 1) * f(l - 1 - k), f(k) * f(l)))
            else:
                C[k, l] = pw(_ddt, Cc[k - l], l).scale(Fraction((-1) ** l * f(k - l), f(k) * f(l)))
            # B_{k,l}
            if k == 0:
                B[k, l] = Br[l]
            elif l == 0:
                B[k, l] = dirac_z(AD0[k - 1]) / -k
            elif k <= l:
                B[k, l] = pw(_dd, Br[l - k], k).scale(Fraction((-1) ** k * f(l - k), f(k) * f(l)))
            else:
                B[k, l] = dirac_z(pw(_ddt, AD0[k - 1 - l], l)).scale(
                    Fraction((-1) ** (l + 1) * f(k - 1 - l), f(k) * f(l)))
            # (A+D)_{k,l}
            if l == 0:
                AD[k, l] = AD0[k]
            elif k == 0:
                AD[k, l] = dirac_zdagger(Br[l - 1]) / l
            elif k < l:
                AD[k, l] = dirac_zdagger(pw(_dd, Br[l - 1 - k], k)).scale(
                    Fraction((-1) ** k * f(l - 1 - k), f(k) * f(l)))
            else:
                AD[k, l] = pw(_ddt, AD0[k - l], l).scale(Fraction((-1) ** l * f(k - l), f(k) * f(l)))
    D = {key: AD[key] - A[key] for key in AD}
    coeffs = {"A": A, "B": B, "C": C, "D": D}
    return CKTable("double", n, K, coeffs, terminated=_double_terminated(coeffs, K), weight=w)


def double_by_recurrence(A0row, B0row, Ccol, Dcol, K: int) -> CKTable:
    """Double series table by direct iteration of the two recurrence pairs."""
    n, w, (Ar, Br, Cc, Dc) = _double_inputs(A0row, B0row, Ccol, Dcol, K)
    A, B, C, AD = {}, {}, {}, {}
    for l in range(K + 1):
        A[0, l] = Ar[l]
        B[0, l] = Br[l]
    for k in range(K + 1):
        C[k, 0] = Cc[k]
    # A and C: A_{k+1,l} from C_{k,l}; C_{k,l+1} from A_{k,l}
    for total in range(2 * K + 1):
        for k in range(K + 1):
            l = total - k
            if not 0 <= l <= K:
                continue
            if (k, l) not in A:
                A[k, l] = dirac_z(C[k - 1, l]) / k
            if (k, l) not in C:
                C[k, l] = dirac_zdagger(A[k, l - 1]) / -l
    for k in range(K + 1):
        AD[k, 0] = A[k, 0] + Dc[k]
    for total in range(2 * K + 1):
        for k in range(K + 1):
            l = total - k
            if not 0 <= l <= K:
                continue
            if (k, l) not in B:
                B[k, l] = dirac_z(AD[k - 1, l]) / -k
            if (k, l) not in AD:
                AD[k, l] = dirac_zdagger(B[k, l - 1]) / l
    D = {key: AD[key] - A[key] for key in AD}
    coeffs = {"A": A, "B": B, "C": C, "D": D}
    return CKTable("double", n, K, coeffs, terminated=_double_terminated(coeffs, K), weight=w)


def _double_terminated(coeffs, K: int) -> bool:
    # every coefficient on the outer boundary k = K or l = K vanishes
    keys = [(k, l) for k in range(K + 1) for l in range(K + 1) if k == K or l == K]
    return all(not coeffs[name][key] for name in "ABCD" for key in keys)
