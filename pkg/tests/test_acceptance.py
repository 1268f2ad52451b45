"""Acceptance criteria, one test per criterion.

Each test records a ``criterion N: PASS|FAIL`` line (shown in the pytest
terminal summary) and then asserts.  Running this file directly hands it
to pytest.
"""

import json
import random
import time
from fractions import Fraction
from itertools import combinations

from hclif import serialize as ser
from hclif.besselexp import (
    ExpParams,
    bessel_derivative_identity_check,
    bessel_series,
    bessel_series_exact,
    exp_closed_forms,
    exp_residuals,
    exp_solution,
)
from hclif.ck import (
    ck_class1,
    ck_class2,
    ck_class3,
    ck_double,
    class1_by_recurrence,
    class2_by_recurrence,
    class3_by_recurrence,
    component_residuals,
    decompose,
    double_by_recurrence,
    inhomogeneous_data,
    residuals_hmonogenic,
    residuals_hmsF,
    residuals_submonogenic,
    d_z0,
    d_zb0,
)
from hclif.cli import main as cli_main
from hclif.clifford import CliffordElement, beta, idempotent, witt, witt_dagger
from hclif.hermite import (
    gaussian_ck_coefficients,
    gaussian_class2,
    gaussian_class3,
    hermite_closed_form,
    hermite_rodrigues,
    laguerre,
)
from hclif.polyfun import PolyFunction, dirac_X, dirac_z, dirac_zdagger, laplacian, restrict_z0
from hclif.vekua import (
    NuSeries,
    alpha_coefficient,
    axial_expand,
    delta_coefficient,
    generalized_powers,
    residuals_vanish,
    vekua_residuals,
    vekua_solve_plain,
    vekua_solve_z0barpower,
    vekua_solve_z0power,
)

from conftest import ACCEPTANCE_LINES
from helpers import rand_hmonogenic, rand_nuseries, rand_poly, wedge


class Check:
    """Collects failures for one criterion and reports a single line."""

    def __init__(self, number, limit=None):
        self.number = number
        self.limit = limit
        self.failures = []
        self.count = 0
        self.start = time.perf_counter()

    def expect(self, cond, what):
        self.count += 1
        if not cond:
            self.failures.append(what)

    def finish(self):
        elapsed = time.perf_counter() - self.start
        if self.limit is not None and elapsed >= self.limit:
            self.failures.append(f"runtime {elapsed:.2f}s >= {self.limit}s")
        ok = not self.failures
        detail = f"{self.count} checks, {elapsed:.2f}s"
        if self.limit is not None:
            detail += f" (limit {self.limit}s)"
        if not ok:
            detail += f"; first failure: {self.failures[0]}"
        line = f"criterion {self.number}: {'PASS' if ok else 'FAIL'} [{detail}]"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line


def zero(*gs):
    return all(g.is_zero() for g in gs)


# 1 -------------------------------------------------------------------------


def test_criterion_1_witt_identities():
    c = Check(1, limit=5)
    for n in range(1, 6):
        Z, one = CliffordElement.zero(n), CliffordElement.scalar(n, 1)
        f = {j: witt(j, n) for j in range(1, n + 1)}
        fd = {j: witt_dagger(j, n) for j in range(1, n + 1)}
        for j in f:
            c.expect(f[j] * f[j] == Z and fd[j] * fd[j] == Z, f"isotropy n={n} j={j}")
            for k in f:
                c.expect(f[j] * f[k] == -(f[k] * f[j]), f"grassmann f n={n} {j},{k}")
                c.expect(fd[j] * fd[k] == -(fd[k] * fd[j]), f"grassmann f+ n={n} {j},{k}")
                c.expect(f[j] * fd[k] + fd[k] * f[j] == (one if j == k else Z), f"duality n={n} {j},{k}")
    for n in range(1, 5):
        b, one = beta(n), CliffordElement.scalar(n, 1)
        prod = one
        for j in range(n + 1):
            prod = prod * (b - one.scale(j))
        c.expect(prod.is_zero(), f"characteristic equation n={n}")
        Id = idempotent(n)
        for r in range(n + 1):
            for A in combinations(range(1, n + 1), r):
                v = wedge([witt_dagger(j, n) for j in A], n, False) * Id
                c.expect(not v.is_zero() and b * v == v.scale(r), f"eigenvalue n={n} A={A}")
    c.finish()


# 2 -------------------------------------------------------------------------


def test_criterion_2_operator_identities():
    c = Check(2, limit=10)
    rng = random.Random(2002)
    for i in range(100):
        n = 1 + i % 3
        g = rand_poly(rng, n, max_deg=4, nterms=4)
        lap = laplacian(g)
        c.expect(lap == (dirac_z(dirac_zdagger(g)) + dirac_zdagger(dirac_z(g))).scale(4), f"factorization #{i}")
        c.expect(dirac_X(g) == (dirac_zdagger(g) - dirac_z(g)).scale(2), f"dirac_X #{i}")
        c.expect(lap == -dirac_X(dirac_X(g)), f"-dirac_X^2 #{i}")
    c.finish()


# 3 -------------------------------------------------------------------------


def test_criterion_3_system_equivalence():
    c = Check(3, limit=20)
    rng = random.Random(3003)
    solutions_hms = solutions_whms = 0
    for i in range(100):
        n = 1 + i % 2
        kind = i % 4
        if kind == 0:
            f = rand_hmonogenic(rng, n)
        elif kind == 1:
            f = ck_class1(rand_poly(rng, n), rand_poly(rng, n), 4).assemble()
        elif kind == 2:
            f = rand_hmonogenic(rng, n) + rand_poly(rng, n, True, nterms=1)
        else:
            f = rand_poly(rng, n, True, nterms=4)
        hms = zero(*residuals_hmonogenic(f))
        c.expect(hms == zero(*residuals_hmsF(f)), f"hms vs hmsF #{i}")
        whms = zero(*residuals_submonogenic(f))
        c.expect(whms == zero(*component_residuals(decompose(f))), f"components vs whms #{i}")
        solutions_hms += hms
        solutions_whms += whms
        f0, f0d = witt(0, n, True), witt_dagger(0, n, True)
        g, h = inhomogeneous_data(f)
        s1, s2 = residuals_submonogenic(f)
        c.expect(d_z0(f).left_mul(f0d) + dirac_z(f) - g.left_mul(f0) == s1, f"inhomogeneous s1 #{i}")
        c.expect(d_zb0(f).left_mul(f0) + dirac_zdagger(f) - h.left_mul(f0d) == s2, f"inhomogeneous s2 #{i}")
    # the sample must exercise both sides of each equivalence
    c.expect(0 < solutions_hms < 100 and 0 < solutions_whms < 100, "sample lacks solutions or non-solutions")
    c.finish()


# 4 -------------------------------------------------------------------------


def test_criterion_4_class1():
    c = Check(4, limit=30)
    rng = random.Random(4004)
    for i in range(50):
        n = 1 + i % 3
        A0 = rand_poly(rng, n, max_deg=4, nterms=3)
        D0 = rand_poly(rng, n, max_deg=4, nterms=3)
        K = 4
        t = ck_class1(A0, D0, K)
        f = t.assemble()
        f0, f0d = witt(0, n, True), witt_dagger(0, n, True)
        c.expect(restrict_z0(f).embed() == A0.embed() + D0.embed().left_mul(f0d * f0), f"restriction #{i}")
        c.expect(t.terminated, f"termination #{i}")
        c.expect(zero(*residuals_submonogenic(f)), f"residuals #{i}")
        c.expect(t.equals(class1_by_recurrence(A0, D0, K)), f"closed form vs recurrence #{i}")
    c.finish()


# 5 -------------------------------------------------------------------------


def test_criterion_5_classes_2_3_double():
    c = Check(5)
    rng = random.Random(5005)
    K = 4
    for s in (1, 2, 3):
        for trial in range(3):
            n = 1 + trial % 2
            X, Y = rand_poly(rng, n, max_deg=3), rand_poly(rng, n, max_deg=3)
            t2, t3 = ck_class2(X, Y, s, K), ck_class3(X, Y, s, K)
            c.expect(t2.equals(class2_by_recurrence(X, Y, s, K)), f"class II s={s} #{trial}")
            c.expect(t3.equals(class3_by_recurrence(X, Y, s, K)), f"class III s={s} #{trial}")
            r2, r3 = restrict_z0(t2.assemble()), restrict_z0(t3.assemble())
            if s == 1:
                c.expect(r2.embed() == X.embed().left_mul(witt_dagger(0, n, True)), f"II restriction s=1 #{trial}")
                c.expect(r3.embed() == Y.embed().left_mul(witt(0, n, True)), f"III restriction s=1 #{trial}")
            else:
                c.expect(r2.is_zero() and r3.is_zero(), f"restriction s={s} #{trial}")
            for t in (t2, t3):
                c.expect(zero(*residuals_submonogenic(t.assemble())), f"residuals s={s} #{trial}")
    for trial in range(4):
        n = 1 + trial % 2
        fam = [[rand_poly(rng, n, max_deg=3, nterms=2) for _ in range(K + 1)] for _ in range(4)]
        t = ck_double(*fam, K)
        c.expect(t.equals(double_by_recurrence(*fam, K)), f"double #{trial}")
    c.finish()


# 6 -------------------------------------------------------------------------


def _poly_coeffs(p):
    return list(p.coeffs)


def _lin(*terms):
    """Sum of coefficient lists with integer shifts: terms are (factor, shift, coeffs)."""
    size = max(len(cs) + sh for _, sh, cs in terms)
    out = [Fraction(0)] * size
    for factor, sh, cs in terms:
        for i, v in enumerate(cs):
            out[i + sh] += factor * v
    while out and out[-1] == 0:
        out.pop()
    return out


def test_criterion_6_hermite():
    c = Check(6, limit=60)
    for type_id in (1, 2, 3, 4):
        for p in range(6):
            for n in (1, 2, 3):
                c.expect(hermite_rodrigues(type_id, p, n).value == hermite_closed_form(type_id, p, n).value,
                         f"hermite type={type_id} p={p} n={n}")
    for alpha in range(7):
        for p in range(1, 7):
            lhs = _lin((p + 1, 0, _poly_coeffs(laguerre(p + 1, alpha))))
            rhs = _lin((2 * p + 1 + alpha, 0, _poly_coeffs(laguerre(p, alpha))),
                       (-1, 1, _poly_coeffs(laguerre(p, alpha))),
                       (-(p + alpha), 0, _poly_coeffs(laguerre(p - 1, alpha))))
            c.expect(lhs == rhs, f"laguerre three-term p={p} alpha={alpha}")
    K = 5
    for n in (1, 2, 3):
        g = PolyFunction.gaussian(n)
        t1 = ck_class1(g, PolyFunction.zero(n), K)
        for k in range(K + 1):
            which = "ABCD" if k else "BC"
            got = gaussian_ck_coefficients(k, n, which)
            c.expect(all(got[x] == t1[x][k] for x in which), f"gaussian class I n={n} k={k}")
    for n in (1, 2):
        g = PolyFunction.gaussian(n)
        for s in (1, 2, 3):
            t2, t3 = ck_class2(g, g, s, K), ck_class3(g, g, s, K)
            for k in range(K + 1):
                c2, c3 = gaussian_class2(k, s, n), gaussian_class3(k, s, n)
                c.expect(all(c2[x] == t2[x][k] for x in "ABCD"), f"gaussian class II n={n} s={s} k={k}")
                c.expect(all(c3[x] == t3[x][k] for x in "ABCD"), f"gaussian class III n={n} s={s} k={k}")
    c.finish()


# 7 -------------------------------------------------------------------------


def test_criterion_7_vekua():
    c = Check(7)
    rng = random.Random(7007)
    K = 6
    for n in (1, 2, 3):
        for s in (Fraction(1, 2), 1, 2, 3, 4, Fraction(5, 2)):
            a = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
            sol = generalized_powers(s, *a, K, n)
            data = [NuSeries.monomial(n, s, a[0]), NuSeries.monomial(n, s - 1, a[1]),
                    NuSeries.monomial(n, s, a[2]), NuSeries.monomial(n, s - 1, a[3])]
            c.expect(sol.equals(vekua_solve_plain(*data, K)), f"powers vs recurrence n={n} s={s}")
            c.expect(residuals_vanish(vekua_residuals(sol)), f"vekua residuals n={n} s={s}")
    for n in (1, 2, 3):
        for s in (1, 2, 3):
            a = [Fraction(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(4)]
            for k in range(s, K + 1):
                c.expect(not alpha_coefficient(k, s, *a, n) and not delta_coefficient(k, s, *a, n),
                         f"alpha/delta vanish n={n} s={s} k={k}")
            f = axial_expand(generalized_powers(s, *a, K, n))
            c.expect(not f.is_zero() and f.is_homogeneous(2 * s), f"homogeneous degree n={n} s={s}")
            c.expect(zero(*residuals_submonogenic(f)), f"submonogenic n={n} s={s}")
    c.finish()


# 8 -------------------------------------------------------------------------


def test_criterion_8_modified_vekua():
    c = Check(8)
    rng = random.Random(8008)
    for trial in range(12):
        n = 1 + trial % 3
        s = 1 + trial % 3
        x, y, w = (rand_nuseries(rng, n, 3) for _ in range(3))
        for name, solve in (("z0", vekua_solve_z0power), ("z0bar", vekua_solve_z0barpower)):
            sol = solve(x, y, w, s, 6, 6)
            c.expect(residuals_vanish(vekua_residuals(sol)), f"{name} residuals #{trial}")
    c.finish()


# 9 -------------------------------------------------------------------------


def test_criterion_9_bessel():
    c = Check(9, limit=10)
    M = 12
    for n in (1, 2, 3, 4):
        for lam, mu in ((1, 1), (3, -2), (Fraction(-1, 2), 3), (-3, -3), (2, Fraction(1, 3))):
            p = ExpParams(lam, mu, n, Fraction(3, 2), -2)
            sol = exp_solution(p, M)
            res = exp_residuals(sol)
            c.expect(all(not r for r in res.values()), f"systems/ODE n={n} lambda={lam} mu={mu}")
            c.expect(all(r.order is None or r.order >= M - 1 for r in res.values()),
                     f"residual order n={n}")
            closed = exp_closed_forms(p, M)
            c.expect(closed["a2"].agrees(sol["a2"]) and closed["d2"].agrees(sol["d2"]),
                     f"closed forms n={n} lambda={lam} mu={mu}")
    tol = Fraction(1, 10 ** 12)
    ts = [i / 4 for i in range(41)] + [random.Random(9).uniform(0, 10) for _ in range(10)]
    for kind in "JI":
        for alpha in range(9):
            for t in ts:
                err = abs(Fraction(bessel_series(alpha, kind, t)) - bessel_series_exact(alpha, kind, t, 60))
                c.expect(err < tol, f"{kind}_{alpha}({t}) error {float(err):.3e}")
    for n in range(5):
        for a in (1, 2, -3, Fraction(1, 2)):
            c.expect(all(r["match"] for r in bessel_derivative_identity_check(n, a, 8)),
                     f"derivative identity n={n} a={a}")
    c.finish()


# 10 ------------------------------------------------------------------------


def _cli(argv, capsys):
    code = cli_main(argv)
    out, err = capsys.readouterr()
    return code, out


def _class1_example():
    n = 1
    return PolyFunction.monomial(n, {"zb1": 1}, has_z0=True) - PolyFunction.monomial(
        n, {"zb0": 1}, witt_dagger(0, n, True) * witt(1, n, True), has_z0=True)


def test_criterion_10_cli(capsys, tmp_path):
    c = Check(10)
    example = tmp_path / "f.json"
    example.write_text(ser.dumps(_class1_example()))
    cases = {
        "hermite": (["hermite", "--type", "4", "--p", "2", "--n", "2"],
                    ["hermite", "--type", "9"],
                    ["hermite", "--type", "4", "--p", "-2", "--n", "1"]),
        "ck": (["ck", "--kind", "II", "--s", "2", "--n", "2", "--K", "3"],
               ["ck", "--kind", "V"],
               ["ck", "--kind", "double", "--K", "2"]),
        "vekua": (["vekua", "--kind", "z0bar_power", "--s", "2", "--alpha1", "1", "--delta1", "-1/2", "--K", "3"],
                  ["vekua", "--K", "two"],
                  ["vekua", "--kind", "z0bar_power", "--s", "0"]),
        "powers": (["powers", "--s", "2", "--alpha2", "1", "--delta2", "1", "--n", "2", "--expand"],
                   ["powers", "--alpha1", "1"],
                   ["powers", "--s", "1/3", "--expand"]),
        "bessel": (["bessel", "--lambda", "1", "--mu", "-2", "--n", "2", "--alpha1", "1", "--alpha2", "1"],
                   ["bessel", "--t", "1.0"],
                   ["bessel", "--alpha", "-1", "--t", "1.0"]),
        "verify": (["verify", "--input", str(example)],
                   ["verify", "--bogus"],
                   ["verify", "--input", str(tmp_path / "missing.json")]),
    }
    outputs = {}
    for sub, (ok, usage, pre) in cases.items():
        code, out = _cli(ok, capsys)
        c.expect(code == 0, f"{sub} success exit {code}")
        c.expect(_cli(ok, capsys)[1] == out, f"{sub} deterministic")
        c.expect(_cli(usage, capsys)[0] == 1, f"{sub} usage exit")
        c.expect(_cli(pre, capsys)[0] == 2, f"{sub} precondition exit")
        outputs[sub] = json.loads(out)
    # round trips of every serialized object in the outputs
    h = outputs["hermite"]
    for key in ("rodrigues", "closed_form"):
        c.expect(ser.poly_to_dict(ser.poly_from_dict(h[key])) == h[key], f"hermite {key} round trip")
    t = outputs["ck"]["table"]
    c.expect(ser.cktable_to_dict(ser.cktable_from_dict(t)) == t, "cktable round trip")
    for sub in ("vekua", "powers"):
        a = outputs[sub]["solution"]
        c.expect(ser.axial_to_dict(ser.axial_from_dict(a)) == a, f"{sub} axial round trip")
    e = outputs["powers"]["expanded"]["function"]
    c.expect(ser.poly_to_dict(ser.poly_from_dict(e)) == e, "expanded round trip")
    for name, s in outputs["bessel"]["series"].items():
        c.expect(ser.nuseries_to_dict(ser.nuseries_from_dict(s)) == s, f"nuseries {name} round trip")
    for name, fam in outputs["verify"]["residuals"].items():
        for key, r in fam.items():
            c.expect(ser.poly_to_dict(ser.poly_from_dict(r["value"])) == r["value"], f"verify {key} round trip")
    v = outputs["verify"]["zero"]
    c.expect(v["submonogenic"] and v["components"], "verify: Class I example residuals")
    c.finish()


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
