import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hclif.besselexp import (
    ExpParams,
    bessel_csv,
    bessel_derivative_identity_check,
    bessel_series,
    bessel_series_exact,
    exp_closed_forms,
    exp_residuals,
    exp_solution,
    ode_residual,
    scaled_bessel_nuseries,
)
from hclif.vekua import BetaPoly, NuSeries


class TestNumeric:
    def test_values_at_zero(self):
        assert bessel_series(0, "J", 0.0) == 1.0
        assert bessel_series(0, "I", 0.0) == 1.0
        assert bessel_series(3, "J", 0.0) == 0.0

    def test_j1_of_1(self):
        assert abs(bessel_series(1, "J", 1.0) - 0.4400505857) < 1e-9

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 8), st.sampled_from("JI"), st.floats(0, 10, allow_nan=False))
    def test_matches_exact_series(self, alpha, kind, t):
        exact = bessel_series_exact(alpha, kind, t, 60)
        assert abs(Fraction(bessel_series(alpha, kind, t)) - exact) < Fraction(1, 10 ** 12)

    def test_recurrence_relation(self):
        # J_{a-1} + J_{a+1} = (2a/t) J_a
        for a in range(1, 6):
            for t in (0.5, 3.0, 7.25):
                lhs = bessel_series(a - 1, "J", t) + bessel_series(a + 1, "J", t)
                assert math.isclose(lhs, 2 * a / t * bessel_series(a, "J", t), abs_tol=1e-12)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            bessel_series(0, "K", 1.0)
        with pytest.raises(ValueError):
            bessel_series(-1, "J", 1.0)
        with pytest.raises(ValueError):
            bessel_series(0, "J", -1.0)

    def test_csv(self):
        text = bessel_csv(0, "J", [0.0, 1.0])
        assert text.splitlines()[0] == "t,J_0(t)"
        assert text.splitlines()[1] == "0.0,1.0"


class TestScaledSeries:
    def test_order_zero(self):
        s = scaled_bessel_nuseries(0, 1, 2)
        assert s == NuSeries(0, {0: 1, 1: -1, 2: Fraction(1, 4)}, order=2)

    @pytest.mark.parametrize("n", [0, 1, 3])
    def test_constant_term(self, n):
        assert scaled_bessel_nuseries(n, 5, 4).coefficient(0) == Fraction(1, math.factorial(n))

    def test_a_zero(self):
        s = scaled_bessel_nuseries(2, 0, 5)
        assert s.terms == {0: BetaPoly.const(2, Fraction(1, 2))}

    def test_branches_differ_only_by_sign(self):
        j, i = scaled_bessel_nuseries(2, 3, 6), scaled_bessel_nuseries(2, -3, 6)
        for k in range(7):
            assert i.coefficient(k) == j.coefficient(k) * (-1) ** k
            assert i.coefficient(k).coeffs[0] > 0

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_cross_representation(self, n):
        # nu^(-n/2) J_n(2 sqrt(nu)) = S_n(nu) with a = 1
        for nu in (Fraction(1, 4), Fraction(9, 4), Fraction(4)):
            t = 2 * math.sqrt(nu)
            series = sum(c.coeffs[0] * nu ** int(e) for e, c in scaled_bessel_nuseries(n, 1, 40).terms.items())
            assert abs(float(series) - bessel_series(n, "J", t) / float(nu) ** (n / 2)) < 1e-12


class TestExpSolution:
    def test_zero_amplitudes(self):
        sol = exp_solution(ExpParams(1, 2, 2), 6)
        assert all(not s for s in sol.series.values())

    def test_example(self):
        n = 1
        sol = exp_solution(ExpParams(1, 1, n, 0, 1), 6)
        S = scaled_bessel_nuseries(1, 1, 6)
        assert sol["c"] == S
        assert sol["a1"] == S * BetaPoly.beta(n)
        assert sol["a2"] == S.derivative()

    def test_lambda_mu_nonzero(self):
        with pytest.raises(ValueError):
            exp_solution(ExpParams(0, 1, 1, 1, 1), 4)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("lam,mu", [(1, 1), (-3, 2), (Fraction(1, 2), -3), (3, 3)])
    def test_systems_and_closed_forms(self, n, lam, mu):
        p = ExpParams(lam, mu, n, Fraction(2, 3), -1)
        sol = exp_solution(p, 12)
        assert all(not r for r in exp_residuals(sol).values())
        closed = exp_closed_forms(p, 12)
        assert closed["a2"].agrees(sol["a2"]) and closed["d2"].agrees(sol["d2"])

    def test_ode_residual_detects_wrong_series(self):
        y = NuSeries.from_coeffs(1, [1, 1, 1], order=2)
        assert ode_residual(y, 1, 1)


@pytest.mark.parametrize("n,a,M", [(0, 1, 6), (3, 2, 8), (2, -5, 8), (1, 0, 4)])
def test_derivative_identity(n, a, M):
    report = bessel_derivative_identity_check(n, a, M)
    assert len(report) == M
    assert all(r["match"] for r in report)
    if a == 0:
        assert all(r["derivative"] == 0 == r["target"] for r in report)
