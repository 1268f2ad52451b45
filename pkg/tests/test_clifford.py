import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from hclif.clifford import (
    CliffordElement,
    GaussianRational,
    I,
    beta,
    blade_mul,
    hermitian_inner,
    idempotent,
    indices_to_mask,
    norm_sq,
    scalar_part,
    witt,
    witt_dagger,
)

from helpers import rand_clifford, subsets, wedge


def brute_sign(a, b):
    """Sign of e_a e_b by bubble-sorting the concatenated index word."""
    word = list(a) + list(b)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
    out = []
    for x in word:
        if out and out[-1] == x:
            out.pop()
            sign = -sign  # e_j^2 = -1
        else:
            out.append(x)
    return sign, tuple(out)


def e(j, n=2, with_z0=False):
    return CliffordElement.generator(j, n, with_z0)


def one(n=2, with_z0=False):
    return CliffordElement.scalar(n, 1, with_z0)


class TestBladeMul:
    def test_unit_blade(self):
        assert blade_mul((), (2,), 4) == (GaussianRational(1), (2,))

    def test_overlap_sign(self):
        # e1 e2 e2 e3 = -e1 e3
        assert blade_mul((1, 2), (2, 3), 4) == (GaussianRational(-1), (1, 3))

    def test_against_bubble_sort(self):
        for a in subsets(4):
            for b in subsets(4):
                sign, idx = blade_mul(a, b, 4)
                assert (sign, idx) == (GaussianRational(brute_sign(a, b)[0]), brute_sign(a, b)[1])

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            blade_mul((5,), (), 4)


class TestProducts:
    def test_generator_squares(self):
        for j in range(1, 5):
            assert e(j) * e(j) == -one()

    def test_anticommute(self):
        assert e(1) * e(3) == -(e(3) * e(1))

    def test_unit(self):
        x = e(1) + e(2) * e(3)
        assert x * one() == x == one() * x

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            e(1, 1) * e(1, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3), st.booleans())
def test_associativity(seed, n, z0):
    rng = random.Random(seed)
    x, y, z = (rand_clifford(rng, n, z0) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_conjugations_reverse_products(seed, n):
    rng = random.Random(seed)
    x, y = rand_clifford(rng, n), rand_clifford(rng, n)
    assert (x * y).dagger() == y.dagger() * x.dagger()
    assert (x * y).bar() == y.bar() * x.bar()
    assert x.dagger().dagger() == x
    assert x.bar().bar() == x


class TestConjugations:
    def test_dagger_generator(self):
        assert e(1).dagger() == -e(1)

    def test_dagger_one(self):
        assert one().dagger() == one()

    def test_dagger_witt(self):
        assert witt(1, 2).dagger() == witt_dagger(1, 2)

    def test_bar_bivector(self):
        # (e1 e2)bar = (-e2)(-e1) = -e1 e2
        b = e(1) * e(2)
        assert b.bar() == -b

    def test_bar_is_complex_linear(self):
        assert one().scale(I).bar() == one().scale(I)
        assert one().scale(I).dagger() == one().scale(-I)


class TestScalarPartAndNorm:
    def test_scalar_part_witt(self):
        assert scalar_part(witt_dagger(1, 1) * witt(1, 1)) == GaussianRational(Fraction(1, 2))

    def test_scalar_part_vector(self):
        assert scalar_part(e(1)) == GaussianRational(0)

    def test_scalar_part_scalar(self):
        assert scalar_part(one().scale(GaussianRational(3, -2))) == GaussianRational(3, -2)

    def test_inner_products(self):
        assert hermitian_inner(e(1), e(1)) == GaussianRational(1)
        assert hermitian_inner(one(), e(1)) == GaussianRational(0)
        assert norm_sq(CliffordElement.zero(2)) == 0

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_norm_is_sum_of_squares(self, seed):
        x = rand_clifford(random.Random(seed), 2, nterms=4)
        assert norm_sq(x) == sum(c.abs_sq() for c in x.terms.values())


class TestWitt:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_isotropy_and_duality(self, n):
        zero = CliffordElement.zero(n)
        for j in range(1, n + 1):
            assert witt(j, n) * witt(j, n) == zero
            assert witt_dagger(j, n) * witt_dagger(j, n) == zero
            for k in range(1, n + 1):
                anti = witt(j, n) * witt_dagger(k, n) + witt_dagger(k, n) * witt(j, n)
                assert anti == (one(n) if j == k else zero)
                assert witt(j, n) * witt(k, n) == -(witt(k, n) * witt(j, n))

    def test_f0_lives_in_extra_generators(self):
        f0 = witt(0, 2, True)
        assert f0.max_generator() == 6
        with pytest.raises(ValueError):
            witt(0, 2, False)

    def test_beta_squared_n1(self):
        b = beta(1)
        assert b * b == b

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_beta_characteristic_equation(self, n):
        b = beta(n)
        prod = one(n)
        for j in range(n + 1):
            prod = prod * (b - one(n).scale(j))
        assert prod.is_zero()

    def test_beta_eigenvalues_n2(self):
        n = 2
        Id = idempotent(n)
        assert Id * Id == Id
        for A in subsets(n):
            v = wedge([witt_dagger(j, n) for j in A], n, False) * Id
            assert beta(n) * v == v.scale(len(A))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_idempotent_factors_commute(self, n):
        facs = [witt(j, n) * witt_dagger(j, n) for j in range(1, n + 1)]
        for a in facs:
            for b in facs:
                assert a * b == b * a
        prod = one(n)
        for f in reversed(facs):
            prod = prod * f
        assert prod == idempotent(n)


class TestEmbedding:
    def test_embed_restrict_round_trip(self):
        x = e(1) * e(3) + one().scale(I)
        assert x.embed().restrict() == x

    def test_restrict_rejects_f0_blades(self):
        with pytest.raises(ValueError):
            witt(0, 2, True).restrict()

    def test_mask_helpers(self):
        assert indices_to_mask((1, 3)) == 0b101
