"""Random exact objects for property tests and the acceptance runner."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from hclif.clifford import CliffordElement, GaussianRational, witt, witt_dagger
from hclif.polyfun import PolyFunction
from hclif.vekua import BetaPoly, NuSeries


def rand_rat(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def rand_gauss(rng: random.Random) -> GaussianRational:
    return GaussianRational(rand_rat(rng), rand_rat(rng) if rng.random() < 0.5 else 0)


def rand_clifford(rng: random.Random, n: int, with_z0: bool = False, nterms: int = 3) -> CliffordElement:
    m = 2 * n + (2 if with_z0 else 0)
    return CliffordElement(n, {rng.randrange(1 << m): rand_gauss(rng) for _ in range(nterms)}, with_z0)


def rand_mono(rng: random.Random, n: int, has_z0: bool, max_deg: int):
    mono = [0] * (2 * n + 2)
    slots = 2 * n + (2 if has_z0 else 0)
    for _ in range(rng.randint(0, max_deg)):
        mono[rng.randrange(slots)] += 1
    return tuple(mono)


def rand_poly(rng: random.Random, n: int, has_z0: bool = False, max_deg: int = 3,
              nterms: int = 3, blade_terms: int = 2) -> PolyFunction:
    terms = {}
    for _ in range(nterms):
        mono = rand_mono(rng, n, has_z0, max_deg)
        c = rand_clifford(rng, n, has_z0, blade_terms)
        terms[mono] = terms[mono] + c if mono in terms else c
    return PolyFunction(n, has_z0, "none", terms)


def wedge(elems, n: int, with_z0: bool):
    out = CliffordElement.scalar(n, 1, with_z0)
    for e in elems:
        out = out * e
    return out


def rand_hmonogenic(rng: random.Random, n: int, max_deg: int = 3) -> PolyFunction:
    """Sums of h(z_J) f_J^dagger x and h(z̄_J) f_J y, which solve both Dirac equations."""
    f = PolyFunction.zero(n, True)
    idx = list(range(n + 1))  # 0 stands for the z0 direction
    for _ in range(rng.randint(1, 3)):
        J = rng.sample(idx, rng.randint(1, n + 1))
        holo = rng.random() < 0.5
        mono = [0] * (2 * n + 2)
        for _ in range(rng.randint(0, max_deg)):
            j = rng.choice(J)
            pos = (2 * n if holo else 2 * n + 1) if j == 0 else (j - 1 if holo else n + j - 1)
            mono[pos] += 1
        gens = [(witt_dagger if holo else witt)(j, n, True) for j in J]
        coeff = wedge(gens, n, True) * rand_clifford(rng, n, True, 2)
        f = f + PolyFunction(n, True, "none", {tuple(mono): coeff})
    return f


def rand_betapoly(rng: random.Random, n: int) -> BetaPoly:
    return BetaPoly(n, [rand_rat(rng) for _ in range(rng.randint(1, n + 1))])


def rand_nuseries(rng: random.Random, n: int, degree: int = 3) -> NuSeries:
    return NuSeries(n, {k: rand_betapoly(rng, n) for k in range(rng.randint(0, degree) + 1)})


def subsets(n: int):
    for r in range(n + 1):
        yield from combinations(range(1, n + 1), r)
