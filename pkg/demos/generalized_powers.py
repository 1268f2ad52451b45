"""
Generalized powers
==================

Monomial initial data nu^s give axial solutions that are homogeneous
polynomials of degree 2s when s is a natural number.
"""

from fractions import Fraction

from hclif import axial_expand, generalized_powers, residuals_submonogenic
from hclif.vekua import alpha_coefficient, delta_coefficient, residuals_vanish, vekua_residuals

n = 2
args = (Fraction(1), Fraction(1, 2), Fraction(-1), Fraction(2))

# the coefficient sequences stop at k = s
for s in (1, 2, 3):
    alphas = [str(alpha_coefficient(k, s, *args, n)) for k in range(s + 2)]
    deltas = [str(delta_coefficient(k, s, *args, n)) for k in range(s + 2)]
    print(f"s={s} alpha: {alphas}")
    print(f"    delta: {deltas}")

s = 2
sol = generalized_powers(s, *args, s + 2, n)
print("Vekua residuals vanish:", residuals_vanish(vekua_residuals(sol)))

f = axial_expand(sol)
print("degrees:", f.degrees(), " terms:", len(f))
print("h-submonogenic:", all(r.is_zero() for r in residuals_submonogenic(f)))

# non-integer s still solves the Vekua system, just not as a polynomial
sol = generalized_powers(Fraction(1, 2), *args, 3, n)
print("s = 1/2, b_0 =", sol["b"][0])
