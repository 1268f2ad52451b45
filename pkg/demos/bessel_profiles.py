"""
Exponential-type solutions and Bessel functions
===============================================

"""

from fractions import Fraction

from hclif import ExpParams, bessel_series, exp_solution
from hclif.besselexp import bessel_csv, exp_residuals

# J_n and I_n by direct series summation
for t in (0.5, 1.0, 5.0):
    print(f"t={t}: J0={bessel_series(0, 'J', t):.12f}  I1={bessel_series(1, 'I', t):.12f}")

# radial profiles for lambda mu > 0 (J branch); all share the factor (lambda mu)^(n/2)
params = ExpParams(lambda_=2, mu=Fraction(1, 2), n=2, alpha1=1, alpha2=Fraction(1, 3))
sol = exp_solution(params, 6)
for name in ("b", "c", "a2", "d2"):
    print(name, "=", sol[name])

print("all residuals vanish:", all(not r for r in exp_residuals(sol).values()))

# plot-ready table
print(bessel_csv(1, "J", [i / 2 for i in range(5)]))
