"""
Hermite polynomials from the Gaussian
=====================================

Apply the Hermitian Dirac operators to exp(-|z|^2/2), then compare with
the Laguerre closed form.
"""

from hclif import PolyFunction, ck_class1, hermite_closed_form, hermite_rodrigues
from hclif.hermite import gaussian_ck_coefficients

n = 1
for type_id in (1, 2, 3, 4):
    for p in range(3):
        rod = hermite_rodrigues(type_id, p, n)
        closed = hermite_closed_form(type_id, p, n)
        print(f"H{type_id},{p}: degree {rod.degree}, closed form agrees: {rod.value == closed.value}")

print()
print("H3,1 =", hermite_rodrigues(3, 1, n).value)

# the CK extension of the Gaussian carries these polynomials as coefficients
table = ck_class1(PolyFunction.gaussian(n), PolyFunction.zero(n), 3)
for k in range(1, 4):
    print(f"A_{k} from Laguerre form matches solver:",
          gaussian_ck_coefficients(k, n, "A")["A"] == table["A"][k])
