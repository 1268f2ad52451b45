"""
The Witt basis and the Euler element beta
=========================================

"""

from hclif import CliffordElement, beta, idempotent, witt, witt_dagger

n = 2
f1, f2 = witt(1, n), witt(2, n)
f1d, f2d = witt_dagger(1, n), witt_dagger(2, n)

# isotropy and the fermionic anticommutator
print("f1 f1 =", f1 * f1)
print("f1 f1^dagger + f1^dagger f1 =", f1 * f1d + f1d * f1)

# beta = f1^dagger f1 + f2^dagger f2, written out in e-blades
b = beta(n)
print("beta =", b)

# beta(beta - 1)(beta - 2) = 0
one = CliffordElement.scalar(n, 1)
print("characteristic polynomial:", b * (b - one) * (b - one.scale(2)))

# spinors f_A^dagger I are eigenvectors, eigenvalue |A|
I = idempotent(n)
for name, v, k in [("I", I, 0), ("f1d I", f1d * I, 1), ("f1d f2d I", f1d * f2d * I, 2)]:
    print(f"beta {name} = {k} {name}:", b * v == v.scale(k))
