"""Exact Hermitian Clifford analysis: Witt bases, Dirac operators, CK-extensions,
Hermite polynomials, axial Vekua solutions and Bessel-type series."""

from .clifford import (
    CliffordElement,
    GaussianRational,
    beta,
    blade_mul,
    hermitian_inner,
    idempotent,
    norm_sq,
    scalar_part,
    witt,
    witt_dagger,
)
from .polyfun import (
    PolyFunction,
    dirac_X,
    dirac_z,
    dirac_zdagger,
    laplacian,
    nu,
    partial,
    restrict_z0,
    vector_var,
)
from .ck import (
    CKTable,
    Decomposition,
    ck_class1,
    ck_class2,
    ck_class3,
    ck_double,
    compose,
    decompose,
    residuals_hmonogenic,
    residuals_submonogenic,
)
from .hermite import gaussian_ck_coefficients, hermite_closed_form, hermite_rodrigues, laguerre
from .vekua import (
    AxialSolution,
    BetaPoly,
    NuSeries,
    axial_expand,
    generalized_powers,
    vekua_residuals,
    vekua_solve_plain,
    vekua_solve_z0barpower,
    vekua_solve_z0power,
)
from .besselexp import ExpParams, bessel_series, exp_solution, scaled_bessel_nuseries

__version__ = "0.1.0"
