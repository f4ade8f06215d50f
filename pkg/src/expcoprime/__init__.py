"""Exponential divisors, exponentially coprime integers, and the
asymptotics of their counting functions."""

from .arith import (
    DifferentKernelsError,
    Factorization,
    KernelSpec,
    euler_phi,
    exponential_divisors,
    factorize,
    gcd_e,
    is_exp_coprime,
    kernel,
    sigma_e,
    tau_e,
    theta,
)
from .asymptotics import (
    AsymptoticReport,
    compare,
    coprime_power_sum_main,
    density_limit,
    kernel_count_main,
    legendre_count_error_scale,
    legendre_count_main,
    pair_count_error_scale,
    pair_count_main,
    simplex_coprime_count_main,
    simplex_coprime_pair_count_main,
    simplex_totient_sum_main,
    totient_power_sum_main,
    zeta2,
)
from .counts import (
    SimplexConstraint,
    coprime_power_sum,
    count_exp_coprime_pairs,
    count_fixed_kernel,
    count_pairs_by_scan,
    iter_exponent_vectors,
    iter_simplex_vectors,
    legendre_count,
    simplex_coprime_count,
    simplex_coprime_pair_count,
    simplex_totient_sum,
    simplex_totient_sum_float,
    totient_power_sum,
)
from .experiments import (
    ConvergenceRow,
    DensityScanRow,
    density_convergence,
    density_scan,
    emit_table,
    legendre_convergence,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticReport",
    "ConvergenceRow",
    "DensityScanRow",
    "DifferentKernelsError",
    "Factorization",
    "KernelSpec",
    "SimplexConstraint",
    "compare",
    "coprime_power_sum",
    "coprime_power_sum_main",
    "count_exp_coprime_pairs",
    "count_fixed_kernel",
    "count_pairs_by_scan",
    "density_convergence",
    "density_limit",
    "density_scan",
    "emit_table",
    "euler_phi",
    "exponential_divisors",
    "factorize",
    "gcd_e",
    "is_exp_coprime",
    "iter_exponent_vectors",
    "iter_simplex_vectors",
    "kernel",
    "kernel_count_main",
    "legendre_convergence",
    "legendre_count",
    "legendre_count_error_scale",
    "legendre_count_main",
    "pair_count_error_scale",
    "pair_count_main",
    "sigma_e",
    "simplex_coprime_count",
    "simplex_coprime_count_main",
    "simplex_coprime_pair_count",
    "simplex_coprime_pair_count_main",
    "simplex_totient_sum",
    "simplex_totient_sum_float",
    "simplex_totient_sum_main",
    "tau_e",
    "theta",
    "totient_power_sum",
    "totient_power_sum_main",
    "zeta2",
]
