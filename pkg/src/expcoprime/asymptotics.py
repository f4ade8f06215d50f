"""Leading-order approximations for the exact counters.

Each integer-domain counter has a main term of the form
c * (log x)**k obtained from the matching simplex evaluator at
z = log x, t_i = log p_i; the *_main functions here route through exactly
that substitution so the two readings agree bit for bit.  Error scales give
the order of the discarded remainder, for normalizing observed errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Factorization, KernelSpec, euler_phi, theta
from .counts import SimplexConstraint

MAX_FACTORIAL_R = 20  # past this, exact factorials stop being exact doubles anyway


@dataclass(frozen=True)
class AsymptoticReport:
    """An exact value against its main term.

    relative_error = |exact - main_term| / main_term; error_scale is the
    theoretical size of the remainder at the same argument.
    """

    exact: int | float | Fraction
    main_term: float
    relative_error: float
    error_scale: float


def zeta2() -> float:
    """zeta(2) = pi**2 / 6."""
    return math.pi * math.pi / 6.0


def density_limit(r: int) -> float:
    """Limiting density zeta(2)**-r of exponentially coprime pairs among
    ordered same-kernel pairs with r distinct primes."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    return zeta2() ** -r


def _factorial(r: int) -> float:
    if r > MAX_FACTORIAL_R:
        raise ValueError(f"dimension capped at r <= {MAX_FACTORIAL_R}")
    return float(math.factorial(r))


# ---------------------------------------------------------------------------
# simplex main terms (real weights t_i, bound z)

def simplex_coprime_count_main(c: SimplexConstraint, a: tuple[int, ...]) -> float:
    """(1/r!) * prod_i phi(a_i)/(a_i * t_i) * z**r."""
    r = len(c.weights)
    if len(a) != r:
        raise ValueError("a must give one modulus per weight")
    if any(ai < 1 for ai in a):
        raise ValueError("moduli must be positive integers")
    coef = 1.0 / _factorial(r)
    for t, ai in zip(c.weights, a):
        coef *= euler_phi(ai) / (ai * t)
    return coef * c.bound**r


def simplex_totient_sum_main(c: SimplexConstraint) -> float:
    """(1 / (r! * zeta(2)**r)) * prod_i 1/t_i * z**r."""
    r = len(c.weights)
    coef = 1.0 / (_factorial(r) * zeta2() ** r)
    for t in c.weights:
        coef *= 1.0 / t
    return coef * c.bound**r


def simplex_coprime_pair_count_main(c: SimplexConstraint) -> float:
    """(1 / ((r!)**2 * zeta(2)**r)) * prod_i 1/t_i**2 * z**(2r).

    Evaluated as the square of the all-ones coprime-count main term over
    zeta(2)**r, so it ties to simplex_coprime_count_main exactly.
    """
    r = len(c.weights)
    base = simplex_coprime_count_main(c, (1,) * r)
    return base * base / zeta2() ** r


def coprime_power_sum_main(z: float, s: int, a: int) -> float:
    """z**(s+1) * phi(a) / ((s+1) * a)."""
    if z < 1:
        raise ValueError("z must be at least 1")
    if s < 0:
        raise ValueError("s must be a nonnegative integer")
    if a < 1:
        raise ValueError("a must be a positive integer")
    return z ** (s + 1) * euler_phi(a) / ((s + 1) * a)


def totient_power_sum_main(z: float, s: int) -> float:
    """z**(s+2) / ((s+2) * zeta(2))."""
    if z < 1:
        raise ValueError("z must be at least 1")
    if s < -1:
        raise ValueError("s must be an integer >= -1")
    return z ** (s + 2) / ((s + 2) * zeta2())


# ---------------------------------------------------------------------------
# main terms for the integer-domain counters, via z = log x, t_i = log p_i

def _log_weights(primes: tuple[int, ...], x: int | float) -> SimplexConstraint:
    if x < 3:
        raise ValueError("x must be at least 3")
    return SimplexConstraint(tuple(math.log(p) for p in primes), math.log(x))


def legendre_count_main(x: int | float, f: Factorization) -> float:
    """Main term of legendre_count(x, f); requires f != 1 and x >= 3."""
    if not f.pairs:
        raise ValueError("the factorization must have at least one prime")
    return simplex_coprime_count_main(_log_weights(f.primes, x), f.exponents)


def legendre_count_error_scale(x: int | float, f: Factorization) -> float:
    """(log x)**(r-1) * sum_i theta(a_i)."""
    if not f.pairs:
        raise ValueError("the factorization must have at least one prime")
    if x < 3:
        raise ValueError("x must be at least 3")
    r = len(f.pairs)
    return math.log(x) ** (r - 1) * sum(theta(a) for a in f.exponents)


def kernel_count_main(x: int | float, spec: KernelSpec) -> float:
    """Main term of count_fixed_kernel(spec, x): the squarefree case of
    legendre_count_main, to which it is identical bit for bit."""
    f = Factorization(tuple((p, 1) for p in spec.primes))
    return legendre_count_main(x, f)


def pair_count_main(x: int | float, spec: KernelSpec) -> float:
    """Main term of count_exp_coprime_pairs(spec, x); requires x >= 3."""
    return simplex_coprime_pair_count_main(_log_weights(spec.primes, x))


def pair_count_error_scale(x: int | float, spec: KernelSpec) -> float:
    """(log x)**(2r-1) * log log x."""
    if x < 3:
        raise ValueError("x must be at least 3")
    r = len(spec.primes)
    return math.log(x) ** (2 * r - 1) * math.log(math.log(x))


def compare(exact: int | float | Fraction, main_term: float,
            error_scale: float) -> AsymptoticReport:
    """Bundle an exact value with its main term into an AsymptoticReport."""
    if main_term <= 0:
        raise ValueError("main_term must be positive")
    if error_scale < 0:
        raise ValueError("error_scale must be nonnegative")
    rel = abs(float(exact) - main_term) / main_term
    return AsymptoticReport(exact=exact, main_term=main_term,
                            relative_error=rel, error_scale=error_scale)
