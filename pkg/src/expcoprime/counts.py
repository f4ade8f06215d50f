"""Exact counting functions.

Two families live here.  The integer-domain counters enumerate exponent
vectors (a_1, ..., a_r >= 1) with prod(p_i**a_i) <= x, deciding the boundary
with exact big-integer products -- never floating-point logarithms -- so
counts at x = p**k versus x = p**k - 1 differ exactly where they should.
The real-domain simplex counters take arbitrary positive real weights t_i
and bound z; a lattice point k is inside iff its weighted sum, accumulated
left to right in double precision, satisfies t_1*k_1 + ... + t_r*k_r <= z
with no tolerance.  Tests should keep z away from lattice boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .arith import Factorization, KernelSpec, euler_phi, factorize, is_exp_coprime, kernel

# brute-force pair scans are quadratic in the number of same-kernel integers
PAIR_SCAN_LIMIT = 10**6


@dataclass(frozen=True)
class SimplexConstraint:
    """Weighted simplex {k : k_i >= 1, sum k_i * weights[i] <= bound}."""

    weights: tuple[float, ...]
    bound: float

    def __post_init__(self) -> None:
        weights = tuple(float(t) for t in self.weights)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "bound", float(self.bound))
        if not weights:
            raise ValueError("at least one weight is required")
        if any(t <= 0 for t in weights):
            raise ValueError("weights must be positive")


# ---------------------------------------------------------------------------
# integer-domain counters (exact big-int boundary comparisons)

def iter_exponent_vectors(spec: KernelSpec, x: int) -> Iterator[tuple[int, ...]]:
    """Yield every exponent vector (a_1..a_r >= 1) with prod p_i**a_i <= x.

    Outermost coordinate first; each coordinate runs while the partial
    product times the minimal contribution of the remaining primes still
    fits under x.
    """
    primes = spec.primes
    r = len(primes)
    # tail[i] = product of primes[i:], the least the remaining coordinates cost
    tail = [1] * (r + 1)
    for i in reversed(range(r)):
        tail[i] = tail[i + 1] * primes[i]

    def rec(i: int, prod: int) -> Iterator[tuple[int, ...]]:
        p = primes[i]
        rest = tail[i + 1]
        v = prod * p
        e = 1
        if i == r - 1:
            while v <= x:
                yield (e,)
                v *= p
                e += 1
        else:
            while v * rest <= x:
                for suffix in rec(i + 1, v):
                    yield (e, *suffix)
                v *= p
                e += 1

    if x >= tail[0]:
        yield from rec(0, 1)


def count_fixed_kernel(spec: KernelSpec, x: int) -> int:
    """Number of n <= x whose kernel is exactly prod(spec.primes)."""
    if x < 1:
        raise ValueError("x must be a positive integer")
    return sum(1 for _ in iter_exponent_vectors(spec, x))


def legendre_count(x: int, f: Factorization) -> int:
    """Number of k <= x exponentially coprime to the integer with
    factorization f.

    Such k share f's primes with exponents c_i coprime to a_i.  For f = 1
    only k = 1 qualifies, so the count is 1 for every x >= 1.
    """
    if x < 1:
        raise ValueError("x must be a positive integer")
    if not f.pairs:
        return 1
    primes = f.primes
    exps = f.exponents
    r = len(primes)
    tail = [1] * (r + 1)
    for i in reversed(range(r)):
        tail[i] = tail[i + 1] * primes[i]

    def rec(i: int, prod: int) -> int:
        p = primes[i]
        a = exps[i]
        rest = tail[i + 1]
        v = prod * p
        e = 1
        total = 0
        if i == r - 1:
            while v <= x:
                if math.gcd(e, a) == 1:
                    total += 1
                v *= p
                e += 1
        else:
            while v * rest <= x:
                if math.gcd(e, a) == 1:
                    total += rec(i + 1, v)
                v *= p
                e += 1
        return total

    return rec(0, 1) if x >= tail[0] else 0


def _componentwise_coprime(u: tuple[int, ...], v: tuple[int, ...]) -> bool:
    for a, b in zip(u, v):
        if math.gcd(a, b) != 1:
            return False
    return True


def count_exp_coprime_pairs(spec: KernelSpec, x: int) -> int:
    """Ordered pairs <n, m>, both <= x with kernel prod(spec.primes), that
    are exponentially coprime.  <n, n> counts once when n is squarefree."""
    if x < 1:
        raise ValueError("x must be a positive integer")
    vecs = list(iter_exponent_vectors(spec, x))
    total = 0
    for i, u in enumerate(vecs):
        if all(e == 1 for e in u):
            total += 1  # the diagonal pair; gcd(a, a) = 1 forces a = 1
        for v in vecs[i + 1:]:
            if _componentwise_coprime(u, v):
                total += 2
    return total


def count_pairs_by_scan(spec: KernelSpec, x: int) -> int:
    """Brute-force oracle for count_exp_coprime_pairs: factor every n <= x,
    keep those with the requested kernel, test all ordered pairs."""
    if x < 1:
        raise ValueError("x must be a positive integer")
    if x > PAIR_SCAN_LIMIT:
        raise ValueError(f"scan limited to x <= {PAIR_SCAN_LIMIT}")
    target = spec.value()
    members = []
    for n in range(2, x + 1):
        f = factorize(n)
        if kernel(f) == target:
            members.append(f)
    return sum(1 for f in members for g in members if is_exp_coprime(f, g))


# ---------------------------------------------------------------------------
# exact sums over integers

@lru_cache(maxsize=4)
def _totient_range(limit: int) -> tuple[int, ...]:
    """phi(0..limit) by the usual in-place sieve."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # untouched, hence prime
            for m in range(p, limit + 1, p):
                phi[m] -= phi[m] // p
    return tuple(phi)


def coprime_power_sum(z: float, s: int, a: int) -> int:
    """Exact sum of n**s over n <= z with gcd(n, a) = 1."""
    if z < 1:
        raise ValueError("z must be at least 1")
    if s < 0:
        raise ValueError("s must be a nonnegative integer")
    if a < 1:
        raise ValueError("a must be a positive integer")
    m = math.floor(z)
    if s == 0:
        return sum(1 for n in range(1, m + 1) if math.gcd(n, a) == 1)
    return sum(n**s for n in range(1, m + 1) if math.gcd(n, a) == 1)


def totient_power_sum(z: float, s: int) -> int | Fraction:
    """Exact sum of phi(n) * n**s over n <= z, for integer s >= -1.

    Integer for s >= 0; an exact Fraction for s = -1 (meant for moderate z;
    the rational path reduces after every term).
    """
    if z < 1:
        raise ValueError("z must be at least 1")
    if s < -1:
        raise ValueError("s must be an integer >= -1")
    m = math.floor(z)
    phi = _totient_range(m)
    if s == 0:
        return sum(phi[1:])
    if s > 0:
        return sum(ph * n**s for n, ph in enumerate(phi[1:], start=1))
    return sum((Fraction(ph, n) for n, ph in enumerate(phi[1:], start=1)),
               start=Fraction(0))


# ---------------------------------------------------------------------------
# real-domain simplex counters

def iter_simplex_vectors(c: SimplexConstraint) -> Iterator[tuple[int, ...]]:
    """Yield lattice vectors k >= 1 with left-to-right weighted sum <= bound."""
    weights = c.weights
    bound = c.bound
    r = len(weights)

    def rec(i: int, partial: float) -> Iterator[tuple[int, ...]]:
        t = weights[i]
        k = 1
        while partial + k * t <= bound:
            if i == r - 1:
                yield (k,)
            else:
                for suffix in rec(i + 1, partial + k * t):
                    yield (k, *suffix)
            k += 1

    yield from rec(0, 0.0)


def simplex_coprime_count(c: SimplexConstraint, a: tuple[int, ...]) -> int:
    """Lattice points of the simplex whose i-th coordinate is coprime to a_i."""
    weights = c.weights
    bound = c.bound
    r = len(weights)
    if len(a) != r:
        raise ValueError("a must give one modulus per weight")
    if any(ai < 1 for ai in a):
        raise ValueError("moduli must be positive integers")

    def rec(i: int, partial: float) -> int:
        t = weights[i]
        ai = a[i]
        k = 1
        total = 0
        if i == r - 1:
            while partial + k * t <= bound:
                if math.gcd(k, ai) == 1:
                    total += 1
                k += 1
        else:
            while partial + k * t <= bound:
                if math.gcd(k, ai) == 1:
                    total += rec(i + 1, partial + k * t)
                k += 1
        return total

    return rec(0, 0.0)


def simplex_totient_sum(c: SimplexConstraint) -> Fraction:
    """Exact sum of prod_i phi(k_i)/k_i over the simplex lattice points."""
    weights = c.weights
    bound = c.bound
    r = len(weights)

    @lru_cache(maxsize=None)
    def phi_ratio(k: int) -> Fraction:
        return Fraction(euler_phi(k), k)

    def rec(i: int, partial: float) -> Fraction:
        t = weights[i]
        k = 1
        total = Fraction(0)
        if i == r - 1:
            while partial + k * t <= bound:
                total += phi_ratio(k)
                k += 1
        else:
            while partial + k * t <= bound:
                total += phi_ratio(k) * rec(i + 1, partial + k * t)
                k += 1
        return total

    return rec(0, 0.0)


def simplex_totient_sum_float(c: SimplexConstraint) -> float:
    """Double-precision view of simplex_totient_sum."""
    return float(simplex_totient_sum(c))


def simplex_coprime_pair_count(c: SimplexConstraint) -> int:
    """Ordered pairs <k, j> of simplex lattice points with gcd(k_i, j_i) = 1
    for every coordinate."""
    return sum(simplex_coprime_count(c, k) for k in iter_simplex_vectors(c))
