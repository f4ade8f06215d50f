"""Exact arithmetic of exponential divisors.

A divisor d = prod(p_i**c_i) of n = prod(p_i**a_i) (same primes) is an
*exponential divisor* of n when c_i divides a_i for every i.  By convention
1 is an exponential divisor of 1 and of nothing else; the smallest
exponential divisor of n > 1 is its squarefree kernel.  Two integers are
*exponentially coprime* when they have the same kernel and the matching
exponents are coprime componentwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

# factorize() is plain trial division, which is the right tool for the
# machine-word inputs this package deals in.
MAX_UINT64 = 2**64 - 1


class DifferentKernelsError(ValueError):
    """Raised when a greatest common exponential divisor does not exist."""


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, strictly increasing in
    the prime.  The empty tuple represents 1."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(p), int(a)) for p, a in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        last = 1
        for p, a in pairs:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if a < 1:
                raise ValueError("exponents must be positive")
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p

    def value(self) -> int:
        return math.prod(p**a for p, a in self.pairs)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.pairs)

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return " * ".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.pairs)


@dataclass(frozen=True)
class KernelSpec:
    """A nonempty, strictly increasing tuple of distinct primes."""

    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        primes = tuple(int(p) for p in self.primes)
        object.__setattr__(self, "primes", primes)
        if not primes:
            raise ValueError("kernel needs at least one prime")
        last = 1
        for p in primes:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p

    def value(self) -> int:
        return math.prod(self.primes)


def factorize(n: int) -> Factorization:
    """Factor a positive machine-word integer by trial division."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n > MAX_UINT64:
        raise ValueError("n does not fit in 64 bits")
    pairs = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            pairs.append((p, a))
    d, step = 5, 2
    while d * d <= m:
        if m % d == 0:
            a = 0
            while m % d == 0:
                m //= d
                a += 1
            pairs.append((d, a))
        d += step
        step = 6 - step  # 5, 7, 11, 13, ... wheel
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def kernel(f: Factorization) -> int:
    """Squarefree kernel: the product of the distinct primes (1 for 1)."""
    return math.prod(f.primes)


def euler_phi(a: int) -> int:
    if a < 1:
        raise ValueError("a must be a positive integer")
    result = 1
    for p, e in factorize(a).pairs:
        result *= (p - 1) * p ** (e - 1)
    return result


def theta(a: int) -> int:
    """Number of squarefree divisors of a, i.e. 2**omega(a)."""
    return 2 ** len(factorize(a).pairs)


def _divisors(a: int) -> list[int]:
    return [d for d in range(1, a + 1) if a % d == 0]


def exponential_divisors(f: Factorization) -> list[Factorization]:
    """All exponential divisors of f, in increasing numeric order.

    Per prime p**a the admissible exponents are the divisors of a; the
    divisors are all combinations.  For f = 1 the list is [1].
    """
    per_prime = [[(p, c) for c in _divisors(a)] for p, a in f.pairs]
    divs = [Factorization(combo) for combo in product(*per_prime)]
    divs.sort(key=Factorization.value)
    return divs


def tau_e(f: Factorization) -> int:
    """Count of exponential divisors: the product of tau(a_i)."""
    return math.prod(len(_divisors(a)) for a in f.exponents)


def sigma_e(f: Factorization) -> int:
    """Sum of the exponential divisors of f (exact integer)."""
    return math.prod(sum(p**c for c in _divisors(a)) for p, a in f.pairs)


def gcd_e(f: Factorization, g: Factorization) -> Factorization:
    """Greatest common exponential divisor.

    Defined only when f and g have the same kernel (componentwise gcd of the
    exponents); in particular gcd_e(1, 1) = 1, while gcd_e(1, m) does not
    exist for m > 1.
    """
    if f.primes != g.primes:
        raise DifferentKernelsError(
            "greatest common exponential divisor requires equal kernels"
        )
    return Factorization(
        tuple((p, math.gcd(a, b)) for (p, a), (_, b) in zip(f.pairs, g.pairs))
    )


def is_exp_coprime(f: Factorization, g: Factorization) -> bool:
    """True when f and g share their kernel and matching exponents are
    coprime.  Total: pairs with different kernels are simply not
    exponentially coprime, and (1, 1) is."""
    fp, gp = f.pairs, g.pairs
    if len(fp) != len(gp):
        return False
    for (p, a), (q, b) in zip(fp, gp):
        if p != q or math.gcd(a, b) != 1:
            return False
    return True
