"""Exact integer and prime primitives shared by the rest of the package.

All integer arithmetic is exact: values are plain Python ints (unbounded),
rationals are ``fractions.Fraction`` (always lowest terms, positive
denominator).  Floating point appears only in ``theta``, which feeds
diagnostics, never correctness-critical logic.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceLimitError

gcd = math.gcd

#: sieve_primes refuses limits above this unless the caller raises the budget
#: (a bytearray of this size is ~256 MB).
DEFAULT_SIEVE_BUDGET = 1 << 28


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit``, ascending."""

    limit: int
    primes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)


def sieve_primes(limit: int, budget: int = DEFAULT_SIEVE_BUDGET) -> PrimeTable:
    """Sieve of Eratosthenes: every prime <= limit."""
    if limit < 0:
        raise DomainError(f"sieve limit must be >= 0, got {limit}")
    if limit > budget:
        raise ResourceLimitError(
            f"sieve limit {limit} exceeds memory budget {budget}"
        )
    if limit < 2:
        return PrimeTable(limit, ())
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            step = bytes(len(range(p * p, limit + 1, p)))
            flags[p * p :: p] = step
    return PrimeTable(limit, tuple(i for i in range(2, limit + 1) if flags[i]))


# Shared table for trial division; grown on demand under a lock.  Factoring
# n needs primes up to sqrt(n), so the default covers n <= 10^12.
_table_lock = threading.Lock()
_shared_table: PrimeTable = sieve_primes(1 << 16)


def shared_prime_table(min_limit: int) -> PrimeTable:
    """Return the shared prime table, grown to cover at least ``min_limit``."""
    global _shared_table
    table = _shared_table
    if table.limit >= min_limit:
        return table
    with _table_lock:
        if _shared_table.limit < min_limit:
            grown = max(min_limit, _shared_table.limit * 2)
            _shared_table = sieve_primes(grown)
        return _shared_table


def nth_primes(r: int) -> tuple[int, ...]:
    """First r primes, ascending."""
    if r < 0:
        raise DomainError(f"prime count must be >= 0, got {r}")
    # p_r < r(ln r + ln ln r) for r >= 6; below that 13 is a safe cap.
    bound = 13 if r < 6 else int(r * (math.log(r) + math.log(math.log(r)))) + 1
    table = shared_prime_table(bound)
    while len(table.primes) < r:
        table = shared_prime_table(table.limit * 2)
    return table.primes[:r]


def distinct_prime_factors(n: int) -> tuple[int, ...]:
    """Ascending distinct primes dividing n (trial division; n >= 1)."""
    if n < 1:
        raise DomainError(f"factorization needs n >= 1, got {n}")
    if n == 1:
        return ()
    factors = []
    rest = n
    table = shared_prime_table(min(math.isqrt(n) + 1, 1 << 16))
    i = 0
    while rest > 1:
        root = math.isqrt(rest)
        if i == len(table.primes):
            if table.limit >= root:
                break  # remaining cofactor is prime
            table = shared_prime_table(max(root, table.limit * 2))
            continue
        p = table.primes[i]
        if p > root:
            break
        if rest % p == 0:
            factors.append(p)
            while rest % p == 0:
                rest //= p
        i += 1
    if rest > 1:
        factors.append(rest)
    return tuple(factors)


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a modulo the prime p, in [1, p-1]."""
    if p < 2:
        raise DomainError(f"modulus must be a prime >= 2, got {p}")
    if a % p == 0:
        raise DomainError(f"{a} is divisible by {p}, no inverse exists")
    try:
        return pow(a, -1, p)
    except ValueError as exc:  # non-invertible => p was not prime
        raise DomainError(f"{a} is not invertible mod {p}") from exc


def omega(n: int) -> int:
    """Number of distinct prime factors of n; omega(1) = 0."""
    if n < 1:
        raise DomainError(f"omega needs n >= 1, got {n}")
    return len(distinct_prime_factors(n))


def radical(n: int) -> int:
    """Squarefree kernel: product of the distinct primes dividing n."""
    if n < 1:
        raise DomainError(f"radical needs n >= 1, got {n}")
    return math.prod(distinct_prime_factors(n))


def theta(x: int) -> float:
    """Chebyshev theta: sum of ln p over primes p strictly below x."""
    if x < 0:
        raise DomainError(f"theta needs x >= 0, got {x}")
    if x <= 2:
        return 0.0
    table = shared_prime_table(x - 1)
    return sum(math.log(p) for p in table.primes if p < x)


def primorial(r: int) -> int:
    """Product of the first r primes; primorial(0) = 1."""
    return math.prod(nth_primes(r))


def parse_rational(text: str) -> Fraction:
    """Parse 'num/den' or an exact decimal string into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Render a Fraction as 'num/den' (integers keep an explicit /1)."""
    return f"{q.numerator}/{q.denominator}"
