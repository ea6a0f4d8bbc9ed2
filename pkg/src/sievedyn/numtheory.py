"""Brute-force number-theory oracles: sieve, Goldbach counts, twin gaps."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt, log

import numpy as np


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: tuple[int, ...]

    def to_text(self) -> str:
        """Newline-delimited decimal serialization."""
        return "\n".join(str(p) for p in self.primes)


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@lru_cache(maxsize=16)
def _prime_flags(limit: int) -> np.ndarray:
    """Boolean array of length limit+1; flags[n] iff n is prime.  Do not mutate."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


def classic_sieve(limit: int) -> PrimeTable:
    """All primes <= limit, ascending."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    primes = tuple(int(p) for p in np.flatnonzero(_prime_flags(limit)))
    return PrimeTable(limit, primes)


def goldbach_r(n: int) -> int:
    """Number of unordered prime pairs {p, q} with p <= q and p + q = n."""
    if n % 2 != 0 or n < 4:
        raise ValueError("n must be an even integer >= 4")
    flags = _prime_flags(n)
    ps = np.flatnonzero(flags[: n // 2 + 1])
    return int(flags[n - ps].sum())


def twin_count(lo: int, hi: int) -> int:
    """Number of prime pairs (p, p+2) with p >= lo and p + 2 <= hi."""
    if not 1 <= lo < hi:
        raise ValueError("need 1 <= lo < hi")
    if hi < 4:
        return 0
    flags = _prime_flags(hi)
    a = flags[lo : hi - 1]
    b = flags[lo + 2 : hi + 1]
    return int((a & b).sum())


def prime_count_estimate(p: int) -> float:
    """The value p(p-2) / (2 ln p), an estimate of the prime count in (p, p^2)."""
    if p < 3 or not is_prime(p):
        raise ValueError("p must be a prime >= 3")
    return p * (p - 2) / (2.0 * log(p))
