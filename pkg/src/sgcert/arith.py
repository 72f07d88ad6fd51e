"""Trial-division number theory used throughout the package."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

MAX_FACTOR_INPUT = 1 << 63


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
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


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def next_prime(n: int) -> int:
    n += 1
    while not is_prime(n):
        n += 1
    return n


def factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 2`` as ``((p1, a1), (p2, a2), ...)`` with p1 < p2 < ..."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("factorize expects an int")
    if n < 2:
        raise ValueError(f"cannot factorize {n}: need n >= 2")
    if n > MAX_FACTOR_INPUT:
        raise ValueError(f"{n} exceeds the trial-division range 2**63")
    out = []
    for p in (2, 3):
        a = 0
        while n % p == 0:
            n //= p
            a += 1
        if a:
            out.append((p, a))
    d, step = 5, 2
    while d * d <= n:
        a = 0
        while n % d == 0:
            n //= d
            a += 1
        if a:
            out.append((d, a))
        d += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisor_count(n: int) -> int:
    if n == 1:
        return 1
    t = 1
    for _, a in factor_pairs(n):
        t *= a + 1
    return t
