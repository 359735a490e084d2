"""Small integer helpers shared across the package.

Sizes here are tiny (primes below a few thousand, divisors of Hecke
indices), so trial division is the right tool.
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, ascending (simple sieve)."""
    if bound < 2:
        return []
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= bound:
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        p += 1
    return [i for i, f in enumerate(flags) if f]


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def divisor_power_sum(n: int, e: int) -> int:
    """sigma_e(n) = sum of d**e over positive divisors d of n."""
    return sum(d ** e for d in divisors(n))


def minimal_period(seq):
    """Smallest P with seq[i] == seq[i+P] across the whole window.

    Demands at least two full periods inside seq (P <= len(seq) // 2);
    returns None when no such P exists.
    """
    n = len(seq)
    for p in range(1, n // 2 + 1):
        if all(seq[i] == seq[i + p] for i in range(n - p)):
            return p
    return None
