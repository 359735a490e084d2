"""Eichler-Selberg trace of T_n on level-1 cusp forms, in exact rationals.

For even k >= 4 and n >= 1 the trace equals

    -1/2 * sum over t^2 <= 4n of P_(k-1)(t, n) * H(4n - t^2)
    -1/2 * sum over d d' = n of min(d, d')^(k-1)

where P_(k-1) is the degree-(k-2) Gegenbauer-style polynomial defined
by the recursion U_0 = 0, U_1 = 1, U_j = t U_(j-1) - n U_(j-2), and H
is the Hurwitz class number with the convention H(0) = -1/12 (which
absorbs the boundary term t^2 = 4n when n is a perfect square).

Everything is assembled in fractions.Fraction; a non-integer total is
raised as a falsification, never rounded.  This module deliberately
shares no code with the Hecke-matrix path so the two can check each
other.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ._primes import divisors, minimal_period
from .errors import NonIntegralTrace, PeriodNotFound


def hurwitz_class_number(n: int) -> Fraction:
    """Hurwitz class number H(n) as an exact fraction.

    H(0) = -1/12; zero for n = 1, 2 mod 4; otherwise the number of
    reduced positive binary quadratic forms of discriminant -n, with
    forms proportional to x^2 + y^2 weighted 1/2 and forms proportional
    to x^2 + xy + y^2 weighted 1/3.
    """
    if n < 0:
        raise ValueError("negative discriminant argument")
    if n == 0:
        return Fraction(-1, 12)
    if n % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    a = 1
    while 3 * a * a <= n:
        for b in range(-a, a + 1):
            if (b * b + n) % (4 * a):
                continue
            c = (b * b + n) // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue  # forms (a,-a,c) and (a,-b,a) repeat (a,a,c), (a,b,a)
            if b == 0 and a == c:
                total += Fraction(1, 2)
            elif a == b == c:
                total += Fraction(1, 3)
            else:
                total += 1
        a += 1
    return total


def weight_poly(k: int, t: int, n: int) -> int:
    """U_(k-1)(t, n) from U_0 = 0, U_1 = 1, U_j = t U_(j-1) - n U_(j-2).

    For t^2 = 4n this degenerates to (k-1) (t/2)^(k-2).
    """
    if k < 2:
        raise ValueError("weight must be >= 2")
    u_prev, u = 0, 1
    for _ in range(k - 2):
        u_prev, u = u, t * u - n * u_prev
    return u


def trace_terms(n: int, k: int):
    """The two pieces of the trace formula, before assembly.

    Returns (elliptic, hyperbolic) as exact fractions: elliptic is
    -1/2 sum P_(k-1)(t,n) H(4n - t^2), hyperbolic is
    -1/2 sum min(d, n/d)^(k-1).
    """
    if n < 1:
        raise ValueError("Hecke index must be >= 1")
    if k < 4 or k % 2:
        raise ValueError("weight must be even and >= 4, got %d" % k)
    elliptic = Fraction(0)
    tmax = math.isqrt(4 * n)
    for t in range(-tmax, tmax + 1):
        h = hurwitz_class_number(4 * n - t * t)
        if h:
            elliptic += weight_poly(k, t, n) * h
    hyperbolic = sum(min(d, n // d) ** (k - 1) for d in divisors(n))
    return -elliptic / 2, Fraction(-hyperbolic, 2)


def trace(n: int, k: int) -> int:
    """Exact trace of T_n on the weight-k cusp space."""
    elliptic, hyperbolic = trace_terms(n, k)
    total = elliptic + hyperbolic
    if total.denominator != 1:
        raise NonIntegralTrace(
            "trace formula gave %s for n=%d k=%d" % (total, n, k)
        )
    return int(total)


def trace_mod_periodicity(n: int, ell: int, kclass: int, k_start=None, max_steps=None) -> int:
    """Least L, a multiple of ell - 1, with trace(n, k + L) = trace(n, k) mod ell
    for every sampled k = kclass (mod ell - 1) in the verification window.

    The scan walks even weights in the class, demands two full periods
    inside the window before accepting, and gives up (PeriodNotFound)
    once candidate periods would exceed ell * (ell^2 - 1); the group
    structure behind the recursion caps any true period there.
    """
    if ell < 5:
        raise ValueError("need ell >= 5, got %d" % ell)
    step = ell - 1
    kclass %= step
    if kclass % 2:
        raise ValueError("no even weights fall in class %d mod %d" % (kclass, step))
    if k_start is None:
        k_start = 4 + (kclass - 4) % step
    if max_steps is None:
        max_steps = 2 * ell * (ell + 1)  # 2 * L_cap / (ell - 1)
    values = []
    k = k_start
    # grow the sample window geometrically; re-scan for the minimal period
    target = 16
    while True:
        while len(values) < min(target, max_steps):
            values.append(trace(n, k) % ell)
            k += step
        period_steps = minimal_period(values)
        if period_steps is not None:
            # confirm with slack samples beyond the bare two periods
            need = 2 * period_steps + max(8, period_steps // 2)
            if len(values) >= min(need, max_steps):
                return period_steps * step
            target = need
            continue
        if len(values) >= max_steps:
            raise PeriodNotFound(
                "no trace period for n=%d mod %d in class %d within %d samples"
                % (n, ell, kclass, max_steps)
            )
        target *= 2
