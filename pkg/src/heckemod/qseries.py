"""Truncated q-expansions with exact integer coefficients.

A QExpansion holds the first `prec` coefficients a_0 .. a_{prec-1} of a
formal power series sum a_m q^m.  Coefficients are arbitrary-precision
Python ints; nothing in this package ever goes through floats.

Conventions:
  * coeffs is a tuple of length exactly prec (index m = exponent of q^m);
  * products and sums truncate to the smaller precision of the operands;
  * the Eisenstein series are normalized to constant term 1.

Generators supplied here: E4 = 1 + 240 sum sigma_3(n) q^n,
E6 = 1 - 504 sum sigma_5(n) q^n, and the discriminant cusp form
delta = q prod (1-q^n)^24, expanded through the pentagonal number
theorem rather than as (E4^3 - E6^2)/1728 so that the two routes stay
independent checks of each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._primes import divisor_power_sum


@dataclass(frozen=True)
class QExpansion:
    coeffs: tuple
    prec: int

    def __post_init__(self):
        if self.prec < 1:
            raise ValueError("precision must be >= 1")
        if len(self.coeffs) != self.prec:
            raise ValueError("coefficient count %d != prec %d" % (len(self.coeffs), self.prec))

    def __getitem__(self, m: int) -> int:
        return self.coeffs[m]

    def __add__(self, other: "QExpansion") -> "QExpansion":
        prec = min(self.prec, other.prec)
        return QExpansion(tuple(self.coeffs[m] + other.coeffs[m] for m in range(prec)), prec)

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        prec = min(self.prec, other.prec)
        return QExpansion(tuple(self.coeffs[m] - other.coeffs[m] for m in range(prec)), prec)

    def __rmul__(self, c: int) -> "QExpansion":
        if not isinstance(c, int):
            return NotImplemented
        return QExpansion(tuple(c * a for a in self.coeffs), self.prec)

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return mul(self, other)

    def __pow__(self, e: int) -> "QExpansion":
        return power(self, e)

    def truncate(self, prec: int) -> "QExpansion":
        if prec > self.prec:
            raise ValueError("cannot extend precision %d to %d" % (self.prec, prec))
        return QExpansion(self.coeffs[:prec], prec)


def from_list(coeffs, prec=None) -> QExpansion:
    """Build a QExpansion from a coefficient list, zero-padding to prec."""
    coeffs = list(coeffs)
    if prec is None:
        prec = len(coeffs)
    if len(coeffs) > prec:
        raise ValueError("more coefficients than prec")
    coeffs += [0] * (prec - len(coeffs))
    return QExpansion(tuple(coeffs), prec)


def mul(a: QExpansion, b: QExpansion) -> QExpansion:
    """Product truncated to min(a.prec, b.prec)."""
    prec = min(a.prec, b.prec)
    out = [0] * prec
    for i in range(prec):
        ai = a.coeffs[i]
        if ai:
            for j in range(prec - i):
                bj = b.coeffs[j]
                if bj:
                    out[i + j] += ai * bj
    return QExpansion(tuple(out), prec)


def power(a: QExpansion, e: int) -> QExpansion:
    """a**e by repeated squaring; e = 0 gives the constant series 1."""
    if e < 0:
        raise ValueError("negative exponent")
    result = from_list([1], a.prec)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def sigma(n: int, e: int) -> int:
    """Divisor power sum sigma_e(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return divisor_power_sum(n, e)


def eisenstein4(prec: int) -> QExpansion:
    return QExpansion(tuple([1] + [240 * sigma(n, 3) for n in range(1, prec)]), prec)


def eisenstein6(prec: int) -> QExpansion:
    return QExpansion(tuple([1] + [-504 * sigma(n, 5) for n in range(1, prec)]), prec)


def _eta_quotientless(prec: int) -> list:
    # prod_{n>=1} (1 - q^n) via Euler's pentagonal number theorem:
    # exponents m(3m -+ 1)/2 carry sign (-1)^m.
    out = [0] * prec
    out[0] = 1
    m = 1
    while m * (3 * m - 1) // 2 < prec:
        sign = -1 if m % 2 else 1
        for g in (m * (3 * m - 1) // 2, m * (3 * m + 1) // 2):
            if g < prec:
                out[g] += sign
        m += 1
    return out


def delta(prec: int) -> QExpansion:
    """The weight-12 cusp form q prod (1-q^n)^24, tau coefficients."""
    if prec == 1:
        return QExpansion((0,), 1)
    eta = QExpansion(tuple(_eta_quotientless(prec - 1)), prec - 1)
    eta24 = power(eta, 24)
    return QExpansion((0,) + eta24.coeffs, prec)
