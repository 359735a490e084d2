"""Hecke characteristic polynomials modulo small primes ell.

For ell in {5, 7, 13} and p != ell, the polynomial of T_p at weight
k + (ell - 1) is divisible mod ell by the one at weight k, so walking a
fixed weight class k = kclass (mod ell - 1) upward peels off one new
root per dimension jump.  The resulting root sequences a_1, a_2, ... are
periodic, and the roots of T_p mod ell at any weight in the class are
exactly the first dim terms of the sequence.  This module computes the
sequences, detects their periods empirically (two full periods
required inside the verified window, with a hard cutoff), assembles the
periodic tables, and checks the companion congruences:

  * mod 2: T_p = x^dim for every odd p;
  * mod 3: T_p = (x - 2)^dim when p = 1 (mod 3), x^dim when p = 2;
  * class invariance: p = q (mod ell), ell <= 7, forces
    T_p = T_q (mod ell) on every weight;
  * every root mod ell lies in {p^m + p^n mod ell}.

Violations raise, they are never smoothed over: an inexact quotient is
a Lemma1Violation, a polynomial with too few roots in F_ell is a
SplittingViolation, a root multiset that fails to extend its
predecessor is a RootNestingViolation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ._primes import is_prime, minimal_period
from .cache import cached_charpoly
from .errors import (
    Lemma1Violation,
    PeriodNotFound,
    RootNestingViolation,
    SplittingViolation,
)
from .gfpoly import FpPoly, InexactDivision, divide_exact, reduce_mod, roots
from .hecke import dim_cusp

# Row labels of the published mod-5 and mod-7 tables: the smallest prime
# in each nonzero residue class, in the printed order.
ROW_PRIMES = {5: (11, 2, 3, 19), 7: (29, 2, 3, 11, 5, 13)}
KCLASSES = {5: (0, 2), 7: (0, 2, 4), 13: (0, 2, 4, 6, 8, 10)}
DEFAULT_MAX_WEIGHT = {5: 110, 7: 200, 13: 370}
SINGLE_PERIOD_MAX_WEIGHT = 190

# hard cutoff for period hunting, in dimension increments
def _increment_cutoff(ell: int) -> int:
    return 4 * (ell * ell - 1)


def _validate(p: int, ell: int):
    if not is_prime(p):
        raise ValueError("p = %d is not prime" % p)
    if not is_prime(ell):
        raise ValueError("ell = %d is not prime" % ell)
    if p == ell:
        raise ValueError("p and ell must be distinct, both %d" % p)


def charpoly_mod(p: int, k: int, ell: int, cache=None) -> FpPoly:
    """Characteristic polynomial of T_p at weight k, reduced mod ell."""
    _validate(p, ell)
    if k % 2:
        raise ValueError("weight must be even, got %d" % k)
    return reduce_mod(cached_charpoly(p, k, cache), ell)


def lemma1_check(p: int, ell: int, k: int, cache=None) -> FpPoly:
    """Quotient T_p(k + ell - 1) / T_p(k) in F_ell[x].

    The divisibility is guaranteed for ell >= 5; an inexact division is
    re-raised as Lemma1Violation with the remainder attached.
    """
    if ell < 5:
        raise ValueError("divisibility step needs ell >= 5, got %d" % ell)
    low = charpoly_mod(p, k, ell, cache)
    high = charpoly_mod(p, k + ell - 1, ell, cache)
    try:
        return divide_exact(high, low)
    except InexactDivision as exc:
        raise Lemma1Violation(
            "T_%d at weight %d does not divide weight %d mod %d (remainder %s)"
            % (p, k, k + ell - 1, ell, exc.remainder)
        ) from exc


def first_weight_in_class(kclass: int, ell: int) -> int:
    """Smallest even weight >= 12 congruent to kclass mod (ell - 1)."""
    step = ell - 1
    kclass %= step
    if kclass % 2:
        raise ValueError("class %d mod %d contains no even weights" % (kclass, step))
    return 12 + (kclass - 12) % step


@dataclass(frozen=True)
class RootSequence:
    """Sequence of new roots along one weight class mod ell.

    terms[j] enters at term_weights[j], the first weight whose cusp
    space has dimension j + 1 within the class.  period is None when
    the window did not show two full periods (single-period runs).
    """

    p: int
    ell: int
    kclass: int
    terms: tuple
    term_weights: tuple
    period: object  # int or None
    max_weight: int

    def one_period(self) -> tuple:
        if self.period is None:
            return self.terms
        return self.terms[: self.period]

    def first_terms(self, count: int) -> tuple:
        """First `count` terms, extended by periodicity when verified."""
        if count <= len(self.terms):
            return self.terms[:count]
        if self.period is None:
            raise ValueError("only %d terms observed and no verified period" % len(self.terms))
        return tuple(self.terms[i % self.period] for i in range(count))


def root_sequence(
    p: int,
    ell: int,
    kclass: int,
    max_weight=None,
    require_two_periods: bool = True,
    cache=None,
    seed: int = 0,
) -> RootSequence:
    """Walk a weight class and collect the new root at each dimension jump.

    Checks at every weight that the polynomial splits completely and
    that the previous root multiset is contained in the new one; either
    failure raises.  Period detection demands two full periods across
    the whole observed window and cross-checks weights two periods
    apart; when require_two_periods is set and no period emerges,
    PeriodNotFound is raised.
    """
    if ell not in (5, 7, 13):
        raise ValueError("root sequences are defined for ell in {5, 7, 13}")
    _validate(p, ell)
    k0 = first_weight_in_class(kclass, ell)
    kclass %= ell - 1
    if max_weight is None:
        max_weight = DEFAULT_MAX_WEIGHT[ell]
    terms = []
    term_weights = []
    prev_counter = Counter()
    prev_dim = 0
    k = k0
    last_k = k0
    while k <= max_weight:
        if len(terms) > _increment_cutoff(ell):
            raise PeriodNotFound(
                "no period for p=%d ell=%d class %d within %d increments"
                % (p, ell, kclass, _increment_cutoff(ell))
            )
        f = charpoly_mod(p, k, ell, cache)
        d = dim_cusp(k)
        rts = roots(f, seed=seed)
        if len(rts) != d:
            raise SplittingViolation(
                "T_%d at weight %d mod %d has %d roots in F_%d, dimension is %d"
                % (p, k, ell, len(rts), ell, d)
            )
        counter = Counter(rts)
        missing = prev_counter - counter
        if missing:
            raise RootNestingViolation(
                "roots %s of weight %d vanished at weight %d (p=%d mod %d)"
                % (sorted(missing.elements()), last_k, k, p, ell)
            )
        new = sorted((counter - prev_counter).elements())
        if len(new) != d - prev_dim:
            raise RootNestingViolation(
                "%d new roots at weight %d but dimension jumped %d -> %d (p=%d mod %d)"
                % (len(new), k, prev_dim, d, p, ell)
            )
        terms.extend(new)
        term_weights.extend([k] * len(new))
        prev_counter, prev_dim, last_k = counter, d, k
        k += ell - 1
    period = minimal_period(terms)
    if period is None and require_two_periods:
        raise PeriodNotFound(
            "no period for p=%d ell=%d class %d up to weight %d (%d terms)"
            % (p, ell, kclass, max_weight, len(terms))
        )
    return RootSequence(
        p=p,
        ell=ell,
        kclass=kclass,
        terms=tuple(terms),
        term_weights=tuple(term_weights),
        period=period,
        max_weight=max_weight,
    )


@dataclass(frozen=True)
class QuotientSequence:
    """Successive quotients f_j = T_p(k0 + j(ell-1)) / T_p(k0 + (j-1)(ell-1)) mod ell."""

    p: int
    ell: int
    kclass: int
    start_weight: int
    quotients: tuple
    period: object  # int or None


def quotient_sequence(p, ell, kclass, max_weight=None, cache=None) -> QuotientSequence:
    """The divisibility quotients along a weight class, with empirical period.

    Each quotient degree equals the dimension jump at its step; the
    running product against the first polynomial reassembles every
    later one (checked by construction through exact division).
    """
    if ell < 5:
        raise ValueError("quotients need ell >= 5, got %d" % ell)
    _validate(p, ell)
    k0 = first_weight_in_class(kclass, ell)
    if max_weight is None:
        max_weight = DEFAULT_MAX_WEIGHT.get(ell, 24 * (ell - 1) + k0)
    quotients = []
    k = k0
    while k + ell - 1 <= max_weight:
        quotients.append(lemma1_check(p, ell, k, cache))
        k += ell - 1
    return QuotientSequence(
        p=p,
        ell=ell,
        kclass=kclass % (ell - 1),
        start_weight=k0,
        quotients=tuple(quotients),
        period=minimal_period(quotients),
    )


@dataclass(frozen=True)
class TableCell:
    p: int
    p_class: int
    ell: int
    kclass: int
    sequence: RootSequence

    @property
    def display_terms(self) -> tuple:
        return self.sequence.one_period()


def table_rows(ell, max_weight=None, single_period=False, cache=None):
    """All cells of the periodic root table for ell in {5, 7, 13}.

    For ell in {5, 7} the rows run over the published representative
    primes (smallest in each class, printed order) and the columns over
    even weight classes.  For ell = 13 the single published row prime
    is 2 and the rows are the six weight classes mod 12.  In
    single-period mode the walk stops early and periods are left
    unverified rather than guessed.
    """
    if ell not in (5, 7, 13):
        raise ValueError("tables exist for ell in {5, 7, 13}")
    if single_period and max_weight is None:
        max_weight = SINGLE_PERIOD_MAX_WEIGHT
    primes_ = ROW_PRIMES.get(ell, (2,))
    cells = []
    for p in primes_:
        for kclass in KCLASSES[ell]:
            seq = root_sequence(
                p,
                ell,
                kclass,
                max_weight=max_weight,
                require_two_periods=not single_period,
                cache=cache,
            )
            cells.append(TableCell(p=p, p_class=p % ell, ell=ell, kclass=kclass, sequence=seq))
    return cells


def small_ell_rule(p: int, k: int, ell: int) -> FpPoly:
    """Predicted T_p mod ell for ell in {2, 3}: a pure power of x or x - 2.

    mod 2 (p odd): x^dim.  mod 3: (x - 2)^dim for p = 1 (mod 3), x^dim
    for p = 2 (mod 3).
    """
    if ell not in (2, 3):
        raise ValueError("closed forms cover ell in {2, 3} only")
    _validate(p, ell)
    d = dim_cusp(k)
    if ell == 2 or p % 3 == 2:
        base = FpPoly(ell, (0, 1))
    else:
        base = FpPoly(ell, (-2, 1))
    out = FpPoly(ell, (1,))
    for _ in range(d):
        out = out * base
    return out


def congruence_class_invariance(p: int, q: int, ell: int, k: int, cache=None) -> bool:
    """Whether T_p and T_q agree mod ell at weight k; requires p = q (mod ell).

    For ell <= 7 agreement is a theorem, so False from this function is
    a falsification witness for the caller to raise on.
    """
    if ell > 7:
        raise ValueError("class invariance is only guaranteed for ell <= 7")
    if (p - q) % ell:
        raise ValueError("p=%d and q=%d are not congruent mod %d" % (p, q, ell))
    return charpoly_mod(p, k, ell, cache) == charpoly_mod(q, k, ell, cache)


def serre_eigenvalue_set(p: int, ell: int) -> frozenset:
    """{p^m + p^n mod ell} over exponents 0 <= m <= n <= ell - 2."""
    powers = [pow(p, m, ell) for m in range(ell - 1)]
    return frozenset((a + b) % ell for a in powers for b in powers)


def serre_classification_check(ell: int, p: int, k: int, cache=None, seed: int = 0) -> bool:
    """Whether every root of T_p mod ell lies in {p^m + p^n mod ell}."""
    if ell not in (3, 5, 7):
        raise ValueError("classification check covers ell in {3, 5, 7}")
    f = charpoly_mod(p, k, ell, cache)
    allowed = serre_eigenvalue_set(p, ell)
    return all(r in allowed for r in roots(f, seed=seed))
