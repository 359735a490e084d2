"""Galois-theoretic certificates from factorizations modulo primes.

For a monic integer polynomial f whose reduction mod ell is squarefree,
the factor degrees mod ell form the cycle type of a Frobenius element
of the Galois group of f (Dedekind).  Collecting cycle types over many
ell supports three kinds of sound deduction, each emitted as a
Certificate listing exactly the evidence used:

  * irreducibility by a single irreducible reduction
    (rule IrreducibleModEll);
  * irreducibility by the degree sieve: a proper rational factor would
    need a degree realizable as a subset sum of every observed cycle
    type, so an empty intersection of those subset-sum sets is a proof
    (rule DegreeSetSieve);
  * full symmetric Galois group (rule JordanCriterion): transitivity
    from irreducibility, primitivity from a prime q-cycle with
    d/2 < q < d (automatic when d itself is prime), and then a
    transposition forces S_d (Jordan).  A cycle type powers to a
    transposition when it has exactly one even part, equal to 2; it
    powers to a q-cycle when it contains q once and q exceeds d/2.

The second half of the module packages the deductions specific to
Hecke polynomials: the shape filter (under "some T_n irreducible",
T_p is an r-th power of an irreducible with r dividing every root
multiplicity mod ell), the residue-class criterion with its periodic
table evidence, and the dimension parity corollaries.  Those verdicts
carry their assumptions explicitly; discharging the assumption with an
unconditional anchor certificate upgrades them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as _gcd

from ._primes import divisors, is_prime, primes_up_to
from .cache import cached_charpoly
from .gfpoly import factor, reduce_mod, roots
from .hecke import dim_cusp
from .modfactor import ROW_PRIMES, charpoly_mod, root_sequence

RULE_IRREDUCIBLE_MOD_ELL = "IrreducibleModEll"
RULE_DEGREE_SET_SIEVE = "DegreeSetSieve"
RULE_JORDAN = "JordanCriterion"
RULE_THEOREM1 = "Theorem1"
RULE_COROLLARY_I = "Corollary-i"
RULE_COROLLARY_II = "Corollary-ii"
RULE_REMARK_14 = "PaperRemark14"
RULE_REMARK_28 = "PaperRemark28"

CLAIM_IRREDUCIBLE = "irreducible"
CLAIM_FULL_SYMMETRIC = "full-symmetric-group"

ASSUME_SOME_IRREDUCIBLE = "some T_n at this weight has irreducible characteristic polynomial"
ASSUME_SOME_FULL = (
    "some T_n at this weight has irreducible characteristic polynomial"
    " with full symmetric Galois group"
)


@dataclass(frozen=True)
class CycleType:
    """Factor-degree partition of a squarefree reduction mod ell."""

    ell: int
    partition: tuple  # parts descending, summing to the degree

    @property
    def degree(self) -> int:
        return sum(self.partition)


@dataclass(frozen=True)
class SquarefreeFailure:
    """Reduction mod ell had a repeated factor; no cycle type there."""

    ell: int
    repeated: tuple  # coefficients of one repeated factor


def cycle_type(f, ell: int, seed: int = 0):
    """CycleType of a monic integer polynomial mod ell, or SquarefreeFailure.

    The partition is the multiset of irreducible factor degrees mod
    ell, valid as a Frobenius cycle type by Dedekind's theorem.
    """
    coeffs = tuple(getattr(f, "coeffs", f))
    if coeffs[-1] != 1:
        raise ValueError("cycle types need a monic polynomial")
    fm = factor(reduce_mod(coeffs, ell), seed=seed)
    for g, m in fm.factors:
        if m > 1:
            return SquarefreeFailure(ell=ell, repeated=g.coeffs)
    return CycleType(ell=ell, partition=tuple(sorted(fm.degrees(), reverse=True)))


def proper_degree_sums(partition) -> frozenset:
    """Degrees of proper nonempty sub-products achievable from a cycle type."""
    total = sum(partition)
    mask = 1
    for part in partition:
        mask |= mask << part
    return frozenset(s for s in range(1, total) if mask >> s & 1)


def powers_to_transposition(partition) -> bool:
    """True when some power of an element of this type is a transposition:
    exactly one even part, equal to 2 (raise to the lcm of the odd parts)."""
    evens = [part for part in partition if part % 2 == 0]
    return evens == [2]


def powers_to_prime_cycle(partition, d: int):
    """A prime q with d/2 < q < d contained in the type, or None.

    Raising to the lcm of the other parts leaves a pure q-cycle, and a
    transitive group containing one is primitive.
    """
    for part in partition:
        if 2 * part > d and part < d and is_prime(part):
            return part
    return None


@dataclass(frozen=True)
class Certificate:
    claim: str
    subject: dict
    degree: int
    rule: str
    evidence: tuple
    assumptions: tuple = ()

    @property
    def unconditional(self) -> bool:
        return not self.assumptions

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "subject": dict(self.subject),
            "degree": self.degree,
            "rule": self.rule,
            "evidence": [dict(e) for e in self.evidence],
            "assumptions": list(self.assumptions),
            "found": True,
        }


@dataclass(frozen=True)
class NotFound:
    claim: str
    subject: dict
    reason: str
    evidence: tuple = ()

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "subject": dict(self.subject),
            "reason": self.reason,
            "evidence": [dict(e) for e in self.evidence],
            "found": False,
        }


def _type_evidence(ct: CycleType) -> dict:
    return {"kind": "cycle-type", "ell": ct.ell, "partition": list(ct.partition)}


def _scan_types(coeffs, bound, skip, seed):
    for ell in primes_up_to(bound):
        if ell in skip:
            continue
        ct = cycle_type(coeffs, ell, seed=seed)
        if isinstance(ct, CycleType):
            yield ct


def certify_irreducible_poly(f, bound: int, skip=(), seed: int = 0, subject=None):
    """Certificate of irreducibility over Q for a monic integer polynomial.

    Scans primes ell <= bound (skipping `skip`).  A single irreducible
    reduction settles it; otherwise the subset-sum sieve runs until its
    intersection of candidate factor degrees empties.  Returns NotFound
    with the collected evidence when neither happens.
    """
    coeffs = tuple(getattr(f, "coeffs", f))
    d = len(coeffs) - 1
    if subject is None:
        subject = {"coeffs": [str(c) for c in coeffs]}
    if d < 1:
        raise ValueError("constant polynomial has no irreducibility question")
    evidence = []
    surviving = None
    for ct in _scan_types(coeffs, bound, skip, seed):
        evidence.append(_type_evidence(ct))
        if ct.partition == (d,):
            return Certificate(
                claim=CLAIM_IRREDUCIBLE,
                subject=subject,
                degree=d,
                rule=RULE_IRREDUCIBLE_MOD_ELL,
                evidence=(evidence[-1],),
            )
        sums = proper_degree_sums(ct.partition)
        surviving = sums if surviving is None else surviving & sums
        if not surviving:
            return Certificate(
                claim=CLAIM_IRREDUCIBLE,
                subject=subject,
                degree=d,
                rule=RULE_DEGREE_SET_SIEVE,
                evidence=tuple(evidence),
            )
    if surviving is None:
        reason = "no squarefree reduction below %d" % bound
    else:
        reason = "degrees %s survive the sieve below %d" % (sorted(surviving), bound)
    return NotFound(
        claim=CLAIM_IRREDUCIBLE, subject=subject, reason=reason, evidence=tuple(evidence)
    )


def certify_full_symmetric_poly(f, bound: int, skip=(), seed: int = 0, subject=None):
    """Certificate that the Galois group is the full symmetric group.

    Degree 1 is trivial and degree 2 needs only irreducibility; beyond
    that the scan hunts a transposition witness and, unless the degree
    is prime, a primitivity witness (prime q-cycle, d/2 < q < d), on
    top of an irreducibility certificate.
    """
    coeffs = tuple(getattr(f, "coeffs", f))
    d = len(coeffs) - 1
    if subject is None:
        subject = {"coeffs": [str(c) for c in coeffs]}
    if d < 1:
        raise ValueError("constant polynomial has no Galois group")
    if d == 1:
        return Certificate(
            claim=CLAIM_FULL_SYMMETRIC,
            subject=subject,
            degree=d,
            rule=RULE_JORDAN,
            evidence=({"kind": "degree-1"},),
        )
    irr = certify_irreducible_poly(coeffs, bound, skip=skip, seed=seed, subject=subject)
    if isinstance(irr, NotFound):
        return NotFound(
            claim=CLAIM_FULL_SYMMETRIC,
            subject=subject,
            reason="irreducibility not established: %s" % irr.reason,
            evidence=irr.evidence,
        )
    irr_evidence = {"kind": "irreducibility", "certificate": irr.to_dict()}
    if d == 2:
        return Certificate(
            claim=CLAIM_FULL_SYMMETRIC,
            subject=subject,
            degree=d,
            rule=RULE_JORDAN,
            evidence=(irr_evidence,),
        )
    transposition = None
    primitivity = {"kind": "prime-degree", "degree": d} if is_prime(d) else None
    for ct in _scan_types(coeffs, bound, skip, seed):
        if transposition is None and powers_to_transposition(ct.partition):
            transposition = dict(_type_evidence(ct), kind="transposition-witness")
        if primitivity is None:
            q = powers_to_prime_cycle(ct.partition, d)
            if q is not None:
                primitivity = dict(_type_evidence(ct), kind="q-cycle-witness", q=q)
        if transposition is not None and primitivity is not None:
            return Certificate(
                claim=CLAIM_FULL_SYMMETRIC,
                subject=subject,
                degree=d,
                rule=RULE_JORDAN,
                evidence=(irr_evidence, primitivity, transposition),
            )
    missing = []
    if transposition is None:
        missing.append("transposition")
    if primitivity is None:
        missing.append("primitivity q-cycle")
    return NotFound(
        claim=CLAIM_FULL_SYMMETRIC,
        subject=subject,
        reason="no %s witness below %d" % (" or ".join(missing), bound),
        evidence=(irr_evidence,),
    )


def _hecke_subject(p, k):
    return {"p": p, "k": k}


def _hecke_poly(p, k, cache):
    if not is_prime(p):
        raise ValueError("p = %d is not prime" % p)
    f = cached_charpoly(p, k, cache)
    if f.degree < 1:
        raise ValueError("weight %d has trivial cusp space" % k)
    return f


def certify_irreducible(p: int, k: int, bound: int = 200, cache=None, seed: int = 0):
    """Unconditional irreducibility certificate for T_p at weight k."""
    f = _hecke_poly(p, k, cache)
    return certify_irreducible_poly(
        f, bound, skip=(p,), seed=seed, subject=_hecke_subject(p, k)
    )


def certify_full_symmetric(p: int, k: int, bound: int = 200, cache=None, seed: int = 0):
    """Unconditional full-symmetric-group certificate for T_p at weight k."""
    f = _hecke_poly(p, k, cache)
    return certify_full_symmetric_poly(
        f, bound, skip=(p,), seed=seed, subject=_hecke_subject(p, k)
    )


# ---------------------------------------------------------------------------
# deductions that lean on the periodic tables


@dataclass(frozen=True)
class ShapeVerdict:
    """Prop-2 style shape filter for T_p at one weight.

    possible_r lists the exponents r (dividing dim) such that
    T_p = g^r with g irreducible stays consistent with every observed
    root multiplicity; (1,) plus an excluded linear power pins the
    polynomial to "irreducible with full group" under the stated
    assumptions.
    """

    p: int
    k: int
    dim: int
    evidence: tuple
    possible_r: tuple
    linear_power_excluded: bool

    @property
    def irreducible_if_some_irreducible(self) -> bool:
        return self.possible_r == (1,)

    @property
    def full_if_some_full(self) -> bool:
        return self.possible_r == (1,) and (self.linear_power_excluded or self.dim == 1)


def prop2_shape_filter(p: int, k: int, ells=(5, 7), cache=None, seed: int = 0) -> ShapeVerdict:
    """Constrain the shape of T_p at weight k from its splittings mod ells."""
    if not is_prime(p):
        raise ValueError("p = %d is not prime" % p)
    d = dim_cusp(k)
    if d < 1:
        raise ValueError("weight %d has trivial cusp space" % k)
    evidence = []
    mults = []
    max_distinct = 0
    for ell in ells:
        if ell == p:
            continue
        fm = factor(charpoly_mod(p, k, ell, cache), seed=seed)
        counts = {}
        for g, m in fm.factors:
            if g.degree == 1:
                counts[(-g.coeffs[0]) % ell] = m
        evidence.append({"kind": "root-multiplicities", "ell": ell, "roots": counts})
        mults.extend(counts.values())
        max_distinct = max(max_distinct, len(counts))
    possible = tuple(
        r for r in divisors(d) if all(m % r == 0 for m in mults)
    )
    return ShapeVerdict(
        p=p,
        k=k,
        dim=d,
        evidence=tuple(evidence),
        possible_r=possible,
        linear_power_excluded=max_distinct >= 2,
    )


def _qualifying_ell(p: int):
    """The modulus whose table row applies to p, with its class prime."""
    for ell in (5, 7):
        if p % ell not in (0, 1, ell - 1):
            return ell, dict((q % ell, q) for q in ROW_PRIMES[ell])[p % ell]
    return None, None


def residues_qualify(p: int) -> bool:
    """Theorem-1 congruence condition: p not 0, +1, -1 mod 5 or mod 7."""
    return _qualifying_ell(p)[0] is not None


@dataclass(frozen=True)
class TableVerdict:
    """Outcome of a table-backed deduction for T_p at weight k."""

    applicable: bool
    claim: str
    rule: str
    p: int
    k: int
    dim: int
    assumptions: tuple
    ell: object = None
    class_prime: object = None
    kclass: object = None
    row_period: tuple = ()
    first_terms: tuple = ()
    detail: str = ""

    def certificate(self):
        if not self.applicable:
            return NotFound(
                claim=self.claim,
                subject=_hecke_subject(self.p, self.k),
                reason=self.detail or "conditions not met",
            )
        ev = {
            "kind": "table-row",
            "ell": self.ell,
            "class_prime": self.class_prime,
            "kclass": self.kclass,
            "row_period": list(self.row_period),
            "first_terms": list(self.first_terms),
        }
        return Certificate(
            claim=self.claim,
            subject=_hecke_subject(self.p, self.k),
            degree=self.dim,
            rule=self.rule,
            evidence=(ev,),
            assumptions=self.assumptions,
        )


def _row_first_terms(ell, class_prime, k, dim, cache):
    seq = root_sequence(class_prime, ell, k % (ell - 1), cache=cache)
    return seq.one_period(), seq.first_terms(dim)


def theorem1_conclusion(p: int, k: int, cache=None) -> TableVerdict:
    """Residue-class deduction: for p not +-1 mod 5 or mod 7, T_p at
    weight k is irreducible with full symmetric group, assuming some
    T_n at weight k is.

    Evidence is the periodic table row of p's class showing two
    distinct root values within the first dim terms, which rules out
    the only alternative shape (x - a)^dim.
    """
    if not is_prime(p):
        raise ValueError("p = %d is not prime" % p)
    base = dict(
        claim=CLAIM_FULL_SYMMETRIC,
        rule=RULE_THEOREM1,
        p=p,
        k=k,
        dim=dim_cusp(k),
        assumptions=(ASSUME_SOME_FULL,),
    )
    ell, class_prime = _qualifying_ell(p)
    if ell is None:
        return TableVerdict(
            applicable=False,
            detail="p = %d is +-1 mod 5 and mod 7; no table row applies" % p,
            **base,
        )
    d = base["dim"]
    if d == 0:
        return TableVerdict(applicable=False, detail="trivial cusp space", **base)
    if d == 1:
        return TableVerdict(
            applicable=True,
            ell=ell,
            class_prime=class_prime,
            kclass=k % (ell - 1),
            detail="degree 1 is irreducible with trivial S_1",
            **base,
        )
    row_period, first = _row_first_terms(ell, class_prime, k, d, cache)
    if len(set(first)) < 2:
        return TableVerdict(
            applicable=False,
            detail="table row for class %d mod %d shows a single root value" % (p % ell, ell),
            **base,
        )
    return TableVerdict(
        applicable=True,
        ell=ell,
        class_prime=class_prime,
        kclass=k % (ell - 1),
        row_period=tuple(row_period),
        first_terms=tuple(first),
        detail="distinct roots %s exclude the linear-power shape"
        % sorted(set(first))[:2],
        **base,
    )


def _multiplicity_gcd(terms) -> int:
    g = 0
    counts = {}
    for t in terms:
        counts[t] = counts.get(t, 0) + 1
    for m in counts.values():
        g = _gcd(g, m)
    return g


def corollary_conclusion(p: int, k: int, cache=None) -> TableVerdict:
    """Dimension-parity deduction: T_p at weight k is irreducible,
    assuming some T_n at weight k is.

    Case i: dim odd and p's residues qualify mod 5 or 7.  Case ii:
    dim = 2 mod 4 and p = 3 or 5 mod 7.  Both force r = 1 in the shape
    filter because the gcd of root multiplicities in the table row's
    first dim terms is 1.
    """
    if not is_prime(p):
        raise ValueError("p = %d is not prime" % p)
    d = dim_cusp(k)
    base = dict(claim=CLAIM_IRREDUCIBLE, p=p, k=k, dim=d, assumptions=(ASSUME_SOME_IRREDUCIBLE,))
    if d == 0:
        return TableVerdict(
            applicable=False, rule=RULE_COROLLARY_I, detail="trivial cusp space", **base
        )
    if d % 2:
        ell, class_prime = _qualifying_ell(p)
        rule = RULE_COROLLARY_I
        if ell is None:
            return TableVerdict(
                applicable=False,
                rule=rule,
                detail="dim %d is odd but p = %d is +-1 mod 5 and mod 7" % (d, p),
                **base,
            )
    elif d % 4 == 2 and p % 7 in (3, 5):
        ell, class_prime = 7, dict((q % 7, q) for q in ROW_PRIMES[7])[p % 7]
        rule = RULE_COROLLARY_II
    else:
        return TableVerdict(
            applicable=False,
            rule=RULE_COROLLARY_I,
            detail="dim %d mod 4 = %d with p mod 7 = %d fits neither case"
            % (d, d % 4, p % 7),
            **base,
        )
    if d == 1:
        return TableVerdict(
            applicable=True,
            rule=rule,
            ell=ell,
            class_prime=class_prime,
            kclass=k % (ell - 1),
            detail="degree 1 is irreducible",
            **base,
        )
    row_period, first = _row_first_terms(ell, class_prime, k, d, cache)
    g = _multiplicity_gcd(first)
    if g != 1:
        return TableVerdict(
            applicable=False,
            rule=rule,
            ell=ell,
            class_prime=class_prime,
            kclass=k % (ell - 1),
            row_period=tuple(row_period),
            first_terms=tuple(first),
            detail="multiplicity gcd %d leaves powers r > 1 possible" % g,
            **base,
        )
    return TableVerdict(
        applicable=True,
        rule=rule,
        ell=ell,
        class_prime=class_prime,
        kclass=k % (ell - 1),
        row_period=tuple(row_period),
        first_terms=tuple(first),
        detail="root multiplicities in the first %d terms have gcd 1, so r = 1" % d,
        **base,
    )


def remark_rule(k: int, cache=None) -> TableVerdict:
    """Dimension-vs-14 bookkeeping, flagged as a remark-grade rule.

    When dim is not a multiple of 14, the mod-13 root multiplicities of
    T_2 at weight k have gcd 1, so T_2 is irreducible under the usual
    assumption.  When dim is 14 times an odd number, dim = 2 mod 4 and
    case ii applies to T_3 instead.
    """
    d = dim_cusp(k)
    base = dict(claim=CLAIM_IRREDUCIBLE, k=k, dim=d)
    if d == 0:
        return TableVerdict(
            applicable=False,
            rule=RULE_REMARK_14,
            p=2,
            assumptions=(ASSUME_SOME_IRREDUCIBLE,),
            detail="trivial cusp space",
            **base,
        )
    if d % 14:
        rts = roots(charpoly_mod(2, k, 13, cache))
        g = _multiplicity_gcd(rts)
        return TableVerdict(
            applicable=g == 1,
            rule=RULE_REMARK_14,
            p=2,
            assumptions=(ASSUME_SOME_IRREDUCIBLE,),
            ell=13,
            class_prime=2,
            kclass=k % 12,
            first_terms=tuple(rts),
            detail="mod-13 multiplicity gcd %d for T_2 (dim %d not a multiple of 14)"
            % (g, d),
            **base,
        )
    if d % 28:
        inner = corollary_conclusion(3, k, cache=cache)
        return TableVerdict(
            applicable=inner.applicable,
            rule=RULE_REMARK_28,
            p=3,
            assumptions=inner.assumptions,
            ell=inner.ell,
            class_prime=inner.class_prime,
            kclass=inner.kclass,
            row_period=inner.row_period,
            first_terms=inner.first_terms,
            detail="dim %d = 14 * odd, so dim = 2 mod 4 and case ii covers T_3; %s"
            % (d, inner.detail),
            **base,
        )
    return TableVerdict(
        applicable=False,
        rule=RULE_REMARK_28,
        p=2,
        assumptions=(ASSUME_SOME_IRREDUCIBLE,),
        detail="dim %d is a multiple of 28; the remark gives nothing" % d,
        **base,
    )


@dataclass(frozen=True)
class DeduceResult:
    target: object  # Certificate or NotFound
    anchor_irreducible: object = None
    anchor_full: object = None

    @property
    def unconditional(self) -> bool:
        return isinstance(self.target, Certificate) and self.target.unconditional

    def to_dict(self) -> dict:
        out = {"target": self.target.to_dict(), "unconditional": self.unconditional}
        for name in ("anchor_irreducible", "anchor_full"):
            cert = getattr(self, name)
            out[name] = cert.to_dict() if cert is not None else None
        return out


def deduce(p: int, k: int, anchor_n: int = 2, bound: int = 200, cache=None, seed: int = 0):
    """Table-backed verdict for T_p at weight k, upgraded when possible.

    Tries the residue-class deduction first, then the parity corollary.
    The standing assumption (some T_n irreducible / fully symmetric) is
    discharged by certifying T_anchor_n at the same weight outright; a
    successful anchor turns the verdict unconditional.
    """
    verdict = theorem1_conclusion(p, k, cache=cache)
    need_full_anchor = verdict.applicable
    if not verdict.applicable:
        verdict = corollary_conclusion(p, k, cache=cache)
    cert = verdict.certificate()
    if isinstance(cert, NotFound):
        return DeduceResult(target=cert)
    anchor_irr = certify_irreducible(anchor_n, k, bound=bound, cache=cache, seed=seed)
    anchor_full = None
    discharged = isinstance(anchor_irr, Certificate)
    if need_full_anchor and discharged:
        anchor_full = certify_full_symmetric(anchor_n, k, bound=bound, cache=cache, seed=seed)
        discharged = isinstance(anchor_full, Certificate)
    if discharged:
        ev = cert.evidence + (
            {
                "kind": "anchor",
                "n": anchor_n,
                "discharges": list(cert.assumptions),
            },
        )
        cert = Certificate(
            claim=cert.claim,
            subject=cert.subject,
            degree=cert.degree,
            rule=cert.rule,
            evidence=ev,
            assumptions=(),
        )
    return DeduceResult(
        target=cert, anchor_irreducible=anchor_irr, anchor_full=anchor_full
    )
