import json
import random
from itertools import combinations

import pytest

from heckemod.galois import (
    CLAIM_FULL_SYMMETRIC,
    CLAIM_IRREDUCIBLE,
    Certificate,
    CycleType,
    NotFound,
    SquarefreeFailure,
    certify_full_symmetric,
    certify_full_symmetric_poly,
    certify_irreducible,
    certify_irreducible_poly,
    corollary_conclusion,
    cycle_type,
    deduce,
    powers_to_prime_cycle,
    powers_to_transposition,
    prop2_shape_filter,
    proper_degree_sums,
    remark_rule,
    residues_qualify,
    theorem1_conclusion,
)
from heckemod.gfpoly import roots
from heckemod.modfactor import charpoly_mod

X4_PLUS_1 = (1, 0, 0, 0, 1)


def test_cycle_type_examples():
    assert cycle_type(X4_PLUS_1, 3) == CycleType(ell=3, partition=(2, 2))
    assert cycle_type(X4_PLUS_1, 5) == CycleType(ell=5, partition=(2, 2))
    assert cycle_type(X4_PLUS_1, 17) == CycleType(ell=17, partition=(1, 1, 1, 1))
    failure = cycle_type((0, 0, 1), 3)  # x^2 is a repeated factor
    assert isinstance(failure, SquarefreeFailure)
    assert failure.repeated == (0, 1)
    with pytest.raises(ValueError):
        cycle_type((1, 0, 2), 5)  # not monic


def test_proper_degree_sums_against_subset_enumeration():
    rng = random.Random(5)
    for _ in range(50):
        parts = tuple(rng.randint(1, 5) for _ in range(rng.randint(1, 7)))
        total = sum(parts)
        brute = set()
        for r in range(1, len(parts)):
            for combo in combinations(range(len(parts)), r):
                brute.add(sum(parts[i] for i in combo))
        brute = {s for s in brute if 0 < s < total}
        assert proper_degree_sums(parts) == frozenset(brute)
    assert proper_degree_sums((2, 2)) == frozenset({2})
    assert proper_degree_sums((4,)) == frozenset()


def test_power_witness_predicates():
    assert powers_to_transposition((2,))
    assert powers_to_transposition((2, 1, 1))
    assert powers_to_transposition((2, 3))
    assert not powers_to_transposition((2, 2))
    assert not powers_to_transposition((4, 1))
    assert not powers_to_transposition((3, 1))
    assert powers_to_prime_cycle((3, 1), 4) == 3
    assert powers_to_prime_cycle((5, 2), 7) == 5
    assert powers_to_prime_cycle((4, 2), 6) is None
    assert powers_to_prime_cycle((5,), 5) is None  # full cycle is not a proper witness
    assert powers_to_prime_cycle((2, 2), 4) is None


def test_certify_irreducible_poly_quadratic():
    cert = certify_irreducible_poly((-2, 0, 1), 100)  # x^2 - 2
    assert isinstance(cert, Certificate)
    assert cert.rule == "IrreducibleModEll"
    assert cert.evidence[0]["partition"] == [2]


def test_sieve_never_certifies_x4_plus_1():
    # Galois group is the Klein four group: only cycle types 1+1+1+1 and
    # 2+2 can ever appear, so degree 2 survives the sieve at every ell
    res = certify_irreducible_poly(X4_PLUS_1, 500)
    assert isinstance(res, NotFound)
    assert "2" in res.reason
    partitions = {tuple(e["partition"]) for e in res.evidence}
    assert partitions <= {(1, 1, 1, 1), (2, 2)}
    assert (4,) not in partitions

    full = certify_full_symmetric_poly(X4_PLUS_1, 500)
    assert isinstance(full, NotFound)


def test_sieve_gap_is_genuine():
    # (x^2 - 2)(x^2 - 8) realizes the same factor-degree data as x^4 + 1,
    # so no sound degree-based rule may clear either one
    reducible = (16, 0, -10, 0, 1)
    res = certify_irreducible_poly(reducible, 300)
    assert isinstance(res, NotFound)


def test_certify_hecke_examples(shared_cache):
    cert = certify_irreducible(2, 24, cache=shared_cache)
    assert isinstance(cert, Certificate)
    assert cert.rule == "IrreducibleModEll"
    assert cert.evidence[0]["ell"] == 23
    assert cert.subject == {"p": 2, "k": 24}
    assert cert.unconditional

    linear = certify_irreducible(2, 12, cache=shared_cache)
    assert isinstance(linear, Certificate) and linear.degree == 1

    with pytest.raises(ValueError):
        certify_irreducible(2, 14, cache=shared_cache)
    with pytest.raises(ValueError):
        certify_irreducible(6, 24, cache=shared_cache)


def test_certify_full_symmetric_small_degrees(shared_cache):
    one = certify_full_symmetric(2, 12, cache=shared_cache)
    assert isinstance(one, Certificate)
    assert one.evidence[0]["kind"] == "degree-1"

    two = certify_full_symmetric(2, 24, cache=shared_cache)
    assert isinstance(two, Certificate)
    assert two.rule == "JordanCriterion"
    kinds = [e["kind"] for e in two.evidence]
    assert kinds == ["irreducibility"]

    three = certify_full_symmetric(2, 36, cache=shared_cache)
    assert isinstance(three, Certificate)
    kinds = [e["kind"] for e in three.evidence]
    assert "transposition-witness" in kinds and "prime-degree" in kinds

    four = certify_full_symmetric(2, 48, cache=shared_cache)
    assert isinstance(four, Certificate)
    kinds = [e["kind"] for e in four.evidence]
    assert "q-cycle-witness" in kinds and "transposition-witness" in kinds
    qev = next(e for e in four.evidence if e["kind"] == "q-cycle-witness")
    assert qev["q"] == 3


def test_certificates_serialize(shared_cache):
    cert = certify_full_symmetric(2, 48, cache=shared_cache)
    blob = json.dumps(cert.to_dict(), sort_keys=True)
    parsed = json.loads(blob)
    assert parsed["found"] and parsed["claim"] == CLAIM_FULL_SYMMETRIC
    missing = NotFound(claim="x", subject={"p": 2, "k": 14}, reason="nothing")
    assert json.loads(json.dumps(missing.to_dict()))["found"] is False


def test_prop2_shape_filter(shared_cache):
    verdict = prop2_shape_filter(2, 24, cache=shared_cache)
    assert verdict.possible_r == (1,)
    assert verdict.linear_power_excluded
    assert verdict.irreducible_if_some_irreducible
    assert verdict.full_if_some_full
    ells = [e["ell"] for e in verdict.evidence]
    assert ells == [5, 7]
    with pytest.raises(ValueError):
        prop2_shape_filter(2, 14, cache=shared_cache)


def test_residue_density_is_twenty_of_twentyfour():
    units = [a for a in range(35) if a % 5 and a % 7]
    assert len(units) == 24
    assert sum(residues_qualify(a) for a in units) == 20


def test_theorem1_conclusion(shared_cache):
    v = theorem1_conclusion(3, 24, shared_cache)
    assert v.applicable and v.ell == 5 and v.class_prime == 3
    assert v.first_terms == (2, 3)
    assert v.row_period == (2, 3)
    assert v.assumptions

    w = theorem1_conclusion(11, 24, shared_cache)  # 11 = 1 mod 5 but 4 mod 7
    assert w.applicable and w.ell == 7 and w.class_prime == 11
    assert w.first_terms == (1, 3)

    none = theorem1_conclusion(29, 24, shared_cache)  # +-1 mod both
    assert not none.applicable
    assert isinstance(none.certificate(), NotFound)


def test_corollary_conclusion(shared_cache):
    # case i: odd dimension
    v = corollary_conclusion(3, 26, shared_cache)
    assert v.applicable and v.rule == "Corollary-i" and v.claim == CLAIM_IRREDUCIBLE

    # case ii: dim = 2 mod 4 with p = 3 mod 7
    w = corollary_conclusion(3, 24, shared_cache)
    assert w.applicable and w.rule == "Corollary-ii"
    assert w.ell == 7 and w.first_terms == (0, 1)

    # dim odd but no qualifying residue
    n = corollary_conclusion(29, 50, shared_cache)
    assert not n.applicable

    # dim = 0 mod 4 with p = 1 mod 7 fits neither case
    m = corollary_conclusion(29, 48, shared_cache)
    assert not m.applicable


def test_remark_rule(shared_cache):
    r = remark_rule(24, shared_cache)
    assert r.applicable and r.rule == "PaperRemark14" and r.p == 2
    assert sorted(r.first_terms) == sorted(roots(charpoly_mod(2, 24, 13, shared_cache)))

    # weight 168 is the first dimension divisible by 14 (14 = 2 mod 4)
    r28 = remark_rule(168, shared_cache)
    assert r28.applicable and r28.rule == "PaperRemark28" and r28.p == 3

    r0 = remark_rule(10, shared_cache)
    assert not r0.applicable


def test_deduce_upgrades_with_anchor(shared_cache):
    res = deduce(3, 24, cache=shared_cache)
    assert isinstance(res.target, Certificate)
    assert res.unconditional
    assert res.target.claim == CLAIM_FULL_SYMMETRIC
    assert res.target.rule == "Theorem1"
    assert not res.target.assumptions
    rows = [e for e in res.target.evidence if e.get("kind") == "table-row"]
    assert rows and rows[0]["first_terms"] == [2, 3]
    anchors = [e for e in res.target.evidence if e.get("kind") == "anchor"]
    assert anchors and anchors[0]["n"] == 2
    assert isinstance(res.anchor_irreducible, Certificate)
    assert isinstance(res.anchor_full, Certificate)

    blob = json.loads(json.dumps(res.to_dict(), sort_keys=True))
    assert blob["unconditional"] is True


def test_deduce_not_found(shared_cache):
    res = deduce(29, 24, cache=shared_cache)
    assert isinstance(res.target, NotFound)
    assert res.unconditional is False
    assert res.anchor_irreducible is None
