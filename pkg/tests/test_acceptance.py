"""End-to-end acceptance checks, one test per numbered criterion.

Each test prints a single "[criterion N] PASS/FAIL" line and enforces
its stated time budget.  This file sorts first so the timed criteria
run against a cold shared cache.

Criterion 9 part (a) is expected to fail and is asserted as written:
x^4 + 1 has the same factorization degrees modulo every prime as the
reducible x^4 - 10x^2 + 16 (it never stays irreducible mod any prime,
and only degree data reaches the sieve), so no sound degree-set sieve
can ever certify it.  See test_criterion_09_galois_engine.
"""
import time

from heckemod._primes import primes_up_to
from heckemod.cache import CharpolyCache
from heckemod.galois import (
    CLAIM_FULL_SYMMETRIC,
    Certificate,
    NotFound,
    RULE_DEGREE_SET_SIEVE,
    certify_full_symmetric,
    certify_full_symmetric_poly,
    certify_irreducible_poly,
    deduce,
    residues_qualify,
)
from heckemod.gfpoly import roots
from heckemod.hecke import dim_cusp, hecke_matrix, trace_of_matrix
from heckemod.modfactor import (
    charpoly_mod,
    congruence_class_invariance,
    lemma1_check,
    serre_classification_check,
    small_ell_rule,
    table_rows,
)
from heckemod.traceformula import trace

TABLE_5 = {
    (11, 0): (2,),
    (11, 2): (2,),
    (2, 0): (1, 4),
    (2, 2): (2, 3),
    (3, 0): (2, 3),
    (3, 2): (1, 4),
    (19, 0): (0,),
    (19, 2): (0,),
}

TABLE_7 = {
    (29, 0): (2,),
    (29, 2): (2,),
    (29, 4): (2,),
    (2, 0): (4, 5),
    (2, 2): (1, 3),
    (2, 4): (6, 2),
    (3, 0): (0, 1, 0, 6),
    (3, 2): (0, 3, 0, 4),
    (3, 4): (5, 0, 2, 0),
    (11, 0): (1, 3),
    (11, 2): (4, 5),
    (11, 4): (6, 2),
    (5, 0): (0, 3, 0, 4),
    (5, 2): (0, 1, 0, 6),
    (5, 4): (2, 0, 5, 0),
    (13, 0): (0,),
    (13, 2): (0,),
    (13, 4): (0,),
}

TABLE_13 = {
    0: (2, 12, 9, 4, 1, 11, 5, 11, 1, 4, 9, 12, 2, 8),
    2: (4, 11, 5, 8, 2, 9, 10, 9, 2, 8, 5, 11, 4, 3),
    4: (8, 6, 8, 9, 10, 3, 4, 5, 7, 5, 4, 3, 10, 9),
    6: (5, 3, 12, 3, 5, 7, 6, 8, 10, 1, 10, 8, 6, 7),
    8: (1, 10, 6, 11, 6, 10, 1, 12, 3, 7, 2, 7, 3, 12),
    10: (11, 2, 7, 12, 9, 12, 7, 2, 11, 6, 1, 4, 1, 6),
}


def report(num, ok, detail):
    print("[criterion %d] %s: %s" % (num, "PASS" if ok else "FAIL", detail))


def test_criterion_01_table_mod5(shared_cache):
    start = time.perf_counter()
    cells = table_rows(5, cache=shared_cache)
    ok = len(cells) == 8 and all(
        cell.display_terms == TABLE_5[(cell.p, cell.kclass)]
        and cell.sequence.period == len(cell.display_terms)
        for cell in cells
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    report(1, ok, "mod-5 table, 8 cells over two periods, %.1fs" % elapsed)
    assert ok


def test_criterion_02_table_mod7(shared_cache):
    start = time.perf_counter()
    cells = table_rows(7, cache=shared_cache)
    ok = len(cells) == 18 and all(
        cell.display_terms == TABLE_7[(cell.p, cell.kclass)]
        and cell.sequence.period == len(cell.display_terms)
        for cell in cells
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 300
    report(2, ok, "mod-7 table, 18 cells over two periods, %.1fs" % elapsed)
    assert ok


def test_criterion_03_table_mod13(shared_cache):
    start = time.perf_counter()
    cells = table_rows(13, cache=shared_cache)
    ok = len(cells) == 6 and all(
        cell.sequence.period == 14
        and cell.display_terms == TABLE_13[cell.kclass]
        for cell in cells
    )
    full_elapsed = time.perf_counter() - start
    ok = ok and full_elapsed < 1800

    # single-period mode gets a fresh cache so its budget is honest
    start = time.perf_counter()
    quick = table_rows(13, single_period=True, cache=CharpolyCache())
    ok = ok and all(
        cell.sequence.period is None
        and cell.sequence.terms[:14] == TABLE_13[cell.kclass]
        for cell in quick
    )
    single_elapsed = time.perf_counter() - start
    ok = ok and single_elapsed < 300
    report(
        3,
        ok,
        "mod-13 table, 6 rows, two periods %.1fs, single period %.1fs"
        % (full_elapsed, single_elapsed),
    )
    assert ok


def test_criterion_04_closed_forms(shared_cache):
    start = time.perf_counter()
    checked = 0
    ok = True
    for ell, ps in ((2, (3, 5, 7, 11, 13)), (3, (2, 5, 7, 11, 13))):
        for p in ps:
            for k in range(2, 61, 2):
                ok = ok and charpoly_mod(p, k, ell, shared_cache) == small_ell_rule(
                    p, k, ell
                )
                checked += 1
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    report(4, ok, "mod-2/mod-3 closed forms, %d cases, %.1fs" % (checked, elapsed))
    assert ok


def test_criterion_05_trace_formula_oracle():
    start = time.perf_counter()
    ok = True
    checked = 0
    for n in list(range(1, 11)) + [12, 18, 25]:
        for k in range(12, 41, 2):
            ok = ok and trace(n, k) == trace_of_matrix(hecke_matrix(n, k))
            checked += 1
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    report(5, ok, "trace formula vs matrices, %d cases, %.1fs" % (checked, elapsed))
    assert ok


def test_criterion_06_divisibility(shared_cache):
    start = time.perf_counter()
    checked = 0
    for p in (2, 3, 5, 7, 11):
        for ell in (5, 7, 13):
            if p == ell:
                continue
            for k in range(12, 121, 2):
                lemma1_check(p, ell, k, cache=shared_cache)  # raises on failure
                checked += 1
    elapsed = time.perf_counter() - start
    ok = checked == 13 * 55 and elapsed < 120
    report(6, ok, "weight-shift divisibility, %d quotients, %.1fs" % (checked, elapsed))
    assert ok


def test_criterion_07_congruence_classes(shared_cache):
    start = time.perf_counter()
    ok = True
    checked = 0
    for p, q, ell in ((2, 7, 5), (3, 13, 5), (2, 23, 7), (3, 17, 7)):
        for k in range(2, 61, 2):
            ok = ok and congruence_class_invariance(p, q, ell, k, cache=shared_cache)
            checked += 1
    elapsed = time.perf_counter() - start
    report(7, ok, "congruence-class invariance, %d cases, %.1fs" % (checked, elapsed))
    assert ok


def test_criterion_08_root_classification(shared_cache):
    start = time.perf_counter()
    ok = True
    checked = 0
    for ell in (3, 5, 7):
        for p in (2, 3, 5, 7, 11, 13):
            if p == ell:
                continue
            for k in range(2, 61, 2):
                ok = ok and serre_classification_check(ell, p, k, cache=shared_cache)
                checked += 1
    elapsed = time.perf_counter() - start
    report(8, ok, "eigenvalue classification, %d cases, %.1fs" % (checked, elapsed))
    assert ok


def test_criterion_09_galois_engine(shared_cache):
    """Certification engine on x^4 + 1 and on the weight slice k <= 48.

    Part (a) requires a DegreeSetSieve irreducibility certificate for
    x^4 + 1.  That certificate cannot exist: the polynomial factors
    modulo every prime, and its factorization degree multisets are
    always among {1,1,1,1} and {2,2}, exactly the degree data of the
    reducible x^4 - 10x^2 + 16.  Degree information alone therefore
    cannot separate the two, the sieve's survivor set stabilizes at
    {2}, and the search returns NotFound at every bound.  The check is
    asserted as stated and left failing rather than weakened.
    """
    start = time.perf_counter()
    x4_plus_1 = (1, 0, 0, 0, 1)

    res_a = certify_irreducible_poly(x4_plus_1, bound=500)
    ok_a = isinstance(res_a, Certificate) and res_a.rule == RULE_DEGREE_SET_SIEVE
    print("  (a) x^4+1 sieve certificate:", "yes" if ok_a else "no (NotFound)")

    res_never = certify_full_symmetric_poly(x4_plus_1, bound=500)
    ok_never = isinstance(res_never, NotFound)
    print("  (a) x^4+1 never full-symmetric:", ok_never)

    ok_b = True
    for k in range(12, 49, 2):
        if dim_cusp(k) == 0:
            continue  # no operator to certify at this weight
        cert = certify_full_symmetric(2, k, bound=200, cache=shared_cache)
        ok_b = ok_b and isinstance(cert, Certificate) and cert.unconditional
    print("  (b) T_2 full-symmetric, even 12 <= k <= 48:", ok_b)

    units = [r for r in range(1, 35) if r % 5 and r % 7]
    qualifying = [r for r in units if residues_qualify(r)]
    ok_c = len(units) == 24 and len(qualifying) == 20
    print("  (c) qualifying residue density: %d/%d" % (len(qualifying), len(units)))

    elapsed = time.perf_counter() - start
    ok = ok_a and ok_never and ok_b and ok_c and elapsed < 120
    report(9, ok, "certification engine, %.1fs" % elapsed)
    assert ok


def test_criterion_10_deduction_end_to_end(shared_cache):
    start = time.perf_counter()
    qualifying = [p for p in primes_up_to(99) if residues_qualify(p)]
    ok = len(qualifying) == 22 and not {29, 41, 71} & set(qualifying)
    for p in qualifying:
        res = deduce(p, 24, cache=shared_cache)
        cert = res.target
        good = (
            res.unconditional
            and isinstance(cert, Certificate)
            and cert.claim == CLAIM_FULL_SYMMETRIC
        )
        row = next(e for e in cert.evidence if e.get("kind") == "table-row")
        direct = roots(charpoly_mod(row["class_prime"], 24, row["ell"], shared_cache))
        ok = ok and good and sorted(row["first_terms"]) == sorted(direct)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    report(
        10,
        ok,
        "deductions at weight 24 for %d primes below 100, %.1fs"
        % (len(qualifying), elapsed),
    )
    assert ok
