"""Acceptance suite: one PASS/FAIL line per criterion.

A criterion that the computation shows to be unattainable is reported as
FAIL and its test is a strict xfail carrying the reason; the attainable part
of the same criterion is asserted by a separate test.
"""

import time
from functools import lru_cache

import pytest

import test_properties as props
from conftest import record_acceptance
from qclab.conjlab import (
    KNOWN_F_VALUES,
    brute_f_all,
    check_f_recurrence,
    check_f_symmetry,
    default_bound,
    holds,
    known_table,
    scan_conjecture,
    solve_f,
)
from qclab.residue import make_ring, qpow_mod, reduce
from qclab.poly import LPoly, qmono
from qclab.qkit import qint
from qclab.verifier import (
    CONJECTURE_IDS,
    IDENTITY_IDS,
    INT_IDS,
    PASS,
    QCONG_IDS,
    enumerate_cases,
    q_to_one_consistency,
    run_cases,
    run_int_congruence_check,
)

F_MISMATCH = {(7, 9, 16), (7, 9, 17)}
INT_COUNTEREXAMPLE = ("int1.1", 3)


@lru_cache(maxsize=None)
def f_rows():
    start = time.perf_counter()
    rows = known_table()
    return rows, time.perf_counter() - start


def _run(ids, bounds):
    cases = [c for cid in ids for c in enumerate_cases(cid, bounds)]
    start = time.perf_counter()
    return run_cases(cases, None), time.perf_counter() - start


@lru_cache(maxsize=None)
def int_results():
    return _run(INT_IDS, {"prime_max": 199})


# --- 1 ------------------------------------------------------------------------


def _criterion1():
    rows, elapsed = f_rows()
    wrong = [e for e in rows if e.f != e.expected]
    detail = (f"{len(rows) - len(wrong)}/{len(rows)} tabulated exponents reproduced in {elapsed:.1f}s"
              + "".join(f"; f({e.p},{e.m},{e.r}) computed {e.f}, tabulated {e.expected}" for e in wrong))
    record_acceptance(1, not wrong and elapsed < 60, detail)
    return rows, wrong, elapsed


@pytest.mark.xfail(strict=True, reason="two tabulated exponents for (7,9,16) and (7,9,17) do not "
                   "satisfy the congruence; brute force finds 21 and -62 as the unique solutions")
def test_criterion1_every_tabulated_exponent():
    rows, wrong, _ = _criterion1()
    assert not wrong


def test_criterion1_reproduced_part():
    rows, elapsed = f_rows()
    assert len(rows) == len(KNOWN_F_VALUES) == 33
    assert elapsed < 60
    assert {(e.p, e.m, e.r) for e in rows if e.f != e.expected} == F_MISMATCH
    assert solve_f(5, 8, 1) == -23
    for p, m, r in F_MISMATCH:
        # the computed value is the only solution in range, the tabulated one fails
        assert brute_f_all(p, m, r, default_bound(p, m, r)) == [solve_f(p, m, r)]
        assert not holds(p, m, r, KNOWN_F_VALUES[(p, m, r)])


# --- 2 ------------------------------------------------------------------------


def test_criterion2_structure():
    rows, _ = f_rows()
    sym, rec = check_f_symmetry(rows), check_f_recurrence(rows)
    values = {(e.p, e.m, e.r): e.f for e in rows}
    spot = values[(3, 2, 5)] == -values[(3, 2, 3)] and values[(3, 2, 7)] == values[(3, 2, 5)] - 5
    ok = sym.status == PASS and rec.status == PASS and spot
    record_acceptance(2, ok, f"symmetry {sym.status} on {sym.params['pairs']} pairs, "
                             f"recurrence {rec.status} on {rec.params['pairs']} pairs")
    assert ok, (sym.witness, rec.witness)


# --- 3 ------------------------------------------------------------------------


def test_criterion3_identities():
    ids = [i for i in IDENTITY_IDS if i not in CONJECTURE_IDS]
    results, elapsed = _run(ids, {})
    conj, conj_time = _run(["conj7.2"], {"n_max": 6})
    results += conj
    elapsed += conj_time
    bad = [r for r in results if r.status != PASS]
    have = {r.id for r in results}
    covered = set(ids) | {"conj7.2"} <= have
    thm25 = {(r.params["n"], r.params["s"]) for r in results if r.id == "thm2.5"}
    full25 = thm25 == {(n, s) for n in range(9) for s in range(n + 1)}
    ok = not bad and covered and full25 and elapsed < 300
    record_acceptance(3, ok, f"{len(results)} identity cases over {len(have)} displays, "
                             f"{len(bad)} not passing, {elapsed:.1f}s")
    assert ok, bad[:3]


# --- 4 ------------------------------------------------------------------------


def test_criterion4_q_congruences():
    ids = [i for i in QCONG_IDS if i not in CONJECTURE_IDS]
    results, elapsed = _run(ids, {"primes": [3, 5, 7, 11, 13]})
    bad = [r for r in results if r.status != PASS]
    branches = {(r.id, r.branch) for r in results}
    both = {("thm2.1", "closed form"), ("thm2.1", "zero"),
            ("lemma5.1", "closed form"), ("lemma5.1", "zero")} <= branches
    ok = not bad and both and set(ids) <= {r.id for r in results}
    record_acceptance(4, ok, f"{len(results)} q-congruence cases for p in 3..13, "
                             f"{len(bad)} not passing, {elapsed:.1f}s")
    assert ok, bad[:3]


# --- 5 ------------------------------------------------------------------------


def _criterion5():
    results, elapsed = int_results()
    bad = [r for r in results if r.status != PASS]
    spot = run_int_congruence_check("int1.3", 5).extra["residue"] == 19
    detail = (f"{len(results)} integer cases for p < 200 in {elapsed:.1f}s, {len(bad)} failing"
              + "".join(f"; {r.id} p={r.params['p']}: {r.witness}" for r in bad))
    record_acceptance(5, not bad and spot and elapsed < 120, detail)
    return results, bad, elapsed


@pytest.mark.xfail(strict=True, reason="at p = 3 the sum in (1.1) is 3/4, which is 3 mod 9, "
                   "not 0; the congruence holds there only mod p")
def test_criterion5_every_prime():
    _, bad, _ = _criterion5()
    assert not bad


def test_criterion5_all_but_the_counterexample():
    results, elapsed = int_results()
    bad = [r for r in results if r.status != PASS]
    assert [(r.id, r.params["p"]) for r in bad] == [INT_COUNTEREXAMPLE]
    assert set(INT_IDS) <= {r.id for r in results}
    assert elapsed < 120
    r = run_int_congruence_check("int1.1", 3)
    assert r.extra == {"residue": 3, "modulus": 9}
    assert run_int_congruence_check("int1.2", 3).status == PASS  # holds mod p
    assert run_int_congruence_check("int1.3", 5).extra["residue"] == 19


# --- 6 ------------------------------------------------------------------------


def test_criterion6_conjecture_scans():
    rows = []
    for cid in ("conj7.3", "conj7.4", "conj7.5", "conj7.6"):
        rows += scan_conjecture(cid, {"primes": [5, 7]}, jobs=None)
    bad = [r for r in rows if r.status != PASS]
    ids = {r.id for r in rows}
    ok = not bad and len(ids) == 4 and all(r.is_conjecture for r in rows)
    record_acceptance(6, ok, f"{len(rows)} conjecture-scan rows for p in {{5,7}}, {len(bad)} not passing")
    assert ok, bad[:3]


# --- 7 ------------------------------------------------------------------------


def test_criterion7_oracles_and_properties():
    checks = {}
    family = [(3, m, r) for m in (2, 4, 5, 7, 8) for r in range(-2 * m, 3 * m + 1) if r % m]
    family += [(3, 2, r) for r in range(1, 14, 2)]
    checks["solve_f = brute_f on p=3"] = all(
        brute_f_all(p, m, r, default_bound(p, m, r)) == [solve_f(p, m, r)] for p, m, r in family)
    one = LPoly.const(1)
    checks["q^(kp)"] = all(
        (qpow_mod(make_ring(p, 2), k * p) - reduce(one + (qmono(1) - 1) * qint(p) * k,
                                                   make_ring(p, 2))).is_zero()
        for p in (3, 5, 7) for k in range(-3, 4))
    checks["q -> 1"] = all(
        q_to_one_consistency(cid, p, params).status == PASS
        for p in (5, 7)
        for cid, params in (("cor2.2", {}), ("thm2.6", {"s": 0}), ("thm2.6", {"s": 1}),
                            ("cor2.4", {"m": 3, "s": 0}), ("cor2.4", {"m": 4, "s": 0}),
                            ("cor2.4", {"m": 6, "s": 0})))
    for name, fn in (("ring axioms", props.test_ring_axioms),
                     ("extended Euclid", props.test_extended_euclid_inverse),
                     ("non-invertible multiples", props.test_extended_euclid_rejects_multiples_of_p)):
        try:
            fn()
            checks[name] = True
        except AssertionError:
            checks[name] = False
    ok = all(checks.values())
    record_acceptance(7, ok, ", ".join(f"{k} {'ok' if v else 'FAILED'}" for k, v in checks.items())
                      + " (property suites: 1000 cases each)")
    assert ok, checks


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
