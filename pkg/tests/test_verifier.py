from fractions import Fraction

import pytest
import sympy

from qclab.verifier import (
    FAIL,
    PASS,
    SKIP,
    CheckResult,
    NoClassicalCounterpart,
    PreconditionViolated,
    UnknownCheckId,
    enumerate_cases,
    expand_ids,
    precondition,
    q_to_one_consistency,
    run_cases,
    run_check,
    run_identity_check,
    run_int_congruence_check,
    run_q_congruence_check,
    sort_results,
    summarize,
)
from qclab.verifier.intcong import evaluate_int, gen_binom, mod_fraction
from qclab.verifier.runner import residue_difference


# --- identities ------------------------------------------------------------


def test_andrews_watson_odd_branch():
    r = run_identity_check("andrews-watson", {"n": 3, "a": 2, "b": 3})
    assert r.status == PASS and r.branch == "odd"


@pytest.mark.parametrize("cid,params", [
    ("thm2.5", {"n": 1, "s": 0}),
    ("lemma4.3", {"n": 2, "h": 1, "m": 1, "s": 0}),
    ("eq4.14", {"n": 2, "i": 0}),
    ("andrews-watson", {"n": 4}),
    ("conj7.2", {"n": 3, "r": 2}),
])
def test_identity_examples(cid, params):
    assert run_identity_check(cid, params).status == PASS


def test_identity_outside_hypothesis_is_skipped():
    r = run_identity_check("thm2.5", {"n": 1, "s": 2})
    assert r.status == SKIP


def test_conjecture_rows_are_tagged():
    r = run_identity_check("conj7.2", {"n": 2, "r": 1})
    assert r.is_conjecture and r.tag == "conjecture-scan"


# --- q-congruences ------------------------------------------------------------


@pytest.mark.parametrize("cid,p,params", [
    ("cor2.2", 3, {}),
    ("thm2.6", 3, {"s": 0}),
    ("thm2.1", 5, {"s": 1}),
    ("lemma3.1", 7, {"k": 2}),
    ("thm2.3-2.7", 7, {"m": 3, "r": 1, "s": 0}),
    ("cor2.8", 7, {"m": 3, "r": 1, "s": 1}),
])
def test_q_congruence_examples(cid, p, params):
    r = run_q_congruence_check(cid, p, params)
    assert r.status == PASS, r.witness


def test_parity_selects_zero_branch():
    assert precondition("thm2.1", {"p": 5, "s": 1}) == "zero"
    assert precondition("thm2.1", {"p": 5, "s": 2}) == "closed form"


def test_failing_congruence_reports_residue():
    # shifting the exponent breaks the congruence; the residue is the witness
    from qclab.qkit.displays import DISPLAYS

    d = DISPLAYS["thm2.6"]
    original = d.builder
    try:
        object.__setattr__(d, "builder", lambda p, s: (original(p, s)[0], original(p, s)[1] * 2))
        r = run_q_congruence_check("thm2.6", 5, {"s": 0})
    finally:
        object.__setattr__(d, "builder", original)
    assert r.status == FAIL
    assert "LHS - RHS" in r.witness


def test_wrong_kind_rejected():
    with pytest.raises(UnknownCheckId):
        run_q_congruence_check("int1.2", 3)
    with pytest.raises(UnknownCheckId):
        expand_ids(["nope"])


# --- integer congruences ------------------------------------------------------


def test_cube_sum_p3():
    r = run_int_congruence_check("int1.2", 3)
    assert r.status == PASS
    total, _, _, _, _ = evaluate_int("int1.2", 3)
    assert total == Fraction(9, 8)


def test_cube_sum_mod_p_squared_p5():
    r = run_int_congruence_check("int1.3", 5)
    assert r.status == PASS
    assert r.extra == {"residue": 19, "modulus": 25}
    assert evaluate_int("int1.3", 5)[0] == Fraction(603, 512)


def test_shifted_square_sum_p5():
    r = run_int_congruence_check("int1.12", 5, {"s": 0})
    assert r.status == PASS and r.extra["residue"] == 1


def _sympy_sum(cid, p):
    """The same sums written out with sympy binomials."""
    b, R = sympy.binomial, sympy.Rational
    n = (p - 1) // 2
    terms = {
        "int1.2": [b(2 * k, k) ** 3 / R(64) ** k for k in range(n + 1)],
        "int1.8": [b(2 * k, k) ** 2 / R(16) ** k for k in range(p)],
        "int1.9": [b(3 * k, 2 * k) * b(2 * k, k) / R(27) ** k for k in range(p)],
        "int1.10": [b(4 * k, 2 * k) * b(2 * k, k) / R(64) ** k for k in range(p)],
        "int1.11": [b(6 * k, 3 * k) * b(3 * k, k) / R(432) ** k for k in range(p)],
    }[cid]
    return sum(terms)


@pytest.mark.parametrize("cid", ["int1.2", "int1.8", "int1.9", "int1.10", "int1.11"])
@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_int_sums_match_sympy(cid, p):
    total = evaluate_int(cid, p)[0]
    assert sympy.Rational(total.numerator, total.denominator) == _sympy_sum(cid, p)


def test_mod_fraction_and_gen_binom():
    assert mod_fraction(Fraction(603, 512), 25) == 19
    assert gen_binom(Fraction(-1, 2), 2) == Fraction(3, 8)
    assert gen_binom(Fraction(5), 2) == 10


def test_rational_parameter_precondition():
    with pytest.raises(PreconditionViolated):
        precondition("int1.7", {"p": 5, "a": "-1/5"})
    r = run_int_congruence_check("int1.7", 7, {"a": "-1/3"})
    assert r.status in (PASS, SKIP)


# --- grids --------------------------------------------------------------------


def test_enumerate_parity_branches():
    cases = enumerate_cases("thm2.1", {"p": 5})
    assert [c.params["s"] for c in cases] == [0, 1, 2]
    assert [c.branch for c in cases] == ["closed form", "zero", "closed form"]


def test_enumerate_statement_alias():
    cases = enumerate_cases("thm2.3", {"p": 5, "m": 3, "r": 1})
    assert {c.id for c in cases} <= {"thm2.3-2.5", "thm2.3-2.6", "thm2.3-2.7"}
    assert max(c.params["s"] for c in cases) <= 1


def test_enumerate_bounded_s_range():
    cases = enumerate_cases("cor2.8", {"p": 5, "m": 3, "r": 1})
    assert sorted(c.params["s"] for c in cases) == [0, 1]


def test_excluded_rows_become_skips():
    cases = enumerate_cases("thm2.1", {"p": 5, "s": 7}, include_excluded=True)
    assert all(c.excluded for c in cases)
    assert {r.status for r in run_cases(cases, 1)} == {SKIP}


def test_run_cases_order_independent_of_jobs():
    cases = enumerate_cases("cor2.2", {"primes": [3, 5, 7]})
    serial = run_cases(cases, 1)
    parallel = run_cases(list(reversed(cases)), 2)
    assert [(r.id, r.params, r.status) for r in serial] == [(r.id, r.params, r.status) for r in parallel]
    assert [r.params["p"] for r in serial] == [3, 5, 7]


def test_sort_and_summarize():
    rows = [CheckResult("b", {"p": 5}, PASS), CheckResult("a", {"p": 7}, FAIL),
            CheckResult("a", {"p": 3}, SKIP)]
    assert [(r.id, r.params["p"]) for r in sort_results(rows)] == [("a", 3), ("a", 7), ("b", 5)]
    assert summarize(rows) == {PASS: 1, FAIL: 1, SKIP: 1}


def test_run_check_dispatch():
    assert run_check("cor2.2", {"p": 5}).status == PASS
    assert run_check("int1.8", {"p": 5}).status == PASS
    assert run_check("lemma4.1a", {"n": 2}).status == PASS


# --- q -> 1 -------------------------------------------------------------------


@pytest.mark.parametrize("cid,params", [("cor2.2", {}), ("thm2.6", {"s": 0}), ("thm2.6", {"s": 1}),
                                         ("cor2.4", {"m": 3, "s": 0}), ("cor2.4", {"m": 6, "s": 1})])
def test_q_to_one(cid, params):
    assert q_to_one_consistency(cid, 5, params).status == PASS


def test_q_to_one_summand_value():
    from qclab.verifier.runner import _cor22_pairs
    from qclab.qkit import limit_q_to_one

    k, qterm, classical = list(_cor22_pairs(5, {}))[1]
    assert limit_q_to_one(qterm) == classical == Fraction(8, 64)


def test_q_to_one_unknown():
    with pytest.raises(NoClassicalCounterpart):
        q_to_one_consistency("lemma3.1", 5)
