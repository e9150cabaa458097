from fractions import Fraction
from math import comb

import pytest

from qclab.poly import LPoly, RFunc, lp_eval, qmono, rf_equal
from qclab.qkit import QSum, Term, binom, limit_q_to_one, phi_sum, poch_q, qbinom, qint, qpoch, qpow
from qclab.qkit.displays import (
    DISPLAYS,
    InvalidParams,
    SumSpec,
    UnknownCheckId,
    build_lhs,
    build_rhs,
    build_sides,
    gen_sum,
)

q = qmono(1)
ONE = LPoly.const(1)


def test_qint():
    assert qint(1) == ONE
    assert qint(3) == 1 + q + q ** 2
    for p in (3, 5, 7):
        assert lp_eval(qint(p), {"q": 1}) == p


def test_qpoch():
    a = LPoly.var("a")
    assert qpoch(a, 1, 0) == ONE
    assert qpoch(q, 2, 2) == (1 - q) * (1 - q ** 3)
    assert qpoch(-q, 1, 2) == (1 + q) * (1 + q ** 2)


def test_qbinom():
    assert qbinom(2, 1) == 1 + q
    assert qbinom(4, 2) == LPoly.from_q_coeffs([1, 1, 2, 1, 1])
    assert qbinom(2, 3).is_zero()
    assert qbinom(3, -1).is_zero()


@pytest.mark.parametrize("n", range(8))
def test_qbinom_at_one_is_binomial(n):
    for k in range(n + 1):
        assert lp_eval(qbinom(n, k), {"q": 1}) == comb(n, k)


def test_q_pascal_small():
    for n in range(1, 8):
        for k in range(1, n):
            assert qbinom(n, k) == qbinom(n - 1, k - 1) + q ** k * qbinom(n - 1, k)


def test_phi_sum_single_term_is_one():
    assert rf_equal(phi_sum([q ** 2, q ** 3], [q ** 5], 1, q, 1), RFunc(1))


def test_phi_sum_two_terms():
    got = phi_sum([qmono(-1), -q ** 2], [-q], 1, ONE, 2)
    want = RFunc(1) + RFunc((1 - qmono(-1)) * (1 + q ** 2), [(1 - q), (1 + q)])
    assert rf_equal(got, want)


def test_build_lhs_cubed_central_sum_p3():
    want = RFunc(1) + RFunc(q ** 2, [(1 + q) ** 2, 1 + q ** 2])
    assert rf_equal(build_lhs(SumSpec("cor2.2", {"p": 3})), want)


def test_build_shifted_square_sum_p3():
    spec = SumSpec("thm2.6", {"p": 3, "s": 0})
    assert rf_equal(build_lhs(spec), RFunc(1) + RFunc(1, [(1 + q) ** 2]))
    assert rf_equal(build_rhs(spec), RFunc(-qmono(-2)))


def test_build_parity_sum_reduces_to_cubed_sum():
    spec = SumSpec("thm2.1", {"p": 3, "s": 0})
    assert rf_equal(build_lhs(spec), build_lhs(SumSpec("cor2.2", {"p": 3})))
    assert build_rhs(spec).is_zero()


def test_build_boundary_case_s_equals_n():
    for n in range(5):
        lhs, rhs = build_lhs(SumSpec("lemma3.2", {"n": n, "s": n})), build_rhs(SumSpec("lemma3.2", {"n": n, "s": n}))
        assert rf_equal(lhs, rhs)


def test_unknown_and_invalid():
    with pytest.raises(UnknownCheckId):
        build_sides(SumSpec("nope", {}))
    with pytest.raises(InvalidParams):
        build_sides(SumSpec("thm2.5", {"n": -1, "s": 0}))


def test_registry_citations_present():
    assert DISPLAYS
    for d in DISPLAYS.values():
        assert d.citation
        assert d.kind in ("identity", "qcong")


def test_term_algebra():
    t = poch_q(1, 1, 3) / poch_q(1, 1, 2)
    assert rf_equal(t.to_rfunc(), RFunc(1 - q ** 3))
    s = QSum([qpow(1), qpow(2)]) * const_term(3)
    assert rf_equal(s.to_rfunc(), RFunc(3 * q + 3 * q ** 2))


def const_term(c):
    return Term(Fraction(c))


def test_limit_q_to_one():
    # (q;q)_2 / (1-q)^2 -> 2
    assert limit_q_to_one(poch_q(1, 1, 2) / Term(num=((1 - q) ** 2,))) == 2
    assert limit_q_to_one(binom(5, 2)) == 10
    with pytest.raises(ZeroDivisionError):
        limit_q_to_one(Term(den=((1 - q),)))


def test_gen_sum_term_count():
    assert len(list(gen_sum(5, 3, 1, 0))) <= 5
