from fractions import Fraction

import pytest

from qclab.poly import (
    LPoly,
    RFunc,
    ZeroDivisor,
    exact_div_q,
    lp_divrem_q,
    lp_eval,
    lp_pow,
    lp_substitute,
    qmono,
    rf_equal,
)

q = qmono(1)
x = LPoly.var("x")
ONE = LPoly.const(1)
Q3 = 1 + q + q ** 2


def test_multiplication_examples():
    assert (1 + q) * (1 - q) == 1 - q ** 2
    assert Q3 * Q3 == LPoly.from_q_coeffs([1, 2, 3, 2, 1])
    assert Q3 + LPoly() == Q3


def test_power_examples():
    assert lp_pow(1 + q, 2) == 1 + 2 * q + q ** 2
    assert lp_pow(LPoly(), 0) == ONE
    assert lp_pow(Q3, 2) == LPoly.from_q_coeffs([1, 2, 3, 2, 1])


def test_substitute_examples():
    assert lp_substitute(Q3, "q", q ** 2) == 1 + q ** 2 + q ** 4
    assert lp_substitute((1 - x) * (1 - q * x), "x", ONE).is_zero()
    assert lp_substitute(1 + q, "q", q ** 3) == 1 + q ** 3


def test_eval_examples():
    assert lp_eval(Q3, {"q": 1}) == 3
    assert lp_eval(qmono(-2), {"q": 2}) == Fraction(1, 4)
    assert lp_eval((1 + q) ** 3, {"q": 1}) == 8


def test_divrem_examples():
    quo, rem = lp_divrem_q(q ** 4, Q3)
    assert rem == q
    assert quo * Q3 + rem == q ** 4
    assert lp_divrem_q(LPoly.from_q_coeffs([1, 2, 3, 2, 1]), Q3 ** 2) == (ONE, LPoly())
    f = 3 - q + q ** 5
    assert lp_divrem_q(f, ONE) == (f, LPoly())


def test_exact_division_refuses_remainder():
    assert exact_div_q(Q3 * (1 - q), Q3) == 1 - q
    with pytest.raises(ArithmeticError):
        exact_div_q(q ** 4, Q3)


def test_rf_equal_examples():
    assert rf_equal(RFunc(1 - q ** 2, 1 - q), RFunc(1 + q))
    assert not rf_equal(RFunc(1, 1 + q), RFunc(1, 1 + q ** 2))
    assert rf_equal(RFunc(x ** -1 * (x - x ** 2)), RFunc(1 - x))


def test_laurent_normal_form_is_canonical():
    assert qmono(-2) * qmono(2) == ONE
    assert (q - q) == LPoly()
    assert hash(1 + q) == hash(q + 1)


def test_multivariate_arithmetic():
    f = (1 - x) * (1 - q * x)
    assert f == 1 - x - q * x + q * x ** 2
    assert f.variables() == frozenset({"q", "x"})
    assert lp_eval(f, {"x": 2, "q": 3}) == (1 - 2) * (1 - 6)


def test_rfunc_sum_uses_common_denominators():
    a = RFunc(1, 1 - q)
    b = RFunc(q, 1 - q)
    assert rf_equal(a + b, RFunc(1 + q, 1 - q))
    assert rf_equal(a - a, RFunc(0))
    assert rf_equal(a * RFunc(1 - q), RFunc(1))


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisor):
        RFunc(1) / RFunc(0)
