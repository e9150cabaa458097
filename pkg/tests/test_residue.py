import pytest

from conftest import SQ, sympy_residue, to_sympy
from qclab.poly import LPoly, qmono
from qclab.qkit import Term, poch_q, qint, qpow
from qclab.residue import (
    EvenPrimeUnsupported,
    NoRepresentation,
    NotInvertible,
    NotPrime,
    Reducer,
    frac_residue,
    invert,
    is_prime,
    legendre,
    make_ring,
    qpow_mod,
    reduce,
    reduce_ratio,
    two_square,
)

q = qmono(1)
ONE = LPoly.const(1)
R31, R32 = make_ring(3, 1), make_ring(3, 2)


def same(a, b):
    return (a - b).is_zero()


def test_make_ring():
    assert make_ring(3, 1).modpoly == 1 + q + q ** 2
    assert make_ring(3, 2).modpoly == LPoly.from_q_coeffs([1, 2, 3, 2, 1])
    with pytest.raises(NotPrime):
        make_ring(9, 1)
    with pytest.raises(EvenPrimeUnsupported):
        make_ring(2, 1)


def test_reduce():
    assert same(reduce(q ** 5, R31), reduce(q ** 2, R31))
    assert reduce(qmono(-2), R31).rep == q
    assert reduce(q ** 3, R32).rep == q ** 3


def test_invert():
    assert invert(1 + q, R31).rep == -q
    assert invert(q, R31).rep == reduce(q ** 2, R31).rep
    with pytest.raises(NotInvertible):
        invert(1 + q + q ** 2, R32)


def test_reduce_ratio():
    ratio = reduce_ratio(q ** 2, (1 + q) ** 2 * (1 + q ** 2), R32)
    assert (ratio + 1).is_zero()
    assert same(reduce_ratio(1 - q ** 2, 1 - q, R32), reduce(1 + q, R32))
    with pytest.raises(NotInvertible):
        reduce_ratio(ONE, qint(3), R31)


def test_qpow_mod():
    assert same(qpow_mod(R31, 5), reduce(q ** 2, R31))
    back = qpow_mod(R32, -2) * q ** 2
    assert back.rep == ONE
    assert qpow_mod(R32, 0).rep == ONE


def test_reduce_matches_sympy():
    for p, r in ((3, 1), (3, 2), (5, 2), (7, 2)):
        ring = make_ring(p, r)
        for f in (qmono(-7) + 3 * q ** 11, (1 - q) ** 9, qmono(40) - 2):
            assert to_sympy(reduce(f, ring).rep) == sympy_residue(f, p, r).as_expr()


def test_reducer_tracks_valuation():
    red = Reducer(make_ring(5, 2))
    # (1 - q^5) / (1 - q) = [5] is zero mod [5]^1 but not mod [5]^2
    t = Term(num=(1 - q ** 5,), den=(1 - q,))
    assert not red.term(t).is_zero()
    assert red.term(t * Term(num=(1 - q ** 10,))).is_zero()
    with pytest.raises(NotInvertible):
        red.term(Term(den=(1 - q ** 5, 1 - q ** 10)))


def test_reducer_agrees_with_direct_reduction():
    red = Reducer(make_ring(5, 2))
    t = poch_q(1, 2, 3) * qpow(-4) / poch_q(2, 2, 3)
    want = reduce(t.numerator(), red.ring) * invert(poch_q(2, 2, 3).numerator(), red.ring)
    assert same(red.term(t), want)


def test_legendre():
    assert legendre(-1, 5) == 1
    assert legendre(-1, 3) == -1
    assert legendre(-3, 7) == 1
    assert legendre(14, 7) == 0


def test_frac_residue():
    assert frac_residue(-1, 2, 5) == 2
    assert frac_residue(-1, 3, 7) == 2
    assert frac_residue(-2, 3, 7) == 4
    assert frac_residue(-1, 3, 7) + frac_residue(-2, 3, 7) == 7 - 1


def test_two_square():
    assert two_square(5, "x_odd") == (1, 2)
    assert two_square(13, "x_odd") == (3, 2)
    assert two_square(13, "x_one_mod_4") == (-3, 2)
    with pytest.raises(NoRepresentation):
        two_square(7)


def test_is_prime():
    assert is_prime(13)
    assert not is_prime(1)
    assert not is_prime(91)
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
