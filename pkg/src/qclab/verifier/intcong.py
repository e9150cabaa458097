"""Classical binomial-sum congruences modulo p and p^2.

Every sum is evaluated exactly over Q and only then reduced: the denominators
(powers of 2 and 3, and the p-adic unit parts of rational binomials) are
inverted modulo the stated prime power.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Optional, Tuple

from ..residue import DenominatorDivisibleByP, legendre, two_square
from .results import PreconditionViolated


def mod_fraction(x: Fraction, modulus: int) -> int:
    x = Fraction(x)
    try:
        inv = pow(x.denominator, -1, modulus)
    except ValueError:
        raise DenominatorDivisibleByP(f"denominator {x.denominator} is not invertible mod {modulus}") from None
    return x.numerator * inv % modulus


def gen_binom(a: Fraction, k: int) -> Fraction:
    """``binomial(a, k)`` for rational ``a``."""
    out = Fraction(1)
    for j in range(k):
        out = out * (a - j) / (j + 1)
    return out


def parse_fraction(text) -> Fraction:
    return Fraction(str(text))


@dataclass(frozen=True)
class IntDisplay:
    id: str
    citation: str
    params: Tuple[str, ...]
    evaluate: Callable  # (p, **params) -> (exact sum, target residue, modulus, branch)


def _half(p):
    return (p - 1) // 2


def _need(cond: bool, why: str):
    if not cond:
        raise PreconditionViolated(why)


def _beukers_target(p: int, modulus: int, convention: str = "x_odd") -> Tuple[int, str]:
    if p % 4 == 3:
        return 0, "p=3 mod 4"
    x, _ = two_square(p, convention)
    value = 4 * x * x - (2 * p if modulus == p * p else 0)
    return value, "p=1 mod 4"


def _int11(p):
    n = _half(p)
    total = sum(Fraction((-1) ** k * comb(n, k) * comb(2 * k, k) ** 2, 16 ** k)
                for k in range(n + 1))
    target, branch = _beukers_target(p, p * p)
    return total, target, p * p, branch


def _cube_sum(p):
    return sum(Fraction(comb(2 * k, k) ** 3, 64 ** k) for k in range(_half(p) + 1))


def _int12(p):
    target, branch = _beukers_target(p, p)
    return _cube_sum(p), target, p, branch


def _int13(p):
    target, branch = _beukers_target(p, p * p)
    return _cube_sum(p), target, p * p, branch


def _zero_sum(p, cond, why, summand):
    _need(p >= 5, "needs p > 3")
    _need(cond, why)
    return sum(summand(k) for k in range(p)), 0, p * p, ""


def _int14(p):
    return _zero_sum(p, p % 3 == 2, "needs p = 2 mod 3",
                     lambda k: Fraction(comb(3 * k, k) * comb(2 * k, k) ** 2, 108 ** k))


def _int15(p):
    # binomial(4k, 2k): the family with a = -1/4 in the general a-congruence.
    return _zero_sum(p, p % 8 in (5, 7), "needs p = 5, 7 mod 8",
                     lambda k: Fraction(comb(4 * k, 2 * k) * comb(2 * k, k) ** 2, 256 ** k))


def _int16(p):
    return _zero_sum(p, p % 4 == 3, "needs p = 3 mod 4",
                     lambda k: Fraction(comb(6 * k, 3 * k) * comb(3 * k, k) * comb(2 * k, k),
                                        1728 ** k))


def _int17(p, a):
    a = parse_fraction(a)
    _need(a.denominator % p != 0, f"p divides the denominator of a = {a}")
    _need(mod_fraction(a, p) % 2 == 1, f"<a>_p = {mod_fraction(a, p)} is even")
    total = sum(comb(2 * k, k) * gen_binom(a, k) * gen_binom(-1 - a, k) / 4 ** k
                for k in range(p))
    return total, 0, p * p, ""


def _legendre_sum(p, d, summand):
    _need(p >= 5, "needs p >= 5")
    return sum(summand(k) for k in range(p)), legendre(d, p), p * p, ""


def _int18(p):
    return _legendre_sum(p, -1, lambda k: Fraction(comb(2 * k, k) ** 2, 16 ** k))


def _int19(p):
    return _legendre_sum(p, -3, lambda k: Fraction(comb(3 * k, 2 * k) * comb(2 * k, k), 27 ** k))


def _int110(p):
    return _legendre_sum(p, -2, lambda k: Fraction(comb(4 * k, 2 * k) * comb(2 * k, k), 64 ** k))


def _int111(p):
    return _legendre_sum(p, -1,
                         lambda k: Fraction(comb(6 * k, 3 * k) * comb(3 * k, k), 432 ** k))


def _int112(p, s):
    n = _half(p)
    _need(0 <= s <= n, "needs 0 <= s <= (p-1)/2")
    total = sum(Fraction(comb(2 * k, k) * comb(2 * k + 2 * s, k + s), 4 ** (2 * k + s))
                for k in range(n + 1))
    return total, legendre(-1, p), p * p, ""


def _int21(p, s):
    n = _half(p)
    _need(0 <= s <= n, "needs 0 <= s <= (p-1)/2")
    _need(s % 2 == (p + 1) // 2 % 2, "needs s = (p+1)/2 mod 2")
    total = sum(Fraction(comb(2 * k, k) ** 2 * comb(2 * k, k + s), 64 ** k)
                for k in range(n + 1))
    return total, 0, p * p, ""


def _int24(p):
    _need(p % 4 == 1, "needs p = 1 mod 4")
    n = _half(p)
    total = Fraction(comb(n, n // 2) ** 2, 2 ** (p - 1))
    target, _ = _beukers_target(p, p * p, "x_one_mod_4")
    return total, target, p * p, ""


def _i(id, citation, fn, params=()):
    return IntDisplay(id, citation, tuple(params), fn)


INT_DISPLAYS: Dict[str, IntDisplay] = {d.id: d for d in [
    _i("int1.1", "Eq (1.1): 'Beukers [9] made the following conjecture'", _int11),
    _i("int1.2", "Eq (1.2): 'proved this congruence modulo p'", _int12),
    _i("int1.3", "Eq (1.3): 'company congruence of'", _int13),
    _i("int1.4", "Eq (1.4): 'discovered numerically some Beukers-like supercongruences'",
       _int14),
    _i("int1.5", "Eq (1.5)", _int15),
    _i("int1.6", "Eq (1.6)", _int16),
    _i("int1.7", "Eq (1.7), Theorem 1.1: 'a be a p-adic integer' (rational a only)",
       _int17, ["a"]),
    _i("int1.8", "Eq (1.8): 'four supercongruences conjectured by Rodriguez-Villegas'",
       _int18),
    _i("int1.9", "Eq (1.9)", _int19),
    _i("int1.10", "Eq (1.10)", _int110),
    _i("int1.11", "Eq (1.11)", _int111),
    _i("int1.12", "Eq (1.12): 'obtained the following generalization of (1.8)'",
       _int112, ["s"]),
    _i("int2.1", "Eq (2.1): 'Z.-W. Sun's generalization'", _int21, ["s"]),
    _i("int2.4", "Eq (2.4): '(see [29, Lemma 3.4])'", _int24),
]}

# the four rational parameters of the a-family that reproduce the m = 2, 3, 4, 6 sums
A_VALUES = ("-1/2", "-1/3", "-1/4", "-1/6")


def evaluate_int(check_id: str, p: int, params: Optional[dict] = None):
    """``(exact sum, residue of sum, target, modulus, branch)``."""
    d = INT_DISPLAYS[check_id]
    params = dict(params or {})
    total, target, modulus, branch = d.evaluate(p, **params)
    return total, mod_fraction(total, modulus), target % modulus, modulus, branch
