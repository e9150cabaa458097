"""q-integers, q-shifted factorials, q-binomials and factored summands."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from ..poly import (
    ONE,
    LPoly,
    RFunc,
    VanishingDenominator,
    exact_div_q,
    lp_divrem_q,
    lp_eval,
    qmono,
)


class InternalNonExactDivision(ArithmeticError):
    """A q-binomial quotient left a remainder; this is a bug, not bad input."""


def qint(n: int) -> LPoly:
    """``[n] = 1 + q + ... + q^(n-1)``."""
    if n < 1:
        raise ValueError("qint needs n >= 1")
    return LPoly.from_q_coeffs([1] * n)


def qpoch_factors(a, step: int, n: int) -> List[LPoly]:
    """The factors ``1 - a*q^(j*step)`` of ``(a; q^step)_n``."""
    if n < 0:
        raise ValueError("qpoch needs n >= 0")
    if step < 1:
        raise ValueError("base step must be >= 1")
    a = LPoly.coerce(a)
    return [ONE - a * qmono(j * step) for j in range(n)]


def qpoch(a, step: int, n: int) -> LPoly:
    """``(a; q^step)_n``; the empty product is 1."""
    out = ONE
    for f in qpoch_factors(a, step, n):
        out = out * f
    return out


def qbinom(n: int, k: int, step: int = 1) -> LPoly:
    """Gaussian binomial ``[n, k]`` in base ``q^step``; zero outside ``0 <= k <= n``."""
    if not 0 <= k <= n:
        return LPoly()
    k = min(k, n - k)
    out = ONE
    for j in range(1, k + 1):
        out = out * (ONE - qmono(step * (n - k + j)))
    for j in range(1, k + 1):
        quo, rem = lp_divrem_q(out, ONE - qmono(step * j))
        if rem:
            raise InternalNonExactDivision(f"[{n},{k}] in base q^{step}")
        out = quo
    return out


@dataclass(frozen=True)
class Term:
    """``coef * q^qexp * prod(num) / prod(den)`` kept in factored form.

    Keeping the factors separate lets the residue code compute the
    ``[p]``-adic valuation factor by factor, and lets the ``q -> 1`` limit be
    taken one factor at a time.
    """

    coef: Fraction = Fraction(1)
    qexp: int = 0
    num: Tuple[LPoly, ...] = ()
    den: Tuple[LPoly, ...] = ()

    def __mul__(self, other) -> "Term":
        if not isinstance(other, Term):
            return Term(self.coef * Fraction(other), self.qexp, self.num, self.den)
        return Term(self.coef * other.coef, self.qexp + other.qexp,
                    self.num + other.num, self.den + other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Term":
        if not isinstance(other, Term):
            return Term(self.coef / Fraction(other), self.qexp, self.num, self.den)
        if not other.coef:
            raise ZeroDivisionError("division by a zero term")
        return self * Term(1 / other.coef, -other.qexp, other.den, other.num)

    def __neg__(self) -> "Term":
        return Term(-self.coef, self.qexp, self.num, self.den)

    def __pow__(self, k: int) -> "Term":
        if k < 0:
            return (Term() / self) ** (-k)
        return Term(self.coef ** k, self.qexp * k, self.num * k, self.den * k)

    def is_zero(self) -> bool:
        return not self.coef or any(not f for f in self.num)

    def numerator(self) -> LPoly:
        out = qmono(self.qexp, self.coef)
        for f in sorted(self.num, key=len):
            out = out * f
        return out

    def to_rfunc(self) -> RFunc:
        for f in self.den:
            if not f:
                raise VanishingDenominator(f"zero denominator factor in {self}")
        if self.is_zero():
            return RFunc(0)
        return RFunc(self.numerator(), list(self.den))

    def substitute(self, var: str, value) -> "Term":
        return Term(self.coef, 0,
                    (qmono(self.qexp).substitute(var, value),)
                    + tuple(f.substitute(var, value) for f in self.num),
                    tuple(f.substitute(var, value) for f in self.den))

    def __str__(self) -> str:
        num = "*".join(f"({f})" for f in self.num) or "1"
        den = "*".join(f"({f})" for f in self.den)
        head = f"{self.coef}*q^{self.qexp}*{num}"
        return f"{head}/({den})" if den else head


def const(c) -> Term:
    return Term(Fraction(c))


def qpow(e: int) -> Term:
    return Term(qexp=e)


def sign(k: int) -> Term:
    return Term(Fraction(-1 if k % 2 else 1))


def mono(p: LPoly) -> Term:
    """A single (Laurent) polynomial factor."""
    return Term(num=(p,))


def poch(a, step: int, n: int) -> Term:
    """``(a; q^step)_n`` as a factored term; ``a`` may be an int power of q."""
    return Term(num=tuple(qpoch_factors(_param(a), step, n)))


def poch_q(e: int, step: int, n: int, c: int = 1) -> Term:
    """``(c*q^e; q^step)_n``."""
    return poch(qmono(e, c), step, n)


def binom(n: int, k: int, step: int = 1, expand: bool = False) -> Term:
    """Gaussian binomial as a term; the zero term outside ``0 <= k <= n``."""
    if not 0 <= k <= n:
        return Term(Fraction(0))
    if expand:
        return Term(num=(qbinom(n, k, step),))
    k = min(k, n - k)
    num = tuple(ONE - qmono(step * (n - k + j)) for j in range(1, k + 1))
    den = tuple(ONE - qmono(step * j) for j in range(1, k + 1))
    return Term(num=num, den=den)


def _param(a) -> LPoly:
    if isinstance(a, LPoly):
        return a
    return LPoly.coerce(a)


class QSum:
    """A finite sum of factored terms."""

    def __init__(self, terms: Iterable[Term] = ()):
        self.terms: Tuple[Term, ...] = tuple(t for t in terms if not t.is_zero())

    def __add__(self, other) -> "QSum":
        if isinstance(other, Term):
            other = QSum([other])
        return QSum(self.terms + other.terms)

    def __neg__(self) -> "QSum":
        return QSum(-t for t in self.terms)

    def __sub__(self, other) -> "QSum":
        if isinstance(other, Term):
            other = QSum([other])
        return self + (-other)

    def __mul__(self, other) -> "QSum":
        if isinstance(other, Term):
            return QSum(t * other for t in self.terms)
        if isinstance(other, QSum):
            return QSum(s * t for s in self.terms for t in other.terms)
        return QSum(t * other for t in self.terms)

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def to_rfunc(self) -> RFunc:
        return RFunc.sum(t.to_rfunc() for t in self.terms)


def as_rfunc(value) -> RFunc:
    if isinstance(value, RFunc):
        return value
    if isinstance(value, (QSum, Term)):
        return value.to_rfunc()
    return RFunc(value)


def phi_sum(upper: Sequence, lower: Sequence, step: int, z, terms: int) -> RFunc:
    """Truncated basic hypergeometric series with ``terms`` summands.

    ``sum_{n<terms} (a_1..a_{r+1}; q^d)_n z^n / (q^d, b_1..b_r; q^d)_n``.  A
    zero parameter contributes the factor ``(0; q^d)_n = 1``.
    """
    upper = [_param(a) for a in upper]
    lower = [qmono(step)] + [_param(b) for b in lower]
    z = _param(z)
    out = []
    for n in range(terms):
        num = [f for a in upper for f in qpoch_factors(a, step, n)]
        den = [f for b in lower for f in qpoch_factors(b, step, n)]
        for f in den:
            if not f:
                raise VanishingDenominator(f"lower parameter vanishes at n={n}")
        out.append(Term(num=tuple(num) + (z ** n,), den=tuple(den)))
    return QSum(out).to_rfunc()


# ---------------------------------------------------------------------------
# q -> 1 limits


_ONE_MINUS_Q = ONE - qmono(1)


def _split_at_one(f: LPoly) -> Tuple[int, Fraction]:
    """``(v, g(1))`` with ``f = (1-q)^v * g`` and ``g(1) != 0``."""
    if not f:
        raise ValueError("zero factor has no limit expansion")
    lo = f.min_degree()
    g = f * qmono(-lo) if lo else f
    v = 0
    while lp_eval(g, {"q": 1}) == 0:
        g = exact_div_q(g, _ONE_MINUS_Q)
        v += 1
    return v, Fraction(lp_eval(g, {"q": 1}))


def limit_q_to_one(term: Term) -> Fraction:
    """Limit of a univariate term as ``q -> 1``; raises if it has a pole there."""
    if term.is_zero():
        return Fraction(0)
    order = 0
    value = Fraction(term.coef)
    for f in term.num:
        v, c = _split_at_one(f)
        order += v
        value *= c
    for f in term.den:
        v, c = _split_at_one(f)
        order -= v
        value /= c
    if order < 0:
        raise ZeroDivisionError("term has a pole at q = 1")
    return Fraction(0) if order > 0 else value
