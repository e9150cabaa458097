"""Sparse multivariate Laurent polynomials and rational functions over Q.

Everything here is exact: coefficients are Python ints or reduced
``fractions.Fraction`` values, exponents are arbitrary (possibly negative)
integers.  Values are immutable once constructed.

Monomials are packed into a single integer key.  Each variable of the fixed
registry :data:`VARIABLES` owns a "digit" of a balanced base-``2**24``
expansion, so multiplying monomials is integer addition and a pure power of
``q`` is encoded by its exponent itself.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

VARIABLES = ("q", "x", "a", "b", "c", "z")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

_SHIFT = 24
_BASE = 1 << _SHIFT
_HALF = _BASE >> 1
_NVARS = len(VARIABLES)

Rat = Union[int, Fraction]


class PolyError(ArithmeticError):
    """Base class for errors raised by exact polynomial arithmetic."""


class NonInvertibleSubstitution(PolyError):
    pass


class EvalAtPole(PolyError, ZeroDivisionError):
    pass


class MissingAssignment(PolyError, KeyError):
    pass


class NotUnivariate(PolyError):
    pass


class NegativeExponent(PolyError):
    pass


class ZeroDivisor(PolyError, ZeroDivisionError):
    pass


class VanishingDenominator(ZeroDivisor):
    """A denominator factor is identically zero."""


def _norm(c):
    # Fractions with unit denominator are stored as plain ints so that the
    # common integer case stays on the fast path.
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _rat(c) -> Rat:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    raise TypeError(f"not an exact rational: {c!r}")


def encode(exponents: Mapping[str, int]) -> int:
    key = 0
    for name, e in exponents.items():
        if e == 0:
            continue
        try:
            i = _INDEX[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}; known: {VARIABLES}") from None
        if not -_HALF < e < _HALF:
            raise OverflowError(f"exponent {e} out of range")
        key += e << (_SHIFT * i)
    return key


def decode(key: int) -> Tuple[int, ...]:
    """Exponent vector (in registry order) of a packed monomial key."""
    out = []
    for _ in range(_NVARS):
        d = key & (_BASE - 1)
        if d >= _HALF:
            d -= _BASE
        out.append(d)
        key = (key - d) >> _SHIFT
    return tuple(out)


def _is_q_only(key: int) -> bool:
    return -_HALF < key < _HALF


def _monomial_str(key: int) -> str:
    parts = []
    for name, e in zip(VARIABLES, decode(key)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _order_key(key: int):
    # graded lexicographic: total degree first, then exponents in registry order
    exps = decode(key)
    return (sum(exps), exps)


class LPoly:
    """An immutable Laurent polynomial with rational coefficients.

    >>> q = LPoly.var("q")
    >>> (1 + q) * (1 - q)
    LPoly('1 - q^2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Rat] | None = None):
        if terms:
            self._terms = {k: _norm(c) for k, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, Rat]) -> "LPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LPoly":
        c = _rat(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "LPoly":
        return cls._raw({encode({name: exp}): 1})

    @classmethod
    def monomial(cls, coef=1, **exps: int) -> "LPoly":
        coef = _rat(coef)
        return cls._raw({encode(exps): coef} if coef else {})

    @classmethod
    def from_q_coeffs(cls, coeffs: Iterable, shift: int = 0) -> "LPoly":
        """Univariate polynomial in ``q`` from a dense coefficient list."""
        return cls({shift + i: c for i, c in enumerate(coeffs) if c})

    @classmethod
    def coerce(cls, value) -> "LPoly":
        if isinstance(value, LPoly):
            return value
        return cls.const(value)

    # -- inspection -------------------------------------------------------

    def items(self) -> Iterator[Tuple[Dict[str, int], Rat]]:
        """Terms as ``({variable: exponent}, coefficient)`` in canonical order."""
        for key in sorted(self._terms, key=_order_key):
            exps = {n: e for n, e in zip(VARIABLES, decode(key)) if e}
            yield exps, self._terms[key]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> frozenset:
        used = set()
        for key in self._terms:
            for name, e in zip(VARIABLES, decode(key)):
                if e:
                    used.add(name)
        return frozenset(used)

    def is_univariate_q(self) -> bool:
        return all(_is_q_only(k) for k in self._terms)

    def constant_term(self) -> Rat:
        return self._terms.get(0, 0)

    def q_coefficients(self) -> Dict[int, Rat]:
        """``{exponent: coefficient}`` of a polynomial in ``q`` alone."""
        if not self.is_univariate_q():
            raise NotUnivariate(f"not univariate in q: {self}")
        return dict(self._terms)

    def degree(self) -> int:
        """Degree in ``q`` of a univariate polynomial (``-1`` for zero)."""
        if not self._terms:
            return -1
        return max(self.q_coefficients())

    def min_degree(self) -> int:
        if not self._terms:
            return 0
        return min(self.q_coefficients())

    def leading_coefficient(self) -> Rat:
        return self._terms[self.degree()]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "LPoly":
        if not isinstance(other, LPoly):
            try:
                other = LPoly.const(other)
            except TypeError:
                return NotImplemented
        if len(self._terms) < len(other._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                del out[k]
        return LPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LPoly":
        return LPoly._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self) -> "LPoly":
        return self

    def __sub__(self, other) -> "LPoly":
        if not isinstance(other, LPoly):
            try:
                other = LPoly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LPoly":
        return (-self) + other

    def scale(self, c) -> "LPoly":
        c = _rat(c)
        if not c:
            return LPoly()
        if c == 1:
            return self
        return LPoly._raw({k: _norm(v * c) for k, v in self._terms.items()})

    def shift(self, key: int, c=1) -> "LPoly":
        """Multiply by the monomial ``c * m`` where ``m`` has packed key ``key``."""
        c = _rat(c)
        if not c:
            return LPoly()
        if c == 1:
            return LPoly._raw({k + key: v for k, v in self._terms.items()})
        return LPoly._raw({k + key: _norm(v * c) for k, v in self._terms.items()})

    def __mul__(self, other) -> "LPoly":
        if not isinstance(other, LPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LPoly()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            return self.shift(kb, cb) if a is self._terms else other.shift(kb, cb)
        out: Dict[int, Rat] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LPoly._raw({k: _norm(v) for k, v in out.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LPoly":
        if isinstance(other, LPoly):
            if not other.is_monomial():
                return NotImplemented
            return self * other ** -1
        try:
            c = _rat(other)
        except TypeError:
            return NotImplemented
        if not c:
            raise ZeroDivisor("division by zero")
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k: int) -> "LPoly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ZeroDivisor("negative power of a non-monomial")
            (key, c), = self._terms.items()
            return LPoly._raw({-key * (-k): _norm(Fraction(1) / Fraction(c) ** (-k))})
        result = LPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse_monomial(self) -> "LPoly":
        return self ** -1

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LPoly):
            return self._terms == other._terms
        try:
            other = _rat(other)
        except TypeError:
            return NotImplemented
        if not other:
            return not self._terms
        return self._terms == {0: other}

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for key in sorted(self._terms, key=_order_key):
            c = self._terms[key]
            mono = _monomial_str(key)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"LPoly({str(self)!r})"

    # -- structural maps --------------------------------------------------

    def substitute(self, var: str, value) -> "LPoly":
        return lp_substitute(self, var, value)

    def evaluate(self, assignment: Mapping[str, Rat]) -> Rat:
        return lp_eval(self, assignment)


q = LPoly.var("q")
ONE = LPoly.const(1)
ZERO = LPoly()


def qmono(e: int, c=1) -> LPoly:
    """The monomial ``c * q**e``."""
    c = _rat(c)
    return LPoly._raw({e: c} if c else {})


def lp_arith(a: LPoly, b: LPoly, op: str) -> LPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def lp_pow(a: LPoly, k: int) -> LPoly:
    """``a**k`` for ``k >= 0``; ``0**0`` is 1 by convention."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return a ** k


def lp_substitute(a: LPoly, var: str, value) -> LPoly:
    value = LPoly.coerce(value)
    i = _INDEX[var]
    powers: Dict[int, LPoly] = {}
    acc: Dict[int, Rat] = {}
    for key, c in a._terms.items():
        e = decode(key)[i]
        if e == 0:
            acc[key] = acc.get(key, 0) + c
            continue
        if e < 0 and not value.is_monomial():
            raise NonInvertibleSubstitution(
                f"{var} occurs with exponent {e} but {value} is not a monomial")
        rest = key - (e << (_SHIFT * i))
        if e not in powers:
            powers[e] = value ** e
        for k, v in powers[e]._terms.items():
            acc[k + rest] = acc.get(k + rest, 0) + v * c
    return LPoly(acc)


def lp_eval(a: LPoly, assignment: Mapping[str, Rat]) -> Rat:
    values = []
    for name in VARIABLES:
        v = assignment.get(name)
        values.append(None if v is None else Fraction(v))
    total = Fraction(0)
    for key, c in a._terms.items():
        term = Fraction(c)
        for name, e, v in zip(VARIABLES, decode(key), values):
            if not e:
                continue
            if v is None:
                raise MissingAssignment(name)
            if e < 0 and v == 0:
                raise EvalAtPole(f"{name}=0 in a term with exponent {e}")
            term *= v ** e
        total += term
    return _norm(total)


def _dense(a: LPoly, what: str) -> list:
    if not a.is_univariate_q():
        raise NotUnivariate(f"{what} is not univariate in q: {a}")
    if not a:
        return []
    terms = a._terms
    if min(terms) < 0:
        raise NegativeExponent(f"{what} has negative q-exponents: {a}")
    out = [0] * (max(terms) + 1)
    for k, c in terms.items():
        out[k] = c
    return out


def _divide(c, d):
    if d == 1:
        return c
    if d == -1:
        return -c
    return _norm(Fraction(c) / d)


def lp_divrem_q(a: LPoly, m: LPoly) -> Tuple[LPoly, LPoly]:
    """Euclidean division in Q[q]: ``a = quotient*m + remainder``."""
    num = _dense(a, "dividend")
    den = _dense(m, "divisor")
    if not den:
        raise ZeroDivisor("division by the zero polynomial")
    dm = len(den) - 1
    lc = den[-1]
    if len(num) <= dm:
        return LPoly(), a
    quot = [0] * (len(num) - dm)
    tail = [(j, c) for j, c in enumerate(den[:-1]) if c]
    for i in range(len(num) - 1, dm - 1, -1):
        c = num[i]
        if not c:
            continue
        t = _divide(c, lc)
        quot[i - dm] = t
        num[i] = 0
        base = i - dm
        for j, cj in tail:
            num[base + j] = _norm(num[base + j] - t * cj)
    return LPoly.from_q_coeffs(quot), LPoly.from_q_coeffs(num[:dm])


def exact_div_q(a: LPoly, m: LPoly) -> LPoly:
    """Quotient of an exact division in Q[q]; raises if there is a remainder."""
    quo, rem = lp_divrem_q(a, m)
    if rem:
        raise ArithmeticError(f"{m} does not divide {a}")
    return quo


# ---------------------------------------------------------------------------
# rational functions


def split_unit(f: LPoly) -> Tuple[Rat, int, LPoly]:
    """Write ``f = c * m * g`` with ``c*m`` a monomial and ``g`` normalized.

    ``g`` has a term with monomial 1 and coefficient 1 (its smallest key), so
    two factors that differ by a Laurent unit normalize to the same ``g``.
    """
    if not f:
        raise ZeroDivisor("zero factor")
    key = min(f._terms)
    c = f._terms[key]
    if c == 1 and key == 0:
        return 1, 0, f
    inv = Fraction(1) / Fraction(c)
    return c, key, LPoly._raw({k - key: _norm(v * inv) for k, v in f._terms.items()})


def _product(factors: Iterable[LPoly]) -> LPoly:
    # multiply the short factors first so intermediate sizes stay small
    out = ONE
    for f in sorted(factors, key=len):
        out = out * f
    return out


def _counter_items(den: Mapping[LPoly, int]):
    return tuple(sorted(den.items(), key=lambda kv: str(kv[0])))


class RFunc:
    """A quotient ``num / den`` of Laurent polynomials.

    The denominator is kept as a multiset of unit-normalized factors; no gcd
    cancellation is ever attempted.  Sums use the least common multiple of the
    factor multisets, which only relies on structural equality of factors.
    """

    __slots__ = ("num", "_den")

    def __init__(self, num, den=None):
        num = LPoly.coerce(num)
        factors: Dict[LPoly, int] = {}
        if den is not None:
            if isinstance(den, (LPoly, int, Fraction)):
                den = [LPoly.coerce(den)]
            for f in den:
                f = LPoly.coerce(f)
                c, key, g = split_unit(f)
                if c != 1 or key:
                    num = num.shift(-key, Fraction(1) / Fraction(c))
                if len(g) == 1:
                    continue
                factors[g] = factors.get(g, 0) + 1
        self.num = num
        self._den = factors

    @classmethod
    def _make(cls, num: LPoly, den: Dict[LPoly, int]) -> "RFunc":
        obj = cls.__new__(cls)
        obj.num = num
        obj._den = den
        return obj

    @property
    def den(self) -> LPoly:
        return _product(f for f, m in self._den.items() for _ in range(m))

    @property
    def den_factors(self) -> Tuple[Tuple[LPoly, int], ...]:
        return _counter_items(self._den)

    def is_zero(self) -> bool:
        return not self.num

    @staticmethod
    def sum(terms: Iterable["RFunc"]) -> "RFunc":
        terms = [t for t in terms if t.num]
        if not terms:
            return RFunc(0)
        lcm: Dict[LPoly, int] = {}
        for t in terms:
            for f, m in t._den.items():
                if m > lcm.get(f, 0):
                    lcm[f] = m
        total = LPoly()
        for t in terms:
            extra = [f for f, m in lcm.items() for _ in range(m - t._den.get(f, 0))]
            total = total + t.num * _product(extra) if extra else total + t.num
        return RFunc._make(total, lcm)

    def __add__(self, other) -> "RFunc":
        if not isinstance(other, RFunc):
            other = RFunc(other)
        return RFunc.sum([self, other])

    __radd__ = __add__

    def __neg__(self) -> "RFunc":
        return RFunc._make(-self.num, dict(self._den))

    def __sub__(self, other) -> "RFunc":
        if not isinstance(other, RFunc):
            other = RFunc(other)
        return self + (-other)

    def __rsub__(self, other) -> "RFunc":
        return (-self) + other

    def __mul__(self, other) -> "RFunc":
        if not isinstance(other, RFunc):
            other = RFunc(other)
        den = dict(self._den)
        for f, m in other._den.items():
            den[f] = den.get(f, 0) + m
        return RFunc._make(self.num * other.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RFunc":
        if isinstance(other, RFunc):
            return self * _reciprocal(other)
        return self * RFunc(1, [LPoly.coerce(other)])

    def __pow__(self, k: int) -> "RFunc":
        if k < 0:
            return _reciprocal(self) ** (-k)
        out = RFunc(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RFunc):
            try:
                other = RFunc(other)
            except TypeError:
                return NotImplemented
        return rf_equal(self, other)

    __hash__ = None

    def evaluate(self, assignment: Mapping[str, Rat]) -> Rat:
        d = lp_eval(self.den, assignment)
        if d == 0:
            raise EvalAtPole("denominator vanishes")
        return _norm(Fraction(lp_eval(self.num, assignment)) / d)

    def substitute(self, var: str, value) -> "RFunc":
        den = [lp_substitute(f, var, value) for f, m in self._den.items() for _ in range(m)]
        return RFunc(lp_substitute(self.num, var, value), den)

    def __str__(self) -> str:
        if not self._den:
            return str(self.num)
        den = "*".join(f"({f})" if m == 1 else f"({f})^{m}" for f, m in self.den_factors)
        return f"({self.num}) / {den}"

    def __repr__(self) -> str:
        return f"RFunc({str(self)!r})"


def _reciprocal(r: RFunc) -> RFunc:
    if not r.num:
        raise ZeroDivisor("reciprocal of zero")
    num = _product(f for f, m in r._den.items() for _ in range(m))
    return RFunc(num, [r.num])


def rf_difference_numerator(r1: RFunc, r2: RFunc) -> LPoly:
    """Numerator of ``r1 - r2`` over the least common denominator."""
    lcm: Dict[LPoly, int] = {}
    for r in (r1, r2):
        for f, m in r._den.items():
            if m > lcm.get(f, 0):
                lcm[f] = m

    def lifted(r):
        extra = [f for f, m in lcm.items() for _ in range(m - r._den.get(f, 0))]
        return r.num * _product(extra) if extra else r.num

    return lifted(r1) - lifted(r2)


def rf_equal(r1: RFunc, r2: RFunc) -> bool:
    """Exact equality of rational functions by cross-multiplication.

    Both numerators are lifted to the common multiple of the two factored
    denominators, which is cross-multiplication with the shared factors
    cancelled first.
    """
    return not rf_difference_numerator(r1, r2)
