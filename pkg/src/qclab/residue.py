"""Arithmetic in Q[q]/([p]^r) and the elementary number theory around it.

``[p] = 1 + q + ... + q^(p-1)`` is the p-th cyclotomic polynomial, so it is
irreducible and a rational function is defined modulo ``[p]^r`` as soon as its
denominator is not divisible by ``[p]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, Iterable, Tuple

from .poly import (
    ONE,
    LPoly,
    NotUnivariate,
    VanishingDenominator,
    lp_divrem_q,
    qmono,
)
from .qkit.core import Term, qint


class ResidueError(ArithmeticError):
    pass


class NotPrime(ResidueError, ValueError):
    pass


class EvenPrimeUnsupported(ResidueError, ValueError):
    pass


class NotInvertible(ResidueError, ZeroDivisionError):
    pass


class DenominatorDivisibleByP(ResidueError, ZeroDivisionError):
    pass


class NoRepresentation(ResidueError, ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_odd_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenPrimeUnsupported("p = 2 is not supported")


@dataclass(frozen=True)
class Modulus:
    p: int
    r: int
    modpoly: LPoly = field(repr=False, compare=False)

    @property
    def degree(self) -> int:
        return self.r * (self.p - 1)

    def __str__(self) -> str:
        return f"[{self.p}]^{self.r}"


def make_ring(p: int, r: int = 1) -> Modulus:
    _require_odd_prime(p)
    if r < 1:
        raise ValueError("exponent r must be >= 1")
    return Modulus(p, r, qint(p) ** r)


def _mod_poly(f: LPoly, ring: Modulus) -> LPoly:
    if f.degree() < ring.degree:
        return f
    return lp_divrem_q(f, ring.modpoly)[1]


@dataclass(frozen=True)
class RElem:
    """A residue class modulo ``[p]^r`` held by its canonical representative."""

    ring: Modulus
    rep: LPoly

    def _other(self, other) -> LPoly:
        if isinstance(other, RElem):
            if other.ring != self.ring:
                raise ValueError("residues from different rings")
            return other.rep
        return reduce(other, self.ring).rep

    def __add__(self, other) -> "RElem":
        return RElem(self.ring, self.rep + self._other(other))

    __radd__ = __add__

    def __sub__(self, other) -> "RElem":
        return RElem(self.ring, self.rep - self._other(other))

    def __rsub__(self, other) -> "RElem":
        return RElem(self.ring, self._other(other) - self.rep)

    def __neg__(self) -> "RElem":
        return RElem(self.ring, -self.rep)

    def __mul__(self, other) -> "RElem":
        if isinstance(other, (int, Fraction)):
            return RElem(self.ring, self.rep.scale(other))
        return RElem(self.ring, _mod_poly(self.rep * self._other(other), self.ring))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RElem":
        if k < 0:
            return invert(self.rep, self.ring) ** (-k)
        out = RElem(self.ring, ONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def is_zero(self) -> bool:
        return not self.rep

    def __eq__(self, other) -> bool:
        if isinstance(other, RElem):
            return self.ring == other.ring and self.rep == other.rep
        try:
            return self.rep == reduce(LPoly.coerce(other), self.ring).rep
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.rep))

    def __str__(self) -> str:
        return str(self.rep)


def reduce(f: LPoly, ring: Modulus) -> RElem:
    """Canonical representative of ``f``; negative q-powers are folded via 1/q."""
    f = LPoly.coerce(f)
    if not f.is_univariate_q():
        raise NotUnivariate(f"cannot reduce a multivariate polynomial: {f}")
    lo = f.min_degree()
    if lo >= 0:
        return RElem(ring, _mod_poly(f, ring))
    pos = RElem(ring, _mod_poly(f * qmono(-lo), ring))
    return pos * qpow_mod(ring, lo)


def _ext_gcd(f: LPoly, g: LPoly) -> Tuple[LPoly, LPoly]:
    """Return ``(d, s)`` with ``d = gcd(f, g)`` monic and ``s*f = d (mod g)``."""
    r0, r1 = g, f
    s0, s1 = LPoly(), ONE
    while r1:
        quo, rem = lp_divrem_q(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        if r1:
            lc = r1.leading_coefficient()
            r1, s1 = r1 / lc, s1 / lc
    lc = r0.leading_coefficient()
    return r0 / lc, s0 / lc


def invert(f: LPoly, ring: Modulus) -> RElem:
    g = reduce(f, ring).rep
    if not g:
        raise NotInvertible(f"{f} is divisible by {ring}")
    d, s = _ext_gcd(g, ring.modpoly)
    if d.degree() != 0:
        raise NotInvertible(f"{f} shares the factor [{ring.p}] with the modulus")
    return RElem(ring, _mod_poly(s, ring))


def reduce_ratio(num: LPoly, den: LPoly, ring: Modulus) -> RElem:
    return reduce(num, ring) * invert(den, ring)


def qpow_mod(ring: Modulus, f: int) -> RElem:
    """Canonical representative of ``q^f`` for any integer ``f``."""
    if f >= 0:
        return RElem(ring, _mod_poly(qmono(f), ring))
    return invert(qmono(1), ring) ** (-f)


# ---------------------------------------------------------------------------
# factored reduction


class Reducer:
    """Reduces factored terms modulo ``[p]^r`` while tracking powers of ``[p]``.

    Factors like ``1 - q^(jp)`` are divisible by ``[p]``; in a quotient they
    may cancel against the denominator.  Each factor is split as
    ``[p]^v * unit`` and the units are reduced, so such cancellations are
    exact.  Results are memoised per instance; create one per ring.
    """

    def __init__(self, ring: Modulus):
        self.ring = ring
        self.base = qint(ring.p)
        self._qpow: Dict[int, LPoly] = {}
        self._factor: Dict[LPoly, Tuple[int, LPoly]] = {}
        self._qinv = invert(qmono(1), ring).rep

    def qpow(self, e: int) -> LPoly:
        hit = self._qpow.get(e)
        if hit is not None:
            return hit
        if 0 <= e < self.ring.degree:
            out = qmono(e)
        elif e >= 0:
            half = self.qpow(e // 2)
            out = _mod_poly(half * half * (qmono(1) if e % 2 else ONE), self.ring)
        else:
            half = self.qpow(-((-e) // 2))
            out = _mod_poly(half * half * (self._qinv if (-e) % 2 else ONE), self.ring)
        self._qpow[e] = out
        return out

    def residue(self, f: LPoly) -> LPoly:
        acc = LPoly()
        for e, c in f.q_coefficients().items():
            acc = acc + self.qpow(e).scale(c)
        return acc

    def split(self, f: LPoly) -> Tuple[int, LPoly]:
        """``(v, u)`` with ``f = [p]^v * U`` and ``u`` the residue of the unit ``U``."""
        hit = self._factor.get(f)
        if hit is not None:
            return hit
        if not f.is_univariate_q():
            raise NotUnivariate(f"not univariate in q: {f}")
        lo = f.min_degree()
        g = f * qmono(-lo) if lo else f
        v = 0
        while True:
            quo, rem = lp_divrem_q(g, self.base)
            if rem:
                break
            g = quo
            v += 1
        out = (v, _mod_poly(self.residue(g) if lo == 0 else self.residue(g * qmono(lo)), self.ring))
        self._factor[f] = out
        return out

    def term(self, t: Term) -> RElem:
        """Residue of a factored term.

        Raises :class:`NotInvertible` when more powers of ``[p]`` sit in the
        denominator than in the numerator.
        """
        ring = self.ring
        for f in t.den:
            if not f:
                raise VanishingDenominator(f"zero denominator factor in {t}")
        if t.is_zero():
            return RElem(ring, LPoly())
        v = 0
        num = self.qpow(t.qexp).scale(t.coef)
        for f in t.num:
            w, u = self.split(f)
            v += w
            num = _mod_poly(num * u, ring)
        den = ONE
        for f in t.den:
            w, u = self.split(f)
            v -= w
            den = _mod_poly(den * u, ring)
        if v < 0:
            raise NotInvertible(f"[{ring.p}]^{-v} left in the denominator of {t}")
        if v >= ring.r:
            return RElem(ring, LPoly())
        out = RElem(ring, num) * invert(den, ring)
        if v:
            out = out * RElem(ring, _mod_poly(self.base ** v, ring))
        return out

    def sum(self, terms: Iterable[Term]) -> RElem:
        acc = RElem(self.ring, LPoly())
        for t in terms:
            acc = acc + self.term(t)
        return acc


# ---------------------------------------------------------------------------
# integers


def legendre(a: int, p: int) -> int:
    _require_odd_prime(p)
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def frac_residue(u: int, v: int, p: int) -> int:
    """Least nonnegative residue of ``u/v`` modulo ``p``."""
    if v % p == 0:
        raise DenominatorDivisibleByP(f"{p} divides {v}")
    return u * pow(v, -1, p) % p


def two_square(p: int, convention: str = "x_odd") -> Tuple[int, int]:
    """``p = x^2 + y^2`` for a prime ``p = 1 (mod 4)``.

    ``x_odd`` returns ``x > 0`` odd; ``x_one_mod_4`` signs ``x`` so that
    ``x = 1 (mod 4)``.
    """
    if convention not in ("x_odd", "x_one_mod_4"):
        raise ValueError(f"unknown convention {convention!r}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p % 4 != 1:
        raise NoRepresentation(f"{p} is not 1 mod 4")
    for x in range(1, isqrt(p) + 1, 2):
        y2 = p - x * x
        y = isqrt(y2)
        if y * y == y2:
            if convention == "x_one_mod_4" and x % 4 == 3:
                x = -x
            return x, y
    raise NoRepresentation(f"no decomposition found for {p}")
