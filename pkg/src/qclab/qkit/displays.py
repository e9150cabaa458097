"""Exact left- and right-hand sides of every displayed identity and congruence.

Each builder takes the parameter mapping of a :class:`SumSpec` and returns a
:class:`~qclab.qkit.core.QSum` (or an :class:`~qclab.poly.RFunc` when a side
is a product of sums).  Side conditions are *not* checked here; the verifier's
case enumerators own them.

Conventions: ``n`` in the congruence builders is ``(p-1)/2``; ``N`` and ``N2``
are the least nonnegative residues of ``-r/m`` and ``-(m-r)/m`` modulo ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional

from ..poly import LPoly, RFunc, qmono
from .core import QSum, Term, binom, const, mono, poch, poch_q, qpow, sign

X = LPoly.var("x")
A = LPoly.var("a")
B = LPoly.var("b")
Q = qmono(1)


class UnknownCheckId(KeyError):
    pass


class InvalidParams(ValueError):
    pass


def c2(n: int) -> int:
    """``binomial(n, 2)``, valid for negative ``n`` too."""
    return n * (n - 1) // 2


def _nres(u: int, v: int, p: int) -> int:
    return u * pow(v, -1, p) % p


def _legendre(a: int, p: int) -> int:
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def qq(k: int) -> Term:
    """``(q; q)_k``."""
    return poch_q(1, 1, k)


def q2q2(k: int) -> Term:
    """``(q^2; q^2)_k``."""
    return poch_q(2, 2, k)


# ---------------------------------------------------------------------------
# identities


def _lemma41a(n):
    lhs = QSum(
        sign(n - k) * binom(n, k, expand=True) * poch(A * qmono(n), 1, k)
        * qpow(c2(n - k + 1)) / (poch(A, 1, k) * mono(1 - X * qmono(-k)))
        for k in range(n + 1))
    rhs = poch(A * X, 1, n) * qq(n) / (poch(A, 1, n) * poch(X * qmono(-n), 1, n + 1))
    return lhs, QSum([rhs])


def _lemma41b(m):
    lhs = QSum(
        sign(m - j) * binom(m, j, expand=True) * qpow(c2(j)) * qq(m - j)
        / poch(X, 1, m - j + 1)
        for j in range(m + 1))
    return lhs, QSum([qpow(c2(m + 1)) / mono(1 - X * qmono(m))])


def _eq43(m):
    lhs = qq(m) / poch(X, 1, m + 1)
    rhs = QSum(
        binom(m, k, expand=True) * sign(k) * qpow(c2(k + 1)) / mono(1 - X * qmono(k))
        for k in range(m + 1))
    return QSum([lhs]), rhs


def _lemma42_common(n):
    ax = A * X ** -1
    return poch(X, 1, n), poch(ax, 1, n), ax


def _lemma42a(n):
    px, pax, ax = _lemma42_common(n)
    rhs = QSum([px * pax])
    for k in range(n):
        inner = QSum(
            sign(j) * binom(k, j, expand=True) * qpow(c2(j))
            * poch(A * qmono(k + j), 1, n - k)
            for j in range(k + 1))
        outer = (poch(X, 1, k) * poch(ax, 1, k) * mono(1 - qmono(n))
                 / (qq(k) * mono(1 - qmono(n - k))))
        rhs = rhs + inner * outer
    return QSum([px, pax]), rhs


def _lemma42b(n):
    px, pax, ax = _lemma42_common(n)
    rhs = QSum([px * pax, poch(A, 1, n)])
    for k in range(1, n):
        inner = QSum(
            sign(j) * binom(n - k - 1, j - 1, expand=True)
            * binom(k + j - 1, j - 1, expand=True)
            * qpow(c2(j) + k * j) * mono(A ** j) / mono(1 - qmono(j))
            for j in range(1, n - k + 1))
        rhs = rhs + inner * (poch(X, 1, k) * poch(ax, 1, k) * mono(1 - qmono(n)))
    return QSum([px, pax]), rhs


def _lemma43(n, h, m, s):
    def part(j):
        return (poch_q(-n, 1, j) * poch(X, 1, j) * poch_q(j - m - h + 1, 1, h - 1)
                / (qq(j - s) * qq(j + s)))

    lhs = QSum(
        part(j) * part(k) * mono(1 - qmono(k - j)) * qpow(2 * j + k)
        for j in range(s, m + 1) for k in range(s, n + 1))
    e = Fraction(m * m + 3 * m - s * s + s, 2) - m * n - m * h - h * h + h
    rhs = (sign(m - s - 1) * qq(n) ** 2 * qq(h - 1) * poch(X, 1, s) * poch(X, 1, m + h)
           * poch(qmono(s + 1) * X ** -1, 1, n - s - h) * mono(X ** (n - s - h))
           * qpow(int(e))
           / (qq(m - s) * qq(m + s) * qq(n - s) * qq(n + s) * qq(n - m - h)))
    return lhs, QSum([rhs])


def _lemma44(n, h, m, s):
    # The sign of the closed form is (-1)^(n-m); with (-1)^(n-m-h) the two
    # sides differ by (-1)^h, already at n = h = 1, m = s = 0.
    lhs = QSum(
        poch_q(-2 * n, 2, j) * poch_q(-2 * n, 2, k) * mono(1 - qmono(k - j))
        * qpow(j + k + j * h)
        / (qq(j - s) * qq(j + s) * qq(k - s) * qq(k + s))
        * binom(k - m - 1, h - 1, expand=True) * binom(m + h - j - 1, h - 1, expand=True)
        for j in range(s, m + 1) for k in range(m + h, n + 1))
    rhs = (sign(n - m) * q2q2(n) ** 2 * poch_q(1, 1, 2 * n - h, c=-1)
           * qpow(m * m - n * n - 2 * m * n + m * h)
           / (qq(m - s) * qq(m + s) * q2q2(n - s) * q2q2(n + s) * qq(h - 1)
              * q2q2(n - m - h)))
    return lhs, QSum([rhs])


def _qbinom_thm(n):
    lhs = QSum(sign(k) * binom(n, k, expand=True) * qpow(c2(k + 1)) * mono(X ** k)
               for k in range(n + 1))
    return lhs, QSum([poch(X * Q, 1, n)])


def _eq414(n, i):
    lhs = QSum(sign(k) * binom(n, k, expand=True) * qpow(c2(k + 1) - i * k)
               for k in range(n + 1))
    if i == 0:
        return lhs, QSum([qq(n)])
    return lhs, QSum()


def _qchu419(n, s, m):
    lhs = QSum(
        poch_q(-2 * n, 2, j) * poch_q(-2 * n, 2, m) * qpow(j + m)
        / (qq(j - s) * qq(j + s) * qq(m - s) * qq(m + s))
        for j in range(s, n + 1))
    rhs = (sign(n - m) * q2q2(n) ** 2 * poch_q(1, 1, 2 * n, c=-1)
           * qpow(m * m - n * n - 2 * m * n)
           / (qq(m - s) * qq(m + s) * q2q2(n - s) * q2q2(n + s) * q2q2(n - m)))
    return lhs, QSum([rhs])


def _qchu421(n, m):
    lhs = QSum(
        sign(h) * poch_q(1, 1, 2 * n - h, c=-1) * qpow(c2(h + 1) + 2 * m * h)
        / (qq(h) * q2q2(n - m - h))
        for h in range(n - m + 1))
    rhs = q2q2(m + n) / (q2q2(n - m) * qq(2 * m))
    return lhs, QSum([rhs])


def _qdixon(a, b, c):
    lhs = QSum(
        sign(k) * qpow((3 * k * k + k) // 2) * binom(a + b, a + k, expand=True)
        * binom(b + c, b + k, expand=True) * binom(c + a, c + k, expand=True)
        for k in range(-a, a + 1))
    rhs = binom(a + b + c, a + b, expand=True) * binom(a + b, a, expand=True)
    return lhs, QSum([rhs])


def _andrews_watson(n, a=None, b=None):
    # a and b are symbolic unless given as integer exponents of q
    a = A if a is None else qmono(a)
    b = B if b is None else qmono(b)
    lhs = QSum(
        poch_q(-n, 1, k) * poch(a * a * qmono(n + 1), 1, k) * poch(b, 1, k)
        * poch(-b, 1, k) * qpow(k)
        / (qq(k) * poch(a * Q, 1, k) * poch(-a * Q, 1, k) * poch(b * b, 1, k))
        for k in range(n + 1))
    if n % 2:
        return lhs, QSum()
    h = n // 2
    rhs = (mono(b ** n) * poch_q(1, 2, h) * poch(a * a * qmono(2) * b ** -2, 2, h)
           / (poch(a * a * qmono(2), 2, h) * poch(b * b * Q, 2, h)))
    return lhs, QSum([rhs])


def _lemma32(n, s):
    lhs = QSum(
        binom(n + k, 2 * k) * binom(2 * k, k) * binom(2 * k, k + s) * sign(k)
        * qpow(c2(n - k)) / poch_q(1, 1, k, c=-1) ** 2
        for k in range(n + 1))
    if (n - s) % 2:
        return lhs, QSum()
    rhs = (sign(s) * qpow((n * n - s * s) // 2) * binom(n, (n - s) // 2, 2) ** 2
           * qq(n - s) * qq(n + s) / q2q2(n) ** 2)
    return lhs, QSum([rhs])


def _thm25(n, s):
    def one_side(y):
        return QSum(
            poch_q(-2 * n, 2, k) * poch(y, 1, k) * qpow(k) / (qq(k - s) * qq(k + s))
            for k in range(s, n + 1)).to_rfunc()

    lhs = one_side(X) * one_side(Q * X ** -1)
    pre = sign(n) * q2q2(n) ** 2 * qpow(-n * n) / (q2q2(n - s) * q2q2(n + s))
    inner = QSum(
        sign(k) * q2q2(n + k) * poch(X, 1, k) * poch(Q * X ** -1, 1, k)
        * qpow(k * k - 2 * n * k)
        / (q2q2(n - k) * qq(k - s) * qq(k + s) * qq(2 * k))
        for k in range(s, n + 1))
    return lhs, (inner * pre).to_rfunc()


def _conj72(n, r):
    xi = X ** -1
    first = QSum(
        poch_q(-n, 1, k) * poch(X, 2, k) * qpow(k) / (qq(k - r) * qq(k + r))
        for k in range(r, n + 1)).to_rfunc()
    second = QSum(
        poch_q(-n, 1, k) * poch(X, 2, k) * qpow((n + 1) * k - c2(k)) * mono(xi ** k)
        / (qq(k - r) * qq(k + r))
        for k in range(r, n + 1)).to_rfunc()
    pre = (sign(r) * qq(n) ** 2 * poch(X, 2, r) * qpow(r) * mono(xi ** r)
           / (qq(n - r) * qq(n + r) * poch(qmono(2) * xi, 2, r)))
    inner = QSum(
        poch_q(-n, 1, k) * poch_q(n + 1, 1, k) * poch(X, 2, k)
        * poch(qmono(2) * xi, 2, k) * qpow(k)
        / (qq(k - r) * qq(k + r) * qq(2 * k))
        for k in range(r, n + 1))
    return first * second, (inner * pre).to_rfunc()


def _lemma61a(n, m):
    lhs = QSum(sign(k) * binom(n, k, expand=True) * binom(m + k, n, expand=True)
               * qpow(c2(k) - n * k)
               for k in range(n + 1))
    return lhs, QSum([sign(n) * qpow(-c2(n + 1))])


def _lemma61b(n, s):
    lhs = QSum(
        sign(k) * binom(n + k, 2 * k, 2, expand=True)
        * binom(2 * k + 2 * s, k + s, 2, expand=True)
        * qpow(k * k - k - 2 * n * k) / poch_q(2 * k + 1, 1, 2 * s, c=-1)
        for k in range(n + 1))
    return lhs, QSum([sign(n) * qpow(-n * (n + 1))])


def _eq63(n, m):
    lhs = QSum(sign(k) * binom(n, k, expand=True) * binom(m + n - k, n, expand=True)
               * qpow(c2(k + 1))
               for k in range(n + 1))
    return lhs, QSum([const(1)])


def _eq64(n, s):
    lhs = QSum(
        sign(k) * binom(n, k, 2, expand=True) * binom(2 * n - k, n, 2, expand=True)
        * poch_q(2 * n - 2 * k + 1, 2, s) / poch_q(2 * n - 2 * k + 2, 2, s)
        * qpow(2 * c2(k + 1))
        for k in range(n + 1))
    return lhs, QSum([const(1)])


# ---------------------------------------------------------------------------
# q-congruences


def _half(p):
    return (p - 1) // 2


def _lemma31(p, k):
    n = _half(p)
    lhs = binom(n + k, 2 * k, 2)
    rhs = (sign(k) * binom(2 * k, k, 2) * qpow(k * p - k * k)
           / poch_q(1, 1, 2 * k, c=-1) ** 2)
    return QSum([lhs]), QSum([rhs])


def _beukers_summand(k, s, twist):
    # [2k,k]^2 [2k,k+s] in base q^2 over (-q^2;q^2)_k^2 (-q;q)_{2k}^2
    return (binom(2 * k, k, 2) ** 2 * binom(2 * k, k + s, 2) * qpow(twist)
            / (poch_q(2, 2, k, c=-1) ** 2 * poch_q(1, 1, 2 * k, c=-1) ** 2))


def _thm21(p, s):
    n = _half(p)
    lhs = QSum(_beukers_summand(k, s, 2 * k) for k in range(n + 1))
    if (s - n) % 2:
        return lhs, QSum()
    rhs = (sign(s) * qpow(n - s * s) * binom(n, (n - s) // 2, 4) ** 2
           * q2q2(n - s) * q2q2(n + s) / poch_q(4, 4, n) ** 2)
    return lhs, QSum([rhs])


def _cor22(p):
    n = _half(p)
    lhs = QSum(_beukers_summand(k, 0, 2 * k) for k in range(n + 1))
    if p % 4 != 1:
        return lhs, QSum()
    rhs = qpow(n) * binom(n, n // 2, 4) ** 2 / poch_q(2, 2, n, c=-1) ** 2
    return lhs, QSum([rhs])


def _remark22(p):
    n = _half(p)
    return QSum(_beukers_summand(k, 0, k - 2 * k * k) for k in range(n + 1)), QSum()


def _clausen_summand(k, m, r, s):
    return (poch_q(m, m, 2 * k) * poch_q(r, m, k) * poch_q(m - r, m, k) * qpow(m * k)
            / (poch_q(m, m, k - s) * poch_q(m, m, k + s) * poch_q(2 * m, 2 * m, k) ** 2))


def _thm23_25(p, m, r, s):
    return QSum(_clausen_summand(k, m, r, s) for k in range(s, _half(p) + 1)), QSum()


def _thm23_26(p, m, r, s):
    return QSum(_clausen_summand(k, m, r, s) for k in range(s, p)), QSum()


def _thm23_27(p, m, r, s):
    # Product of the two nonzero branches of the _lemma51 closed form (for r
    # and for m - r) times the factor linking the two sides, which reduces to
    # (-1)^(n+s) q^(m(n^2+s^2)) modulo [p].
    n = _half(p)
    N, N2 = _nres(-r, m, p), _nres(-(m - r), m, p)
    lhs = QSum(_clausen_summand(k, m, r, s) for k in range(s, n + 1))
    e = n * n + s * s + 2 * s + (2 * s + 1) * (N + N2 - 2 * s) // 2
    rhs = (sign(n + s) * qpow(m * e)
           * poch_q(m, 2 * m, (N - s) // 2) * poch_q(m, 2 * m, (N2 - s) // 2)
           * poch_q(-m * N, m, s) * poch_q(-m * N2, m, s)
           / (poch_q(2 * m, 2 * m, (N + s) // 2) * poch_q(2 * m, 2 * m, (N2 + s) // 2)))
    return lhs, QSum([rhs])


def _cor24(p, m, s):
    lhs = QSum(
        binom(2 * k, k + s, m) * poch_q(1, m, k) * poch_q(m - 1, m, k) * qpow(m * k)
        / poch_q(2 * m, 2 * m, k) ** 2
        for k in range(s, _half(p) + 1))
    return lhs, QSum()


def _lemma51(p, m, r, s):
    N = _nres(-r, m, p)
    lhs = QSum(
        poch_q(m, 2 * m, k) * poch_q(r, m, k) * qpow(m * k)
        / (poch_q(m, m, k - s) * poch_q(m, m, k + s))
        for k in range(s, _half(p) + 1))
    if (N - s) % 2:
        return lhs, QSum()
    # The terminating 3phi2 behind this sum evaluates to
    # q^(m t (2s+1)) (q^m; q^2m)_t / (q^(2m(s+1)); q^2m)_t with t = (N-s)/2,
    # which gives the exponent below.  It reduces to m (N+s)/2 only at s = 0.
    rhs = (qpow(m * (s + (2 * s + 1) * (N - s) // 2))
           * poch_q(m, 2 * m, (N - s) // 2) * poch_q(-m * N, m, s)
           / poch_q(2 * m, 2 * m, (N + s) // 2))
    return lhs, QSum([rhs])


def _eq65(p, m, r, k):
    N = _nres(-r, m, p)
    lhs = poch_q(r, m, k) / poch_q(m, m, k)
    rhs = sign(k) * binom(N, k, m) * qpow(m * k * (k - 1) // 2 - m * k * N)
    return QSum([lhs]), QSum([rhs])


def _eq66(p, m, r, k, s):
    N = _nres(-r, m, p)
    lhs = poch_q(m - r, m, k + s) / poch_q(m, m, k + s)
    return QSum([lhs]), QSum([binom(N + k + s, k + s, m)])


def _thm26(p, s):
    n = _half(p)
    lhs = QSum(
        poch_q(1, 2, k) * poch_q(1, 2, k + s) / (q2q2(k) * q2q2(k + s))
        for k in range(n + 1))
    rhs = const(_legendre(-1, p)) * qpow((1 - p * p) // 4)
    return lhs, QSum([rhs])


def gen_sum(p, m, r, s):
    """``sum_{k<p-s} (q^r;q^m)_k (q^{m-r};q^m)_{k+s} / ((q^m;q^m)_k (q^m;q^m)_{k+s})``."""
    return QSum(
        poch_q(r, m, k) * poch_q(m - r, m, k + s) / (poch_q(m, m, k) * poch_q(m, m, k + s))
        for k in range(p - s))


def _thm27_11(p, m, r, s):
    N = _nres(-r, m, p)
    return gen_sum(p, m, r, s), QSum([sign(N) * qpow(-m * N * (N + 1) // 2)])


def _exp_212(p, m, r) -> int:
    e = Fraction(r * (m - r) * (1 - p * p), 2 * m)
    if e.denominator != 1:
        raise InvalidParams(f"r(m-r)(1-p^2)/(2m) is not an integer for p={p}, m={m}, r={r}")
    return int(e)


def _thm27_12(p, m, r, s):
    N = _nres(-r, m, p)
    return gen_sum(p, m, r, s), QSum([sign(N) * qpow(_exp_212(p, m, r))])


# the discriminant attached to m in the m = 3, 4, 6 corollaries
_DISC = {3: -3, 4: -2, 6: -1}
# q-exponent of the m = 3, 4, 6 corollary closed forms, as (numerator, denominator)
# multiplying (1 - p^2).  For m = 3 this is 1/3, the value r(m-r)/(2m) gives and
# the s = 0 case confirms; 1/4 fails numerically.
_COR28_EXP = {3: (1, 3), 4: (3, 8), 6: (5, 12)}


def _cor28(p, m, r, s):
    a, b = _COR28_EXP[m]
    e = Fraction(a * (1 - p * p), b)
    rhs = const(_legendre(_DISC[m], p)) * qpow(int(e))
    return gen_sum(p, m, r, s), QSum([rhs])


def _conj73(p, m, r, s):
    return QSum(_clausen_summand(k, m, r, s) for k in range(s, p)), QSum()


def _conj74(p, m, s):
    lhs = QSum(
        binom(2 * k, k + s, m) * poch_q(1, m, k) * poch_q(m - 1, m, k) * qpow(m * k)
        / poch_q(2 * m, 2 * m, k) ** 2
        for k in range(s, p))
    return lhs, QSum()


def _conj76(p, m, r, s):
    return _thm27_12(p, m, r, s)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Display:
    id: str
    citation: str
    kind: str  # "identity" or "qcong"
    builder: Callable = field(repr=False)
    params: tuple = ()
    modexp: Optional[int] = None
    conjecture: bool = False


def _d(id, citation, kind, builder, params, modexp=None, conjecture=False):
    return Display(id, citation, kind, builder, tuple(params), modexp, conjecture)


DISPLAYS: Dict[str, Display] = {d.id: d for d in [
    _d("lemma4.1a", "Lemma 4.1, Eq (4.1): 'Let n be a nonnegative integer'", "identity",
       _lemma41a, ["n"]),
    _d("lemma4.1b", "Lemma 4.1, Eq (4.2)", "identity", _lemma41b, ["m"]),
    _d("eq4.3", "Eq (4.3), equivalent form of (4.2)", "identity", _eq43, ["m"]),
    _d("lemma4.2a", "Lemma 4.2, Eq (4.4): 'Let n be a positive integer'", "identity",
       _lemma42a, ["n"]),
    _d("lemma4.2b", "Lemma 4.2, Eq (4.5)", "identity", _lemma42b, ["n"]),
    _d("lemma4.3", "Lemma 4.3, Eq (4.9): 'Let n and h be positive integers'", "identity",
       _lemma43, ["n", "h", "m", "s"]),
    _d("lemma4.4", "Lemma 4.4, Eq (4.15)", "identity", _lemma44, ["n", "h", "m", "s"]),
    _d("qbinom-thm", "Eq (4.13): 'the finite q-binomial theorem'", "identity",
       _qbinom_thm, ["n"]),
    _d("eq4.14", "Eq (4.14): 'utilized the identity (4.14)'", "identity", _eq414, ["n", "i"]),
    _d("qchu-4.19", "Eq (4.19): 'by the q-Chu-Vandermonde summation formula'", "identity",
       _qchu419, ["n", "s", "m"]),
    _d("qchu-4.21", "Eq (4.21): 'by the q-Chu-Vandermonde summation formula'", "identity",
       _qchu421, ["n", "m"]),
    _d("qdixon", "Remark in section 4: 'terminating q-analogue of Dixon's identity'",
       "identity", _qdixon, ["a", "b", "c"]),
    _d("andrews-watson", "Eq (3.3): 'terminating q-analogue of Watson's formula'",
       "identity", _andrews_watson, ["n"]),
    _d("lemma3.2", "Lemma 3.2, Eq (3.2): 'For nonnegative integers n and s'", "identity",
       _lemma32, ["n", "s"]),
    _d("thm2.5", "Theorem 2.5, Eq (2.9): 'nonnegative integers with s <= n'", "identity",
       _thm25, ["n", "s"]),
    _d("conj7.2", "Conjecture 7.2: 'Let n and r be nonnegative integers'", "identity",
       _conj72, ["n", "r"], conjecture=True),
    _d("lemma6.1a", "Lemma 6.1, Eq (6.1): 'Let n and s be nonnegative integers'",
       "identity", _lemma61a, ["n", "m"]),
    _d("lemma6.1b", "Lemma 6.1, Eq (6.2)", "identity", _lemma61b, ["n", "s"]),
    _d("eq6.3", "Eq (6.3): 'are equivalent, respectively, to'", "identity", _eq63, ["n", "m"]),
    _d("eq6.4", "Eq (6.4): 'are equivalent, respectively, to'", "identity", _eq64, ["n", "s"]),

    _d("lemma3.1", "Lemma 3.1, Eq (3.1): 'odd prime and 0 <= k'", "qcong",
       _lemma31, ["p", "k"], 2),
    _d("lemma5.1", "Lemma 5.1, Eq (5.1): 'the following congruence holds modulo [p]'",
       "qcong", _lemma51, ["p", "m", "r", "s"], 1),
    _d("eq6.5", "Eq (6.5): 'Then a is a positive integer'", "qcong",
       _eq65, ["p", "m", "r", "k"], 1),
    _d("eq6.6", "Eq (6.6)", "qcong", _eq66, ["p", "m", "r", "k", "s"], 1),
    _d("thm2.1", "Theorem 2.1, Eq (2.2): 'congruence modulo [p]^2'", "qcong",
       _thm21, ["p", "s"], 2),
    _d("cor2.2", "Corollary 2.2, Eq (2.3): 'we have the following congruence'", "qcong",
       _cor22, ["p"], 2),
    _d("remark-cor2.2", "Remark after Corollary 2.2: 'by the antisymmetry of the'",
       "qcong", _remark22, ["p"], 1),
    _d("thm2.3-2.5", "Theorem 2.3, Eq (2.5): 'm, r two positive integers'", "qcong",
       _thm23_25, ["p", "m", "r", "s"], 2),
    _d("thm2.3-2.6", "Theorem 2.3, Eq (2.6)", "qcong", _thm23_26, ["p", "m", "r", "s"], 2),
    _d("thm2.3-2.7", "Theorem 2.3, Eq (2.7)", "qcong", _thm23_27, ["p", "m", "r", "s"], 1),
    _d("cor2.4", "Corollary 2.4: 'there hold the following congruences modulo'", "qcong",
       _cor24, ["p", "m", "s"], 2),
    _d("thm2.6", "Theorem 2.6, Eq (2.10): 'reduces to (1.13) when s = 0'", "qcong",
       _thm26, ["p", "s"], 2),
    _d("thm2.7-2.11", "Theorem 2.7, Eq (2.11): 'with p not dividing m and r < m'", "qcong",
       _thm27_11, ["p", "m", "r", "s"], 1),
    _d("thm2.7-2.12", "Theorem 2.7, Eq (2.12)", "qcong", _thm27_12, ["p", "m", "r", "s"], 1),
    _d("cor2.8", "Corollary 2.8, Eqs (2.13)-(2.15): 'the following congruences hold "
       "modulo [p]'", "qcong", _cor28, ["p", "m", "r", "s"], 1),
    _d("conj7.3", "Conjecture 7.3, Eq (7.1): 's <= p-1 be a nonnegative integer'", "qcong",
       _conj73, ["p", "m", "r", "s"], 2, conjecture=True),
    _d("conj7.4", "Conjecture 7.4: 'reduces to Z.-W. Sun's generalization'", "qcong",
       _conj74, ["p", "m", "s"], 2, conjecture=True),
    _d("conj7.5", "Conjecture 7.5: 'also hold modulo [p]^2'", "qcong",
       _cor28, ["p", "m", "r", "s"], 2, conjecture=True),
    _d("conj7.6", "Conjecture 7.6: 'Then for any integer s with'", "qcong",
       _conj76, ["p", "m", "r", "s"], 2, conjecture=True),
]}


@dataclass(frozen=True)
class SumSpec:
    check_id: str
    params: Mapping[str, int]


def get_display(check_id: str) -> Display:
    try:
        return DISPLAYS[check_id]
    except KeyError:
        raise UnknownCheckId(check_id) from None


def build_sides(spec: SumSpec):
    """Both sides of a display, in whatever exact form the builder produces."""
    d = get_display(spec.check_id)
    params = dict(spec.params)
    missing = [k for k in d.params if k not in params]
    if missing:
        raise InvalidParams(f"{spec.check_id} needs parameters {missing}")
    try:
        return d.builder(**params)
    except InvalidParams:
        raise
    except (TypeError, ValueError) as exc:
        raise InvalidParams(f"{spec.check_id}: {exc}") from None


def build_lhs(spec: SumSpec) -> RFunc:
    from .core import as_rfunc
    return as_rfunc(build_sides(spec)[0])


def build_rhs(spec: SumSpec) -> RFunc:
    from .core import as_rfunc
    return as_rfunc(build_sides(spec)[1])
