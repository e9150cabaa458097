"""Side conditions of every check and the parameter grids built from them.

``precondition`` decides whether a parameter tuple satisfies a statement's
hypotheses and, for statements with a case split, which branch of the
conclusion applies.  ``enumerate_cases`` walks a raw grid and keeps the
admissible tuples; with ``include_excluded`` the rejected tuples come back
too so that reports can show the case split.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional

from ..qkit.displays import DISPLAYS
from ..residue import is_prime, legendre
from .intcong import A_VALUES, INT_DISPLAYS, mod_fraction, parse_fraction
from .results import PreconditionViolated, UnknownCheckId

IDENTITY_IDS = [d.id for d in DISPLAYS.values() if d.kind == "identity"]
QCONG_IDS = [d.id for d in DISPLAYS.values() if d.kind == "qcong"]
INT_IDS = list(INT_DISPLAYS)
ALL_IDS = IDENTITY_IDS + QCONG_IDS + INT_IDS
CONJECTURE_IDS = [d.id for d in DISPLAYS.values() if d.conjecture]

# ids that name a whole statement rather than one display
ALIASES = {
    "thm2.3": ["thm2.3-2.5", "thm2.3-2.6", "thm2.3-2.7"],
    "thm2.7": ["thm2.7-2.11", "thm2.7-2.12"],
    "lemma4.1": ["lemma4.1a", "lemma4.1b"],
    "lemma4.2": ["lemma4.2a", "lemma4.2b"],
    "lemma6.1": ["lemma6.1a", "lemma6.1b"],
}

DEFAULT_PRIMES = (3, 5, 7, 11, 13)
DEFAULT_INT_PRIME_MAX = 200
DEFAULT_M_MAX = 8

# largest n per identity in the default grid; the rest use DEFAULT_N_MAX
DEFAULT_N_MAX = 6
IDENTITY_N_MAX = {"thm2.5": 8, "lemma4.3": 5, "lemma4.4": 5, "qdixon": 3}

_DISC = {3: -3, 4: -2, 6: -1}


def expand_ids(ids) -> List[str]:
    out: List[str] = []
    for i in ids:
        if i in ALIASES:
            out.extend(ALIASES[i])
        elif i in ALL_IDS:
            out.append(i)
        else:
            raise UnknownCheckId(i)
    return out


def kind_of(check_id: str) -> str:
    if check_id in INT_DISPLAYS:
        return "int"
    if check_id in DISPLAYS:
        return DISPLAYS[check_id].kind
    raise UnknownCheckId(check_id)


def nres(u: int, v: int, p: int) -> int:
    """Least nonnegative residue of ``u/v`` modulo ``p``."""
    return u * pow(v, -1, p) % p


@dataclass
class Case:
    id: str
    params: Dict[str, object]
    branch: Optional[str] = None
    excluded: Optional[str] = None  # reason when the tuple fails the hypotheses


def _need(cond: bool, why: str) -> None:
    if not cond:
        raise PreconditionViolated(why)


def _odd_prime(p) -> None:
    _need(isinstance(p, int) and is_prime(p) and p != 2, f"p = {p} is not an odd prime")


def _nonneg(**kw) -> None:
    for k, v in kw.items():
        _need(isinstance(v, int) and v >= 0, f"{k} must be a nonnegative integer")


# ---------------------------------------------------------------------------
# preconditions


def _pre_identity(cid: str, q: Mapping) -> str:
    g = q.get
    if cid in ("lemma4.1a", "qbinom-thm"):
        _nonneg(n=g("n"))
    elif cid in ("lemma4.1b", "eq4.3"):
        _nonneg(m=g("m"))
    elif cid in ("lemma4.2a", "lemma4.2b"):
        _need(isinstance(g("n"), int) and g("n") >= 1, "n must be positive")
    elif cid in ("lemma4.3", "lemma4.4"):
        n, h, m, s = g("n"), g("h"), g("m"), g("s")
        _nonneg(m=m, s=s)
        _need(n >= 1 and h >= 1, "n and h must be positive")
        _need(h <= n - m, "needs h <= n - m")
        _need(s <= m, "needs s <= m")
    elif cid == "eq4.14":
        n, i = g("n"), g("i")
        _nonneg(n=n, i=i)
        _need(i <= n, "needs i <= n")
        return "i=0" if i == 0 else "1<=i<=n"
    elif cid == "qchu-4.19":
        n, s, m = g("n"), g("s"), g("m")
        _nonneg(n=n, s=s, m=m)
        _need(s <= m <= n, "needs s <= m <= n")
    elif cid == "qchu-4.21":
        _nonneg(n=g("n"), m=g("m"))
        _need(g("m") <= g("n"), "needs m <= n")
    elif cid == "qdixon":
        _nonneg(a=g("a"), b=g("b"), c=g("c"))
    elif cid == "andrews-watson":
        _nonneg(n=g("n"))
        for k in ("a", "b"):
            if g(k) is not None:
                _need(isinstance(g(k), int), f"{k} must be an integer exponent of q")
        return "odd" if g("n") % 2 else "even"
    elif cid == "lemma3.2":
        n, s = g("n"), g("s")
        _nonneg(n=n, s=s)
        _need(s <= n, "needs s <= n")
        return "n=s mod 2" if (n - s) % 2 == 0 else "n=s+1 mod 2"
    elif cid in ("thm2.5", "lemma6.1b", "eq6.4"):
        n, s = g("n"), g("s")
        _nonneg(n=n, s=s)
        _need(s <= n, "needs s <= n")
    elif cid == "conj7.2":
        n, r = g("n"), g("r")
        _nonneg(n=n, r=r)
        _need(r <= n, "needs r <= n")
    elif cid in ("lemma6.1a", "eq6.3"):
        _nonneg(n=g("n"), m=g("m"))
    return ""


def _mr(q: Mapping, p: int):
    m, r = q.get("m"), q.get("r")
    _need(isinstance(m, int) and m >= 1, "m must be a positive integer")
    _need(isinstance(r, int) and r >= 1, "r must be a positive integer")
    _need(m % p != 0, f"p = {p} divides m = {m}")
    return m, r, nres(-r, m, p), nres(-(m - r), m, p)


def _pre_qcong(cid: str, q: Mapping) -> str:
    p = q.get("p")
    _odd_prime(p)
    n = (p - 1) // 2
    s = q.get("s")
    if cid == "lemma3.1":
        k = q.get("k")
        _nonneg(k=k)
        _need(k <= n, "needs k <= (p-1)/2")
        return ""
    if cid == "thm2.1":
        _nonneg(s=s)
        _need(s <= n, "needs s <= (p-1)/2")
        return "closed form" if (s - n) % 2 == 0 else "zero"
    if cid == "cor2.2":
        return "p=1 mod 4" if p % 4 == 1 else "p=3 mod 4"
    if cid == "remark-cor2.2":
        _need(p % 4 == 3, "needs p = 3 mod 4")
        return ""
    if cid == "thm2.6":
        _nonneg(s=s)
        _need(s <= n, "needs s <= (p-1)/2")
        return ""
    if cid in ("cor2.4", "conj7.4"):
        m = q.get("m")
        _need(p >= 5, "needs p >= 5")
        _need(m in _DISC, "m must be 3, 4 or 6")
        _nonneg(s=s)
        if cid == "cor2.4":
            _need(s <= (p - 1) // m, f"needs s <= (p-1)/{m}")
        else:
            _need(s <= p - 1, "needs s <= p-1")
        want = (1 + legendre(_DISC[m], p)) // 2 % 2
        _need(s % 2 == want, f"needs s = {want} mod 2")
        return ""
    if cid in ("cor2.8", "conj7.5"):
        m, r = q.get("m"), q.get("r")
        _need(p > 3, "needs p > 3")
        _need(m in _DISC, "m must be 3, 4 or 6")
        _need(r in (1, m - 1), f"r must be 1 or {m - 1}")
        _nonneg(s=s)
        _need(s <= nres(r - m, m, p), "needs s <= <(r-m)/m>_p")
        return ""
    if cid == "eq6.5":
        m, r, N, N2 = _mr(q, p)
        k = q.get("k")
        _nonneg(k=k)
        _need(k <= p - 1, "needs k <= p-1")
        return ""
    if cid == "eq6.6":
        m, r, N, N2 = _mr(q, p)
        k = q.get("k")
        _nonneg(k=k, s=s)
        _need(k + s <= p - 1, "needs k + s <= p-1")
        return ""
    m, r, N, N2 = _mr(q, p)
    _nonneg(s=s)
    if cid == "lemma5.1":
        _need(s <= min(N, N2), "needs s <= min(<-r/m>_p, <-(m-r)/m>_p)")
        return "closed form" if (N - s) % 2 == 0 else "zero"
    if cid in ("thm2.3-2.5", "thm2.3-2.6"):
        _need(s <= min(N, N2), "needs s <= min(<-r/m>_p, <-(m-r)/m>_p)")
        _need((N - s) % 2 == 1, "needs <-r/m>_p = s+1 mod 2")
        return ""
    if cid == "thm2.3-2.7":
        _need(s <= min(N, N2), "needs s <= min(<-r/m>_p, <-(m-r)/m>_p)")
        _need((N - s) % 2 == 0, "needs <-r/m>_p = s mod 2")
        return ""
    if cid == "conj7.3":
        _need(s <= p - 1, "needs s <= p-1")
        _need((N - s) % 2 == 1, "needs <-r/m>_p = s+1 mod 2")
        return "termwise zero" if s > min(N, N2) else ""
    if cid in ("thm2.7-2.11", "thm2.7-2.12", "conj7.6"):
        _need(r < m, "needs r < m")
        _need(s <= N2, "needs s <= <-(m-r)/m>_p")
        if cid != "thm2.7-2.11":
            _need(p % m in (1, m - 1), "needs p = +-1 mod m")
        return ""
    raise UnknownCheckId(cid)


def _pre_int(cid: str, q: Mapping) -> str:
    p = q.get("p")
    _odd_prime(p)
    n = (p - 1) // 2
    if cid in ("int1.1", "int1.2", "int1.3"):
        return "p=1 mod 4" if p % 4 == 1 else "p=3 mod 4"
    if cid in ("int1.4", "int1.5", "int1.6"):
        _need(p >= 5, "needs p > 3")
        cond = {"int1.4": p % 3 == 2, "int1.5": p % 8 in (5, 7), "int1.6": p % 4 == 3}[cid]
        _need(cond, "p outside the stated residue class")
        return ""
    if cid == "int1.7":
        a = parse_fraction(q.get("a"))
        _need(a.denominator % p != 0, "p divides the denominator of a")
        _need(mod_fraction(a, p) % 2 == 1, "needs <a>_p odd")
        return ""
    if cid in ("int1.8", "int1.9", "int1.10", "int1.11"):
        _need(p >= 5, "needs p >= 5")
        return ""
    if cid == "int1.12":
        s = q.get("s")
        _nonneg(s=s)
        _need(s <= n, "needs s <= (p-1)/2")
        return ""
    if cid == "int2.1":
        s = q.get("s")
        _nonneg(s=s)
        _need(s <= n, "needs s <= (p-1)/2")
        _need(s % 2 == (p + 1) // 2 % 2, "needs s = (p+1)/2 mod 2")
        return ""
    if cid == "int2.4":
        _need(p % 4 == 1, "needs p = 1 mod 4")
        return ""
    raise UnknownCheckId(cid)


def precondition(check_id: str, params: Mapping) -> str:
    """Return the branch label for ``params`` or raise :class:`PreconditionViolated`."""
    kind = kind_of(check_id)
    if kind == "identity":
        return _pre_identity(check_id, params)
    if kind == "qcong":
        return _pre_qcong(check_id, params)
    return _pre_int(check_id, params)


# ---------------------------------------------------------------------------
# raw grids


def _bound(bounds: Mapping, key: str, default):
    v = bounds.get(key)
    return default if v is None else v


def _primes(bounds: Mapping, kind: str) -> List[int]:
    if bounds.get("p") is not None:
        return [bounds["p"]]
    if bounds.get("primes"):
        return list(bounds["primes"])
    if kind == "int":
        top = _bound(bounds, "prime_max", DEFAULT_INT_PRIME_MAX)
    elif bounds.get("prime_max") is not None:
        top = bounds["prime_max"]
    else:
        return list(DEFAULT_PRIMES)
    return [p for p in range(3, top + 1) if is_prime(p)]


def _fixed_or_range(bounds, key, lo, hi):
    if bounds.get(key) is not None:
        return [bounds[key]]
    return range(lo, hi + 1)


def _identity_grid(cid: str, bounds: Mapping) -> Iterator[dict]:
    nmax = _bound(bounds, "n_max", IDENTITY_N_MAX.get(cid, DEFAULT_N_MAX))
    mmax = _bound(bounds, "m_max", nmax)
    if cid in ("lemma4.1a", "qbinom-thm", "andrews-watson"):
        for n in range(nmax + 1):
            yield {"n": n}
    elif cid in ("lemma4.1b", "eq4.3"):
        for m in range(mmax + 1):
            yield {"m": m}
    elif cid in ("lemma4.2a", "lemma4.2b"):
        for n in range(1, nmax + 1):
            yield {"n": n}
    elif cid in ("lemma4.3", "lemma4.4"):
        for n in range(1, nmax + 1):
            for h in range(1, n + 1):
                for m in range(0, n - h + 1):
                    for s in range(m + 1):
                        yield {"n": n, "h": h, "m": m, "s": s}
    elif cid == "eq4.14":
        for n in range(nmax + 1):
            for i in range(n + 1):
                yield {"n": n, "i": i}
    elif cid == "qchu-4.19":
        for n in range(nmax + 1):
            for s in range(n + 1):
                for m in range(s, n + 1):
                    yield {"n": n, "s": s, "m": m}
    elif cid == "qchu-4.21":
        for n in range(nmax + 1):
            for m in range(n + 1):
                yield {"n": n, "m": m}
    elif cid == "qdixon":
        for a in range(nmax + 1):
            for b in range(nmax + 1):
                for c in range(nmax + 1):
                    yield {"a": a, "b": b, "c": c}
    elif cid in ("lemma3.2", "thm2.5", "lemma6.1b", "eq6.4"):
        for n in range(nmax + 1):
            for s in range(n + 1):
                yield {"n": n, "s": s}
    elif cid == "conj7.2":
        for n in range(nmax + 1):
            for r in range(n + 1):
                yield {"n": n, "r": r}
    elif cid in ("lemma6.1a", "eq6.3"):
        for n in range(nmax + 1):
            for m in range(mmax + 1):
                yield {"n": n, "m": m}


def _mr_pairs(p: int, bounds: Mapping, m_values=None):
    mmax = _bound(bounds, "m_max", DEFAULT_M_MAX)
    ms = [bounds["m"]] if bounds.get("m") is not None else (m_values or range(2, mmax + 1))
    for m in ms:
        if m % p == 0:
            continue
        rmax = min(m - 1, _bound(bounds, "r_max", m - 1))
        rs = [bounds["r"]] if bounds.get("r") is not None else range(1, rmax + 1)
        for r in rs:
            yield m, r


def _s_values(bounds, top):
    smax = bounds.get("s_max")
    if bounds.get("s") is not None:
        return [bounds["s"]]
    return range(0, (top if smax is None else min(top, smax)) + 1)


def _qcong_grid(cid: str, bounds: Mapping) -> Iterator[dict]:
    for p in _primes(bounds, "qcong"):
        n = (p - 1) // 2
        if cid == "lemma3.1":
            for k in range(n + 1):
                yield {"p": p, "k": k}
        elif cid in ("thm2.1", "thm2.6"):
            for s in _s_values(bounds, n):
                yield {"p": p, "s": s}
        elif cid in ("cor2.2", "remark-cor2.2"):
            yield {"p": p}
        elif cid in ("cor2.4", "conj7.4"):
            top = n if cid == "cor2.4" else p - 1
            for m in (3, 4, 6):
                if bounds.get("m") is not None and m != bounds["m"]:
                    continue
                for s in _s_values(bounds, top):
                    yield {"p": p, "m": m, "s": s}
        elif cid in ("cor2.8", "conj7.5"):
            for m in (3, 4, 6):
                if bounds.get("m") is not None and m != bounds["m"]:
                    continue
                rs = [bounds["r"]] if bounds.get("r") is not None else (1, m - 1)
                for r in rs:
                    for s in _s_values(bounds, p - 1):
                        yield {"p": p, "m": m, "r": r, "s": s}
        elif cid == "eq6.5":
            for m, r in _mr_pairs(p, bounds):
                for k in range(p):
                    yield {"p": p, "m": m, "r": r, "k": k}
        elif cid == "eq6.6":
            for m, r in _mr_pairs(p, bounds):
                for k in range(p):
                    for s in _s_values(bounds, p - 1 - k):
                        yield {"p": p, "m": m, "r": r, "k": k, "s": s}
        elif cid == "conj7.3":
            for m, r in _mr_pairs(p, bounds):
                for s in _s_values(bounds, p - 1):
                    yield {"p": p, "m": m, "r": r, "s": s}
        elif cid in ("thm2.7-2.12", "conj7.6"):
            for m, r in _mr_pairs(p, bounds):
                if p % m not in (1, m - 1):
                    continue
                for s in _s_values(bounds, p - 1):
                    yield {"p": p, "m": m, "r": r, "s": s}
        elif cid == "thm2.7-2.11":
            for m, r in _mr_pairs(p, bounds):
                for s in _s_values(bounds, p - 1):
                    yield {"p": p, "m": m, "r": r, "s": s}
        else:
            for m, r in _mr_pairs(p, bounds):
                for s in _s_values(bounds, n):
                    yield {"p": p, "m": m, "r": r, "s": s}


def _int_grid(cid: str, bounds: Mapping) -> Iterator[dict]:
    for p in _primes(bounds, "int"):
        if cid == "int1.7":
            values = [bounds["a"]] if bounds.get("a") is not None else A_VALUES
            for a in values:
                yield {"p": p, "a": str(Fraction(str(a)))}
        elif cid in ("int1.12", "int2.1"):
            for s in _s_values(bounds, (p - 1) // 2):
                yield {"p": p, "s": s}
        else:
            yield {"p": p}


def enumerate_cases(check_id: str, bounds: Optional[Mapping] = None,
                    include_excluded: bool = False) -> List[Case]:
    """Admissible parameter tuples for ``check_id`` within ``bounds``.

    ``bounds`` may fix single values (``p``, ``m``, ``r``, ``s``, ``a``) or give
    maxima (``n_max``, ``m_max``, ``r_max``, ``s_max``, ``prime_max``) and a
    ``primes`` list.  Statement aliases such as ``thm2.3`` expand to all of
    their displays.
    """
    bounds = dict(bounds or {})
    out: List[Case] = []
    for cid in expand_ids([check_id]):
        kind = kind_of(cid)
        grid = {"identity": _identity_grid, "qcong": _qcong_grid, "int": _int_grid}[kind]
        for params in grid(cid, bounds):
            try:
                branch = precondition(cid, params)
            except PreconditionViolated as exc:
                if include_excluded:
                    out.append(Case(cid, params, None, str(exc)))
                continue
            out.append(Case(cid, params, branch))
    return out
