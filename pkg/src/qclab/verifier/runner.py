"""Running single checks and whole grids of them."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, List, Mapping, Optional, Sequence

from ..poly import PolyError, rf_difference_numerator, rf_equal
from ..qkit.core import QSum, as_rfunc, binom, limit_q_to_one, poch_q, qpow
from ..qkit.displays import DISPLAYS, SumSpec, build_sides
from ..residue import (
    DenominatorDivisibleByP,
    NotInvertible,
    Reducer,
    ResidueError,
    make_ring,
)
from .cases import Case, kind_of, precondition
from .intcong import evaluate_int
from .results import (
    CONJECTURE_SCAN,
    FAIL,
    PASS,
    SKIP,
    CheckResult,
    NoClassicalCounterpart,
    PreconditionViolated,
    UnknownCheckId,
    sort_results,
)

WITNESS_LIMIT = 2000


def _clip(text: str) -> str:
    if len(text) <= WITNESS_LIMIT:
        return text
    return text[:WITNESS_LIMIT] + f" ... ({len(text)} characters)"


def _tag(check_id: str) -> Optional[str]:
    d = DISPLAYS.get(check_id)
    return CONJECTURE_SCAN if d is not None and d.conjecture else None


@lru_cache(maxsize=None)
def reducer(p: int, r: int) -> Reducer:
    """One memoising reducer per ring and per process."""
    return Reducer(make_ring(p, r))


def _skip(check_id, params, exc, start) -> CheckResult:
    return CheckResult(check_id, dict(params), SKIP, str(exc),
                       time.perf_counter() - start, _tag(check_id))


def run_identity_check(check_id: str, params: Mapping) -> CheckResult:
    if kind_of(check_id) != "identity":
        raise UnknownCheckId(f"{check_id} is not an identity")
    start = time.perf_counter()
    try:
        branch = precondition(check_id, params)
        lhs, rhs = build_sides(SumSpec(check_id, dict(params)))
        lhs, rhs = as_rfunc(lhs), as_rfunc(rhs)
    except PreconditionViolated as exc:
        return _skip(check_id, params, exc, start)
    except PolyError as exc:
        # a parameter choice that makes a denominator vanish identically
        return _skip(check_id, params, exc, start)
    ok = rf_equal(lhs, rhs)
    witness = None if ok else _clip(str(rf_difference_numerator(lhs, rhs)))
    return CheckResult(check_id, dict(params), PASS if ok else FAIL, witness,
                       time.perf_counter() - start, _tag(check_id), branch)


def residue_difference(check_id: str, params: Mapping):
    """Residue of LHS - RHS modulo ``[p]^r`` for a q-congruence display."""
    d = DISPLAYS[check_id]
    lhs, rhs = build_sides(SumSpec(check_id, dict(params)))
    red = reducer(params["p"], d.modexp)
    return red.sum(lhs) - red.sum(rhs)


def run_q_congruence_check(check_id: str, p: int, params: Optional[Mapping] = None) -> CheckResult:
    if kind_of(check_id) != "qcong":
        raise UnknownCheckId(f"{check_id} is not a q-congruence")
    full = {"p": p}
    full.update({k: v for k, v in (params or {}).items() if k != "p"})
    start = time.perf_counter()
    try:
        branch = precondition(check_id, full)
    except PreconditionViolated as exc:
        return _skip(check_id, full, exc, start)
    try:
        diff = residue_difference(check_id, full)
    except (NotInvertible, ResidueError, PolyError) as exc:
        return CheckResult(check_id, full, FAIL, f"{type(exc).__name__}: {exc}",
                           time.perf_counter() - start, _tag(check_id), branch)
    ok = diff.is_zero()
    witness = None if ok else _clip(f"LHS - RHS = {diff} (mod {diff.ring})")
    return CheckResult(check_id, full, PASS if ok else FAIL, witness,
                       time.perf_counter() - start, _tag(check_id), branch)


def run_int_congruence_check(check_id: str, p: int, params: Optional[Mapping] = None) -> CheckResult:
    if kind_of(check_id) != "int":
        raise UnknownCheckId(f"{check_id} is not an integer congruence")
    full = {"p": p}
    full.update({k: v for k, v in (params or {}).items() if k != "p"})
    start = time.perf_counter()
    try:
        branch = precondition(check_id, full)
    except PreconditionViolated as exc:
        return _skip(check_id, full, exc, start)
    extra = {k: v for k, v in full.items() if k != "p"}
    try:
        total, got, want, modulus, _ = evaluate_int(check_id, p, extra)
    except DenominatorDivisibleByP as exc:
        return CheckResult(check_id, full, FAIL, f"DenominatorNotInvertible: {exc}",
                           time.perf_counter() - start, None, branch)
    ok = got == want
    witness = None if ok else f"sum = {got}, expected {want} (mod {modulus})"
    return CheckResult(check_id, full, PASS if ok else FAIL, witness,
                       time.perf_counter() - start, None, branch,
                       {"residue": got, "modulus": modulus})


def run_check(check_id: str, params: Mapping) -> CheckResult:
    """Dispatch on the kind of ``check_id``; ``params`` carries ``p`` where needed."""
    kind = kind_of(check_id)
    if kind == "identity":
        return run_identity_check(check_id, params)
    p = params.get("p")
    if kind == "qcong":
        return run_q_congruence_check(check_id, p, params)
    return run_int_congruence_check(check_id, p, params)


def _run_case(case: Case) -> CheckResult:
    if case.excluded is not None:
        return CheckResult(case.id, dict(case.params), SKIP, case.excluded, 0.0, _tag(case.id))
    return run_check(case.id, case.params)


def default_jobs() -> int:
    env = os.environ.get("QCLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def run_cases(cases: Sequence[Case], jobs: Optional[int] = None) -> List[CheckResult]:
    """Run every case and return the results sorted by ``(id, params)``."""
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or len(cases) < 2:
        results = [_run_case(c) for c in cases]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, cases, chunksize=8))
    return sort_results(results)


# ---------------------------------------------------------------------------
# q -> 1


def _cor22_pairs(p, params):
    for k in range((p - 1) // 2 + 1):
        qterm = (binom(2 * k, k, 2) ** 3 * qpow(2 * k)
                 / (poch_q(2, 2, k, c=-1) ** 2 * poch_q(1, 1, 2 * k, c=-1) ** 2))
        yield k, qterm, Fraction(comb(2 * k, k) ** 3, 64 ** k)


def _thm26_pairs(p, params):
    s = params.get("s", 0)
    for k in range((p - 1) // 2 + 1):
        qterm = (poch_q(1, 2, k) * poch_q(1, 2, k + s)
                 / (poch_q(2, 2, k) * poch_q(2, 2, k + s)))
        yield k, qterm, Fraction(comb(2 * k, k) * comb(2 * k + 2 * s, k + s), 4 ** (2 * k + s))


_COR24_CLASSICAL = {
    3: lambda k: Fraction(comb(3 * k, k) * comb(2 * k, k), 108 ** k),
    4: lambda k: Fraction(comb(4 * k, 2 * k) * comb(2 * k, k), 256 ** k),
    6: lambda k: Fraction(comb(6 * k, 3 * k) * comb(3 * k, k), 1728 ** k),
}


def _cor24_pairs(p, params):
    m, s = params.get("m", 3), params.get("s", 0)
    if m not in _COR24_CLASSICAL:
        raise NoClassicalCounterpart(f"cor2.4 has no classical family for m = {m}")
    for k in range(s, (p - 1) // 2 + 1):
        qterm = (binom(2 * k, k + s, m) * poch_q(1, m, k) * poch_q(m - 1, m, k) * qpow(m * k)
                 / poch_q(2 * m, 2 * m, k) ** 2)
        yield k, qterm, comb(2 * k, k + s) * _COR24_CLASSICAL[m](k)


_CLASSICAL = {"cor2.2": _cor22_pairs, "thm2.6": _thm26_pairs, "cor2.4": _cor24_pairs}


def q_to_one_consistency(check_id: str, p: int, params: Optional[Mapping] = None) -> CheckResult:
    """Compare every summand of a q-display at ``q = 1`` with its classical summand."""
    if check_id not in _CLASSICAL:
        raise NoClassicalCounterpart(check_id)
    full = {"p": p}
    full.update({k: v for k, v in (params or {}).items() if k != "p"})
    start = time.perf_counter()
    bad = []
    for k, qterm, classical in _CLASSICAL[check_id](p, full):
        got = limit_q_to_one(qterm)
        if got != classical:
            bad.append(f"k={k}: q->1 gives {got}, classical {classical}")
    status = FAIL if bad else PASS
    return CheckResult(check_id, full, status, "; ".join(bad) or None,
                       time.perf_counter() - start, None, "q->1")
