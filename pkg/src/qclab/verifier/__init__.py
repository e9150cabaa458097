"""Exact checks of identities, q-congruences and integer congruences."""

from .cases import (
    ALIASES,
    ALL_IDS,
    CONJECTURE_IDS,
    IDENTITY_IDS,
    INT_IDS,
    QCONG_IDS,
    Case,
    enumerate_cases,
    expand_ids,
    kind_of,
    precondition,
)
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
    summarize,
)
from .runner import (
    q_to_one_consistency,
    run_cases,
    run_check,
    run_identity_check,
    run_int_congruence_check,
    run_q_congruence_check,
)

__all__ = [
    "ALIASES", "ALL_IDS", "CONJECTURE_IDS", "IDENTITY_IDS", "INT_IDS", "QCONG_IDS",
    "Case", "enumerate_cases", "expand_ids", "kind_of", "precondition",
    "CONJECTURE_SCAN", "FAIL", "PASS", "SKIP", "CheckResult", "NoClassicalCounterpart",
    "PreconditionViolated", "UnknownCheckId", "sort_results", "summarize",
    "q_to_one_consistency", "run_cases", "run_check", "run_identity_check",
    "run_int_congruence_check", "run_q_congruence_check",
]
