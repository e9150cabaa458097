"""Result records shared by the verifier, the conjecture lab and the reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

PASS = "pass"
FAIL = "fail"
SKIP = "skipped-precondition"
CONJECTURE_SCAN = "conjecture-scan"


class VerifierError(Exception):
    pass


class UnknownCheckId(VerifierError, KeyError):
    pass


class PreconditionViolated(VerifierError, ValueError):
    pass


class NoClassicalCounterpart(VerifierError, ValueError):
    pass


@dataclass
class CheckResult:
    id: str
    params: Dict[str, Any]
    status: str
    witness: Optional[str] = None
    elapsed: float = 0.0
    tag: Optional[str] = None
    branch: Optional[str] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    @property
    def is_conjecture(self) -> bool:
        return self.tag == CONJECTURE_SCAN

    def sort_key(self):
        return (self.id, tuple((k, _orderable(v)) for k, v in self.params.items()))


def _orderable(v):
    if isinstance(v, bool):
        return (1, str(v))
    if isinstance(v, int):
        return (0, v)
    return (1, str(v))


def sort_results(results):
    return sorted(results, key=CheckResult.sort_key)


def summarize(results) -> Dict[str, int]:
    out = {PASS: 0, FAIL: 0, SKIP: 0}
    for r in results:
        out[r.status] = out.get(r.status, 0) + 1
    return out
