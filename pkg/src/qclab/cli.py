"""Command-line front end.

Exit status is 0 when every executed theorem, lemma and integer check passed,
1 when any of them failed and 2 on a usage or I/O error.  Failures of
conjecture scans are flagged in the report but leave the status at 0.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import report
from .conjlab import (
    CONJECTURE_SCAN_IDS,
    KNOWN_F_ROWS,
    FEntry,
    check_f_recurrence,
    check_f_symmetry,
    f_table,
    known_table,
    scan_conjecture,
)
from .residue import is_prime
from .verifier import (
    CONJECTURE_IDS,
    IDENTITY_IDS,
    INT_IDS,
    QCONG_IDS,
    CheckResult,
    enumerate_cases,
    expand_ids,
    kind_of,
    run_cases,
    sort_results,
)
from .verifier.results import UnknownCheckId

COMMANDS = ("verify-identity", "verify-qcong", "verify-intcong", "conjectures", "f-table", "all")
F_TABLE_ID = "conj7.7"

KIND_OF_COMMAND = {"verify-identity": "identity", "verify-qcong": "qcong", "verify-intcong": "int"}
DEFAULT_IDS = {
    "verify-identity": [i for i in IDENTITY_IDS if i not in CONJECTURE_IDS],
    "verify-qcong": [i for i in QCONG_IDS if i not in CONJECTURE_IDS],
    "verify-intcong": list(INT_IDS),
    "conjectures": list(CONJECTURE_SCAN_IDS) + [F_TABLE_ID],
}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing


_RANGE = re.compile(r"^(-?\d+)-(-?\d+)$")


def _int_list(text: str) -> List[int]:
    """``"1,3,5-9"`` -> ``[1, 3, 5, 6, 7, 8, 9]``; a leading minus is a sign."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        rng = _RANGE.match(part)
        if rng:
            lo, hi = int(rng.group(1)), int(rng.group(2))
            if hi < lo:
                raise ValueError(f"empty range {part}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    return out


def parse_primes(text: str) -> List[int]:
    """``"3,5,7"`` or ``"3-13"``; a range keeps the odd primes inside it."""
    primes: List[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            values = _int_list(part)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None
        if _RANGE.match(part):
            values = [p for p in values if p > 2 and is_prime(p)]
        for p in values:
            if not is_prime(p) or p == 2:
                raise argparse.ArgumentTypeError(f"{p} is not an odd prime")
        primes.extend(values)
    if not primes:
        raise argparse.ArgumentTypeError("empty prime list")
    return sorted(set(primes))


def parse_pairs(text: str) -> List[Tuple[int, List[int]]]:
    """``"2:1,3,5;3:1-19"`` -> ``[(2, [1, 3, 5]), (3, [1, ..., 19])]``."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        m_text, sep, r_text = chunk.partition(":")
        try:
            if not sep:
                raise ValueError
            m, rs = int(m_text), _int_list(r_text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected m:r1,r2,... got {chunk!r}") from None
        if m < 1 or not rs:
            raise argparse.ArgumentTypeError(f"bad pair {chunk!r}")
        out.append((m, rs))
    if not out:
        raise argparse.ArgumentTypeError("no pairs given")
    return out


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _add_common(sp: argparse.ArgumentParser, grid: bool = True) -> None:
    sp.add_argument("--format", choices=report.FORMATS, default="text")
    sp.add_argument("--output", "-o", help="write the report here instead of stdout")
    sp.add_argument("--jobs", "-j", type=_positive, default=None,
                    help="worker processes (default: QCLAB_THREADS or the core count)")
    sp.add_argument("--timings", action="store_true", help="record elapsed_ms per row")
    sp.add_argument("--figures", metavar="DIR", help="also render PNG figures into DIR")
    sp.add_argument("--primes", type=parse_primes, help="comma list or ranges, e.g. 3,5,7")
    if not grid:
        return
    sp.add_argument("--ids", help="comma list of check ids or statement aliases")
    sp.add_argument("--prime-max", type=_positive)
    sp.add_argument("--n-max", type=_nonneg)
    sp.add_argument("--m-max", type=_positive)
    sp.add_argument("--r-max", type=_positive)
    sp.add_argument("--s-max", type=_nonneg)
    sp.add_argument("--m", type=_positive, help="fix m")
    sp.add_argument("--r", type=int, help="fix r")
    sp.add_argument("--s", type=_nonneg, help="fix s")
    sp.add_argument("--a", help="fix the rational parameter of int1.7, e.g. -1/3")
    sp.add_argument("--include-excluded", action="store_true",
                    help="list tuples outside a hypothesis as skipped rows")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qclab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "verify-identity": "check the exact q-series identities",
        "verify-qcong": "check q-congruences modulo powers of [p]",
        "verify-intcong": "check the integer binomial-sum congruences",
        "conjectures": "scan the conjectures and the exponent table",
        "f-table": "solve for the exponents f_{p,m,r}",
        "all": "run every check at the default bounds",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        _add_common(sp, grid=name != "f-table")
        if name in ("f-table", "conjectures", "all"):
            sp.add_argument("--pairs", action="append", type=parse_pairs,
                            help="m:r-list, repeatable or ';'-separated (default: tabulated rows)")
    return parser


# ---------------------------------------------------------------------------
# running


def _bounds(args) -> Dict:
    keys = ("primes", "prime_max", "n_max", "m_max", "r_max", "s_max", "m", "r", "s", "a")
    return {k: getattr(args, k, None) for k in keys if getattr(args, k, None) is not None}


def _selected_ids(args) -> List[str]:
    text = getattr(args, "ids", None)
    if not text or text == "all":
        return list(DEFAULT_IDS[args.command])
    raw = [t.strip() for t in text.split(",") if t.strip()]
    out: List[str] = []
    for i in raw:
        if args.command == "conjectures":
            if i not in DEFAULT_IDS["conjectures"]:
                raise UsageError(f"{i} is not a conjecture id")
            out.append(i)
            continue
        try:
            ids = expand_ids([i])
        except UnknownCheckId:
            raise UsageError(f"unknown check id {i!r}") from None
        want = KIND_OF_COMMAND[args.command]
        for cid in ids:
            if kind_of(cid) != want:
                raise UsageError(f"{cid} is not handled by {args.command}")
        out.extend(ids)
    return list(dict.fromkeys(out))


def _f_entries(args) -> List[FEntry]:
    pairs = [pr for group in (getattr(args, "pairs", None) or []) for pr in group]
    if not pairs:
        if args.primes:
            rows = [(m, rs) for p, m, rs in KNOWN_F_ROWS if p in args.primes]
            return f_table(args.primes, _merge(rows))
        return known_table()
    primes = args.primes or sorted({p for p, _, _ in KNOWN_F_ROWS})
    return f_table(primes, pairs)


def _merge(rows):
    merged: Dict[int, List[int]] = {}
    for m, rs in rows:
        merged.setdefault(m, []).extend(rs)
    return sorted((m, sorted(set(rs))) for m, rs in merged.items())


def _f_results(entries: Sequence[FEntry]) -> List[CheckResult]:
    out = [report.f_entry_result(e) for e in entries]
    for r in (check_f_symmetry(entries), check_f_recurrence(entries)):
        r.tag = "conjecture-scan"
        out.append(r)
    return out


def _verify(ids: Sequence[str], bounds: Dict, args) -> List[CheckResult]:
    cases = []
    for cid in ids:
        cases.extend(enumerate_cases(cid, bounds, include_excluded=args.include_excluded))
    return run_cases(cases, args.jobs)


def collect(args) -> Tuple[List[CheckResult], List[FEntry]]:
    """Run what ``args`` asks for; returns check results and f-table rows."""
    cmd = args.command
    if cmd == "f-table":
        return [], _f_entries(args)
    bounds = _bounds(args)
    if cmd in KIND_OF_COMMAND:
        return _verify(_selected_ids(args), bounds, args), []
    results: List[CheckResult] = []
    entries: List[FEntry] = []
    if cmd == "conjectures":
        ids = _selected_ids(args)
    else:
        if getattr(args, "ids", None):
            raise UsageError("all takes no --ids; use the verify-* commands to select")
        ids = list(DEFAULT_IDS["conjectures"])
        for sub in ("verify-identity", "verify-qcong", "verify-intcong"):
            results.extend(_verify(DEFAULT_IDS[sub], bounds, args))
    for cid in ids:
        if cid == F_TABLE_ID:
            entries = _f_entries(args)
            results.extend(_f_results(entries))
        else:
            results.extend(scan_conjecture(cid, bounds, args.jobs, args.include_excluded))
    return sort_results(results), entries


def exit_code(results: Sequence[CheckResult], entries: Sequence[FEntry] = ()) -> int:
    """1 if a non-conjecture check failed, else 0."""
    return 1 if any(r.failed and not r.is_conjecture for r in results) else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        results, entries = collect(args)
    except UsageError as exc:
        print(f"qclab: error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "f-table":
            extra = [check_f_symmetry(entries), check_f_recurrence(entries)]
            text = report.render_f_table(entries, args.format, extra)
            report._emit(text, args.output, sys.stdout)
        else:
            report.write_report(results, args.format, args.output, args.timings, sys.stdout)
        if args.figures:
            for path in report.write_figures(args.figures, results, entries):
                print(f"figure: {path}", file=sys.stderr)
    except OSError as exc:
        print(f"qclab: error: {exc}", file=sys.stderr)
        return 2
    return exit_code(results, entries)


if __name__ == "__main__":
    sys.exit(main())
