"""Deterministic text, json and csv reports, plus optional figures."""

from __future__ import annotations

import csv
import io
import json
import os
from typing import Iterable, List, Optional, Sequence

from .conjlab import FEntry
from .verifier.results import FAIL, PASS, SKIP, CheckResult, sort_results, summarize

FORMATS = ("text", "json", "csv")
FIELDS = ("id", "params", "status", "witness", "elapsed_ms")
F_FIELDS = ("p", "m", "r", "f", "sign", "expected", "status", "note")


def _params_text(params) -> str:
    return json.dumps(params, separators=(",", ":"))


def _elapsed(r: CheckResult, timings: bool):
    return round(r.elapsed * 1000, 3) if timings else None


def summary_line(results: Sequence[CheckResult]) -> str:
    c = summarize(results)
    return f"PASS {c[PASS]} / FAIL {c[FAIL]} / SKIP {c[SKIP]}"


def render_json(results: Sequence[CheckResult], timings: bool = False) -> str:
    rows = [{"id": r.id, "params": r.params, "status": r.status,
             "witness": r.witness, "elapsed_ms": _elapsed(r, timings)} for r in results]
    return json.dumps(rows, indent=2) + "\n"


def render_csv(results: Sequence[CheckResult], timings: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in results:
        e = _elapsed(r, timings)
        w.writerow([r.id, _params_text(r.params), r.status,
                    "" if r.witness is None else r.witness, "" if e is None else e])
    return buf.getvalue()


def _table(header: Sequence[str], rows: List[Sequence[str]]) -> List[str]:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    fmt = lambda row: "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
    return [fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in rows]


def render_text(results: Sequence[CheckResult], timings: bool = False) -> str:
    header = ["id", "params", "status", "branch", "tag", "witness"]
    residues = any("residue" in r.extra for r in results)
    if residues:
        header.insert(5, "residue")
    if timings:
        header.append("elapsed_ms")
    rows = []
    for r in results:
        row = [r.id, _params_text(r.params), r.status, r.branch or "", r.tag or "",
               r.witness or ""]
        if residues:
            row.insert(5, f"{r.extra['residue']} mod {r.extra['modulus']}"
                       if "residue" in r.extra else "")
        if timings:
            row.append(f"{r.elapsed * 1000:.3f}")
        rows.append(row)
    lines = _table(header, rows) if rows else []
    conj_fail = [r for r in results if r.failed and r.is_conjecture]
    if conj_fail:
        lines.append("")
        lines.append(f"!! {len(conj_fail)} conjecture-scan failure(s): "
                     + ", ".join(f"{r.id} {_params_text(r.params)}" for r in conj_fail))
    lines.append("")
    lines.append(summary_line(results))
    return "\n".join(lines) + "\n"


def render(results: Sequence[CheckResult], fmt: str = "text", timings: bool = False) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    results = sort_results(results)
    return {"text": render_text, "json": render_json, "csv": render_csv}[fmt](results, timings)


def write_report(results: Iterable[CheckResult], fmt: str = "text",
                 path: Optional[str] = None, timings: bool = False, stream=None) -> str:
    """Render ``results`` and write them to ``path`` (or ``stream``); returns the text."""
    text = render(list(results), fmt, timings)
    _emit(text, path, stream)
    return text


def _emit(text: str, path: Optional[str], stream) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    elif stream is not None:
        stream.write(text)


# ---------------------------------------------------------------------------
# f-table


def f_status(e: FEntry) -> str:
    if e.note.startswith("skipped"):
        return SKIP
    if e.f is None or (e.expected is not None and e.f != e.expected) or "fails at" in e.note:
        return FAIL
    return PASS


def _f_row(e: FEntry) -> dict:
    return {"p": e.p, "m": e.m, "r": e.r, "f": e.f, "sign": e.sign, "expected": e.expected,
            "status": f_status(e), "note": e.note or None}


def render_f_table(entries: Sequence[FEntry], fmt: str = "text",
                   extra: Sequence[CheckResult] = ()) -> str:
    rows = [_f_row(e) for e in entries]
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(F_FIELDS)
        for row in rows:
            w.writerow(["" if row[k] is None else row[k] for k in F_FIELDS])
        return buf.getvalue()
    body = [[str("" if row[k] is None else row[k]) for k in F_FIELDS] for row in rows]
    lines = _table(F_FIELDS, body) if body else []
    for r in extra:
        lines.append(f"{r.id}: {r.status} ({r.params.get('pairs', 0)} pairs)"
                     + (f" {r.witness}" if r.witness else ""))
    mism = [row for row in rows if row["status"] == FAIL]
    if mism:
        lines.append(f"!! {len(mism)} row(s) disagree with the tabulated value or have no solution")
    counts = {s: sum(1 for row in rows if row["status"] == s) for s in (PASS, FAIL, SKIP)}
    lines.append(f"PASS {counts[PASS]} / FAIL {counts[FAIL]} / SKIP {counts[SKIP]}")
    return "\n".join(lines) + "\n"


def f_entry_result(e: FEntry) -> CheckResult:
    """An f-table row as a check result, so it can join a combined report."""
    witness = None
    if f_status(e) != PASS:
        witness = e.note or f"f = {e.f}"
    return CheckResult("conj7.7", {"p": e.p, "m": e.m, "r": e.r}, f_status(e), witness,
                       0.0, "conjecture-scan")


# ---------------------------------------------------------------------------
# figures


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def status_figure(results: Sequence[CheckResult], path: str) -> str:
    """Share of pass/fail/skip per check id, with the case count above each bar."""
    plt = _pyplot()
    ids = sorted({r.id for r in results})
    totals = [sum(1 for r in results if r.id == i) for i in ids]
    fig, ax = plt.subplots(figsize=(max(6.0, 0.3 * len(ids) + 2), 4.0))
    bottom = [0.0] * len(ids)
    colors = {PASS: "#4c9a2a", FAIL: "#c0392b", SKIP: "#b0b0b0"}
    for s in (PASS, FAIL, SKIP):
        share = [sum(1 for r in results if r.id == i and r.status == s) / n
                 for i, n in zip(ids, totals)]
        ax.bar(range(len(ids)), share, bottom=bottom, color=colors[s], label=s)
        bottom = [b + c for b, c in zip(bottom, share)]
    for x, n in enumerate(totals):
        ax.text(x, 1.01, str(n), ha="center", va="bottom", fontsize=6, rotation=90)
    ax.set_xticks(range(len(ids)))
    ax.set_xticklabels(ids, rotation=75, fontsize=7)
    ax.set_ylim(0, 1.15)
    ax.set_ylabel("share of cases")
    ax.legend(fontsize=7, loc="lower right")
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def f_table_figure(entries: Sequence[FEntry], path: str) -> str:
    """Computed exponents against r, one panel per (p, m), tabulated values overlaid."""
    plt = _pyplot()
    from matplotlib.ticker import MaxNLocator

    groups = sorted({(e.p, e.m) for e in entries if e.f is not None})
    if not groups:
        groups = [(0, 0)]
    fig, axes = plt.subplots(1, len(groups), figsize=(3.2 * len(groups), 3.0), squeeze=False)
    for ax, (p, m) in zip(axes[0], groups):
        rows = [e for e in entries if (e.p, e.m) == (p, m) and e.f is not None]
        ax.plot([e.r for e in rows], [e.f for e in rows], "o", label="computed")
        tab = [e for e in rows if e.expected is not None]
        ax.plot([e.r for e in tab], [e.expected for e in tab], "x", color="k", label="tabulated")
        ax.set_title(f"p={p}, m={m}", fontsize=9)
        ax.set_xlabel("r")
        ax.xaxis.set_major_locator(MaxNLocator(integer=True))
        ax.axhline(0, color="0.8", lw=0.5)
    axes[0][0].set_ylabel("f")
    axes[0][0].legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def write_figures(directory: str, results: Sequence[CheckResult] = (),
                  entries: Sequence[FEntry] = ()) -> List[str]:
    os.makedirs(directory, exist_ok=True)
    out = []
    if results:
        out.append(status_figure(results, os.path.join(directory, "status_by_id.png")))
    if entries:
        out.append(f_table_figure(entries, os.path.join(directory, "f_table.png")))
    return out
