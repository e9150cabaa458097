import csv
import io
import json

from qclab.conjlab import FEntry
from qclab.report import render, render_f_table, write_figures, write_report
from qclab.verifier import FAIL, PASS, SKIP, CheckResult


def test_empty_report():
    assert write_report([], "text").strip().endswith("PASS 0 / FAIL 0 / SKIP 0")
    assert json.loads(write_report([], "json")) == []
    assert write_report([], "csv") == "id,params,status,witness,elapsed_ms\n"


def test_one_pass_row_json():
    rows = json.loads(render([CheckResult("cor2.2", {"p": 3}, PASS)], "json"))
    assert rows == [{"id": "cor2.2", "params": {"p": 3}, "status": "pass",
                     "witness": None, "elapsed_ms": None}]


def test_fail_row_carries_witness():
    r = CheckResult("thm2.6", {"p": 5, "s": 0}, FAIL, "LHS - RHS = 3 + q (mod [5]^2)")
    text = render([r], "text")
    assert "3 + q" in text and "PASS 0 / FAIL 1 / SKIP 0" in text
    row = next(csv.DictReader(io.StringIO(render([r], "csv"))))
    assert row["witness"].startswith("LHS - RHS") and row["params"] == '{"p":5,"s":0}'


def test_rows_are_sorted_and_timings_optional():
    rows = [CheckResult("b", {"p": 5}, PASS, elapsed=0.5), CheckResult("a", {"p": 3}, SKIP)]
    out = json.loads(render(rows, "json"))
    assert [r["id"] for r in out] == ["a", "b"]
    assert out[1]["elapsed_ms"] is None
    assert json.loads(render(rows, "json", timings=True))[1]["elapsed_ms"] == 500.0


def test_conjecture_failures_flagged():
    r = CheckResult("conj7.3", {"p": 5}, FAIL, "x", tag="conjecture-scan")
    assert "!! 1 conjecture-scan failure" in render([r], "text")


def test_write_to_path_is_byte_identical(tmp_path):
    rows = [CheckResult("a", {"p": 3, "s": 1}, PASS), CheckResult("a", {"p": 3, "s": 0}, FAIL, "w")]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    write_report(rows, "json", str(a))
    write_report(list(reversed(rows)), "json", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_f_table_render():
    rows = [FEntry(3, 2, 1, -2, -1, (0, 1), "", -2),
            FEntry(7, 9, 16, 21, 1, (0,), "computed 21, tabulated -22", -22)]
    text = render_f_table(rows)
    assert "PASS 1 / FAIL 1 / SKIP 0" in text
    out = json.loads(render_f_table(rows, "json"))
    assert out[1]["status"] == "fail" and out[1]["expected"] == -22


def test_figures(tmp_path):
    rows = [CheckResult("a", {"p": 3}, PASS), CheckResult("b", {"p": 3}, FAIL)]
    paths = write_figures(str(tmp_path / "figs"), rows, [FEntry(3, 2, 1, -2, -1, expected=-2)])
    assert len(paths) == 2
    for p in paths:
        with open(p, "rb") as fh:
            assert fh.read(8) == b"\x89PNG\r\n\x1a\n"
