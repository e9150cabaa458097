"""Shared helpers: sympy is the independent oracle for polynomial arithmetic."""

import sympy
from hypothesis import strategies as st

from qclab.poly import LPoly, qmono

SQ = sympy.Symbol("q")


def to_sympy(f: LPoly):
    """A univariate Laurent polynomial as a sympy expression in ``q``."""
    return sum((sympy.Rational(c.numerator, c.denominator) if hasattr(c, "numerator") else c)
               * SQ ** e for e, c in f.q_coefficients().items()) or sympy.Integer(0)


def sympy_residue(f: LPoly, p: int, r: int):
    """Remainder of ``q^N f`` modulo ``[p]^r`` times ``q^-N`` mod ``[p]^r``, via sympy."""
    modpoly = sympy.Poly(sum(SQ ** i for i in range(p)) ** r, SQ)
    lo = min(0, f.min_degree()) if f else 0
    num = sympy.Poly(sympy.expand(to_sympy(f) * SQ ** (-lo)), SQ)
    inv_q = sympy.Poly(sympy.invert(SQ, modpoly.as_expr(), SQ), SQ)
    return (num * inv_q ** (-lo)).rem(modpoly)


def q_poly(coeffs, shift=0) -> LPoly:
    return LPoly.from_q_coeffs(coeffs, shift)


small_ints = st.integers(min_value=-6, max_value=6)
laurent = st.builds(q_poly, st.lists(small_ints, max_size=7), st.integers(min_value=-3, max_value=3))
polys = st.builds(q_poly, st.lists(small_ints, max_size=9))


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def record_acceptance(number: int, ok: bool, detail: str) -> str:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
