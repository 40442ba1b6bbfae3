from fractions import Fraction
from functools import lru_cache

import pytest
import sympy as sp
from hypothesis import strategies as st

from quadyb.algebra import Poly, RatFun
from quadyb.catalog import FamilyId, make_family
from quadyb.engine import involution_check, reversibility_check, yb_check_symbolic
from quadyb.projective import INF, PPoint, Quadruple

# lines printed by the acceptance tests, repeated at the end of the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)


SYMS = {n: sp.Symbol(n) for n in ("x", "y", "z", "alpha", "beta", "A", "B")}
VARS = ("x", "y", "alpha")


def to_sympy(f):
    """Independent oracle: re-read the canonical text with sympy."""
    text = f.to_text() if hasattr(f, "to_text") else str(f)
    return sp.sympify(text.replace("^", "**"), locals=SYMS)


def sym_equal(a, b) -> bool:
    return sp.simplify(sp.together(a - b)) == 0


small = st.integers(-6, 6)
rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
nonzero_rationals = rationals.filter(lambda r: r != 0)
ppoints = st.one_of(st.just(INF), rationals.map(PPoint))


@st.composite
def polys(draw, names=VARS, max_terms=5, max_deg=3):
    p = Poly()
    for _ in range(draw(st.integers(0, max_terms))):
        exps = {v: draw(st.integers(0, max_deg)) for v in names}
        p = p + Poly.monomial(exps, draw(rationals))
    return p


@st.composite
def nonzero_polys(draw, names=VARS):
    p = draw(polys(names))
    return p if not p.is_zero() else Poly.const(draw(nonzero_rationals))


@st.composite
def ratfuns(draw, names=VARS):
    return RatFun(draw(polys(names)), draw(nonzero_polys(names)))


@st.composite
def quadruples(draw):
    pts = draw(st.lists(ppoints, min_size=4, max_size=4, unique=True))
    return Quadruple(pts)


@lru_cache(maxsize=None)
def symbolic_verdicts(fid: str) -> tuple[bool, bool, bool]:
    """(yb, reversible, involution), computed once per session."""
    m = make_family(fid)
    return (yb_check_symbolic(m).verdict, reversibility_check(m).verdict, involution_check(m).verdict)


ALL_FAMILIES = [f.value for f in FamilyId]


@pytest.fixture
def families():
    return {f: make_family(f) for f in ALL_FAMILIES}
