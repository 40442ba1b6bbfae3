import random

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SYMS, sym_equal, to_sympy
from quadyb.catalog import SUBTRACTION_FREE, make_family
from quadyb.errors import NotSubtractionFree
from quadyb.tropical import (
    Max, TropExpr, TropMap, degeneration_check, equal_parameter_form, trop_eval, trop_involution_check,
    trop_yb_check, ultradiscretize,
)

FAMS = [f.value for f in SUBTRACTION_FREE]
X, Y, A, B = (TropExpr.var(n) for n in "XYAB")
ints = st.integers(-1000, 1000)


def _hand_H_IIIB(a, b, x, y):
    return y + max(b + x + y, 0) - max(a + x + y, 0), x + max(a + x + y, 0) - max(b + x + y, 0)


def _hand_H_IIIA(a, b, x, y):
    return y - a + max(a + x, b + y) - max(x, y), x - b + max(a + x, b + y) - max(x, y)


def test_H_IIIB_text():
    t = ultradiscretize(make_family("H_IIIB"))
    assert t.U == Y + TropExpr.maximum([B + X + Y, TropExpr()]) - TropExpr.maximum([A + X + Y, TropExpr()])
    assert t.params == ("A", "B")


@given(ints, ints, ints, ints)
def test_matches_hand_limits(a, b, x, y):
    assert trop_eval(ultradiscretize(make_family("H_IIIB")), (a, b), (x, y)) == _hand_H_IIIB(a, b, x, y)
    assert trop_eval(ultradiscretize(make_family("H_IIIA")), (a, b), (x, y)) == _hand_H_IIIA(a, b, x, y)


@pytest.mark.parametrize("fid", FAMS)
def test_trop_yb(fid):
    cert = trop_yb_check(ultradiscretize(make_family(fid)), samples=10_000, seed=0, rng_range=1000)
    assert cert.verdict and cert.samples == 10_000


@pytest.mark.parametrize("fid", FAMS)
def test_trop_involution(fid):
    assert trop_involution_check(ultradiscretize(make_family(fid)), samples=2000, seed=5).verdict


@pytest.mark.parametrize("fid", FAMS)
def test_equal_parameters_swap(fid):
    assert equal_parameter_form(ultradiscretize(make_family(fid))) == (Y, X)


@pytest.mark.parametrize("fid", FAMS)
def test_degeneration(fid):
    cert = degeneration_check(make_family(fid), cases=100, seed=0)
    assert cert.verdict and cert.samples >= 100


@pytest.mark.parametrize("fid", ["F_V", "H_I", "FV_NEG", "F_I"])
def test_not_subtraction_free(fid):
    with pytest.raises(NotSubtractionFree):
        ultradiscretize(make_family(fid))


def test_mutation_is_detected():
    t = ultradiscretize(make_family("H_IIIA"))
    # swap the roles of A and B in U only
    bad = TropMap(t.U.subs({"A": B, "B": A}), t.V, t.params, "mutant")
    cert = trop_yb_check(bad, samples=10_000, seed=0)
    assert not cert.verdict and cert.witness["lhs"] != cert.witness["rhs"]


def test_common_part_extraction():
    e = TropExpr.maximum([X + A, Y + A])
    assert e.lin.get("A") == 1 and len(e.maxima()) == 1
    assert TropExpr.maximum([X + A + A, X + A + A]) == X + A + A
    assert e - e == TropExpr()
    with pytest.raises(ValueError):
        TropExpr.maximum([e, X])
    assert isinstance(e.maxima()[0], Max)


@settings(max_examples=50)
@given(ints, ints, ints)
def test_eval_of_max(a, x, y):
    e = TropExpr.maximum([X + A, Y]) - Y
    assert e.eval({"A": a, "X": x, "Y": y}) == max(x + a, y) - y


def test_random_integer_points_stable():
    t = ultradiscretize(make_family("H_Iplus"))
    rng = random.Random(0)
    for _ in range(200):
        a, b, x, y = (rng.randint(-50, 50) for _ in range(4))
        assert t((a, b), t((a, b), (x, y))) == (x, y)


# -- the singular limit chain between the subtraction-free families ----------------

eps = sp.Symbol("epsilon", positive=True)
x, y, a, b, SA, SB = (SYMS[n] for n in ("x", "y", "alpha", "beta", "A", "B"))


def _lim(e):
    return sp.limit(sp.together(e), eps, 0)


def test_limit_H_Iplus_to_H_IIplus():
    pos = make_family("H_Iplus").positive
    target = make_family("H_IIplus")
    for f, g in ((pos.u, target.u), (pos.v, target.v)):
        e = to_sympy(f).subs({SA: eps * a, SB: eps * b})
        assert sym_equal(_lim(e), to_sympy(g))


def test_limit_H_IIplus_to_H_IIIA():
    src, target = make_family("H_IIplus"), make_family("H_IIIA")
    for f, g in ((src.u, target.u), (src.v, target.v)):
        e = eps * to_sympy(f).subs({x: x / eps, y: y / eps}, simultaneous=True)
        assert sym_equal(_lim(e), to_sympy(g))
