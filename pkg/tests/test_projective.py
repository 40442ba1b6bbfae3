from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import ppoints, quadruples, rationals
from quadyb.errors import DegenerateQuadruple
from quadyb.projective import (
    INF, KLEIN, KleinPerm, Moebius, PPoint, Quadruple, canonical_moebius, cross_ratio,
    cross_ratio_preserving, moebius_relating, permute,
)


def _affine_cr(xs):
    x1, x2, x3, x4 = xs
    return (x1 - x2) * (x3 - x4) / ((x2 - x3) * (x4 - x1))


moebii = st.tuples(*[st.integers(-9, 9)] * 4).filter(lambda t: t[0] * t[3] - t[1] * t[2] != 0).map(
    lambda t: Moebius(*t))


def test_ppoint_text():
    assert PPoint(-2, 4).to_text() == "-1/2"
    assert PPoint(3, -6) == PPoint(Fraction(-1, 2))
    assert INF.to_text() == "inf" and PPoint.parse("inf") == PPoint(5, 0)
    assert PPoint.parse("-1").to_text() == "-1"
    with pytest.raises(ValueError):
        PPoint(0, 0)


def test_cross_ratio_examples():
    for a in (2, Fraction(-3, 7), 11):
        assert cross_ratio([INF, 1, 0, a]) == a
    assert cross_ratio([0, 1, 2, 3]) == Fraction(-1, 3)
    assert cross_ratio([0, 1, 2, 3]) == _affine_cr([Fraction(v) for v in (0, 1, 2, 3)])
    with pytest.raises(DegenerateQuadruple):
        cross_ratio([0, 1, 1, 3])


@given(st.lists(rationals, min_size=4, max_size=4, unique=True))
def test_cross_ratio_affine_oracle(xs):
    assert cross_ratio([PPoint(v) for v in xs]) == _affine_cr(xs)


def test_canonical_examples():
    assert canonical_moebius([INF, 1, 0, 5]) == Moebius.identity()
    s = canonical_moebius([0, 1, INF, 4])
    assert s(PPoint(0)) == INF and s(PPoint(1)) == PPoint(1) and s(INF) == PPoint(0)
    # the three conditions force x -> 1/x
    assert s == Moebius(0, 1, 1, 0)


def test_moebius_examples():
    s = Moebius(0, 2, 1, 0)
    assert s(INF) == PPoint(0)
    assert (s @ s.inverse()) == Moebius.identity()
    X = Quadruple([INF, 1, 0, 2])
    assert moebius_relating(X, X) == Moebius.identity()
    assert moebius_relating(X, Quadruple([0, 2, INF, 1])) == s
    assert moebius_relating(X, Quadruple([INF, 1, 0, 3])) is None


def test_permute_examples():
    a = PPoint(7)
    X = Quadruple([INF, 1, 0, a])
    assert permute(KleinPerm.rho3, X) == Quadruple([0, a, INF, 1])
    assert permute(KleinPerm.Id, X) == X


def test_klein_group():
    for p in KLEIN:
        assert p * p == KleinPerm.Id
        for q in KLEIN:
            assert p * q in KLEIN
    assert sorted(cross_ratio_preserving()) == sorted(p.value for p in KLEIN)


@given(quadruples(), moebii)
def test_cross_ratio_moebius_invariant(X, s):
    assert cross_ratio(s.apply_quadruple(X)) == cross_ratio(X)


@given(quadruples())
def test_cross_ratio_klein_invariant(X):
    q = cross_ratio(X)
    for pi in KLEIN:
        assert cross_ratio(permute(pi, X)) == q
        assert permute(pi, permute(pi, X)) == X
        assert moebius_relating(X, permute(pi, X)) is not None


@given(quadruples())
def test_canonical_normalization(X):
    s = canonical_moebius(X)
    assert s.apply_quadruple(X) == Quadruple([INF, 1, 0, cross_ratio(X)])


@given(quadruples())
def test_non_klein_perms_change_cross_ratio_generically(X):
    q = cross_ratio(X)
    # q is fixed by a non-Klein permutation only at special values
    assume(q not in (-1, 2, Fraction(1, 2)) and q * q - q + 1 != 0)
    for p in permutations(range(4)):
        if p not in [k.value for k in KLEIN]:
            assert cross_ratio(permute(p, X)) != q


@given(ppoints, moebii)
def test_inverse_action(P, s):
    assert s.inverse()(s(P)) == P
