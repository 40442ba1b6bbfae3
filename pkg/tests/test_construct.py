import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadyb.catalog import make_family
from quadyb.construct import (
    SweepConfig, build_map, cube_consistency_check, cube_edges, family_map, klein_pair, mixed_perm_triples,
    random_quadruple, random_triple, theorem1_check, theorem1_sweep, transpose,
)
from quadyb.engine import map_equal
from quadyb.errors import SingularPoint
from quadyb.projective import INF, KleinPerm, Moebius, PPoint, Quadruple, canonical_moebius, cross_ratio
from quadyb.singular import SingularSet, singular_set

PARAMS = [(Fraction(2), Fraction(5)), (Fraction(-3, 4), Fraction(7)), (Fraction(11, 3), Fraction(-2))]


def _X(a):
    return Quadruple([INF, 1, 0, a])


@pytest.mark.parametrize("a,b", PARAMS)
def test_build_F_I(a, b):
    m = build_map((_X(a), _X(a)), (_X(b), _X(b)))
    assert map_equal(m, make_family("F_I").specialize((a, b)))


@pytest.mark.parametrize("a,b", PARAMS)
def test_build_H_I(a, b):
    Xa, Xb = _X(a), _X(b)
    rho = KleinPerm.rho3
    m = build_map(klein_pair(Xa, rho), transpose(klein_pair(Xb, rho)))
    assert map_equal(m, make_family("H_I").specialize((a, b)))
    assert map_equal(family_map(klein_pair(Xa, rho), klein_pair(Xb, rho)), m)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_build_is_conjugate_of_F_I(seed):
    rng = random.Random(seed)
    X, Y = random_quadruple(rng, 20), random_quadruple(rng, 20)
    m = build_map((X, X), (Y, Y))
    F = make_family("F_I").specialize((cross_ratio(X), cross_ratio(Y)))
    s, t = canonical_moebius(X), canonical_moebius(Y)
    fm, Fn = m.numeric(), F.numeric()
    checked = 0
    for k in range(5):
        px, py = X[k % 4], Y[(k + 1) % 4]
        # points off the singular set: shift by a Moebius step
        px, py = Moebius(1, k + 2, 0, 1)(px), Moebius(1, -k - 3, 0, 1)(py)
        try:
            u, v = fm(px, py)
            uu, vv = Fn(s(px), t(py))
        except SingularPoint:
            continue
        assert (s(u), t(v)) == (uu, vv)
        checked += 1
    assert checked


def test_inverse_attached():
    rng = random.Random(4)
    X, Y = random_quadruple(rng), random_quadruple(rng)
    lam = (X, Moebius(1, 2, 3, 5).apply_quadruple(X))
    m = build_map(lam, (Y, Y))
    step, back = m.numeric(), m.inverse.numeric()
    for px, py in [(Fraction(1, 7), Fraction(3)), (Fraction(-2), Fraction(9, 4))]:
        P, Q = PPoint(px), PPoint(py)
        assert back(*step(P, Q)) == (P, Q)
    assert singular_set(m).same_set(SingularSet(tuple(zip(X, Y))))


def test_random_triple_distinct():
    Xs = random_triple(random.Random(1))
    assert len({cross_ratio(X) for X in Xs}) == 3


@pytest.mark.parametrize("pi", list(KleinPerm))
def test_yb_for_triples_in_one_lambda_pi(pi):
    Xs = random_triple(random.Random(str(pi)), 30)
    cert = theorem1_check([klein_pair(X, pi) for X in Xs], samples=100, seed=3)
    assert cert.verdict


def test_yb_fails_for_mixed_triples():
    Xs = random_triple(random.Random(9), 30)
    perms = (KleinPerm.Id, KleinPerm.rho1, KleinPerm.rho3)
    cert = theorem1_check([klein_pair(X, p) for X, p in zip(Xs, perms)], samples=100, seed=3)
    assert not cert.verdict and cert.witness["lhs"] != cert.witness["rhs"]


def test_mixed_triples_enumeration():
    assert len(mixed_perm_triples()) == 64 - 4


def test_sweep():
    res = theorem1_sweep(SweepConfig(cases=10, samples=100, seed=0))
    assert len(res.cases) == 4 * 10 + 40
    assert res.false_verdicts == 0
    assert all(c.witness for c in res.cases if not c.expected)


def test_cube_edges():
    X, Y, Z = (_X(v) for v in (2, 3, 5))
    E = cube_edges(X, Y, Z, "rho1", "rho1", "rho1")
    assert E["X23"] == X and E["X2"] == E["X3"]


@pytest.mark.parametrize("pi", list(KleinPerm))
def test_cube_same_pi(pi):
    X, Y, Z = random_triple(random.Random(20), 30)
    rep = cube_consistency_check(X, Y, Z, pi, pi, pi, seed=1, samples=100)
    assert rep.consistent and rep.identified and rep.yb
    assert rep.to_dict()["witness"] is None


def test_cube_mixed_pi():
    X, Y, Z = random_triple(random.Random(21), 30)
    rep = cube_consistency_check(X, Y, Z, "Id", "rho2", "rho2", seed=1, samples=100)
    assert not rep.identified and not rep.yb and rep.witness is not None
