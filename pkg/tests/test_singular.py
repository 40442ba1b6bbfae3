import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALL_FAMILIES, quadruples
from quadyb.algebra import var
from quadyb.catalog import YBMap, make_family
from quadyb.construct import build_map, klein_pair, random_quadruple
from quadyb.errors import DegenerateSingularity, NotAdmissible
from quadyb.projective import INF, KLEIN, KleinPerm, Moebius, PPoint, Quadruple, SymPoint, permute
from quadyb.singular import (
    ParamPair, SingularSet, inverse_singular_set, lambda_pi_membership, quadrirationality_check,
    singular_set, singularity_analysis, singularity_invariance, verify_singular_set,
)

al, be = var("alpha"), var("beta")
GENERIC = ["F_I", "H_I", "H_I2", "H_Iplus"]


def _pts(pairs):
    return SingularSet(tuple((SymPoint.of(p) if not hasattr(p, "num") else SymPoint(p),
                              SymPoint.of(q) if not hasattr(q, "num") else SymPoint(q)) for p, q in pairs))


def test_F_I_singular_set():
    s = singular_set(make_family("F_I"))
    want = _pts([(INF, INF), (PPoint(1), PPoint(1)), (PPoint(0), PPoint(0)), (al, be)])
    assert s.matching(want) == (0, 1, 2, 3)
    assert s.to_text() == [["inf", "inf"], ["1", "1"], ["0", "0"], ["alpha", "beta"]]
    assert singularity_invariance(make_family("F_I")) is KleinPerm.Id


def test_H_I_singular_set():
    m = make_family("H_I")
    s = singular_set(m)
    assert s.to_text() == [["inf", "0"], ["1", "beta"], ["0", "inf"], ["alpha", "1"]]
    inv = inverse_singular_set(m)
    assert inv.to_text() == [["0", "inf"], ["alpha", "1"], ["inf", "0"], ["1", "beta"]]
    assert singularity_invariance(m) is KleinPerm.rho3


def test_variant_permutations():
    assert singularity_invariance(make_family("H_I2")) is KleinPerm.rho1
    assert singularity_invariance(make_family("H_Iplus")) is KleinPerm.rho3


@pytest.mark.parametrize("fid", ["F_II", "F_III", "F_IV", "F_V", "H_II", "H_IIIA", "H_IIIB", "H_V",
                                 "H_IIplus", "FV_NEG"])
def test_non_generic_families(fid):
    with pytest.raises(DegenerateSingularity):
        singular_set(make_family(fid))


def test_F_V_equal_parameters():
    with pytest.raises(DegenerateSingularity):
        singular_set(make_family("F_V"), params=(2, 2))


def test_verify_candidates():
    F = make_family("F_I")
    known = _pts([(INF, INF), (PPoint(1), PPoint(1)), (PPoint(0), PPoint(0)), (al, be)])
    assert verify_singular_set(F, known)
    bad = [(PPoint(0), PPoint(1)), (PPoint(1), PPoint(1)), (PPoint(0), PPoint(0)), (INF, INF)]
    assert not verify_singular_set(F, bad)
    with pytest.raises(DegenerateSingularity):
        SingularSet(((INF, INF), (INF, INF), (PPoint(0), PPoint(0)), (PPoint(1), PPoint(1))))


@pytest.mark.parametrize("fid", GENERIC)
def test_round_trip(fid):
    m = make_family(fid)
    assert verify_singular_set(m, singular_set(m))


def test_numeric_parameters():
    s = singular_set(make_family("F_I"), params=(2, 3))
    assert s.to_text() == [["inf", "inf"], ["1", "1"], ["0", "0"], ["2", "3"]]
    d = singularity_analysis(make_family("H_I"), params={"alpha": 5, "beta": Fraction(1, 2)})
    assert d.klein is KleinPerm.rho3 and d.sigma.to_text()[1] == ["1", "1/2"]


def test_lambda_pi_membership():
    a = PPoint(7)
    X = Quadruple([INF, 1, 0, a])
    assert lambda_pi_membership((X, X)) is KleinPerm.Id
    assert lambda_pi_membership((X, Quadruple([0, a, INF, 1]))) is KleinPerm.rho3
    # (2134) changes the cross-ratio unless alpha is a fixed point of q -> q/(q-1)
    with pytest.raises(NotAdmissible):
        lambda_pi_membership((X, Quadruple([1, INF, 0, a])))
    # at alpha = 2 the reordering is admissible but outside the Klein group
    X2 = Quadruple([INF, 1, 0, 2])
    assert lambda_pi_membership((X2, Quadruple([1, INF, 0, 2]))) is None


def test_quadrirationality():
    for fid in ALL_FAMILIES:
        assert quadrirationality_check(make_family(fid)), fid
    x = var("x")
    assert not quadrirationality_check(YBMap(x, x, params=()))


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(KLEIN))
def test_built_maps_recover_pi(seed, p):
    rng = random.Random(seed)
    X, Y = random_quadruple(rng, 30), random_quadruple(rng, 30)
    m = build_map(klein_pair(X, p), klein_pair(Y, p))
    got = singularity_invariance(m)
    assert got is p
    assert got in KLEIN


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_built_singular_set_round_trip(seed):
    rng = random.Random(seed)
    X, Y = random_quadruple(rng, 30), random_quadruple(rng, 30)
    s = Moebius(2, 1, 1, 3)
    lam, mu = (X, s.apply_quadruple(X)), (Y, Y)
    m = build_map(lam, mu)
    want = SingularSet(tuple(zip(X, Y)))
    assert singular_set(m).same_set(want)
    # U is not a Klein permutation of X: the inverse singular set differs
    if lambda_pi_membership(lam) is None:
        assert singularity_invariance(m) is None


def test_param_pair_admissibility():
    with pytest.raises(NotAdmissible):
        ParamPair(Quadruple([INF, 1, 0, 2]), Quadruple([INF, 1, 0, 3]))


@given(quadruples())
def test_klein_membership_of_permuted(X):
    for pi in KLEIN:
        got = lambda_pi_membership((X, permute(pi, X)))
        assert got is not None and permute(got, X) == permute(pi, X)
