"""Maps built from quadruple data by Moebius conjugation of F_I, and the
cube and singularity-invariance YB checks on them."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .algebra import RatFun, ratfun_subst
from .catalog import YBMap, make_family
from .engine import Certificate, _sample_rng, sample_rational, yb_check_numeric
from .errors import SampleExhaustion, SingularPoint
from .projective import KleinPerm, PPoint, Quadruple, canonical_moebius, cross_ratio, permute
from .singular import ParamPair


def _conjugated(F: YBMap, s_in, t_in, s_out, t_out) -> tuple[RatFun, RatFun]:
    x, y = s_in.as_ratfun("x"), t_in.as_ratfun("y")
    cache: dict = {}
    u = ratfun_subst(F.u, {"x": x, "y": y}, cache)
    v = ratfun_subst(F.v, {"x": x, "y": y}, cache)
    return s_out.on(u).normalized(), t_out.on(v).normalized()


def build_map(lam, mu, name: str = "") -> YBMap:
    """F(lambda, mu) = s_U^-1 x t_V^-1 o F_I(q(X), q(Y)) o s_X x t_Y.

    Singular at (x_i, y_i); its inverse (attached) is singular at (u_i, v_i).
    """
    lam, mu = ParamPair.of(lam), ParamPair.of(mu)
    a, b = cross_ratio(lam.X), cross_ratio(mu.X)
    F = make_family("F_I").specialize((a, b))
    sX, tY = canonical_moebius(lam.X), canonical_moebius(mu.X)
    sU, tV = canonical_moebius(lam.U), canonical_moebius(mu.U)
    u, v = _conjugated(F, sX, tY, sU.inverse(), tV.inverse())
    ui, vi = _conjugated(F, sU, tV, sX.inverse(), tY.inverse())
    data = {"lambda": lam, "mu": mu}
    label = name or f"F(({lam.X.to_text()};{lam.U.to_text()}),({mu.X.to_text()};{mu.U.to_text()}))"
    inverse = YBMap(ui, vi, params=(), name=f"inv {label}", data={"lambda": ParamPair(lam.U, lam.X), "mu": ParamPair(mu.U, mu.X)})
    return YBMap(u, v, params=(), name=label, inverse=inverse, data=data)


def klein_pair(X, pi) -> ParamPair:
    """The element (X, X^pi) of Lambda_pi."""
    X = Quadruple(X)
    return ParamPair(X, permute(KleinPerm.parse(pi), X))


def random_quadruple(rng: random.Random, bound: int = 50) -> Quadruple:
    pts: list[PPoint] = []
    while len(pts) < 4:
        p = PPoint(sample_rational(rng, bound)) if rng.random() > 0.1 else PPoint(1, 0)
        if p not in pts:
            pts.append(p)
    return Quadruple(pts)


def random_triple(rng: random.Random, bound: int = 50) -> tuple[Quadruple, Quadruple, Quadruple]:
    """Three quadruples with pairwise distinct cross-ratios."""
    while True:
        Xs = [random_quadruple(rng, bound) for _ in range(3)]
        qs = {cross_ratio(X) for X in Xs}
        if len(qs) == 3:
            return Xs[0], Xs[1], Xs[2]


def transpose(lam) -> ParamPair:
    """(X, U) -> (U, X); stays in the same Lambda_pi since pi is an involution."""
    lam = ParamPair.of(lam)
    return ParamPair(lam.U, lam.X)


def family_map(lam, mu, name: str = "") -> YBMap:
    """R(lambda, mu) = F(lambda, mu^T).

    The second factor carries its data with input and output exchanged: e.g.
    H_I(alpha, beta) is F((X_a, X_a^rho), (X_b^rho, X_b)) with
    X_a = (inf, 1, 0, alpha).
    """
    return build_map(lam, transpose(mu), name)


def theorem1_check(lams: Sequence, samples: int = 100, seed: int = 0, bound: int = 10 ** 6) -> Certificate:
    """YB for R_ij = R(lambda_i, lambda_j) at seeded rational points."""
    l1, l2, l3 = (ParamPair.of(l) for l in lams)
    maps = (family_map(l1, l2, "R12"), family_map(l1, l3, "R13"), family_map(l2, l3, "R23"))
    return yb_check_numeric(maps, samples=samples, seed=seed, bound=bound)


@dataclass
class CubeReport:
    """Outcome of a cube check.

    ``consistent``: the six face maps agree along both paths of the cube.
    ``identified``: each parameter reads the same on both of its edges at the
    initial vertex (X2 = X3, Y1 = Y3, Z1 = Z2).
    ``yb``: the family maps R(lambda_i, lambda_j) with lambda_1 = (X, X2),
    lambda_2 = (Y, Y3), lambda_3 = (Z, Z1) satisfy the YB relation.
    """

    consistent: bool
    identified: bool
    yb: bool
    faces: dict
    witness: dict | None = None
    seed: int = 0
    samples: int = 0

    def __bool__(self):
        return self.yb

    def to_dict(self) -> dict:
        return {
            "consistent": self.consistent,
            "identified": self.identified,
            "yb": self.yb,
            "faces": self.faces,
            "witness": self.witness,
            "seed": self.seed,
            "samples": self.samples,
        }


def cube_edges(X, Y, Z, pi1, pi2, pi3) -> dict[str, Quadruple]:
    """Edge quadruples of the cube from the relations between opposite faces."""
    p1, p2, p3 = (KleinPerm.parse(p) for p in (pi1, pi2, pi3))
    X, Y, Z = Quadruple(X), Quadruple(Y), Quadruple(Z)
    P = lambda Q, *ps: permute(_prod(ps), Q)  # noqa: E731
    return {
        "X": X, "X2": P(X, p2), "X3": P(X, p3), "X23": P(X, p2, p3),
        "Y": Y, "Y1": P(Y, p1), "Y3": P(Y, p3), "Y13": P(Y, p1, p3),
        "Z": Z, "Z1": P(Z, p1), "Z2": P(Z, p2), "Z12": P(Z, p1, p2),
    }


def _prod(ps):
    out = KleinPerm.Id
    for p in ps:
        out = out * p
    return out


def _faces(E: dict) -> dict[str, YBMap]:
    F = lambda a, b, c, d: build_map((E[a], E[b]), (E[c], E[d]), f"{a}{c}")  # noqa: E731
    return {
        # (x, y) -> (x2, y1), (x2, z) -> (x23, z1), (y1, z1) -> (y13, z12)
        "bottom": F("X", "X2", "Y", "Y1"),
        "back": F("X2", "X23", "Z", "Z1"),
        "left": F("Y1", "Y13", "Z1", "Z12"),
        # (y, z) -> (y3, z2), (x, z2) -> (x3, z12), (x3, y3) -> (x23, y13)
        "right": F("Y", "Y3", "Z", "Z2"),
        "front": F("X", "X3", "Z2", "Z12"),
        "top": F("X3", "X23", "Y3", "Y13"),
    }


def _paths(faces: dict, pt):
    x, y, z = pt
    f = {k: m.numeric() for k, m in faces.items()}
    x2, y1 = f["bottom"](x, y)
    x23, z1 = f["back"](x2, z)
    y13, z12 = f["left"](y1, z1)
    y3, z2 = f["right"](y, z)
    x3, z12b = f["front"](x, z2)
    x23b, y13b = f["top"](x3, y3)
    return (x23, y13, z12), (x23b, y13b, z12b)


def cube_consistency_check(X, Y, Z, pi1, pi2, pi3, seed: int = 0, samples: int = 100,
                           bound: int = 10 ** 6, max_attempts: int = 20) -> CubeReport:
    E = cube_edges(X, Y, Z, pi1, pi2, pi3)
    faces = _faces(E)
    consistent, witness = True, None
    for idx in range(samples):
        for attempt in range(max_attempts):
            rng = _sample_rng(seed, idx, attempt)
            pt = tuple(PPoint(sample_rational(rng, bound)) for _ in range(3))
            try:
                lhs, rhs = _paths(faces, pt)
            except SingularPoint:
                continue
            break
        else:
            raise SampleExhaustion(f"no regular sample found for index {idx}")
        if lhs != rhs:
            consistent = False
            witness = {"point": [p.to_text() for p in pt],
                       "lhs": [p.to_text() for p in lhs], "rhs": [p.to_text() for p in rhs]}
            break
    identified = E["X2"] == E["X3"] and E["Y1"] == E["Y3"] and E["Z1"] == E["Z2"]
    lams = ((E["X"], E["X2"]), (E["Y"], E["Y3"]), (E["Z"], E["Z1"]))
    cert = theorem1_check(lams, samples=samples, seed=seed, bound=bound)
    if witness is None and cert.witness is not None:
        witness = cert.witness
    return CubeReport(consistent, identified, cert.verdict, {k: m.name for k, m in faces.items()},
                      witness, seed, samples)


@dataclass
class SweepConfig:
    cases: int = 10
    samples: int = 100
    seed: int = 0
    bound: int = 50


@dataclass
class SweepCase:
    perms: tuple[str, str, str]
    quadruples: tuple[str, str, str]
    expected: bool
    verdict: bool
    witness: dict | None = None

    @property
    def ok(self) -> bool:
        return self.expected == self.verdict


@dataclass
class SweepResult:
    config: SweepConfig
    cases: list[SweepCase] = field(default_factory=list)

    @property
    def false_verdicts(self) -> int:
        return sum(not c.ok for c in self.cases)


def mixed_perm_triples():
    """All (pi1, pi2, pi3) in K^3 that are not constant."""
    return [t for t in product(KleinPerm, repeat=3) if len(set(t)) > 1]


def theorem1_sweep(cfg: SweepConfig = SweepConfig()) -> SweepResult:
    """Random triples in one Lambda_pi (for each pi) and mixed triples."""
    res = SweepResult(cfg)
    rng = random.Random(cfg.seed)
    mixed = mixed_perm_triples()
    plan = [(p, p, p) for p in KleinPerm for _ in range(cfg.cases)]
    plan += [mixed[rng.randrange(len(mixed))] for _ in range(cfg.cases * 4)]
    for k, perms in enumerate(plan):
        Xs = random_triple(rng, cfg.bound)
        lams = [klein_pair(X, p) for X, p in zip(Xs, perms)]
        cert = theorem1_check(lams, samples=cfg.samples, seed=cfg.seed * 100003 + k)
        res.cases.append(SweepCase(
            tuple(p.name for p in perms), tuple(X.to_text() for X in Xs),
            expected=len(set(perms)) == 1, verdict=cert.verdict, witness=cert.witness,
        ))
    return res
