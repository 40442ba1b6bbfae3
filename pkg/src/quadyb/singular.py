"""Singular sets of quadrirational maps and the singularity permutation.

A map of the shape u = (a(y) x + b(y)) / (c(y) x + d(y)) is singular at the
roots y_i of r(y) = a d - b c.  On the line y = y_i the matrix has rank one,
so u is constant there (the value u_i), except at the single point x_i where
numerator and denominator both vanish.  The same analysis of v in x gives
v_i on the line x = x_i, and the inverse map is singular at Q_i = (u_i, v_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import Poly, RatFun, X, Y, factor_poly
from .catalog import YBMap, _linfrac, check_shape, companion
from .engine import _apply, _compare, involution_check
from .errors import DegenerateSingularity, NotAdmissible, NotLinearFractional, UnresolvedSingularity
from .projective import KleinPerm, PPoint, Quadruple, SymPoint, moebius_relating, permute

Pair = tuple[SymPoint, SymPoint]


def _sympt(v) -> SymPoint:
    if isinstance(v, SymPoint):
        return v
    if isinstance(v, RatFun):
        return SymPoint(v)
    if isinstance(v, Poly):
        return SymPoint(RatFun(v))
    return SymPoint.of(v)


def _pair_eq(a: Pair, b: Pair) -> bool:
    return a[0] == b[0] and a[1] == b[1]


@dataclass(frozen=True)
class SingularSet:
    """Four pairwise distinct points of CP^1 x CP^1, in a fixed order."""

    points: tuple[Pair, ...]

    def __post_init__(self):
        pts = tuple((_sympt(p), _sympt(q)) for p, q in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) != 4:
            raise ValueError(f"a singular set has 4 points, got {len(pts)}")
        for i in range(4):
            for j in range(i):
                if _pair_eq(pts[i], pts[j]):
                    raise DegenerateSingularity("singular points collide")

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return 4

    def __getitem__(self, i):
        return self.points[i]

    def matching(self, other: "SingularSet") -> tuple[int, ...] | None:
        """The images ``pi`` with ``other[i] == self[pi(i)]``, if the sets agree."""
        img = []
        for q in other:
            hit = [j for j, p in enumerate(self.points) if _pair_eq(p, q)]
            if not hit:
                return None
            img.append(hit[0])
        return tuple(img) if len(set(img)) == 4 else None

    def same_set(self, other: "SingularSet") -> bool:
        return self.matching(other) is not None

    def to_text(self) -> list[list[str]]:
        return [[p.to_text(), q.to_text()] for p, q in self.points]


@dataclass(frozen=True)
class ParamPair:
    """An admissible parameter lambda = (X, U): U is a Moebius image of X."""

    X: Quadruple
    U: Quadruple

    def __post_init__(self):
        object.__setattr__(self, "X", Quadruple(self.X))
        object.__setattr__(self, "U", Quadruple(self.U))
        if moebius_relating(self.X, self.U) is None:
            raise NotAdmissible("no Moebius map sends X to U (cross-ratios differ)")

    @classmethod
    def of(cls, lam) -> "ParamPair":
        return lam if isinstance(lam, ParamPair) else cls(*lam)


# -- degenerate lines ---------------------------------------------------------

def _hom(p: Poly, v, deg: int, P: SymPoint) -> RatFun:
    """Bihomogenize ``p`` in ``v`` to degree ``deg`` and evaluate at [P.p : P.q]."""
    tot = RatFun(Poly())
    for k, c in p.coeffs_in(v).items():
        tot = tot + RatFun(c) * P.p ** k * P.q ** (deg - k)
    return tot


def _roots(r: Poly, v, deg: int) -> list[tuple[SymPoint, int]]:
    """Roots in CP^1 of the binary form of degree ``deg`` given by ``r``."""
    if r.is_zero():
        raise DegenerateSingularity("the determinant vanishes identically")
    _, facs = factor_poly(r)
    out, found = [], 0
    for f, k in facs:
        dv = f.degree_in(v)
        if dv <= 0:
            continue
        if dv > 1:
            raise UnresolvedSingularity(f"irreducible factor of degree {dv}: {f.to_text()}")
        cf = f.coeffs_in(v)
        out.append((SymPoint(RatFun(-cf.get(0, Poly()) if 0 in cf else Poly()), RatFun(cf[1])), k))
        found += k
    if deg > found:
        out.append((SymPoint(1, 0), deg - found))
    return out


def _lines(f: RatFun, lin, coef) -> list[tuple[SymPoint, SymPoint, SymPoint]]:
    """(coef root t_i, singular lin-coordinate s_i, constant value f_i)."""
    try:
        a, b, c, d = _linfrac(f, lin)
    except NotLinearFractional as exc:
        raise DegenerateSingularity(str(exc)) from None
    deg = max(max(p.degree_in(coef) for p in (a, b, c, d)), 0)
    out = []
    for t, k in _roots(a * d - b * c, coef, 2 * deg):
        if k > 1:
            raise DegenerateSingularity(f"repeated singular line at {t}")
        ai, bi, ci, di = (_hom(p, coef, deg, t) for p in (a, b, c, d))
        if ai.is_zero() and bi.is_zero():
            if ci.is_zero() and di.is_zero():
                raise DegenerateSingularity(f"the whole line at {t} is singular")
            s = SymPoint(-di, ci)
        else:
            s = SymPoint(-bi, ai)
        val = SymPoint(ai, ci) if not (ai.is_zero() and ci.is_zero()) else SymPoint(bi, di)
        out.append((t, s, val))
    return out


def _order_key(p: SymPoint, text: str):
    for rank, ref in enumerate((PPoint(1, 0), PPoint(1), PPoint(0))):
        if p == ref:
            return (rank, "")
    return (3, text)


def _prepare(m: YBMap, params) -> YBMap:
    check_shape(m)
    if params is not None and m.params:
        if isinstance(params, Mapping):
            params = [params[p] for p in m.params]
        m = m.specialize(params)
    return m


def _bidegree(f: RatFun) -> tuple[int, int]:
    return max(f.degree_in(X), 0), max(f.degree_in(Y), 0)


def _vanishes(m: YBMap, P: Pair) -> bool:
    for f in (m.u, m.v):
        dx, dy = _bidegree(f)
        for p in (f.num, f.den):
            tot = RatFun(Poly())
            for i, pi in p.coeffs_in(X).items():
                tot = tot + _hom(pi, Y, dy, P[1]) * P[0].p ** i * P[0].q ** (dx - i)
            if not tot.is_zero():
                return False
    return True


@dataclass(frozen=True)
class SingularityData:
    sigma: SingularSet
    sigma_inv: SingularSet | None
    images: tuple[int, ...] | None

    @property
    def klein(self) -> KleinPerm | None:
        return KleinPerm.from_images(self.images) if self.images is not None else None


def _analyse(m: YBMap, params=None, x_order: Sequence | None = None) -> SingularityData:
    m = _prepare(m, params)
    ulines = _lines(m.u, X, Y)     # (y_i, x_i, u_i)
    vlines = _lines(m.v, Y, X)     # (x_j, y_j, v_j)
    P = [(s, t) for t, s, _ in ulines]
    for pt in P:
        if not _vanishes(m, pt):
            raise UnresolvedSingularity(f"({pt[0]}, {pt[1]}) is not a common zero")
    if x_order is not None:
        order = []
        for x in x_order:
            hit = [i for i, p in enumerate(P) if p[0] == _sympt(x) and i not in order]
            if not hit:
                raise ValueError(f"no singular point with x = {x}")
            order.append(hit[0])
    else:
        texts = [p[0].to_text() + "|" + p[1].to_text() for p in P]
        order = sorted(range(4), key=lambda i: _order_key(P[i][0], texts[i]))
    sigma = SingularSet(tuple(P[i] for i in order))
    Q = []
    for i in order:
        y_i, x_i, u_i = ulines[i]
        hit = [v for xj, yj, v in vlines if xj == x_i and yj == y_i]
        if not hit:
            return SingularityData(sigma, None, None)
        Q.append((u_i, hit[0]))
    try:
        sigma_inv = SingularSet(tuple(Q))
    except DegenerateSingularity:
        return SingularityData(sigma, None, None)
    return SingularityData(sigma, sigma_inv, sigma.matching(sigma_inv))


def singular_set(m: YBMap, params=None, x_order: Sequence | None = None) -> SingularSet:
    """Sigma(F), ordered by x-coordinate (inf, 1, 0 first) or by ``x_order``."""
    return _analyse(m, params, x_order).sigma


def inverse_singular_set(m: YBMap, params=None, x_order: Sequence | None = None) -> SingularSet | None:
    """Sigma(F^-1) = {(u_i, v_i)}, indexed like ``singular_set``."""
    return _analyse(m, params, x_order).sigma_inv


def verify_singular_set(m: YBMap, candidate, params=None) -> bool:
    m = _prepare(m, params)
    try:
        cand = candidate if isinstance(candidate, SingularSet) else SingularSet(tuple(candidate))
    except (ValueError, DegenerateSingularity):
        return False
    return all(_vanishes(m, p) for p in cand)


def _x_order(m: YBMap):
    data = m.data
    if isinstance(data, Mapping) and "lambda" in data:
        return data["lambda"].X
    return None


def singularity_analysis(m: YBMap, params=None, x_order: Sequence | None = None) -> SingularityData:
    if x_order is None:
        x_order = _x_order(m)
    return _analyse(m, params, x_order)


def singularity_invariance(m: YBMap, params=None, x_order: Sequence | None = None) -> KleinPerm | None:
    """The Klein permutation pi with Q_i = P_{pi(i)}, or None."""
    return singularity_analysis(m, params, x_order).klein


def lambda_pi_membership(lam) -> KleinPerm | None:
    """The pi in K with U = X^pi, if any."""
    lam = ParamPair.of(lam)
    for pi in KleinPerm:
        if permute(pi, lam.X) == lam.U:
            return pi
    return None


def _companion_inverse(m: YBMap) -> YBMap:
    """(u, y) -> (x, v), written in the variables (x, y)."""
    a, b, c, d = _linfrac(m.u, X)
    t = Poly.var(X)
    x_of = RatFun(b - t * d, t * c - a)
    return YBMap(x_of, m.v.subs({"x": x_of}), params=m.params)


def quadrirationality_check(m: YBMap) -> bool:
    """Birationality of the map and of its companion."""
    if m.inverse is not None:
        u2, v2 = _apply(m.inverse, m.u, m.v)
        ok = _compare("inverse", m.name, [(u2, RatFun.var(X)), (v2, RatFun.var(Y))]).verdict
    else:
        ok = involution_check(m).verdict
    if not ok:
        return False
    comp = companion(m)
    back = _companion_inverse(m)
    u2, v2 = _apply(back, comp.u, comp.v)
    return _compare("companion", m.name, [(u2, RatFun.var(X)), (v2, RatFun.var(Y))]).verdict
