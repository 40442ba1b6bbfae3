"""The canonical quadrirational Yang-Baxter maps and their basic operations.

A map ``(x, y) -> (u, v)`` is stored as two unreduced rational functions in
``x``, ``y`` and named parameters.  Numeric evaluation goes through the
bihomogenized numerator/denominator pairs so that points at infinity and
singular points (``0 : 0``) are detected exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Poly, RatFun, Var, X, Y, _vid, const, to_rat, var
from .errors import NotLinearFractional, SingularPoint
from .projective import PPoint

Var("A")
Var("B")


class FamilyId(str, enum.Enum):
    F_I = "F_I"
    F_II = "F_II"
    F_III = "F_III"
    F_IV = "F_IV"
    F_V = "F_V"
    H_I = "H_I"
    H_II = "H_II"
    H_IIIA = "H_IIIA"
    H_IIIB = "H_IIIB"
    H_V = "H_V"
    H_I2 = "H_I2"
    H_Iplus = "H_Iplus"
    H_IIplus = "H_IIplus"
    FV_NEG = "FV_NEG"

    @classmethod
    def parse(cls, text) -> "FamilyId":
        if isinstance(text, FamilyId):
            return text
        t = str(text).strip()
        for f in cls:
            if f.value.lower() == t.lower():
                return f
        raise ValueError(f"unknown family {text!r}")


THEOREM2 = (
    FamilyId.F_I, FamilyId.F_II, FamilyId.F_III, FamilyId.F_IV, FamilyId.F_V,
    FamilyId.H_I, FamilyId.H_II, FamilyId.H_IIIA, FamilyId.H_IIIB, FamilyId.H_V,
)
SUBTRACTION_FREE = (FamilyId.H_Iplus, FamilyId.H_IIplus, FamilyId.H_IIIA, FamilyId.H_IIIB)


class _BiForm:
    """Bihomogenized polynomial of bidegree (dx, dy) with numeric coefficients."""

    __slots__ = ("terms", "dx", "dy")

    def __init__(self, p: Poly, dx: int, dy: int):
        cx = p.coeffs_in(X)
        terms = []
        for i, pi in cx.items():
            for j, pij in pi.coeffs_in(Y).items():
                if not pij.is_const():
                    raise ValueError("coefficients must be numeric before bihomogenizing")
                terms.append((i, j, pij.const_value()))
        self.terms, self.dx, self.dy = terms, dx, dy

    def __call__(self, P: PPoint, Q: PPoint):
        p, q, r, s = P.p, P.q, Q.p, Q.q
        tot = 0
        for i, j, c in self.terms:
            tot += c * p ** i * q ** (self.dx - i) * r ** j * s ** (self.dy - j)
        return tot


class _Numeric:
    """A map specialized at numeric parameters, ready for fast evaluation."""

    def __init__(self, u: RatFun, v: RatFun):
        self.parts = []
        for f in (u, v):
            dx, dy = f.degree_in(X), f.degree_in(Y)
            dx, dy = max(dx, 0), max(dy, 0)
            self.parts.append((_BiForm(f.num, dx, dy), _BiForm(f.den, dx, dy)))

    def __call__(self, P: PPoint, Q: PPoint) -> tuple[PPoint, PPoint]:
        out = []
        for num, den in self.parts:
            n, d = num(P, Q), den(P, Q)
            if n == 0 and d == 0:
                raise SingularPoint(f"singular point ({P}, {Q})", (P, Q))
            out.append(PPoint(n, d))
        return out[0], out[1]


@dataclass(frozen=True, eq=False)
class YBMap:
    """A map (x, y) -> (u, v) of CP^1 x CP^1 with named parameters."""

    u: RatFun
    v: RatFun
    params: tuple[str, ...] = ("alpha", "beta")
    name: str = ""
    subtraction_free: bool = False
    positive: "YBMap | None" = None
    inverse: "YBMap | None" = None
    data: object = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for f in (self.u, self.v):
            if f.den.is_zero():
                raise ValueError("zero denominator")

    def specialize(self, values: Sequence) -> "YBMap":
        """Substitute numbers (or rational functions) for the parameters."""
        if len(values) != len(self.params):
            raise ValueError(f"{self.name or 'map'} takes {len(self.params)} parameters, got {len(values)}")
        if not self.params:
            return self
        assign = {p: RatFun.coerce(to_rat(v) if not isinstance(v, RatFun) else v) for p, v in zip(self.params, values)}
        return replace(
            self,
            u=self.u.subs(assign).normalized(),
            v=self.v.subs(assign).normalized(),
            params=(),
            positive=None,
            inverse=self.inverse.specialize(values) if self.inverse is not None else None,
            _cache={},
        )

    def reparametrize(self, subs: Mapping[str, RatFun], params: Sequence[str] | None = None) -> "YBMap":
        """Substitute expressions for parameters (e.g. alpha -> (alpha-1)/alpha)."""
        subs = {k: RatFun.coerce(v) for k, v in subs.items()}
        return replace(
            self,
            u=self.u.subs(subs),
            v=self.v.subs(subs),
            params=tuple(params) if params is not None else self.params,
            positive=None,
            inverse=self.inverse.reparametrize(subs, params) if self.inverse is not None else None,
            _cache={},
        )

    def numeric(self, values: Sequence = ()) -> _Numeric:
        key = tuple(to_rat(v) for v in values)
        ev = self._cache.get(key)
        if ev is None:
            m = self.specialize(key) if self.params else self
            ev = self._cache[key] = _Numeric(m.u, m.v)
        return ev

    def __call__(self, P, Q, params: Sequence = ()):
        return self.numeric(params)(PPoint.parse(P), PPoint.parse(Q))

    def coords(self) -> tuple[RatFun, RatFun]:
        return self.u, self.v

    def to_text(self) -> str:
        return f"u = {self.u.to_text()}; v = {self.v.to_text()}"

    def __str__(self):
        return self.to_text()


def _a():
    return var("alpha")


def _b():
    return var("beta")


def _family(fid: FamilyId) -> YBMap:
    x, y, a, b = var("x"), var("y"), _a(), _b()
    F = FamilyId
    if fid is F.F_I:
        P = ((1 - b) * x + b - a + (a - 1) * y) / (b * (1 - a) * x + (a - b) * y * x + a * (b - 1) * y)
        return YBMap(a * y * P, b * x * P, name=fid.value)
    if fid is F.F_II:
        P = (a * x - b * y + b - a) / (x - y)
        return YBMap(y / a * P, x / b * P, name=fid.value)
    if fid is F.F_III:
        P = (a * x - b * y) / (x - y)
        return YBMap(y / a * P, x / b * P, name=fid.value)
    if fid is F.F_IV:
        P = 1 + (b - a) / (x - y)
        return YBMap(y * P, x * P, name=fid.value)
    if fid is F.F_V:
        P = (a - b) / (x - y)
        return YBMap(y + P, x + P, name=fid.value)
    if fid is F.FV_NEG:
        P = (a - b) / (x - y)
        return YBMap(-(y + P), -(x + P), name=fid.value)
    if fid is F.H_I:
        Q = ((1 - b) * x * y + (b - a) * y + b * (a - 1)) / ((1 - a) * x * y + (a - b) * x + a * (b - 1))
        return YBMap(y / Q, x * Q, name=fid.value)
    if fid is F.H_II:
        Q = (a + (b - a) * y - b * x * y) / (b + (a - b) * x - a * x * y)
        return YBMap(y / Q, x * Q, name=fid.value)
    if fid is F.H_IIIA:
        Q = (a * x + b * y) / (x + y)
        m = YBMap(y / a * Q, x / b * Q, name=fid.value, subtraction_free=True)
        return replace(m, positive=m)
    if fid is F.H_IIIB:
        Q = (a * x * y + 1) / (b * x * y + 1)
        m = YBMap(y / Q, x * Q, name=fid.value, subtraction_free=True)
        return replace(m, positive=m)
    if fid is F.H_V:
        P = (a - b) / (x + y)
        return YBMap(y - P, x + P, name=fid.value)
    if fid is F.H_I2:
        u = a * y * (b - x - y + x * y) / (a * b - b * x - a * y + b * x * y)
        v = b * x * (a - x - y + x * y) / (a * b - b * x - a * y + a * x * y)
        return YBMap(u, v, name=fid.value)
    if fid is F.H_Iplus:
        A, B = var("A"), var("B")
        u = y / A * (B + A * x + B * y + A * B * x * y) / (1 + x + y + B * x * y)
        v = x / B * (A + A * x + B * y + A * B * x * y) / (1 + x + y + A * x * y)
        pos = YBMap(u, v, params=("A", "B"), name=fid.value, subtraction_free=True)
        sub = {"A": 1 - a, "B": 1 - b}
        return YBMap(u.subs(sub), v.subs(sub), name=fid.value, subtraction_free=True, positive=pos)
    if fid is F.H_IIplus:
        u = y / a * (a * x + b * y + b) / (x + y + 1)
        v = x / b * (a * x + b * y + a) / (x + y + 1)
        m = YBMap(u, v, name=fid.value, subtraction_free=True)
        return replace(m, positive=m)
    raise ValueError(fid)


def make_family(fid) -> YBMap:
    """Symbolic map of a catalog family, parametrized by (alpha, beta)."""
    return _family(FamilyId.parse(fid))


def catalog() -> dict[str, YBMap]:
    return {f.value: make_family(f) for f in FamilyId}


def eval_map(m: YBMap, param_values: Sequence, point) -> tuple[PPoint, PPoint]:
    """Exact evaluation at a point of CP^1 x CP^1 (infinity allowed)."""
    if len(param_values) != len(m.params):
        raise ValueError(f"expected {len(m.params)} parameter values")
    P, Q = point
    return m.numeric(param_values)(PPoint.parse(P), PPoint.parse(Q))


def _linfrac(f: RatFun, v) -> tuple[Poly, Poly, Poly, Poly]:
    """(a, b, c, d) with f = (a t + b)/(c t + d) in the variable ``v``."""
    if f.num.degree_in(v) > 1 or f.den.degree_in(v) > 1:
        raise NotLinearFractional(f"not linear-fractional in {Var(v) if isinstance(v, str) else v}")
    n, d = f.num.coeffs_in(v), f.den.coeffs_in(v)
    z = Poly()
    a, b, c, dd = n.get(1, z), n.get(0, z), d.get(1, z), d.get(0, z)
    if (a * dd - b * c).is_zero():
        raise NotLinearFractional("fraction does not depend invertibly on the variable")
    return a, b, c, dd


def check_shape(m: YBMap) -> None:
    """Raise NotLinearFractional unless u is linear-fractional in x and v in
    y, with coefficient polynomials of degree <= 2."""
    _linfrac(m.u, X)
    _linfrac(m.v, Y)
    if m.u.degree_in(Y) > 2 or m.v.degree_in(X) > 2:
        raise NotLinearFractional("coefficient degree exceeds 2")


def companion(m: YBMap) -> YBMap:
    """The companion map (x, v) -> (u, y), returned in variables (x, y)."""
    A, B, C, D = _linfrac(m.v, Y)
    t = Poly.var(Y)
    # v = (A y + B)/(C y + D)  =>  y = (B - v D)/(v C - A); ``t`` plays v
    y_of = RatFun(B - t * D, t * C - A)
    u_new = m.u.subs({"y": y_of})
    return YBMap(u_new, y_of, params=m.params, name=f"companion({m.name})" if m.name else "")


def classify_subclass(m: YBMap) -> str:
    a, b, c, d = _linfrac(m.u, X)
    A, B, C, D = _linfrac(m.v, Y)
    du = max(p.degree_in(Y) for p in (a, b, c, d))
    dv = max(p.degree_in(X) for p in (A, B, C, D))
    if du < 1 or dv < 1:
        raise NotLinearFractional("a coordinate does not depend on the other variable")
    if du > 2 or dv > 2:
        raise NotLinearFractional("coefficient degree exceeds 2")
    lo, hi = sorted((du, dv))
    return f"[{lo}:{hi}]"


def positive_coefficients(m: YBMap) -> bool:
    """All stored numerator/denominator coefficients are positive."""
    return all(c > 0 for f in (m.u, m.v) for p in (f.num, f.den) for c in p.coefficients())
