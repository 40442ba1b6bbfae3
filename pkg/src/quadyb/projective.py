"""Points of CP^1 over Q, Moebius maps, cross-ratios and the Klein group."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Iterable, Sequence

from .algebra import Poly, RatFun, to_rat, var
from .errors import DegenerateQuadruple


def _canon(*vals: int) -> tuple[int, ...]:
    g = 0
    for v in vals:
        g = gcd(g, v)
    if g == 0:
        raise ValueError("all-zero homogeneous coordinates")
    first = next(v for v in vals if v)
    if first < 0:
        g = -g
    return tuple(v // g for v in vals)


def _ints(*vals) -> tuple[int, ...]:
    fr = [to_rat(v) for v in vals]
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    return tuple(int(f * den) for f in fr)


@dataclass(frozen=True, init=False)
class PPoint:
    """The point [p : q] = p/q of CP^1; ``INF`` is [1 : 0]."""

    p: int
    q: int

    def __init__(self, p, q=1):
        q, p = _canon(*_ints(q, p))
        if q == 0:
            p = 1
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text) -> "PPoint":
        if isinstance(text, PPoint):
            return text
        if isinstance(text, (int, Fraction)):
            return cls(text)
        t = str(text).strip().lower()
        if t in ("inf", "oo", "infinity", "∞"):
            return INF
        return cls(Fraction(t))

    @property
    def is_inf(self) -> bool:
        return self.q == 0

    def value(self) -> Fraction:
        if self.q == 0:
            raise ZeroDivisionError("the point at infinity has no affine value")
        return Fraction(self.p, self.q)

    def to_text(self) -> str:
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"

    __str__ = to_text

    def __repr__(self):
        return f"PPoint({self.to_text()})"


INF = PPoint(1, 0)


def _det(a: PPoint, b: PPoint) -> int:
    # homogeneous version of (a - b)
    return a.p * b.q - b.p * a.q


@dataclass(frozen=True, init=False)
class Moebius:
    """x -> (a x + b) / (c x + d), stored primitive with canonical sign."""

    a: int
    b: int
    c: int
    d: int

    def __init__(self, a, b, c, d):
        a, b, c, d = _canon(*_ints(a, b, c, d))
        if a * d - b * c == 0:
            raise ValueError("singular Moebius matrix")
        for k, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, k, v)

    @classmethod
    def identity(cls) -> "Moebius":
        return cls(1, 0, 0, 1)

    def __call__(self, P: PPoint) -> PPoint:
        return moebius_act(self, P)

    def __matmul__(self, other: "Moebius") -> "Moebius":
        return moebius_compose(self, other)

    def inverse(self) -> "Moebius":
        return moebius_inverse(self)

    def apply_quadruple(self, X: "Quadruple") -> "Quadruple":
        return Quadruple(self(P) for P in X)

    def as_ratfun(self, v="x") -> RatFun:
        t = var(v) if isinstance(v, str) else RatFun.coerce(v)
        return (t * self.a + self.b) / (t * self.c + self.d)

    def on(self, f: RatFun) -> RatFun:
        """The function ``self(f)`` for a rational function ``f``."""
        return RatFun(f.num * self.a + f.den * self.b, f.num * self.c + f.den * self.d)

    def to_text(self) -> str:
        return RatFun(Poly.var("x") * self.a + self.b, Poly.var("x") * self.c + self.d).to_text()


def moebius_act(s: Moebius, P: PPoint) -> PPoint:
    return PPoint(s.a * P.p + s.b * P.q, s.c * P.p + s.d * P.q)


def moebius_compose(s: Moebius, t: Moebius) -> Moebius:
    """``s o t`` (apply ``t`` first)."""
    return Moebius(
        s.a * t.a + s.b * t.c,
        s.a * t.b + s.b * t.d,
        s.c * t.a + s.d * t.c,
        s.c * t.b + s.d * t.d,
    )


def moebius_inverse(s: Moebius) -> Moebius:
    return Moebius(s.d, -s.b, -s.c, s.a)


class Quadruple(tuple):
    """Ordered 4-tuple of pairwise distinct points of CP^1."""

    def __new__(cls, points: Iterable):
        pts = tuple(PPoint.parse(p) for p in points)
        if len(pts) != 4:
            raise DegenerateQuadruple(f"need 4 points, got {len(pts)}")
        if len(set(pts)) != 4:
            raise DegenerateQuadruple("points are not pairwise distinct")
        return super().__new__(cls, pts)

    @classmethod
    def parse(cls, text: str) -> "Quadruple":
        return cls(t for t in text.split(","))

    def to_text(self) -> str:
        return ",".join(p.to_text() for p in self)


def cross_ratio(X: Sequence[PPoint]) -> Fraction:
    """(x1-x2)(x3-x4) / ((x2-x3)(x4-x1)), evaluated homogeneously."""
    if not isinstance(X, Quadruple):
        X = Quadruple(X)
    x1, x2, x3, x4 = X
    return Fraction(_det(x1, x2) * _det(x3, x4), _det(x2, x3) * _det(x4, x1))


def canonical_moebius(X: Sequence[PPoint]) -> Moebius:
    """The sigma with x1 -> inf, x2 -> 1, x3 -> 0 (and x4 -> q(X))."""
    if not isinstance(X, Quadruple):
        X = Quadruple(X)
    x1, x2, x3, _ = X
    d12 = _det(x1, x2)
    d32 = _det(x3, x2)
    return Moebius(d12 * x3.q, -d12 * x3.p, d32 * x1.q, -d32 * x1.p)


def moebius_relating(X: Sequence[PPoint], U: Sequence[PPoint]) -> Moebius | None:
    """The sigma with sigma(x_i) = u_i for all i, if one exists."""
    X, U = Quadruple(X), Quadruple(U)
    s = moebius_inverse(canonical_moebius(U)) @ canonical_moebius(X)
    return s if s(X[3]) == U[3] else None


class KleinPerm(enum.Enum):
    """Elements of the Klein four-group inside S4, as 0-based image tuples.

    ``permute(pi, X)`` has entries ``X[pi(i)]``.
    """

    Id = (0, 1, 2, 3)
    rho1 = (1, 0, 3, 2)  # (12)(34)
    rho2 = (3, 2, 1, 0)  # (14)(23)
    rho3 = (2, 3, 0, 1)  # (13)(24)

    def __call__(self, i: int) -> int:
        return self.value[i]

    def __mul__(self, other: "KleinPerm") -> "KleinPerm":
        # (self * other)(i) = self(other(i))
        return KleinPerm(tuple(self.value[other.value[i]] for i in range(4)))

    @classmethod
    def parse(cls, text) -> "KleinPerm":
        if isinstance(text, KleinPerm):
            return text
        t = str(text).strip().replace("ρ", "rho").replace("_", "")
        aliases = {
            "id": cls.Id, "e": cls.Id, "identity": cls.Id,
            "rho1": cls.rho1, "(12)(34)": cls.rho1,
            "rho2": cls.rho2, "(14)(23)": cls.rho2,
            "rho3": cls.rho3, "(13)(24)": cls.rho3,
        }
        try:
            return aliases[t.lower()]
        except KeyError:
            raise ValueError(f"unknown Klein permutation {text!r}") from None

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "KleinPerm | None":
        try:
            return cls(tuple(images))
        except ValueError:
            return None

    def cycle_text(self) -> str:
        return {
            "Id": "Id", "rho1": "(12)(34)", "rho2": "(14)(23)", "rho3": "(13)(24)",
        }[self.name]


KLEIN = tuple(KleinPerm)


def permute(pi, X: Sequence):
    """X^pi, i.e. ``u_i = x_{pi(i)}``.  ``pi`` may be any S4 image tuple."""
    img = pi.value if isinstance(pi, KleinPerm) else tuple(pi)
    out = [X[img[i]] for i in range(4)]
    if isinstance(X, Quadruple):
        return Quadruple(out)
    return tuple(out)


def cross_ratio_preserving() -> list[tuple[int, ...]]:
    """All pi in S4 with q(X^pi) = q(X) for every X (the Klein group)."""
    probe = Quadruple([INF, PPoint(1), PPoint(0), PPoint(7, 3)])
    q = cross_ratio(probe)
    return [p for p in permutations(range(4)) if cross_ratio(permute(p, probe)) == q]


class SymPoint:
    """A point [p : q] of CP^1 with rational-function coordinates.

    Used for singular points depending on symbolic parameters.  Equality is
    projective: p1*q2 == p2*q1.
    """

    __slots__ = ("p", "q")

    def __init__(self, p, q=1):
        p, q = RatFun.coerce(p), RatFun.coerce(q)
        if p.is_zero() and q.is_zero():
            raise ValueError("[0 : 0] is not a point")
        self.p, self.q = p, q

    @classmethod
    def of(cls, P) -> "SymPoint":
        if isinstance(P, SymPoint):
            return P
        P = PPoint.parse(P)
        return cls(P.p, P.q)

    @property
    def is_inf(self) -> bool:
        return self.q.is_zero()

    def affine(self) -> RatFun:
        return self.p / self.q

    def __eq__(self, other):
        if not isinstance(other, (SymPoint, PPoint, int, Fraction, str)):
            return NotImplemented
        o = SymPoint.of(other)
        return (self.p * o.q - o.p * self.q).is_zero()

    __hash__ = None

    def specialize(self, point) -> "SymPoint":
        return SymPoint(self.p.specialize(point), self.q.specialize(point))

    def to_ppoint(self) -> PPoint:
        if not (self.p.is_const() and self.q.is_const()):
            raise ValueError("point depends on parameters")
        return PPoint(self.p.const_value(), self.q.const_value())

    def to_text(self) -> str:
        if self.is_inf:
            return "inf"
        v = self.affine().reduced()
        if v.is_const():
            return PPoint(v.const_value()).to_text()
        return v.to_text()

    __str__ = to_text

    def __repr__(self):
        return f"SymPoint({self.to_text()})"
