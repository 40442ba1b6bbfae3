"""Pencils of conics in the (w1, w2) plane and the chord map on them."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Poly, factor_poly, to_rat
from .catalog import YBMap
from .engine import Certificate, _sample_rng, sample_rational
from .errors import DegeneratePencil, ParametrizationPole, PointNotOnConic, SampleExhaustion, UnsupportedType
from .projective import KleinPerm, PPoint, _canon, _ints

Matrix = tuple[tuple[Fraction, Fraction, Fraction], ...]


@dataclass(frozen=True, init=False)
class PlanePoint:
    """(w0 : w1 : w2); the affine chart w0 = 1 carries (w1, w2)."""

    w: tuple[int, int, int]

    def __init__(self, w0, w1, w2):
        object.__setattr__(self, "w", _canon(*_ints(w0, w1, w2)))

    @classmethod
    def affine_point(cls, w1, w2) -> "PlanePoint":
        return cls(1, w1, w2)

    def affine(self) -> tuple[Fraction, Fraction]:
        w0, w1, w2 = self.w
        if w0 == 0:
            raise ParametrizationPole("point lies on the line at infinity")
        return Fraction(w1, w0), Fraction(w2, w0)

    def to_text(self) -> str:
        if self.w[0] == 0:
            return "(" + " : ".join(str(c) for c in self.w) + ")"
        a, b = self.affine()
        return f"({a}, {b})"

    __str__ = to_text


def _sym(rows) -> Matrix:
    m = tuple(tuple(to_rat(c) for c in r) for r in rows)
    if len(m) != 3 or any(len(r) != 3 for r in m):
        raise ValueError("need a 3x3 matrix")
    return m


def _det3(m) -> Fraction:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3))


def _transpose(a):
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))


@dataclass(frozen=True)
class Conic:
    """The projective conic w^T M w = 0 for a symmetric 3x3 matrix M."""

    M: Matrix

    def __post_init__(self):
        m = _sym(self.M)
        object.__setattr__(self, "M", m)
        if any(m[i][j] != m[j][i] for i in range(3) for j in range(3)):
            raise ValueError("conic matrix must be symmetric")
        if all(c == 0 for r in m for c in r):
            raise ValueError("zero matrix")

    @classmethod
    def from_affine(cls, c11, c22, c12, c1, c2, c0) -> "Conic":
        """c11 w1^2 + c22 w2^2 + c12 w1 w2 + c1 w1 + c2 w2 + c0 = 0."""
        h = Fraction(1, 2)
        c11, c22, c12, c1, c2, c0 = (to_rat(c) for c in (c11, c22, c12, c1, c2, c0))
        return cls(((c0, h * c1, h * c2), (h * c1, c11, h * c12), (h * c2, h * c12, c22)))

    def bilinear(self, P: PlanePoint, L: PlanePoint):
        a, b = P.w, L.w
        return sum(self.M[i][j] * a[i] * b[j] for i in range(3) for j in range(3))

    def value(self, P: PlanePoint):
        return self.bilinear(P, P)

    def contains(self, P: PlanePoint) -> bool:
        return self.value(P) == 0

    def transformed(self, T) -> "Conic":
        """The conic {T w : w on self}, for an invertible 3x3 matrix T."""
        Ti = _inverse3(_sym(T))
        return Conic(_matmul(_transpose(Ti), _matmul(self.M, Ti)))

    def proportional(self, other: "Conic") -> bool:
        a = [c for r in self.M for c in r]
        b = [c for r in other.M for c in r]
        return all(a[i] * b[j] == a[j] * b[i] for i in range(9) for j in range(9))

    def affine_coeffs(self):
        """(c11, c22, c12, c1, c2, c0) of the affine equation."""
        m = self.M
        return m[1][1], m[2][2], 2 * m[1][2], 2 * m[0][1], 2 * m[0][2], m[0][0]


def _inverse3(m):
    d = _det3(m)
    if d == 0:
        raise ValueError("singular matrix")
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for k, r in enumerate(m) if k != i]
            minor = [[c for l, c in enumerate(r) if l != j] for r in rows]
            cof[i][j] = (-1) ** (i + j) * (minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0])
    return tuple(tuple(cof[j][i] / d for j in range(3)) for i in range(3))


class PencilType(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"

    @classmethod
    def parse(cls, t) -> "PencilType":
        return t if isinstance(t, PencilType) else cls(str(t).strip().upper())


def _check_params(alpha, beta):
    if alpha == beta:
        raise DegeneratePencil("alpha = beta gives coincident conics")
    for a in (alpha, beta):
        if a in (0, 1):
            raise DegeneratePencil("parameters 0 and 1 give degenerate conics")


def normal_form_conic(t, alpha) -> Conic:
    t, a = PencilType.parse(t), to_rat(alpha)
    if t is PencilType.I:
        # w2(w2 - 1) = a w1(w1 - 1)
        return Conic.from_affine(-a, 1, 0, a, -1, 0)
    if t is PencilType.III:
        # a w1(w1 - 1) = w2^2
        return Conic.from_affine(a, -1, 0, -a, 0, 0)
    raise UnsupportedType(f"no normal form available for type {t.value}")


def pencil_normal_form(t, alpha, beta) -> tuple[Conic, Conic]:
    t = PencilType.parse(t)
    if t not in (PencilType.I, PencilType.III):
        raise UnsupportedType(f"no normal form available for type {t.value}")
    alpha, beta = to_rat(alpha), to_rat(beta)
    _check_params(alpha, beta)
    return normal_form_conic(t, alpha), normal_form_conic(t, beta)


def param_point(alpha, x, t=PencilType.I, affine: bool = False) -> PlanePoint:
    """w1 = (x - a)/(x^2 - a), w2 = x (x - a)/(x^2 - a), homogeneously in x."""
    if PencilType.parse(t) is not PencilType.I:
        raise UnsupportedType("only the type I parametrization is available")
    a = to_rat(alpha)
    x = PPoint.parse(x)
    p, q = x.p, x.q
    s = p - a * q
    P = PlanePoint(p * p - a * q * q, q * s, p * s)
    if affine and P.w[0] == 0:
        raise ParametrizationPole(f"x^2 = alpha at x = {x}")
    return P


def recover_parameter(alpha, P: PlanePoint) -> PPoint:
    """Inverse of ``param_point``: x = w2 / w1 (and x = alpha at the origin)."""
    _, w1, w2 = P.w
    if w1 == 0 and w2 == 0:
        return PPoint(to_rat(alpha))
    return PPoint(w2, w1)


def second_intersection(Q: Conic, P: PlanePoint, L: PlanePoint) -> PlanePoint:
    """The other point of Q on the line through P and L (P itself if tangent)."""
    if not Q.contains(P):
        raise PointNotOnConic(f"{P} is not on the conic")
    if P == L:
        raise ValueError("the line needs two distinct points")
    ql, b = Q.value(L), Q.bilinear(P, L)
    w = [ql * P.w[i] - 2 * b * L.w[i] for i in range(3)]
    if all(c == 0 for c in w):
        raise PointNotOnConic("the line lies on the conic")
    return PlanePoint(*w)


def geometric_map(Q1: Conic, Q2: Conic, X: PlanePoint, Y: PlanePoint) -> tuple[PlanePoint, PlanePoint]:
    if X == Y:
        raise ValueError("X = Y: the chord is undefined")
    return second_intersection(Q1, X, Y), second_intersection(Q2, Y, X)


_INVOLUTIONS = {
    KleinPerm.Id: ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    KleinPerm.rho1: ((1, 0, 0), (1, -1, 0), (0, 0, 1)),
    KleinPerm.rho2: ((1, 0, 0), (0, 1, 0), (1, 0, -1)),
    KleinPerm.rho3: ((1, 0, 0), (1, -1, 0), (1, 0, -1)),
}


def plane_involution(rho) -> Matrix:
    """rho1: (1 - w1, w2), rho2: (w1, 1 - w2), rho3: (1 - w1, 1 - w2)."""
    return _sym(_INVOLUTIONS[KleinPerm.parse(rho)])


def apply_involution(rho, P: PlanePoint) -> PlanePoint:
    m = plane_involution(rho)
    return PlanePoint(*(sum(m[i][j] * P.w[j] for j in range(3)) for i in range(3)))


def twisted_geometric_map(Q1: Conic, Q2: Conic, rho, X: PlanePoint, Y: PlanePoint):
    """rho x Id o R o Id x rho on the pair of conics."""
    Yr = apply_involution(rho, Y)
    U, V = geometric_map(Q1, Q2, X, Yr)
    return apply_involution(rho, U), V


def geometric_concordance(m: YBMap, alpha, beta, rho=None, samples: int = 100, seed: int = 0,
                          bound: int = 100, max_attempts: int = 20) -> Certificate:
    """Chord construction on the type I pencil against ``m`` at (alpha, beta):
    both are evaluated at seeded points and compared after parameter recovery."""
    a, b = to_rat(alpha), to_rat(beta)
    Q1, Q2 = pencil_normal_form(PencilType.I, a, b)
    f = m.numeric((a, b))
    used, witness = 0, None
    for idx in range(samples):
        for attempt in range(max_attempts):
            rng = _sample_rng(seed, idx, attempt)
            x, y = PPoint(sample_rational(rng, bound)), PPoint(sample_rational(rng, bound))
            X, Y = param_point(a, x), param_point(b, y)
            try:
                if rho is None:
                    U, V = geometric_map(Q1, Q2, X, Y)
                else:
                    U, V = twisted_geometric_map(Q1, Q2, rho, X, Y)
                want = f(x, y)
            except (ValueError, ArithmeticError, PointNotOnConic):
                continue
            break
        else:
            raise SampleExhaustion(f"no regular sample found for index {idx}")
        used += 1
        got = (recover_parameter(a, U), recover_parameter(b, V))
        if got != want:
            witness = {"point": [x.to_text(), y.to_text()],
                       "geometric": [p.to_text() for p in got], "map": [p.to_text() for p in want]}
            break
    subject = f"{m.name} / chords" + (f" twisted by {KleinPerm.parse(rho).name}" if rho is not None else "")
    cert = Certificate("concordance", subject, witness is None, "numeric", witness=witness, seed=seed, samples=used)
    cert.notes.append(f"params={a},{b}")
    return cert


# -- intersection type --------------------------------------------------------

_PARTITIONS = {
    (1, 1, 1, 1): PencilType.I,
    (2, 1, 1): PencilType.II,
    (2, 2): PencilType.III,
    (3, 1): PencilType.IV,
    (4,): PencilType.V,
}

# deterministic coordinate changes tried to separate intersection points
_CHANGES = [
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 1, 0), (1, 2, 1)),
    ((1, 0, 0), (2, 1, 0), (3, 5, 1)),
    ((1, 1, 0), (0, 1, 0), (7, -3, 1)),
    ((2, 1, 1), (1, 3, 0), (-1, 4, 5)),
]


def _form(M, t: Poly, s: Poly, z: Poly) -> Poly:
    v = (s, t, z)
    out = Poly()
    for i in range(3):
        for j in range(3):
            if M[i][j]:
                out = out + v[i] * v[j] * M[i][j]
    return out


def _partition(Q1: Conic, Q2: Conic):
    """Intersection multiplicities from the eliminant in w2, or None."""
    w0, w1, w2 = Poly.var("w0"), Poly.var("w1"), Poly.var("w2")
    f, g = _form(Q1.M, w1, w0, w2), _form(Q2.M, w1, w0, w2)
    a, b = f.coeffs_in("w2"), g.coeffs_in("w2")
    z = Poly()
    a0, a1, a2 = (a.get(k, z) for k in range(3))
    b0, b1, b2 = (b.get(k, z) for k in range(3))
    if a2.is_zero() and b2.is_zero():
        return None
    res = (a2 * b0 - a0 * b2) ** 2 - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1)
    if res.is_zero():
        return None
    # binary quartic in (w0, w1): dehomogenize at w0 = 1
    r = res.specialize({"w0": 1})
    _, facs = factor_poly(r) if not r.is_const() else (None, [])
    parts = []
    for fac, k in facs:
        d = fac.degree_in("w1")
        parts += [k] * d
    deg = max(r.degree_in("w1"), 0)
    if deg < 4:
        parts.append(4 - deg)
    return tuple(sorted(parts, reverse=True))


def _pencil_degenerate(Q1: Conic, Q2: Conic) -> bool:
    s, t = Poly.var("s"), Poly.var("t")
    m = [[Q1.M[i][j] * s + Q2.M[i][j] * t for j in range(3)] for i in range(3)]
    return _det3(m).is_zero()


def classify_intersection(Q1: Conic, Q2: Conic) -> PencilType:
    if Q1.proportional(Q2):
        raise DegeneratePencil("the conics coincide")
    if _pencil_degenerate(Q1, Q2):
        raise DegeneratePencil("every member of the pencil is singular")
    best = None
    for T in _CHANGES:
        p = _partition(Q1.transformed(T), Q2.transformed(T))
        if p is not None and (best is None or len(p) > len(best)):
            best = p
    if best is None or best not in _PARTITIONS:
        raise DegeneratePencil("the conics share a component")
    return _PARTITIONS[best]


# -- SVG ----------------------------------------------------------------------

VIEW = (-2.0, 3.0)
SEGMENTS = 256
SIZE = 500


@dataclass
class SceneConfig:
    """What to draw.  ``chords`` holds parameter pairs (x, y) on Q1, Q2."""

    pencil: str | None = "I"
    alpha: Fraction = Fraction(2)
    beta: Fraction = Fraction(3)
    chords: list = field(default_factory=list)
    involutions: bool = False
    twist: str | None = None
    title: str = ""


def _px(w1: float, w2: float) -> tuple[float, float]:
    lo, hi = VIEW
    sx = (w1 - lo) / (hi - lo) * SIZE
    sy = (hi - w2) / (hi - lo) * SIZE
    return sx, sy


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _branches(Q: Conic) -> list[list[tuple[float, float]]]:
    """Polylines of the real affine part, solving for w2 at sampled w1."""
    c11, c22, c12, c1, c2, c0 = (float(c) for c in Q.affine_coeffs())
    lo, hi = VIEW
    runs: dict[int, list] = {0: [], 1: []}
    done: list[list] = []
    for k in range(SEGMENTS + 1):
        w1 = lo + (hi - lo) * k / SEGMENTS
        A, B, C = c22, c12 * w1 + c2, c11 * w1 * w1 + c1 * w1 + c0
        roots: list[float] = []
        if abs(A) < 1e-12:
            if abs(B) > 1e-12:
                roots = [-C / B]
        else:
            disc = B * B - 4 * A * C
            if disc >= 0:
                r = math.sqrt(disc)
                roots = sorted(((-B - r) / (2 * A), (-B + r) / (2 * A)))
        for b in (0, 1):
            if b < len(roots) and lo - 1 <= roots[b] <= hi + 1:
                runs[b].append((w1, roots[b]))
            elif runs[b]:
                done.append(runs[b])
                runs[b] = []
    done += [r for r in runs.values() if r]
    return [r for r in done if len(r) > 1]


def _path(runs, cls: str) -> str:
    d = []
    for run in runs:
        pts = [_px(*p) for p in run]
        d.append("M" + " L".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts))
    return f'<path class="{cls}" fill="none" d="{" ".join(d)}"/>'


def _dot(P: PlanePoint, label: str, cls: str) -> list[str]:
    try:
        w1, w2 = (float(c) for c in P.affine())
    except ParametrizationPole:
        return []
    x, y = _px(w1, w2)
    return [f'<circle class="{cls}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4"/>',
            f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}">{label}</text>']


def _line(P: PlanePoint, R: PlanePoint, cls: str, extra: str = "") -> str:
    (a, b), (c, d) = (tuple(float(t) for t in S.affine()) for S in (P, R))
    x1, y1 = _px(a, b)
    x2, y2 = _px(c, d)
    return (f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"{extra}/>')


def _span(points: Sequence[PlanePoint]):
    """The two extreme affine points of a collinear set."""
    aff = [(P, tuple(float(c) for c in P.affine())) for P in points if P.w[0] != 0]
    aff.sort(key=lambda t: (t[1][0], t[1][1]))
    return aff[0][0], aff[-1][0]


def render_svg(cfg: SceneConfig) -> str:
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        '<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="8" refY="4" orient="auto">'
        '<path d="M0,0 L8,4 L0,8 z"/></marker></defs>',
    ]
    if cfg.title:
        out.append(f"<title>{cfg.title}</title>")
    x0, y0 = _px(VIEW[0], 0.0)
    x1, _ = _px(VIEW[1], 0.0)
    out.append(f'<line class="axis" x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y0)}" stroke="gray"/>')
    xa, ya = _px(0.0, VIEW[0])
    _, yb = _px(0.0, VIEW[1])
    out.append(f'<line class="axis" x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xa)}" y2="{_fmt(yb)}" stroke="gray"/>')
    if cfg.pencil is None:
        out.append("</svg>")
        return "\n".join(out) + "\n"
    Q1, Q2 = pencil_normal_form(cfg.pencil, cfg.alpha, cfg.beta)
    out.append(_path(_branches(Q1), "conic q1").replace("/>", ' stroke="blue"/>'))
    out.append(_path(_branches(Q2), "conic q2").replace("/>", ' stroke="red"/>'))
    for x, y in cfg.chords:
        X = param_point(cfg.alpha, x)
        Y = param_point(cfg.beta, y)
        if cfg.twist:
            Yr = apply_involution(cfg.twist, Y)
            U0, V = geometric_map(Q1, Q2, X, Yr)
            U = apply_involution(cfg.twist, U0)
            a, b = _span([X, Yr, U0, V])
            out.append(_line(a, b, "chord", ' stroke="black"'))
            out.append(_line(Y, Yr, "twist", ' stroke="green" stroke-dasharray="4,3" marker-end="url(#arrow)"'))
            out.append(_line(U0, U, "twist", ' stroke="green" stroke-dasharray="4,3" marker-end="url(#arrow)"'))
        else:
            U, V = geometric_map(Q1, Q2, X, Y)
            a, b = _span([X, Y, U, V])
            out.append(_line(a, b, "chord", ' stroke="black"'))
        for P, lab in ((X, "X"), (Y, "Y"), (U, "U"), (V, "V")):
            out += _dot(P, lab, "point")
        if cfg.involutions:
            for rho in (KleinPerm.rho1, KleinPerm.rho2, KleinPerm.rho3):
                R = apply_involution(rho, X)
                out.append(_line(X, R, "involution", ' stroke="gray" marker-end="url(#arrow)"'))
                out += _dot(R, rho.name, "image")
    out.append("</svg>")
    return "\n".join(out) + "\n"
