"""Lifting, composition, and exact verification of Yang-Baxter identities."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Poly, RatFun, alphabet, cross_difference, probe_unequal, ratfun_eq, ratfun_subst, var
from .catalog import YBMap
from .errors import NotInvolutive, SampleExhaustion, SingularPoint, SubstitutionDegenerate
from .projective import PPoint

SLOTS = ("x", "y", "z")
TRIPLE_PARAMS = ("alpha1", "alpha2", "alpha3")
# difference polynomials longer than this are summarized in reports
TEXT_LIMIT = 400


@dataclass
class Certificate:
    check: str
    subject: str
    verdict: bool
    method: str
    differences: list = field(default_factory=list)
    witness: dict | None = None
    seed: int | None = None
    samples: int | None = None
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict:
        diffs = []
        for d in self.differences:
            if d is None:
                diffs.append(None)
            elif len(d) <= TEXT_LIMIT:
                diffs.append(d.to_text())
            else:
                diffs.append(f"<nonzero polynomial with {len(d)} terms>")
        out = {
            "check": self.check,
            "subject": self.subject,
            "verdict": self.verdict,
            "method": self.method,
        }
        if self.method == "symbolic":
            out["differences"] = diffs
        if self.seed is not None:
            out["seed"] = self.seed
            out["samples"] = self.samples
        out["witness"] = self.witness
        if self.notes:
            out["notes"] = list(self.notes)
        return out


class TripleMap:
    """Three rational functions in x, y, z (and parameters)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[RatFun]):
        if len(coords) != 3:
            raise ValueError("a triple map has three coordinates")
        self.coords = tuple(RatFun.coerce(c) for c in coords)

    @classmethod
    def identity(cls) -> "TripleMap":
        return cls([var(s) for s in SLOTS])

    def __getitem__(self, k):
        return self.coords[k]

    def equals(self, other: "TripleMap") -> bool:
        return all(ratfun_eq(a, b) for a, b in zip(self.coords, other.coords))


def _lift_rename(m: YBMap, i: int, j: int) -> dict:
    ren = {"x": SLOTS[i - 1], "y": SLOTS[j - 1]}
    if m.params:
        if len(m.params) != 2:
            raise ValueError("lifting needs a two-parameter map")
        ren[m.params[0]] = TRIPLE_PARAMS[i - 1]
        ren[m.params[1]] = TRIPLE_PARAMS[j - 1]
    return ren


def lift(m: YBMap, i: int, j: int) -> TripleMap:
    """R^{ij}: acts as ``m`` on factors i and j (1-based), identity elsewhere."""
    if i == j or not {i, j} <= {1, 2, 3}:
        raise ValueError("need distinct factor indices in {1, 2, 3}")
    ren = _lift_rename(m, i, j)
    coords = [var(s) for s in SLOTS]
    coords[i - 1] = m.u.rename(ren)
    coords[j - 1] = m.v.rename(ren)
    return TripleMap(coords)


def compose_triple(f: TripleMap, g: TripleMap) -> TripleMap:
    """f o g (apply g first)."""
    assign = {s: c for s, c in zip(SLOTS, g.coords)}
    cache: dict = {}
    out = []
    for k, c in enumerate(f.coords):
        if c.den.is_const() and c.num == Poly.var(SLOTS[k]) and c.den.const_value() == 1:
            out.append(g.coords[k])
        else:
            out.append(ratfun_subst(c, assign, cache))
    return TripleMap(out)


def yb_sides(m: YBMap) -> tuple[TripleMap, TripleMap]:
    """(R23 R13 R12, R12 R13 R23) with symbolic parameters alpha1..alpha3."""
    r12, r13, r23 = lift(m, 1, 2), lift(m, 1, 3), lift(m, 2, 3)
    ident = TripleMap.identity()
    lhs = compose_triple(r23, compose_triple(r13, compose_triple(r12, ident)))
    rhs = compose_triple(r12, compose_triple(r13, compose_triple(r23, ident)))
    return lhs, rhs


def _compare(check: str, subject: str, pairs, cheap_limit: int = 200_000) -> Certificate:
    diffs = []
    verdict = True
    witness = None
    for a, b in pairs:
        if ratfun_eq(a, b):
            diffs.append(Poly())
            continue
        verdict = False
        if witness is None:
            witness = probe_unequal(a, b, tries=20)
            if witness is not None:
                witness = {k: str(v) for k, v in witness.items()}
        size = len(a.num) * len(b.den) + len(b.num) * len(a.den)
        diffs.append(cross_difference(a, b) if size <= cheap_limit else None)
    return Certificate(check, subject, verdict, "symbolic", diffs, witness)


def yb_check_symbolic(m: YBMap) -> Certificate:
    try:
        lhs, rhs = yb_sides(m)
    except SubstitutionDegenerate as e:
        return Certificate("yb", m.name, False, "symbolic", notes=[f"degenerate composition: {e}"])
    return _compare("yb", m.name, zip(lhs.coords, rhs.coords))


def _swap_params(m: YBMap) -> YBMap:
    if not m.params:
        return m
    a, b = m.params
    return m.reparametrize({a: var(b), b: var(a)})


def _apply(m: YBMap, x: RatFun, y: RatFun) -> tuple[RatFun, RatFun]:
    assign = {"x": x, "y": y}
    cache: dict = {}
    return ratfun_subst(m.u, assign, cache), ratfun_subst(m.v, assign, cache)


def reversibility_check(m: YBMap) -> Certificate:
    """R21(mu, lambda) o R(lambda, mu) = Id, with R21 = swap o R o swap."""
    u, v = m.u, m.v
    ms = _swap_params(m)
    u2, v2 = _apply(ms, v, u)
    return _compare("reversible", m.name, [(v2, var("x")), (u2, var("y"))])


def involution_check(m: YBMap) -> Certificate:
    u2, v2 = _apply(m, m.u, m.v)
    return _compare("involution", m.name, [(u2, var("x")), (v2, var("y"))])


def map_equal(a: YBMap, b: YBMap) -> bool:
    if tuple(a.params) != tuple(b.params):
        raise ValueError("maps have different parameter alphabets")
    return ratfun_eq(a.u, b.u) and ratfun_eq(a.v, b.v)


class SymFamily:
    """A parameter-dependent Moebius map x -> phi(lambda)(x).

    ``expr`` is linear-fractional in ``x`` with coefficients depending on the
    parameter named ``param``.
    """

    def __init__(self, expr, param: str = "alpha", name: str = ""):
        if isinstance(expr, str):
            from .parser import parse_expr
            name = name or expr
            expr = parse_expr(expr, params=(param,))
        self.expr = RatFun.coerce(expr)
        self.param = param
        self.name = name or self.expr.to_text()
        n, d = self.expr.num, self.expr.den
        if n.degree_in("x") > 1 or d.degree_in("x") > 1:
            raise ValueError("family must be linear-fractional in x")
        nc, dc = n.coeffs_in("x"), d.coeffs_in("x")
        z = Poly()
        self._abcd = (nc.get(1, z), nc.get(0, z), dc.get(1, z), dc.get(0, z))
        a, b, c, dd = self._abcd
        if (a * dd - b * c).is_zero():
            raise ValueError("family has identically zero determinant")

    @classmethod
    def moebius(cls, m, name: str = "") -> "SymFamily":
        return cls(m.as_ratfun("x"), name=name or m.to_text())

    def at(self, p, v: str = "x") -> RatFun:
        """phi(p) as a function of ``v``, for a parameter value / expression."""
        sub = {}
        if self.param in _names(self.expr):
            sub[self.param] = RatFun.coerce(p)
        if v != "x":
            sub["x"] = var(v)
        return self.expr.subs(sub) if sub else self.expr

    def apply(self, f: RatFun, p) -> RatFun:
        """phi(p)(f)."""
        return self.at(p).subs({"x": f})

    def inverse(self) -> "SymFamily":
        a, b, c, d = self._abcd
        x = Poly.var("x")
        return SymFamily(RatFun(d * x - b, a - c * x), self.param, f"inv({self.name})")

    def is_involutive(self) -> bool:
        lam = var(self.param)
        return ratfun_eq(self.apply(self.at(lam), lam), var("x"))


def _names(f: RatFun) -> set[str]:
    al = alphabet()
    return {al[i] for i in f.variables()}


def _params2(m: YBMap) -> tuple[str, str]:
    if len(m.params) == 2:
        return m.params[0], m.params[1]
    if not m.params:
        raise ValueError("parameter-free map: pass explicit parameter values")
    raise ValueError("need a two-parameter map")


def symmetry_check(m: YBMap, s: SymFamily) -> Certificate:
    """s(lambda) x s(mu) o R = R o s(lambda) x s(mu)."""
    if not s.is_involutive():
        raise NotInvolutive(f"{s.name} is not an involution")
    la, mu = _params2(m)
    left = (s.apply(m.u, var(la)), s.apply(m.v, var(mu)))
    right = _apply(m, s.at(var(la)), s.at(var(mu), "y"))
    return _compare("symmetry", f"{m.name} / {s.name}", zip(left, right))


def twist(m: YBMap, s: SymFamily, check: bool = True) -> YBMap:
    """R^s = s(lambda) x Id o R o Id x s(mu)."""
    if check:
        cert = symmetry_check(m, s)
        if not cert.verdict:
            raise ValueError(f"{s.name} is not a symmetry of {m.name}")
    la, mu = _params2(m)
    u, v = _apply(m, var("x"), s.at(var(mu), "y"))
    return YBMap(s.apply(u, var(la)), v, params=m.params, name=f"twist({m.name}, {s.name})")


def equivalence_transform(m: YBMap, phi: SymFamily, reparam: RatFun | None = None) -> YBMap:
    """phi(l)^-1 x phi(m)^-1 o R(r(l), r(m)) o phi(l) x phi(m).

    ``reparam`` is a function of ``alpha`` applied to each parameter.
    """
    mm = m
    if reparam is not None and m.params:
        r = RatFun.coerce(reparam)
        mm = m.reparametrize({p: r.subs({"alpha": var(p)}) for p in m.params})
    if m.params:
        la, mu = _params2(m)
    else:
        la = mu = phi.param
    inv = phi.inverse()
    u, v = _apply(mm, phi.at(var(la)), phi.at(var(mu), "y"))
    return YBMap(inv.apply(u, var(la)), inv.apply(v, var(mu)), params=m.params,
                 name=f"equiv({m.name}, {phi.name})")



def conjugate(m: YBMap, psi: SymFamily, reparam: RatFun | None = None) -> YBMap:
    """psi x psi o R o psi^-1 x psi^-1, i.e. the equivalence with phi = psi^-1."""
    return equivalence_transform(m, psi.inverse(), reparam)

# -- numeric backend ----------------------------------------------------------

def sample_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _sample_rng(seed: int, index: int, attempt: int = 0) -> random.Random:
    return random.Random(f"{seed}:{index}:{attempt}")


def _triple_maps(maps, params):
    if isinstance(maps, YBMap):
        if params is None:
            raise ValueError("a single map needs a parameter triple")
        a1, a2, a3 = params
        return maps.numeric((a1, a2)), maps.numeric((a1, a3)), maps.numeric((a2, a3))
    r12, r13, r23 = maps
    return r12.numeric(), r13.numeric(), r23.numeric()


def yb_sides_at(r12, r13, r23, pt):
    x, y, z = pt
    a, b = r12(x, y)
    a, c = r13(a, z)
    b, c = r23(b, c)
    lhs = (a, b, c)
    b2, c2 = r23(y, z)
    a2, c2 = r13(x, c2)
    a2, b2 = r12(a2, b2)
    return lhs, (a2, b2, c2)


def yb_check_numeric(maps, samples: int = 100, seed: int = 0, params=None,
                     bound: int = 10 ** 6, max_attempts: int = 20) -> Certificate:
    """Compare both sides of YB at seeded random rational points.

    ``maps`` is either ``(R12, R13, R23)`` (parameter-free maps) or a single
    two-parameter map together with ``params = (a1, a2, a3)``.
    """
    r12, r13, r23 = _triple_maps(maps, params)
    subject = maps.name if isinstance(maps, YBMap) else "/".join(m.name or "map" for m in maps)
    verdict, witness = True, None
    used = 0
    for idx in range(samples):
        for attempt in range(max_attempts):
            rng = _sample_rng(seed, idx, attempt)
            pt = tuple(PPoint(sample_rational(rng, bound)) for _ in range(3))
            try:
                lhs, rhs = yb_sides_at(r12, r13, r23, pt)
            except SingularPoint:
                continue
            break
        else:
            raise SampleExhaustion(f"no regular sample found for index {idx}")
        used += 1
        if lhs != rhs:
            verdict = False
            witness = {
                "point": [p.to_text() for p in pt],
                "lhs": [p.to_text() for p in lhs],
                "rhs": [p.to_text() for p in rhs],
            }
            break
    cert = Certificate("yb", subject, verdict, "numeric", witness=witness, seed=seed, samples=used)
    if params is not None:
        cert.notes.append("params=" + ",".join(str(Fraction(p)) for p in params))
    return cert


def _identity_check_numeric(check: str, m: YBMap, step, samples: int, seed: int,
                            params, bound: int, max_attempts: int) -> Certificate:
    """``step(P, Q)`` must return (P, Q) at seeded random points."""
    verdict, witness, used = True, None, 0
    for idx in range(samples):
        for attempt in range(max_attempts):
            rng = _sample_rng(seed, idx, attempt)
            pt = (PPoint(sample_rational(rng, bound)), PPoint(sample_rational(rng, bound)))
            try:
                back = step(*pt)
            except SingularPoint:
                continue
            break
        else:
            raise SampleExhaustion(f"no regular sample found for index {idx}")
        used += 1
        if tuple(back) != pt:
            verdict = False
            witness = {"point": [p.to_text() for p in pt], "image": [p.to_text() for p in back]}
            break
    cert = Certificate(check, m.name, verdict, "numeric", witness=witness, seed=seed, samples=used)
    if params:
        cert.notes.append("params=" + ",".join(str(Fraction(p)) for p in params))
    return cert


def reversibility_check_numeric(m: YBMap, params=(), samples: int = 100, seed: int = 0,
                                bound: int = 10 ** 6, max_attempts: int = 20) -> Certificate:
    params = tuple(params)
    f = m.numeric(params)
    g = m.numeric(params[::-1])

    def step(P, Q):
        u, v = f(P, Q)
        u2, v2 = g(v, u)
        return v2, u2

    return _identity_check_numeric("reversible", m, step, samples, seed, params, bound, max_attempts)


def involution_check_numeric(m: YBMap, params=(), samples: int = 100, seed: int = 0,
                             bound: int = 10 ** 6, max_attempts: int = 20) -> Certificate:
    params = tuple(params)
    f = m.numeric(params)
    return _identity_check_numeric("involution", m, lambda P, Q: f(*f(P, Q)), samples, seed,
                                   params, bound, max_attempts)
