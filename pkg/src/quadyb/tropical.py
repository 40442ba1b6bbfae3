"""Max-plus (ultradiscrete) limits of subtraction-free maps.

A positive polynomial sum c_k x^{i_k} y^{j_k} a^{l_k} ... becomes
max_k(i_k X + j_k Y + l_k A + ...); products become sums and quotients
differences.  Expressions are kept as integer linear combinations of
variables and ``max`` atoms, so equal atoms cancel exactly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Poly, alphabet, mono_exponents
from .catalog import YBMap
from .engine import Certificate
from .errors import NotSubtractionFree

_TROP_NAMES = {"x": "X", "y": "Y", "z": "Z"}


@dataclass(frozen=True)
class Max:
    """max of two or more linear forms (each a ``TropExpr`` without atoms)."""

    args: tuple["TropExpr", ...]

    def key(self) -> str:
        return "max(" + ", ".join(a.to_text() for a in self.args) + ")"


class TropExpr:
    """sum(coeff * atom) + const, with atoms variable names or ``Max``."""

    __slots__ = ("lin", "const")

    def __init__(self, lin: Mapping | None = None, const: int = 0):
        self.lin = {k: c for k, c in (lin or {}).items() if c}
        self.const = const

    @classmethod
    def var(cls, name: str) -> "TropExpr":
        return cls({name: 1})

    @classmethod
    def maximum(cls, args: Sequence["TropExpr"]) -> "TropExpr":
        """max(args), with the common linear part pulled out: max(a + c, b + c) = c + max(a, b)."""
        if any(a.maxima() for a in args):
            raise ValueError("nested max is not supported")
        keys = {k for a in args for k in a.lin}
        low = {k: min(a.lin.get(k, 0) for a in args) for k in keys}
        c = min(a.const for a in args)
        base = cls(low, c)
        uniq: dict[str, TropExpr] = {}
        for a in args:
            r = a - base
            uniq.setdefault(r.to_text(), r)
        if len(uniq) == 1:
            return base + next(iter(uniq.values()))
        return base + cls({Max(tuple(uniq[k] for k in sorted(uniq))): 1})

    def __add__(self, o: "TropExpr") -> "TropExpr":
        lin = dict(self.lin)
        for k, c in o.lin.items():
            lin[k] = lin.get(k, 0) + c
        return TropExpr(lin, self.const + o.const)

    def __neg__(self) -> "TropExpr":
        return TropExpr({k: -c for k, c in self.lin.items()}, -self.const)

    def __sub__(self, o: "TropExpr") -> "TropExpr":
        return self + (-o)

    def __eq__(self, o):
        return isinstance(o, TropExpr) and self.to_text() == o.to_text()

    def __hash__(self):
        return hash(self.to_text())

    def subs(self, mapping: Mapping[str, "TropExpr"]) -> "TropExpr":
        out = TropExpr(const=self.const)
        for k, c in self.lin.items():
            if isinstance(k, Max):
                t = TropExpr.maximum([a.subs(mapping) for a in k.args])
            else:
                t = mapping.get(k, TropExpr.var(k))
            out = out + TropExpr({a: b * c for a, b in t.lin.items()}, t.const * c)
        return out

    def eval(self, env: Mapping[str, int]) -> int:
        tot = self.const
        for k, c in self.lin.items():
            if isinstance(k, Max):
                tot += c * max(a.eval(env) for a in k.args)
            else:
                tot += c * env[k]
        return tot

    def maxima(self) -> list[Max]:
        return [k for k in self.lin if isinstance(k, Max)]

    def _items(self):
        def order(item):
            k = item[0]
            return (1, k.key()) if isinstance(k, Max) else (0, k)
        return sorted(self.lin.items(), key=order)

    def to_text(self) -> str:
        parts = []
        for k, c in self._items():
            name = k.key() if isinstance(k, Max) else k
            mag = abs(c)
            t = name if mag == 1 else f"{mag}*{name}"
            parts.append(("-" if c < 0 else "+", t))
        if self.const or not parts:
            parts.append(("-" if self.const < 0 else "+", str(abs(self.const))))
        s = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, t in parts[1:]:
            s += f" {sign} {t}"
        return s

    __str__ = to_text

    def __repr__(self):
        return f"TropExpr({self.to_text()})"


@dataclass
class TropMap:
    U: TropExpr
    V: TropExpr
    params: tuple[str, ...] = ("A", "B")
    name: str = ""

    def __call__(self, params: Sequence[int], point: Sequence[int]) -> tuple[int, int]:
        return trop_eval(self, params, point)

    def to_text(self) -> str:
        return f"U = {self.U.to_text()}; V = {self.V.to_text()}"


def _trop_poly(p: Poly, names: Mapping[int, str]) -> TropExpr:
    if p.is_zero():
        raise NotSubtractionFree("zero polynomial has no tropical limit")
    forms = []
    for m, c in p.terms.items():
        if c <= 0:
            raise NotSubtractionFree(f"coefficient {c} is not positive")
        forms.append(TropExpr({names[i]: e for i, e in mono_exponents(m).items()}))
    return TropExpr.maximum(forms)


def ultradiscretize(m: YBMap) -> TropMap:
    """The max-plus limit of a subtraction-free map."""
    pos = m.positive if m.positive is not None else (m if m.subtraction_free else None)
    if pos is None:
        raise NotSubtractionFree(f"{m.name or 'map'} has no subtraction-free form")
    al = alphabet()
    tnames = [chr(ord("A") + k) for k in range(len(pos.params))]
    pmap = dict(zip(pos.params, tnames))
    names = {}
    for i, n in enumerate(al):
        names[i] = _TROP_NAMES.get(n, pmap.get(n, n))
    f = [_trop_poly(g.num, names) - _trop_poly(g.den, names) for g in (pos.u, pos.v)]
    return TropMap(f[0], f[1], tuple(tnames), f"trop({m.name})" if m.name else "")


def trop_eval(t: TropMap, params: Sequence[int], point: Sequence[int]) -> tuple[int, int]:
    env = dict(zip(t.params, params))
    env["X"], env["Y"] = point
    return t.U.eval(env), t.V.eval(env)


def _yb_sides(t: TropMap, a: Sequence[int], pt: Sequence[int]):
    a1, a2, a3 = a
    x, y, z = pt
    r12 = lambda p, q: trop_eval(t, (a1, a2), (p, q))  # noqa: E731
    r13 = lambda p, q: trop_eval(t, (a1, a3), (p, q))  # noqa: E731
    r23 = lambda p, q: trop_eval(t, (a2, a3), (p, q))  # noqa: E731
    p, q = r12(x, y)
    p, r = r13(p, z)
    q, r = r23(q, r)
    q2, r2 = r23(y, z)
    p2, r2 = r13(x, r2)
    p2, q2 = r12(p2, q2)
    return (p, q, r), (p2, q2, r2)


def trop_yb_check(t: TropMap, samples: int = 10_000, seed: int = 0, rng_range: int = 1000) -> Certificate:
    """Both YB composition orders at seeded integer triples and parameters."""
    rng = random.Random(seed)
    R = rng_range
    for k in range(samples):
        a = [rng.randint(-R, R) for _ in range(3)]
        pt = [rng.randint(-R, R) for _ in range(3)]
        lhs, rhs = _yb_sides(t, a, pt)
        if lhs != rhs:
            w = {"params": a, "point": pt, "lhs": list(lhs), "rhs": list(rhs), "index": k}
            return Certificate("trop_yb", t.name, False, "numeric", witness=w, seed=seed, samples=k + 1)
    return Certificate("trop_yb", t.name, True, "numeric", seed=seed, samples=samples)


def trop_involution_check(t: TropMap, samples: int = 1000, seed: int = 0, rng_range: int = 1000) -> Certificate:
    rng = random.Random(seed)
    R = rng_range
    for k in range(samples):
        a = (rng.randint(-R, R), rng.randint(-R, R))
        pt = (rng.randint(-R, R), rng.randint(-R, R))
        back = trop_eval(t, a, trop_eval(t, a, pt))
        if back != tuple(pt):
            w = {"params": list(a), "point": list(pt), "image": list(back)}
            return Certificate("trop_involution", t.name, False, "numeric", witness=w, seed=seed, samples=k + 1)
    return Certificate("trop_involution", t.name, True, "numeric", seed=seed, samples=samples)


def equal_parameter_form(t: TropMap) -> tuple[TropExpr, TropExpr]:
    """(U, V) with B replaced by A, simplified exactly."""
    A = TropExpr.var(t.params[0])
    sub = {t.params[1]: A}
    return t.U.subs(sub), t.V.subs(sub)


def _has_tie(e: TropExpr, env) -> bool:
    for mx in e.maxima():
        vals = sorted((a.eval(env) for a in mx.args), reverse=True)
        if len(vals) > 1 and vals[0] == vals[1]:
            return True
    return False


def _int_log(v: Fraction, base: int) -> int:
    if v <= 0:
        raise ValueError("value is not positive")
    return round((math.log(v.numerator) - math.log(v.denominator)) / math.log(base))


def degeneration_check(m: YBMap, cases: int = 100, seed: int = 0, base: int = 10 ** 6,
                       exp_range: int = 6, max_tries: int = 100_000) -> Certificate:
    """log_t of the rational map at t^X, t^Y, t^A, t^B equals the tropical map.

    Only exponent vectors without ties in any max are used.
    """
    t = ultradiscretize(m)
    pos = m.positive if m.positive is not None else m
    rng = random.Random(seed)
    done = tries = 0
    while done < cases:
        tries += 1
        if tries > max_tries:
            break
        A, B, X, Y = (rng.randint(-exp_range, exp_range) for _ in range(4))
        env = {t.params[0]: A, t.params[1]: B, "X": X, "Y": Y}
        if _has_tie(t.U, env) or _has_tie(t.V, env):
            continue
        tv = Fraction(base)
        vals = {pos.params[0]: tv ** A, pos.params[1]: tv ** B, "x": tv ** X, "y": tv ** Y}
        got = (_int_log(Fraction(pos.u.eval(vals)), base), _int_log(Fraction(pos.v.eval(vals)), base))
        want = trop_eval(t, (A, B), (X, Y))
        if got != want:
            w = {"exponents": [A, B, X, Y], "log": list(got), "trop": list(want)}
            return Certificate("degeneration", t.name, False, "numeric", witness=w, seed=seed, samples=done + 1)
        done += 1
    cert = Certificate("degeneration", t.name, done >= cases, "numeric", seed=seed, samples=done)
    if done < cases:
        cert.notes.append(f"only {done} tie-free cases found")
    return cert
