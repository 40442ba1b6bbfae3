"""Sparse multivariate polynomials and rational functions over Q.

Monomials are packed into a single Python int, ``_BITS`` bits per variable,
so multiplying monomials is integer addition.  Variables live in one
process-wide alphabet: ``x, y, z`` first, then parameters in registration
order.  Coefficients are ``int`` whenever integral, otherwise ``Fraction``.

Rational functions are *not* reduced; equality is decided by
cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import DivisionByZeroFunction, SubstitutionDegenerate

try:
    import flint as _flint
except ImportError:  # pragma: no cover - pure-Python fallback
    _flint = None

# products with more term pairs than this go through FLINT when available
FLINT_THRESHOLD = 40_000

_BITS = 16
_MASK = (1 << _BITS) - 1

_ALPHABET: list[str] = []
_INDEX: dict[str, int] = {}

Rat = Fraction


def _norm_coeff(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c.numerator, c.denominator)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"non-rational coefficient {c!r}")


def to_rat(c) -> Fraction:
    """Coerce an int / Fraction / 'p/q' string to a Fraction."""
    if isinstance(c, str):
        return Fraction(c.strip())
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, Rational):
        return Fraction(c.numerator, c.denominator)
    raise TypeError(f"cannot convert {c!r} to a rational")


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if self.name not in _INDEX:
            if len(_ALPHABET) >= 64:
                raise ValueError("alphabet exhausted")
            _INDEX[self.name] = len(_ALPHABET)
            _ALPHABET.append(self.name)

    @property
    def id(self) -> int:
        return _INDEX[self.name]

    @property
    def poly(self) -> "Poly":
        return Poly({1 << (_BITS * self.id): 1})

    def __str__(self):
        return self.name


for _n in ("x", "y", "z", "alpha", "beta", "alpha1", "alpha2", "alpha3"):
    Var(_n)

X, Y, Z = Var("x"), Var("y"), Var("z")


def alphabet() -> tuple[str, ...]:
    return tuple(_ALPHABET)


def _vid(v) -> int:
    if isinstance(v, Var):
        return v.id
    if isinstance(v, str):
        return Var(v).id
    return int(v)


def mono_exponents(m: int) -> dict[int, int]:
    out = {}
    i = 0
    while m:
        e = m & _MASK
        if e:
            out[i] = e
        m >>= _BITS
        i += 1
    return out


def mono_degree(m: int) -> int:
    d = 0
    while m:
        d += m & _MASK
        m >>= _BITS
    return d


def _mono_key(m: int):
    # graded lex, descending: higher degree first, then larger exponent of
    # earlier alphabet letters first
    exps = mono_exponents(m)
    n = max(exps, default=-1) + 1
    vec = [exps.get(i, 0) for i in range(max(n, 1))]
    return (-sum(vec), [-e for e in vec])


class Poly:
    """Immutable sparse polynomial; ``terms`` maps packed monomial -> coeff."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {m: _norm_coeff(c) for m, c in terms.items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({0: c}) if c != 0 else cls()

    @classmethod
    def var(cls, v) -> "Poly":
        return cls._raw({1 << (_BITS * _vid(v)): 1})

    @classmethod
    def monomial(cls, exps: Mapping, c=1) -> "Poly":
        m = 0
        for v, e in exps.items():
            if e < 0 or e > _MASK:
                raise ValueError("exponent out of range")
            m += e << (_BITS * _vid(v))
        return cls({m: c})

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.terms.get(0, 0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(o) -> "Poly":
        if isinstance(o, Poly):
            return o
        if isinstance(o, (int, Fraction)):
            return Poly.const(o)
        if isinstance(o, Var):
            return o.poly
        return NotImplemented

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                del out[m]
        return Poly._raw(out)

    def __rsub__(self, other):
        return Poly._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            c0 = _norm_coeff(other)
            return Poly._raw({m: _norm_coeff(c * c0) for m, c in self.terms.items()})
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly()
        if len(b) == 1:
            ((m2, c2),) = b.items()
            return Poly._raw({m + m2: _norm_coeff(c * c2) for m, c in a.items()})
        if len(a) == 1:
            ((m1, c1),) = a.items()
            return Poly._raw({m + m1: _norm_coeff(c * c1) for m, c in b.items()})
        if _flint is not None and len(a) * len(b) > FLINT_THRESHOLD:
            return _flint_mul(a, b)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        fractional = False
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                k = m1 + m2
                out[k] = get(k, 0) + c1 * c2
        for k in [k for k, c in out.items() if not c]:
            del out[k]
        for c in out.values():
            if type(c) is Fraction:
                fractional = True
                break
        if fractional:
            out = {k: _norm_coeff(c) for k, c in out.items()}
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure ----------------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self.terms), default=-1)

    def degree_in(self, v) -> int:
        i = _BITS * _vid(v)
        return max(((m >> i) & _MASK for m in self.terms), default=-1)

    def variables(self) -> set[int]:
        seen = 0
        for m in self.terms:
            seen |= m
        out = set()
        i = 0
        while seen:
            if seen & _MASK:
                out.add(i)
            seen >>= _BITS
            i += 1
        return out

    def coeffs_in(self, v) -> dict[int, "Poly"]:
        """Collect as a polynomial in ``v``: power -> coefficient Poly."""
        i = _BITS * _vid(v)
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = (m >> i) & _MASK
            out.setdefault(e, {})[m - (e << i)] = c
        return {e: Poly._raw(t) for e, t in out.items()}

    def coeff_in(self, v, k: int) -> "Poly":
        return self.coeffs_in(v).get(k, Poly())

    def coefficients(self) -> list:
        return list(self.terms.values())

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators / lcm of denominators)."""
        if not self.terms:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self.terms.values()]
        dens = [Fraction(c).denominator for c in self.terms.values()]
        g = reduce(gcd, nums)
        lcm = reduce(lambda a, b: a * b // gcd(a, b), dens, 1)
        return Fraction(abs(g), lcm)

    def leading(self):
        """(monomial, coeff) of the grlex-leading term."""
        m = min(self.terms, key=_mono_key)
        return m, self.terms[m]

    def primitive(self) -> "Poly":
        """Integer coefficients, gcd 1, positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading()[1] < 0:
            c = -c
        return self * (1 / c)

    # -- evaluation ---------------------------------------------------------
    def eval(self, point: Mapping):
        """Exact value; ``int`` when the point and coefficients are integral."""
        pt = {_vid(k): _norm_coeff(to_rat(v)) for k, v in point.items()}
        total = 0
        cache: dict = {}
        for m, c in self.terms.items():
            val = c
            i = 0
            while m:
                e = m & _MASK
                if e:
                    if i not in pt:
                        raise KeyError(f"unassigned variable {_ALPHABET[i]}")
                    key = (i, e)
                    p = cache.get(key)
                    if p is None:
                        p = cache[key] = pt[i] ** e
                    val *= p
                m >>= _BITS
                i += 1
            total += val
        return _norm_coeff(total) if type(total) is Fraction else total

    def specialize(self, point: Mapping) -> "Poly":
        """Substitute rational values for some variables."""
        pt = {_vid(k): to_rat(v) for k, v in point.items()}
        out: dict = {}
        for m, c in self.terms.items():
            val = Fraction(c)
            rest = m
            for i, x in pt.items():
                e = (m >> (_BITS * i)) & _MASK
                if e:
                    val *= x ** e
                    rest -= e << (_BITS * i)
            if val:
                out[rest] = out.get(rest, 0) + val
        return Poly(out)

    def rename(self, mapping: Mapping) -> "Poly":
        """Rename variables (a permutation or injective relabelling)."""
        mp = {_vid(a): _vid(b) for a, b in mapping.items()}
        out: dict = {}
        for m, c in self.terms.items():
            nm = 0
            for i, e in mono_exponents(m).items():
                nm += e << (_BITS * mp.get(i, i))
            out[nm] = out.get(nm, 0) + c
        return Poly(out)

    # -- text ---------------------------------------------------------------
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_mono_key):
            c = self.terms[m]
            factors = []
            for i, e in sorted(mono_exponents(m).items()):
                name = _ALPHABET[i]
                factors.append(name if e == 1 else f"{name}^{e}")
            neg = c < 0
            a = -c if neg else c
            if factors:
                body = "*".join(factors)
                if a != 1:
                    body = f"{a}*{body}"
            else:
                body = str(a)
            parts.append(("-", body) if neg else ("+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Poly({self.to_text()!r})"


def _lcm_den(terms) -> int:
    out = 1
    for c in terms.values():
        if type(c) is Fraction:
            d = c.denominator
            out = out * d // gcd(out, d)
    return out


def _to_flint(terms: dict, ctx, nvars: int, scale: int):
    d = {}
    for m, c in terms.items():
        e = [0] * nvars
        i = 0
        while m:
            e[i] = m & _MASK
            m >>= _BITS
            i += 1
        d[tuple(e)] = int(c * scale)
    return ctx.from_dict(d)


def _from_flint(fp, scale: int) -> dict:
    out = {}
    for e, c in fp.to_dict().items():
        m = 0
        for i, k in enumerate(e):
            if k:
                m += k << (_BITS * i)
        c = int(c)
        out[m] = c if scale == 1 else _norm_coeff(Fraction(c, scale))
    return out


def _flint_ctx():
    return _flint.fmpz_mpoly_ctx.get(tuple(_ALPHABET), "deglex")


def _flint_mul(a: dict, b: dict) -> "Poly":
    ctx = _flint_ctx()
    n = len(_ALPHABET)
    sa, sb = _lcm_den(a), _lcm_den(b)
    r = _to_flint(a, ctx, n, sa) * _to_flint(b, ctx, n, sb)
    return Poly._raw(_from_flint(r, sa * sb))


def _subs_parts(p: Poly, assign: dict[int, tuple[Poly, Poly]], cache: dict):
    """Substitute ``v -> N_v/D_v`` into ``p``.

    Returns ``(P, d)`` with ``p(N/D) = P / prod D_v**d[v]``, where ``d[v]`` is
    the degree of ``p`` in ``v``.
    """
    idxs = [i for i in assign if p.degree_in(i) > 0]
    degs = {i: max(p.degree_in(i), 0) for i in assign}
    if not p.terms:
        return p, degs
    groups: dict[tuple, dict] = {}
    for m, c in p.terms.items():
        sig = tuple((m >> (_BITS * i)) & _MASK for i in idxs)
        rest = m
        for e, i in zip(sig, idxs):
            rest -= e << (_BITS * i)
        groups.setdefault(sig, {})[rest] = c

    def power(i, which, k):
        key = (i, which, k)
        r = cache.get(key)
        if r is None:
            if k == 0:
                r = Poly.const(1)
            elif k == 1:
                r = assign[i][which]
            else:
                r = power(i, which, k // 2) * power(i, which, k - k // 2)
            cache[key] = r
        return r

    total = Poly()
    prod_cache: dict = {}
    for sig, rest in groups.items():
        key = (sig, tuple(degs[i] for i in idxs))
        f = prod_cache.get(key)
        if f is None:
            f = Poly.const(1)
            for e, i in zip(sig, idxs):
                f = f * power(i, 0, e)
                den = assign[i][1]
                if not den.is_const() or den.const_value() != 1:
                    f = f * power(i, 1, degs[i] - e)
            prod_cache[key] = f
        total = total + f * Poly._raw(rest)
    return total, degs


class RatFun:
    """Quotient ``num/den`` of polynomials; never implicitly reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly._coerce(num) if not isinstance(num, Poly) else num
        if den is None:
            den = Poly.const(1)
        elif not isinstance(den, Poly):
            den = Poly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFun needs polynomial parts")
        if den.is_zero():
            raise DivisionByZeroFunction("denominator is the zero polynomial")
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, o) -> "RatFun":
        if isinstance(o, RatFun):
            return o
        if isinstance(o, str):
            return cls(Poly.const(to_rat(o)))
        return cls(o)

    @classmethod
    def var(cls, v) -> "RatFun":
        return cls(Poly.var(v))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        return Fraction(self.num.const_value()) / Fraction(self.den.const_value())

    def __add__(self, o):
        o = RatFun.coerce(o)
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, o):
        return self + (-RatFun.coerce(o))

    def __rsub__(self, o):
        return RatFun.coerce(o) - self

    def __mul__(self, o):
        o = RatFun.coerce(o)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = RatFun.coerce(o)
        if o.num.is_zero():
            raise DivisionByZeroFunction("division by the zero function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, o):
        return RatFun.coerce(o) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFun(1) / (self ** (-n))
        return RatFun(self.num ** n, self.den ** n)

    def inv(self) -> "RatFun":
        return RatFun(1) / self

    def equals(self, o) -> bool:
        return ratfun_eq(self, RatFun.coerce(o))

    def eval(self, point: Mapping) -> Fraction:
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at point")
        return _norm_coeff(Fraction(self.num.eval(point)) / d)

    def specialize(self, point: Mapping) -> "RatFun":
        den = self.den.specialize(point)
        if den.is_zero():
            raise SubstitutionDegenerate("denominator vanishes identically")
        return RatFun(self.num.specialize(point), den)

    def rename(self, mapping: Mapping) -> "RatFun":
        return RatFun(self.num.rename(mapping), self.den.rename(mapping))

    def subs(self, assignment: Mapping) -> "RatFun":
        return ratfun_subst(self, assignment)

    def reduced(self) -> "RatFun":
        """Cancel the polynomial gcd of numerator and denominator."""
        if _flint is None or self.num.is_zero() or self.den.is_const():
            return self.normalized()
        ctx = _flint_ctx()
        n = len(_ALPHABET)
        sn, sd = _lcm_den(self.num.terms), _lcm_den(self.den.terms)
        fn = _to_flint(self.num.terms, ctx, n, sn)
        fd = _to_flint(self.den.terms, ctx, n, sd)
        g = fn.gcd(fd)
        num = Poly._raw(_from_flint(fn / g, 1)) * Fraction(sd, sn)
        return RatFun(num, Poly._raw(_from_flint(fd / g, 1))).normalized()

    def normalized(self) -> "RatFun":
        """Cancel the common rational content and make the denominator's
        leading coefficient positive.  The value is unchanged."""
        if self.num.is_zero():
            return RatFun(Poly(), Poly.const(1))
        cn, cd = self.num.content(), self.den.content()
        g = Fraction(gcd(cn.numerator, cd.numerator), cn.denominator * cd.denominator // gcd(cn.denominator, cd.denominator))
        if self.den.leading()[1] < 0:
            g = -g
        return RatFun(self.num * (1 / g), self.den * (1 / g))

    def variables(self) -> set[int]:
        return self.num.variables() | self.den.variables()

    def degree_in(self, v) -> int:
        return max(self.num.degree_in(v), self.den.degree_in(v))

    def to_text(self) -> str:
        n = self.num.to_text()
        if self.den == Poly.const(1):
            return n
        return f"({n})/({self.den.to_text()})"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RatFun({self.to_text()!r})"

    def __eq__(self, o):
        if isinstance(o, (RatFun, Poly, int, Fraction)):
            return ratfun_eq(self, RatFun.coerce(o))
        return NotImplemented

    __hash__ = None


Scalar = Union[int, Fraction]


def poly_arith(op: str, a: Poly, b=None) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown op {op!r}")


def ratfun_arith(op: str, f: RatFun, g: RatFun | None = None) -> RatFun:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    if op == "neg":
        return -f
    raise ValueError(f"unknown op {op!r}")


def ratfun_eq(f: RatFun, g: RatFun) -> bool:
    if f.num.is_zero() or g.num.is_zero():
        return f.num.is_zero() and g.num.is_zero()
    if f.den == g.den:
        return f.num == g.num
    if len(f.num) * len(g.den) > 1000 and probe_unequal(f, g) is not None:
        return False
    return cross_difference(f, g).is_zero()


def cross_difference(f: RatFun, g: RatFun) -> Poly:
    """``f.num*g.den - g.num*f.den``; zero iff the functions are equal."""
    big = len(f.num) * len(g.den) + len(g.num) * len(f.den) > FLINT_THRESHOLD
    if _flint is not None and big:
        ctx = _flint_ctx()
        n = len(_ALPHABET)
        s1, s2 = _lcm_den(f.num.terms), _lcm_den(g.den.terms)
        s3, s4 = _lcm_den(g.num.terms), _lcm_den(f.den.terms)
        scale = s1 * s2 * s3 * s4
        a = _to_flint(f.num.terms, ctx, n, s1) * _to_flint(g.den.terms, ctx, n, s2)
        b = _to_flint(g.num.terms, ctx, n, s3) * _to_flint(f.den.terms, ctx, n, s4)
        return Poly._raw(_from_flint(a * (s3 * s4) - b * (s1 * s2), scale))
    return f.num * g.den - g.num * f.den


def probe_unequal(f: RatFun, g: RatFun, rng=None, tries: int = 3):
    """Exact evaluation at random integer points.

    Returns a point where ``f`` and ``g`` differ, or ``None`` if no difference
    was seen (which proves nothing).
    """
    import random

    rng = rng or random.Random(0x5EED)
    names = sorted(f.variables() | g.variables())
    for _ in range(tries):
        pt = {i: rng.randint(-97, 97) for i in names}
        fd, gd = f.den.eval(pt), g.den.eval(pt)
        if fd == 0 or gd == 0:
            continue
        if f.num.eval(pt) * gd != g.num.eval(pt) * fd:
            return {_ALPHABET[i]: v for i, v in pt.items()}
    return None


def ratfun_subst(f: RatFun, assignment: Mapping, _cache: dict | None = None) -> RatFun:
    """Substitute rational functions for variables, clearing denominators.

    Unassigned variables pass through.  Raises ``SubstitutionDegenerate`` if
    the resulting denominator is identically zero.
    """
    assign: dict[int, tuple[Poly, Poly]] = {}
    for k, v in assignment.items():
        v = RatFun.coerce(v)
        assign[_vid(k)] = (v.num, v.den)
    cache = {} if _cache is None else _cache
    P, dp = _subs_parts(f.num, assign, cache)
    Q, dq = _subs_parts(f.den, assign, cache)
    if Q.is_zero():
        raise SubstitutionDegenerate("denominator vanishes identically after substitution")
    for i, (_, D) in assign.items():
        if D.is_const() and D.const_value() == 1:
            continue
        e = dq[i] - dp[i]
        if e > 0:
            P = P * (cache.get((i, 1, e)) or D ** e)
        elif e < 0:
            Q = Q * (cache.get((i, 1, -e)) or D ** (-e))
    return RatFun(P, Q)


def poly_eval(p: Poly, point: Mapping) -> Fraction:
    return p.eval(point)


def var(name: str) -> RatFun:
    return RatFun.var(Var(name))


def const(c) -> RatFun:
    return RatFun(Poly.const(to_rat(c)))


def sum_polys(ps: Iterable[Poly]) -> Poly:
    out = Poly()
    for p in ps:
        out = out + p
    return out


def factor_poly(p: Poly) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Irreducible factorization over Q: ``p = c * prod f**k``.

    Requires python-flint.
    """
    if _flint is None:  # pragma: no cover
        raise ImportError("factorization needs python-flint")
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    ctx = _flint_ctx()
    s = _lcm_den(p.terms)
    c, facs = _to_flint(p.terms, ctx, len(_ALPHABET), s).factor()
    return Fraction(int(c), s), [(Poly._raw(_from_flint(f, 1)), int(k)) for f, k in facs]
