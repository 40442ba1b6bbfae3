"""Recursive-descent parser for rational maps written as text.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-'? atom ('^' uint)?
    atom   := integer | ident | '(' expr ')'

``^`` binds tighter than unary minus, so ``-x^2`` is ``-(x^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import RatFun, const, var
from .catalog import YBMap, check_shape
from .errors import DivisionByZeroFunction, ParseError, UnknownIdentifier

ALIASES = {"α": "alpha", "β": "beta", "λ": "lambda", "μ": "mu"}
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_αβλμ][A-Za-z_0-9]*)|(\S))")


def _tokens(text: str, offset: int = 0):
    out = []
    for m in _TOKEN.finditer(text):
        if m.group(1):
            out.append(("int", int(m.group(1)), offset + m.start(1)))
        elif m.group(2):
            out.append(("ident", m.group(2), offset + m.start(2)))
        elif m.group(3):
            out.append(("op", m.group(3), offset + m.start(3)))
    out.append(("end", None, offset + len(text)))
    return out


class _Parser:
    def __init__(self, text: str, idents, offset: int = 0):
        self.toks = _tokens(text, offset)
        self.i = 0
        self.idents = set(idents)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {_show(kind, val)}", pos)

    def parse(self) -> RatFun:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {_show(kind, val)}", pos)
        return e

    def expr(self) -> RatFun:
        e = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            e = e + t if op == "+" else e - t
        return e

    def term(self) -> RatFun:
        e = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            _, op, pos = self.take()
            f = self.factor()
            if op == "*":
                e = e * f
            else:
                try:
                    e = e / f
                except DivisionByZeroFunction:
                    raise ParseError("division by zero", pos) from None
        return e

    def factor(self) -> RatFun:
        neg = False
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            neg = True
        e = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be a non-negative integer, found {_show(kind, val)}", pos)
            e = e ** val
        return -e if neg else e

    def atom(self) -> RatFun:
        kind, val, pos = self.take()
        if kind == "int":
            return const(val)
        if kind == "ident":
            name = ALIASES.get(val, val)
            if name not in self.idents:
                raise UnknownIdentifier(val, pos)
            return var(name)
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {_show(kind, val)}", pos)


def _show(kind, val) -> str:
    return "end of input" if kind == "end" else repr(str(val))


def parse_expr(text: str, params=("alpha", "beta"), variables=("x", "y")) -> RatFun:
    return _Parser(text, tuple(variables) + tuple(params)).parse()


@dataclass
class MapSource:
    u_expr: str | None
    v_expr: str | None
    params: tuple[str, ...] = ("alpha", "beta")
    name: str = ""
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_text(cls, text: str, params=None, name: str = "") -> "MapSource":
        """Read ``u = ...; v = ...`` (``;`` or newlines), optionally with a
        ``params: a, b`` line."""
        fields: dict[str, str] = {}
        offsets: dict[str, int] = {}
        start = 0
        for chunk in re.split(r"([;\n])", text):
            here, start = start, start + len(chunk)
            body = chunk.strip()
            if not body or body in ";\n" or body.startswith("#"):
                continue
            m = re.match(r"\s*(params|u|v|name)\s*[:=]\s*", chunk)
            if not m:
                raise ParseError(f"cannot read {body!r}", here + chunk.index(body))
            fields[m.group(1)] = chunk[m.end():]
            offsets[m.group(1)] = here + m.end()
        if params is None:
            if "params" in fields:
                params = tuple(ALIASES.get(p.strip(), p.strip()) for p in fields["params"].split(",") if p.strip())
            else:
                params = ("alpha", "beta")
        return cls(fields.get("u"), fields.get("v"), tuple(params), fields.get("name", name).strip(),
                   {"offsets": offsets, "length": len(text)})

    @classmethod
    def from_file(cls, path) -> "MapSource":
        p = Path(path)
        return cls.from_text(p.read_text(), name=p.stem)


def parse_map(src, params=None, name: str = "") -> YBMap:
    """Parse a MapSource (or its text form) into a shape-checked YBMap."""
    if isinstance(src, str):
        src = MapSource.from_text(src, params=params, name=name)
    offs = src.extra.get("offsets", {})
    idents = ("x", "y") + tuple(src.params)
    u, v = (None if e is None else _Parser(e, idents, offs.get(k, 0)).parse()
            for k, e in (("u", src.u_expr), ("v", src.v_expr)))
    for k, f in (("u", u), ("v", v)):
        if f is None:
            raise ParseError(f"missing '{k} = ...'", src.extra.get("length", 0))
    m = YBMap(u, v, params=src.params, name=src.name or name)
    check_shape(m)
    return m
