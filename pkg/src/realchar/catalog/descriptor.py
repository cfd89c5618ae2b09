"""Group descriptor language.

    expr := term { "x" term } ;
    term := atom [ "wr" atom ] [ "." nat ] ;
    atom := "A" nat | "S" nat | "C" nat | "D" nat
          | "PSL(" nat "," ppow ")" | "SL(" nat "," ppow ")" | "PGL(" nat "," ppow ")"
          | "PSU(3," ppow ")" | "Sz(" ppow ")" | "J1" | "(" expr ")" ;

Case-sensitive; whitespace is ignored. The printer puts single spaces around
"x" and "wr" and parenthesizes products only where the grammar needs it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..algebra import prime_power


class DescriptorError(ValueError):
    def __init__(self, msg: str, text: str = "", pos: int | None = None):
        self.text, self.pos = text, pos
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{msg}{where}" + (f": {text!r}" if text else ""))


@dataclass(frozen=True)
class Atom:
    family: str          # A S C D PSL SL PGL PSU Sz J1
    params: tuple[int, ...] = ()

    def __str__(self):
        f, p = self.family, self.params
        if f in ("A", "S", "C", "D"):
            return f"{f}{p[0]}"
        if f == "J1":
            return "J1"
        return f"{f}({','.join(map(str, p))})"


@dataclass(frozen=True)
class Term:
    base: Atom | Product
    top: Atom | Product | None = None    # wreath top group
    ext: int | None = None

    def __str__(self):
        s = _wrap(self.base)
        if self.top is not None:
            s = f"{s} wr {_wrap(self.top)}"
            if self.ext is not None:
                s = f"({s})"
        if self.ext is not None:
            s = f"{s}.{self.ext}"
        return s


@dataclass(frozen=True)
class Product:
    factors: tuple[Term | Atom, ...]

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)


Descriptor = Atom | Term | Product


def _wrap(node) -> str:
    if isinstance(node, Product) or (isinstance(node, Term) and node.top is not None):
        return f"({node})"
    return str(node)


_NAMES = ("PSL", "PSU", "PGL", "SL", "Sz", "A", "S", "C", "D", "J")
_TOKEN = re.compile(r"(\d+)|(wr|x)|(" + "|".join(_NAMES) + r")|([(),.])")
_WORD = re.compile(r"[A-Za-z]+")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            w = _WORD.match(text, pos)
            if w:
                raise DescriptorError(f"unknown group name {w.group()!r}", text, pos)
            raise DescriptorError("unexpected character", text, pos)
        num, op, name, punct = m.groups()
        if num is not None:
            out.append(("nat", int(num), pos))
        elif op is not None:
            out.append((op, op, pos))
        elif name is not None:
            out.append(("name", name, pos))
        else:
            out.append((punct, punct, pos))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.toks[self.i]
        if kind is not None and t[0] != kind:
            want = {"nat": "a number", "name": "a group name"}.get(kind, repr(kind))
            raise DescriptorError(f"expected {want}", self.text, t[2])
        self.i += 1
        return t

    def expr(self):
        terms = [self.term()]
        while self.peek()[0] == "x":
            self.take()
            terms.append(self.term())
        if len(terms) == 1:
            return terms[0]
        flat = []
        for t in terms:
            flat.extend(t.factors if isinstance(t, Product) else [t])
        return Product(tuple(flat))

    def term(self):
        base = self.atom()
        top = ext = None
        if self.peek()[0] == "wr":
            self.take()
            top = self.atom()
        if self.peek()[0] == ".":
            self.take()
            t = self.take("nat")
            ext = t[1]
            if ext < 1:
                raise DescriptorError("extension order must be positive", self.text, t[2])
        if top is None and ext is None:
            return base
        return Term(base, top, ext)

    def _ppow(self):
        t = self.take("nat")
        if prime_power(t[1]) is None:
            raise DescriptorError(f"{t[1]} is not a prime power", self.text, t[2])
        return t[1]

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind != "name":
            raise DescriptorError("expected a group name", self.text, pos)
        self.take()
        if val in ("A", "S", "C", "D"):
            n = self.take("nat")
            if n[1] < 1:
                raise DescriptorError("degree must be positive", self.text, n[2])
            if val == "D" and (n[1] % 2 or n[1] < 2):
                raise DescriptorError("dihedral group order must be even", self.text, n[2])
            return Atom(val, (n[1],))
        if val == "J":
            n = self.take("nat")
            if n[1] != 1:
                raise DescriptorError("only J1 is available", self.text, pos)
            return Atom("J1")
        if val in ("PSL", "SL", "PGL"):
            self.take("(")
            d = self.take("nat")
            if d[1] < 2:
                raise DescriptorError("dimension must be at least 2", self.text, d[2])
            self.take(",")
            q = self._ppow()
            self.take(")")
            return Atom(val, (d[1], q))
        if val == "PSU":
            self.take("(")
            d = self.take("nat")
            if d[1] != 3:
                raise DescriptorError("only PSU(3,q) is supported", self.text, d[2])
            self.take(",")
            q = self._ppow()
            self.take(")")
            return Atom("PSU", (3, q))
        if val == "Sz":
            self.take("(")
            t = self.peek()
            q = self._ppow()
            self.take(")")
            if q != 8:
                raise DescriptorError("Sz(q) is only supported for q = 8", self.text, t[2])
            return Atom("Sz", (q,))
        raise DescriptorError(f"unknown group name {val!r}", self.text, pos)


def parse(text: str) -> Descriptor:
    p = _Parser(text)
    if p.peek()[0] == "end":
        raise DescriptorError("empty descriptor", text, 0)
    node = p.expr()
    kind, _, pos = p.peek()
    if kind != "end":
        raise DescriptorError("trailing input", text, pos)
    return node


def canonical(text_or_node) -> str:
    node = parse(text_or_node) if isinstance(text_or_node, str) else text_or_node
    return str(node)
