"""Expression language for algebra elements and module vectors.

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | power
    power   := atom ["^" int]
    atom    := rational | param | gen | vector | weylop
             | "[" expr "," expr "]" | "(" expr ")"
    gen     := ("L"|"G"|"t"|"xit"|"X"|"Y") "(" int ")" | "C" | "xi"
    vector  := "e" "(" int "," int ")" | "v"
    weylop  := "d_t" | "d_xi"
    rational:= int ["/" posint]
    param   := "lambda" | "b" | "c" | "h"

Whitespace is ignored.  Products and sums are left-associative.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..coeff import format_fraction

PARAMS = ("lambda", "b", "c", "h")
INDEXED = ("L", "G", "t", "xit", "X", "Y")
BARE_GENS = ("C", "xi")
WEYL_OPS = ("d_t", "d_xi")


class ParseError(ValueError):
    """Syntax error carrying the character offset where parsing stopped."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


# -- AST -------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Param:
    name: str


@dataclass(frozen=True)
class Gen:
    kind: str
    index: int | None = None


@dataclass(frozen=True)
class Vec:
    kind: str  # "e" or "v"
    i: int = 0
    r: int = 0


@dataclass(frozen=True)
class WeylOp:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object


Expr = object


# -- tokenizer -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_]*)|(?P<sym>[-+*/^()\[\],]))")


def tokenize(text: str) -> list:
    """``[(kind, value, position), ...]`` ending with an ``("end", None, len)`` token."""
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


# -- parser ----------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.k = 0

    @property
    def tok(self):
        return self.tokens[self.k]

    def _accept(self, sym: str) -> bool:
        kind, val, _ = self.tok
        if kind == "sym" and val == sym:
            self.k += 1
            return True
        return False

    def _expect(self, sym: str):
        if not self._accept(sym):
            kind, val, pos = self.tok
            found = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {sym!r}, found {found}", pos)

    def _int(self, signed: bool = True) -> int:
        neg = signed and self._accept("-")
        kind, val, pos = self.tok
        if kind != "int":
            raise ParseError("expected an integer", pos)
        self.k += 1
        if self.tok[0] == "sym" and self.tok[1] == "/":
            raise ParseError("generator index must be an integer", self.tok[2])
        return -int(val) if neg else int(val)

    def parse(self) -> Expr:
        e = self.expr()
        kind, val, pos = self.tok
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return e

    def expr(self) -> Expr:
        left = self.term()
        while True:
            if self._accept("+"):
                left = Add(left, self.term())
            elif self._accept("-"):
                left = Sub(left, self.term())
            else:
                return left

    def term(self) -> Expr:
        left = self.unary()
        while self._accept("*"):
            left = Mul(left, self.unary())
        return left

    def unary(self) -> Expr:
        if self._accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self._accept("^"):
            kind, val, pos = self.tok
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            self.k += 1
            return Pow(base, int(val))
        return base

    def atom(self) -> Expr:
        kind, val, pos = self.tok
        if kind == "int":
            self.k += 1
            if self._accept("/"):
                k2, v2, p2 = self.tok
                if k2 != "int" or int(v2) == 0:
                    raise ParseError("denominator must be a positive integer", p2)
                self.k += 1
                return Num(Fraction(int(val), int(v2)))
            return Num(Fraction(int(val)))
        if kind == "sym" and val == "(":
            self.k += 1
            e = self.expr()
            self._expect(")")
            return e
        if kind == "sym" and val == "[":
            self.k += 1
            left = self.expr()
            self._expect(",")
            right = self.expr()
            self._expect("]")
            return Bracket(left, right)
        if kind == "name":
            self.k += 1
            if val in PARAMS:
                return Param(val)
            if val in BARE_GENS:
                return Gen(val)
            if val in WEYL_OPS:
                return WeylOp(val)
            if val == "v":
                return Vec("v")
            if val == "e":
                self._expect("(")
                i = self._int()
                self._expect(",")
                rpos = self.tok[2]
                r = self._int(signed=False)
                if r not in (0, 1):
                    raise ParseError("parity index must be 0 or 1", rpos)
                self._expect(")")
                return Vec("e", i, r)
            if val in INDEXED:
                self._expect("(")
                ipos = self.tok[2]
                n = self._int()
                self._expect(")")
                if val in ("X", "Y") and n == 0:
                    raise ParseError(f"{val} index must be nonzero", ipos)
                return Gen(val, n)
            raise ParseError(f"unknown symbol {val!r}", pos)
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {found}", pos)


def parse(text: str) -> Expr:
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(text).parse()


# -- rendering -------------------------------------------------------------------

_SUM, _PRODUCT, _UNARY, _POWER, _ATOM = range(1, 6)


def _precedence(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return _SUM
    if isinstance(e, Mul):
        return _PRODUCT
    if isinstance(e, Neg):
        return _UNARY
    if isinstance(e, Pow):
        return _POWER
    if isinstance(e, Num) and e.value.denominator != 1:
        return _PRODUCT
    return _ATOM


def _wrap(e: Expr, minimum: int) -> str:
    text = render(e)
    return f"({text})" if _precedence(e) < minimum else text


def render(e: Expr) -> str:
    """Canonical text for ``e``; ``parse(render(e)) == e``."""
    if isinstance(e, Num):
        if e.value < 0:
            return render(Neg(Num(-e.value)))
        return format_fraction(e.value)
    if isinstance(e, Param):
        return e.name
    if isinstance(e, Gen):
        return e.kind if e.index is None else f"{e.kind}({e.index})"
    if isinstance(e, Vec):
        return "v" if e.kind == "v" else f"e({e.i},{e.r})"
    if isinstance(e, WeylOp):
        return e.name
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, _UNARY)
    if isinstance(e, Add):
        return f"{_wrap(e.left, _SUM)} + {_wrap(e.right, _PRODUCT)}"
    if isinstance(e, Sub):
        return f"{_wrap(e.left, _SUM)} - {_wrap(e.right, _PRODUCT)}"
    if isinstance(e, Mul):
        return f"{_wrap(e.left, _PRODUCT)}*{_wrap(e.right, _UNARY)}"
    if isinstance(e, Pow):
        return f"{_wrap(e.base, _ATOM)}^{e.exponent}"
    if isinstance(e, Bracket):
        return f"[{render(e.left)},{render(e.right)}]"
    raise TypeError(f"not an expression: {e!r}")
