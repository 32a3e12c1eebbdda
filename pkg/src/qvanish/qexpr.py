"""A tiny expression language for exact q-series.

Grammar (whitespace insignificant):

    expr    = term { ("+" | "-") term }
    term    = factor { ("*" | "/") factor }
    factor  = [ "-" ] atom [ "^" int ]
    atom    = poch | theta | named | qpow | int | "(" expr ")"
    poch    = "(" arg { "," arg } ";" qpow ")"
    arg     = [ "-" ] qpow
    qpow    = "q" [ "^" int ]
    theta   = ("T" | "TA") "[" int "," int "]"
    named   = "phi" | "psi" | "R" | "Rinv" | "E" int
            | "f" "(" int "," int [ "," sign "," sign ] ")"

A "(" opens a Pochhammer symbol exactly when a ";" occurs before its matching
")"; otherwise it is grouping.  Multi-argument Pochhammer symbols denote the
product of their single-offset factors.  parse() either returns an AST or
raises a ParseError carrying the offending position; it never crashes on
arbitrary input.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import ExprSyntaxError, OffsetOutOfRange
from .products import (
    ALTERNATING,
    TRIVIAL,
    ThetaSum,
    _symbol_product,
    euler_product,
    phi,
    psi,
    rogers_ramanujan,
    theta_f,
    theta_series,
)
from .series import TruncatedSeries, from_terms


# --- AST -----------------------------------------------------------------------


@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class QPower:
    exponent: int


@dataclass(frozen=True)
class Pochhammer:
    """Signed offsets: -4 stands for the argument -q^4."""

    offsets: tuple[int, ...]
    modulus: int
    power: int = 1


@dataclass(frozen=True)
class ThetaAtom:
    quad: int
    lin: int
    character: str = TRIVIAL


@dataclass(frozen=True)
class NamedSeries:
    name: str
    args: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[
    IntLiteral, QPower, Pochhammer, ThetaAtom, NamedSeries, Neg, Add, Sub, Mul, Div, Pow
]


# --- lexer ---------------------------------------------------------------------

_DIGITS = "0123456789"
_PUNCT = "+-*/^()[],;"


@dataclass(frozen=True)
class _Token:
    kind: str
    value: object
    pos: int


def _describe(tok: _Token) -> str:
    return "end of input" if tok.kind == "eof" else f"'{tok.value}'"


def _tokenize(text: str) -> list[_Token]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            toks.append(_Token("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() and ch.isascii():
            j = i
            while j < n and text[j].isalpha() and text[j].isascii():
                j += 1
            toks.append(_Token("word", text[i:j], i))
            i = j
            continue
        if ch in _PUNCT:
            toks.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError(i, ("a number, name, or operator",), repr(ch))
    toks.append(_Token("eof", None, n))
    return toks


# --- parser --------------------------------------------------------------------

_NAMES = ("phi", "psi", "R", "Rinv", "E", "f", "T", "TA", "q")


class _Parser:
    def __init__(self, toks: list[_Token]):
        self.toks = toks
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def advance(self) -> _Token:
        tok = self.toks[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ExprSyntaxError(tok.pos, (what,), _describe(tok))
        return self.advance()

    # expr = term { ("+" | "-") term }
    def parse_expr(self) -> Expr:
        left = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            right = self.parse_term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    # term = factor { ("*" | "/") factor }
    def parse_term(self) -> Expr:
        left = self.parse_factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance().kind
            right = self.parse_factor()
            left = Mul(left, right) if op == "*" else Div(left, right)
        return left

    # factor = [ "-" ] atom [ "^" int ]
    def parse_factor(self) -> Expr:
        negated = False
        if self.peek().kind == "-":
            self.advance()
            negated = True
        node = self.parse_atom()
        if self.peek().kind == "^":
            self.advance()
            node = Pow(node, self.parse_signed_int("an exponent"))
        return Neg(node) if negated else node

    def parse_signed_int(self, what: str) -> int:
        neg = False
        if self.peek().kind == "-":
            self.advance()
            neg = True
        tok = self.expect("int", what)
        return -tok.value if neg else tok.value

    def parse_atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return IntLiteral(tok.value)
        if tok.kind == "word":
            return self.parse_word()
        if tok.kind == "(":
            if self._semicolon_inside():
                return self.parse_pochhammer()
            self.advance()
            inner = self.parse_expr()
            self.expect(")", "')'")
            return inner
        raise ExprSyntaxError(tok.pos, ("a series atom",), _describe(tok))

    def parse_word(self) -> Expr:
        tok = self.advance()
        name = tok.value
        if name == "q":
            return QPower(self.finish_qpow(tok, minimum=0))
        if name in ("phi", "psi", "R", "Rinv"):
            return NamedSeries(name)
        if name == "E":
            itok = self.expect("int", "an index for E")
            if itok.value < 1:
                raise OffsetOutOfRange(itok.pos, itok.value, 1)
            return NamedSeries("E", (itok.value,))
        if name in ("T", "TA"):
            self.expect("[", "'['")
            quad = self.parse_signed_int("a quadratic coefficient")
            self.expect(",", "','")
            lin = self.parse_signed_int("a linear coefficient")
            self.expect("]", "']'")
            return ThetaAtom(quad, lin, ALTERNATING if name == "TA" else TRIVIAL)
        if name == "f":
            self.expect("(", "'('")
            xtok = self.peek()
            x = self.parse_signed_int("a q-exponent")
            if x < 1:
                raise OffsetOutOfRange(xtok.pos, x, 1)
            self.expect(",", "','")
            ytok = self.peek()
            y = self.parse_signed_int("a q-exponent")
            if y < 1:
                raise OffsetOutOfRange(ytok.pos, y, 1)
            sa = sb = 1
            if self.peek().kind == ",":
                self.advance()
                sa = self.parse_sign()
                self.expect(",", "','")
                sb = self.parse_sign()
            self.expect(")", "')'")
            return NamedSeries("f", (x, y, sa, sb))
        raise ExprSyntaxError(tok.pos, _NAMES, f"'{name}'")

    def parse_sign(self) -> int:
        tok = self.peek()
        if tok.kind in ("+", "-"):
            self.advance()
            return 1 if tok.kind == "+" else -1
        raise ExprSyntaxError(tok.pos, ("'+'", "'-'"), _describe(tok))

    def finish_qpow(self, qtok: _Token, minimum: int) -> int:
        """The 'q' word was consumed; read an optional '^' int and bound-check."""
        e = 1
        if self.peek().kind == "^":
            self.advance()
            e = self.parse_signed_int("an exponent")
        if e < minimum:
            raise OffsetOutOfRange(qtok.pos, e, minimum)
        return e

    def parse_qpow(self, minimum: int) -> int:
        qtok = self.expect("word", "'q'")
        if qtok.value != "q":
            raise ExprSyntaxError(qtok.pos, ("'q'",), f"'{qtok.value}'")
        return self.finish_qpow(qtok, minimum)

    # poch = "(" arg { "," arg } ";" qpow ")"
    def parse_pochhammer(self) -> Expr:
        self.expect("(", "'('")
        offsets = [self.parse_poch_arg()]
        while self.peek().kind == ",":
            self.advance()
            offsets.append(self.parse_poch_arg())
        self.expect(";", "';'")
        modulus = self.parse_qpow(minimum=1)
        self.expect(")", "')'")
        return Pochhammer(tuple(offsets), modulus)

    def parse_poch_arg(self) -> int:
        sign = 1
        if self.peek().kind == "-":
            self.advance()
            sign = -1
        return sign * self.parse_qpow(minimum=1)

    def _semicolon_inside(self) -> bool:
        """From the upcoming '(' token: does ';' occur before its matching ')'?"""
        depth = 0
        for tok in self.toks[self.i :]:
            if tok.kind == "(":
                depth += 1
            elif tok.kind == ")":
                depth -= 1
                if depth == 0:
                    return False
            elif tok.kind == ";" and depth == 1:
                return True
            elif tok.kind == "eof":
                break
        return False


def parse(text: str) -> Expr:
    """Parse expression text; raises a positioned ParseError on bad input."""
    parser = _Parser(_tokenize(text))
    expr = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ExprSyntaxError(tok.pos, ("an operator", "end of input"), _describe(tok))
    return expr


# --- evaluation ------------------------------------------------------------------


def evaluate(expr: Expr, order: int) -> TruncatedSeries:
    """Expand an AST to a TruncatedSeries of the given order."""
    if isinstance(expr, IntLiteral):
        return from_terms([(0, expr.value)], order)
    if isinstance(expr, QPower):
        return from_terms([(expr.exponent, 1)], order)
    if isinstance(expr, Pochhammer):
        base = _symbol_product(expr.offsets, expr.modulus, order)
        return base if expr.power == 1 else base**expr.power
    if isinstance(expr, ThetaAtom):
        return theta_series(ThetaSum(expr.quad, expr.lin, expr.character), order)
    if isinstance(expr, NamedSeries):
        return _eval_named(expr, order)
    if isinstance(expr, Neg):
        return -evaluate(expr.operand, order)
    if isinstance(expr, Add):
        return evaluate(expr.left, order) + evaluate(expr.right, order)
    if isinstance(expr, Sub):
        return evaluate(expr.left, order) - evaluate(expr.right, order)
    if isinstance(expr, Mul):
        return evaluate(expr.left, order) * evaluate(expr.right, order)
    if isinstance(expr, Div):
        return evaluate(expr.left, order) * evaluate(expr.right, order).invert()
    if isinstance(expr, Pow):
        return evaluate(expr.base, order) ** expr.exponent
    raise TypeError(f"not an expression node: {expr!r}")


def _eval_named(expr: NamedSeries, order: int) -> TruncatedSeries:
    name, args = expr.name, expr.args
    if name == "phi":
        return phi(order)
    if name == "psi":
        return psi(order)
    if name == "R":
        return rogers_ramanujan(order)
    if name == "Rinv":
        return rogers_ramanujan(order, inverted=True)
    if name == "E":
        return euler_product(args[0], order)
    if name == "f":
        x, y, sa, sb = args
        return theta_f(x, y, sa, sb, order)
    raise ValueError(f"unknown named series {name!r}")


# --- rendering -------------------------------------------------------------------

# grammar slots: sums(1) < products(2) < negation(3) < powers(4) < atoms(5)
_LEVELS = {Add: 1, Sub: 1, Mul: 2, Div: 2, Neg: 3, Pow: 4}


def _level(expr: Expr) -> int:
    return _LEVELS.get(type(expr), 5)


def _render_at(expr: Expr, minimum: int) -> str:
    text = render(expr)
    return f"({text})" if _level(expr) < minimum else text


def _qpow_text(e: int) -> str:
    return "q" if e == 1 else f"q^{e}"


def render(expr: Expr) -> str:
    """Canonical text for an AST; parse(render(e)) reproduces the structure."""
    if isinstance(expr, IntLiteral):
        return str(expr.value)
    if isinstance(expr, QPower):
        return _qpow_text(expr.exponent)
    if isinstance(expr, Pochhammer):
        args = ",".join(("-" if o < 0 else "") + _qpow_text(abs(o)) for o in expr.offsets)
        text = f"({args};{_qpow_text(expr.modulus)})"
        return text if expr.power == 1 else f"{text}^{expr.power}"
    if isinstance(expr, ThetaAtom):
        head = "TA" if expr.character == ALTERNATING else "T"
        return f"{head}[{expr.quad},{expr.lin}]"
    if isinstance(expr, NamedSeries):
        if expr.name == "E":
            return f"E{expr.args[0]}"
        if expr.name == "f":
            x, y, sa, sb = expr.args
            if (sa, sb) == (1, 1):
                return f"f({x},{y})"
            return f"f({x},{y},{'+' if sa > 0 else '-'},{'+' if sb > 0 else '-'})"
        return expr.name
    if isinstance(expr, Neg):
        return "-" + _render_at(expr.operand, 4)
    if isinstance(expr, Add):
        return _render_at(expr.left, 1) + "+" + _render_at(expr.right, 2)
    if isinstance(expr, Sub):
        return _render_at(expr.left, 1) + "-" + _render_at(expr.right, 2)
    if isinstance(expr, Mul):
        return _render_at(expr.left, 2) + "*" + _render_at(expr.right, 3)
    if isinstance(expr, Div):
        return _render_at(expr.left, 2) + "/" + _render_at(expr.right, 3)
    if isinstance(expr, Pow):
        return _render_at(expr.base, 5) + "^" + str(expr.exponent)
    raise TypeError(f"not an expression node: {expr!r}")
