"""Recursive-descent parsers for polynomials, generator words and module specs.

Polynomial grammar (no implicit multiplication)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' INT)?
    atom    := INT | INT '/' INT | 's' | 't' | 'i' | '(' expr ')'

A rational literal ``p/q`` is a single token (no spaces around ``/``).
Element expressions additionally accept generators ``F[m]`` as atoms and must
be linear in them.  Error positions are byte offsets into the UTF-8 input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import AlgebraElement, Generator
from .errors import ParseError
from .field import GaussianRational, I
from .phi import PhiParams
from .poly import BiPoly

__all__ = ["parse_poly", "parse_scalar", "parse_word", "parse_element", "parse_module_spec"]

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<gen>[LMSI]\[\s*-?\d+\s*\])
  | (?P<rat>\d+/\d+)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_]+)
  | (?P<op>[-+*^(),=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def tokenize(text: str, allow_generators: bool = False) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos))
        kind = match.lastgroup
        if kind == "gen" and not allow_generators:
            raise ParseError(f"generator {match.group()!r} not allowed here", _byte_offset(text, pos))
        if kind != "ws":
            tokens.append(Token(kind, match.group(), _byte_offset(text, pos)))
        pos = match.end()
    tokens.append(Token("end", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], idents: dict[str, object]):
        self.tokens = tokens
        self.idx = 0
        self.idents = idents

    @property
    def current(self) -> Token:
        return self.tokens[self.idx]

    def advance(self) -> Token:
        tok = self.tokens[self.idx]
        if tok.kind != "end":
            self.idx += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            self.fail(f"expected {op!r}")
        return self.advance()

    def fail(self, expected: str):
        tok = self.current
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"{expected}, found {found}", tok.pos)

    def expect_end(self):
        if self.current.kind != "end":
            self.fail("expected operator or end of input")

    # grammar ---------------------------------------------------------------

    def expr(self):
        value = self.term()
        while self.at_op("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = _combine(value, rhs, op)
        return value

    def term(self):
        value = self.unary()
        while self.at_op("*"):
            op = self.advance()
            value = _multiply(value, self.unary(), op)
        return value

    def unary(self):
        if self.at_op("-"):
            self.advance()
            return -self.unary()
        if self.at_op("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        value = self.atom()
        if self.at_op("^"):
            op = self.advance()
            tok = self.current
            if tok.kind != "int":
                self.fail("expected a nonnegative integer exponent")
            self.advance()
            if isinstance(value, AlgebraElement):
                raise ParseError("cannot raise a generator to a power", op.pos)
            value = value ** int(tok.text)
        return value

    def atom(self):
        tok = self.current
        if tok.kind == "int":
            self.advance()
            return BiPoly.constant(int(tok.text))
        if tok.kind == "rat":
            self.advance()
            num, den = tok.text.split("/")
            if int(den) == 0:
                raise ParseError("zero denominator", tok.pos)
            return BiPoly.constant(GaussianRational(f"{num}/{den}"))
        if tok.kind == "ident":
            if tok.text not in self.idents:
                self.fail(f"expected one of {', '.join(sorted(self.idents))}")
            self.advance()
            return self.idents[tok.text]
        if tok.kind == "gen":
            self.advance()
            family, index = tok.text[0], int(tok.text[2:-1].strip())
            return AlgebraElement.of(Generator(family, index))
        if self.at_op("("):
            self.advance()
            value = self.expr()
            self.expect_op(")")
            return value
        self.fail("expected a number, variable or '('")


def _scalar_of(value: BiPoly, tok: Token) -> GaussianRational:
    if not value.is_constant():
        raise ParseError("coefficient of a generator must be a constant", tok.pos)
    return value.constant_term()


def _combine(lhs, rhs, op: Token):
    if isinstance(lhs, AlgebraElement) or isinstance(rhs, AlgebraElement):
        if isinstance(lhs, BiPoly):
            if lhs:
                raise ParseError("cannot add a polynomial and a generator", op.pos)
            lhs = AlgebraElement()
        if isinstance(rhs, BiPoly):
            if rhs:
                raise ParseError("cannot add a polynomial and a generator", op.pos)
            rhs = AlgebraElement()
    return lhs + rhs if op.text == "+" else lhs - rhs


def _multiply(lhs, rhs, op: Token):
    if isinstance(lhs, AlgebraElement) and isinstance(rhs, AlgebraElement):
        raise ParseError("product of generators is not a Lie algebra element", op.pos)
    if isinstance(lhs, AlgebraElement):
        return lhs * _scalar_of(rhs, op)
    if isinstance(rhs, AlgebraElement):
        return rhs * _scalar_of(lhs, op)
    return lhs * rhs


_POLY_IDENTS = {"s": BiPoly.s(), "t": BiPoly.t(), "i": BiPoly.constant(I)}
_SCALAR_IDENTS = {"i": BiPoly.constant(I)}


def parse_poly(text: str) -> BiPoly:
    parser = _Parser(tokenize(text), _POLY_IDENTS)
    value = parser.expr()
    parser.expect_end()
    return value


def parse_scalar(text: str) -> GaussianRational:
    """A constant such as ``3``, ``-1/2`` or ``1+2*i``."""
    parser = _Parser(tokenize(text), _SCALAR_IDENTS)
    value = parser.expr()
    parser.expect_end()
    return value.constant_term()


def parse_element(text: str) -> AlgebraElement:
    """A linear combination such as ``2*L[1] - M[0]``."""
    parser = _Parser(tokenize(text, allow_generators=True), _SCALAR_IDENTS)
    value = parser.expr()
    parser.expect_end()
    if isinstance(value, BiPoly):
        if value:
            raise ParseError("expected a combination of generators", 0)
        return AlgebraElement()
    return value


_WORD_TOKEN_RE = re.compile(r"\S+")
_GEN_RE = re.compile(r"^([LMSI])\[(-?\d+)\]$")


def parse_generator(text: str, pos: int = 0) -> Generator:
    match = _GEN_RE.match(text)
    if match is None:
        raise ParseError(f"expected a generator F[m] with F in L, M, S, I, found {text!r}", pos)
    return Generator(match.group(1), int(match.group(2)))


def parse_word(text: str) -> list[Generator]:
    """Whitespace-separated generators, in textual order (rightmost acts first)."""
    return [parse_generator(m.group(), _byte_offset(text, m.start()))
            for m in _WORD_TOKEN_RE.finditer(text)]


_SPEC_KEYS = ("lambda", "alpha", "beta", "rho", "h")


def parse_module_spec(text: str) -> PhiParams:
    """``phi(lambda=..., alpha=..., beta=..., rho=..., h=...)``; all five keys required.

    Raises ``LambdaZero`` for lambda = 0 and ``HNotUnivariate`` when h involves s.
    """
    tokens = tokenize(text)
    parser = _Parser(tokens, _POLY_IDENTS)
    tok = parser.current
    if tok.kind != "ident" or tok.text != "phi":
        parser.fail("expected 'phi'")
    parser.advance()
    parser.expect_op("(")
    values: dict[str, BiPoly] = {}
    while True:
        key = parser.current
        if key.kind != "ident" or key.text not in _SPEC_KEYS:
            parser.fail(f"expected one of {', '.join(_SPEC_KEYS)}")
        if key.text in values:
            raise ParseError(f"duplicate key {key.text!r}", key.pos)
        parser.advance()
        parser.expect_op("=")
        start = parser.current
        value = parser.expr()
        if key.text != "h" and not value.is_constant():
            raise ParseError(f"{key.text} must be a constant", start.pos)
        values[key.text] = value
        if parser.at_op(","):
            parser.advance()
            continue
        break
    parser.expect_op(")")
    parser.expect_end()
    missing = [k for k in _SPEC_KEYS if k not in values]
    if missing:
        raise ParseError(f"missing key(s): {', '.join(missing)}", parser.current.pos)
    return PhiParams(
        lam=values["lambda"].constant_term(),
        alpha=values["alpha"].constant_term(),
        beta=values["beta"].constant_term(),
        rho=values["rho"].constant_term(),
        h=values["h"],
    )
