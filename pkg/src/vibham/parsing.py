"""Recursive-descent parser for the polynomial text grammar.

Grammar (whitespace insignificant, mode indices 1-based)::

    expr   := term (('+'|'-') term)*
    term   := coeff? factor ('*' factor)*
    factor := var ('^' uint)?
    var    := 'z' uint | 'zs' uint | 's' uint
    coeff  := rational | rational 'i' | '(' rational (+|-) rational 'i' ')'

``s<k>`` is shorthand for the generator ``z<k>*zs<k>``.  Rationals may be
written as integers (``3``), quotients (``3/2``) or decimals (``0.25``),
all read exactly.  Two small extensions are accepted on input: a leading
sign on the first term, and a bare coefficient as a constant term, so every
string produced by :func:`vibham.algebra.polynomial_to_text` parses back.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import ExactComplex, Monomial, Polynomial

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<var>zs\d+|z\d+|s\d+)
    | (?P<number>\d+\.\d+|\d+/\d+|\d+)
    | (?P<imag>i)
    | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


class PolynomialSyntaxError(ValueError):
    """Raised on malformed polynomial text; carries the 0-based column."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"column {position}: {message}")
        self.position = position


class _Token:
    __slots__ = ("kind", "text", "position")

    def __init__(self, kind: str, text: str, position: int) -> None:
        self.kind = kind
        self.text = text
        self.position = position


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup or ""
        if kind != "ws":
            tokens.append(_Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n_modes: int) -> None:
        self.tokens = _tokenize(text)
        self.index = 0
        self.n_modes = n_modes

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, self.peek().position)

    def at_op(self, *ops: str) -> bool:
        token = self.peek()
        return token.kind == "op" and token.text in ops

    def expect_op(self, op: str) -> None:
        if not self.at_op(op):
            raise self.error(f"expected {op!r}")
        self.advance()

    # grammar rules ---------------------------------------------------------

    def parse(self) -> Polynomial:
        result = self.parse_expr()
        if self.peek().kind != "end":
            raise self.error(f"trailing input {self.peek().text!r}")
        return result

    def parse_expr(self) -> Polynomial:
        sign = 1
        if self.at_op("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        total = self.parse_term() * sign
        while self.at_op("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
            total = total + self.parse_term() * sign
        return total

    def parse_term(self) -> Polynomial:
        coeff: ExactComplex | None = None
        token = self.peek()
        if token.kind == "number" or self.at_op("("):
            coeff = self.parse_coeff()
            if self.at_op("*") and self.tokens[self.index + 1].kind == "var":
                self.advance()
        mono: Monomial | None = None
        if self.peek().kind == "var":
            mono = self.parse_factor()
            while self.at_op("*"):
                self.advance()
                mono = mono.times(self.parse_factor())
        if mono is None:
            if coeff is None:
                raise self.error("expected a coefficient or a variable")
            mono = Monomial.unit(self.n_modes)
        if coeff is None:
            coeff = ExactComplex(Fraction(1))
        return Polynomial(self.n_modes, [(mono, coeff)])

    def parse_factor(self) -> Monomial:
        token = self.advance()
        if token.kind != "var":
            raise PolynomialSyntaxError("expected a variable", token.position)
        if token.text.startswith("zs"):
            kind, index = "zs", int(token.text[2:])
        elif token.text.startswith("z"):
            kind, index = "z", int(token.text[1:])
        else:
            kind, index = "s", int(token.text[1:])
        if not 1 <= index <= self.n_modes:
            raise PolynomialSyntaxError(
                f"mode index {index} out of range 1..{self.n_modes}", token.position
            )
        power = 1
        if self.at_op("^"):
            self.advance()
            exp_token = self.advance()
            if exp_token.kind != "number" or not exp_token.text.isdigit():
                raise PolynomialSyntaxError(
                    "exponent must be a non-negative integer", exp_token.position
                )
            power = int(exp_token.text)
        exps = [0] * self.n_modes
        exps[index - 1] = power
        zero = (0,) * self.n_modes
        if kind == "z":
            return Monomial(tuple(exps), zero)
        if kind == "zs":
            return Monomial(zero, tuple(exps))
        return Monomial(tuple(exps), tuple(exps))

    def parse_coeff(self) -> ExactComplex:
        if self.at_op("("):
            return self.parse_parenthesized_coeff()
        value = self.parse_rational()
        if self.peek().kind == "imag":
            self.advance()
            return ExactComplex(Fraction(0), value)
        return ExactComplex(value)

    def parse_parenthesized_coeff(self) -> ExactComplex:
        self.expect_op("(")
        first_sign = 1
        if self.at_op("+", "-"):
            first_sign = -1 if self.advance().text == "-" else 1
        real = self.parse_rational() * first_sign
        if self.peek().kind == "imag":
            raise self.error("expected the real part first inside (...)")
        if not self.at_op("+", "-"):
            raise self.error("expected '+' or '-' between real and imaginary parts")
        second_sign = -1 if self.advance().text == "-" else 1
        imag = self.parse_rational() * second_sign
        if self.peek().kind != "imag":
            raise self.error("expected 'i' after the imaginary part")
        self.advance()
        self.expect_op(")")
        return ExactComplex(real, imag)

    def parse_rational(self) -> Fraction:
        token = self.advance()
        if token.kind != "number":
            raise PolynomialSyntaxError("expected a number", token.position)
        return Fraction(token.text)


def parse_polynomial(text: str, n_modes: int) -> Polynomial:
    """Parse polynomial text over the given mode count.

    Raises:
        PolynomialSyntaxError: on malformed input, with the offending column.
        ValueError: if n_modes < 1.
    """
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    return _Parser(text, n_modes).parse()
