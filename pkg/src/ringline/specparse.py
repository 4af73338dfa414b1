"""Parsing of ring specification strings into an AST.

Grammar (ASCII, whitespace insensitive)::

    spec := term ( '*' term )*            direct product, left associative
    term := 'GF(' INT ')' [ '[' IDENT ']' '/' '(' poly ')' ]
    poly := mono ( ('+'|'-') mono )*
    mono := INT | [INT '*'] IDENT [ '^' INT ]

Polynomial coefficients are reduced mod p immediately, so for example
"x^3-x" and "x^3+x" denote the same modulus over GF(2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import polynomials
from .errors import RingSpecError


@dataclass(frozen=True)
class PrimeField:
    p: int


@dataclass(frozen=True)
class PolyQuotient:
    base: PrimeField
    var: str
    modulus: tuple[int, ...]  # normalized, degree >= 1


@dataclass(frozen=True)
class Product:
    left: "RingSpec"
    right: "RingSpec"


RingSpec = Union[PrimeField, PolyQuotient, Product]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


_TOKEN_RE = re.compile(
    r"(?P<WS>\s+)|(?P<INT>\d+)|(?P<IDENT>[A-Za-z_][A-Za-z_0-9]*)|(?P<SYM>[()\[\]/*+^,-])"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # INT | IDENT | SYM | END
    value: str
    pos: int  # 1-based character position


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise RingSpecError(f"unexpected character {text[i]!r}", pos=i + 1)
        if m.lastgroup != "WS":
            tokens.append(_Token(m.lastgroup, m.group(), i + 1))
        i = m.end()
    tokens.append(_Token("END", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != "END":
            self.i += 1
        return tok

    def fail(self, expected: str) -> None:
        tok = self.peek()
        found = "end of input" if tok.kind == "END" else repr(tok.value)
        raise RingSpecError(f"expected {expected}, found {found}", pos=tok.pos)

    def expect_sym(self, sym: str) -> _Token:
        tok = self.peek()
        if tok.kind != "SYM" or tok.value != sym:
            self.fail(repr(sym))
        return self.advance()

    def expect_int(self) -> int:
        tok = self.peek()
        if tok.kind != "INT":
            self.fail("an integer")
        self.advance()
        return int(tok.value)

    def at_sym(self, *syms: str) -> bool:
        tok = self.peek()
        return tok.kind == "SYM" and tok.value in syms

    # spec := term ('*' term)*
    def spec(self) -> RingSpec:
        node = self.term()
        while self.at_sym("*"):
            self.advance()
            node = Product(node, self.term())
        return node

    # term := 'GF(' INT ')' [ '[' IDENT ']' '/' '(' poly ')' ]
    def term(self) -> RingSpec:
        tok = self.peek()
        if tok.kind != "IDENT" or tok.value != "GF":
            self.fail("'GF'")
        self.advance()
        self.expect_sym("(")
        ptok = self.peek()
        p = self.expect_int()
        if not is_prime(p):
            raise RingSpecError(f"{p} is not prime", pos=ptok.pos)
        self.expect_sym(")")
        field = PrimeField(p)
        if not self.at_sym("["):
            return field
        self.advance()
        vtok = self.peek()
        if vtok.kind != "IDENT":
            self.fail("a variable name")
        self.advance()
        self.expect_sym("]")
        self.expect_sym("/")
        self.expect_sym("(")
        ptok = self.peek()
        modulus = self.poly(vtok.value, p)
        self.expect_sym(")")
        if polynomials.degree(modulus) < 1:
            raise RingSpecError(
                "modulus must have degree >= 1 after reduction mod p", pos=ptok.pos
            )
        return PolyQuotient(field, vtok.value, modulus)

    # poly := mono (('+'|'-') mono)*
    def poly(self, var: str, p: int) -> tuple[int, ...]:
        coeffs: dict[int, int] = {}

        def accumulate(sign: int) -> None:
            c, k = self.mono(var)
            coeffs[k] = coeffs.get(k, 0) + sign * c

        accumulate(1)
        while self.at_sym("+", "-"):
            sign = 1 if self.advance().value == "+" else -1
            accumulate(sign)
        top = max(coeffs)
        return polynomials.normalize(
            [coeffs.get(k, 0) for k in range(top + 1)], p
        )

    # mono := INT | [INT '*'] IDENT ['^' INT]
    def mono(self, var: str) -> tuple[int, int]:
        coeff = 1
        tok = self.peek()
        if tok.kind == "INT":
            coeff = self.expect_int()
            if not self.at_sym("*"):
                return coeff, 0
            self.advance()
            tok = self.peek()
        if tok.kind != "IDENT":
            self.fail("a variable name")
        if tok.value != var:
            raise RingSpecError(
                f"unknown variable {tok.value!r} (expected {var!r})", pos=tok.pos
            )
        self.advance()
        power = 1
        if self.at_sym("^"):
            self.advance()
            power = self.expect_int()
        return coeff, power


def parse_ring_spec(text: str) -> RingSpec:
    """Parse a ring specification string, e.g. "GF(2)[x]/(x^3-x)*GF(3)"."""
    parser = _Parser(text)
    node = parser.spec()
    if parser.peek().kind != "END":
        parser.fail("end of input or '*'")
    return node


def validate_spec(spec: RingSpec) -> None:
    """Check the AST invariants (for specs built without the parser)."""
    if isinstance(spec, PrimeField):
        if not is_prime(spec.p):
            raise RingSpecError(f"{spec.p} is not prime")
    elif isinstance(spec, PolyQuotient):
        validate_spec(spec.base)
        p = spec.base.p
        if spec.modulus != polynomials.normalize(spec.modulus, p):
            raise RingSpecError("modulus coefficients are not reduced mod p")
        if polynomials.degree(spec.modulus) < 1:
            raise RingSpecError("modulus must have degree >= 1")
    elif isinstance(spec, Product):
        validate_spec(spec.left)
        validate_spec(spec.right)
    else:
        raise RingSpecError(f"not a ring spec: {spec!r}")


def count_elements(spec: RingSpec) -> int:
    """Element count of the ring the spec describes."""
    if isinstance(spec, PrimeField):
        return spec.p
    if isinstance(spec, PolyQuotient):
        return spec.base.p ** polynomials.degree(spec.modulus)
    return count_elements(spec.left) * count_elements(spec.right)


def spec_to_string(spec: RingSpec) -> str:
    """Canonical text form; re-parses to an equal AST for parser output.

    Products render flat ("a*b*c"), matching the left-associative grammar.
    """
    if isinstance(spec, PrimeField):
        return f"GF({spec.p})"
    if isinstance(spec, PolyQuotient):
        poly = polynomials.name(spec.modulus, spec.var)
        return f"GF({spec.base.p})[{spec.var}]/({poly})"
    return f"{spec_to_string(spec.left)}*{spec_to_string(spec.right)}"


def parse_poly(text: str, var: str, p: int) -> tuple[int, ...]:
    """Parse a standalone polynomial in the given variable, reduced mod p."""
    parser = _Parser(text)
    coeffs = parser.poly(var, p)
    if parser.peek().kind != "END":
        parser.fail("end of input")
    return coeffs
