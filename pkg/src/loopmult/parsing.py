"""Input grammar for field elements and polynomial tuples.

Polynomials live in F_{q^N}[u] where u is the series variable and g the
ambient field generator.  The accepted syntax, per coordinate:

    tuple   = coord { coord }
    coord   = "[" expr "]"
    expr    = [ "-" ] term { ("+" | "-") term }
    term    = factor { [ "*" ] factor }
    factor  = atom [ "^" integer ]
    atom    = integer | "g" | "u" | "(" expr ")"

Multiplication may be implicit (adjacency): "(1+g*u)(1+g^2u)" is valid.
Parsed polynomials are coefficient lists over the tower, constant first.
"""

from __future__ import annotations

from .errors import ParseError
from .galois import FieldElem, FieldTower

_SYMBOLS = "+-*^()[]"


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in _SYMBOLS or c in "gu":
            tokens.append(c)
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r} at position {i}")
    return tokens


class _Poly:
    """Thin wrapper: coefficient list over a tower, constant term first."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: FieldTower, coeffs: list):
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.tower = tower
        self.coeffs = coeffs

    @classmethod
    def const(cls, tower, value) -> "_Poly":
        elem = value if isinstance(value, FieldElem) else tower.element([value])
        return cls(tower, [elem])

    def add(self, other, sign: int) -> "_Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.tower.zero()
        a = self.coeffs + [zero] * (n - len(self.coeffs))
        b = other.coeffs + [zero] * (n - len(other.coeffs))
        if sign < 0:
            return _Poly(self.tower, [x - y for x, y in zip(a, b)])
        return _Poly(self.tower, [x + y for x, y in zip(a, b)])

    def neg(self) -> "_Poly":
        return _Poly(self.tower, [-c for c in self.coeffs])

    def mul(self, other: "_Poly") -> "_Poly":
        if not self.coeffs or not other.coeffs:
            return _Poly(self.tower, [])
        zero = self.tower.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return _Poly(self.tower, out)

    def pow(self, e: int) -> "_Poly":
        result = _Poly.const(self.tower, 1)
        for _ in range(e):
            result = result.mul(self)
        return result


class _Parser:
    def __init__(self, tower: FieldTower, tokens: list):
        self.tower = tower
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, tok):
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def expr(self) -> _Poly:
        if self.peek() == "-":
            self.take()
            result = self.term().neg()
        else:
            result = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            result = result.add(self.term(), -1 if op == "-" else 1)
        return result

    def term(self) -> _Poly:
        result = self.factor()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.take()
                result = result.mul(self.factor())
            elif nxt == "(" or nxt in ("g", "u") or isinstance(nxt, int):
                result = result.mul(self.factor())
            else:
                return result

    def factor(self) -> _Poly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.take()
            if not isinstance(e, int):
                raise ParseError(f"exponent must be an integer, got {e!r}")
            return base.pow(e)
        return base

    def atom(self) -> _Poly:
        tok = self.take()
        if isinstance(tok, int):
            return _Poly.const(self.tower, tok)
        if tok == "g":
            return _Poly.const(self.tower, self.tower.gen())
        if tok == "u":
            return _Poly(self.tower, [self.tower.zero(), self.tower.one()])
        if tok == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {tok!r}")


def parse_poly(tower: FieldTower, text: str) -> list[FieldElem]:
    """One unbracketed polynomial in u; coefficients constant-first."""
    parser = _Parser(tower, _tokenize(text))
    poly = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at token {parser.peek()!r}")
    return poly.coeffs


def parse_scalar(tower: FieldTower, text: str) -> FieldElem:
    """A field element expression (no u allowed)."""
    coeffs = parse_poly(tower, text)
    if len(coeffs) > 1:
        raise ParseError(f"expected a field element, got a polynomial: {text!r}")
    return coeffs[0] if coeffs else tower.zero()


def parse_poly_tuple(tower: FieldTower, text: str) -> list[list[FieldElem]]:
    """A bracketed coordinate tuple: "[1+g*u][1]" -> two coefficient lists."""
    parser = _Parser(tower, _tokenize(text))
    coords = []
    while parser.peek() is not None:
        parser.expect("[")
        coords.append(parser.expr().coeffs)
        parser.expect("]")
    if not coords:
        raise ParseError("expected at least one [..] coordinate")
    return coords


def poly_u_str(coeffs) -> str:
    """Render a coefficient list back into grammar syntax."""
    terms = []
    for e, c in enumerate(coeffs):
        if c.is_zero():
            continue
        cs = str(c)
        if e == 0:
            terms.append(cs)
            continue
        u = "u" if e == 1 else f"u^{e}"
        if c.is_one():
            terms.append(u)
        elif "+" in cs:
            terms.append(f"({cs})*{u}")
        else:
            terms.append(f"{cs}*{u}")
    return "+".join(terms) if terms else "0"
