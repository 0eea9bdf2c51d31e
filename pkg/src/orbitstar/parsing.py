"""Parsers for the canonical text formats.

The polynomial grammar is a sum of terms, each term a ``*``-joined product
of an optional rational (``int`` or ``int/nat``) and powered variables
(``name`` or ``name^nat``); parenthesized subexpressions are accepted on
input even though canonical output never needs them.  Parse-then-print is
the identity on canonical strings.

Three front ends share the tokenizer:

* ``cpoly_parse``: commutative polynomials over the generator names and h.
* ``ncpoly_parse``: same surface syntax over the capitalized names; a term
  is read as a product in the written order (a free word) and reduced to
  PBW normal form, so ``Y*X`` means the ordered ``X*Y - h*Z``.
* ``parse_h_scalar``: univariate polynomials in h, optionally mentioning
  the symbol ``l`` which is substituted by a supplied rational.

``parse_multivector`` handles the multivector format: terms
``poly * d/dx ^ d/dy`` with a parenthesized coefficient whenever the
polynomial has more than one term.
"""

from __future__ import annotations

import re

from .enveloping import NCPoly, pbw_reduce
from .liealg import LieAlgebraSpec
from .multivector import MultiVector
from .poly import CPoly
from .rationals import ONE, rat
from .scalars import HScalar


class ParseError(ValueError):
    """Syntax or vocabulary error, carrying the offending position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<dvec>d/d[A-Za-z_]\w*)|(?P<num>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if match.lastgroup == "dvec":
            tokens.append(("dvec", match.group("dvec")[3:], match.start("dvec")))
        elif match.lastgroup == "num":
            tokens.append(("num", int(match.group("num")), match.start("num")))
        elif match.lastgroup == "name":
            tokens.append(("name", match.group("name"), match.start("name")))
        else:
            tokens.append(("op", match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _ExprParser:
    """Recursive descent over an abstract term algebra.

    The subclass provides the constants/operations of the value domain;
    the grammar layer is shared.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect_op(self, symbol):
        kind, value, pos = self.peek()
        if kind != "op" or value != symbol:
            raise ParseError(f"expected {symbol!r}", pos)
        return self.advance()

    # domain hooks -------------------------------------------------------
    def const(self, value):
        raise NotImplementedError

    def symbol(self, name, pos):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def power(self, a, exponent):
        raise NotImplementedError

    # grammar ------------------------------------------------------------
    def parse(self):
        value = self.parse_expr()
        kind, _v, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", pos)
        return value

    def parse_expr(self):
        sign = 1
        kind, value, _pos = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        total = self.mul(self.const(rat(sign)), self.parse_term())
        while True:
            kind, value, _pos = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                term = self.parse_term()
                if value == "-":
                    term = self.mul(self.const(rat(-1)), term)
                total = self.add(total, term)
            else:
                return total

    def parse_term(self):
        value = self.parse_factor()
        while True:
            kind, symbol, _pos = self.peek()
            if kind == "op" and symbol == "*":
                self.advance()
                value = self.mul(value, self.parse_factor())
            else:
                return value

    def parse_factor(self):
        base = self.parse_atom()
        kind, symbol, _pos = self.peek()
        if kind == "op" and symbol == "^":
            self.advance()
            kind, value, pos = self.advance()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            base = self.power(base, value)
        return base

    def parse_atom(self):
        kind, value, pos = self.advance()
        if kind == "num":
            numerator = value
            kind2, v2, _p2 = self.peek()
            if kind2 == "op" and v2 == "/":
                self.advance()
                kind3, v3, pos3 = self.advance()
                if kind3 != "num" or v3 == 0:
                    raise ParseError("denominator must be a positive integer", pos3)
                return self.const(rat(numerator, v3))
            return self.const(rat(numerator))
        if kind == "name":
            return self.symbol(value, pos)
        if kind == "op" and value == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == "op" and value == "-":
            return self.mul(self.const(rat(-1)), self.parse_factor())
        raise ParseError("expected a term", pos)


class _CommutativeParser(_ExprParser):
    """Values are {exponent_tuple: rational} maps over a fixed variable list."""

    def __init__(self, text, varnames):
        super().__init__(text)
        self.varnames = tuple(varnames)
        self.width = len(self.varnames)

    def const(self, value):
        return {(0,) * self.width: value} if value else {}

    def symbol(self, name, pos):
        try:
            idx = self.varnames.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r}", pos) from None
        key = tuple(1 if i == idx else 0 for i in range(self.width))
        return {key: ONE}

    def add(self, a, b):
        out = dict(a)
        for key, v in b.items():
            nv = out.get(key, 0) + v
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
        return out

    def mul(self, a, b):
        out = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                nv = out.get(key, 0) + va * vb
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
        return out

    def power(self, a, exponent):
        out = self.const(ONE)
        for _ in range(exponent):
            out = self.mul(out, a)
        return out


class _WordParser(_ExprParser):
    """Values are {(word, h_power): rational} maps; words multiply by
    concatenation, h is central."""

    def __init__(self, text, gen_names):
        super().__init__(text)
        self.gen_names = tuple(gen_names)

    def const(self, value):
        return {((), 0): value} if value else {}

    def symbol(self, name, pos):
        if name == "h":
            return {((), 1): ONE}
        try:
            idx = self.gen_names.index(name)
        except ValueError:
            raise ParseError(f"unknown generator {name!r}", pos) from None
        return {((idx,), 0): ONE}

    def add(self, a, b):
        out = dict(a)
        for key, v in b.items():
            nv = out.get(key, 0) + v
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
        return out

    def mul(self, a, b):
        out = {}
        for (wa, ha), va in a.items():
            for (wb, hb), vb in b.items():
                key = (wa + wb, ha + hb)
                nv = out.get(key, 0) + va * vb
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
        return out

    def power(self, a, exponent):
        out = self.const(ONE)
        for _ in range(exponent):
            out = self.mul(out, a)
        return out


def cpoly_parse(text: str, algebra: LieAlgebraSpec) -> CPoly:
    """Parse a commutative polynomial over the generator names and h."""
    varnames = algebra.names + ("h",)
    packed = _CommutativeParser(text, varnames).parse()
    return CPoly(algebra, packed)


def ncpoly_parse(text: str, algebra: LieAlgebraSpec) -> NCPoly:
    """Parse an enveloping element; terms are free words in the written
    order, reduced to PBW normal form."""
    names = tuple(n.upper() for n in algebra.names)
    words = _WordParser(text, names).parse()
    out = NCPoly.zero(algebra)
    for (word, hp), coeff in words.items():
        reduced = pbw_reduce(word, algebra)
        out = out + reduced * HScalar.h_power(hp, coeff)
    return out


def parse_h_scalar(text: str, l=None) -> HScalar:
    """Parse a polynomial in h, optionally containing the symbol l.

    ``l`` must be supplied (as an exact rational) when the text mentions
    it; the result is always a pure h-polynomial.
    """
    packed = _CommutativeParser(text, ("h", "l")).parse()
    coeffs = {}
    for (eh, el), value in packed.items():
        if el:
            if l is None:
                raise ParseError("the symbol l needs a value (pass --l)", 0)
            value = value * rat(l) ** el
        coeffs[eh] = coeffs.get(eh, 0) + value
    top = max(coeffs, default=-1)
    return HScalar(tuple(coeffs.get(p, 0) for p in range(top + 1)))


def parse_multivector(text: str, algebra: LieAlgebraSpec) -> MultiVector:
    """Parse the multivector format: sums of ``poly * d/dx ^ d/dy`` terms."""
    tokens = _tokenize(text)
    names = algebra.names

    # split the token stream into top-level +/- separated chunks
    chunks = []
    current = []
    sign = 1
    depth = 0
    for tok in tokens:
        kind, value, pos = tok
        if kind == "op" and value == "(":
            depth += 1
        elif kind == "op" and value == ")":
            depth -= 1
        if kind == "end" or (depth == 0 and kind == "op" and value in "+-" and (current or chunks)):
            if current:
                chunks.append((sign, current))
            elif chunks:
                raise ParseError("empty term", pos)
            sign = -1 if (kind == "op" and value == "-") else 1
            current = []
            if kind == "end":
                break
        else:
            current.append(tok)
    if not chunks:
        raise ParseError("empty multivector", 0)

    result = None
    for sign, chunk in chunks:
        # trailing d/d factors form the direction part
        ids = []
        while chunk and chunk[-1][0] == "dvec":
            name = chunk[-1][1]
            try:
                ids.append(names.index(name))
            except ValueError:
                raise ParseError(f"unknown direction d/d{name}", chunk[-1][2]) from None
            chunk = chunk[:-1]
            if chunk and chunk[-1][0] == "op" and chunk[-1][1] in ("^", "*"):
                chunk = chunk[:-1]
        ids.reverse()
        if not chunk:
            poly = CPoly.constant(algebra, 1)
        elif len(chunk) == 1 and chunk[0][0] == "op" and chunk[0][1] in "+-":
            poly = CPoly.constant(algebra, -1 if chunk[0][1] == "-" else 1)
        else:
            poly = cpoly_parse(_slice_text(text, chunk), algebra)
        term = MultiVector.term(algebra, ids, poly * sign)
        if result is None:
            result = term
        elif term.degree != result.degree:
            raise ParseError("mixed degrees in one multivector", 0)
        else:
            result = result + term
    return result


def _slice_text(text: str, chunk) -> str:
    start = chunk[0][2]
    last_kind, last_value, last_pos = chunk[-1]
    if last_kind == "num":
        end = last_pos + len(str(last_value))
    elif last_kind in ("name", "dvec"):
        end = last_pos + len(str(last_value)) + (3 if last_kind == "dvec" else 0)
    else:
        end = last_pos + 1
    return text[start:end]
