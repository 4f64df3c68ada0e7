"""Parser for element expressions such as ``1 - 2/3*x^2*y``.

Grammar, whitespace-insensitive:

    expr     := ["+" | "-"] term (("+" | "-") term)*
    term     := rational ["*" monomial] | monomial
    monomial := atom ("*" atom)*
    atom     := generator ["^" ["-"] integer]
    rational := integer ["/" integer]

Atoms name generators of the target group; exponents may be negative.
The canonical printer emits expressions this parser accepts, and
parse(print(a)) == a.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraElement
from .groups import FiniteGroup


class ElementSyntaxError(ValueError):
    """Malformed expression; position is a 0-based offset into the text."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownGeneratorError(ValueError):
    """The expression references a generator the group does not have."""

    def __init__(self, name: str, position: int) -> None:
        super().__init__(f"unknown generator {name!r} (at position {position})")
        self.name = name
        self.position = position


_SYMBOLS = "+-*/^"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(("sym", ch, i))
            i += 1
            continue
        raise ElementSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, group: FiniteGroup) -> None:
        self.group = group
        self.tokens = _tokenize(text)
        self.pos = 0
        self.gen_index = {name: g for name, g in group.generators}

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> AlgebraElement:
        pairs: list[tuple[int, Fraction]] = []
        sign = self._leading_sign()
        while True:
            g, c = self._term()
            pairs.append((g, sign * c))
            kind, value, pos = self.peek()
            if kind == "end":
                break
            if kind == "sym" and value in "+-":
                self.take()
                sign = 1 if value == "+" else -1
                continue
            shown = value or "end of input"
            raise ElementSyntaxError(f"expected '+' or '-', found {shown!r}", pos)
        return AlgebraElement(self.group, pairs)

    def _leading_sign(self) -> int:
        kind, value, _ = self.peek()
        if kind == "sym" and value in "+-":
            self.take()
            return 1 if value == "+" else -1
        return 1

    def _term(self) -> tuple[int, Fraction]:
        kind, _, pos = self.peek()
        if kind == "num":
            coeff = self._rational()
            kind, value, _ = self.peek()
            if kind == "sym" and value == "*":
                self.take()
                return self._monomial(), coeff
            return self.group.identity, coeff
        if kind == "name":
            return self._monomial(), Fraction(1)
        raise ElementSyntaxError("expected a number or a generator", pos)

    def _rational(self) -> Fraction:
        _, value, _ = self.take()
        num = int(value)
        kind, value, _ = self.peek()
        if kind == "sym" and value == "/":
            self.take()
            kind, value, pos = self.take()
            if kind != "num":
                raise ElementSyntaxError("expected an integer denominator", pos)
            den = int(value)
            if den == 0:
                raise ElementSyntaxError("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def _monomial(self) -> int:
        g = self._atom()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value == "*":
                self.take()
                g = self.group.mul[g][self._atom()]
                continue
            return g

    def _atom(self) -> int:
        kind, value, pos = self.take()
        if kind != "name":
            raise ElementSyntaxError("expected a generator", pos)
        if value not in self.gen_index:
            raise UnknownGeneratorError(value, pos)
        g = self.gen_index[value]
        kind, value, _ = self.peek()
        if kind == "sym" and value == "^":
            self.take()
            return self.group.power(g, self._exponent())
        return g

    def _exponent(self) -> int:
        kind, value, pos = self.take()
        negative = False
        if kind == "sym" and value == "-":
            negative = True
            kind, value, pos = self.take()
        if kind != "num":
            raise ElementSyntaxError("expected an integer exponent", pos)
        exp = int(value)
        return -exp if negative else exp


def parse_element(text: str, group: FiniteGroup) -> AlgebraElement:
    """Parse ``text`` as an element of the rational group algebra of ``group``."""
    return _Parser(text, group).parse()
