"""Recursive-descent parser for element expressions.

    expression := [sign] term (('+' | '-') term)*
    term       := [scalar '*'] factor ('.' factor)*  |  '0'
    factor     := atom ('*' | '^' natural)*
    atom       := vertex | edge | bundle '[' natural ']' | '(' expression ')'
    scalar     := natural | natural '/' natural | natural 'mod' natural

A trailing '*' is the ghost (involution); '.' is multiplication.
"""

import re
from dataclasses import dataclass

from leavitt.core.constants import IDENTIFIER_PATTERN
from leavitt.core.exceptions import FieldError, ParseError
from leavitt.core.models.element import Element
from leavitt.core.models.field import Scalar
from leavitt.core.models.graph import bundle_ref
from leavitt.core.services.algebra.algebra import LeavittAlgebra

_TOKEN = re.compile(
    rf"(?:(?P<name>{IDENTIFIER_PATTERN})|(?P<int>\d+)|(?P<op>[\[\]*^.+\-/()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # name, int, op or end
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position == len(text):
            tokens.append(Token("end", "", position))
            return tokens
        match = _TOKEN.match(text, position)
        if match is None or match.lastgroup is None:
            raise ParseError("Unexpected character", position, text[position])
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()


_FLIP = {"edge": "ghost", "ghost": "edge", "vertex": "vertex"}


@dataclass(frozen=True)
class _End:
    """One end of a path-shaped factor and the vertex it meets its neighbour at."""

    kind: str  # edge, ghost or vertex
    vertex: str
    ref: str

    def flipped(self) -> "_End":
        return _End(_FLIP[self.kind], self.vertex, self.ref)


@dataclass(frozen=True)
class _Factor:
    """A parsed factor. Path-shaped factors keep both ends for composability
    checks; sums keep neither."""

    element: Element
    position: int
    head: _End | None = None
    tail: _End | None = None

    def involution(self, element: Element) -> "_Factor":
        head = self.tail.flipped() if self.tail else None
        tail = self.head.flipped() if self.head else None
        return _Factor(element, self.position, head, tail)


class ExpressionParser:
    def __init__(self, algebra: LeavittAlgebra, text: str):
        self.algebra = algebra
        self.graph = algebra.graph
        self.field = algebra.field
        self.tokens = tokenize(text)
        self.index = 0

    # --- token helpers ---

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index = min(self.index + 1, len(self.tokens) - 1)
        return token

    def _at(self, text: str) -> bool:
        return self.current.kind == "op" and self.current.text == text

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            raise ParseError(f"Expected {text!r}", self.current.position, self.current.text)
        return self._advance()

    def _natural(self) -> int:
        if self.current.kind != "int":
            raise ParseError("Expected a natural number", self.current.position, self.current.text)
        return int(self._advance().text)

    # --- grammar ---

    def parse(self) -> Element:
        result = self._expression()
        if self.current.kind != "end":
            raise ParseError("Unexpected token", self.current.position, self.current.text)
        return result.element

    def _expression(self) -> _Factor:
        start = self.current.position
        negate = False
        if self._at("+") or self._at("-"):
            negate = self._advance().text == "-"
        first = self._term()
        total = -first.element if negate else first.element
        single = True
        while self._at("+") or self._at("-"):
            sign = self._advance().text
            term = self._term().element
            total = total - term if sign == "-" else total + term
            single = False
        if single:
            return _Factor(total, start, first.head, first.tail)
        return _Factor(total, start)

    def _term(self) -> _Factor:
        start = self.current.position
        coefficient: Scalar | None = None
        if self.current.kind == "int":
            token = self.current
            coefficient = self._scalar()
            if not self._at("*"):
                if self.field.is_zero(coefficient) and (
                    self.current.kind == "end" or self.current.text in ("+", "-", ")")
                ):
                    return _Factor(self.algebra.zero(), start)
                raise ParseError("A scalar must multiply a factor", token.position, token.text)
            self._advance()

        factors = [self._factor()]
        while self._at("."):
            self._advance()
            factors.append(self._factor())
        for left, right in zip(factors, factors[1:]):
            self._check_adjacent(left, right)

        product = self.algebra.product([f.element for f in factors])
        if coefficient is not None:
            product = product.scale(coefficient)
        return _Factor(product, start, factors[0].head, factors[-1].tail)

    def _scalar(self) -> Scalar:
        token = self.current
        numerator = self._natural()
        try:
            if self._at("/"):
                self._advance()
                return self.field.fraction(numerator, self._natural())
            if self.current.kind == "name" and self.current.text == "mod":
                self._advance()
                return self.field.residue(numerator, self._natural())
            return self.field(numerator)
        except FieldError as e:
            raise ParseError(str(e), token.position, token.text) from e

    def _factor(self) -> _Factor:
        factor = self._atom()
        while self._at("*") or self._at("^"):
            if self._advance().text == "*":
                factor = factor.involution(self.algebra.involution(factor.element))
                continue
            token = self.current
            exponent = self._natural()
            if exponent == 0:
                v = self._closed_path_base(factor.element, token)
                end = _End("vertex", v, v)
                factor = _Factor(self.algebra.vertex(v), factor.position, end, end)
            elif exponent > 1:
                self._check_adjacent(factor, factor)
                power = self.algebra.product([factor.element] * exponent)
                factor = _Factor(power, factor.position, factor.head, factor.tail)
        return factor

    def _closed_path_base(self, element: Element, token: Token) -> str:
        """x^0 is the base vertex when x is a closed real path."""
        terms = element.sorted_terms()
        if len(terms) == 1 and self.field.is_one(terms[0][1]):
            alpha, beta = terms[0][0]
            if alpha.steps and not beta.steps and alpha.base == alpha.end:
                return alpha.base
        raise ParseError("Power 0 is only defined for closed paths", token.position, "0")

    def _edge_factor(self, ref: str, position: int) -> _Factor:
        graph = self.graph
        head = _End("edge", graph.source(ref), ref)
        tail = _End("edge", graph.range(ref), ref)
        return _Factor(self.algebra.edge(ref), position, head, tail)

    def _atom(self) -> _Factor:
        token = self.current
        if self._at("("):
            self._advance()
            inner = self._expression()
            self._expect(")")
            return _Factor(inner.element, token.position, inner.head, inner.tail)
        if token.kind != "name":
            raise ParseError("Expected a factor", token.position, token.text)
        self._advance()
        name = token.text
        graph = self.graph

        if self._at("["):
            self._advance()
            index = self._natural()
            self._expect("]")
            if graph.bundle(name) is None:
                raise ParseError("Only bundles take an index", token.position, name)
            return self._edge_factor(bundle_ref(name, index), token.position)
        if graph.has_vertex(name):
            end = _End("vertex", name, name)
            return _Factor(self.algebra.vertex(name), token.position, end, end)
        if graph.edge(name) is not None:
            return self._edge_factor(name, token.position)
        if graph.bundle(name) is not None:
            raise ParseError("Bundle members need an index", token.position, name)
        raise ParseError("Unknown identifier", token.position, name)

    def _check_adjacent(self, left: _Factor, right: _Factor) -> None:
        """Real paths, ghost paths and vertices must meet where they join.

        A real path followed by a ghost path, or the reverse, is a genuine
        product that may vanish, so it is not checked.
        """
        tail, head = left.tail, right.head
        if tail is None or head is None or {tail.kind, head.kind} == {"edge", "ghost"}:
            return
        if tail.vertex != head.vertex:
            raise ParseError(
                f"{tail.ref} ends at {tail.vertex!r} but {head.ref} starts at {head.vertex!r}",
                right.position,
                head.ref,
            )


def parse_expression(algebra: LeavittAlgebra, text: str) -> Element:
    return ExpressionParser(algebra, text).parse()
