"""Monomials αβ* and finite linear combinations of them."""

from collections.abc import Iterable, Mapping
from types import MappingProxyType
from typing import NamedTuple

from leavitt.core.exceptions import AmbientMismatchError
from leavitt.core.models.field import Scalar, ScalarField
from leavitt.core.models.graph import Graph, Path, split_ref


class Monomial(NamedTuple):
    """The monomial αβ*; ``beta`` is stored unreversed."""

    alpha: Path
    beta: Path

    @property
    def length(self) -> int:
        return len(self.alpha.steps) + len(self.beta.steps)

    @property
    def left(self) -> str:
        """Vertex u with u·αβ* = αβ*."""
        return self.alpha.base

    @property
    def right(self) -> str:
        """Vertex w with αβ*·w = αβ*."""
        return self.beta.base

    def star(self) -> "Monomial":
        return Monomial(self.beta, self.alpha)

    def sort_key(self) -> tuple:
        return (
            self.length,
            self.alpha.sort_key(),
            self.beta.sort_key(),
            self.alpha.base,
            self.beta.base,
        )

    def to_expression(self) -> str:
        if not self.alpha.steps and not self.beta.steps:
            return self.alpha.base
        factors = list(self.alpha.steps)
        factors.extend(f"{step}*" for step in reversed(self.beta.steps))
        return ".".join(factors)


def vertex_monomial(v: str) -> Monomial:
    path = Path(v, (), v)
    return Monomial(path, path)


class Element:
    """A finite linear combination of monomials over one graph and field.

    Instances are immutable. Zero coefficients are never stored, so the zero
    element has an empty term map. Products and normal forms are computed by
    ``LeavittAlgebra``; the linear operations here preserve normal form.
    """

    __slots__ = ("_terms", "field", "graph")

    def __init__(
        self,
        graph: Graph,
        field: ScalarField,
        terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = (),
    ):
        self.graph = graph
        self.field = field
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Monomial, Scalar] = {}
        for monomial, coefficient in items:
            total = collected.get(monomial, field.zero) + coefficient
            if field.is_zero(total):
                collected.pop(monomial, None)
            else:
                collected[monomial] = total
        self._terms = collected

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def left_vertices(self) -> frozenset[str]:
        return frozenset(m.left for m in self._terms)

    def right_vertices(self) -> frozenset[str]:
        return frozenset(m.right for m in self._terms)

    def bundle_refs(self) -> frozenset[str]:
        refs: set[str] = set()
        for m in self._terms:
            refs.update(
                s for s in (*m.alpha.steps, *m.beta.steps) if split_ref(s)[1] is not None
            )
        return frozenset(refs)

    # --- linear structure ---

    def check_compatible(self, other: "Element") -> None:
        if self.field != other.field:
            raise AmbientMismatchError(f"Fields differ: {self.field.spec} vs {other.field.spec}")
        if self.graph != other.graph:
            raise AmbientMismatchError("Elements live over different graphs")

    def __add__(self, other: "Element") -> "Element":
        self.check_compatible(other)
        return Element(self.graph, self.field, [*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> "Element":
        return Element(self.graph, self.field, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, factor: Scalar) -> "Element":
        if self.field.is_zero(factor):
            return Element(self.graph, self.field)
        return Element(self.graph, self.field, {m: factor * c for m, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.field == other.field
            and self.graph == other.graph
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    # --- printing ---

    def to_expression(self) -> str:
        """Canonical text; re-parses to the same normal form."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for monomial, coefficient in self.sorted_terms():
            negative = self.field.is_negative(coefficient)
            magnitude = -coefficient if negative else coefficient
            body = monomial.to_expression()
            if not self.field.is_one(magnitude):
                body = f"{self.field.format_coefficient(magnitude)}*{body}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_expression()

    def __repr__(self) -> str:
        return f"Element({self.to_expression()!r})"
