"""Structured ideal generators and the canonical (H, S, Y) form."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from leavitt.core.exceptions import GeneratorError
from leavitt.core.models.element import Element
from leavitt.core.models.graph import AdmissiblePair, Cycle
from leavitt.core.models.polynomial import FieldPolynomial

if TYPE_CHECKING:
    from leavitt.core.services.algebra.algebra import LeavittAlgebra


@dataclass(frozen=True)
class CyclePolynomial:
    """The element u + Σ kᵢ g^{rᵢ} for a cycle g based at u."""

    base: str
    cycle: Cycle
    poly: FieldPolynomial

    def __post_init__(self) -> None:
        if self.cycle.base != self.base:
            raise GeneratorError(
                f"Cycle {list(self.cycle.steps)} is not based at {self.base!r}"
            )
        if self.poly.degree < 1 or not self.poly.is_unit_normalized():
            raise GeneratorError(
                f"Cycle polynomial at {self.base!r} needs constant term 1 and degree >= 1, "
                f"got {self.poly}"
            )

    def with_poly(self, poly: FieldPolynomial) -> "CyclePolynomial":
        return CyclePolynomial(self.base, self.cycle, poly)

    def element(self, algebra: "LeavittAlgebra") -> Element:
        return polynomial_in_cycle(algebra, self.cycle, self.poly)

    def sort_key(self) -> tuple[str, tuple[str, ...]]:
        return self.base, self.cycle.steps


def polynomial_in_cycle(algebra: "LeavittAlgebra", cycle: Cycle, poly: FieldPolynomial) -> Element:
    """p(g) with g^0 the base vertex."""
    return algebra.linear_combination(
        (coefficient, algebra.cycle_power(cycle, k)) for k, coefficient in poly.terms()
    )


@dataclass(frozen=True)
class StructuredGeneratorSet:
    """Finitely many vertices, breaking vertices and cycle polynomials.

    A breaking vertex v stands for v^H, read against the hereditary saturated
    set H that the whole set generates.
    """

    vertices: tuple[str, ...] = ()
    breaking: tuple[str, ...] = ()
    cycle_polys: tuple[CyclePolynomial, ...] = ()

    def __len__(self) -> int:
        return len(self.vertices) + len(self.breaking) + len(self.cycle_polys)

    def mentioned_vertices(self) -> frozenset[str]:
        return frozenset(self.vertices) | frozenset(self.breaking) | {
            y.base for y in self.cycle_polys
        }


@dataclass(frozen=True)
class TraceStep:
    round: int
    action: str
    subject: str
    detail: str = ""


@dataclass(frozen=True)
class CanonicalIdealForm:
    """An ideal as I_(H,S) plus cycle polynomials on exitless quotient cycles.

    ``vertex_gens`` generate H together with ``exit_vertices``; each of the
    latter is the range of an exit of a surviving cycle polynomial, recorded
    as ``vertex -> (base, path)`` where ``path`` runs from the base along the
    cycle and ends with the exit.
    """

    hereditary: frozenset[str]
    vertex_gens: tuple[str, ...]
    breaking: frozenset[str]
    cycle_polys: tuple[CyclePolynomial, ...]
    exit_vertices: Mapping[str, tuple[str, tuple[str, ...]]] = field(default_factory=dict)
    trace: tuple[TraceStep, ...] = ()

    @property
    def pair(self) -> AdmissiblePair:
        return AdmissiblePair(self.hereditary, self.breaking)

    def is_graded(self) -> bool:
        return not self.cycle_polys

    def cycle_at(self, v: str) -> CyclePolynomial | None:
        return next((y for y in self.cycle_polys if y.base == v), None)

    def generator_reading(self) -> StructuredGeneratorSet:
        return StructuredGeneratorSet(
            tuple(self.vertex_gens), tuple(sorted(self.breaking)), self.cycle_polys
        )
