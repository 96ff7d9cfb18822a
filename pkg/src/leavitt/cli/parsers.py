"""Readers for graph files, generator files, elements and vertex sets."""

import logging
from collections.abc import Iterable
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ValidationError

from leavitt.cli.expression import parse_expression
from leavitt.core.exceptions import (
    FieldError,
    GeneratorError,
    GraphValidationError,
    InputFileError,
    NotACycleError,
    UnknownVertexError,
)
from leavitt.core.models.element import Element
from leavitt.core.models.field import ScalarField
from leavitt.core.models.graph import Graph
from leavitt.core.models.ideal import CyclePolynomial, StructuredGeneratorSet
from leavitt.core.models.polynomial import FieldPolynomial
from leavitt.core.schemas.generators import GeneratorDocument
from leavitt.core.schemas.graph import GraphDocument
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.graph.cycles import cycle_vertices, make_cycle, rotate_to
from leavitt.core.services.graph.validation import format_location, validate_graph

logger = logging.getLogger(__name__)

DocumentT = TypeVar("DocumentT", bound=BaseModel)


def _read_document(path: str | Path, schema: type[DocumentT]) -> DocumentT:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFileError(f"Cannot read {path}: {e.strerror or e}", source=str(path)) from e
    try:
        return schema.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        raise InputFileError(first["msg"], format_location(first["loc"]), str(path)) from e


def parse_graph_file(path: str | Path) -> Graph:
    """Read and validate a graph document."""
    document = _read_document(path, GraphDocument)
    try:
        graph = validate_graph(document)
    except GraphValidationError as e:
        raise InputFileError(str(e), e.location, str(path)) from e
    logger.info("Loaded %r from %s", graph, path)
    return graph


def parse_generator_file(
    path: str | Path, graph: Graph, field: ScalarField
) -> StructuredGeneratorSet:
    """Read a structured generator document against ``graph``.

    A cycle may be listed from any of its vertices; it is read from ``base``.
    """
    document = _read_document(path, GeneratorDocument)
    source = str(path)

    for section in ("vertices", "breaking"):
        for i, v in enumerate(getattr(document, section)):
            if not graph.has_vertex(v):
                raise InputFileError(f"Unknown vertex {v!r}", f"{section}[{i}]", source)

    cycle_polys = []
    for i, entry in enumerate(document.cycle_polys):
        location = f"cycle_polys[{i}]"
        if not graph.has_vertex(entry.base):
            raise InputFileError(f"Unknown vertex {entry.base!r}", f"{location}.base", source)
        try:
            cycle = make_cycle(graph, entry.cycle)
        except NotACycleError as e:
            raise InputFileError(str(e), f"{location}.cycle", source) from e
        if entry.base not in cycle_vertices(graph, cycle):
            raise InputFileError(
                f"{entry.base!r} is not on the cycle", f"{location}.base", source
            )
        try:
            terms = [(exponent, field.parse(k)) for exponent, k in entry.poly]
        except FieldError as e:
            raise InputFileError(str(e), f"{location}.poly", source) from e
        poly = FieldPolynomial.from_terms(field, terms, constant=field.one)
        try:
            y = CyclePolynomial(entry.base, rotate_to(graph, cycle, entry.base), poly)
        except GeneratorError as e:
            raise InputFileError(str(e), f"{location}.poly", source) from e
        cycle_polys.append(y)

    return StructuredGeneratorSet(
        tuple(document.vertices), tuple(document.breaking), tuple(cycle_polys)
    )


def parse_element(graph: Graph, text: str, field: ScalarField | None = None) -> Element:
    """Parse an expression into an element in normal form."""
    algebra = LeavittAlgebra(graph, field or ScalarField.rationals())
    return parse_expression(algebra, text)


def parse_vertex_set(graph: Graph, names: Iterable[str] | None) -> frozenset[str]:
    """Vertices from repeated options; each option may hold a comma list."""
    vertices = {
        name.strip() for option in names or () for name in option.split(",") if name.strip()
    }
    try:
        return graph.require_vertices(vertices)
    except UnknownVertexError as e:
        raise InputFileError(str(e), source="command line") from e
