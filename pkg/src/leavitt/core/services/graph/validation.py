"""Graph validation: turns a graph document into an immutable Graph."""

import logging
import re
from collections.abc import Mapping
from typing import Any

from pydantic import ValidationError

from leavitt.core.constants import IDENTIFIER_PATTERN
from leavitt.core.exceptions import GraphValidationError
from leavitt.core.models.graph import EdgeSpec, Graph
from leavitt.core.schemas.graph import EdgeEntry, GraphDocument

logger = logging.getLogger(__name__)

_IDENTIFIER = re.compile(rf"^{IDENTIFIER_PATTERN}$")


def format_location(loc: tuple[int | str, ...]) -> str:
    text = ""
    for part in loc:
        text += f"[{part}]" if isinstance(part, int) else (f".{part}" if text else str(part))
    return text


def validate_graph(raw: GraphDocument | Mapping[str, Any]) -> Graph:
    """Check a graph description and build the Graph.

    Rejects unknown fields, empty or malformed identifiers, duplicate names
    (vertices, edges and bundles share one namespace; the second occurrence is
    reported) and endpoints that are not declared vertices.
    """
    if isinstance(raw, GraphDocument):
        document = raw
    else:
        try:
            document = GraphDocument.model_validate(raw)
        except ValidationError as e:
            first = e.errors()[0]
            raise GraphValidationError(
                first["msg"], str(first.get("input", "")), format_location(first["loc"])
            ) from e

    seen: set[str] = set()

    def claim(name: str, location: str) -> None:
        if not name.strip():
            raise GraphValidationError("Empty identifier", name, location)
        if not _IDENTIFIER.match(name):
            raise GraphValidationError("Malformed identifier", name, location)
        if name in seen:
            raise GraphValidationError("Duplicate name", name, location)
        seen.add(name)

    for i, v in enumerate(document.vertices):
        claim(v, f"vertices[{i}]")

    def check_entries(entries: list[EdgeEntry], section: str) -> list[EdgeSpec]:
        specs = []
        for i, entry in enumerate(entries):
            claim(entry.name, f"{section}[{i}].name")
            for end in ("src", "dst"):
                vertex = getattr(entry, end)
                if not vertex.strip():
                    raise GraphValidationError("Empty identifier", vertex, f"{section}[{i}].{end}")
                if vertex not in document.vertices:
                    raise GraphValidationError(
                        "Dangling endpoint", vertex, f"{section}[{i}].{end}"
                    )
            specs.append(EdgeSpec(entry.name, entry.src, entry.dst))
        return specs

    edges = check_entries(document.edges, "edges")
    bundles = check_entries(document.bundles, "bundles")
    graph = Graph(document.vertices, edges, bundles)
    logger.debug("Validated %r", graph)
    return graph


def emit_graph(graph: Graph) -> GraphDocument:
    """Inverse of ``validate_graph``."""
    return GraphDocument(
        vertices=list(graph.vertices),
        edges=[EdgeEntry(name=e.name, src=e.src, dst=e.dst) for e in graph.edges],
        bundles=[EdgeEntry(name=b.name, src=b.src, dst=b.dst) for b in graph.bundles],
    )
