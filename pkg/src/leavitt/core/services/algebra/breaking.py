"""The idempotents v^H attached to breaking vertices."""

from collections.abc import Iterable

from leavitt.core.exceptions import NotBreakingVertexError
from leavitt.core.models.element import Element, Monomial, vertex_monomial
from leavitt.core.models.field import Scalar
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.graph.closure import breaking_vertices, edges_leaving


def gap_element(algebra: LeavittAlgebra, hereditary: frozenset[str], v: str) -> Element:
    """v − Σ ee* over the ordinary out-edges of v with range outside H.

    No breaking-vertex check; callers that need one use ``breaking_element``.
    """
    graph = algebra.graph
    field = algebra.field
    graph.require_vertices([v])
    terms: list[tuple[Monomial, Scalar]] = [(vertex_monomial(v), field.one)]
    for e in edges_leaving(graph, v, hereditary):
        path = graph.path([e])
        terms.append((Monomial(path, path), -field.one))
    return algebra.element(terms)


def breaking_element(algebra: LeavittAlgebra, hereditary: Iterable[str], v: str) -> Element:
    hereditary = frozenset(hereditary)
    algebra.graph.require_vertices([v])
    if v not in breaking_vertices(algebra.graph, hereditary):
        raise NotBreakingVertexError(v)
    return gap_element(algebra, hereditary, v)
