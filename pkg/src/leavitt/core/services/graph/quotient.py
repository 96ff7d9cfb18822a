"""Quotient graphs E\\(H, S) and the generator images of the quotient map."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

from leavitt.core.exceptions import NotAdmissibleError
from leavitt.core.models.graph import AdmissiblePair, EdgeSpec, Graph, bundle_ref, split_ref
from leavitt.core.services.graph.closure import breaking_vertices, is_hereditary_saturated

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientPresentation:
    """The quotient graph of an admissible pair together with φ on generators.

    ``generator_images`` maps every vertex, edge and bundle name of the source
    graph to the names whose sum is its image; an empty tuple is the zero
    element. A bundle entry is applied member-wise: ``b[k]`` maps to the
    ``[k]`` members of the listed bundles.
    """

    source: Graph
    pair: AdmissiblePair
    graph: Graph
    primed_vertices: Mapping[str, str]
    primed_edges: Mapping[str, str]
    generator_images: Mapping[str, tuple[str, ...]] = field(repr=False)

    def image_of(self, ref: str) -> tuple[str, ...]:
        """Image of a vertex or an edge reference, bundle members included."""
        name, index = split_ref(ref)
        images = self.generator_images[name]
        if index is None:
            return images
        return tuple(bundle_ref(b, index) for b in images)

    def format_image(self, name: str) -> str:
        images = self.generator_images[name]
        return " + ".join(images) if images else "0"


def check_admissible(graph: Graph, pair: AdmissiblePair) -> frozenset[str]:
    """Return B_H after checking that ``pair`` is admissible."""
    graph.require_vertices(pair.hereditary | pair.breaking)
    if not is_hereditary_saturated(graph, pair.hereditary):
        raise NotAdmissibleError(f"{sorted(pair.hereditary)} is not hereditary saturated")
    breaking = breaking_vertices(graph, pair.hereditary)
    extra = sorted(pair.breaking - breaking)
    if extra:
        raise NotAdmissibleError(f"{extra[0]!r} is not a breaking vertex of H")
    return breaking


def _fresh(name: str, taken: set[str]) -> str:
    candidate = f"{name}'"
    while candidate in taken:
        candidate += "'"
    taken.add(candidate)
    return candidate


def quotient_graph(graph: Graph, pair: AdmissiblePair) -> QuotientPresentation:
    hereditary = pair.hereditary
    primed_targets = check_admissible(graph, pair) - pair.breaking
    taken = set(graph.names)

    primed_vertices = {v: _fresh(v, taken) for v in sorted(primed_targets)}
    images: dict[str, tuple[str, ...]] = {}
    for v in graph.vertices:
        if v in hereditary:
            images[v] = ()
        elif v in primed_vertices:
            images[v] = (v, primed_vertices[v])
        else:
            images[v] = (v,)

    primed_edges: dict[str, str] = {}

    def retain(specs: tuple[EdgeSpec, ...]) -> tuple[list[EdgeSpec], list[EdgeSpec]]:
        kept: list[EdgeSpec] = []
        primes: list[EdgeSpec] = []
        for spec in specs:
            if spec.dst in hereditary:
                images[spec.name] = ()
                continue
            kept.append(spec)
            if spec.dst in primed_vertices:
                primed = _fresh(spec.name, taken)
                primed_edges[spec.name] = primed
                primes.append(EdgeSpec(primed, spec.src, primed_vertices[spec.dst]))
                images[spec.name] = (spec.name, primed)
            else:
                images[spec.name] = (spec.name,)
        return kept, primes

    edges, primed_plain = retain(graph.edges)
    bundles, primed_bundles = retain(graph.bundles)
    vertices = [v for v in graph.vertices if v not in hereditary]
    quotient = Graph(
        [*vertices, *primed_vertices.values()],
        [*edges, *primed_plain],
        [*bundles, *primed_bundles],
    )
    logger.debug(
        "Quotient by H=%s S=%s: %r with %d primed vertices",
        sorted(hereditary),
        sorted(pair.breaking),
        quotient,
        len(primed_vertices),
    )
    return QuotientPresentation(graph, pair, quotient, primed_vertices, primed_edges, images)
