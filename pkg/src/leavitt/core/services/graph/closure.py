"""Hereditary saturated closures and breaking vertices."""

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from leavitt.core.constants import DerivationRule
from leavitt.core.exceptions import NotHereditarySaturatedError
from leavitt.core.models.graph import Graph, bundle_ref

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Derivation:
    """How a vertex entered a closure.

    ``hereditary``: ``edges`` holds the single edge whose source entered earlier.
    ``saturated``: ``edges`` holds every out-edge; all their ranges entered earlier.
    """

    vertex: str
    rule: str
    edges: tuple[str, ...] = ()


def _exits_of(graph: Graph, v: str) -> list[str]:
    """Ordinary out-edges plus one representative member per out-bundle."""
    return [*graph.out_edges(v), *(bundle_ref(b, 0) for b in graph.out_bundles(v))]


def closure_derivation(graph: Graph, seed: Iterable[str]) -> dict[str, Derivation]:
    """Smallest hereditary saturated superset of ``seed``, in order of entry."""
    derivations: dict[str, Derivation] = {}
    queue: deque[str] = deque()
    for v in sorted(graph.require_vertices(seed)):
        derivations[v] = Derivation(v, DerivationRule.SEED)
        queue.append(v)

    while True:
        while queue:
            u = queue.popleft()
            for ref in _exits_of(graph, u):
                w = graph.range(ref)
                if w not in derivations:
                    derivations[w] = Derivation(w, DerivationRule.HEREDITARY, (ref,))
                    queue.append(w)

        # Saturation only fires at regular vertices
        saturated = [
            v
            for v in graph.vertices
            if v not in derivations
            and graph.is_regular(v)
            and all(graph.range(e) in derivations for e in graph.out_edges(v))
        ]
        if not saturated:
            return derivations
        for v in saturated:
            derivations[v] = Derivation(v, DerivationRule.SATURATED, graph.out_edges(v))
            queue.append(v)


def hereditary_saturated_closure(graph: Graph, seed: Iterable[str]) -> frozenset[str]:
    seed = frozenset(seed)
    closure = frozenset(closure_derivation(graph, seed))
    logger.debug("Closure of %d seed vertices has %d vertices", len(seed), len(closure))
    return closure


def is_hereditary_saturated(graph: Graph, vertices: Iterable[str]) -> bool:
    vertices = frozenset(vertices)
    return hereditary_saturated_closure(graph, vertices) == vertices


def breaking_vertices(graph: Graph, hereditary: Iterable[str]) -> frozenset[str]:
    """B_H: infinite emitters outside H sending all bundles into H and
    finitely many, at least one, ordinary edges out of H."""
    hereditary = frozenset(hereditary)
    if not is_hereditary_saturated(graph, hereditary):
        raise NotHereditarySaturatedError(f"{sorted(hereditary)} is not hereditary saturated")
    return frozenset(
        w
        for w in graph.vertices
        if w not in hereditary
        and graph.is_infinite_emitter(w)
        and all(graph.range(bundle_ref(b, 0)) in hereditary for b in graph.out_bundles(w))
        and any(graph.range(e) not in hereditary for e in graph.out_edges(w))
    )


def edges_leaving(graph: Graph, v: str, hereditary: frozenset[str]) -> tuple[str, ...]:
    """Ordinary out-edges of ``v`` whose range lies outside ``hereditary``."""
    return tuple(e for e in graph.out_edges(v) if graph.range(e) not in hereditary)
