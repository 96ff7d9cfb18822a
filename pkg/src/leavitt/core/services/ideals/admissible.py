"""Enumeration of admissible pairs (H, S), i.e. of the graded ideals."""

import itertools
import logging
from collections import deque

from leavitt.core.config import LeavittConfig
from leavitt.core.exceptions import AdmissibleLimitError
from leavitt.core.models.graph import AdmissiblePair, Graph
from leavitt.core.services.graph.closure import breaking_vertices, hereditary_saturated_closure

logger = logging.getLogger(__name__)


class AdmissiblePairEnumerator:
    def __init__(self, config: LeavittConfig):
        self.vertex_limit = config.admissible_vertex_limit

    def hereditary_saturated_sets(self, graph: Graph) -> list[frozenset[str]]:
        """Every hereditary saturated set, reached from ∅ by adding one vertex
        and closing again."""
        if len(graph.vertices) > self.vertex_limit:
            raise AdmissibleLimitError(len(graph.vertices), self.vertex_limit)
        start = hereditary_saturated_closure(graph, ())
        seen = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for v in graph.vertices:
                if v in current:
                    continue
                grown = hereditary_saturated_closure(graph, current | {v})
                if grown not in seen:
                    seen.add(grown)
                    queue.append(grown)
        return sorted(seen, key=lambda h: (len(h), sorted(h)))

    def enumerate(self, graph: Graph) -> list[AdmissiblePair]:
        pairs = []
        for hereditary in self.hereditary_saturated_sets(graph):
            breaking = sorted(breaking_vertices(graph, hereditary))
            for size in range(len(breaking) + 1):
                pairs.extend(
                    AdmissiblePair(hereditary, frozenset(chosen))
                    for chosen in itertools.combinations(breaking, size)
                )
        pairs.sort(key=AdmissiblePair.sort_key)
        logger.info("Found %d admissible pairs on %r", len(pairs), graph)
        return pairs


def admissible_pairs(graph: Graph, config: LeavittConfig | None = None) -> list[AdmissiblePair]:
    return AdmissiblePairEnumerator(config or LeavittConfig()).enumerate(graph)
