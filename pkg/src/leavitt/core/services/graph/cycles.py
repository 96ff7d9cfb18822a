"""Cycles, exits and Conditions (L) and (K)."""

import itertools
import logging
from collections.abc import Iterable, Sequence

import networkx as nx

from leavitt.core.exceptions import NotACycleError
from leavitt.core.models.graph import Cycle, Graph, Path, bundle_ref, ref_sort_key, split_ref

logger = logging.getLogger(__name__)


def make_cycle(graph: Graph, steps: Sequence[str]) -> Cycle:
    """Validate ``steps`` as a vertex-simple closed path, keeping its rotation."""
    if not steps:
        raise NotACycleError("A cycle needs at least one edge")
    try:
        path = graph.path(steps)
    except Exception as e:
        raise NotACycleError(f"{list(steps)} is not a path: {e}") from e
    if path.end != path.base:
        raise NotACycleError(f"{list(steps)} is not closed")
    sources = [graph.source(step) for step in steps]
    if len(set(sources)) != len(sources):
        raise NotACycleError(f"{list(steps)} passes through a vertex twice")
    return Cycle(path)


def cycle_vertices(graph: Graph, cycle: Cycle) -> tuple[str, ...]:
    return tuple(graph.source(step) for step in cycle.steps)


def rotate_to(graph: Graph, cycle: Cycle, v: str) -> Cycle:
    """The same cycle read from ``v``."""
    sources = cycle_vertices(graph, cycle)
    if v not in sources:
        raise NotACycleError(f"{v!r} is not on the cycle")
    i = sources.index(v)
    steps = cycle.steps[i:] + cycle.steps[:i]
    return Cycle(Path(v, steps, v))


def canonical_rotation(graph: Graph, cycle: Cycle) -> Cycle:
    return rotate_to(graph, cycle, min(cycle_vertices(graph, cycle)))


def _refs_between(graph: Graph, u: str, v: str) -> list[str]:
    refs = [e for e in graph.out_edges(u) if graph.range(e) == v]
    refs.extend(bundle_ref(b, 0) for b in graph.out_bundles(u) if graph.bundle(b).dst == v)
    return refs


def cycles(graph: Graph) -> list[Cycle]:
    """All vertex-simple cycles, once each, in canonical rotation.

    networkx enumerates vertex cycles; each is expanded over the parallel
    edge choices between consecutive vertices, with ``b[0]`` standing for a
    whole bundle.
    """
    found: list[Cycle] = []
    for nodes in nx.simple_cycles(graph.digraph):
        start = nodes.index(min(nodes))
        nodes = nodes[start:] + nodes[:start]
        hops = [_refs_between(graph, u, nodes[(i + 1) % len(nodes)]) for i, u in enumerate(nodes)]
        for steps in itertools.product(*hops):
            found.append(Cycle(Path(nodes[0], tuple(steps), nodes[0])))
    found.sort(key=lambda c: c.path.sort_key())
    logger.debug("Found %d cycles in %r", len(found), graph)
    return found


def cycle_exits(graph: Graph, cycle: Cycle, exclude: Iterable[str] = ()) -> list[str]:
    """Edges leaving a vertex of ``cycle`` that are not its steps and whose
    range is outside ``exclude``. A bundle contributes one member."""
    make_cycle(graph, cycle.steps)
    exclude = frozenset(exclude)
    steps = set(cycle.steps)
    exits: list[str] = []
    for x in cycle_vertices(graph, cycle):
        exits.extend(
            e
            for e in graph.out_edges(x)
            if e not in steps and graph.range(e) not in exclude
        )
        for b in graph.out_bundles(x):
            if graph.bundle(b).dst in exclude:
                continue
            index = 0
            while bundle_ref(b, index) in steps:
                index += 1
            exits.append(bundle_ref(b, index))
    return sorted(exits, key=ref_sort_key)


def cycles_without_exits(graph: Graph) -> list[Cycle]:
    return [c for c in cycles(graph) if not cycle_exits(graph, c)]


def condition_l(graph: Graph) -> tuple[bool, Cycle | None]:
    """Every cycle has an exit; the witness is an exitless cycle."""
    exitless = cycles_without_exits(graph)
    if exitless:
        return False, exitless[0]
    return True, None


def condition_k(graph: Graph) -> tuple[bool, str | None]:
    """No vertex is the base of exactly one simple closed path.

    A vertex v is the base of exactly one simple closed path iff exactly one
    vertex-simple cycle passes through v and no exit of that cycle has a
    range from which v is reachable.
    """
    all_cycles = cycles(graph)
    for v in graph.vertices:
        through = [c for c in all_cycles if v in cycle_vertices(graph, c)]
        if len(through) != 1:
            continue
        exits = cycle_exits(graph, through[0])
        if not any(graph.reaches(graph.range(e), v) for e in exits):
            return False, v
    return True, None


def is_bundle_member(ref: str) -> bool:
    return split_ref(ref)[1] is not None
