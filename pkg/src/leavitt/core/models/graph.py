"""Finitely presented directed graphs with ω-bundles.

Vertices and edges are identified by name. An ω-bundle ``b`` stands for the
countable family of parallel edges ``b[0], b[1], ...`` sharing one source and
one range; it is how infinite emitters are presented.
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx

from leavitt.core.constants import VertexKind
from leavitt.core.exceptions import MalformedMonomialError, UnknownVertexError

_BUNDLE_REF = re.compile(r"^(?P<name>[^\[\]]+)\[(?P<index>\d+)\]$")


def split_ref(ref: str) -> tuple[str, int | None]:
    """Split ``b[3]`` into ``("b", 3)``; ordinary names give ``(name, None)``."""
    match = _BUNDLE_REF.match(ref)
    if match is None:
        return ref, None
    return match.group("name"), int(match.group("index"))


def bundle_ref(name: str, index: int) -> str:
    return f"{name}[{index}]"


def ref_sort_key(ref: str) -> tuple[str, int]:
    name, index = split_ref(ref)
    return name, -1 if index is None else index


@dataclass(frozen=True)
class EdgeSpec:
    name: str
    src: str
    dst: str


class Path(NamedTuple):
    """A path ``steps`` from ``base`` to ``end``; length 0 paths are vertices."""

    base: str
    steps: tuple[str, ...]
    end: str

    @property
    def length(self) -> int:
        return len(self.steps)

    def sort_key(self) -> tuple[tuple[str, int], ...]:
        return tuple(ref_sort_key(step) for step in self.steps)


@dataclass(frozen=True)
class Cycle:
    """A vertex-simple closed path read from its base vertex."""

    path: Path

    @property
    def base(self) -> str:
        return self.path.base

    @property
    def steps(self) -> tuple[str, ...]:
        return self.path.steps

    def __len__(self) -> int:
        return len(self.path.steps)


@dataclass(frozen=True)
class AdmissiblePair:
    """A hereditary saturated set together with chosen breaking vertices."""

    hereditary: frozenset[str]
    breaking: frozenset[str] = frozenset()

    def sort_key(self) -> tuple[int, tuple[str, ...], int, tuple[str, ...]]:
        return (
            len(self.hereditary),
            tuple(sorted(self.hereditary)),
            len(self.breaking),
            tuple(sorted(self.breaking)),
        )


class Graph:
    """Immutable graph; build it through ``validate_graph`` for checked input."""

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[EdgeSpec] = (),
        bundles: Iterable[EdgeSpec] = (),
    ):
        self.vertices: tuple[str, ...] = tuple(sorted(set(vertices)))
        self.edges: tuple[EdgeSpec, ...] = tuple(edges)
        self.bundles: tuple[EdgeSpec, ...] = tuple(bundles)
        self._vertex_set = frozenset(self.vertices)
        self._edges = {e.name: e for e in self.edges}
        self._bundles = {b.name: b for b in self.bundles}

        out_edges: dict[str, list[str]] = {v: [] for v in self.vertices}
        out_bundles: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out_edges[e.src].append(e.name)
        for b in self.bundles:
            out_bundles[b.src].append(b.name)
        self._out_edges = {v: tuple(sorted(names)) for v, names in out_edges.items()}
        self._out_bundles = {v: tuple(sorted(names)) for v, names in out_bundles.items()}

        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.vertices)
        digraph.add_edges_from((e.src, e.dst) for e in (*self.edges, *self.bundles))
        self._digraph = nx.freeze(digraph)
        self._identity = (self._vertex_set, frozenset(self.edges), frozenset(self.bundles))
        self._hash = hash(self._identity)

    # --- identity ---

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return isinstance(other, Graph) and self._identity == other._identity

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (
            f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges, "
            f"{len(self.bundles)} bundles)"
        )

    # --- lookups ---

    @property
    def digraph(self) -> nx.DiGraph:
        """Underlying vertex reachability graph (frozen)."""
        return self._digraph

    @property
    def names(self) -> frozenset[str]:
        return self._vertex_set.union(self._edges, self._bundles)

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    def require_vertices(self, vertices: Iterable[str]) -> frozenset[str]:
        result = frozenset(vertices)
        unknown = sorted(result - self._vertex_set)
        if unknown:
            raise UnknownVertexError(unknown[0])
        return result

    def edge(self, name: str) -> EdgeSpec | None:
        return self._edges.get(name)

    def bundle(self, name: str) -> EdgeSpec | None:
        return self._bundles.get(name)

    def has_ref(self, ref: str) -> bool:
        name, index = split_ref(ref)
        if index is None:
            return name in self._edges
        return name in self._bundles

    def _spec(self, ref: str) -> EdgeSpec:
        name, index = split_ref(ref)
        spec = self._edges.get(name) if index is None else self._bundles.get(name)
        if spec is None:
            raise MalformedMonomialError(f"Unknown edge reference {ref!r}")
        return spec

    def source(self, ref: str) -> str:
        return self._spec(ref).src

    def range(self, ref: str) -> str:
        return self._spec(ref).dst

    def out_edges(self, v: str) -> tuple[str, ...]:
        """Names of ordinary edges leaving ``v``, sorted."""
        return self._out_edges[v]

    def out_bundles(self, v: str) -> tuple[str, ...]:
        return self._out_bundles[v]

    # --- classification ---

    def kind(self, v: str) -> str:
        if v not in self._vertex_set:
            raise UnknownVertexError(v)
        if self._out_bundles[v]:
            return VertexKind.INFINITE_EMITTER
        if self._out_edges[v]:
            return VertexKind.REGULAR
        return VertexKind.SINK

    def is_regular(self, v: str) -> bool:
        return bool(self._out_edges[v]) and not self._out_bundles[v]

    def is_sink(self, v: str) -> bool:
        return not self._out_edges[v] and not self._out_bundles[v]

    def is_infinite_emitter(self, v: str) -> bool:
        return bool(self._out_bundles[v])

    def designated_edge(self, v: str) -> str | None:
        """Smallest out-edge name of a regular vertex; None elsewhere."""
        if not self.is_regular(v):
            return None
        return self._out_edges[v][0]

    def classification(self) -> dict[str, str]:
        return {v: self.kind(v) for v in self.vertices}

    # --- reachability ---

    def descendants(self, vertices: Iterable[str]) -> frozenset[str]:
        """All vertices reachable from ``vertices``, including themselves."""
        reached: set[str] = set()
        for v in vertices:
            if v not in reached:
                reached.add(v)
                reached |= nx.descendants(self._digraph, v)
        return frozenset(reached)

    def reaches(self, u: str, v: str) -> bool:
        return u == v or nx.has_path(self._digraph, u, v)

    # --- paths ---

    def vertex_path(self, v: str) -> Path:
        if v not in self._vertex_set:
            raise UnknownVertexError(v)
        return Path(v, (), v)

    def path(self, steps: Iterable[str], base: str | None = None) -> Path:
        """Build a path from edge references, checking composability."""
        steps = tuple(steps)
        if not steps:
            if base is None:
                raise MalformedMonomialError("A length-0 path needs its base vertex")
            return self.vertex_path(base)
        start = self.source(steps[0])
        if base is not None and base != start:
            raise MalformedMonomialError(f"Path {steps} does not start at {base!r}")
        current = start
        for step in steps:
            if self.source(step) != current:
                raise MalformedMonomialError(f"Step {step!r} does not leave {current!r}")
            current = self.range(step)
        return Path(start, steps, current)

    def extend(self, path: Path, steps: Iterable[str]) -> Path:
        """Append composable steps to ``path``."""
        end = path.end
        added = tuple(steps)
        for step in added:
            end = self.range(step)
        return Path(path.base, path.steps + added, end)
