"""Tests for hereditary saturated closures and breaking vertices."""

import itertools
import random

import pytest

from leavitt.core.constants import DerivationRule
from leavitt.core.exceptions import NotHereditarySaturatedError, UnknownVertexError
from leavitt.core.models.graph import Graph
from leavitt.core.services.graph.closure import (
    breaking_vertices,
    closure_derivation,
    hereditary_saturated_closure,
    is_hereditary_saturated,
)
from tests.factories import make_graph, random_graph


def _is_hereditary(graph: Graph, vertices: frozenset[str]) -> bool:
    return all(
        graph.range(e) in vertices for v in vertices for e in graph.out_edges(v)
    ) and all(graph.bundle(b).dst in vertices for v in vertices for b in graph.out_bundles(v))


def _is_saturated(graph: Graph, vertices: frozenset[str]) -> bool:
    return all(
        v in vertices
        for v in graph.vertices
        if graph.is_regular(v) and all(graph.range(e) in vertices for e in graph.out_edges(v))
    )


def _brute_force_closure(graph: Graph, seed: frozenset[str]) -> frozenset[str]:
    """Intersection of every hereditary saturated superset of the seed."""
    result = frozenset(graph.vertices)
    for size in range(len(graph.vertices) + 1):
        for subset in itertools.combinations(graph.vertices, size):
            candidate = frozenset(subset)
            if (
                seed <= candidate
                and _is_hereditary(graph, candidate)
                and _is_saturated(graph, candidate)
            ):
                result &= candidate
    return result


class TestClosure:
    def test_sink_seed_in_toeplitz(self, toeplitz):
        assert hereditary_saturated_closure(toeplitz, ["w"]) == {"w"}

    def test_loop_vertex_pulls_in_its_descendants(self, toeplitz):
        assert hereditary_saturated_closure(toeplitz, ["v"]) == {"v", "w"}

    def test_saturation_climbs_the_line(self, line2):
        assert hereditary_saturated_closure(line2, ["v"]) == {"u", "v"}

    def test_empty_seed_in_r1(self, r1):
        assert hereditary_saturated_closure(r1, []) == frozenset()

    def test_infinite_emitters_are_never_saturated(self, bundle_graph):
        assert hereditary_saturated_closure(bundle_graph, ["h", "u"]) == {"h", "u"}

    def test_sinks_enter_only_as_seeds(self):
        graph = make_graph(["s", "t"])
        assert hereditary_saturated_closure(graph, []) == frozenset()

    def test_unknown_seed(self, toeplitz):
        with pytest.raises(UnknownVertexError):
            hereditary_saturated_closure(toeplitz, ["x"])

    def test_matches_brute_force_on_random_graphs(self):
        rng = random.Random(11)
        for _ in range(60):
            graph = random_graph(rng, max_vertices=6)
            seed = frozenset(rng.sample(graph.vertices, rng.randint(0, len(graph.vertices))))
            assert hereditary_saturated_closure(graph, seed) == _brute_force_closure(graph, seed)

    def test_closure_is_hereditary_saturated(self):
        rng = random.Random(12)
        for _ in range(40):
            graph = random_graph(rng, max_vertices=7)
            seed = rng.sample(graph.vertices, 1)
            closure = hereditary_saturated_closure(graph, seed)
            assert is_hereditary_saturated(graph, closure)
            assert _is_hereditary(graph, closure)
            assert _is_saturated(graph, closure)


class TestDerivation:
    def test_rules_on_the_line(self, line2):
        derivation = closure_derivation(line2, ["v"])
        assert derivation["v"].rule == DerivationRule.SEED
        assert derivation["u"].rule == DerivationRule.SATURATED
        assert derivation["u"].edges == ("e",)

    def test_hereditary_step_names_its_edge(self, toeplitz):
        derivation = closure_derivation(toeplitz, ["v"])
        assert derivation["w"].rule == DerivationRule.HEREDITARY
        assert derivation["w"].edges == ("e",)

    def test_bundle_step_uses_a_member(self, bundle_graph):
        derivation = closure_derivation(bundle_graph, ["w"])
        assert derivation["h"].edges == ("b[0]",)

    def test_entry_order_respects_dependencies(self):
        rng = random.Random(13)
        for _ in range(30):
            graph = random_graph(rng)
            derivation = closure_derivation(graph, rng.sample(graph.vertices, 1))
            order = list(derivation)
            for position, (vertex, step) in enumerate(derivation.items()):
                earlier = set(order[:position])
                if step.rule == DerivationRule.HEREDITARY:
                    assert graph.source(step.edges[0]) in earlier
                elif step.rule == DerivationRule.SATURATED:
                    assert all(graph.range(e) in earlier for e in step.edges)
                    assert set(step.edges) == set(graph.out_edges(vertex))


class TestBreakingVertices:
    def test_bundle_graph(self, bundle_graph):
        assert breaking_vertices(bundle_graph, ["h"]) == {"w"}

    def test_no_breaking_once_every_edge_lands_in_h(self, bundle_graph):
        assert breaking_vertices(bundle_graph, ["h", "u"]) == frozenset()

    def test_empty_hereditary_set(self, bundle_graph):
        assert breaking_vertices(bundle_graph, []) == frozenset()

    def test_bundle_loop(self, bundle_loop):
        assert breaking_vertices(bundle_loop, ["h"]) == {"v"}

    def test_requires_hereditary_saturated(self, line2):
        with pytest.raises(NotHereditarySaturatedError):
            breaking_vertices(line2, ["v"])

    def test_graphs_without_bundles_have_none(self):
        rng = random.Random(13)
        for _ in range(60):
            graph = random_graph(rng, max_vertices=5, max_edges=8, bundles=False)
            for size in range(len(graph.vertices) + 1):
                for subset in itertools.combinations(graph.vertices, size):
                    if is_hereditary_saturated(graph, subset):
                        assert breaking_vertices(graph, subset) == frozenset()
