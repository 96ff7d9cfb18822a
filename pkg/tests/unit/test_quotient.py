"""Tests for quotient graphs by admissible pairs."""

import random

import pytest

from leavitt.core.exceptions import NotAdmissibleError, UnknownVertexError
from leavitt.core.models.graph import AdmissiblePair, EdgeSpec
from leavitt.core.services.graph.closure import breaking_vertices
from leavitt.core.services.graph.quotient import check_admissible, quotient_graph
from leavitt.core.services.ideals.admissible import admissible_pairs
from tests.factories import make_graph, random_graph


@pytest.fixture
def bundle_cycle():
    """u -> w -> u with a bundle from w into the sink h."""
    return make_graph(["h", "u", "w"], [("a", "u", "w"), ("c", "w", "u")], [("b", "w", "h")])


class TestQuotientGraph:
    def test_breaking_vertex_outside_s_is_primed(self, bundle_graph):
        q = quotient_graph(bundle_graph, AdmissiblePair(frozenset({"h"})))
        assert q.primed_vertices == {"w": "w'"}
        assert q.graph.vertices == ("u", "w", "w'")
        assert q.graph.is_sink("w'")
        assert q.graph.bundles == ()
        assert q.format_image("w") == "w + w'"
        assert q.format_image("h") == "0"
        assert q.image_of("b[4]") == ()

    def test_breaking_vertex_in_s_is_not_primed(self, bundle_graph):
        q = quotient_graph(bundle_graph, AdmissiblePair(frozenset({"h"}), frozenset({"w"})))
        assert q.primed_vertices == {}
        assert q.graph.vertices == ("u", "w")
        assert q.graph.is_regular("w")

    def test_edges_into_primed_vertices_are_doubled(self, bundle_cycle):
        q = quotient_graph(bundle_cycle, AdmissiblePair(frozenset({"h"})))
        assert q.primed_edges == {"a": "a'"}
        assert q.graph.edge("a'") == EdgeSpec("a'", "u", "w'")
        assert q.image_of("a") == ("a", "a'")
        assert q.image_of("c") == ("c",)

    def test_fresh_names_avoid_existing_primes(self):
        graph = make_graph(["h", "w", "w'"], [("c", "w", "w'")], [("b", "w", "h")])
        q = quotient_graph(graph, AdmissiblePair(frozenset({"h"})))
        assert q.primed_vertices == {"w": "w''"}

    def test_bundle_images_follow_members(self, bundle_loop):
        q = quotient_graph(bundle_loop, AdmissiblePair(frozenset()))
        assert q.graph == bundle_loop
        assert q.image_of("b[2]") == ("b[2]",)

    def test_hereditary_vertices_and_edges_vanish(self, toeplitz):
        q = quotient_graph(toeplitz, AdmissiblePair(frozenset({"w"})))
        assert q.graph.vertices == ("v",)
        assert q.image_of("e") == ()
        assert q.image_of("f") == ("f",)


class TestAdmissibility:
    def test_not_hereditary_saturated(self, line2):
        with pytest.raises(NotAdmissibleError, match="hereditary saturated"):
            quotient_graph(line2, AdmissiblePair(frozenset({"v"})))

    def test_s_outside_breaking_vertices(self, toeplitz):
        with pytest.raises(NotAdmissibleError, match="breaking"):
            quotient_graph(toeplitz, AdmissiblePair(frozenset({"w"}), frozenset({"v"})))

    def test_unknown_vertex(self, toeplitz):
        with pytest.raises(UnknownVertexError):
            quotient_graph(toeplitz, AdmissiblePair(frozenset({"x"})))

    def test_returns_breaking_vertices(self, bundle_graph):
        assert check_admissible(bundle_graph, AdmissiblePair(frozenset({"h"}))) == {"w"}


def test_quotient_vertex_count_on_random_graphs():
    rng = random.Random(31)
    for _ in range(25):
        graph = random_graph(rng, max_vertices=5)
        for pair in admissible_pairs(graph):
            q = quotient_graph(graph, pair)
            primed = breaking_vertices(graph, pair.hereditary) - pair.breaking
            assert len(q.graph.vertices) == len(graph.vertices) - len(pair.hereditary) + len(
                primed
            )
            assert all(q.graph.is_sink(v) for v in q.primed_vertices.values())
