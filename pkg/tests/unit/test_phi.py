"""Tests for the quotient map φ and graded membership."""

import random

import pytest

from leavitt.core.exceptions import AmbientMismatchError
from leavitt.core.models.graph import AdmissiblePair
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.algebra.breaking import gap_element
from leavitt.core.services.algebra.phi import apply_phi, graded_membership
from leavitt.core.services.graph.quotient import quotient_graph
from leavitt.core.services.ideals.admissible import admissible_pairs
from tests.factories import random_element, random_graph, random_monomial


class TestToeplitz:
    @pytest.fixture
    def setup(self, toeplitz, rationals):
        return LeavittAlgebra(toeplitz, rationals), quotient_graph(
            toeplitz, AdmissiblePair(frozenset({"w"}))
        )

    def test_edge_into_h_vanishes(self, setup):
        algebra, q = setup
        assert apply_phi(q, algebra.edge("e")).is_zero()
        assert apply_phi(q, algebra.vertex("w")).is_zero()

    def test_loop_survives(self, setup):
        algebra, q = setup
        assert str(apply_phi(q, algebra.edge("f"))) == "f"

    def test_projection_becomes_vertex(self, setup):
        # v − ff* = ee* lies in the ideal of w
        algebra, q = setup
        x = algebra.vertex("v") - algebra.multiply(algebra.edge("f"), algebra.ghost("f"))
        assert graded_membership(q, x)
        assert not graded_membership(q, algebra.vertex("v"))


class TestBreakingVertices:
    def test_unchosen_breaking_vertex_maps_to_its_prime(self, bundle_graph, rationals):
        algebra = LeavittAlgebra(bundle_graph, rationals)
        q = quotient_graph(bundle_graph, AdmissiblePair(frozenset({"h"})))
        x = gap_element(algebra, frozenset({"h"}), "w")
        assert str(apply_phi(q, x)) == "w'"
        assert not graded_membership(q, x)

    def test_chosen_breaking_vertex_is_in_the_kernel(self, bundle_graph, rationals):
        algebra = LeavittAlgebra(bundle_graph, rationals)
        q = quotient_graph(bundle_graph, AdmissiblePair(frozenset({"h"}), frozenset({"w"})))
        assert graded_membership(q, gap_element(algebra, frozenset({"h"}), "w"))

    def test_other_graph_rejected(self, bundle_graph, r1, rationals):
        q = quotient_graph(bundle_graph, AdmissiblePair(frozenset({"h"})))
        with pytest.raises(AmbientMismatchError):
            apply_phi(q, LeavittAlgebra(r1, rationals).vertex("v"))


def _pairs(rng: random.Random, count: int):
    while count > 0:
        graph = random_graph(rng, max_vertices=5, max_edges=7)
        for pair in admissible_pairs(graph):
            yield graph, pair
            count -= 1


def test_phi_is_a_homomorphism(rationals):
    rng = random.Random(51)
    for graph, pair in _pairs(rng, 60):
        algebra = LeavittAlgebra(graph, rationals)
        q = quotient_graph(graph, pair)
        target = LeavittAlgebra(q.graph, rationals)
        for _ in range(3):
            x, y = (random_element(algebra, rng) for _ in range(2))
            assert apply_phi(q, algebra.multiply(x, y)) == target.multiply(
                apply_phi(q, x), apply_phi(q, y)
            )
            assert apply_phi(q, x + y) == apply_phi(q, x) + apply_phi(q, y)
            assert apply_phi(q, algebra.involution(x)) == target.involution(apply_phi(q, x))


def test_ideal_generators_and_their_products_are_in_the_kernel(rationals):
    rng = random.Random(52)
    checked = 0
    for graph, pair in _pairs(rng, 10**6):
        if checked >= 200:
            break
        algebra = LeavittAlgebra(graph, rationals)
        q = quotient_graph(graph, pair)
        gens = [algebra.vertex(v) for v in sorted(pair.hereditary)]
        gens.extend(gap_element(algebra, pair.hereditary, v) for v in sorted(pair.breaking))
        for v in sorted(q.primed_vertices):
            image = apply_phi(q, gap_element(algebra, pair.hereditary, v))
            assert str(image) == q.primed_vertices[v]
        for gen in gens:
            assert graded_membership(q, gen)
            for _ in range(2):
                left = random_monomial(graph, rng)
                right = random_monomial(graph, rng)
                assert graded_membership(q, algebra.sandwich(left, gen, right))
                checked += 1
    assert checked >= 200
