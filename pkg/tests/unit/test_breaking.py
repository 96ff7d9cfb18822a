"""Tests for the breaking-vertex idempotents v^H."""

import pytest

from leavitt.core.exceptions import NotBreakingVertexError, UnknownVertexError
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.algebra.breaking import breaking_element, gap_element


class TestBreakingElement:
    def test_bundle_graph(self, bundle_graph, rationals):
        algebra = LeavittAlgebra(bundle_graph, rationals)
        assert str(breaking_element(algebra, {"h"}, "w")) == "w - c.c*"

    def test_is_idempotent(self, bundle_graph, rationals):
        algebra = LeavittAlgebra(bundle_graph, rationals)
        x = breaking_element(algebra, {"h"}, "w")
        assert algebra.multiply(x, x) == x
        assert algebra.involution(x) == x

    def test_bundle_loop(self, bundle_loop, rationals):
        algebra = LeavittAlgebra(bundle_loop, rationals)
        assert str(breaking_element(algebra, {"h"}, "v")) == "v - g.g*"

    def test_rejects_non_breaking_vertex(self, bundle_graph, rationals):
        algebra = LeavittAlgebra(bundle_graph, rationals)
        with pytest.raises(NotBreakingVertexError):
            breaking_element(algebra, {"h", "u"}, "w")

    def test_rejects_unknown_vertex(self, bundle_graph, rationals):
        algebra = LeavittAlgebra(bundle_graph, rationals)
        with pytest.raises(UnknownVertexError):
            breaking_element(algebra, {"h"}, "x")


class TestGapElement:
    def test_vertex_with_every_edge_in_h_is_itself(self, bundle_graph, rationals):
        algebra = LeavittAlgebra(bundle_graph, rationals)
        assert gap_element(algebra, frozenset({"h", "u"}), "w") == algebra.vertex("w")

    def test_regular_vertex_gap_vanishes(self, toeplitz, rationals):
        # v − ee* − ff* = 0 at a regular vertex
        algebra = LeavittAlgebra(toeplitz, rationals)
        assert gap_element(algebra, frozenset(), "v").is_zero()
