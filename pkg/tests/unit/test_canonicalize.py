"""Tests for the canonical (H, S, Y) form of structured generator sets."""

import random

import pytest

from leavitt.core.constants import TraceAction
from leavitt.core.exceptions import (
    AmbientMismatchError,
    GeneratorError,
    LeavittError,
    UnknownVertexError,
)
from leavitt.core.models.field import ScalarField
from leavitt.core.models.graph import Graph
from leavitt.core.models.ideal import CyclePolynomial, StructuredGeneratorSet
from leavitt.core.models.polynomial import polynomial
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.algebra.phi import graded_membership
from leavitt.core.services.graph.cycles import condition_k, condition_l, cycles, make_cycle
from leavitt.core.services.graph.quotient import quotient_graph
from leavitt.core.services.ideals.canonicalizer import IdealCanonicalizer, canonicalize
from tests.factories import make_graph, random_graph


def _cycle_poly(graph: Graph, steps: list[str], coefficients: list[int], field=None):
    field = field or ScalarField.rationals()
    cycle = make_cycle(graph, steps)
    return CyclePolynomial(cycle.base, cycle, polynomial(field, coefficients))


def _summary(form):
    return (
        form.hereditary,
        form.breaking,
        tuple((y.base, y.cycle.steps, y.poly) for y in form.cycle_polys),
    )


class TestCanonicalForms:
    def test_gcd_merge_on_r1(self, r1, rationals):
        gens = StructuredGeneratorSet(
            cycle_polys=(_cycle_poly(r1, ["g"], [1, 2, 1]), _cycle_poly(r1, ["g"], [1, 1]))
        )
        form = canonicalize(r1, gens)
        assert form.hereditary == frozenset()
        assert form.vertex_gens == ()
        assert [(y.base, y.cycle.steps, y.poly) for y in form.cycle_polys] == [
            ("v", ("g",), polynomial(rationals, [1, 1]))
        ]
        assert [step.action for step in form.trace] == [TraceAction.GCD_MERGE]

    def test_unit_gcd_adds_the_base(self, r1):
        gens = StructuredGeneratorSet(
            cycle_polys=(_cycle_poly(r1, ["g"], [1, 1]), _cycle_poly(r1, ["g"], [1, 3]))
        )
        form = canonicalize(r1, gens)
        assert form.hereditary == {"v"}
        assert form.vertex_gens == ("v",)
        assert form.cycle_polys == ()
        assert form.is_graded()

    def test_exit_range_joins_h(self, toeplitz, rationals):
        form = canonicalize(
            toeplitz, StructuredGeneratorSet(cycle_polys=(_cycle_poly(toeplitz, ["f"], [1, 1]),))
        )
        assert form.hereditary == {"w"}
        assert form.vertex_gens == ()
        assert form.exit_vertices == {"w": ("v", ("e",))}
        assert [(y.base, y.poly) for y in form.cycle_polys] == [
            ("v", polynomial(rationals, [1, 1]))
        ]
        assert form.trace[0].action == TraceAction.VERTEX_ADDED
        assert form.trace[0].subject == "w"

    def test_breaking_generator_on_bundle_loop(self, bundle_loop):
        gens = StructuredGeneratorSet(
            breaking=("v",), cycle_polys=(_cycle_poly(bundle_loop, ["g"], [1, 1]),)
        )
        form = canonicalize(bundle_loop, gens)
        assert form.hereditary == {"h"}
        assert form.breaking == {"v"}
        assert form.vertex_gens == ()
        assert form.exit_vertices == {"h": ("v", ("b[0]",))}
        assert [y.base for y in form.cycle_polys] == ["v"]

    def test_cycle_with_returning_exit_is_absorbed(self, rose2):
        form = canonicalize(
            rose2, StructuredGeneratorSet(cycle_polys=(_cycle_poly(rose2, ["e"], [1, 1]),))
        )
        assert form.hereditary == {"v"}
        assert form.vertex_gens == ("v",)
        assert form.cycle_polys == ()
        assert form.exit_vertices == {}

    def test_vertex_generators_only(self, line2):
        form = canonicalize(line2, StructuredGeneratorSet(vertices=("v",)))
        assert form.hereditary == {"u", "v"}
        assert form.vertex_gens == ("v",)
        assert form.trace == ()

    def test_breaking_generator_in_h_is_dropped(self, bundle_graph):
        form = canonicalize(
            bundle_graph, StructuredGeneratorSet(vertices=("h", "u"), breaking=("w",))
        )
        assert form.breaking == frozenset()
        assert form.vertex_gens == ("h", "u", "w")
        assert form.trace[0].action == TraceAction.VERTEX_ADDED

    def test_breaking_generator_kept(self, bundle_graph):
        form = canonicalize(bundle_graph, StructuredGeneratorSet(vertices=("h",), breaking=("w",)))
        assert form.hereditary == {"h"}
        assert form.breaking == {"w"}

    def test_rotations_of_one_cycle_merge(self, rationals):
        graph = make_graph(["a", "b"], [("x", "a", "b"), ("y", "b", "a")])
        from_a = _cycle_poly(graph, ["x", "y"], [1, 2, 1])
        from_b = CyclePolynomial(
            "b", make_cycle(graph, ["y", "x"]), polynomial(rationals, [1, 1])
        )
        form = canonicalize(graph, StructuredGeneratorSet(cycle_polys=(from_a, from_b)))
        assert [(y.base, y.cycle.steps, y.poly) for y in form.cycle_polys] == [
            ("a", ("x", "y"), polynomial(rationals, [1, 1]))
        ]

    def test_primed_exit_adds_a_breaking_generator(self):
        # Modulo h the cycle u -> w -> u leaves only through the primed copy of a
        graph = make_graph(["h", "u", "w"], [("a", "u", "w"), ("c", "w", "u")], [("b", "w", "h")])
        gens = StructuredGeneratorSet(
            vertices=("h",), cycle_polys=(_cycle_poly(graph, ["a", "c"], [1, 1]),)
        )
        form = canonicalize(graph, gens)
        assert form.hereditary == {"h"}
        assert form.breaking == {"w"}
        assert [(y.base, y.cycle.steps) for y in form.cycle_polys] == [("u", ("a", "c"))]
        added = [step for step in form.trace if step.action == TraceAction.BREAKING_ADDED]
        assert [step.subject for step in added] == ["w"]
        assert "a'" in added[0].detail


class TestIdempotence:
    @pytest.mark.parametrize(
        ("fixture", "gens"),
        [
            ("toeplitz", lambda g: StructuredGeneratorSet(cycle_polys=(_cycle_poly(g, ["f"], [1, 1]),))),
            ("r1", lambda g: StructuredGeneratorSet(cycle_polys=(_cycle_poly(g, ["g"], [1, 0, 1]),))),
            (
                "bundle_loop",
                lambda g: StructuredGeneratorSet(
                    breaking=("v",), cycle_polys=(_cycle_poly(g, ["g"], [1, 1]),)
                ),
            ),
            ("bundle_graph", lambda g: StructuredGeneratorSet(vertices=("h",), breaking=("w",))),
        ],
    )
    def test_generator_reading_is_a_fixpoint(self, request, fixture, gens):
        graph = request.getfixturevalue(fixture)
        form = canonicalize(graph, gens(graph))
        again = canonicalize(graph, form.generator_reading())
        assert _summary(again) == _summary(form)


class TestErrors:
    def test_unknown_vertex(self, toeplitz):
        with pytest.raises(UnknownVertexError):
            canonicalize(toeplitz, StructuredGeneratorSet(vertices=("x",)))

    def test_breaking_generator_never_breaking(self, toeplitz):
        with pytest.raises(GeneratorError):
            canonicalize(toeplitz, StructuredGeneratorSet(breaking=("v",)))

    def test_mixed_fields(self, r1):
        gens = StructuredGeneratorSet(
            cycle_polys=(
                _cycle_poly(r1, ["g"], [1, 1]),
                _cycle_poly(r1, ["g"], [1, 1], ScalarField.prime(5)),
            )
        )
        with pytest.raises(AmbientMismatchError):
            canonicalize(r1, gens)

    def test_polynomial_needs_unit_constant(self, r1):
        with pytest.raises(GeneratorError):
            _cycle_poly(r1, ["g"], [2, 1])

    def test_polynomial_needs_positive_degree(self, r1):
        with pytest.raises(GeneratorError):
            _cycle_poly(r1, ["g"], [1])

    def test_cycle_must_start_at_base(self):
        graph = make_graph(["a", "b"], [("x", "a", "b"), ("y", "b", "a")])
        with pytest.raises(GeneratorError):
            CyclePolynomial(
                "b", make_cycle(graph, ["x", "y"]), polynomial(ScalarField.rationals(), [1, 1])
            )


def _random_cycle_inputs(rng: random.Random, graph: Graph) -> StructuredGeneratorSet:
    chosen = rng.sample(cycles(graph), rng.randint(1, min(2, len(cycles(graph)))))
    return StructuredGeneratorSet(
        cycle_polys=tuple(
            _cycle_poly(graph, list(c.steps), [1, rng.choice([-2, -1, 1, 2]), rng.randint(0, 1)])
            for c in chosen
        )
    )


def test_condition_l_forces_a_nonempty_h():
    rng = random.Random(71)
    seen = 0
    while seen < 25:
        graph = random_graph(rng, max_vertices=5, max_edges=8)
        if not cycles(graph) or not condition_l(graph)[0]:
            continue
        form = canonicalize(graph, _random_cycle_inputs(rng, graph))
        assert form.hereditary
        seen += 1


def test_condition_k_leaves_a_graded_ideal(rationals):
    rng = random.Random(72)
    seen = 0
    while seen < 25:
        graph = random_graph(rng, max_vertices=5, max_edges=8, bundles=False)
        if not cycles(graph) or not condition_k(graph)[0]:
            continue
        gens = _random_cycle_inputs(rng, graph)
        form = canonicalize(graph, gens)
        assert form.is_graded()
        algebra = LeavittAlgebra(graph, rationals)
        q = quotient_graph(graph, form.pair)
        assert all(graded_membership(q, y.element(algebra)) for y in gens.cycle_polys)
        seen += 1


class _ReversedExits(IdealCanonicalizer):
    def _exit_order(self, exits):
        return exits[::-1]


def _shuffled_exits(seed: int) -> type[IdealCanonicalizer]:
    rng = random.Random(seed)

    class ShuffledExits(IdealCanonicalizer):
        def _exit_order(self, exits):
            exits = list(exits)
            rng.shuffle(exits)
            return exits

    return ShuffledExits


def _outcome(canonicalizer: type[IdealCanonicalizer], graph: Graph, gens):
    try:
        return _summary(canonicalizer(graph, gens).run())
    except LeavittError as e:
        return type(e)


def _fan() -> Graph:
    """A loop f at v with exits into two sinks."""
    return make_graph(["a", "b", "v"], [("f", "v", "v"), ("e1", "v", "a"), ("e2", "v", "b")])


def _theta() -> Graph:
    """A two-cycle u <-> v, a loop l at v and an exit e into the sink s."""
    return make_graph(
        ["s", "u", "v"],
        [("x", "u", "v"), ("y", "v", "u"), ("l", "v", "v"), ("e", "v", "s")],
    )


class TestExitOrder:
    @pytest.mark.parametrize(
        ("graph", "gens"),
        [
            (_fan, lambda g: StructuredGeneratorSet(cycle_polys=(_cycle_poly(g, ["f"], [1, 1]),))),
            (_theta, lambda g: StructuredGeneratorSet(cycle_polys=(_cycle_poly(g, ["x", "y"], [1, 2]),))),
            (
                _theta,
                lambda g: StructuredGeneratorSet(
                    cycle_polys=(_cycle_poly(g, ["l"], [1, 1]), _cycle_poly(g, ["x", "y"], [1, -1]))
                ),
            ),
        ],
    )
    def test_built_graphs(self, graph, gens):
        g = graph()
        expected = _outcome(IdealCanonicalizer, g, gens(g))
        assert _outcome(_ReversedExits, g, gens(g)) == expected
        assert _outcome(_shuffled_exits(5), g, gens(g)) == expected

    @pytest.mark.parametrize(
        ("fixture", "gens"),
        [
            ("toeplitz", lambda g: StructuredGeneratorSet(cycle_polys=(_cycle_poly(g, ["f"], [1, 1]),))),
            ("rose2", lambda g: StructuredGeneratorSet(cycle_polys=(_cycle_poly(g, ["e"], [1, 1]),))),
            (
                "bundle_loop",
                lambda g: StructuredGeneratorSet(
                    breaking=("v",), cycle_polys=(_cycle_poly(g, ["g"], [1, 1]),)
                ),
            ),
            ("bundle_loop", lambda g: StructuredGeneratorSet(cycle_polys=(_cycle_poly(g, ["g"], [1, 1]),))),
        ],
    )
    def test_fixtures(self, request, fixture, gens):
        graph = request.getfixturevalue(fixture)
        expected = _outcome(IdealCanonicalizer, graph, gens(graph))
        assert _outcome(_ReversedExits, graph, gens(graph)) == expected
        assert _outcome(_shuffled_exits(6), graph, gens(graph)) == expected

    def test_random_graphs(self):
        rng = random.Random(73)
        shuffled = _shuffled_exits(74)
        seen = 0
        while seen < 60:
            graph = random_graph(rng, max_vertices=5, max_edges=8)
            if not cycles(graph):
                continue
            gens = _random_cycle_inputs(rng, graph)
            expected = _outcome(IdealCanonicalizer, graph, gens)
            assert _outcome(_ReversedExits, graph, gens) == expected
            assert _outcome(shuffled, graph, gens) == expected
            seen += 1
