"""Reduce structured generators to the canonical (H, S, Y) form."""

import logging

from leavitt.core.constants import TraceAction
from leavitt.core.exceptions import (
    AmbientMismatchError,
    CanonicalFormError,
    GeneratorError,
    NotACycleError,
)
from leavitt.core.models.graph import AdmissiblePair, Graph, split_ref
from leavitt.core.models.ideal import (
    CanonicalIdealForm,
    CyclePolynomial,
    StructuredGeneratorSet,
    TraceStep,
)
from leavitt.core.services.graph.closure import (
    breaking_vertices,
    edges_leaving,
    hereditary_saturated_closure,
)
from leavitt.core.services.graph.cycles import (
    canonical_rotation,
    cycle_exits,
    cycle_vertices,
    make_cycle,
)
from leavitt.core.services.graph.quotient import QuotientPresentation, quotient_graph
from leavitt.core.services.ideals.gcd import poly_gcd_bezout

logger = logging.getLogger(__name__)


def _range_of_name(graph: Graph, name: str) -> str:
    spec = graph.edge(name) or graph.bundle(name)
    if spec is None:
        raise CanonicalFormError(f"Unknown edge {name!r}")
    return spec.dst


class IdealCanonicalizer:
    """Fixpoint loop over one generator set.

    Each round recomputes H from the vertex generators and then applies the
    first rule that changes something: settle breaking generators, absorb
    cycles meeting H, eliminate exits of cycles in the quotient, merge cycle
    polynomials at a common base. Every restart strictly grows H or S, or
    shrinks the list of cycle polynomials.
    """

    def __init__(self, graph: Graph, gens: StructuredGeneratorSet):
        self.graph = graph
        graph.require_vertices(gens.mentioned_vertices())
        fields = {y.poly.field for y in gens.cycle_polys}
        if len(fields) > 1:
            raise AmbientMismatchError("Cycle polynomials over different fields")
        for y in gens.cycle_polys:
            try:
                make_cycle(graph, y.cycle.steps)
            except NotACycleError as e:
                raise GeneratorError(f"Cycle polynomial at {y.base!r}: {e}") from e

        self.vertex_gens: list[str] = list(dict.fromkeys(gens.vertices))
        self.breaking: set[str] = set(gens.breaking)
        self.cycle_polys: list[CyclePolynomial] = list(gens.cycle_polys)
        self.exit_vertices: dict[str, tuple[str, tuple[str, ...]]] = {}
        self.trace: list[TraceStep] = []
        self.round = 0

    # --- bookkeeping ---

    def _log(self, action: str, subject: str, detail: str) -> None:
        step = TraceStep(self.round, action, subject, detail)
        self.trace.append(step)
        logger.debug("Round %d: %s %s (%s)", self.round, action, subject, detail)

    def _add_vertex(self, v: str, detail: str) -> None:
        if v not in self.vertex_gens:
            self.vertex_gens.append(v)
        self._log(TraceAction.VERTEX_ADDED, v, detail)

    def _hereditary(self) -> frozenset[str]:
        return hereditary_saturated_closure(
            self.graph, [*self.vertex_gens, *self.exit_vertices]
        )

    # --- rules ---

    def _settle_breaking(self, hereditary: frozenset[str]) -> bool:
        for v in sorted(self.breaking):
            if v in hereditary:
                self.breaking.discard(v)
                self._log(TraceAction.GENERATOR_DROPPED, v, "breaking vertex lies in H")
            elif not edges_leaving(self.graph, v, hereditary):
                self.breaking.discard(v)
                self._add_vertex(v, "breaking generator degenerates to its vertex")
                return True
        return False

    def _absorb_cycles(self, hereditary: frozenset[str]) -> bool:
        for y in self.cycle_polys:
            if any(x in hereditary for x in cycle_vertices(self.graph, y.cycle)):
                self.cycle_polys.remove(y)
                self._log(TraceAction.GENERATOR_DROPPED, y.base, "cycle meets H")
                self._add_vertex(y.base, "cycle polynomial factors through H")
                return True
        return False

    def _exit_order(self, exits: list[str]) -> list[str]:
        """Exits of one cycle in the order they are eliminated."""
        return exits

    def _eliminate_exits(self, quotient: QuotientPresentation) -> bool:
        primed = {name: original for original, name in quotient.primed_edges.items()}
        for y in sorted(self.cycle_polys, key=CyclePolynomial.sort_key):
            exits = self._exit_order(cycle_exits(quotient.graph, y.cycle))
            if not exits:
                continue
            plain = [e for e in exits if split_ref(e)[0] not in primed]
            if plain:
                e = plain[0]
                w = self.graph.range(e)
                sources = cycle_vertices(self.graph, y.cycle)
                path = y.cycle.steps[: sources.index(self.graph.source(e))] + (e,)
                if w not in self.vertex_gens:
                    self.exit_vertices.setdefault(w, (y.base, path))
                self._log(
                    TraceAction.VERTEX_ADDED, w, f"range of exit {e} of the cycle at {y.base}"
                )
                return True
            # Only primed copies e' of cycle steps e leave the cycle: r(e)^H ∈ I
            w = _range_of_name(self.graph, primed[split_ref(exits[0])[0]])
            self.breaking.add(w)
            self._log(
                TraceAction.BREAKING_ADDED, w, f"primed exit {exits[0]} of the cycle at {y.base}"
            )
            return True
        return False

    def _merge(self) -> bool:
        # Polynomials on one cycle merge even when read from different bases
        groups: dict[tuple[str, ...], list[CyclePolynomial]] = {}
        for y in self.cycle_polys:
            groups.setdefault(canonical_rotation(self.graph, y.cycle).steps, []).append(y)
        seen: dict[str, tuple[str, ...]] = {}
        for key, group in groups.items():
            for y in group:
                if seen.setdefault(y.base, key) != key:
                    raise CanonicalFormError(f"Two distinct exitless cycles based at {y.base!r}")

        for key, group in groups.items():
            if len(group) < 2:
                continue
            first = group[0]
            d = first.poly
            for y in group[1:]:
                previous = d
                d, _, _ = poly_gcd_bezout(d, y.poly)
                self._log(
                    TraceAction.GCD_MERGE, first.base, f"gcd({previous}, {y.poly}) = {d}"
                )
            self.cycle_polys = [
                y
                for y in self.cycle_polys
                if canonical_rotation(self.graph, y.cycle).steps != key
            ]
            if d.is_constant():
                self._add_vertex(first.base, "cycle polynomials have unit gcd")
                return True
            self.cycle_polys.append(first.with_poly(d))
        return False

    # --- driver ---

    def run(self) -> CanonicalIdealForm:
        while True:
            self.round += 1
            hereditary = self._hereditary()
            if self._settle_breaking(hereditary) or self._absorb_cycles(hereditary):
                continue
            # Breaking generators not yet breaking for this H wait for a larger H
            live = frozenset(self.breaking) & breaking_vertices(self.graph, hereditary)
            if self._eliminate_exits(quotient_graph(self.graph, AdmissiblePair(hereditary, live))):
                continue
            if self._merge():
                continue
            break
        return self._finish(hereditary)

    def _finish(self, hereditary: frozenset[str]) -> CanonicalIdealForm:
        invalid = sorted(self.breaking - breaking_vertices(self.graph, hereditary))
        if invalid:
            raise GeneratorError(f"{invalid[0]!r} is not a breaking vertex of the final H")

        # Exit vertices whose cycle polynomial did not survive become vertex
        # generators unless the other vertex generators already reach them
        surviving = {y.base for y in self.cycle_polys}
        exit_vertices = {}
        for w, (base, path) in sorted(self.exit_vertices.items()):
            if w in self.vertex_gens:
                continue
            if base in surviving:
                exit_vertices[w] = (base, path)
            elif w not in hereditary_saturated_closure(self.graph, self.vertex_gens):
                self.vertex_gens.append(w)

        form = CanonicalIdealForm(
            hereditary=hereditary,
            vertex_gens=tuple(sorted(self.vertex_gens)),
            breaking=frozenset(self.breaking),
            cycle_polys=tuple(sorted(self.cycle_polys, key=CyclePolynomial.sort_key)),
            exit_vertices=exit_vertices,
            trace=tuple(self.trace),
        )
        logger.info(
            "Canonical form after %d rounds: |H|=%d, |S|=%d, |Y|=%d",
            self.round,
            len(form.hereditary),
            len(form.breaking),
            len(form.cycle_polys),
        )
        return form


def canonicalize(graph: Graph, gens: StructuredGeneratorSet) -> CanonicalIdealForm:
    return IdealCanonicalizer(graph, gens).run()
