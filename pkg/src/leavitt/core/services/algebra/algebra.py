"""Arithmetic in L_K(E): normal form, products and the involution."""

import logging
from collections.abc import Iterable, Sequence

from leavitt.core.exceptions import AmbientMismatchError, MalformedMonomialError
from leavitt.core.models.element import Element, Monomial, vertex_monomial
from leavitt.core.models.field import Scalar, ScalarField
from leavitt.core.models.graph import Cycle, Graph, Path

logger = logging.getLogger(__name__)


class LeavittAlgebra:
    """The Leavitt path algebra of one graph over one field.

    Every element this class returns is in normal form: no monomial αβ* has
    α and β ending in the same designated edge. The designated edge of a
    regular vertex is its smallest out-edge name.
    """

    def __init__(self, graph: Graph, field: ScalarField):
        self.graph = graph
        self.field = field

    def __repr__(self) -> str:
        return f"LeavittAlgebra({self.graph!r}, {self.field.spec})"

    # --- builders ---

    def zero(self) -> Element:
        return Element(self.graph, self.field)

    def element(self, terms: Iterable[tuple[Monomial, Scalar]]) -> Element:
        return self.normal_form(Element(self.graph, self.field, terms))

    def monomial(self, alpha: Path, beta: Path, coefficient: Scalar | None = None) -> Element:
        """The element c·αβ*, checking that α and β share their range."""
        coefficient = self.field.one if coefficient is None else coefficient
        return self.element([(self._check(Monomial(alpha, beta)), coefficient)])

    def vertex(self, v: str) -> Element:
        self.graph.vertex_path(v)
        return Element(self.graph, self.field, [(vertex_monomial(v), self.field.one)])

    def path_element(self, path: Path) -> Element:
        return self.monomial(path, self.graph.vertex_path(path.end))

    def edge(self, ref: str) -> Element:
        return self.path_element(self.graph.path([ref]))

    def ghost(self, ref: str) -> Element:
        return self.involution(self.edge(ref))

    def cycle_power(self, cycle: Cycle, exponent: int) -> Element:
        """g^k for k ≥ 0, with g^0 the base vertex."""
        if exponent < 0:
            raise MalformedMonomialError("Cycle powers must be non-negative")
        if exponent == 0:
            return self.vertex(cycle.base)
        return self.path_element(self.graph.path(cycle.steps * exponent))

    def linear_combination(self, pairs: Iterable[tuple[Scalar, Element]]) -> Element:
        total = self.zero()
        for coefficient, x in pairs:
            total = total + x.scale(coefficient)
        return total

    # --- normal form ---

    def require(self, x: Element) -> Element:
        if x.field != self.field:
            raise AmbientMismatchError(
                f"Element over {x.field.spec}, algebra over {self.field.spec}"
            )
        if x.graph != self.graph:
            raise AmbientMismatchError("Element lives over a different graph")
        return x

    def _check(self, monomial: Monomial) -> Monomial:
        for path in monomial:
            rebuilt = self.graph.path(path.steps, base=path.base)
            if rebuilt.end != path.end:
                raise MalformedMonomialError(f"Path {path.steps} does not end at {path.end!r}")
        if monomial.alpha.end != monomial.beta.end:
            raise MalformedMonomialError(
                f"r(alpha)={monomial.alpha.end!r} differs from r(beta)={monomial.beta.end!r}"
            )
        return monomial

    def reducible_edge(self, monomial: Monomial) -> str | None:
        """The designated edge both paths end in, if any."""
        alpha, beta = monomial
        if not alpha.steps or not beta.steps or alpha.steps[-1] != beta.steps[-1]:
            return None
        last = alpha.steps[-1]
        if self.graph.designated_edge(self.graph.source(last)) == last:
            return last
        return None

    def is_basis_monomial(self, monomial: Monomial) -> bool:
        return self.reducible_edge(monomial) is None

    def normal_form(self, x: Element) -> Element:
        """Rewrite with α₀f(β₀f)* = α₀β₀* − Σ_{e≠f} α₀e(β₀e)* until irreducible."""
        self.require(x)
        graph = self.graph
        pending = [(self._check(m), c) for m, c in x.terms.items()]
        reduced: list[tuple[Monomial, Scalar]] = []
        while pending:
            monomial, coefficient = pending.pop()
            designated = self.reducible_edge(monomial)
            if designated is None:
                reduced.append((monomial, coefficient))
                continue
            alpha, beta = monomial
            junction = graph.source(designated)
            alpha0 = Path(alpha.base, alpha.steps[:-1], junction)
            beta0 = Path(beta.base, beta.steps[:-1], junction)
            pending.append((Monomial(alpha0, beta0), coefficient))
            for e in graph.out_edges(junction):
                if e != designated:
                    end = graph.range(e)
                    reduced.append(
                        (
                            Monomial(
                                Path(alpha.base, alpha0.steps + (e,), end),
                                Path(beta.base, beta0.steps + (e,), end),
                            ),
                            -coefficient,
                        )
                    )
        return Element(x.graph, x.field, reduced)

    # --- products ---

    def monomial_product(self, left: Monomial, right: Monomial) -> Monomial | None:
        """(αβ*)(γδ*) as a single monomial, or None when it vanishes.

        The result is not reduced to normal form.
        """
        alpha, beta = left
        gamma, delta = right
        if beta.base != gamma.base:
            return None
        n, m = len(beta.steps), len(gamma.steps)
        if n <= m:
            if gamma.steps[:n] != beta.steps:
                return None
            return Monomial(self.graph.extend(alpha, gamma.steps[n:]), delta)
        if beta.steps[:m] != gamma.steps:
            return None
        return Monomial(alpha, self.graph.extend(delta, beta.steps[m:]))

    def multiply(self, x: Element, y: Element) -> Element:
        self.require(x)
        x.check_compatible(y)
        terms: list[tuple[Monomial, Scalar]] = []
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                product = self.monomial_product(m1, m2)
                if product is not None:
                    terms.append((product, c1 * c2))
        return self.normal_form(Element(x.graph, x.field, terms))

    def product(self, factors: Sequence[Element]) -> Element:
        if not factors:
            raise ValueError("product of no factors")
        result = factors[0]
        for factor in factors[1:]:
            result = self.multiply(result, factor)
        return result

    def sandwich(self, left: Monomial, x: Element, right: Monomial) -> Element:
        """left · x · right for monomials ``left`` and ``right``."""
        terms: list[tuple[Monomial, Scalar]] = []
        for monomial, coefficient in x.terms.items():
            inner = self.monomial_product(left, monomial)
            if inner is None:
                continue
            outer = self.monomial_product(inner, right)
            if outer is not None:
                terms.append((outer, coefficient))
        return self.normal_form(Element(x.graph, x.field, terms))

    def involution(self, x: Element) -> Element:
        # Swapping α and β preserves irreducibility
        return Element(x.graph, x.field, {m.star(): c for m, c in x.terms.items()})

    def unit_on(self, vertices: Iterable[str]) -> Element:
        """Σ v over ``vertices``; a local unit for elements supported there."""
        return Element(
            self.graph, self.field, [(vertex_monomial(v), self.field.one) for v in set(vertices)]
        )
