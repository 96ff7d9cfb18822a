"""Single generators for finitely generated ideals, with exact certificates.

The generator is a = y₁ + … + y_t for the orthogonal generators of the
canonical form. Each input generator is then shown to lie in ⟨a⟩ by an
explicit combination Σ c·m₁·a·m₂ that is evaluated and compared exactly.
"""

import logging
from dataclasses import dataclass

from leavitt.core.config import LeavittConfig
from leavitt.core.constants import (
    DerivationRule,
    GeneratorKind,
    VerificationStatus,
    WitnessMethod,
)
from leavitt.core.exceptions import CertificateError
from leavitt.core.models.element import Element, Monomial, vertex_monomial
from leavitt.core.models.field import Scalar, ScalarField
from leavitt.core.models.graph import Graph
from leavitt.core.models.ideal import CanonicalIdealForm, CyclePolynomial, StructuredGeneratorSet
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.algebra.breaking import gap_element
from leavitt.core.services.algebra.oracle import (
    MembershipWitness,
    NotFoundWithinBound,
    WitnessTerm,
    membership_oracle,
)
from leavitt.core.services.graph.closure import closure_derivation, edges_leaving
from leavitt.core.services.graph.cycles import canonical_rotation, cycle_vertices
from leavitt.core.services.ideals.canonicalizer import canonicalize
from leavitt.core.services.ideals.orthogonalizer import OrthogonalGenerator, orthogonalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InputGenerator:
    kind: str
    label: str
    element: Element


@dataclass(frozen=True)
class GeneratorCheck:
    generator: InputGenerator
    status: str
    witness: MembershipWitness | None = None

    @property
    def verified(self) -> bool:
        return self.status == VerificationStatus.VERIFIED


@dataclass(frozen=True)
class PrincipalCertificate:
    graph: Graph
    field: ScalarField
    inputs: StructuredGeneratorSet
    form: CanonicalIdealForm
    orthogonal: tuple[OrthogonalGenerator, ...]
    generator: Element
    recoveries: tuple[tuple[str, Element], ...]
    input_membership: tuple[GeneratorCheck, ...] = ()
    bound_used: int = 0

    @property
    def verified(self) -> bool:
        return all(check.verified for check in self.input_membership)


class WitnessBuilder:
    """Algebraic membership recipes in ⟨a⟩, read off the canonical form.

    Every recipe uses a single generator, index 0, standing for a.
    """

    def __init__(self, algebra: LeavittAlgebra, form: CanonicalIdealForm):
        self.algebra = algebra
        self.graph = algebra.graph
        self.form = form
        self.one = algebra.field.one
        self._vertex_terms = self._derive_vertices()

    def _edge(self, ref: str) -> tuple[Monomial, Monomial]:
        """The monomials e and e*."""
        path = self.graph.path([ref])
        end = self.graph.vertex_path(path.end)
        return Monomial(path, end), Monomial(end, path)

    def _wrap(
        self, terms: list[WitnessTerm], left: Monomial, right: Monomial, scale: Scalar | None = None
    ) -> list[WitnessTerm]:
        """left · (Σ terms) · right, dropping summands that vanish."""
        product = self.algebra.monomial_product
        wrapped = []
        for term in terms:
            m1 = product(left, term.left)
            m2 = product(term.right, right)
            if m1 is not None and m2 is not None:
                c = term.coefficient if scale is None else scale * term.coefficient
                wrapped.append(WitnessTerm(c, m1, term.generator, m2))
        return wrapped

    def _derive_vertices(self) -> dict[str, list[WitnessTerm]]:
        graph = self.graph
        seeds = [*self.form.vertex_gens, *self.form.exit_vertices]
        terms: dict[str, list[WitnessTerm]] = {}
        for w, derivation in closure_derivation(graph, seeds).items():
            if derivation.rule == DerivationRule.SEED and w in self.form.exit_vertices:
                # w = P*·y·P for the path P from the cycle base through the exit
                _, steps = self.form.exit_vertices[w]
                path = graph.path(steps)
                end = graph.vertex_path(w)
                terms[w] = [WitnessTerm(self.one, Monomial(end, path), 0, Monomial(path, end))]
            elif derivation.rule == DerivationRule.SEED:
                m = vertex_monomial(w)
                terms[w] = [WitnessTerm(self.one, m, 0, m)]
            elif derivation.rule == DerivationRule.HEREDITARY:
                # w = e*·s(e)·e
                (e,) = derivation.edges
                edge, ghost = self._edge(e)
                terms[w] = self._wrap(terms[graph.source(e)], ghost, edge)
            else:
                # w = Σ e·r(e)·e*
                terms[w] = []
                for e in derivation.edges:
                    edge, ghost = self._edge(e)
                    terms[w].extend(self._wrap(terms[graph.range(e)], edge, ghost))
        return terms

    def _witness(self, terms: list[WitnessTerm]) -> MembershipWitness:
        return MembershipWitness(tuple(terms), 0, WitnessMethod.ALGEBRAIC)

    def _cycle_power(self, y: CyclePolynomial, k: int) -> Monomial:
        if k == 0:
            return vertex_monomial(y.base)
        path = self.graph.path(y.cycle.steps * k)
        return Monomial(path, self.graph.vertex_path(y.base))

    def vertex(self, v: str) -> MembershipWitness | None:
        if v not in self._vertex_terms:
            return None
        return self._witness(self._vertex_terms[v])

    def breaking(self, v: str) -> MembershipWitness | None:
        if v in self.form.hereditary:
            # v^H = v once every out-edge lands in H
            return self.vertex(v)
        if v not in self.form.breaking:
            return None
        m = vertex_monomial(v)
        terms = [WitnessTerm(self.one, m, 0, m)]
        if self.form.cycle_at(v) is not None:
            # v^H = v^H·p(g) = v·a·v − Σ ee*·a·v
            for e in edges_leaving(self.graph, v, self.form.hereditary):
                path = self.graph.path([e])
                terms.append(WitnessTerm(-self.one, Monomial(path, path), 0, m))
        return self._witness(terms)

    def cycle(self, y: CyclePolynomial) -> MembershipWitness | None:
        if y.base in self.form.hereditary:
            # p(g) = Σ k_r g^r·u with u ∈ H
            terms: list[WitnessTerm] = []
            for k, coefficient in y.poly.terms():
                terms.extend(
                    self._wrap(
                        self._vertex_terms[y.base],
                        self._cycle_power(y, k),
                        vertex_monomial(y.base),
                        coefficient,
                    )
                )
            return self._witness(terms)
        key = canonical_rotation(self.graph, y.cycle).steps
        final = next(
            (
                f
                for f in self.form.cycle_polys
                if canonical_rotation(self.graph, f.cycle).steps == key
            ),
            None,
        )
        if final is None:
            return None
        quotient, remainder = y.poly.divmod(final.poly)
        if not remainder.is_zero():
            raise CertificateError(f"{final.poly} does not divide {y.poly} at {y.base!r}")
        # With g = μν read from the final base u and y read from s(ν):
        # p(νμ) = μ*·(p/d)(g)·d(g)·μ and d(g) = u·a·u
        i = cycle_vertices(self.graph, final.cycle).index(y.base)
        mu = self.graph.path(final.cycle.steps[:i], base=final.base)
        end = self.graph.vertex_path(mu.end)
        enter, leave = Monomial(end, mu), Monomial(mu, end)
        terms = []
        for k, c in quotient.terms():
            left = self.algebra.monomial_product(enter, self._cycle_power(final, k))
            if left is not None:
                terms.append(WitnessTerm(c, left, 0, leave))
        return self._witness(terms)


class PrincipalGeneratorBuilder:
    """Canonicalize, orthogonalize, sum, and certify.

    With ``algebraic_certificates`` off every input generator goes through
    the bounded membership oracle instead of the algebraic recipes.
    """

    def __init__(self, config: LeavittConfig):
        self.verify_bound = config.verify_bound
        self.field = ScalarField.from_spec(config.field)
        self.algebraic_certificates = config.algebraic_certificates

    def build(
        self,
        graph: Graph,
        gens: StructuredGeneratorSet,
        verify_bound: int | None = None,
        field: ScalarField | None = None,
    ) -> PrincipalCertificate:
        """``field`` applies when no cycle polynomial fixes one."""
        bound = self.verify_bound if verify_bound is None else verify_bound
        if gens.cycle_polys:
            field_ = gens.cycle_polys[0].poly.field
        else:
            field_ = field or self.field
        algebra = LeavittAlgebra(graph, field_)

        form = canonicalize(graph, gens)
        orthogonal = tuple(orthogonalize(graph, form, field_))
        a = algebra.linear_combination((field_.one, y.element) for y in orthogonal)
        recoveries = self._check_recoveries(algebra, orthogonal, a)
        self._check_orthogonality(algebra, orthogonal)

        witnesses = WitnessBuilder(algebra, form) if self.algebraic_certificates else None
        checks = []
        bound_used = 0
        for generator, recipe in self._inputs(algebra, gens, form, witnesses):
            if recipe is not None:
                if recipe.evaluate(algebra, [a]) != generator.element:
                    raise CertificateError(
                        f"Algebraic witness for {generator.label} does not reproduce it"
                    )
                checks.append(GeneratorCheck(generator, VerificationStatus.VERIFIED, recipe))
                continue
            found = membership_oracle(graph, [a], generator.element, bound)
            if isinstance(found, NotFoundWithinBound):
                status = f"{VerificationStatus.UNVERIFIED}({found.bound})"
                checks.append(GeneratorCheck(generator, status))
                continue
            if found.evaluate(algebra, [a]) != generator.element:
                raise CertificateError(f"Oracle witness for {generator.label} is wrong")
            bound_used = max(bound_used, found.bound)
            checks.append(GeneratorCheck(generator, VerificationStatus.VERIFIED, found))

        certificate = PrincipalCertificate(
            graph=graph,
            field=field_,
            inputs=gens,
            form=form,
            orthogonal=orthogonal,
            generator=a,
            recoveries=recoveries,
            input_membership=tuple(checks),
            bound_used=bound_used,
        )
        logger.info(
            "Principal generator with %d orthogonal summands, %d/%d inputs verified",
            len(orthogonal),
            sum(check.verified for check in checks),
            len(checks),
        )
        return certificate

    @staticmethod
    def _check_recoveries(
        algebra: LeavittAlgebra, orthogonal: tuple[OrthogonalGenerator, ...], a: Element
    ) -> tuple[tuple[str, Element], ...]:
        recoveries = []
        for y in orthogonal:
            v = algebra.vertex(y.vertex)
            recovered = algebra.product([v, a, v])
            if recovered != y.element:
                raise CertificateError(
                    f"{y.vertex}·a·{y.vertex} = {recovered}, expected {y.element}"
                )
            recoveries.append((y.vertex, recovered))
        return tuple(recoveries)

    @staticmethod
    def _check_orthogonality(
        algebra: LeavittAlgebra, orthogonal: tuple[OrthogonalGenerator, ...]
    ) -> None:
        for i, y in enumerate(orthogonal):
            for j, z in enumerate(orthogonal):
                if i != j and not algebra.multiply(y.element, z.element).is_zero():
                    raise CertificateError(
                        f"Generators at {y.vertex} and {z.vertex} are not orthogonal"
                    )

    @staticmethod
    def _inputs(
        algebra: LeavittAlgebra,
        gens: StructuredGeneratorSet,
        form: CanonicalIdealForm,
        witnesses: WitnessBuilder | None,
    ) -> list[tuple[InputGenerator, MembershipWitness | None]]:
        inputs: list[tuple[InputGenerator, MembershipWitness | None]] = []
        for v in gens.vertices:
            generator = InputGenerator(GeneratorKind.VERTEX, v, algebra.vertex(v))
            inputs.append((generator, witnesses.vertex(v) if witnesses else None))
        for v in gens.breaking:
            element = gap_element(algebra, form.hereditary, v)
            generator = InputGenerator(GeneratorKind.BREAKING, f"{v}^H", element)
            inputs.append((generator, witnesses.breaking(v) if witnesses else None))
        for y in gens.cycle_polys:
            label = f"{y.base}: {y.poly}"
            generator = InputGenerator(GeneratorKind.CYCLE, label, y.element(algebra))
            inputs.append((generator, witnesses.cycle(y) if witnesses else None))
        return inputs


def principal_generator(
    graph: Graph,
    gens: StructuredGeneratorSet,
    verify_bound: int,
    config: LeavittConfig | None = None,
) -> PrincipalCertificate:
    config = config or LeavittConfig()
    return PrincipalGeneratorBuilder(config).build(graph, gens, verify_bound)
