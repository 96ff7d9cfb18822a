"""Conversions from domain results to output documents."""

from leavitt.core.models.field import ScalarField
from leavitt.core.models.graph import AdmissiblePair, Graph
from leavitt.core.models.ideal import CanonicalIdealForm, StructuredGeneratorSet
from leavitt.core.schemas.algebra import WitnessTermEntry
from leavitt.core.schemas.certificate import (
    CanonicalFormOutput,
    CertificateDocument,
    CyclePolyOutput,
    ExitVertexEntry,
    InputVerification,
    OrthogonalEntry,
    RecoveryEntry,
    TraceEntry,
)
from leavitt.core.schemas.generators import CyclePolyEntry, GeneratorDocument
from leavitt.core.schemas.graph import AdmissiblePairEntry
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.algebra.oracle import MembershipWitness
from leavitt.core.services.ideals.principal import GeneratorCheck, PrincipalCertificate


def pair_entry(pair: AdmissiblePair) -> AdmissiblePairEntry:
    return AdmissiblePairEntry(H=sorted(pair.hereditary), S=sorted(pair.breaking))


def witness_entries(witness: MembershipWitness, field: ScalarField) -> list[WitnessTermEntry]:
    return [
        WitnessTermEntry(
            coefficient=field.format(term.coefficient),
            left=term.left.to_expression(),
            generator=term.generator,
            right=term.right.to_expression(),
        )
        for term in witness.combination
    ]


def generator_document(gens: StructuredGeneratorSet) -> GeneratorDocument:
    return GeneratorDocument(
        vertices=list(gens.vertices),
        breaking=list(gens.breaking),
        cycle_polys=[
            CyclePolyEntry(base=y.base, cycle=list(y.cycle.steps), poly=list(y.poly.to_pairs()))
            for y in gens.cycle_polys
        ],
    )


def canonical_form_output(
    graph: Graph, form: CanonicalIdealForm, field: ScalarField
) -> CanonicalFormOutput:
    algebra = LeavittAlgebra(graph, field)
    return CanonicalFormOutput(
        H=sorted(form.hereditary),
        V0=sorted(form.vertex_gens),
        exit_vertices=[
            ExitVertexEntry(vertex=w, base=base, path=list(path))
            for w, (base, path) in sorted(form.exit_vertices.items())
        ],
        S=sorted(form.breaking),
        Y=[
            CyclePolyOutput(
                base=y.base,
                cycle=list(y.cycle.steps),
                poly=y.poly.to_pairs(),
                element=str(y.element(algebra)),
            )
            for y in form.cycle_polys
        ],
        trace=[
            TraceEntry(
                round=step.round, action=step.action, subject=step.subject, detail=step.detail
            )
            for step in form.trace
        ],
    )


def _verification(check: GeneratorCheck, field: ScalarField) -> InputVerification:
    witness = check.witness
    return InputVerification(
        kind=check.generator.kind,
        generator=check.generator.label,
        element=str(check.generator.element),
        status=check.status,
        method=witness.method if witness else None,
        bound=witness.bound if witness else None,
        witness=witness_entries(witness, field) if witness else None,
    )


def certificate_document(cert: PrincipalCertificate) -> CertificateDocument:
    return CertificateDocument(
        field=cert.field.spec,
        inputs=generator_document(cert.inputs),
        canonical=canonical_form_output(cert.graph, cert.form, cert.field),
        orthogonal=[
            OrthogonalEntry(vertex=y.vertex, kind=y.kind, element=str(y.element))
            for y in cert.orthogonal
        ],
        generator=str(cert.generator),
        recoveries=[RecoveryEntry(vertex=v, value=str(x)) for v, x in cert.recoveries],
        verification=[_verification(check, cert.field) for check in cert.input_membership],
        bound_used=cert.bound_used,
        verified=cert.verified,
    )
