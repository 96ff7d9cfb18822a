"""Pydantic schemas for canonical forms and principal generator certificates."""

from pydantic import BaseModel

from leavitt.core.schemas.algebra import WitnessTermEntry
from leavitt.core.schemas.generators import GeneratorDocument


class TraceEntry(BaseModel):
    round: int
    action: str
    subject: str
    detail: str = ""


class CyclePolyOutput(BaseModel):
    base: str
    cycle: list[str]
    poly: list[tuple[int, str]]
    element: str


class ExitVertexEntry(BaseModel):
    """A vertex put into H because it is the range of an exit of a cycle polynomial."""

    vertex: str
    base: str
    path: list[str]


class CanonicalFormOutput(BaseModel):
    H: list[str]
    V0: list[str]
    exit_vertices: list[ExitVertexEntry]
    S: list[str]
    Y: list[CyclePolyOutput]
    trace: list[TraceEntry]


class OrthogonalEntry(BaseModel):
    vertex: str
    kind: str
    element: str


class RecoveryEntry(BaseModel):
    """vertex · a · vertex, which must equal the orthogonal generator at vertex."""

    vertex: str
    value: str


class InputVerification(BaseModel):
    kind: str
    generator: str
    element: str
    status: str
    method: str | None = None
    bound: int | None = None
    witness: list[WitnessTermEntry] | None = None


class CertificateDocument(BaseModel):
    """Everything needed to re-check ⟨a⟩ = ⟨inputs⟩ by hand."""

    field: str
    inputs: GeneratorDocument
    canonical: CanonicalFormOutput
    orthogonal: list[OrthogonalEntry]
    generator: str
    recoveries: list[RecoveryEntry]
    verification: list[InputVerification]
    bound_used: int
    verified: bool
