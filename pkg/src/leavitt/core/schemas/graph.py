"""Pydantic schemas for graph documents and graph-level command output."""

from pydantic import BaseModel, ConfigDict, Field


class EdgeEntry(BaseModel):
    """One ordinary edge or ω-bundle of a graph document."""

    model_config = ConfigDict(extra="forbid")

    name: str
    src: str
    dst: str


class GraphDocument(BaseModel):
    """Input format for graphs."""

    model_config = ConfigDict(extra="forbid")

    vertices: list[str] = Field(default_factory=list)
    edges: list[EdgeEntry] = Field(default_factory=list)
    bundles: list[EdgeEntry] = Field(default_factory=list)


class GraphCheckResponse(BaseModel):
    graph: GraphDocument
    classification: dict[str, str]


class ClosureResponse(BaseModel):
    H: list[str]


class BreakingResponse(BaseModel):
    H: list[str]
    breaking: list[str]


class ConditionResponse(BaseModel):
    condition: str
    holds: bool
    witness: str | list[str] | None = None


class QuotientResponse(BaseModel):
    H: list[str]
    S: list[str]
    graph: GraphDocument
    primed_vertices: dict[str, str]
    primed_edges: dict[str, str]
    generator_images: dict[str, str]


class AdmissiblePairEntry(BaseModel):
    H: list[str]
    S: list[str]


class AdmissibleResponse(BaseModel):
    count: int
    pairs: list[AdmissiblePairEntry]
