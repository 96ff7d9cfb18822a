"""Pydantic schemas for structured generator documents."""

from pydantic import BaseModel, ConfigDict, Field, field_validator


class CyclePolyEntry(BaseModel):
    """u + Σ k g^r; ``poly`` lists the [r, k] pairs, the constant 1 is implicit."""

    model_config = ConfigDict(extra="forbid")

    base: str
    cycle: list[str]
    poly: list[tuple[int, int | str]]

    @field_validator("poly")
    @classmethod
    def exponents_positive(cls, v: list[tuple[int, int | str]]) -> list[tuple[int, int | str]]:
        for exponent, _ in v:
            if exponent < 1:
                raise ValueError(f"exponent must be >= 1, got {exponent}")
        return v


class GeneratorDocument(BaseModel):
    """Input format for structured ideal generators."""

    model_config = ConfigDict(extra="forbid")

    vertices: list[str] = Field(default_factory=list)
    breaking: list[str] = Field(default_factory=list)
    cycle_polys: list[CyclePolyEntry] = Field(default_factory=list)
