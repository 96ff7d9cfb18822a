"""Pydantic schemas for element-level command output."""

from pydantic import BaseModel


class ElementResponse(BaseModel):
    field: str
    element: str


class PhiResponse(BaseModel):
    H: list[str]
    S: list[str]
    element: str
    image: str
    in_kernel: bool


class WitnessTermEntry(BaseModel):
    """coefficient · left · gens[generator] · right"""

    coefficient: str
    left: str
    generator: int
    right: str


class MembershipResponse(BaseModel):
    element: str
    generators: list[str]
    found: bool
    status: str
    bound: int
    witness: list[WitnessTermEntry] | None = None
