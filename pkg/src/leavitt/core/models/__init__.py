from leavitt.core.models.element import Element, Monomial, vertex_monomial
from leavitt.core.models.field import Scalar, ScalarField
from leavitt.core.models.graph import (
    AdmissiblePair,
    Cycle,
    EdgeSpec,
    Graph,
    Path,
    bundle_ref,
    split_ref,
)

__all__ = [
    "AdmissiblePair",
    "Cycle",
    "EdgeSpec",
    "Element",
    "Graph",
    "Monomial",
    "Path",
    "Scalar",
    "ScalarField",
    "bundle_ref",
    "split_ref",
    "vertex_monomial",
]
