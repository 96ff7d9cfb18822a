"""The quotient map φ: L_K(E) → L_K(E\\(H, S)) and exact graded membership."""

import logging

from leavitt.core.exceptions import AmbientMismatchError
from leavitt.core.models.element import Element, Monomial, vertex_monomial
from leavitt.core.models.field import Scalar
from leavitt.core.models.graph import Path
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.graph.quotient import QuotientPresentation

logger = logging.getLogger(__name__)


def _path_image(algebra: LeavittAlgebra, q: QuotientPresentation, path: Path) -> Element:
    """φ of a real path: the product of its step images, or the base image."""
    graph = algebra.graph
    result = algebra.element(
        (vertex_monomial(v), algebra.field.one) for v in q.image_of(path.base)
    )
    for step in path.steps:
        if result.is_zero():
            break
        image = algebra.element(
            (Monomial(graph.path([ref]), graph.vertex_path(graph.range(ref))), algebra.field.one)
            for ref in q.image_of(step)
        )
        result = algebra.multiply(result, image)
    return result


def apply_phi(q: QuotientPresentation, x: Element) -> Element:
    """φ(αβ*) = φ(α)·φ(β)*, extended linearly; returned in normal form."""
    if x.graph != q.source:
        raise AmbientMismatchError("Element does not live over the quotient's source graph")
    algebra = LeavittAlgebra(q.graph, x.field)
    terms: list[tuple[Monomial, Scalar]] = []
    for monomial, coefficient in x.terms.items():
        left = _path_image(algebra, q, monomial.alpha)
        if left.is_zero():
            continue
        right = algebra.involution(_path_image(algebra, q, monomial.beta))
        image = algebra.multiply(left, right)
        terms.extend((m, coefficient * c) for m, c in image.terms.items())
    return algebra.element(terms)


def graded_membership(q: QuotientPresentation, x: Element) -> bool:
    """Exact decision of x ∈ I_(H,S): the kernel of φ."""
    member = apply_phi(q, x).is_zero()
    logger.debug("Graded membership of %s: %s", x, member)
    return member
