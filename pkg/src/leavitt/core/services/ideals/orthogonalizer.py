"""Pairwise orthogonal generators y = v·y·v from a canonical ideal form."""

import logging
from typing import NamedTuple

from leavitt.core.constants import GeneratorKind
from leavitt.core.exceptions import CanonicalFormError
from leavitt.core.models.element import Element
from leavitt.core.models.field import ScalarField
from leavitt.core.models.graph import Graph
from leavitt.core.models.ideal import CanonicalIdealForm
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.algebra.breaking import gap_element
from leavitt.core.services.graph.closure import breaking_vertices
from leavitt.core.services.graph.cycles import cycle_vertices

logger = logging.getLogger(__name__)


class OrthogonalGenerator(NamedTuple):
    vertex: str
    element: Element
    kind: str


def form_field(form: CanonicalIdealForm, default: ScalarField | None = None) -> ScalarField:
    """The field of the form's cycle polynomials, else ``default`` or Q."""
    if form.cycle_polys:
        return form.cycle_polys[0].poly.field
    return default if default is not None else ScalarField.rationals()


def check_form(graph: Graph, form: CanonicalIdealForm) -> None:
    hereditary = form.hereditary
    outside = sorted(set(form.vertex_gens) - hereditary)
    if outside:
        raise CanonicalFormError(f"Vertex generator {outside[0]!r} lies outside H")
    bad = sorted(form.breaking - breaking_vertices(graph, hereditary))
    if bad:
        raise CanonicalFormError(f"{bad[0]!r} is not a breaking vertex of H")
    bases = [y.base for y in form.cycle_polys]
    if len(set(bases)) != len(bases):
        raise CanonicalFormError("Two cycle polynomials share a base vertex")
    for y in form.cycle_polys:
        if any(x in hereditary for x in cycle_vertices(graph, y.cycle)):
            raise CanonicalFormError(f"The cycle at {y.base!r} meets H")


def orthogonalize(
    graph: Graph, form: CanonicalIdealForm, field: ScalarField | None = None
) -> list[OrthogonalGenerator]:
    """Vertex generators, then v^H for S, then cycle polynomials.

    A v^H whose vertex carries a cycle polynomial is left out: it lies in
    the ideal of that polynomial, since v^H·p(g) = v^H.
    """
    check_form(graph, form)
    algebra = LeavittAlgebra(graph, form_field(form, field))
    cycle_bases = {y.base for y in form.cycle_polys}

    result = [
        OrthogonalGenerator(u, algebra.vertex(u), GeneratorKind.VERTEX)
        for u in sorted(form.vertex_gens)
    ]
    for v in sorted(form.breaking):
        if v in cycle_bases:
            logger.debug("Dropping %s^H in favour of the cycle polynomial at %s", v, v)
            continue
        result.append(
            OrthogonalGenerator(v, gap_element(algebra, form.hereditary, v), GeneratorKind.BREAKING)
        )
    result.extend(
        OrthogonalGenerator(y.base, y.element(algebra), GeneratorKind.CYCLE)
        for y in form.cycle_polys
    )
    return result
