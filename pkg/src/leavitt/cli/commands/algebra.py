"""CLI commands on elements of the Leavitt path algebra."""

import typer

from leavitt.cli.output import (
    FIELD_OPTION,
    GRAPH_OPTION,
    PRETTY_OPTION,
    emit,
    load_settings,
    reports_errors,
    resolve_field,
)
from leavitt.cli.parsers import parse_element, parse_graph_file, parse_vertex_set
from leavitt.cli.reports import witness_entries
from leavitt.core.config import LeavittConfig
from leavitt.core.constants import MembershipStatus
from leavitt.core.models.graph import AdmissiblePair
from leavitt.core.schemas.algebra import ElementResponse, MembershipResponse, PhiResponse
from leavitt.core.services.algebra.algebra import LeavittAlgebra
from leavitt.core.services.algebra.oracle import NotFoundWithinBound, membership_oracle
from leavitt.core.services.algebra.phi import apply_phi
from leavitt.core.services.graph.quotient import quotient_graph

EXPR_OPTION = typer.Option(..., "--expr", "-e", help="Element expression")


@reports_errors
def normal_form(
    graph: str = GRAPH_OPTION,
    expr: str = EXPR_OPTION,
    field: str | None = FIELD_OPTION,
    pretty: bool = PRETTY_OPTION,
):
    """Rewrite an expression into its normal form."""
    load_settings()
    k = resolve_field(field)
    x = parse_element(parse_graph_file(graph), expr, k)
    emit(ElementResponse(field=k.spec, element=str(x)), pretty)


@reports_errors
def mul(
    graph: str = GRAPH_OPTION,
    left: str = typer.Option(..., "--left", "-l", help="Left factor"),
    right: str = typer.Option(..., "--right", "-r", help="Right factor"),
    field: str | None = FIELD_OPTION,
    pretty: bool = PRETTY_OPTION,
):
    """Multiply two elements."""
    load_settings()
    k = resolve_field(field)
    g = parse_graph_file(graph)
    product = LeavittAlgebra(g, k).multiply(parse_element(g, left, k), parse_element(g, right, k))
    emit(ElementResponse(field=k.spec, element=str(product)), pretty)


@reports_errors
def phi(
    graph: str = GRAPH_OPTION,
    expr: str = EXPR_OPTION,
    hereditary: list[str] | None = typer.Option(
        None, "--hereditary", "-H", help="Vertex of H (repeat, or comma separated)"
    ),
    breaking: list[str] | None = typer.Option(
        None, "--breaking", "-S", help="Breaking vertex kept in S (repeatable)"
    ),
    field: str | None = FIELD_OPTION,
    pretty: bool = PRETTY_OPTION,
):
    """Image of an element in the quotient by the graded ideal of (H, S)."""
    load_settings()
    k = resolve_field(field)
    g = parse_graph_file(graph)
    pair = AdmissiblePair(parse_vertex_set(g, hereditary), parse_vertex_set(g, breaking))
    q = quotient_graph(g, pair)
    x = parse_element(g, expr, k)
    image = apply_phi(q, x)
    response = PhiResponse(
        H=sorted(pair.hereditary),
        S=sorted(pair.breaking),
        element=str(x),
        image=str(image),
        in_kernel=image.is_zero(),
    )
    emit(response, pretty)


@reports_errors
def member(
    graph: str = GRAPH_OPTION,
    gen: list[str] = typer.Option(..., "--gen", help="Generator expression (repeatable)"),
    expr: str = EXPR_OPTION,
    bound: int | None = typer.Option(None, "--bound", "-b", min=0, help="Path length bound"),
    field: str | None = FIELD_OPTION,
    pretty: bool = PRETTY_OPTION,
):
    """Search for a witness that an element lies in the ideal of the generators."""
    load_settings()
    k = resolve_field(field)
    g = parse_graph_file(graph)
    max_len = LeavittConfig().member_bound if bound is None else bound
    gens = [parse_element(g, text, k) for text in gen]
    x = parse_element(g, expr, k)

    found = membership_oracle(g, gens, x, max_len)
    if isinstance(found, NotFoundWithinBound):
        response = MembershipResponse(
            element=str(x),
            generators=[str(y) for y in gens],
            found=False,
            status=f"{MembershipStatus.INCONCLUSIVE}({found.bound})",
            bound=found.bound,
        )
    else:
        response = MembershipResponse(
            element=str(x),
            generators=[str(y) for y in gens],
            found=True,
            status=MembershipStatus.MEMBER,
            bound=found.bound,
            witness=witness_entries(found, k),
        )
    emit(response, pretty)
