"""CLI commands on the graph itself: validation, closures, cycles, quotients."""

import typer

from leavitt.cli.output import (
    GRAPH_OPTION,
    PRETTY_OPTION,
    emit,
    load_settings,
    reports_errors,
)
from leavitt.cli.parsers import parse_graph_file, parse_vertex_set
from leavitt.cli.reports import pair_entry
from leavitt.core.config import LeavittConfig
from leavitt.core.constants import DEFAULT_ADMISSIBLE_VERTEX_LIMIT
from leavitt.core.models.graph import AdmissiblePair
from leavitt.core.schemas.graph import (
    AdmissibleResponse,
    BreakingResponse,
    ClosureResponse,
    ConditionResponse,
    GraphCheckResponse,
    QuotientResponse,
)
from leavitt.core.services.graph.closure import breaking_vertices, hereditary_saturated_closure
from leavitt.core.services.graph.cycles import condition_k, condition_l
from leavitt.core.services.graph.quotient import quotient_graph
from leavitt.core.services.graph.validation import emit_graph
from leavitt.core.services.ideals.admissible import AdmissiblePairEnumerator

HEREDITARY_OPTION = typer.Option(
    None, "--hereditary", "-H", help="Vertex of H (repeat, or comma separated)"
)


@reports_errors
def check(graph: str = GRAPH_OPTION, pretty: bool = PRETTY_OPTION):
    """Validate a graph and classify its vertices."""
    load_settings()
    g = parse_graph_file(graph)
    emit(GraphCheckResponse(graph=emit_graph(g), classification=g.classification()), pretty)


@reports_errors
def closure(
    graph: str = GRAPH_OPTION,
    seed: list[str] | None = typer.Option(
        None, "--seed", "-s", help="Seed vertex (repeatable)"
    ),
    pretty: bool = PRETTY_OPTION,
):
    """Smallest hereditary saturated set containing the seeds."""
    load_settings()
    g = parse_graph_file(graph)
    hereditary = hereditary_saturated_closure(g, parse_vertex_set(g, seed))
    emit(ClosureResponse(H=sorted(hereditary)), pretty)


@reports_errors
def breaking(
    graph: str = GRAPH_OPTION,
    hereditary: list[str] | None = HEREDITARY_OPTION,
    pretty: bool = PRETTY_OPTION,
):
    """Breaking vertices of a hereditary saturated set."""
    load_settings()
    g = parse_graph_file(graph)
    h = parse_vertex_set(g, hereditary)
    emit(BreakingResponse(H=sorted(h), breaking=sorted(breaking_vertices(g, h))), pretty)


@reports_errors
def quotient(
    graph: str = GRAPH_OPTION,
    hereditary: list[str] | None = HEREDITARY_OPTION,
    breaking: list[str] | None = typer.Option(
        None, "--breaking", "-S", help="Breaking vertex kept in S (repeatable)"
    ),
    pretty: bool = PRETTY_OPTION,
):
    """Quotient graph of an admissible pair and the images of the generators."""
    load_settings()
    g = parse_graph_file(graph)
    pair = AdmissiblePair(parse_vertex_set(g, hereditary), parse_vertex_set(g, breaking))
    q = quotient_graph(g, pair)
    response = QuotientResponse(
        H=sorted(pair.hereditary),
        S=sorted(pair.breaking),
        graph=emit_graph(q.graph),
        primed_vertices=dict(q.primed_vertices),
        primed_edges=dict(q.primed_edges),
        generator_images={name: q.format_image(name) for name in q.generator_images},
    )
    emit(response, pretty)


@reports_errors
def condition_l_cmd(graph: str = GRAPH_OPTION, pretty: bool = PRETTY_OPTION):
    """Does every cycle have an exit?"""
    load_settings()
    holds, witness = condition_l(parse_graph_file(graph))
    steps = list(witness.steps) if witness is not None else None
    emit(ConditionResponse(condition="L", holds=holds, witness=steps), pretty)


@reports_errors
def condition_k_cmd(graph: str = GRAPH_OPTION, pretty: bool = PRETTY_OPTION):
    """Is no vertex the base of exactly one simple closed path?"""
    load_settings()
    holds, witness = condition_k(parse_graph_file(graph))
    emit(ConditionResponse(condition="K", holds=holds, witness=witness), pretty)


@reports_errors
def admissible(
    graph: str = GRAPH_OPTION,
    max_vertices: int = typer.Option(
        DEFAULT_ADMISSIBLE_VERTEX_LIMIT, "--max-vertices", min=1, help="Refuse larger graphs"
    ),
    pretty: bool = PRETTY_OPTION,
):
    """List every admissible pair (H, S), one per graded ideal."""
    load_settings()
    config = LeavittConfig(admissible_vertex_limit=max_vertices)
    pairs = AdmissiblePairEnumerator(config).enumerate(parse_graph_file(graph))
    emit(AdmissibleResponse(count=len(pairs), pairs=[pair_entry(p) for p in pairs]), pretty)
