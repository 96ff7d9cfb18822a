"""CLI command for principal generators of finitely generated ideals."""

import logging
from pathlib import Path

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
from leavitt.cli.parsers import parse_generator_file, parse_graph_file
from leavitt.cli.reports import certificate_document
from leavitt.core.config import LeavittConfig
from leavitt.core.exceptions import InputFileError
from leavitt.core.services.ideals.principal import PrincipalGeneratorBuilder

logger = logging.getLogger(__name__)


@reports_errors
def principal(
    graph: str = GRAPH_OPTION,
    gens: str = typer.Option(..., "--gens", help="Structured generator document (JSON)"),
    bound: int | None = typer.Option(
        None, "--bound", "-b", min=0, help="Oracle bound for inputs without a recipe"
    ),
    oracle_only: bool = typer.Option(
        False, "--oracle-only", help="Certify every input by the bounded oracle"
    ),
    field: str | None = FIELD_OPTION,
    pretty: bool = PRETTY_OPTION,
):
    """Single generator a with ⟨a⟩ equal to the ideal of the inputs, with a certificate."""
    settings = load_settings()
    k = resolve_field(field)
    config = LeavittConfig(field=k.spec, algebraic_certificates=not oracle_only)
    g = parse_graph_file(graph)
    generators = parse_generator_file(gens, g, k)

    cert = PrincipalGeneratorBuilder(config).build(g, generators, bound, k)
    document = certificate_document(cert)

    if settings.output_dir:
        target = Path(settings.output_dir) / f"{Path(graph).stem}-certificate.json"
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(document.model_dump_json(indent=2), encoding="utf-8")
        except OSError as e:
            raise InputFileError(f"Cannot write certificate: {e}", source=str(target)) from e
        logger.info("Certificate written to %s", target)

    emit(document, pretty, title=f"a = {document.generator}")
