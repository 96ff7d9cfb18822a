"""Shared plumbing for commands: options, payload printing, error reporting."""

import functools
from collections.abc import Callable
from typing import Any, TypeVar

import typer
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from leavitt.core.config import LeavittSettings
from leavitt.core.constants import DEFAULT_FIELD
from leavitt.core.exceptions import (
    FieldError,
    GraphValidationError,
    InputFileError,
    LeavittError,
    ParseError,
)
from leavitt.core.logging_config import setup_logging
from leavitt.core.models.field import ScalarField
from leavitt.core.schemas.diagnostic import Diagnostic

console = Console()

# Exit statuses
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

GRAPH_OPTION = typer.Option(..., "--graph", "-g", help="Graph document (JSON)")
FIELD_OPTION = typer.Option(None, "--field", "-k", help="Scalar field: q or fp:<p>")
PRETTY_OPTION = typer.Option(False, "--pretty", help="Render as tables instead of JSON")

CommandT = TypeVar("CommandT", bound=Callable[..., Any])


def load_settings() -> LeavittSettings:
    """Read the process environment and configure logging from it."""
    settings = LeavittSettings()
    setup_logging(settings.log_level)
    return settings


def resolve_field(spec: str | None) -> ScalarField:
    try:
        return ScalarField.from_spec(spec or DEFAULT_FIELD)
    except FieldError as e:
        raise typer.BadParameter(str(e), param_hint="--field") from e


def diagnostic(error: LeavittError) -> Diagnostic:
    source = getattr(error, "source", "")
    location = getattr(error, "location", "")
    if isinstance(error, ParseError):
        location = f"position {error.position}"
    return Diagnostic(source=source, location=location, message=str(error))


def exit_code(error: LeavittError) -> int:
    if isinstance(error, (ParseError, InputFileError, GraphValidationError)):
        return EXIT_USAGE_ERROR
    return EXIT_DOMAIN_ERROR


def reports_errors(command: CommandT) -> CommandT:
    """Turn domain errors into a Diagnostic on stderr and an exit status."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except LeavittError as e:
            typer.echo(diagnostic(e).model_dump_json(), err=True)
            raise typer.Exit(exit_code(e)) from e

    return wrapper  # type: ignore[return-value]


def _cell(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return render(value)
    if isinstance(value, dict):
        if not value:
            return "[dim]–[/]"
        table = Table(show_header=False, box=None)
        for key, item in value.items():
            table.add_row(str(key), _cell(item))
        return table
    if isinstance(value, list):
        if value and all(isinstance(item, BaseModel) for item in value):
            return _rows(value)
        return ", ".join(str(item) for item in value) or "[dim]–[/]"
    if isinstance(value, bool):
        return "[green]yes[/]" if value else "[red]no[/]"
    return "[dim]–[/]" if value is None else str(value)


def _rows(items: list[BaseModel]) -> Table:
    table = Table()
    columns = list(type(items[0]).model_fields)
    for column in columns:
        table.add_column(column)
    for item in items:
        table.add_row(*(_cell(getattr(item, column)) for column in columns))
    return table


def render(model: BaseModel, title: str | None = None) -> Table:
    table = Table(title=title, show_header=False)
    table.add_column("Field", style="bold")
    table.add_column("Value")
    for name in type(model).model_fields:
        table.add_row(name, _cell(getattr(model, name)))
    return table


def emit(model: BaseModel, pretty: bool = False, title: str | None = None) -> None:
    """Print a payload: JSON by default, a rich table with ``--pretty``."""
    if pretty:
        console.print(render(model, title))
    else:
        typer.echo(model.model_dump_json(indent=2))
