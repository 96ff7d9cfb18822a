"""leavitt CLI: main entry point."""

import typer

app = typer.Typer(
    name="leavitt",
    help="leavitt: ideals of Leavitt path algebras with exact certificates",
    no_args_is_help=True,
)


from leavitt.cli.commands import algebra as algebra_cmd
from leavitt.cli.commands import graph as graph_cmd
from leavitt.cli.commands import ideals as ideals_cmd

# Graph
app.command(name="check")(graph_cmd.check)
app.command(name="closure")(graph_cmd.closure)
app.command(name="breaking")(graph_cmd.breaking)
app.command(name="quotient")(graph_cmd.quotient)
app.command(name="condition-l")(graph_cmd.condition_l_cmd)
app.command(name="condition-k")(graph_cmd.condition_k_cmd)
app.command(name="admissible")(graph_cmd.admissible)

# Algebra
app.command(name="normal-form")(algebra_cmd.normal_form)
app.command(name="mul")(algebra_cmd.mul)
app.command(name="phi")(algebra_cmd.phi)
app.command(name="member")(algebra_cmd.member)

# Ideals
app.command(name="principal")(ideals_cmd.principal)


@app.command()
def version():
    """Show leavitt version."""
    from leavitt import __version__

    typer.echo(f"leavitt v{__version__}")


@app.callback()
def main():
    """
    leavitt: graphs, Leavitt path algebras and their ideals.

    Every command reads a graph document and prints JSON on stdout;
    add --pretty for tables. Errors go to stderr as a diagnostic.
    """


if __name__ == "__main__":
    app()
