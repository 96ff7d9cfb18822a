"""Shared fixtures for CLI tests."""

import json
import os

import pytest
from typer.testing import CliRunner

from leavitt.cli.main import app
from tests.factories import write_graph


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in list(os.environ):
        if name.startswith("LEAVITT_"):
            monkeypatch.delenv(name)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph fixture to ``<name>.json`` and return the path."""

    def write(graph, name: str = "graph") -> str:
        return write_graph(tmp_path / f"{name}.json", graph)

    return write


@pytest.fixture
def run(runner):
    """Invoke the app; returns the result and the parsed stdout when it is JSON."""

    def invoke(*args: str):
        result = runner.invoke(app, list(args))
        try:
            payload = json.loads(result.stdout)
        except ValueError:
            payload = None
        return result, payload

    return invoke
