"""Shared test fixtures for leavitt."""

import pytest

from leavitt.core.config import LeavittConfig
from leavitt.core.models.field import ScalarField
from leavitt.core.models.graph import Graph
from tests.factories import make_graph


@pytest.fixture
def config() -> LeavittConfig:
    """Config with defaults only."""
    return LeavittConfig()


@pytest.fixture
def rationals() -> ScalarField:
    return ScalarField.rationals()


@pytest.fixture
def r1() -> Graph:
    """One vertex v with a loop g."""
    return make_graph(["v"], [("g", "v", "v")])


@pytest.fixture
def toeplitz() -> Graph:
    """v with a loop f and an edge e to the sink w."""
    return make_graph(["v", "w"], [("f", "v", "v"), ("e", "v", "w")])


@pytest.fixture
def line2() -> Graph:
    """u -> v, v a sink."""
    return make_graph(["u", "v"], [("e", "u", "v")])


@pytest.fixture
def rose2() -> Graph:
    """Two loops e and f at v."""
    return make_graph(["v"], [("e", "v", "v"), ("f", "v", "v")])


@pytest.fixture
def bundle_graph() -> Graph:
    """w emits the bundle b into h and one edge c into u."""
    return make_graph(["h", "u", "w"], [("c", "w", "u")], [("b", "w", "h")])


@pytest.fixture
def bundle_loop() -> Graph:
    """v with a loop g and a bundle b into the sink h."""
    return make_graph(["h", "v"], [("g", "v", "v")], [("b", "v", "h")])


@pytest.fixture
def two_loops() -> Graph:
    return make_graph(["v1", "v2"], [("g1", "v1", "v1"), ("g2", "v2", "v2")])
