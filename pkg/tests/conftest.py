# ABOUTME: Pytest fixtures and configuration for autobots-graph-entropy tests.
# ABOUTME: Isolates every test from GRAPH_ENTROPY_* variables and the cached settings instance.

import os
from collections.abc import Generator

import pytest

from autobots_graph_entropy.configs.settings import reset_app_settings
from autobots_graph_entropy.domains.graph_model import GraphSpec, make_graph


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch, tmp_path) -> Generator[None, None, None]:
    """Clear GRAPH_ENTROPY_* env vars, skip any local .env file and drop cached settings."""
    for key in list(os.environ):
        if key.startswith("GRAPH_ENTROPY_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    reset_app_settings()
    yield
    reset_app_settings()


@pytest.fixture
def graph3() -> GraphSpec:
    return make_graph(3)


@pytest.fixture
def graph5() -> GraphSpec:
    return make_graph(5)
