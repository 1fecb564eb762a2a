"""Shared fixtures for the test suite."""

import logging
import pytest
from ordconflict.client import Client
from ordconflict.solvers import SolveBudget

ENVIRONMENT_VARIABLES = (
    "ORDCONFLICT_BUDGET_NODES",
    "ORDCONFLICT_BUDGET_MS",
    "ORDCONFLICT_SEED",
    "ORDCONFLICT_WORKERS",
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Tests never see the caller's ORDCONFLICT_* settings."""
    for variable in ENVIRONMENT_VARIABLES:
        monkeypatch.delenv(variable, raising=False)


@pytest.fixture(autouse=True)
def reset_package_logger():
    """Undo the stderr handler the CLI installs."""
    yield

    package_logger = logging.getLogger("ordconflict")
    package_logger.handlers = []
    package_logger.setLevel(logging.NOTSET)
    package_logger.propagate = True


@pytest.fixture
def budget():
    """A node budget, so results do not depend on machine speed."""
    return SolveBudget(node_limit=10 ** 6)


@pytest.fixture
def client():
    return Client(budget_nodes=10 ** 6, budget_ms=None)
