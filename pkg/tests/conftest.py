"""Shared factor sets for the test modules."""

import pytest

from bifix_lab.core.extensions import classify_set
from bifix_lab.lab.registry import default_registry


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture(scope="session")
def fibonacci(registry):
    return registry.get("fibonacci").build(40)


@pytest.fixture(scope="session")
def tribonacci(registry):
    return registry.get("tribonacci").build(32)


@pytest.fixture(scope="session")
def chacon(registry):
    return registry.get("chacon").build(40)


@pytest.fixture(scope="session")
def cassaigne(registry):
    return registry.get("cassaigne").build(16)


@pytest.fixture(scope="session")
def neutral_not_tree(registry):
    return registry.get("neutral-not-tree").build(12)


@pytest.fixture(scope="session")
def decoded(registry):
    """Fibonacci decoded by {a, baabaab, baabab, babaab} on letters x, y, z, t."""
    return registry.get("fibonacci-decoded").build(8)


@pytest.fixture(scope="session")
def fibonacci_verdict(fibonacci):
    return classify_set(fibonacci, 10)


@pytest.fixture(scope="session")
def chacon_verdict(chacon):
    return classify_set(chacon, 6)
