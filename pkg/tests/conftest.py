"""
Pytest configuration and shared fixtures for the eulervoigt test suite.
"""

import os

import numpy as np
import pytest

from eulervoigt.core.spectral import Grid
from eulervoigt.io.initial_conditions import (
    InitialConditionKind,
    InitialConditionSpec,
    generate_ic,
)

# Configure pytest-asyncio
pytest_plugins = ["pytest_asyncio"]


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "slow: marks acceptance-scale runs (skipped with EULERVOIGT_SKIP_SLOW)"
    )


def pytest_collection_modifyitems(config, items):
    """Skip acceptance-scale runs when EULERVOIGT_SKIP_SLOW is set."""
    if not os.getenv("EULERVOIGT_SKIP_SLOW"):
        return
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(
                pytest.mark.skip(reason="EULERVOIGT_SKIP_SLOW environment variable set")
            )


@pytest.fixture
def grid16():
    return Grid(16)


@pytest.fixture
def grid8():
    return Grid(8)


@pytest.fixture
def taylor_green16(grid16):
    return generate_ic(InitialConditionSpec(), grid16)


@pytest.fixture
def shear16(grid16):
    return generate_ic(InitialConditionSpec(kind=InitialConditionKind.SHEAR), grid16)


@pytest.fixture
def random_field16(grid16):
    return generate_ic(
        InitialConditionSpec(kind=InitialConditionKind.RANDOM_SOLENOIDAL, seed=7),
        grid16,
    )


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
