"""
Shared fixtures for the frtlab test suite
"""

import sys
from pathlib import Path

import pytest

# Add the project root to the path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from src.frt_lab.algebra.scalar_field import GAUSSIAN, RATIONAL, ScalarSampler  # noqa: E402
from src.frt_lab.core.config.run_config import RunConfig  # noqa: E402


@pytest.fixture
def q():
    return RATIONAL.from_ints(3)


@pytest.fixture
def qi():
    return GAUSSIAN.from_ints(0, 1, 1)


@pytest.fixture
def sampler(q):
    return ScalarSampler(1234, RATIONAL, q=q)


@pytest.fixture
def ff_sampler():
    return ScalarSampler(4321, RATIONAL)


@pytest.fixture
def small_config(tmp_path):
    """Reduced sample counts so full suites stay quick"""
    return RunConfig(
        seed=7,
        samples={"ybe": 4, "gamma": 10, "frt": 1, "duality": 1, "slqhat": 1, "aff": 1, "reduce_controls": 2},
        degree_cap=4,
    )
