import numpy as np
import pytest

from lplab.grid import GridSpec
from lplab.spectral import band_signal


@pytest.fixture(scope="session")
def grid():
    return GridSpec(4096, 32)


@pytest.fixture(scope="session")
def small_grid():
    return GridSpec(64, 16)


@pytest.fixture(scope="session")
def f1(grid):
    return band_signal(grid, 0.0, 1.0)


@pytest.fixture(scope="session")
def f4(grid):
    return band_signal(grid, 0.0, 4.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def sup_rel(a, b):
    """max |a - b| / max |b|"""
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b)) / np.max(np.abs(b)))
