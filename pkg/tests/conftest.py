import numpy as np
import pytest

from ratline import MobiusMap


@pytest.fixture
def unit_map():
    return MobiusMap(1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def gaussian(x):
    return np.exp(-np.asarray(x) ** 2)
