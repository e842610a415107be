import numpy as np
import pytest

from turan_kp3.log import set_verbose


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture(autouse=True)
def quiet():
    set_verbose(False)
    yield
    set_verbose(False)
