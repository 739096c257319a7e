import numpy as np
import pytest

from paulimem import PauliChannel, density_matrix, state_vector
from paulimem.states import PureStateParams

ILLUSTRATION_Q = (0.2, 0.1, 0.3, 0.4)


def random_channel(rng, mu=None):
    """Random valid channel; Dirichlet keeps the probabilities normalized."""
    q = rng.dirichlet(np.ones(4))
    return PauliChannel(tuple(q), float(rng.uniform()) if mu is None else mu)


def random_params(rng):
    vals = rng.uniform(0.0, 2.0 * np.pi, 6)
    return PureStateParams(*(float(v) for v in vals))


def random_pure_density(rng):
    return density_matrix(state_vector(random_params(rng)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
