import numpy as np
import pytest

from espent import random_haar_state


@pytest.fixture
def bell_state():
    return random_bell()


def random_bell():
    from espent import validate_state

    return validate_state(np.array([[1.0, 0.0], [0.0, 1.0]]) / np.sqrt(2.0))


def random_product_state(n, d, seed):
    from espent import validate_state

    rng = np.random.default_rng(seed)
    a = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    b = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return validate_state(np.outer(a, b), renormalize=True)


def random_states(count, n_range=(2, 8), d_range=(2, 8), seed0=0):
    out = []
    rng = np.random.default_rng(seed0)
    for k in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        d = int(rng.integers(d_range[0], d_range[1] + 1))
        out.append(random_haar_state(n, d, seed0 + 10_000 + k))
    return out
