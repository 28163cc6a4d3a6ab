"""
Shared pytest fixtures.

Finding a torus costs a few hundred quadratures, so tori are cached per
(μ, c, k, l) for the whole session.
"""

from functools import lru_cache

import pytest

from twocenter_invariants.numerics.dynamics import find_torus
from twocenter_invariants.numerics.types import EulerParams


@lru_cache(maxsize=None)
def _cached_torus(mu: float, c: float, k: int, l: int):
    return find_torus(EulerParams(mu=mu, c=c), k, l)


@pytest.fixture(scope="session")
def torus_for():
    """Callable (k, l, mu=0.5, c=-0.5) -> TorusData, cached across tests."""

    def get(k: int, l: int, mu: float = 0.5, c: float = -0.5):
        return _cached_torus(mu, c, k, l)

    return get


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full parameter sweeps (deselect with -m 'not slow')")
