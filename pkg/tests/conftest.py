"""
Pytest configuration and fixtures for testing.
"""
import os

os.environ.setdefault('QLIE_ENV', 'testing')

import numpy as np
import pytest

from algebra.qlie import make_quantum_lie_algebra
from algebra.uq import make_algebra


@pytest.fixture(scope='session')
def sl2():
    """Certified U_q(sl 2), shared across the session."""
    return make_algebra(2)


@pytest.fixture(scope='session')
def sl3():
    """Certified U_q(sl 3)."""
    return make_algebra(3)


@pytest.fixture(scope='session')
def sl4():
    """Certified U_q(sl 4); only slow tests use it."""
    return make_algebra(4)


@pytest.fixture(scope='session')
def qla2():
    """The three-dimensional quantum Lie algebra for sl2."""
    return make_quantum_lie_algebra(2)


@pytest.fixture(scope='session')
def qla3():
    """The eight-dimensional quantum Lie algebra for sl3."""
    return make_quantum_lie_algebra(3)


@pytest.fixture
def rng():
    """Seeded generator for randomised checks."""
    return np.random.default_rng(12345)
