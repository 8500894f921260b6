import pytest

from catlab.cli import parse_ring_spec
from catlab.qu import PairPQ
from catlab.ring import make_zmod


@pytest.fixture(scope="session")
def z4():
    return make_zmod(4)


@pytest.fixture(scope="session")
def f4():
    return parse_ring_spec("Z/2[x]/(x^2+x+1)")


@pytest.fixture(scope="session")
def z4_21(z4):
    """The running example: Z/4 with p = 2, q = 1."""
    return PairPQ(z4, 2, 1)


@pytest.fixture(scope="session")
def z5_13():
    return PairPQ(make_zmod(5), 1, 3)
