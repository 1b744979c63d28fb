import pytest

from reslat import (
    ChainFlags,
    disconnected_rotation,
    enumerate_chains,
    godel,
    lukasiewicz,
    trivial,
    two,
    vs_a,
    vs_b,
    vs_c,
    vs_formation,
)

from oracles import naive_chains


@pytest.fixture(scope="session")
def vs():
    return vs_formation()


@pytest.fixture(scope="session")
def small_chain_pool():
    """Every integral residuated chain of size <= 4, plus the VS chains and a
    couple of rotations; the shared corpus for property tests."""
    pool = []
    for n in (1, 2, 3, 4):
        pool.extend(enumerate_chains(n, ChainFlags(integral=True)))
    pool += [vs_a(), vs_b(), vs_c()]
    pool += [disconnected_rotation(a) for a in (two(), godel(3), lukasiewicz(3))]
    return pool


@pytest.fixture(scope="session")
def builtin_chains():
    return [trivial(), two(), lukasiewicz(3), lukasiewicz(4), godel(3), godel(4), vs_a(), vs_b(), vs_c()]


@pytest.fixture(scope="session")
def naive_ci4():
    return set(naive_chains(4, integral=True, commutative=True))


@pytest.fixture(scope="session")
def naive_i4():
    return set(naive_chains(4, integral=True, commutative=False))
