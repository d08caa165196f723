import pytest

from layerhom.config import CONFIG_ENV, Config, set_config
from layerhom.fields import PrimeField, Rationals
from layerhom.generators import (boolean_graph, cassidy_shelton,
                                 complete_layered)
from layerhom.graph import LayeredGraph
from layerhom.series import window_betti


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    config = set_config(Config())
    yield config
    set_config(None)
    window_betti.clear()


@pytest.fixture
def chain():
    """a -> b -> *"""
    return LayeredGraph({'a': 2, 'b': 1, '*': 0}, [('a', 'b'), ('b', '*')])


@pytest.fixture
def theta2():
    return boolean_graph(2)


@pytest.fixture
def theta3():
    return boolean_graph(3)


@pytest.fixture
def c221():
    return complete_layered(2, 2, 1)


@pytest.fixture
def cs():
    return cassidy_shelton()


@pytest.fixture
def cs_deleted():
    return cassidy_shelton(delete_b3_c2=True)


@pytest.fixture
def split_bottoms():
    """
    ``a`` covers ``b1`` and ``b2`` which sit over different bottoms, so the
    tail ``a`` is not uniform.
    """
    return LayeredGraph(
        {'a': 2, 'b1': 1, 'b2': 1, 'z1': 0, 'z2': 0},
        [('a', 'b1'), ('a', 'b2'), ('b1', 'z1'), ('b2', 'z2')])


@pytest.fixture
def q():
    return Rationals()


@pytest.fixture
def f2():
    return PrimeField(2)
