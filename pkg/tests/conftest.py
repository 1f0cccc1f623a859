import pathlib

import pytest

from mpgsolver import parse_arena

DATA = pathlib.Path(__file__).parent / "data"


def load(name):
    return parse_arena((DATA / name).read_bytes())


@pytest.fixture
def gamma_ex():
    """Two cycles of mean -1; Player 0's only real choice is at E."""
    return load("gamma_ex.mpg")


@pytest.fixture
def gamma_d():
    """Degenerate 11-vertex arena, value 0 everywhere."""
    return load("gamma_d.mpg")


@pytest.fixture
def nonpositional():
    """Arena whose truncated-game optimal moves are history dependent."""
    return load("nonpositional.mpg")


@pytest.fixture
def data_dir():
    return DATA
