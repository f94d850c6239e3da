import pytest
from helpers import BRIDGE_TEXT, M3_TEXT, THRESHOLD8_TEXT, TRIANGLE_TEXT

from mstplan import parse_graph


@pytest.fixture
def triangle():
    return parse_graph(TRIANGLE_TEXT)


@pytest.fixture
def threshold8():
    return parse_graph(THRESHOLD8_TEXT)


@pytest.fixture
def bridge4():
    return parse_graph(BRIDGE_TEXT)


@pytest.fixture
def multi3():
    return parse_graph(M3_TEXT)
