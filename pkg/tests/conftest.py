import pytest

from domdraw import CongruencePartition, parse_edge_list, to_st_graph

CHAIN3_TEXT = "s v\nv t\n"
DIAMOND_TEXT = "s a\ns b\na t\nb t\n"
W3_TEXT = "s a\ns b\ns c\na t\nb t\nc t\n"
MODG_TEXT = W3_TEXT  # same edges; used with a block partition attached


@pytest.fixture
def chain3():
    return parse_edge_list(CHAIN3_TEXT)


@pytest.fixture
def chain3_st(chain3):
    return to_st_graph(chain3)


@pytest.fixture
def diamond():
    return parse_edge_list(DIAMOND_TEXT)


@pytest.fixture
def diamond_st(diamond):
    return to_st_graph(diamond)


@pytest.fixture
def w3():
    return parse_edge_list(W3_TEXT)


@pytest.fixture
def w3_st(w3):
    return to_st_graph(w3)


@pytest.fixture
def modg_st(w3_st):
    return w3_st


@pytest.fixture
def modg_partition():
    return CongruencePartition((("s",), ("a", "b"), ("c",), ("t",)))
