"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from domdraw import Dag, to_st_graph


@st.composite
def dags(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    names = [f"v{i}" for i in range(n)]
    edges = []
    for j in range(n):
        for i in range(j):
            if draw(st.booleans()):
                edges.append((names[i], names[j]))
    return Dag.from_edges(names, edges)


@st.composite
def st_graphs(draw, min_n=1, max_n=10):
    return to_st_graph(draw(dags(min_n=min_n, max_n=max_n)))
