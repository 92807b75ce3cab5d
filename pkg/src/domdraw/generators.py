"""Seeded graph generators for tests and experiments."""

from __future__ import annotations

import random

from .graph import Dag, StGraph, to_st_graph
from .modular import CongruencePartition


def random_dag(rng: random.Random, n: int, density: float) -> Dag:
    """DAG on n vertices; each forward pair becomes an edge with prob density."""
    names = [f"v{i}" for i in range(n)]
    edges = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return Dag.from_edges(names, edges)


def random_st_graph(rng: random.Random, n: int, density: float) -> StGraph:
    return to_st_graph(random_dag(rng, n, density))


def width2_dag(rng: random.Random, chain_len: int, cross_density: float) -> Dag:
    """Two interleaved chains with forward cross edges; width exactly two.

    Cross edges only jump strictly ahead (index i to index >= i+1 on the
    other chain), so the chain heads stay incomparable and the two chains
    keep covering the vertex set.
    """
    if chain_len < 1:
        raise ValueError("chain_len must be >= 1")
    a = [f"a{i}" for i in range(chain_len)]
    b = [f"b{i}" for i in range(chain_len)]
    edges = [(a[i], a[i + 1]) for i in range(chain_len - 1)]
    edges += [(b[i], b[i + 1]) for i in range(chain_len - 1)]
    for i in range(chain_len):
        for j in range(i + 1, chain_len):
            if rng.random() < cross_density:
                edges.append((a[i], b[j]))
            if rng.random() < cross_density:
                edges.append((b[i], a[j]))
    return Dag.from_edges(a + b, edges)


def modular_instance(
    rng: random.Random,
    max_blocks: int = 8,
    max_member: int = 8,
) -> tuple[StGraph, CongruencePartition]:
    """Random graph assembled from blocks, with its ground-truth partition.

    A random quotient DAG is expanded by substituting a random member DAG
    into each quotient vertex; quotient edges become complete bipartite
    connections, so every block is a transitive module by construction.
    Virtual endpoints added by st-augmentation join as singleton blocks.
    """
    h = rng.randint(2, max_blocks)
    quotient = random_dag(rng, h, rng.uniform(0.3, 0.8))
    member_names: list[list[str]] = []
    edges: list[tuple[str, str]] = []
    for b in range(h):
        size = rng.randint(1, max_member)
        names = [f"b{b}x{j}" for j in range(size)]
        member_names.append(names)
        density = rng.uniform(0.2, 0.8)
        edges += [
            (names[i], names[j])
            for i in range(size)
            for j in range(i + 1, size)
            if rng.random() < density
        ]
    for qu, qv in quotient.edges():
        bu = int(qu[1:])
        bv = int(qv[1:])
        edges += [(x, y) for x in member_names[bu] for y in member_names[bv]]
    vertices = [v for names in member_names for v in names]
    st = to_st_graph(Dag.from_edges(vertices, edges))
    blocks = [tuple(names) for names in member_names]
    blocks += [(v,) for v in sorted(st.virtual_ids())]
    return st, CongruencePartition(tuple(blocks))


def parallel_blocks_instance(
    num_blocks: int = 3, block_size: int = 2
) -> tuple[StGraph, CongruencePartition]:
    """Fan of antichain blocks between one source and one sink.

    The whole graph has width num_blocks * block_size while the quotient
    and each block graph have width max(num_blocks, block_size), so the
    block pipeline cuts the drawing dimension whenever both exceed one.
    """
    members = [
        [f"p{b}x{j}" for j in range(block_size)] for b in range(num_blocks)
    ]
    edges = []
    for names in members:
        for v in names:
            edges.append(("s", v))
            edges.append((v, "t"))
    vertices = ["s"] + [v for names in members for v in names] + ["t"]
    st = to_st_graph(Dag.from_edges(vertices, edges))
    blocks = [("s",)] + [tuple(names) for names in members] + [("t",)]
    return st, CongruencePartition(tuple(blocks))
