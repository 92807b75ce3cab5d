"""DAG representation, st-augmentation, and the brute-force reachability oracles.

Vertices are opaque string tokens; internally each vertex gets a dense
integer index in first-appearance order. Reachability masks are Python
ints used as bitsets (bit j of row i set iff vertex i reaches vertex j).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleDetected,
    DuplicateEdge,
    MalformedLine,
    SelfLoop,
    TooLargeForOracle,
    UnknownVertex,
)

VIRTUAL_SOURCE = "__S"
VIRTUAL_SINK = "__T"
RESERVED_PREFIX = "__"

DEFAULT_ORACLE_LIMIT = 20


@dataclass(frozen=True)
class Dag:
    """Immutable DAG with adjacency in both directions.

    ``out_adj[i]`` / ``in_adj[i]`` hold the sorted dense indices of the
    successors / predecessors of vertex ``i``; ``in_adj`` is always the
    exact transpose of ``out_adj``.
    """

    vertex_ids: tuple[str, ...]
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]
    edge_count: int

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertex_ids)}

    def index_of(self, v: str) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def out_neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self.vertex_ids[j] for j in self.out_adj[self.index_of(v)])

    def in_neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self.vertex_ids[j] for j in self.in_adj[self.index_of(v)])

    def edges(self) -> Iterator[tuple[str, str]]:
        for i, targets in enumerate(self.out_adj):
            for j in targets:
                yield self.vertex_ids[i], self.vertex_ids[j]

    @classmethod
    def from_edges(
        cls, vertices: Sequence[str], edges: Iterable[tuple[str, str]]
    ) -> "Dag":
        """Build and validate a Dag; rejects self-loops, duplicates, cycles."""
        ids = tuple(vertices)
        index = {v: i for i, v in enumerate(ids)}
        if len(index) != len(ids):
            raise DuplicateEdge("duplicate vertex in vertex list")
        out: list[set[int]] = [set() for _ in ids]
        inn: list[set[int]] = [set() for _ in ids]
        count = 0
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop on {u!r}")
            ui, vi = index[u], index[v]
            if vi in out[ui]:
                raise DuplicateEdge(f"duplicate edge {u!r} -> {v!r}")
            out[ui].add(vi)
            inn[vi].add(ui)
            count += 1
        dag = cls(
            vertex_ids=ids,
            out_adj=tuple(tuple(sorted(s)) for s in out),
            in_adj=tuple(tuple(sorted(s)) for s in inn),
            edge_count=count,
        )
        dag._check_acyclic()
        return dag

    def _check_acyclic(self) -> None:
        indeg = [len(p) for p in self.in_adj]
        ready = [i for i, d in enumerate(indeg) if d == 0]
        seen = 0
        while ready:
            i = ready.pop()
            seen += 1
            for j in self.out_adj[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        if seen != self.n:
            leftovers = {i for i, d in enumerate(indeg) if d > 0}
            raise CycleDetected(self.vertex_ids[_vertex_on_cycle(self, leftovers)])


def _vertex_on_cycle(g: Dag, leftovers: set[int]) -> int:
    # Walk backwards inside the leftover set; after n steps a vertex repeats,
    # and the first repeated vertex lies on a cycle.
    cur = min(leftovers)
    seen: dict[int, int] = {}
    step = 0
    while cur not in seen:
        seen[cur] = step
        step += 1
        cur = next(p for p in g.in_adj[cur] if p in leftovers)
    return cur


def parse_edge_list(text: str) -> Dag:
    """Parse the edge-list format: one edge "u v" per line.

    Lines starting with '#' are comments, blank lines are skipped, and
    vertex tokens beginning with "__" are reserved for virtual vertices.
    """
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLine(line_no, f"expected two tokens, got {len(tokens)}")
        u, v = tokens
        for tok in (u, v):
            if tok.startswith(RESERVED_PREFIX):
                raise MalformedLine(line_no, f"reserved vertex name {tok!r}")
            if tok not in seen:
                seen.add(tok)
                vertices.append(tok)
        if u == v:
            raise SelfLoop(f"self-loop on {u!r} at line {line_no}")
        edges.append((u, v))
    return Dag.from_edges(vertices, edges)


@dataclass(frozen=True)
class StGraph:
    """A DAG with a unique source and a unique sink (possibly virtual)."""

    dag: Dag
    source: str
    sink: str
    virtual_source: bool = False
    virtual_sink: bool = False

    @property
    def n(self) -> int:
        return self.dag.n

    def virtual_ids(self) -> frozenset[str]:
        out = set()
        if self.virtual_source:
            out.add(self.source)
        if self.virtual_sink:
            out.add(self.sink)
        return frozenset(out)


def to_st_graph(g: Dag) -> StGraph:
    """Return g as an st-graph, adding virtual endpoints where needed."""
    sources = [v for v, preds in zip(g.vertex_ids, g.in_adj) if not preds]
    sinks = [v for v, succs in zip(g.vertex_ids, g.out_adj) if not succs]
    if g.n == 0:
        dag = Dag.from_edges(
            (VIRTUAL_SOURCE, VIRTUAL_SINK), [(VIRTUAL_SOURCE, VIRTUAL_SINK)]
        )
        return StGraph(dag, VIRTUAL_SOURCE, VIRTUAL_SINK, True, True)
    need_source = len(sources) != 1
    need_sink = len(sinks) != 1
    if not need_source and not need_sink:
        return StGraph(g, sources[0], sinks[0], False, False)
    vertices = list(g.vertex_ids)
    edges = list(g.edges())
    if need_source:
        vertices.append(VIRTUAL_SOURCE)
        edges.extend((VIRTUAL_SOURCE, v) for v in sources)
    if need_sink:
        vertices.append(VIRTUAL_SINK)
        edges.extend((v, VIRTUAL_SINK) for v in sinks)
    dag = Dag.from_edges(vertices, edges)
    return StGraph(
        dag,
        VIRTUAL_SOURCE if need_source else sources[0],
        VIRTUAL_SINK if need_sink else sinks[0],
        need_source,
        need_sink,
    )


def topological_order(g: Dag) -> tuple[str, ...]:
    """Kahn's algorithm with the frontier kept ordered by vertex id."""
    indeg = {v: len(g.in_adj[i]) for i, v in enumerate(g.vertex_ids)}
    frontier = [v for v, d in indeg.items() if d == 0]
    heapq.heapify(frontier)
    order: list[str] = []
    while frontier:
        v = heapq.heappop(frontier)
        order.append(v)
        for w in g.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(frontier, w)
    if len(order) != g.n:
        leftovers = {g.index[v] for v, d in indeg.items() if d > 0}
        raise CycleDetected(g.vertex_ids[_vertex_on_cycle(g, leftovers)])
    return tuple(order)


@dataclass(frozen=True)
class ReachMatrix:
    """Reflexive n x n reachability relation stored as per-vertex bitsets."""

    vertex_ids: tuple[str, ...]
    rows: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertex_ids)}

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """Transposed rows: bit i of cols[j] set iff i reaches j."""
        out = [0] * self.n
        for i, row in enumerate(self.rows):
            bit = 1 << i
            rem = row
            while rem:
                low = rem & -rem
                out[low.bit_length() - 1] |= bit
                rem ^= low
        return tuple(out)

    def reaches(self, u: str, v: str) -> bool:
        try:
            ui, vi = self.index[u], self.index[v]
        except KeyError as exc:
            raise UnknownVertex(f"unknown vertex {exc.args[0]!r}") from None
        return bool(self.rows[ui] >> vi & 1)

    def reaches_idx(self, ui: int, vi: int) -> bool:
        return bool(self.rows[ui] >> vi & 1)


def reach_oracle(g: Dag) -> ReachMatrix:
    """Full reachability by reverse-topological bitset propagation."""
    rows = [0] * g.n
    for v in reversed(topological_order(g)):
        i = g.index[v]
        mask = 1 << i
        for j in g.out_adj[i]:
            mask |= rows[j]
        rows[i] = mask
    return ReachMatrix(g.vertex_ids, tuple(rows))


def max_antichain_bruteforce(
    g: Dag, limit: int = DEFAULT_ORACLE_LIMIT
) -> frozenset[str]:
    """One maximum set of pairwise-incomparable vertices, by exhaustive search.

    Exponential-time oracle used to cross-check the matching-based chain
    cover; refuses graphs larger than ``limit`` vertices.
    """
    if g.n > limit:
        raise TooLargeForOracle(f"n={g.n} exceeds oracle limit {limit}")
    if g.n == 0:
        return frozenset()
    r = reach_oracle(g)
    comp = [
        (r.rows[i] | r.cols[i]) & ~(1 << i) for i in range(g.n)
    ]  # comparable in either direction
    memo: dict[int, int] = {}

    def best(cand: int) -> int:
        if cand == 0:
            return 0
        got = memo.get(cand)
        if got is not None:
            return got
        low = cand & -cand
        v = low.bit_length() - 1
        without = best(cand & ~low)
        with_v = low | best(cand & ~(low | comp[v]))
        pick = with_v if with_v.bit_count() >= without.bit_count() else without
        memo[cand] = pick
        return pick

    chosen = best((1 << g.n) - 1)
    return frozenset(
        g.vertex_ids[i] for i in range(g.n) if chosen >> i & 1
    )
