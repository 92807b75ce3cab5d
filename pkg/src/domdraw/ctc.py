"""Compressed transitive closure: the k x n table of channel projections.

The projection of a vertex u onto a channel C is the lowest-position
vertex of C reachable from u (u itself when u is in C). Storing all
projections takes k*n integers and answers reachability in O(1) per
(vertex, channel) pair, which is what the coordinate assignment consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .channels import ChannelDecomposition, validate_decomposition
from .errors import ChannelOutOfRange, InvalidDecomposition, UnknownVertex
from .graph import StGraph, topological_order


@dataclass(frozen=True)
class CompressedTransitiveClosure:
    decomposition: ChannelDecomposition
    table: Mapping[str, tuple[int, ...]]  # vertex -> projection position per channel
    edge_visits: int

    @property
    def k(self) -> int:
        return self.decomposition.size

    @property
    def n(self) -> int:
        return len(self.table)

    def to_json_obj(self, exclude: frozenset[str] = frozenset()) -> dict:
        return {
            "k": self.k,
            "proj": {v: list(row) for v, row in self.table.items() if v not in exclude},
        }


def build_ctc(g: StGraph, d: ChannelDecomposition) -> CompressedTransitiveClosure:
    """One reverse-topological pass per channel; O(k*m) edge visits total.

    For a channel member the projection is the vertex itself; for anyone
    else it is the minimum projection position among direct successors.
    """
    report = validate_decomposition(g, d)
    if not report.ok:
        raise InvalidDecomposition(str(report))
    rev_topo = tuple(reversed(topological_order(g.dag)))
    per_vertex: dict[str, list[int]] = {v: [0] * d.size for v in g.dag.vertex_ids}
    visits = 0
    for ch in d.channels:
        pos = ch.position
        proj: dict[str, int] = {}
        for v in rev_topo:
            own = pos.get(v)
            if own is not None:
                proj[v] = own
            else:
                succs = g.dag.out_neighbors(v)
                visits += len(succs)
                proj[v] = min(proj[w] for w in succs)
            per_vertex[v][ch.index] = proj[v]
    return CompressedTransitiveClosure(
        decomposition=d,
        table={v: tuple(row) for v, row in per_vertex.items()},
        edge_visits=visits,
    )


def projection(
    ctc: CompressedTransitiveClosure, v: str, i: int
) -> tuple[int, int]:
    """(channel, position) of the projection of v onto channel i."""
    if v not in ctc.table:
        raise UnknownVertex(f"unknown vertex {v!r}")
    if not 0 <= i < ctc.k:
        raise ChannelOutOfRange(f"channel {i} out of range for k={ctc.k}")
    return (i, ctc.table[v][i])


def reach_ctc(ctc: CompressedTransitiveClosure, u: str, v: str) -> bool:
    """Exact reachability: compare u's projection with v's home position."""
    if u not in ctc.table:
        raise UnknownVertex(f"unknown vertex {u!r}")
    if v not in ctc.table:
        raise UnknownVertex(f"unknown vertex {v!r}")
    i, j = ctc.decomposition.home(v)
    return ctc.table[u][i] <= j
