"""Transitive-module pipeline: cut drawing dimension below the graph width.

A block of vertices whose members share identical external predecessor and
successor sets under reachability can be drawn on its own and slotted into
a drawing of the quotient graph. The resulting dimension is the largest
width among the quotient and the per-block graphs, which is never larger
than the width of the whole graph and is often much smaller.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .channels import min_channel_decomposition, pad_decomposition, width
from .ctc import build_ctc
from .draw import DominanceDrawing, kd_draw
from .errors import (
    DimensionMismatch,
    InvalidPartition,
    MalformedInput,
    NotAPartition,
    ValidationReport,
    Violation,
)
from .graph import Dag, ReachMatrix, StGraph, reach_oracle


@dataclass(frozen=True)
class CongruencePartition:
    """Disjoint blocks covering the vertex set, each a transitive module."""

    blocks: tuple[tuple[str, ...], ...]

    @property
    def h(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_index(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for i, block in enumerate(self.blocks):
            for v in block:
                out[v] = i
        return out

    def to_json_obj(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json_obj(cls, obj) -> "CongruencePartition":
        try:
            blocks = obj["blocks"]
        except (TypeError, KeyError):
            raise MalformedInput("partition JSON must carry a 'blocks' list") from None
        if not isinstance(blocks, list) or not all(
            isinstance(b, list) and all(isinstance(v, str) for v in b) for b in blocks
        ):
            raise MalformedInput("partition JSON: 'blocks' must be lists of vertex ids")
        return cls(tuple(tuple(b) for b in blocks))


def _mu_name(i: int) -> str:
    return f"m{i}"


@dataclass(frozen=True)
class QuotientGraph:
    """Blocks merged to single vertices m0..m{h-1}, in block order."""

    st: StGraph
    partition: CongruencePartition

    @property
    def h(self) -> int:
        return self.partition.h

    def mu_of_block(self, i: int) -> str:
        return _mu_name(i)

    def block_of_mu(self, mu: str) -> tuple[str, ...]:
        return self.partition.blocks[int(mu[1:])]


@dataclass(frozen=True)
class ModuleInducedGraph:
    """Induced subgraph of one block, st-augmented with per-block endpoints."""

    st: StGraph
    members: tuple[str, ...]
    block_index: int


@dataclass(frozen=True)
class NeckProfile:
    """Widths and sizes of the quotient (first) and every block graph."""

    widths: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def w_n(self) -> int:
        return max(self.widths)

    @property
    def rho(self) -> int:
        return max(self.sizes)

    @property
    def w_rho(self) -> int:
        return max(w for w, s in zip(self.widths, self.sizes) if s == self.rho)

    def to_json_obj(self) -> dict:
        return {
            "widths": list(self.widths),
            "sizes": list(self.sizes),
            "w_n": self.w_n,
            "rho": self.rho,
            "w_rho": self.w_rho,
        }


def _strict_masks(r: ReachMatrix) -> tuple[list[int], list[int]]:
    succ = [r.rows[i] & ~(1 << i) for i in range(r.n)]
    pred = [r.cols[i] & ~(1 << i) for i in range(r.n)]
    return succ, pred


def _check_covering(g: StGraph, p: CongruencePartition) -> None:
    seen: set[str] = set()
    for block in p.blocks:
        if not block:
            raise NotAPartition("empty block")
        for v in block:
            if v in seen:
                raise NotAPartition(f"vertex {v!r} in more than one block")
            seen.add(v)
    universe = set(g.dag.vertex_ids)
    if seen != universe:
        missing = sorted(universe - seen) or sorted(seen - universe)
        raise NotAPartition(f"blocks do not match the vertex set: {missing}")


def validate_partition(g: StGraph, p: CongruencePartition) -> ValidationReport:
    """Check every block is a transitive module of g."""
    _check_covering(g, p)
    r = reach_oracle(g.dag)
    succ, pred = _strict_masks(r)
    idx = g.dag.index
    violations: list[Violation] = []
    for bi, block in enumerate(p.blocks):
        block_mask = 0
        for v in block:
            block_mask |= 1 << idx[v]
        outside = ~block_mask
        first = block[0]
        fs = succ[idx[first]] & outside
        fp = pred[idx[first]] & outside
        for v in block[1:]:
            vs = succ[idx[v]] & outside
            vp = pred[idx[v]] & outside
            for kind, diff in (("successor", fs ^ vs), ("predecessor", fp ^ vp)):
                if diff:
                    witness = g.dag.vertex_ids[(diff & -diff).bit_length() - 1]
                    violations.append(
                        Violation(
                            "module",
                            f"block {bi}: {first!r} and {v!r} differ on external "
                            f"{kind} {witness!r}",
                        )
                    )
    return ValidationReport(tuple(violations))


def find_congruence_partition(g: StGraph) -> CongruencePartition:
    """Group vertices whose external reachability neighborhoods coincide.

    Two vertices relate when their strict successor and predecessor sets
    under reachability differ at most by each other; connected components
    of the relation are transitive modules (overlapping modules merge into
    modules), so the components form a congruence partition.
    """
    n = g.dag.n
    if n == 0:
        return CongruencePartition(())
    r = reach_oracle(g.dag)
    succ, pred = _strict_masks(r)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            pair = ~((1 << i) | (1 << j))
            if (succ[i] ^ succ[j]) & pair == 0 and (pred[i] ^ pred[j]) & pair == 0:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    blocks = tuple(
        tuple(g.dag.vertex_ids[i] for i in members)
        for members in sorted(groups.values(), key=lambda ms: ms[0])
    )
    partition = CongruencePartition(blocks)
    if not validate_partition(g, partition).ok:
        partition = CongruencePartition(tuple((v,) for v in g.dag.vertex_ids))
    return partition


def _require_valid(g: StGraph, p: CongruencePartition) -> None:
    report = validate_partition(g, p)
    if not report.ok:
        raise InvalidPartition(str(report))


def quotient_graph(g: StGraph, p: CongruencePartition) -> QuotientGraph:
    """Merge each block into one vertex; edges follow the crossing edges."""
    _require_valid(g, p)
    bidx = p.block_index
    names = [_mu_name(i) for i in range(p.h)]
    edges: list[tuple[str, str]] = []
    edge_set: set[tuple[int, int]] = set()
    for u, v in g.dag.edges():
        bu, bv = bidx[u], bidx[v]
        if bu != bv and (bu, bv) not in edge_set:
            edge_set.add((bu, bv))
            edges.append((names[bu], names[bv]))
    dag = Dag.from_edges(names, edges)
    source = names[bidx[g.source]]
    sink = names[bidx[g.sink]]
    only_source = [m for i, m in enumerate(names) if not dag.in_adj[i]]
    only_sink = [m for i, m in enumerate(names) if not dag.out_adj[i]]
    if only_source != [source] or only_sink != [sink]:
        raise InvalidPartition("quotient is not an st-graph")
    return QuotientGraph(StGraph(dag, source, sink), p)


def module_induced_graphs(
    g: StGraph, p: CongruencePartition
) -> tuple[ModuleInducedGraph, ...]:
    """Induced subgraph per block, augmented with virtual endpoints.

    A block containing the global source keeps it and gains only a virtual
    sink; a block containing the global sink gains only a virtual source;
    every other proper block gains both. The block equal to the whole
    vertex set is the graph itself and gains nothing.
    """
    _require_valid(g, p)
    out: list[ModuleInducedGraph] = []
    for bi, block in enumerate(p.blocks):
        members = tuple(sorted(block, key=g.dag.index_of))
        member_set = set(members)
        has_source = g.source in member_set
        has_sink = g.sink in member_set
        edges = [(u, v) for u, v in g.dag.edges() if u in member_set and v in member_set]
        if has_source and has_sink:
            out.append(ModuleInducedGraph(g, members, bi))
            continue
        targets = {v for _, v in edges}
        origins = {u for u, _ in edges}
        internal_sources = [v for v in members if v not in targets]
        internal_sinks = [v for v in members if v not in origins]
        vertices = list(members)
        v_source = f"__S{bi}"
        v_sink = f"__T{bi}"
        if has_source:
            source, virtual_source = g.source, False
        else:
            vertices.append(v_source)
            edges.extend((v_source, v) for v in internal_sources)
            source, virtual_source = v_source, True
        if has_sink:
            sink, virtual_sink = g.sink, False
        else:
            vertices.append(v_sink)
            edges.extend((v, v_sink) for v in internal_sinks)
            sink, virtual_sink = v_sink, True
        dag = Dag.from_edges(vertices, edges)
        st = StGraph(dag, source, sink, virtual_source, virtual_sink)
        out.append(ModuleInducedGraph(st, members, bi))
    return tuple(out)


def dimensional_neck(
    quotient: QuotientGraph, members: Sequence[ModuleInducedGraph]
) -> NeckProfile:
    """Widths of the quotient and all block graphs; the max is the neck."""
    widths = [width(quotient.st)] + [width(m.st) for m in members]
    sizes = [quotient.h] + [len(m.members) for m in members]
    return NeckProfile(tuple(widths), tuple(sizes))


def drawings_computation(
    quotient: QuotientGraph,
    members: Sequence[ModuleInducedGraph],
    k_target: int | None = None,
) -> tuple[DominanceDrawing, ...]:
    """Dominance drawing of the quotient and every block, all k_target-dimensional.

    Each graph gets its minimum channel decomposition padded with empty
    (source, sink) channels up to the common dimension, then the standard
    coordinate assignment.
    """
    if k_target is None:
        k_target = dimensional_neck(quotient, members).w_n
    drawings: list[DominanceDrawing] = []
    for st in [quotient.st] + [m.st for m in members]:
        d = pad_decomposition(min_channel_decomposition(st), k_target)
        drawings.append(kd_draw(st, d, build_ctc(st, d)))
    return tuple(drawings)


def _extents(drawing: DominanceDrawing) -> tuple[int, ...]:
    # Sink coordinate per dimension; equals the per-dimension maximum
    # because the sink dominates every vertex.
    return tuple(
        max(c[dim] for c in drawing.coords.values()) for dim in range(drawing.k)
    )


def shifter(
    gamma0: DominanceDrawing,
    member_drawings: Sequence[DominanceDrawing],
    quotient_reach: ReachMatrix,
) -> DominanceDrawing:
    """Open room in the quotient drawing for every block drawing.

    In each dimension a quotient vertex moves up by the extent of every
    other block drawing placed below it (strictly lower coordinate, or
    equal coordinate with reachability into it). Evaluated as a closed
    form on the original coordinates, so the outcome is order-independent.
    """
    mu_names = list(gamma0.coords)
    if len(mu_names) != len(member_drawings):
        raise DimensionMismatch(
            f"{len(member_drawings)} block drawings for {len(mu_names)} quotient vertices"
        )
    for md in member_drawings:
        if md.k != gamma0.k:
            raise DimensionMismatch(f"block drawing has k={md.k}, quotient k={gamma0.k}")
    ext = [_extents(md) for md in member_drawings]
    new_coords: dict[str, tuple[int, ...]] = {}
    for j, mu_j in enumerate(mu_names):
        old_j = gamma0.coords[mu_j]
        shifted = []
        for dim in range(gamma0.k):
            shift = 0
            for i, mu_i in enumerate(mu_names):
                if i == j:
                    continue
                ci, cj = gamma0.coords[mu_i][dim], old_j[dim]
                if ci < cj or (ci == cj and quotient_reach.reaches(mu_i, mu_j)):
                    shift += ext[i][dim]
            shifted.append(old_j[dim] + shift)
        new_coords[mu_j] = tuple(shifted)
    return DominanceDrawing(gamma0.k, new_coords, gamma0.provenance)


def nd_draw(g: StGraph, p: CongruencePartition) -> DominanceDrawing:
    """Full pipeline: quotient and block drawings, shifting, insertion.

    Every vertex lands at the shifted position of its block's quotient
    vertex plus its position inside the block drawing; quotient vertices
    and virtual block endpoints do not appear in the result.
    """
    quotient = quotient_graph(g, p)
    members = module_induced_graphs(g, p)
    profile = dimensional_neck(quotient, members)
    drawings = drawings_computation(quotient, members, k_target=profile.w_n)
    shifted = shifter(
        drawings[0], drawings[1:], reach_oracle(quotient.st.dag)
    )
    placed: dict[str, tuple[int, ...]] = {}
    for member, gamma in zip(members, drawings[1:]):
        base = shifted.coords[_mu_name(member.block_index)]
        for v in member.members:
            inner = gamma.coords[v]
            placed[v] = tuple(b + c for b, c in zip(base, inner))
    return DominanceDrawing(
        k=profile.w_n,
        coords={v: placed[v] for v in g.dag.vertex_ids},
        provenance="nd",
    )
