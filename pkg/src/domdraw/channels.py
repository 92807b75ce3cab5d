"""Channel decompositions: minimum chain covers that fix the drawing dimension.

A channel is a sequence of vertices totally ordered by reachability (not
necessarily an edge path). A decomposition puts the source and sink into
every channel and every other vertex into exactly one; the minimum number
of channels equals the width of the graph (maximum antichain size), so the
cover is computed as a maximum bipartite matching on the strict
reachability relation restricted to the non-endpoint vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import TargetSmallerThanSize, UnknownVertex, ValidationReport, Violation
from .graph import ReachMatrix, StGraph, reach_oracle


@dataclass(frozen=True)
class Channel:
    index: int
    vertices: tuple[str, ...]

    @cached_property
    def position(self) -> dict[str, int]:
        return {v: j for j, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ChannelDecomposition:
    """Ordered channels; channel indices and positions are 0-based."""

    channels: tuple[Channel, ...]

    @property
    def size(self) -> int:
        return len(self.channels)

    k = size

    @property
    def source(self) -> str:
        return self.channels[0].vertices[0]

    @property
    def sink(self) -> str:
        return self.channels[0].vertices[-1]

    @cached_property
    def membership(self) -> dict[str, tuple[int, int]]:
        """Home (channel, position) of every vertex other than source/sink."""
        skip = {self.source, self.sink}
        out: dict[str, tuple[int, int]] = {}
        for ch in self.channels:
            for j, v in enumerate(ch.vertices):
                if v not in skip:
                    out[v] = (ch.index, j)
        return out

    def home(self, v: str) -> tuple[int, int]:
        """Canonical (channel, position) of v; endpoints resolve to channel 0."""
        if v == self.source:
            return (0, 0)
        if v == self.sink:
            return (0, len(self.channels[0]) - 1)
        try:
            return self.membership[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v!r} not covered by decomposition") from None

    def position_in(self, i: int, v: str) -> int | None:
        return self.channels[i].position.get(v)

    def vertices(self) -> frozenset[str]:
        return frozenset(v for ch in self.channels for v in ch.vertices)

    def to_json_obj(self, exclude: frozenset[str] = frozenset()) -> dict:
        return {
            "k": self.size,
            "channels": [
                [v for v in ch.vertices if v not in exclude] for ch in self.channels
            ],
        }


def _matching_chain_cover(core: list[str], r: ReachMatrix) -> list[list[str]]:
    """Minimum chain cover of the strict order on core, via Kuhn matching.

    Left copy u and right copy v are adjacent iff u strictly reaches v;
    matched edges link consecutive chain elements. Augmenting searches
    visit vertices in index order, which makes the cover deterministic.
    """
    adj: dict[str, list[str]] = {
        u: [v for v in core if u != v and r.reaches(u, v)] for u in core
    }
    match_right: dict[str, str] = {}  # right vertex -> left vertex
    match_left: dict[str, str] = {}

    def augment(u: str, visited: set[str]) -> bool:
        for v in adj[u]:
            if v in visited:
                continue
            visited.add(v)
            if v not in match_right or augment(match_right[v], visited):
                match_right[v] = u
                match_left[u] = v
                return True
        return False

    for u in core:
        augment(u, set())

    heads = [v for v in core if v not in match_right]
    chains = []
    for head in heads:
        chain = [head]
        while chain[-1] in match_left:
            chain.append(match_left[chain[-1]])
        chains.append(chain)
    return chains


def min_channel_decomposition(g: StGraph) -> ChannelDecomposition:
    """Decomposition of minimum size; the size realizes the graph width."""
    s, t = g.source, g.sink
    if s == t:
        return ChannelDecomposition((Channel(0, (s,)),))
    core = [v for v in g.dag.vertex_ids if v != s and v != t]
    if not core:
        return ChannelDecomposition((Channel(0, (s, t)),))
    r = reach_oracle(g.dag)
    chains = _matching_chain_cover(core, r)
    return ChannelDecomposition(
        tuple(
            Channel(i, (s, *chain, t)) for i, chain in enumerate(chains)
        )
    )


def width(g: StGraph) -> int:
    """Maximum antichain size, read off the minimum channel decomposition."""
    return min_channel_decomposition(g).size


def validate_decomposition(g: StGraph, d: ChannelDecomposition) -> ValidationReport:
    """Check channel ordering, endpoint membership, and exact coverage."""
    violations: list[Violation] = []
    r = reach_oracle(g.dag)
    known = set(g.dag.vertex_ids)
    s, t = g.source, g.sink
    for ch in d.channels:
        if not ch.vertices:
            violations.append(Violation("endpoint", f"channel {ch.index} is empty"))
            continue
        if ch.vertices[0] != s:
            violations.append(
                Violation("endpoint", f"channel {ch.index} does not start at {s!r}")
            )
        if ch.vertices[-1] != t:
            violations.append(
                Violation("endpoint", f"channel {ch.index} does not end at {t!r}")
            )
        for v in ch.vertices:
            if v not in known:
                violations.append(
                    Violation("unknown", f"channel {ch.index} contains {v!r}")
                )
        for a, b in zip(ch.vertices, ch.vertices[1:]):
            if a not in known or b not in known:
                continue
            if a == b or not r.reaches(a, b):
                violations.append(
                    Violation(
                        "non-chain",
                        f"channel {ch.index}: {a!r} does not reach {b!r}",
                    )
                )
    counts: dict[str, int] = {}
    for ch in d.channels:
        for v in ch.vertices:
            if v in known and v != s and v != t:
                counts[v] = counts.get(v, 0) + 1
    for v in g.dag.vertex_ids:
        if v == s or v == t:
            continue
        c = counts.get(v, 0)
        if c == 0:
            violations.append(Violation("uncovered", f"vertex {v!r} in no channel"))
        elif c > 1:
            violations.append(
                Violation("duplicate", f"vertex {v!r} appears in {c} channels")
            )
    return ValidationReport(tuple(violations))


def pad_decomposition(
    d: ChannelDecomposition, k_target: int
) -> ChannelDecomposition:
    """Append empty (source, sink) channels until the size reaches k_target."""
    if k_target < d.size:
        raise TargetSmallerThanSize(
            f"target {k_target} below current size {d.size}"
        )
    if k_target == d.size:
        return d
    s, t = d.source, d.sink
    filler = (s,) if s == t else (s, t)
    extra = tuple(
        Channel(i, filler) for i in range(d.size, k_target)
    )
    return ChannelDecomposition(d.channels + extra)
