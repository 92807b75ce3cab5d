"""Coordinate assignment and the dominance verifier.

A dominance drawing places each vertex at an integer point so that u
reaches v exactly when every coordinate of u is <= the matching
coordinate of v. Coordinates come straight from the compressed transitive
closure: dimension i of a vertex is the position of its projection onto
channel i (its own position, for its home channel).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .channels import ChannelDecomposition
from .ctc import CompressedTransitiveClosure
from .errors import (
    InvalidDecomposition,
    MalformedInput,
    MissingVertexCoordinates,
    ValidationReport,
    Violation,
)
from .graph import Dag, StGraph, reach_oracle


@dataclass(frozen=True)
class DominanceDrawing:
    k: int
    coords: Mapping[str, tuple[int, ...]]
    provenance: str  # "kd" | "nd" | "distinct"

    @property
    def n(self) -> int:
        return len(self.coords)

    def dominates(self, u: str, v: str) -> bool:
        cu, cv = self.coords[u], self.coords[v]
        return all(a <= b for a, b in zip(cu, cv))

    def restricted(self, keep) -> "DominanceDrawing":
        return DominanceDrawing(
            self.k,
            {v: c for v, c in self.coords.items() if v in keep},
            self.provenance,
        )

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "coords": {v: list(c) for v, c in self.coords.items()},
            "provenance": self.provenance,
        }

    @classmethod
    def from_json_obj(cls, obj) -> "DominanceDrawing":
        try:
            k = obj["k"]
            coords = obj["coords"]
            provenance = obj["provenance"]
        except (TypeError, KeyError) as exc:
            raise MalformedInput(f"drawing JSON missing key: {exc}") from None
        if not isinstance(k, int) or not isinstance(coords, dict):
            raise MalformedInput("drawing JSON: bad field types")
        parsed: dict[str, tuple[int, ...]] = {}
        for v, vec in coords.items():
            if (
                not isinstance(vec, list)
                or len(vec) != k
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in vec)
            ):
                raise MalformedInput(f"drawing JSON: bad coordinates for {v!r}")
            parsed[v] = tuple(vec)
        return cls(k, parsed, str(provenance))


def kd_draw(
    g: StGraph, d: ChannelDecomposition, ctc: CompressedTransitiveClosure
) -> DominanceDrawing:
    """Read the k-dimensional drawing off the projection table.

    Dimension i of vertex v is the position of its projection onto channel
    i, which for v's home channel is v's own position. The source lands at
    the origin and the sink at the per-channel maxima.
    """
    if ctc.decomposition is not d and ctc.decomposition != d:
        raise InvalidDecomposition("projection table built from a different decomposition")
    return DominanceDrawing(
        k=d.size,
        coords={v: ctc.table[v] for v in g.dag.vertex_ids},
        provenance="kd",
    )


def make_distinct(
    drawing: DominanceDrawing, topo: Sequence[str]
) -> DominanceDrawing:
    """Re-rank every dimension into a permutation of 0..n-1.

    Vertices are ordered by (old coordinate, topological position) per
    dimension; ties therefore break along a linear extension and the
    dominance relation is preserved while every column becomes a distinct
    linear extension of the reachability order.
    """
    topo_pos = {v: i for i, v in enumerate(topo)}
    missing = set(drawing.coords) ^ set(topo_pos)
    if missing:
        raise MissingVertexCoordinates(
            f"drawing and topological order disagree on {sorted(missing)}"
        )
    new_coords = {v: [0] * drawing.k for v in drawing.coords}
    for dim in range(drawing.k):
        ranked = sorted(
            drawing.coords, key=lambda v: (drawing.coords[v][dim], topo_pos[v])
        )
        for rank, v in enumerate(ranked):
            new_coords[v][dim] = rank
    return DominanceDrawing(
        k=drawing.k,
        coords={v: tuple(c) for v, c in new_coords.items()},
        provenance="distinct",
    )


def verify_dominance(g: Dag, drawing: DominanceDrawing) -> ValidationReport:
    """Certify that coordinate dominance matches reachability exactly."""
    missing = [v for v in g.vertex_ids if v not in drawing.coords]
    if missing:
        raise MissingVertexCoordinates(f"no coordinates for {missing}")
    r = reach_oracle(g)
    violations: list[Violation] = []
    ids = g.vertex_ids
    for u in ids:
        cu = drawing.coords[u]
        for v in ids:
            if u == v:
                continue
            cv = drawing.coords[v]
            dom = all(a <= b for a, b in zip(cu, cv))
            reach = r.reaches(u, v)
            if dom and not reach:
                violations.append(
                    Violation("false-dominance", f"{u!r} dominates {v!r} without a path")
                )
            elif reach and not dom:
                violations.append(
                    Violation("missing-dominance", f"path {u!r} -> {v!r} not dominated")
                )
            if u < v and cu == cv:
                violations.append(
                    Violation("coincident", f"{u!r} and {v!r} share point {cu}")
                )
    return ValidationReport(tuple(violations))
