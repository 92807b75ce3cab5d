"""Reachability-index facade over a dominance drawing.

Once a drawing is certified (or produced by one of the drawing
algorithms), reachability between two vertices is k integer comparisons
with no false positives: u reaches v exactly when every coordinate of u
is <= the matching coordinate of v.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .draw import DominanceDrawing
from .errors import EmptyDrawing, UnknownVertex


@dataclass(frozen=True)
class ReachIndex:
    drawing: DominanceDrawing

    @property
    def k(self) -> int:
        return self.drawing.k

    @property
    def n(self) -> int:
        return self.drawing.n


def build_index(drawing: DominanceDrawing) -> ReachIndex:
    if not drawing.coords:
        raise EmptyDrawing("drawing holds no vertices")
    return ReachIndex(drawing)


def query(index: ReachIndex, u: str, v: str) -> bool:
    """True iff u's point dominates into v's: at most k comparisons."""
    coords = index.drawing.coords
    try:
        cu = coords[u]
    except KeyError:
        raise UnknownVertex(f"unknown vertex {u!r}") from None
    try:
        cv = coords[v]
    except KeyError:
        raise UnknownVertex(f"unknown vertex {v!r}") from None
    return all(a <= b for a, b in zip(cu, cv))


def batch_query(
    index: ReachIndex, pairs: Sequence[tuple[str, str]]
) -> list[bool]:
    """Element-wise queries; evaluation order cannot affect the answers."""
    out: list[bool] = []
    for pos, (u, v) in enumerate(pairs):
        try:
            out.append(query(index, u, v))
        except UnknownVertex as exc:
            raise UnknownVertex(f"pair {pos}: {exc}") from None
    return out
