"""Exception types and the shared validation-report shape."""

from __future__ import annotations

from dataclasses import dataclass


class DomDrawError(Exception):
    """Base class for every error raised by this package."""


class MalformedLine(DomDrawError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class SelfLoop(DomDrawError):
    pass


class DuplicateEdge(DomDrawError):
    pass


class CycleDetected(DomDrawError):
    def __init__(self, vertex: str):
        super().__init__(f"graph contains a cycle through {vertex!r}")
        self.vertex = vertex


class TooLargeForOracle(DomDrawError):
    pass


class TargetSmallerThanSize(DomDrawError):
    pass


class InvalidDecomposition(DomDrawError):
    pass


class UnknownVertex(DomDrawError):
    pass


class ChannelOutOfRange(DomDrawError):
    pass


class MissingVertexCoordinates(DomDrawError):
    pass


class NotAPartition(DomDrawError):
    pass


class InvalidPartition(DomDrawError):
    pass


class DimensionMismatch(DomDrawError):
    pass


class EmptyDrawing(DomDrawError):
    pass


class NotTwoDimensional(DomDrawError):
    pass


class MalformedInput(DomDrawError):
    """A JSON document (drawing, partition) does not match its schema."""


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural check; empty violations means valid."""

    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)
