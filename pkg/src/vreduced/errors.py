"""Exception hierarchy.

Every domain error derives from :class:`DivisorError` (itself a ``ValueError``),
so the CLI can map the whole family to exit status 1.
"""

from __future__ import annotations

from collections.abc import Iterable


class DivisorError(ValueError):
    """Base class for all domain errors raised by this package."""

    #: machine-readable error kind used in the CLI's JSON error payload
    kind = "divisor_error"

    def to_json(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class MalformedInput(DivisorError):
    kind = "malformed_input"


class DuplicateVertexId(DivisorError):
    kind = "duplicate_vertex_id"


class UnknownEndpoint(DivisorError):
    kind = "unknown_endpoint"


class Disconnected(DivisorError):
    kind = "disconnected"


class NegativeWeight(DivisorError):
    kind = "negative_weight"


class UnknownVertex(DivisorError):
    kind = "unknown_vertex"


class EmptyTargetSet(DivisorError):
    kind = "empty_target_set"


class EmptyVertexSet(DivisorError):
    kind = "empty_vertex_set"


class NotEffectiveAwayFrom(DivisorError):
    kind = "not_effective_away_from"

    def __init__(self, offending: Iterable[str]):
        self.offending = list(offending)
        super().__init__(f"divisor is negative outside the vertex set at {self.offending}")

    def to_json(self) -> dict:
        return {**super().to_json(), "offending": self.offending}


class NotNormalized(DivisorError):
    kind = "not_normalized"


class DegreeMismatch(DivisorError):
    kind = "degree_mismatch"


class VertexInSet(DivisorError):
    kind = "vertex_in_set"


class SupportViolation(DivisorError):
    kind = "support_violation"


class NotSpecialClass(DivisorError):
    kind = "not_special_class"


class WrongGraph(DivisorError):
    kind = "wrong_graph"


class GraphMismatch(DivisorError):
    """Two vertex functions living on different graphs were combined."""

    kind = "graph_mismatch"


class InvariantViolation(RuntimeError):
    """An internal certificate check failed; indicates a bug, not bad input."""
