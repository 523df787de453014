"""Divisors and vertex functions on a :class:`~vreduced.graph.Graph`.

Four value types share one representation (a tuple aligned with the graph's
vertex order): integer :class:`Divisor` and :class:`FiringScript`, and their
exact-rational counterparts :class:`RDivisor` and :class:`RFunction`.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeVar

from .errors import GraphMismatch, MalformedInput, NotNormalized, UnknownVertex
from .graph import Graph, VertexId
from .linalg import solve_pinned

V = TypeVar("V", bound="VertexMap")


@dataclass(frozen=True)
class VertexMap:
    """A total map from the vertices of ``graph`` to numbers."""

    graph: Graph
    values: tuple

    integral = True

    def __post_init__(self):
        vals = self.values
        if isinstance(vals, Mapping):
            vals = _from_mapping(self.graph, vals)
        vals = tuple(vals)
        if len(vals) != len(self.graph):
            raise MalformedInput(
                f"expected {len(self.graph)} values, got {len(vals)}")
        object.__setattr__(self, "values", tuple(self._coerce(x) for x in vals))

    @classmethod
    def _coerce(cls, x):
        if cls.integral:
            if isinstance(x, bool):
                raise MalformedInput(f"not an integer: {x!r}")
            if isinstance(x, int):
                return x
            if isinstance(x, Fraction) and x.denominator == 1:
                return int(x)
            raise MalformedInput(f"not an integer: {x!r}")
        if isinstance(x, bool):
            raise MalformedInput(f"not a rational number: {x!r}")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            try:
                return Fraction(x)
            except ValueError:
                pass
        raise MalformedInput(f"not an exact rational: {x!r}")

    @classmethod
    def zero(cls: type[V], graph: Graph) -> V:
        return cls(graph, (0,) * len(graph))

    @classmethod
    def indicator(cls: type[V], graph: Graph, vs: Iterable[VertexId]) -> V:
        idx = graph.indices(vs)
        return cls(graph, tuple(1 if i in idx else 0 for i in range(len(graph))))

    @classmethod
    def point(cls: type[V], graph: Graph, v: VertexId, amount=1) -> V:
        i = graph.index(v)
        return cls(graph, tuple(amount if j == i else 0 for j in range(len(graph))))

    def __getitem__(self, v: VertexId):
        return self.values[self.graph.index(v)]

    def items(self):
        return zip(self.graph.vertices, self.values)

    def as_dict(self) -> dict:
        return dict(self.items())

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}={x}" for v, x in self.items())
        return f"{type(self).__name__}({inner})"

    # -- arithmetic ---------------------------------------------------------

    def _rational_kind(self) -> type[VertexMap]:
        return _RATIONAL.get(type(self), type(self))

    def _combine(self, other: VertexMap, op) -> VertexMap:
        if not isinstance(other, VertexMap):
            return NotImplemented
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphMismatch("vertex functions live on different graphs")
        kind = type(self) if other.integral else self._rational_kind()
        return kind(self.graph, tuple(op(a, b) for a, b in zip(self.values, other.values)))

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self):
        return type(self)(self.graph, tuple(-a for a in self.values))

    def __mul__(self, k):
        if isinstance(k, bool) or not isinstance(k, (int, Fraction)):
            return NotImplemented
        kind = type(self) if isinstance(k, int) else self._rational_kind()
        return kind(self.graph, tuple(k * a for a in self.values))

    __rmul__ = __mul__

    def to_rational(self):
        return self._rational_kind()(self.graph, self.values)

    def support(self) -> frozenset[VertexId]:
        return frozenset(v for v, x in self.items() if x != 0)

    def zero_set(self) -> frozenset[VertexId]:
        return frozenset(v for v, x in self.items() if x == 0)

    def negative_support(self) -> frozenset[VertexId]:
        return frozenset(v for v, x in self.items() if x < 0)


class Divisor(VertexMap):
    """Integer chips on each vertex."""


class FiringScript(VertexMap):
    """Integer vertex function; ``d + div(f)`` fires each vertex ``f(v)`` times."""


class RDivisor(VertexMap):
    """Exact-rational divisor."""

    integral = False


class RFunction(VertexMap):
    """Exact-rational vertex function."""

    integral = False


_RATIONAL = {Divisor: RDivisor, FiringScript: RFunction}


def _from_mapping(graph: Graph, mapping: Mapping) -> tuple:
    for key in mapping:
        if key not in graph:
            raise UnknownVertex(f"unknown vertex {key!r}")
    missing = [v for v in graph.vertices if v not in mapping]
    if missing:
        raise MalformedInput(f"no value given for vertices {missing}")
    return tuple(mapping[v] for v in graph.vertices)


# -- index-level kernels (shared by the hot loops elsewhere) -------------------

def div_values(adj: Sequence[Sequence[int]], f: Sequence) -> list:
    """Outgoing-slope sums of ``f``; loops contribute nothing."""
    n = len(adj)
    out = []
    for u in range(n):
        row = adj[u]
        fu = f[u]
        out.append(sum(c * (f[j] - fu) for j, c in enumerate(row) if c))
    return out


def fire_values(adj: Sequence[Sequence[int]], values: Sequence[int], fired: frozenset[int] | set[int]) -> list[int]:
    """``values + div(1_fired)`` computed directly from edge counts."""
    out = list(values)
    for u in range(len(adj)):
        row = adj[u]
        if u in fired:
            out[u] -= sum(c for j, c in enumerate(row) if c and j not in fired)
        else:
            out[u] += sum(row[j] for j in fired)
    return out


# -- operations ---------------------------------------------------------------

def degree(d: VertexMap):
    return sum(d.values)


def principal_divisor(g: Graph, f: VertexMap) -> VertexMap:
    """``div(f)``: a :class:`Divisor` for integer ``f``, an :class:`RDivisor` otherwise."""
    _same_graph(g, f)
    kind = Divisor if f.integral else RDivisor
    return kind(g, tuple(div_values(g.adj, f.values)))


def fire_set(g: Graph, d: Divisor, w: Iterable[VertexId]) -> Divisor:
    _same_graph(g, d)
    return Divisor(g, tuple(fire_values(g.adj, d.values, g.indices(w))))


def is_effective(d: VertexMap) -> bool:
    return all(x >= 0 for x in d.values)


def is_effective_away_from(d: VertexMap, vs: Iterable[VertexId]) -> bool:
    idx = d.graph.indices(vs)
    return all(x >= 0 for i, x in enumerate(d.values) if i not in idx)


def normalize_min_zero(f: V) -> V:
    m = min(f.values)
    return type(f)(f.graph, tuple(x - m for x in f.values))


def level_sets(f: FiringScript) -> list[frozenset[VertexId]]:
    """Threshold sets ``F_i = {v : f(v) >= i}`` for ``i = 1 .. max f``.

    Firing them one after another applies ``div(f)``.
    """
    if min(f.values) != 0:
        raise NotNormalized(f"minimum of the script is {min(f.values)}, not 0")
    top = max(f.values)
    return [frozenset(v for v, x in f.items() if x >= i) for i in range(1, top + 1)]


def linear_equivalence_witness(g: Graph, d: Divisor, e: Divisor) -> FiringScript | None:
    """A min-0 integer script ``f`` with ``e = d + div(f)``, or ``None`` if ``d`` is not equivalent to ``e``.

    The Laplacian system is solved over the rationals with one vertex pinned
    at 0; the divisors are equivalent exactly when that solution is integral.
    """
    _same_graph(g, d)
    _same_graph(g, e)
    if degree(d) != degree(e):
        return None
    # div(f) = e - d  <=>  L f = d - e
    rhs = [a - b for a, b in zip(d.values, e.values)]
    f = solve_pinned(g.adj, {0: 0}, rhs)
    if any(x.denominator != 1 for x in f):
        return None
    return normalize_min_zero(FiringScript(g, tuple(int(x) for x in f)))


def canonical_divisor(g: Graph) -> Divisor:
    return Divisor(g, g.canonical_values)


def residual(g: Graph, d: Divisor) -> Divisor:
    return canonical_divisor(g) - d


def _same_graph(g: Graph, f: VertexMap) -> None:
    if f.graph is not g and f.graph != g:
        raise GraphMismatch("vertex function does not live on this graph")
