"""Dhar decomposition with respect to a divisor and a vertex set."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .divisor import Divisor
from .errors import EmptyVertexSet, NotEffectiveAwayFrom
from .graph import Graph, VertexId, bfs_distances


@dataclass(frozen=True)
class DharResult:
    """The chain ``V = V_0 < V_1 < ... < V_n`` and the complement ``w_dhar`` of ``V_n``.

    The chain is strictly increasing; the stabilizing repetition ``V_{n+1} = V_n``
    is not stored.
    """

    graph: Graph
    chain: tuple[frozenset[VertexId], ...]
    w_dhar: frozenset[VertexId]

    def to_json(self) -> dict:
        return {
            "chain": [self.graph.ordered(s) for s in self.chain],
            "w_dhar": self.graph.ordered(self.w_dhar),
        }


def dhar_chain(adj: Sequence[Sequence[int]], values: Sequence[int], start: Iterable[int]) -> tuple[list[frozenset[int]], frozenset[int]]:
    """Index-level decomposition; returns the chain and the Dhar set.

    At each step the complement ``W`` of the current set is fired on a scratch
    basis: a vertex ``u`` of ``W`` ends at ``values[u] - (edges from u into the
    current set)``, and every vertex that would go negative joins the set.
    """
    n = len(adj)
    cur = set(start)
    chain = [frozenset(cur)]
    while True:
        new = [
            u for u in range(n)
            if u not in cur and values[u] < sum(adj[u][j] for j in cur)
        ]
        if not new:
            break
        cur.update(new)
        chain.append(frozenset(cur))
    return chain, frozenset(range(n)) - cur


def _check(g: Graph, d: Divisor, vs: Iterable[VertexId]) -> frozenset[int]:
    idx = g.indices(vs)
    if not idx:
        raise EmptyVertexSet("the vertex set must be non-empty")
    return idx


def dhar_decomposition(g: Graph, d: Divisor, vs: Iterable[VertexId]) -> DharResult:
    idx = _check(g, d, vs)
    bad = [g.vertices[i] for i, x in enumerate(d.values) if x < 0 and i not in idx]
    if bad:
        raise NotEffectiveAwayFrom(bad)
    chain, w = dhar_chain(g.adj, d.values, idx)
    names = g.vertices
    return DharResult(
        g,
        tuple(frozenset(names[i] for i in s) for s in chain),
        frozenset(names[i] for i in w),
    )


def is_V_reduced(g: Graph, d: Divisor, vs: Iterable[VertexId]) -> bool:
    """Whether ``d`` is reduced with respect to the vertex set ``vs``.

    Divisors that are negative somewhere outside ``vs`` give ``False``.
    """
    idx = _check(g, d, vs)
    if any(x < 0 for i, x in enumerate(d.values) if i not in idx):
        return False
    return not dhar_chain(g.adj, d.values, idx)[1]


def mu_vector(g: Graph, d: Divisor, vs: Iterable[VertexId]) -> list[int]:
    """Chip totals layered by distance to ``vs``: entry ``k`` sums ``d`` over vertices at distance ``k``."""
    idx = _check(g, d, vs)
    return mu_from_indices(g, d.values, idx)


def mu_from_indices(g: Graph, values: Sequence[int], idx: Iterable[int]) -> list[int]:
    dist = bfs_distances(g.neighbors, idx)
    out = [0] * (max(dist) + 1)
    for k, x in zip(dist, values):
        out[k] += x
    return out

