"""Connected vertex-weighted multigraphs with loops and parallel edges."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    Disconnected,
    DuplicateVertexId,
    EmptyTargetSet,
    MalformedInput,
    NegativeWeight,
    UnknownEndpoint,
    UnknownVertex,
)

VertexId = str


def _edge_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Graph:
    """An immutable connected multigraph.

    ``vertices`` fixes the order used by every serialization. ``edges`` is kept
    as a sorted multiset of endpoint pairs; parallel edges stay separate and a
    loop is a pair with equal endpoints. Adjacency counts are precomputed once.
    """

    vertices: tuple[VertexId, ...]
    weights: tuple[int, ...]
    edges: tuple[tuple[VertexId, VertexId], ...]

    _index: dict = field(init=False, repr=False, compare=False)
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    loops: tuple[int, ...] = field(init=False, repr=False, compare=False)
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        weights = tuple(self.weights)
        if len(weights) != len(vertices):
            raise MalformedInput("one weight per vertex is required")
        index: dict[str, int] = {}
        for i, v in enumerate(vertices):
            if not isinstance(v, str) or not v:
                raise MalformedInput(f"vertex ids must be non-empty strings, got {v!r}")
            if v in index:
                raise DuplicateVertexId(f"vertex {v!r} appears more than once")
            index[v] = i
        for v, w in zip(vertices, weights):
            if isinstance(w, bool) or not isinstance(w, int):
                raise MalformedInput(f"weight of {v!r} must be an integer, got {w!r}")
            if w < 0:
                raise NegativeWeight(f"vertex {v!r} has negative weight {w}")

        n = len(vertices)
        adj = [[0] * n for _ in range(n)]
        loops = [0] * n
        edges = []
        for e in self.edges:
            if len(e) != 2:
                raise MalformedInput(f"an edge has exactly two endpoints, got {e!r}")
            a, b = e
            for x in (a, b):
                if x not in index:
                    raise UnknownEndpoint(f"edge {[a, b]} names unknown vertex {x!r}")
            i, j = index[a], index[b]
            if i == j:
                loops[i] += 1
            else:
                adj[i][j] += 1
                adj[j][i] += 1
            edges.append(_edge_key(a, b))
        edges.sort()

        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "adj", tuple(tuple(row) for row in adj))
        object.__setattr__(self, "loops", tuple(loops))
        object.__setattr__(
            self,
            "neighbors",
            tuple(tuple(j for j in range(n) if adj[i][j]) for i in range(n)),
        )

        if n == 0 or len(self._reach({0})) != n:
            raise Disconnected("graph is not connected")

    @classmethod
    def build(
        cls,
        vertices: Sequence[VertexId],
        edges: Iterable[Sequence[VertexId]],
        weights: Sequence[int] | Mapping[VertexId, int] | None = None,
    ) -> Graph:
        if weights is None:
            weights = [0] * len(vertices)
        elif isinstance(weights, Mapping):
            weights = [weights.get(v, 0) for v in vertices]
        return cls(tuple(vertices), tuple(weights), tuple(tuple(e) for e in edges))

    # -- indexing -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def index(self, v: VertexId) -> int:
        try:
            return self._index[v]
        except (KeyError, TypeError):
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def indices(self, vs: Iterable[VertexId]) -> frozenset[int]:
        return frozenset(self.index(v) for v in vs)

    def vertex_set(self, vs: Iterable[VertexId]) -> frozenset[VertexId]:
        """Validate ``vs`` against the graph and return it as a frozenset."""
        return frozenset(self.vertices[i] for i in self.indices(vs))

    def ordered(self, vs: Iterable[VertexId]) -> list[VertexId]:
        """``vs`` listed in graph construction order."""
        return [self.vertices[i] for i in sorted(self.indices(vs))]

    def weight(self, v: VertexId) -> int:
        return self.weights[self.index(v)]

    # -- structural queries -------------------------------------------------

    def valence(self, v: VertexId) -> int:
        """Number of edge endpoints at ``v``; a loop counts twice."""
        i = self.index(v)
        return sum(self.adj[i]) + 2 * self.loops[i]

    def valence_without_loops(self, v: VertexId) -> int:
        return sum(self.adj[self.index(v)])

    def loop_count(self, v: VertexId) -> int:
        return self.loops[self.index(v)]

    @cached_property
    def canonical_values(self) -> tuple[int, ...]:
        """``2 g_v - 2 + val(v)`` in vertex order."""
        return tuple(2 * w + sum(row) + 2 * lp - 2 for w, row, lp in zip(self.weights, self.adj, self.loops))

    def genus(self) -> int:
        return len(self.edges) - len(self.vertices) + 1 + sum(self.weights)

    def edges_between(self, a: Iterable[VertexId], b: Iterable[VertexId]) -> int:
        """Number of non-loop edges with one endpoint in ``a`` and the other in ``b``."""
        ia, ib = self.indices(a), self.indices(b)
        return sum(self.adj[i][j] for i in ia for j in ib if i != j)

    def _reach(self, start: set[int], allowed: frozenset[int] | None = None) -> set[int]:
        seen = set(start)
        todo = list(start)
        while todo:
            i = todo.pop()
            for j in self.neighbors[i]:
                if j not in seen and (allowed is None or j in allowed):
                    seen.add(j)
                    todo.append(j)
        return seen

    def components_excluding(self, exclude: Iterable[VertexId]) -> list[frozenset[VertexId]]:
        """Connected components of the subgraph induced by the vertices not in ``exclude``.

        Components are listed by their first vertex in construction order.
        """
        excl = self.indices(exclude)
        rest = frozenset(range(len(self))) - excl
        out = []
        done: set[int] = set()
        for i in sorted(rest):
            if i in done:
                continue
            comp = self._reach({i}, rest)
            done |= comp
            out.append(frozenset(self.vertices[j] for j in comp))
        return out

    def distances_from(self, targets: Iterable[VertexId]) -> list[int]:
        """Breadth-first edge distance from every vertex (by index) to the target set."""
        idx = self.indices(targets)
        if not idx:
            raise EmptyTargetSet("distance to an empty set is undefined")
        return bfs_distances(self.neighbors, idx)

    def distance_to_set(self, v: VertexId, targets: Iterable[VertexId]) -> int:
        i = self.index(v)
        return self.distances_from(targets)[i]

    # -- interchange --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v, "weight": w} for v, w in zip(self.vertices, self.weights)],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, raw: object) -> Graph:
        return validate(raw)


def bfs_distances(neighbors: Sequence[Sequence[int]], sources: Iterable[int]) -> list[int]:
    dist = [-1] * len(neighbors)
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        i = queue.popleft()
        for j in neighbors[i]:
            if dist[j] < 0:
                dist[j] = dist[i] + 1
                queue.append(j)
    return dist


def validate(raw: object) -> Graph:
    """Build a :class:`Graph` from the JSON interchange form.

    ``{"vertices": [{"id": "v1", "weight": 0}, ...], "edges": [["v1", "v2"], ...]}``;
    a missing weight defaults to 0 and a bare string is accepted as a vertex entry.
    """
    if not isinstance(raw, Mapping):
        raise MalformedInput("graph description must be a JSON object")
    raw_vertices = raw.get("vertices")
    raw_edges = raw.get("edges", [])
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise MalformedInput("'vertices' and 'edges' must be lists")
    ids, weights = [], []
    for entry in raw_vertices:
        if isinstance(entry, str):
            ids.append(entry)
            weights.append(0)
        elif isinstance(entry, Mapping) and "id" in entry:
            ids.append(entry["id"])
            weights.append(entry.get("weight", 0))
        else:
            raise MalformedInput(f"bad vertex entry {entry!r}")
    edges = []
    for e in raw_edges:
        if not isinstance(e, (list, tuple)):
            raise MalformedInput(f"bad edge entry {e!r}")
        edges.append(tuple(e))
    return Graph(tuple(ids), tuple(weights), tuple(edges))
