"""Named example graphs and the deterministic test corpus.

Small graphs are enumerated exhaustively up to isomorphism; larger ones are
drawn from a seeded generator so that the corpus never changes between runs.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations_with_replacement, permutations, product

from .graph import Graph

SEED = 20240117


def doubled_triangle() -> Graph:
    """Triangle with every side doubled."""
    return Graph.build(
        ["v1", "v2", "v3"],
        [("v1", "v2"), ("v1", "v2"), ("v1", "v3"), ("v1", "v3"), ("v2", "v3"), ("v2", "v3")],
    )


def doubled_path() -> Graph:
    """Path v1 - v2 - v3 with both edges doubled."""
    return Graph.build(
        ["v1", "v2", "v3"],
        [("v1", "v2"), ("v1", "v2"), ("v2", "v3"), ("v2", "v3")],
    )


def banana(multiplicity: int = 2) -> Graph:
    """Two vertices joined by ``multiplicity`` parallel edges."""
    return Graph.build(["v1", "v2"], [("v1", "v2")] * multiplicity)


def _names(n: int) -> list[str]:
    return [f"v{i + 1}" for i in range(n)]


def _connected(n: int, edges) -> bool:
    seen = {0}
    todo = [0]
    while todo:
        i = todo.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == i and y not in seen:
                    seen.add(y)
                    todo.append(y)
    return len(seen) == n


def _canonical(n: int, edges, weights) -> tuple:
    best = None
    for p in permutations(range(n)):
        w = tuple(weights[p.index(i)] for i in range(n))
        e = tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges))
        key = (w, e)
        if best is None or key < best:
            best = key
    return best


def multigraphs(
    n: int,
    max_edges: int,
    loops: bool = False,
    max_weight: int = 0,
    min_edges: int = 0,
) -> list[Graph]:
    """All connected multigraphs on ``n`` vertices with at most ``max_edges`` edges, up to isomorphism."""
    slots = [(i, j) for i in range(n) for j in range(i, n) if loops or i != j]
    seen = set()
    out = []
    for m in range(min_edges, max_edges + 1):
        for edges in combinations_with_replacement(slots, m):
            if not _connected(n, edges):
                continue
            for weights in product(range(max_weight + 1), repeat=n):
                key = _canonical(n, edges, weights)
                if key in seen:
                    continue
                seen.add(key)
                names = _names(n)
                w, e = key
                out.append(Graph.build(names, [(names[a], names[b]) for a, b in e], list(w)))
    return out


def random_multigraph(
    rng: random.Random,
    n: int,
    max_edges: int,
    loops: bool = False,
    max_weight: int = 0,
) -> Graph:
    """A connected multigraph: a random spanning tree plus random extra edges."""
    names = _names(n)
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    extra = rng.randint(0, max(0, max_edges - len(edges)))
    for _ in range(extra):
        a = rng.randrange(n)
        b = rng.randrange(n) if loops else rng.choice([x for x in range(n) if x != a] or [a])
        edges.append((a, b))
    weights = [rng.randint(0, max_weight) for _ in range(n)]
    return Graph.build(names, [(names[a], names[b]) for a, b in edges], weights)


def sampled_multigraphs(
    count: int,
    n: int,
    max_edges: int,
    loops: bool = False,
    max_weight: int = 0,
    seed: int = SEED,
) -> list[Graph]:
    rng = random.Random(seed * 1000 + n)
    return [random_multigraph(rng, n, max_edges, loops, max_weight) for _ in range(count)]


def divisor_box(n: int, lo: int = -3, hi: int = 3) -> Iterator[tuple[int, ...]]:
    return product(range(lo, hi + 1), repeat=n)


def sampled_divisors(
    n: int, count: int, lo: int = -3, hi: int = 3, seed: int = SEED
) -> list[tuple[int, ...]]:
    rng = random.Random(seed + 7919 * n + count)
    return [tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(count)]
