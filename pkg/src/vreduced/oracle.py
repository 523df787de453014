"""Deliberately naive reference implementations.

Nothing here reuses the kernels of the main modules: chip-firing is
recomputed from the raw edge list, linear systems use plain Gauss-Jordan
elimination, and every search is a literal enumeration. These are the
cross-checks the test-suite compares the real algorithms against.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .divisor import Divisor, FiringScript, RFunction, VertexMap
from .errors import (
    DegreeMismatch,
    EmptyVertexSet,
    NotEffectiveAwayFrom,
    WrongGraph,
)
from .graph import Graph, VertexId


@dataclass(frozen=True)
class SearchBudget:
    """Firing scripts range over ``[0, script_bound]`` per vertex."""

    script_bound: int

    def __post_init__(self):
        if self.script_bound < 1:
            raise ValueError("script_bound must be at least 1")


@dataclass(frozen=True)
class BruteResult:
    """Outcome of a bounded search.

    ``budget_exhausted`` is set when nothing was found: absence is only
    established within the budget, never in general.
    """

    representative: Divisor | None
    script: FiringScript | None
    budget_exhausted: bool


def _budget(budget) -> SearchBudget:
    return budget if isinstance(budget, SearchBudget) else SearchBudget(int(budget))


def naive_div(g: Graph, f: Sequence) -> list:
    """Outgoing slopes summed edge by edge over the raw edge list."""
    pos = {v: i for i, v in enumerate(g.vertices)}
    out = [0] * len(g)
    for a, b in g.edges:
        i, j = pos[a], pos[b]
        out[i] += f[j] - f[i]
        out[j] += f[i] - f[j]
    return out


def naive_fire(g: Graph, values: Sequence[int], fired: set[VertexId]) -> list[int]:
    f = [1 if v in fired else 0 for v in g.vertices]
    return [x + y for x, y in zip(values, naive_div(g, f))]


def naive_solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Gauss-Jordan elimination over ``Fraction``."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def naive_potential(g: Graph, target: Sequence, start: Sequence) -> list[Fraction]:
    """Some ``f`` with ``target = start + div(f)``, normalized to minimum 0.

    Builds the full Laplacian from the edge list, replaces the last equation
    by ``f[0] = 0`` and solves.
    """
    n = len(g)
    pos = {v: i for i, v in enumerate(g.vertices)}
    lap = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        i, j = pos[a], pos[b]
        if i == j:
            continue
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    # div(f) = -lap f
    rhs = [Fraction(s) - Fraction(t) for s, t in zip(start, target)]
    lap[-1] = [1] + [0] * (n - 1)
    rhs[-1] = Fraction(0)
    f = naive_solve(lap, rhs)
    m = min(f)
    return [x - m for x in f]


def brute_is_V_reduced(g: Graph, d: Divisor, vs: Iterable[VertexId]) -> bool:
    """Literal definition: effective away from ``vs``, and firing any non-empty
    ``W`` outside ``vs`` leaves a negative value on ``W``."""
    vs = set(vs)
    if not vs:
        raise EmptyVertexSet("the vertex set must be non-empty")
    if any(x < 0 for v, x in d.items() if v not in vs):
        return False
    rest = [v for v in g.vertices if v not in vs]
    for r in range(1, len(rest) + 1):
        for w in combinations(rest, r):
            fired = set(w)
            after = naive_fire(g, d.values, fired)
            if all(x >= 0 for v, x in zip(g.vertices, after) if v in fired):
                return False
    return True


def _scripts(n: int, bound: int):
    for f in product(range(bound + 1), repeat=n):
        if min(f) == 0:
            yield f


def brute_effective_class(g: Graph, d: Divisor, budget) -> BruteResult:
    """First effective ``d + div(f)`` over min-0 scripts with entries up to the bound."""
    budget = _budget(budget)
    for f in _scripts(len(g), budget.script_bound):
        new = [x + y for x, y in zip(d.values, naive_div(g, f))]
        if all(x >= 0 for x in new):
            return BruteResult(Divisor(g, tuple(new)), FiringScript(g, f), False)
    return BruteResult(None, None, True)


def effective_representatives(g: Graph, d: Divisor, budget) -> set[tuple[int, ...]]:
    """Every effective ``d + div(f)`` reachable within the budget."""
    budget = _budget(budget)
    out = set()
    for f in _scripts(len(g), budget.script_bound):
        new = tuple(x + y for x, y in zip(d.values, naive_div(g, f)))
        if min(new) >= 0:
            out.add(new)
    return out


def effective_class_table(g: Graph, lo: int, hi: int, bound: int) -> np.ndarray:
    """Boolean array over the box ``[lo, hi]^n``: is ``d + div(f) >= 0`` for some
    script ``f`` in ``[0, bound]^n``?

    Same question as :func:`brute_effective_class`, answered for the whole box
    at once: ``d`` qualifies iff ``d >= -div(f)`` for some ``f``, so every
    ``-div(f)`` inside the box is marked and the marks are propagated upwards
    along each axis with a running maximum.
    """
    n = len(g)
    side = hi - lo + 1
    scripts = np.indices((bound + 1,) * n, dtype=np.int64).reshape(n, -1).T
    pos = {v: i for i, v in enumerate(g.vertices)}
    lap = np.zeros((n, n), dtype=np.int64)
    for a, b in g.edges:
        i, j = pos[a], pos[b]
        if i != j:
            lap[i, i] += 1
            lap[j, j] += 1
            lap[i, j] -= 1
            lap[j, i] -= 1
    need = scripts @ lap.T  # -div(f)
    need = np.maximum(need, lo)
    need = need[(need <= hi).all(axis=1)]
    table = np.zeros((side,) * n, dtype=bool)
    table[tuple((need - lo).T)] = True
    for axis in range(n):
        table = np.maximum.accumulate(table, axis=axis)
    return table


def brute_min_q_total(
    g: Graph, E: VertexMap, d: Divisor, vs: Iterable[VertexId], budget
) -> tuple[Fraction, Divisor]:
    """Smallest q-total over ``d + div(f)`` effective away from ``vs``, with one fresh solve per candidate."""
    budget = _budget(budget)
    if sum(E.values) != sum(d.values):
        raise DegreeMismatch("E and d must have the same degree")
    vs = set(vs)
    best = None
    for f in _scripts(len(g), budget.script_bound):
        new = [x + y for x, y in zip(d.values, naive_div(g, f))]
        if any(x < 0 for v, x in zip(g.vertices, new) if v not in vs):
            continue
        total = sum(naive_potential(g, E.values, new))
        if best is None or total < best[0]:
            best = (total, Divisor(g, tuple(new)))
    if best is None:
        raise ValueError("no candidate is effective away from the vertex set")
    return best


def burning_dhar_singleton(g: Graph, d: Divisor, v: VertexId) -> frozenset[VertexId]:
    """Classical burning: fire spreads from ``v``; an unburnt vertex burns once the
    number of its edges to burnt vertices exceeds its chips. Returns the unburnt set."""
    g.index(v)
    bad = [u for u, x in d.items() if x < 0 and u != v]
    if bad:
        raise NotEffectiveAwayFrom(bad)
    chips = d.as_dict()
    burnt = {v}
    changed = True
    while changed:
        changed = False
        for u in g.vertices:
            if u in burnt:
                continue
            heat = sum(1 for a, b in g.edges if a != b and ((a == u and b in burnt) or (b == u and a in burnt)))
            if heat > chips[u]:
                burnt.add(u)
                changed = True
    return frozenset(u for u in g.vertices if u not in burnt)


def brute_v_reduced(g: Graph, d: Divisor, v: VertexId, budget) -> Divisor | None:
    """The class member within the budget that passes the literal reducedness test for ``{v}``."""
    budget = _budget(budget)
    for f in _scripts(len(g), budget.script_bound):
        new = Divisor(g, tuple(x + y for x, y in zip(d.values, naive_div(g, f))))
        if brute_is_V_reduced(g, new, {v}):
            return new
    return None


def interpolating_function_via_basis(g: Graph, v: VertexId, vs: Iterable[VertexId], k) -> RFunction:
    """Combination of the potentials ``q_v(v_i)`` (with ``v = v_i + div(q_v(v_i))``)
    whose values on ``vs`` all equal ``k``."""
    vs = [u for u in g.vertices if u in set(vs)]
    n = len(g)
    basis = []
    for vi in vs:
        target = [1 if u == v else 0 for u in g.vertices]
        start = [1 if u == vi else 0 for u in g.vertices]
        basis.append(naive_potential(g, target, start))
    rows = [g.vertices.index(u) for u in vs]
    matrix = [[basis[i][r] for i in range(len(vs))] for r in rows]
    coeffs = naive_solve(matrix, [Fraction(k)] * len(vs))
    values = [sum((c * b[j] for c, b in zip(coeffs, basis)), Fraction(0)) for j in range(n)]
    return RFunction(g, tuple(values))


def _is_doubled_path(g: Graph) -> bool:
    if len(g) != 3:
        return False
    a, b, c = g.vertices
    want = sorted([tuple(sorted(p)) for p in [(a, b), (a, b), (b, c), (b, c)]])
    return list(g.edges) == want


def integral_targets_all_improvable(g: Graph, lo: int = -10, hi: int = 16, bound: int = 4) -> bool:
    """No integer ``E = (a, 0, 6 - a)`` makes ``(1, 3, 2)`` E-reduced within the bound."""
    if not _is_doubled_path(g):
        raise WrongGraph("the sweep is defined on the doubled path v1 - v2 - v3 only")
    d = Divisor(g, (1, 3, 2))
    ends = {g.vertices[0], g.vertices[2]}
    for a in range(lo, hi + 1):
        E = Divisor(g, (a, 0, 6 - a))
        own = sum(naive_potential(g, E.values, d.values))
        best, _ = brute_min_q_total(g, E, d, ends, bound)
        if not best < own:
            return False
    return True
