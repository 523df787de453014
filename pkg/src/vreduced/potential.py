"""Exact potential theory on graphs.

For rational divisors ``E`` and ``D`` of equal degree, ``q_E(D)`` is the unique
function with minimum 0 such that ``E = D + div(q_E(D))``. The total mass of
``q_E`` is the objective that E-reduced divisors minimize over their class.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .divisor import (
    Divisor,
    RDivisor,
    RFunction,
    VertexMap,
    degree,
    div_values,
)
from .errors import (
    DegreeMismatch,
    EmptyVertexSet,
    InvariantViolation,
    NotEffectiveAwayFrom,
    SupportViolation,
    VertexInSet,
)
from .graph import Graph, VertexId
from .linalg import solve_pinned
from .serialize import rational_map


@dataclass(frozen=True)
class QResult:
    q: RFunction
    zero_set: frozenset[VertexId]
    total: Fraction

    def to_json(self) -> dict:
        return {
            "q": rational_map(self.q),
            "zero_set": self.q.graph.ordered(self.zero_set),
            "total": str(self.total),
        }


def _q_values(adj, e_vals: Sequence, d_vals: Sequence) -> list[Fraction]:
    # div(q) = E - D  <=>  L q = D - E
    rhs = [Fraction(a) - Fraction(b) for a, b in zip(d_vals, e_vals)]
    q = solve_pinned(adj, {0: 0}, rhs)
    m = min(q)
    return [x - m for x in q]


def q_function(g: Graph, E: VertexMap, D: VertexMap) -> QResult:
    if degree(E) != degree(D):
        raise DegreeMismatch(f"deg E = {degree(E)} but deg D = {degree(D)}")
    q = RFunction(g, tuple(_q_values(g.adj, E.values, D.values)))
    return QResult(q, q.zero_set(), sum(q.values, Fraction(0)))


def q_total_of_class_member(g: Graph, E: VertexMap, d: Divisor) -> Fraction:
    return q_function(g, E, d).total


def interpolating_function(g: Graph, v: VertexId, vs: Iterable[VertexId], k) -> RFunction:
    """The function equal to ``k`` on ``vs``, 0 at ``v`` and harmonic everywhere else.

    Harmonic means zero outgoing-slope sum. It also has zero slope sum at every
    vertex of ``vs`` that cannot be reached from ``v`` without passing through
    another vertex of ``vs``.
    """
    idx = g.indices(vs)
    if not idx:
        raise EmptyVertexSet("the vertex set must be non-empty")
    root = g.index(v)
    if root in idx:
        raise VertexInSet(f"{v!r} must not belong to the pinned set")
    k = Fraction(k)
    pinned = {i: k for i in idx}
    pinned[root] = Fraction(0)
    return RFunction(g, tuple(solve_pinned(g.adj, pinned)))


def construct_witness_E(g: Graph, d: VertexMap, vs: Iterable[VertexId]) -> RDivisor:
    """A rational divisor ``E`` supported on ``vs`` with ``deg E = deg d`` and ``q_E(d) = 0`` on ``vs``.

    Starts from all of ``deg d`` placed on the first vertex of ``vs`` (graph
    order). While some ``v`` in ``vs`` has ``q(v) > 0``, take ``f`` = 1 on the
    zero set of ``q``, 0 at ``v``, harmonic elsewhere, and move ``E`` to
    ``E + div(k f)``. This lowers ``q`` to ``q + k f - k`` off the zero set; ``k``
    is the smallest value at which a new vertex reaches zero:
    ``min q(u) / (1 - f(u))`` over ``u`` with ``f(u) < 1``.
    """
    idx = g.indices(vs)
    if not idx:
        raise EmptyVertexSet("the vertex set must be non-empty")
    bad = [g.vertices[i] for i, x in enumerate(d.values) if x < 0 and i not in idx]
    if bad:
        raise NotEffectiveAwayFrom(bad)
    n = len(g)
    first = min(idx)
    e = [Fraction(0)] * n
    e[first] = Fraction(degree(d))
    q = _q_values(g.adj, e, d.values)
    while True:
        pending = sorted(i for i in idx if q[i] != 0)
        if not pending:
            break
        v = pending[0]
        zeros = {i for i in range(n) if q[i] == 0}
        pinned = {i: Fraction(1) for i in zeros}
        pinned[v] = Fraction(0)
        f1 = solve_pinned(g.adj, pinned)
        k = critical_step(q, f1)
        step = div_values(g.adj, [k * x for x in f1])
        e = [a + b for a, b in zip(e, step)]
        q = [a + k * b - k for a, b in zip(q, f1)]
    E = RDivisor(g, tuple(e))
    _check_witness(g, E, d, idx)
    return E


def critical_step(q: Sequence[Fraction], f1: Sequence[Fraction]) -> Fraction:
    """Smallest ``k > 0`` at which ``q + k (f1 - 1)`` reaches 0 at a vertex where ``f1 < 1``."""
    return min(q[u] / (1 - f1[u]) for u in range(len(q)) if f1[u] < 1)


def _check_witness(g: Graph, E: RDivisor, d: VertexMap, idx: frozenset[int]) -> None:
    if any(x != 0 for i, x in enumerate(E.values) if i not in idx):
        raise InvariantViolation("constructed E leaves the vertex set")
    if degree(E) != degree(d):
        raise InvariantViolation("constructed E has the wrong degree")
    q = _q_values(g.adj, E.values, d.values)
    if any(q[i] != 0 for i in idx):
        raise InvariantViolation("q_E(d) does not vanish on the vertex set")


def default_bound(g: Graph, d: Divisor) -> int:
    return len(g) * (1 + max(abs(x) for x in d.values))


@dataclass(frozen=True)
class Improvement:
    """A class member effective away from the vertex set with a smaller q-total."""

    divisor: Divisor
    total: Fraction


def _scan(adj, d_vals, q_scaled, scale, vidx, bound, first_values):
    """Best strictly improving script among those whose first entry is in ``first_values``.

    ``q_scaled`` is ``q_E(d)`` times ``scale`` (integers). Since
    ``q_E(d + div(f))`` is ``q_E(d) - f`` shifted to minimum 0, totals are
    compared in integers scaled by ``scale``.
    """
    n = len(d_vals)
    base = sum(q_scaled)
    best = None
    for first in first_values:
        for rest in product(range(bound + 1), repeat=n - 1):
            f = (first, *rest)
            if min(f) != 0:
                continue
            dv = div_values(adj, f)
            new = [a + b for a, b in zip(d_vals, dv)]
            if any(x < 0 for i, x in enumerate(new) if i not in vidx):
                continue
            shifted = [a - scale * b for a, b in zip(q_scaled, f)]
            total = sum(shifted) - n * min(shifted)
            if total < base and (best is None or total < best[0]):
                best = (total, tuple(new))
    return best


def find_improvement(
    g: Graph,
    E: VertexMap,
    d: Divisor,
    vs: Iterable[VertexId],
    bound: int | None = None,
    jobs: int = 1,
) -> Improvement | None:
    """Search scripts with entries in ``[0, bound]`` for a class member beating ``d``.

    Returns the member with the smallest q-total (first in enumeration order on
    ties), or ``None`` when ``d`` is minimal within the bound.
    """
    idx = g.indices(vs)
    if not idx:
        raise EmptyVertexSet("the vertex set must be non-empty")
    if degree(E) != degree(d):
        raise DegreeMismatch(f"deg E = {degree(E)} but deg d = {degree(d)}")
    outside = [g.vertices[i] for i, x in enumerate(E.values) if x != 0 and i not in idx]
    if outside:
        raise SupportViolation(f"E is non-zero outside the vertex set at {outside}")
    if bound is None:
        bound = default_bound(g, d)
    q = _q_values(g.adj, E.values, d.values)
    scale = lcm(*(x.denominator for x in q))
    q_scaled = [int(x * scale) for x in q]
    args = (g.adj, d.values, q_scaled, scale, idx, bound)
    if jobs > 1 and bound > 0:
        chunks = [range(i, bound + 1, jobs) for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_star, [(*args, c) for c in chunks]))
        found = [p for p in parts if p is not None]
        best = min(found, key=lambda p: p[0]) if found else None
    else:
        best = _scan(*args, range(bound + 1))
    if best is None:
        return None
    return Improvement(Divisor(g, best[1]), Fraction(best[0], scale))


def _scan_star(args):
    return _scan(*args)


def is_E_reduced_bounded(
    g: Graph,
    E: VertexMap,
    d: Divisor,
    vs: Iterable[VertexId],
    bound: int | None = None,
    jobs: int = 1,
) -> bool:
    """Bounded surrogate for E-reducedness.

    True iff ``d`` is effective away from ``vs`` and no ``d + div(f)`` with
    ``f`` in ``[0, bound]^V(G)`` is effective away from ``vs`` with a strictly
    smaller q-total. Not a proof of minimality over the whole class.
    """
    vs = g.vertex_set(vs)
    if any(x < 0 for v, x in d.items() if v not in vs):
        # still validate the remaining preconditions
        find_improvement(g, E, d, vs, bound=0)
        return False
    return find_improvement(g, E, d, vs, bound, jobs) is None

