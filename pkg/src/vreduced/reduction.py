"""Reduced representatives and the effectiveness decision procedure."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from .dhar import dhar_chain, mu_from_indices
from .divisor import Divisor, FiringScript, fire_values
from .errors import EmptyVertexSet, NotEffectiveAwayFrom
from .graph import Graph, VertexId, bfs_distances

log = logging.getLogger(__name__)


class Verdict(str, Enum):
    EFFECTIVE = "effective"
    NOT_EFFECTIVE = "not_effective"


@dataclass(frozen=True)
class TraceStep:
    """One state of the decision loop: the set just fired and the divisor it produced.

    The first step of every trace has ``fired`` empty and holds the input.
    """

    fired: frozenset[VertexId]
    divisor: Divisor

    def to_json(self) -> dict:
        g = self.divisor.graph
        return {"fired": g.ordered(self.fired), "divisor": self.divisor.as_dict()}


@dataclass(frozen=True)
class EffectivenessCertificate:
    """Outcome of :func:`find_effective`.

    ``representative == input + div(script)`` always. For an effective verdict
    the representative is effective; otherwise it is reduced with respect to
    its own (non-empty) negative support, which rules out any effective
    divisor in the class.
    """

    input: Divisor
    verdict: Verdict
    representative: Divisor
    script: FiringScript
    trace: tuple[TraceStep, ...] = ()
    dhar_firings: int = 0
    trace_truncated: bool = False

    @property
    def is_effective(self) -> bool:
        return self.verdict is Verdict.EFFECTIVE

    def to_json(self, include_trace: bool = True) -> dict:
        out = {
            "verdict": self.verdict.value,
            "representative": self.representative.as_dict(),
            "script": self.script.as_dict(),
            "dhar_firings": self.dhar_firings,
        }
        if include_trace:
            out["trace"] = [s.to_json() for s in self.trace]
            out["trace_truncated"] = self.trace_truncated
        return out


def _add_indicator(script: list[int], fired: Iterable[int], times: int = 1) -> None:
    for i in fired:
        script[i] += times


def _normalized(g: Graph, script: Sequence[int]) -> FiringScript:
    m = min(script)
    return FiringScript(g, tuple(x - m for x in script))


def _dhar_loop(g: Graph, values: list[int], idx: frozenset[int], script: list[int]) -> list[int]:
    while True:
        _, w = dhar_chain(g.adj, values, idx)
        if not w:
            return values
        values = fire_values(g.adj, values, w)
        _add_indicator(script, w)


def make_V_reduced_from(g: Graph, d: Divisor, vs: Iterable[VertexId]) -> tuple[Divisor, FiringScript]:
    """Fire Dhar sets until none is left; the result is reduced with respect to ``vs``."""
    idx = g.indices(vs)
    if not idx:
        raise EmptyVertexSet("the vertex set must be non-empty")
    bad = [g.vertices[i] for i, x in enumerate(d.values) if x < 0 and i not in idx]
    if bad:
        raise NotEffectiveAwayFrom(bad)
    script = [0] * len(g)
    values = _dhar_loop(g, list(d.values), idx, script)
    return Divisor(g, tuple(values)), _normalized(g, script)


def v_reduced(g: Graph, d: Divisor, v: VertexId) -> tuple[Divisor, FiringScript]:
    """The unique representative of the class of ``d`` reduced with respect to ``v``.

    First every debt away from ``v`` is cleared, farthest debtor first, by
    firing the ball around ``v`` that stops one step short of the debtor; the
    debtor gains, and nothing farther away changes. Then Dhar sets for
    ``{v}`` are fired until none remains.
    """
    root = g.index(v)
    n = len(g)
    dist = bfs_distances(g.neighbors, [root])
    values = list(d.values)
    script = [0] * n
    while True:
        debtors = [u for u in range(n) if u != root and values[u] < 0]
        if not debtors:
            break
        w = min(debtors, key=lambda u: (-dist[u], u))
        ball = frozenset(u for u in range(n) if dist[u] < dist[w])
        gain = sum(g.adj[w][u] for u in ball)
        # w stays the chosen debtor until it is paid off, so fire the ball that many times
        times = (-values[w] + gain - 1) // gain
        for _ in range(times):
            values = fire_values(g.adj, values, ball)
        _add_indicator(script, ball, times)
    values = _dhar_loop(g, values, frozenset([root]), script)
    return Divisor(g, tuple(values)), _normalized(g, script)


def find_effective(g: Graph, d: Divisor, trace_limit: int | None = None) -> EffectivenessCertificate:
    """Decide whether the class of ``d`` is effective.

    Starting from ``d``, repeatedly take the set of vertices in debt and fire
    its Dhar set. The loop ends with an effective divisor, or with a divisor
    whose Dhar set for its own negative support is empty, which certifies
    that no effective divisor is equivalent to ``d``. ``trace_limit`` caps how
    many trace steps are kept; the script is exact regardless.
    """
    n = len(g)
    values = list(d.values)
    script = [0] * n
    trace = [TraceStep(frozenset(), d)]
    truncated = False
    firings = 0
    while True:
        neg = frozenset(i for i in range(n) if values[i] < 0)
        if not neg:
            verdict = Verdict.EFFECTIVE
            break
        if len(neg) == n:
            verdict = Verdict.NOT_EFFECTIVE
            break
        _, w = dhar_chain(g.adj, values, neg)
        if not w:
            verdict = Verdict.NOT_EFFECTIVE
            break
        values = fire_values(g.adj, values, w)
        _add_indicator(script, w)
        firings += 1
        if trace_limit is None or len(trace) < trace_limit:
            trace.append(TraceStep(frozenset(g.vertices[i] for i in w), Divisor(g, tuple(values))))
        else:
            truncated = True
    log.debug("find_effective: %d Dhar firings, verdict %s", firings, verdict.value)
    return EffectivenessCertificate(
        input=d,
        verdict=verdict,
        representative=Divisor(g, tuple(values)),
        script=_normalized(g, script),
        trace=tuple(trace),
        dhar_firings=firings,
        trace_truncated=truncated,
    )


def assert_mu_progress(trace: Sequence[TraceStep]) -> bool:
    """Check the lexicographic progress measure along a trace.

    Across every firing, the set of vertices in debt may only shrink, and the
    chip totals layered by distance to the debt set before the firing must
    strictly increase.
    """
    for a, b in zip(trace, trace[1:]):
        va = a.divisor.negative_support()
        if not va or not b.divisor.negative_support() <= va:
            return False
        g = a.divisor.graph
        idx = g.indices(va)
        if not mu_from_indices(g, b.divisor.values, idx) > mu_from_indices(g, a.divisor.values, idx):
            return False
    return True
