"""Uniform divisors and representatives of special classes."""

from __future__ import annotations

from dataclasses import dataclass

from .divisor import Divisor, canonical_divisor, residual
from .errors import InvariantViolation, NotSpecialClass
from .graph import Graph
from .reduction import EffectivenessCertificate, find_effective


def is_uniform(g: Graph, d: Divisor) -> bool:
    return all(0 <= x <= kx for x, kx in zip(d.values, g.canonical_values))


def is_semistable(g: Graph) -> bool:
    """No weight-0 vertex of valence 1."""
    return not any(w == 0 and g.valence(v) == 1 for v, w in zip(g.vertices, g.weights))


def has_uniform_guarantee(g: Graph) -> bool:
    """Every weight-0 vertex carries a loop, so every special class has a uniform member."""
    return all(w > 0 or g.loop_count(v) > 0 for v, w in zip(g.vertices, g.weights))


def quasi_uniform_bounds(g: Graph) -> tuple[int, ...]:
    """Per-vertex upper bound ``max(val_wl(v) - 1, 2 g_v - 2 + val(v))``."""
    return tuple(max(sum(row) - 1, kv) for row, kv in zip(g.adj, g.canonical_values))


def within_quasi_uniform_upper(g: Graph, d: Divisor) -> bool:
    return all(x <= b for x, b in zip(d.values, quasi_uniform_bounds(g)))


def is_quasi_uniform(g: Graph, d: Divisor) -> bool:
    return all(x >= 0 for x in d.values) and within_quasi_uniform_upper(g, d)


def satisfies_residual_bounds(g: Graph, d: Divisor) -> bool:
    """``-1 <= d_v <= 2 g_v - 2 + val(v)``, with -1 only at weight-0 loop-free vertices."""
    for x, kx, w, lp in zip(d.values, g.canonical_values, g.weights, g.loops):
        if not -1 <= x <= kx:
            return False
        if x == -1 and (w != 0 or lp > 0):
            return False
    return True


@dataclass(frozen=True)
class SpecialnessReport:
    is_special: bool
    effective_rep: Divisor | None
    effective_residual_rep: Divisor | None
    certificate: EffectivenessCertificate
    residual_certificate: EffectivenessCertificate

    def to_json(self, include_trace: bool = False) -> dict:
        rep, rrep = self.effective_rep, self.effective_residual_rep
        return {
            "is_special": self.is_special,
            "effective_rep": None if rep is None else rep.as_dict(),
            "effective_residual_rep": None if rrep is None else rrep.as_dict(),
            "certificate": self.certificate.to_json(include_trace),
            "residual_certificate": self.residual_certificate.to_json(include_trace),
        }


def specialness(g: Graph, d: Divisor) -> SpecialnessReport:
    cert = find_effective(g, d)
    rcert = find_effective(g, residual(g, d))
    return SpecialnessReport(
        is_special=cert.is_effective and rcert.is_effective,
        effective_rep=cert.representative if cert.is_effective else None,
        effective_residual_rep=rcert.representative if rcert.is_effective else None,
        certificate=cert,
        residual_certificate=rcert,
    )


def quasi_uniform_run(g: Graph, d: Divisor) -> EffectivenessCertificate:
    """Run the effectiveness loop from ``k - e*``, where ``e*`` is an effective residual.

    The starting point already meets the canonical upper bound everywhere and
    each Dhar firing keeps the quasi-uniform upper bound; both are re-checked
    at every step of the returned trace.
    """
    report = specialness(g, d)
    if not report.is_special:
        raise NotSpecialClass("the class of the divisor is not special")
    start = canonical_divisor(g) - report.effective_residual_rep
    cert = find_effective(g, start)
    if not cert.is_effective:
        raise InvariantViolation("effective class produced a non-effective certificate")
    bounds = quasi_uniform_bounds(g)
    for step in cert.trace:
        if any(x > b for x, b in zip(step.divisor.values, bounds)):
            raise InvariantViolation(
                f"Dhar firing along {sorted(step.fired)} broke the quasi-uniform bound: {step.divisor}")
    return cert


def quasi_uniform_representative(g: Graph, d: Divisor) -> Divisor:
    """A member of the special class of ``d`` with ``0 <= d_v <= max(val_wl(v) - 1, k_v)``."""
    rep = quasi_uniform_run(g, d).representative
    if not is_quasi_uniform(g, rep):
        raise InvariantViolation(f"output {rep} violates the quasi-uniform bounds")
    return rep


def residual_bounded_representative(g: Graph, d: Divisor) -> Divisor:
    """Residual form: apply the quasi-uniform construction to ``k - d`` and take the residual.

    The result lies in the class of ``d`` and satisfies ``-1 <= d_v <= k_v``,
    where -1 occurs only at weight-0 vertices without loops.
    """
    rep = residual(g, quasi_uniform_representative(g, residual(g, d)))
    if not satisfies_residual_bounds(g, rep):
        raise InvariantViolation(f"output {rep} violates the residual bounds")
    return rep
