"""Report assembly behind the command-line subcommands."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import exact, spectral
from .errors import InsufficientSizes
from .graph import (
    Graph,
    StarTypeSpec,
    compose_star_type,
    generate_preferential_attachment,
    is_dominating_set,
    subdivide,
)
from .montecarlo import SimConfig, SimEstimate, simulate
from .startype import BoundSet, bound_set, scalefree_scaling_exponent

__all__ = [
    "Report",
    "analyze",
    "BoundsReport",
    "bounds_report",
    "ScalingRow",
    "ScalingResult",
    "scaling_experiment",
    "estimate_gamma",
    "DominationReport",
    "dominate_report",
]

AGREEMENT_TOL = 1e-8


@dataclass
class Report:
    graph_summary: dict
    trap: dict
    att_exact: float
    lower_bound: float
    kemeny: float
    optimal: bool
    residual: float
    trapping_times: list
    att_spectral: Optional[float] = None
    att_weighted: Optional[float] = None
    bounds: Optional[dict] = None
    montecarlo: Optional[SimEstimate] = None
    warnings: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "graph_summary": self.graph_summary,
            "trap": self.trap,
            "att_exact": self.att_exact,
            "att_spectral": self.att_spectral,
            "att_weighted": self.att_weighted,
            "lower_bound": self.lower_bound,
            "kemeny": self.kemeny,
            "optimal": self.optimal,
            "residual": self.residual,
            "trapping_times": self.trapping_times,
            "bounds": self.bounds,
            "montecarlo": None if self.montecarlo is None else self.montecarlo.as_dict(),
            "warnings": self.warnings,
        }


def _summary(g: Graph) -> dict:
    degs = np.asarray(g.degrees)
    return {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "degree_min": int(degs.min()),
        "degree_max": int(degs.max()),
        "degree_mean": float(degs.mean()),
    }


def analyze(
    g: Graph,
    theta: int,
    with_spectral: bool = False,
    mc: Optional[SimConfig] = None,
) -> Report:
    trap = exact.TrapSpec.at(g, theta)
    tt = exact.trapping_times_exact(g, trap)
    att = exact.att(tt)
    report = Report(
        graph_summary=_summary(g),
        trap={"theta": trap.theta, "d_theta": trap.d_theta, "pi_theta": trap.pi_theta},
        att_exact=att,
        lower_bound=exact.lower_bound(g, trap),
        kemeny=exact.kemeny(g, trap, tt),
        optimal=exact.is_optimal(g, trap, tt=tt),
        residual=tt.residual,
        trapping_times=tt.tt.tolist(),
    )
    if report.optimal != (trap.d_theta == g.vertex_count - 1):
        report.warnings.append("optimality verdict disagrees with the universal-vertex test")
    if with_spectral:
        s = spectral.normalized_spectrum(g)
        report.att_spectral = spectral.att_spectral(g, trap, s)
        report.att_weighted = spectral.weighted_att_spectral(g, trap, s)
        if abs(report.att_spectral - att) > AGREEMENT_TOL * max(1.0, att):
            report.warnings.append(
                f"spectral ATT {report.att_spectral!r} disagrees with exact {att!r}")
    if mc is not None:
        est = simulate(g, trap, mc)
        report.montecarlo = est
        if not est.valid:
            report.warnings.append(f"{est.capped_walks} walks hit max_steps; estimate is biased")
        elif abs(est.att_estimate - att) > 3 * est.att_stderr:
            report.warnings.append("Monte Carlo estimate is more than 3 standard errors from exact")
    return report


@dataclass
class BoundsReport:
    bounds: BoundSet
    att_exact: float
    vertices: int
    edges: int
    verdicts: dict
    warnings: list

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def as_dict(self) -> dict:
        return {
            **self.bounds.as_dict(),
            "att_exact": self.att_exact,
            "vertices": self.vertices,
            "edges": self.edges,
            "verdicts": self.verdicts,
            "sandwich": "PASS" if self.passed else "FAIL",
            "warnings": self.warnings,
        }


def bounds_report(spec: StarTypeSpec, n: int, tol: float = 1e-9) -> BoundsReport:
    """Exact hub-trap ATT of the order-``n`` graph checked against every bound.

    Comparisons are strict except in the degenerate case without component
    edges, where all quantities equal 1 and non-strict comparison is used.
    """
    g, u = compose_star_type(spec)
    gn = subdivide(g, n, scope="component", spec=spec)
    value = exact.att(exact.trapping_times_exact(gn, u))
    bs = bound_set(spec, n)
    warnings = []
    strict = not bs.degenerate
    if not strict:
        warnings.append("no component edges: graph is a star, strict bounds degenerate to equalities")

    def below(lo, hi):
        lo, hi = float(lo), float(hi)
        return lo < hi - tol * max(1.0, hi) if strict else lo <= hi + tol * max(1.0, hi)

    verdicts = {"lower": below(bs.lower, value)}
    if bs.upper_prop1 is not None:
        verdicts["upper_prop1"] = below(value, bs.upper_prop1)
    if bs.upper_cor1 is not None:
        verdicts["cor1_equal"] = abs(value - float(bs.upper_cor1)) <= tol * max(1.0, value)
    if bs.upper_cor2 is not None:
        verdicts["upper_cor2"] = below(value, bs.upper_cor2)
    if bs.restricted_att is not None:
        verdicts["restricted_equals_lower"] = bs.restricted_att == bs.lower
    return BoundsReport(bs, value, gn.vertex_count, gn.edge_count, verdicts, warnings)


@dataclass(frozen=True)
class ScalingRow:
    size: int
    edges: int
    k_max: int
    att_exact: float
    lower_bound: float


@dataclass
class ScalingResult:
    rows: list
    slope: float
    intercept: float
    gamma: Optional[float]
    predicted_exponent: Optional[float]
    margin: float = 0.05

    @property
    def verdict(self) -> str:
        return "SUBLINEAR" if self.slope < 1 - self.margin else "NOT-SUBLINEAR"

    def as_dict(self) -> dict:
        return {
            "rows": [r.__dict__ for r in self.rows],
            "slope": self.slope,
            "intercept": self.intercept,
            "gamma": self.gamma,
            "predicted_exponent": self.predicted_exponent,
            "verdict": self.verdict,
        }


def estimate_gamma(degrees: Sequence[int], k_min: Optional[int] = None) -> float:
    """Discrete power-law exponent by the continuous-approximation MLE.

    ``gamma = 1 + n / sum ln(k / (k_min - 1/2))`` over degrees ``>= k_min``.
    """
    k = np.asarray(degrees, dtype=float)
    if k_min is None:
        k_min = int(k.min())
    k = k[k >= k_min]
    return float(1 + len(k) / np.sum(np.log(k / (k_min - 0.5))))


def scaling_experiment(
    sizes: Sequence[int],
    m_attach: int = 3,
    seed: int = 0,
    gamma: Optional[float] = None,
    estimate: bool = False,
) -> ScalingResult:
    """Hub-trap ATT of preferential-attachment graphs across sizes.

    Each size gets its own generator seed spawned from ``seed``.  The
    log-log slope of ATT against ``|V|`` is fitted by least squares.
    """
    sizes = list(sizes)
    if len(sizes) < 3:
        raise InsufficientSizes(f"need at least 3 sizes, got {len(sizes)}")
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    rows = []
    degree_pool = None
    for size, child in zip(sizes, children):
        g = generate_preferential_attachment(size, m_attach, int(child.generate_state(1)[0]))
        theta = exact.max_degree_vertex(g)
        tt = exact.trapping_times_exact(g, theta)
        rows.append(ScalingRow(size, g.edge_count, g.degree(theta), exact.att(tt), exact.lower_bound(g, theta)))
        if size == max(sizes):
            degree_pool = g.degrees
    slope, intercept = np.polyfit(np.log([r.size for r in rows]), np.log([r.att_exact for r in rows]), 1)
    if gamma is None and estimate:
        gamma = estimate_gamma(degree_pool, k_min=m_attach)
    predicted = None
    if gamma is not None and 2 < gamma < 3:
        predicted = scalefree_scaling_exponent(gamma)
    return ScalingResult(rows, float(slope), float(intercept), gamma, predicted)


@dataclass
class DominationReport:
    vertices: list
    dominating: bool
    universal: dict

    def as_dict(self) -> dict:
        return {
            "set": self.vertices,
            "dominating": self.dominating,
            "universal": {str(k): v for k, v in self.universal.items()},
        }


def dominate_report(g: Graph, s: Sequence[int]) -> DominationReport:
    dom = is_dominating_set(g, s)
    full = g.vertex_count - 1
    return DominationReport(list(s), dom, {v: g.degree(v) == full for v in s})
