"""Exact trapping times from the absorbing-chain linear system.

With the trap made absorbing, the expected hitting times ``t`` of the
remaining vertices satisfy ``(I - Q) t = 1`` where ``Q`` is ``P = D^-1 A``
restricted to the non-trap vertices.  The system is solved with a dense LU
factorization (partial pivoting) and certified by its residual.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NumericalFailure, SingularSystem
from .graph import Graph

__all__ = [
    "TrapSpec",
    "TrappingTimes",
    "trapping_times_exact",
    "att",
    "kemeny",
    "lower_bound",
    "is_optimal",
    "recurrence_residual",
    "max_degree_vertex",
]


@dataclass(frozen=True)
class TrapSpec:
    theta: int
    d_theta: int
    pi_theta: float

    @classmethod
    def at(cls, g: Graph, theta: int) -> "TrapSpec":
        g.check_vertex(theta)
        d = g.degree(theta)
        return cls(int(theta), d, d / (2 * g.edge_count))


@dataclass(frozen=True)
class TrappingTimes:
    """Expected absorption time per vertex; ``tt[theta] == 0``."""

    theta: int
    tt: np.ndarray
    residual: float = 0.0

    def __getitem__(self, v):
        return self.tt[v]

    def __len__(self):
        return len(self.tt)


def _as_trap(g, trap):
    return trap if isinstance(trap, TrapSpec) else TrapSpec.at(g, trap)


def trapping_times_exact(g: Graph, trap) -> TrappingTimes:
    """Solve for the mean trapping time of every vertex.

    ``trap`` may be a :class:`TrapSpec` or a vertex id.
    """
    trap = _as_trap(g, trap)
    n = g.vertex_count
    if n < 2:
        raise SingularSystem("a single-vertex graph has no walkers to trap")
    theta = trap.theta
    keep = np.array([v for v in range(n) if v != theta])

    a = g.adjacency_matrix()
    deg = a.sum(axis=1)
    q = (a / deg[:, None])[np.ix_(keep, keep)]
    m = np.eye(n - 1) - q
    rhs = np.ones(n - 1)
    try:
        lu = scipy.linalg.lu_factor(m, check_finite=True)
    except (ValueError, np.linalg.LinAlgError) as exc:
        raise NumericalFailure(str(exc)) from exc
    if np.any(np.abs(np.diag(lu[0])) < np.finfo(float).eps * n):
        raise SingularSystem("absorbing system is singular")
    t = scipy.linalg.lu_solve(lu, rhs)
    if not np.all(np.isfinite(t)):
        raise NumericalFailure("non-finite trapping times")

    residual = float(np.max(np.abs(m @ t - rhs)))
    if residual > 1e-9 * n:
        raise NumericalFailure(f"residual {residual:.3e} exceeds {1e-9 * n:.1e}")

    out = np.zeros(n)
    out[keep] = t
    return TrappingTimes(theta, out, residual)


def att(tt: TrappingTimes) -> float:
    """Mean trapping time over all non-trap start vertices."""
    return float(tt.tt.sum() / (len(tt.tt) - 1))


def kemeny(g: Graph, trap, tt: TrappingTimes) -> float:
    """Stationary-weighted mean trapping time ``sum_v pi_v TT_v``.

    This coincides with ``(1 - pi_theta) * att`` only when the non-trap
    vertices have equal degree (or by accident); it is not an identity.
    """
    deg = np.asarray(g.degrees, dtype=float)
    return float(deg @ tt.tt / deg.sum())


def lower_bound(g: Graph, trap) -> float:
    """``2|E| / d_theta - 1``, attained exactly when the trap is universal."""
    trap = _as_trap(g, trap)
    return 2 * g.edge_count / trap.d_theta - 1


def is_optimal(g: Graph, trap, tol: float = 1e-9, tt: TrappingTimes = None) -> bool:
    trap = _as_trap(g, trap)
    if tt is None:
        tt = trapping_times_exact(g, trap)
    lb = lower_bound(g, trap)
    return abs(att(tt) - lb) <= tol * max(1.0, lb)


def recurrence_residual(g: Graph, tt: TrappingTimes) -> float:
    """Largest violation of ``TT_i = 1 + mean over neighbors of TT_j``."""
    worst = 0.0
    t = tt.tt
    for i, nb in enumerate(g.neighbors):
        if i == tt.theta:
            continue
        worst = max(worst, abs(t[i] - 1 - sum(t[j] for j in nb) / len(nb)))
    return worst


def max_degree_vertex(g: Graph) -> int:
    """Highest-degree vertex; ties go to the lowest id."""
    degs = g.degrees
    return max(range(len(degs)), key=lambda v: (degs[v], -v))
