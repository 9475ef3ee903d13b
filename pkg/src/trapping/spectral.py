"""Trapping times from the spectrum of the normalized adjacency matrix.

The symmetric matrix ``D^-1/2 A D^-1/2`` is similar to the transition
matrix, so its eigenpairs give hitting times in closed form.  Eigenvectors
only enter through products ``psi_i[theta] * psi_i[j]`` within one
eigenvalue, so their signs (and the basis inside a repeated eigenvalue)
do not matter.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceFailure, DegenerateGap, UnverifiedSpectrum
from .exact import TrapSpec, _as_trap
from .graph import Graph

__all__ = [
    "Spectrum",
    "CauchyCertificate",
    "normalized_spectrum",
    "trapping_times_spectral",
    "att_spectral",
    "weighted_att_spectral",
    "cauchy_bound_certificate",
    "cancelation_residual",
    "is_bipartite_spectral",
]

EIG_TOL = 1e-9
VEC_TOL = 1e-8
GAP_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order and matching orthonormal eigenvectors.

    ``eigenvectors[:, i]`` belongs to ``eigenvalues[i]``.  ``checks`` holds
    the worst deviation found for each structural invariant.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    verified: bool
    checks: dict = field(default_factory=dict, compare=False)


def normalized_spectrum(g: Graph) -> Spectrum:
    a = g.adjacency_matrix()
    deg = a.sum(axis=1)
    inv_sqrt = 1.0 / np.sqrt(deg)
    gamma = inv_sqrt[:, None] * a * inv_sqrt[None, :]
    try:
        vals, vecs = np.linalg.eigh(gamma)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    vals, vecs = vals[::-1], vecs[:, ::-1]

    n = len(vals)
    stationary_root = np.sqrt(deg / deg.sum())
    top = vecs[:, 0] * np.sign(vecs[:, 0] @ stationary_root)
    checks = {
        "top_eigenvalue": abs(vals[0] - 1.0),
        "range": max(0.0, float(np.max(np.abs(vals))) - 1.0),
        "spectral_gap": 1.0 - vals[1] if n > 1 else 1.0,
        "orthonormality": float(np.max(np.abs(vecs.T @ vecs - np.eye(n)))),
        "top_eigenvector": float(np.max(np.abs(top - stationary_root))),
    }
    verified = (
        checks["top_eigenvalue"] <= EIG_TOL
        and checks["range"] <= EIG_TOL
        and checks["spectral_gap"] > GAP_TOL
        and checks["orthonormality"] <= EIG_TOL
        and checks["top_eigenvector"] <= VEC_TOL
    )
    return Spectrum(vals, vecs, bool(verified), checks)


def _prepare(g, trap, s):
    trap = _as_trap(g, trap)
    if s is None:
        s = normalized_spectrum(g)
    if not s.verified:
        raise UnverifiedSpectrum(f"spectrum failed verification: {s.checks}")
    gaps = 1.0 - s.eigenvalues[1:]
    if np.any(gaps <= GAP_TOL):
        raise DegenerateGap(f"1 - lambda_i = {gaps.min():.3e} for some i >= 2")
    return trap, s, gaps


def trapping_times_spectral(g: Graph, trap, s: Spectrum = None) -> np.ndarray:
    """Per-vertex trapping times from the eigen-expansion of hitting times.

    ``TT_j = 2|E| sum_{i>=2} (psi_i[theta]^2 / d_theta
    - psi_i[j] psi_i[theta] / sqrt(d_j d_theta)) / (1 - lambda_i)``
    """
    trap, s, gaps = _prepare(g, trap, s)
    deg = np.asarray(g.degrees, dtype=float)
    psi = s.eigenvectors[:, 1:]
    w = psi[trap.theta] / gaps
    two_e = 2.0 * g.edge_count
    tt = two_e * (w @ psi[trap.theta] / trap.d_theta - (psi @ w) / np.sqrt(deg * trap.d_theta))
    tt[trap.theta] = 0.0
    return tt


def att_spectral(g: Graph, trap, s: Spectrum = None) -> float:
    """Mean trapping time over non-trap vertices, computed spectrally."""
    tt = trapping_times_spectral(g, trap, s)
    return float(tt.sum() / (g.vertex_count - 1))


def weighted_att_spectral(g: Graph, trap, s: Spectrum = None) -> float:
    """Stationary-weighted mean trapping time over non-trap vertices.

    Evaluates ``(2|E| / d_theta) / (1 - pi_theta) * sum_{i>=2}
    psi_i[theta]^2 / (1 - lambda_i)``, i.e. ``sum_j pi_j TT_j / (1 - pi_theta)``.
    It agrees with :func:`att_spectral` when all non-trap vertices share a
    degree and is bounded below by ``2|E|/d_theta - 1`` on every graph.
    """
    trap, s, gaps = _prepare(g, trap, s)
    weight = float(np.sum(s.eigenvectors[trap.theta, 1:] ** 2 / gaps))
    return weight * (2.0 * g.edge_count / trap.d_theta) / (1.0 - trap.pi_theta)


@dataclass(frozen=True)
class CauchyCertificate:
    lhs: float
    rhs: float
    gap_weighted_mass: float
    tail_mass: float
    identities_hold: bool

    @property
    def holds(self) -> bool:
        return self.identities_hold and self.lhs >= self.rhs - VEC_TOL * max(1.0, self.rhs)

    def is_tight(self, tol: float = VEC_TOL) -> bool:
        return abs(self.lhs - self.rhs) <= tol * max(1.0, self.rhs)

    def __iter__(self):
        return iter((self.lhs, self.rhs))


def cauchy_bound_certificate(g: Graph, trap, s: Spectrum = None) -> CauchyCertificate:
    """Both sides of the Cauchy-Schwarz step behind the ATT lower bound.

    ``lhs = (sum psi^2/(1-lambda)) (sum (1-lambda) psi^2)`` and
    ``rhs = (sum psi^2)^2`` over ``i >= 2`` at the trap coordinate.  The
    second factor of ``lhs`` must be 1 and ``sum psi^2`` must be
    ``1 - pi_theta``.  Unpacks as ``lhs, rhs``.
    """
    trap, s, gaps = _prepare(g, trap, s)
    sq = s.eigenvectors[trap.theta, 1:] ** 2
    inverse_sum = float(np.sum(sq / gaps))
    gap_mass = float(np.sum(gaps * sq))
    tail = float(np.sum(sq))
    ok = abs(gap_mass - 1.0) <= VEC_TOL and abs(tail - (1.0 - trap.pi_theta)) <= VEC_TOL
    return CauchyCertificate(inverse_sum * gap_mass, tail * tail, gap_mass, tail, ok)


def cancelation_residual(g: Graph, s: Spectrum) -> float:
    """``max_{i>=2} |sum_j psi_i[j] sqrt(d_j / 2|E|)|``; zero by orthogonality."""
    deg = np.asarray(g.degrees, dtype=float)
    root = np.sqrt(deg / deg.sum())
    return float(np.max(np.abs(root @ s.eigenvectors[:, 1:]))) if g.vertex_count > 1 else 0.0


def is_bipartite_spectral(s: Spectrum, tol: float = EIG_TOL) -> bool:
    """A connected graph is bipartite iff -1 is a normalized eigenvalue."""
    return abs(s.eigenvalues[-1] + 1.0) <= tol
