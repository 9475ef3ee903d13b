"""Closed forms and bounds for star-type graphs with the trap at the hub.

Everything here is a function of the composition alone (component vertex
and edge counts, component degrees), evaluated with :class:`fractions.Fraction`
so that equality checks against the exact solver are not blurred by
rounding.  Callers convert with ``float()`` at the boundary.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import GammaOutOfRange, InvalidSize, NotRegular
from .graph import StarTypeSpec

__all__ = [
    "BoundSet",
    "att_startype_closed_form",
    "kemeny_startype",
    "subdivided_counts",
    "lemma2_lower",
    "subdivided_lower",
    "prop1_upper",
    "restricted_att",
    "regular_degree",
    "corollary1_upper",
    "corollary2_upper",
    "bound_set",
    "scalefree_scaling_exponent",
]

log = logging.getLogger(__name__)


def att_startype_closed_form(spec: StarTypeSpec) -> Fraction:
    """``2|E'| / d_u - 1`` for the trap on the external vertex."""
    return Fraction(2 * spec.edge_count, spec.sum_vertices) - 1


def kemeny_startype(spec: StarTypeSpec):
    """Return ``(exact, approx)`` for the hub-trap Kemeny expression.

    ``exact = 2|E'|/(|V'|-1) + (|V'|-1)/(2|E'|) - 2`` and ``approx`` replaces
    the first two terms by ``<k> + 1/<k>`` with ``<k> = 2|E'|/|V'|``.
    """
    two_e, v = 2 * spec.edge_count, spec.vertex_count
    exact = Fraction(two_e, v - 1) + Fraction(v - 1, two_e) - 2
    k = Fraction(two_e, v)
    return exact, k + 1 / k - 2


def subdivided_counts(spec: StarTypeSpec, n: int):
    """Vertex and edge counts after subdividing component edges ``n`` times."""
    if n < 0:
        raise InvalidSize(f"subdivision order must be >= 0, got {n}")
    return spec.vertex_count + n * spec.sum_edges, spec.sum_vertices + (n + 1) * spec.sum_edges


def lemma2_lower(spec: StarTypeSpec) -> Fraction:
    return Fraction(4 * spec.sum_edges, spec.sum_vertices) + 1


def subdivided_lower(spec: StarTypeSpec, n: int) -> Fraction:
    """Degree lower bound ``2|E^n|/d_u - 1`` on the order-``n`` graph.

    Reduces to :func:`lemma2_lower` at ``n = 1``.
    """
    _, edges = subdivided_counts(spec, n)
    return Fraction(2 * edges, spec.sum_vertices) - 1


def prop1_upper(spec: StarTypeSpec) -> Fraction:
    se, d = spec.sum_edges, spec.sum_vertices
    return Fraction(4 * se * se + d * se + 4 * se, d + se) + 1


def restricted_att(spec: StarTypeSpec) -> Fraction:
    """Mean trapping time over the original component vertices of the
    first-order graph: ``4 sum|E_i| / sum|V_i| + 1``.
    """
    return Fraction(4 * spec.sum_edges, spec.sum_vertices) + 1


def regular_degree(spec: StarTypeSpec) -> Optional[int]:
    """Common component degree if every component vertex has it, else None."""
    degs = {d for c in spec.components for d in c.degrees}
    if len(degs) == 1:
        return degs.pop()
    return None


def corollary1_upper(spec: StarTypeSpec, d: int) -> Fraction:
    """Hub-trap ATT of the first-order graph when all components are ``d``-regular."""
    actual = regular_degree(spec)
    if actual != d:
        raise NotRegular(f"components are not {d}-regular (found degrees "
                         f"{sorted({x for c in spec.components for x in c.degrees})})")
    se, dt = spec.sum_edges, spec.sum_vertices
    return ((5 + 2 * d) * se + (1 + Fraction(d, 2)) * dt) / (dt + se)


def corollary2_upper(spec: StarTypeSpec, n: int) -> Fraction:
    """Parity-dependent upper bound on the order-``n`` hub-trap ATT.

    Both printed expressions are evaluated term by term; the sums over
    ``i`` are carried out directly.
    """
    if n < 1:
        raise InvalidSize(f"the parity bound needs n >= 1, got {n}")
    se, dt = spec.sum_edges, spec.sum_vertices
    vertices, _ = subdivided_counts(spec, n)
    half = n // 2
    if n % 2 == 0:
        inner = Fraction(n * dt, 2) + 2 * (n + 1) + 4 * sum(i * i for i in range(1, half + 1))
    else:
        inner = (Fraction(n * dt, 2) + 2 * (n + 1)
                 + 2 * sum(i * (2 * i + 1) for i in range(1, half + 1))
                 + sum(2 * i + 1 for i in range(0, half + 1)))
    return (n * (n + 1) * se * se + inner * se + dt) / Fraction(vertices - 1)


@dataclass(frozen=True)
class BoundSet:
    """Bounds on the hub-trap ATT of the order-``n`` subdivided graph.

    ``lower`` is the degree bound on that graph (:func:`lemma2_lower` at ``n=1``).
    ``upper_prop1``, ``upper_cor1`` and ``restricted_att`` are only defined
    at ``n=1``; ``upper_cor1`` additionally needs regular components.
    """

    n: int
    sum_E: int
    d_theta: int
    lower: Fraction
    upper_prop1: Optional[Fraction]
    upper_cor1: Optional[Fraction]
    upper_cor2: Optional[Fraction]
    restricted_att: Optional[Fraction]

    @property
    def degenerate(self) -> bool:
        """No component edges: the graph is a star and bounds collapse to 1."""
        return self.sum_E == 0

    def as_dict(self) -> dict:
        def f(x):
            return None if x is None else float(x)

        return {
            "n": self.n,
            "sum_e": self.sum_E,
            "d_theta": self.d_theta,
            "lower": f(self.lower),
            "upper_prop1": f(self.upper_prop1),
            "upper_cor1": f(self.upper_cor1),
            "upper_cor2": f(self.upper_cor2),
            "restricted_att": f(self.restricted_att),
        }


def bound_set(spec: StarTypeSpec, n: int) -> BoundSet:
    d = regular_degree(spec)
    first = n == 1
    bs = BoundSet(
        n=n,
        sum_E=spec.sum_edges,
        d_theta=spec.sum_vertices,
        lower=subdivided_lower(spec, n),
        upper_prop1=prop1_upper(spec) if first else None,
        upper_cor1=corollary1_upper(spec, d) if first and d is not None else None,
        upper_cor2=corollary2_upper(spec, n) if n >= 1 else None,
        restricted_att=restricted_att(spec) if first else None,
    )
    if bs.degenerate:
        log.info("no component edges: bounds coincide with the exact ATT of the star")
    return bs


def scalefree_scaling_exponent(gamma: float) -> float:
    """Predicted growth exponent of hub-trap ATT for degree exponent ``gamma``.

    With ``k_max ~ |V|^(1/(gamma-1))`` and ``|E| ~ |V|`` the degree bound
    grows like ``|V|^((gamma-2)/(gamma-1))``.
    """
    if not 2 < gamma < 3:
        raise GammaOutOfRange(f"gamma must lie in (2, 3), got {gamma}")
    return (gamma - 2) / (gamma - 1)
