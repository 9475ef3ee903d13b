"""Average trapping time of random walks on graphs with a single trap."""
from .exact import TrapSpec, TrappingTimes, att, is_optimal, kemeny, lower_bound, trapping_times_exact
from .graph import (
    Graph,
    StarTypeSpec,
    complete,
    compose_star_type,
    cycle,
    from_edge_list,
    generate_preferential_attachment,
    is_dominating_set,
    isolated,
    path,
    star,
    subdivide,
    universal_vertices,
)
from .montecarlo import SimConfig, SimEstimate, simulate
from .spectral import att_spectral, cauchy_bound_certificate, normalized_spectrum, weighted_att_spectral

__version__ = "0.1.0"
