"""Radial Moore graphs: bounds, counting recurrence, constructions and searches."""

from .bounds import (
    BoundsReport,
    UnsupportedDegreeError,
    bounds_report,
    central_neighbor_status_upper,
    moore_bound,
    moore_status,
    total_status_upper,
    vertex_status_upper,
)
from .canon import (
    SearchBudgetExceeded,
    automorphism_group,
    automorphism_group_order,
    canonical_form,
    canonical_graph,
    is_isomorphic,
)
from .census import CensusResult, census, rank_by_status
from .enumerate import count_regular, enumerate_regular
from .gd import build_gd, gd_automorphisms, gd_total_status, transposition_map, verify_gd
from .graph import (
    Graph,
    StatusVector,
    check_structural_props,
    eccentricities,
    status_vector,
    statuses,
    verify_radial_moore,
)
from .recurrence import bound_table, central_upper_bound, closed_form_d7
from .roots import cubic_roots
from .swap import edge_swap_experiment, hoffman_singleton, swap_search

__version__ = "0.1.0"
