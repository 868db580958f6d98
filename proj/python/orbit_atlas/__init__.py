"""Orbits of line stabilizers on the flag variety of GL(n).

Thin re-export of the compiled extension.
"""

from ._orbit_atlas import (
    Permutation,
    act,
    bruhat_leq,
    closure_leq,
    count_orbits,
    count_pil,
    egf_si_coeff,
    enumerate_orbits,
    enumerate_pil_with_list,
    is_share_pair,
    length,
    monoid_left,
    monoid_right,
    orbit_graph,
    orbit_graph_dot,
    root_type,
    run_verification,
    sigma_cycle,
    tau_from_delta,
    total_orbit_counts,
    triangle,
    twisted_length,
)

__all__ = [
    "Permutation",
    "act",
    "bruhat_leq",
    "closure_leq",
    "count_orbits",
    "count_pil",
    "egf_si_coeff",
    "enumerate_orbits",
    "enumerate_pil_with_list",
    "is_share_pair",
    "length",
    "monoid_left",
    "monoid_right",
    "orbit_graph",
    "orbit_graph_dot",
    "root_type",
    "run_verification",
    "sigma_cycle",
    "tau_from_delta",
    "total_orbit_counts",
    "triangle",
    "twisted_length",
]
