from ._sgc import (
    Graph,
    SgcError,
    brute_force_chi_c,
    brute_force_negative_girth,
    chi_c,
    complete_graph,
    decide_colorable,
    family,
    is_far_polar_cycle,
    layer_winding_parities,
    lemma_suite,
    negative_girth,
    odd_girth,
    run_cli,
    s_construction,
    verify_coloring,
    winding,
)

__all__ = [
    "Graph",
    "SgcError",
    "brute_force_chi_c",
    "brute_force_negative_girth",
    "chi_c",
    "complete_graph",
    "decide_colorable",
    "family",
    "is_far_polar_cycle",
    "layer_winding_parities",
    "lemma_suite",
    "negative_girth",
    "odd_girth",
    "run_cli",
    "s_construction",
    "verify_coloring",
    "winding",
]
