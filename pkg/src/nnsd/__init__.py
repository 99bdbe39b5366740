"""Exact nonnegative signed domination and companion parameters."""

from .graph import Graph, StructureProfile, TreeProfile, clique_number, is_clique_free, make_graph, structure_profile
from .solvers import (
    Mode,
    ParameterResult,
    SignFunction,
    limited_packing_number,
    nnsdn,
    s2in,
    sdn,
    solve_sign_optimum,
    tree_dp_nnsdn,
    tuple_domination_number,
    verify_sign_function,
)

__version__ = "0.1.0"
