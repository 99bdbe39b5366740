"""Exact solvers for the signed and set-valued domination parameters.

Three routes are available: ``oracle`` (exhaustive, capped), ``bnb``
(branch and bound, any graph) and ``treedp`` (trees only, sign modes).
``auto`` picks ``treedp`` for trees and ``bnb`` otherwise.
"""

from __future__ import annotations

from ..errors import NotATree
from ..graph import Graph
from .bnb import bnb_set, bnb_sign, threshold_search
from .oracle import ORACLE_CAP, oracle_set, oracle_sign
from .problems import (
    Mode,
    ParameterResult,
    SetProblem,
    SignFunction,
    check_tuple_feasible,
    verify_sign_function,
    verify_vertex_set,
)
from .treedp import tree_dp

STRATEGIES = ("auto", "oracle", "bnb", "treedp")

__all__ = [
    "ORACLE_CAP", "STRATEGIES", "Mode", "ParameterResult", "SetProblem", "SignFunction",
    "limited_packing_number", "nnsdn", "s2in", "sdn", "solve_set_optimum", "solve_sign_optimum",
    "threshold_search", "tree_dp_nnsdn", "tuple_domination_number", "verify_sign_function",
    "verify_vertex_set", "check_tuple_feasible",
]


def solve_sign_optimum(g: Graph, mode: Mode | str, strategy: str = "auto", oracle_cap: int = ORACLE_CAP) -> ParameterResult:
    mode = Mode(mode)
    if strategy == "auto":
        strategy = "treedp" if g.is_tree() else "bnb"
    if strategy == "oracle":
        return oracle_sign(g, mode, cap=oracle_cap)
    if strategy == "bnb":
        return bnb_sign(g, mode)
    if strategy == "treedp":
        return tree_dp(g, mode)
    raise ValueError(f"unknown strategy {strategy!r}")


def solve_set_optimum(g: Graph, problem: SetProblem, strategy: str = "auto", oracle_cap: int = ORACLE_CAP) -> ParameterResult:
    if strategy == "treedp":
        raise ValueError("treedp handles sign problems only")
    if strategy == "oracle":
        return oracle_set(g, problem, cap=oracle_cap)
    if strategy in ("auto", "bnb"):
        return bnb_set(g, problem)
    raise ValueError(f"unknown strategy {strategy!r}")


def nnsdn(g: Graph, strategy: str = "auto", **kw) -> ParameterResult:
    return solve_sign_optimum(g, Mode.NNSDF, strategy, **kw)


def sdn(g: Graph, strategy: str = "auto", **kw) -> ParameterResult:
    return solve_sign_optimum(g, Mode.SDF, strategy, **kw)


def s2in(g: Graph, strategy: str = "auto", **kw) -> ParameterResult:
    return solve_sign_optimum(g, Mode.S2IF, strategy, **kw)


def limited_packing_number(g: Graph, k: int, strategy: str = "auto", **kw) -> ParameterResult:
    return solve_set_optimum(g, SetProblem("packing", k), strategy, **kw)


def tuple_domination_number(g: Graph, k: int, strategy: str = "auto", **kw) -> ParameterResult:
    return solve_set_optimum(g, SetProblem("tuple", k), strategy, **kw)


def tree_dp_nnsdn(t: Graph) -> ParameterResult:
    if not t.is_tree():
        raise NotATree("tree DP needs a tree")
    return tree_dp(t, Mode.NNSDF)
