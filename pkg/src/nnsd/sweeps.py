"""Exhaustive and sampled verification sweeps."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from .codecs import decode_graph6, encode_graph6
from .families import enumerate_free_trees, random_regular, triangle_free_levels
from .graph import Graph
from .solvers import Mode, solve_sign_optimum
from .theorems import (
    Evaluator,
    check_regular_identities,
    clique_free_lower_bound,
    compare,
    cubic_upper_check,
    max_degree_lower_bound,
    omega_membership,
    regular_bound_checks,
    theta_membership,
    tree_upper_bounds,
)

TREE_MAX_N = 14
TRIANGLE_FREE_MAX_N = 10

TREE_COLUMNS = (
    "n", "trees", "theta_members", "omega_members", "max_degree_tight", "leaf_bound_tight",
    "theta_mismatches", "omega_mismatches", "leaf_bound_violations",
    "omega_alt_mismatches", "plus_form_tight", "plus_form_mismatches",
)
REGULAR_COLUMNS = ("n", "r", "samples", "checks", "violations", "tight_upper", "tight_lower")
TRIANGLE_FREE_COLUMNS = ("n", "graphs", "violations", "tight", "near_boundary", "min_margin")


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def default_jobs() -> int:
    return os.cpu_count() or 1


def classify_tree(code: bytes) -> dict:
    """Everything the tree sweep needs about one tree, keyed by flag name."""
    t = decode_graph6(code)
    nn = solve_sign_optimum(t, Mode.NNSDF, "treedp").value
    out = {"theta": theta_membership(t), "max_degree_tight": nn == max_degree_lower_bound(t), "nnsdn": nn}
    if t.n >= 3:
        minus, plus = tree_upper_bounds(t)
        out.update(
            omega=omega_membership(t, "support"),
            omega_alt=omega_membership(t, "all"),
            leaf_ok=nn <= minus,
            leaf_tight=nn == minus,
            plus_tight=nn == plus,
        )
    return out


def tree_sweep(max_n: int, jobs: int = 1, min_n: int = 1) -> list[dict]:
    rows = []
    for n in range(min_n, max_n + 1):
        codes = [encode_graph6(t) for t in enumerate_free_trees(n)]
        res = _pmap(classify_tree, codes, jobs)
        row = dict.fromkeys(TREE_COLUMNS, 0)
        row["n"] = n
        row["trees"] = len(res)
        for c in res:
            row["theta_members"] += c["theta"]
            row["max_degree_tight"] += c["max_degree_tight"]
            row["theta_mismatches"] += c["theta"] != c["max_degree_tight"]
            if n >= 3:
                row["omega_members"] += c["omega"]
                row["leaf_bound_tight"] += c["leaf_tight"]
                row["omega_mismatches"] += c["omega"] != c["leaf_tight"]
                row["leaf_bound_violations"] += not c["leaf_ok"]
                row["omega_alt_mismatches"] += c["omega_alt"] != c["leaf_tight"]
                row["plus_form_tight"] += c["plus_tight"]
                row["plus_form_mismatches"] += c["omega"] != c["plus_tight"]
        rows.append(row)
    return rows


def tree_findings(rows: list[dict]) -> int:
    return sum(r["theta_mismatches"] + r["omega_mismatches"] + r["leaf_bound_violations"] for r in rows)


def regular_sample_checks(g: Graph) -> list:
    ev = Evaluator(g)
    checks = check_regular_identities(g, ev) + regular_bound_checks(g, ev)
    if g.regular_degree() == 3:
        checks.append(cubic_upper_check(g, ev))
    checks.append(compare("nnsdn_parity", ev.nnsdn() % 2, g.n % 2, "="))
    checks.append(compare("sdn_parity", ev.sdn() % 2, g.n % 2, "="))
    checks.append(compare("s2in_parity", ev.s2in() % 2, g.n % 2, "="))
    return checks


def _regular_worker(code: bytes) -> list[tuple[str, bool, bool]]:
    return [(c.name, c.holds, c.tight) for c in regular_sample_checks(decode_graph6(code))]


def regular_samples(n: int, r: int, samples: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_regular(n, r, rng) for _ in range(samples)]


def regular_sweep(n: int, r: int, samples: int, seed: int, jobs: int = 1) -> dict:
    codes = [encode_graph6(g) for g in regular_samples(n, r, samples, seed)]
    results = _pmap(_regular_worker, codes, jobs)
    flat = [c for res in results for c in res]
    return {
        "n": n,
        "r": r,
        "samples": samples,
        "checks": len(flat),
        "violations": sum(1 for _, holds, _ in flat if not holds),
        "tight_upper": sum(1 for name, _, tight in flat if tight and name == "regular_upper_bound"),
        "tight_lower": sum(1 for name, _, tight in flat if tight and name == "regular_lower_bound"),
    }


def _triangle_free_worker(code: bytes) -> tuple[int, bool, bool, bool, float]:
    g = decode_graph6(code)
    nn = solve_sign_optimum(g, Mode.NNSDF).value
    chk = compare("clique_free_lower_bound[r=2]", nn, clique_free_lower_bound(g.n, 2), ">=")
    return nn, chk.holds, chk.tight, chk.near_boundary, float(nn - chk.rhs)


def triangle_free_sweep(max_n: int, jobs: int = 1, keep_tight: list | None = None) -> list[dict]:
    """Check the triangle-free lower bound on every connected triangle-free graph.

    Tight graphs are appended to ``keep_tight`` when a list is given.
    """
    rows = []
    for n, graphs in triangle_free_levels(max_n):
        res = _pmap(_triangle_free_worker, [encode_graph6(g) for g in graphs], jobs)
        row = {
            "n": n,
            "graphs": len(graphs),
            "violations": sum(1 for r in res if not r[1]),
            "tight": sum(1 for r in res if r[2]),
            "near_boundary": sum(1 for r in res if r[3]),
            "min_margin": round(min(r[4] for r in res), 9),
        }
        if keep_tight is not None:
            keep_tight.extend(g for g, r in zip(graphs, res) if r[2])
        rows.append(row)
    return rows
