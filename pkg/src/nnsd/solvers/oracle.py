"""Exhaustive enumeration over all 2^n labelings / subsets.

Evaluates the definitions literally (signed sums over closed neighbourhoods,
or closed-neighbourhood hit counts) so it stays independent of the
threshold reformulation used by branch and bound.
"""

from __future__ import annotations

import time

import numpy as np

from ..errors import CapExceeded
from ..graph import Graph
from .problems import Mode, ParameterResult, SetProblem, SignFunction, check_tuple_feasible

ORACLE_CAP = 26
_CHUNK_BITS = 16


def _closed_matrix(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n), dtype=np.float32)
    for v in g.vertices:
        for w in range(g.n):
            if g.closed[v] >> w & 1:
                m[v, w] = 1.0
    return m


def _chunks(n: int):
    shifts = np.arange(n, dtype=np.int64)
    total = 1 << n
    step = 1 << _CHUNK_BITS
    for start in range(0, total, step):
        masks = np.arange(start, min(total, start + step), dtype=np.int64)
        yield masks, ((masks[:, None] >> shifts) & 1).astype(np.float32)


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded(f"oracle capped at n={cap}, graph has n={g.n}")


def oracle_sign(g: Graph, mode: Mode, cap: int = ORACLE_CAP) -> ParameterResult:
    """Optimum over every +-1 labeling; ties go to the smallest V- bitmask."""
    _check_cap(g, cap)
    t0 = time.perf_counter()
    closed = _closed_matrix(g)
    best_w = None
    best_mask = None
    for masks, neg in _chunks(g.n):
        labels = 1.0 - 2.0 * neg
        sums = labels @ closed
        if mode is Mode.NNSDF:
            ok = (sums >= 0).all(axis=1)
        elif mode is Mode.SDF:
            ok = (sums >= 1).all(axis=1)
        else:
            ok = (sums <= 1).all(axis=1)
        if not ok.any():
            continue
        weights = labels.sum(axis=1)[ok]
        idx = int(np.argmax(weights) if mode.maximize else np.argmin(weights))
        w = int(round(weights[idx]))
        if best_w is None or (w > best_w if mode.maximize else w < best_w):
            best_w = w
            best_mask = int(masks[ok][idx])
    return ParameterResult(
        value=best_w,
        witness=SignFunction.from_negative_mask(g.n, best_mask),
        solver="oracle",
        nodes_explored=1 << g.n,
        elapsed=time.perf_counter() - t0,
    )


def oracle_set(g: Graph, problem: SetProblem, cap: int = ORACLE_CAP) -> ParameterResult:
    _check_cap(g, cap)
    if problem.kind == "tuple":
        check_tuple_feasible(g, problem.k)
    t0 = time.perf_counter()
    closed = _closed_matrix(g)
    best = None
    best_mask = None
    for masks, chosen in _chunks(g.n):
        hits = chosen @ closed
        if problem.kind == "packing":
            ok = (hits <= problem.k).all(axis=1)
        else:
            ok = (hits >= problem.k).all(axis=1)
        if not ok.any():
            continue
        sizes = chosen.sum(axis=1)[ok]
        idx = int(np.argmax(sizes) if problem.maximize else np.argmin(sizes))
        s = int(round(sizes[idx]))
        if best is None or (s > best if problem.maximize else s < best):
            best = s
            best_mask = int(masks[ok][idx])
    return ParameterResult(
        value=best,
        witness=frozenset(v for v in g.vertices if best_mask >> v & 1),
        solver="oracle",
        nodes_explored=1 << g.n,
        elapsed=time.perf_counter() - t0,
    )
