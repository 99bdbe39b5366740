"""Branch and bound over 0/1 memberships with closed-neighbourhood count thresholds.

Two problem shapes cover every parameter:

* packing: |N[v] & X| <= cap[v] for all v, maximise |X|
* covering: |N[v] & X| >= need[v] for all v, minimise |X|

Sign problems map onto these with X = V- (see ``problems.sign_as_threshold``).
Branching always takes the lowest-index undecided vertex of the tightest
constraint, so witnesses are deterministic.
"""

from __future__ import annotations

import time

from ..graph import Graph
from .problems import (
    Mode,
    ParameterResult,
    SetProblem,
    SignFunction,
    check_tuple_feasible,
    sign_as_threshold,
)


class _Packing:
    def __init__(self, closed: tuple[int, ...], cap: list[int]):
        self.closed = closed
        self.cap = cap
        self.n = len(closed)
        self.nodes = 0
        self.best, self.best_mask = self._greedy()

    def _greedy(self) -> tuple[int, int]:
        order = sorted(range(self.n), key=lambda v: (self.closed[v].bit_count(), v))
        count = [0] * self.n
        mask = 0
        for v in order:
            ws = [w for w in range(self.n) if self.closed[w] >> v & 1]
            if all(count[w] < self.cap[w] for w in ws):
                mask |= 1 << v
                for w in ws:
                    count[w] += 1
        return mask.bit_count(), mask

    def run(self) -> tuple[int, int]:
        self._search(0, (1 << self.n) - 1, 0)
        return self.best, self.best_mask

    def _search(self, chosen: int, undecided: int, size: int) -> None:
        self.nodes += 1
        closed, cap, n = self.closed, self.cap, self.n
        resid = [0] * n
        # saturated neighbourhoods exclude their undecided vertices
        for v in range(n):
            r = cap[v] - (closed[v] & chosen).bit_count()
            resid[v] = r
            if r <= 0:
                undecided &= ~closed[v]
        cons = []
        for v in range(n):
            avail = closed[v] & undecided
            if avail:
                a = avail.bit_count()
                if a > resid[v]:
                    cons.append((resid[v], v, avail, a))
        if not cons:
            total = size + undecided.bit_count()
            if total > self.best:
                self.best, self.best_mask = total, chosen | undecided
            return

        rem = undecided
        ub = 0
        for r, v, avail, a in sorted(cons, key=lambda c: (c[0] - c[3], c[1])):
            grp = avail & rem
            gc = grp.bit_count()
            if gc > r:
                ub += r
                rem &= ~grp
        ub += rem.bit_count()
        if size + ub <= self.best:
            return

        r, v, avail, a = min(cons, key=lambda c: (c[0], c[1]))
        low = avail & -avail
        self._search(chosen | low, undecided & ~low, size + 1)
        self._search(chosen, undecided & ~low, size)


class _Covering:
    def __init__(self, closed: tuple[int, ...], need: list[int]):
        self.closed = closed
        self.need = need
        self.n = len(closed)
        self.nodes = 0
        self.best, self.best_mask = self._greedy()

    def _greedy(self) -> tuple[int, int]:
        n = self.n
        count = [c.bit_count() for c in self.closed]
        mask = (1 << n) - 1
        order = sorted(range(n), key=lambda v: (-self.closed[v].bit_count(), v))
        for v in order:
            ws = [w for w in range(n) if self.closed[w] >> v & 1]
            if all(count[w] > self.need[w] for w in ws):
                mask &= ~(1 << v)
                for w in ws:
                    count[w] -= 1
        return mask.bit_count(), mask

    def run(self) -> tuple[int, int]:
        self._search(0, (1 << self.n) - 1, 0)
        return self.best, self.best_mask

    def _search(self, chosen: int, undecided: int, size: int) -> None:
        self.nodes += 1
        closed, need, n = self.closed, self.need, self.n
        while True:
            cons = []
            forced = 0
            for v in range(n):
                d = need[v] - (closed[v] & chosen).bit_count()
                if d <= 0:
                    continue
                avail = closed[v] & undecided
                a = avail.bit_count()
                if a < d:
                    return
                if a == d:
                    forced |= avail
                cons.append((d, v, avail, a))
            if not forced:
                break
            chosen |= forced
            undecided &= ~forced
            size += forced.bit_count()
            if size >= self.best:
                return
        if not cons:
            if size < self.best:
                self.best, self.best_mask = size, chosen
            return

        rem = undecided
        lb = 0
        for d, v, avail, a in sorted(cons, key=lambda c: (-c[0], c[1])):
            if avail & ~rem == 0:
                lb += d
                rem &= ~avail
        if size + lb >= self.best:
            return

        d, v, avail, a = min(cons, key=lambda c: (c[3] - c[0], -c[0], c[1]))
        low = avail & -avail
        self._search(chosen | low, undecided & ~low, size + 1)
        self._search(chosen, undecided & ~low, size)


def threshold_search(closed: tuple[int, ...], bounds: list[int], kind: str) -> tuple[int, int, int]:
    """Return (optimal size, optimal mask, nodes explored)."""
    engine = _Packing(closed, bounds) if kind == "packing" else _Covering(closed, bounds)
    size, mask = engine.run()
    return size, mask, engine.nodes


def bnb_sign(g: Graph, mode: Mode) -> ParameterResult:
    t0 = time.perf_counter()
    kind, bounds = sign_as_threshold(g, mode)
    size, mask, nodes = threshold_search(g.closed, bounds, kind)
    f = SignFunction.from_negative_mask(g.n, mask)
    return ParameterResult(f.weight, f, "bnb", nodes, time.perf_counter() - t0)


def bnb_set(g: Graph, problem: SetProblem) -> ParameterResult:
    t0 = time.perf_counter()
    if problem.kind == "tuple":
        check_tuple_feasible(g, problem.k)
    size, mask, nodes = threshold_search(g.closed, [problem.k] * g.n, problem.kind)
    witness = frozenset(v for v in g.vertices if mask >> v & 1)
    return ParameterResult(size, witness, "bnb", nodes, time.perf_counter() - t0)
