"""Exact dynamic program for sign problems on trees.

Rooted at vertex 0.  The state of a vertex v is (f(v), f(v) + sum of its
children's signs); children are merged one at a time.  A child's own
constraint is closed when its parent's sign is known, the root's at the end.
"""

from __future__ import annotations

import time
from collections import deque

from ..errors import NotATree
from ..graph import Graph, bits
from .problems import Mode, ParameterResult, SignFunction

State = tuple[int, int]


def _rooted(g: Graph) -> tuple[list[int], list[list[int]]]:
    order = [0]
    children: list[list[int]] = [[] for _ in g.vertices]
    seen = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in bits(g.adj[v] & ~seen):
            seen |= 1 << w
            children[v].append(w)
            order.append(w)
            queue.append(w)
    return order, children


def tree_dp(g: Graph, mode: Mode) -> ParameterResult:
    if not g.is_tree():
        raise NotATree("tree DP needs a tree")
    t0 = time.perf_counter()
    order, children = _rooted(g)
    maximize = mode.maximize

    def better(a: int, b: int) -> bool:
        return a > b if maximize else a < b

    table: list[dict[State, int]] = [{} for _ in g.vertices]
    trace: list[list[dict[State, tuple[int, State]]]] = [[] for _ in g.vertices]
    nodes = 0
    for v in reversed(order):
        cur = {(s, s): s for s in (-1, 1)}
        steps = []
        for c in children[v]:
            merged: dict[State, int] = {}
            back: dict[State, tuple[int, State]] = {}
            for (s, t), w in sorted(cur.items()):
                for (sc, tc), wc in sorted(table[c].items()):
                    nodes += 1
                    if not mode.admits(tc + s):
                        continue
                    key = (s, t + sc)
                    val = w + wc
                    if key not in merged or better(val, merged[key]):
                        merged[key] = val
                        back[key] = (t, (sc, tc))
            cur = merged
            steps.append(back)
        table[v] = cur
        trace[v] = steps

    best_state = None
    for st, w in sorted(table[0].items()):
        if mode.admits(st[1]) and (best_state is None or better(w, table[0][best_state])):
            best_state = st
    value = table[0][best_state]

    labels = [0] * g.n
    stack = [(0, best_state)]
    while stack:
        v, (s, t) = stack.pop()
        labels[v] = s
        kids = children[v]
        for i in range(len(kids) - 1, -1, -1):
            prev_t, cstate = trace[v][i][(s, t)]
            stack.append((kids[i], cstate))
            t = prev_t
    return ParameterResult(value, SignFunction(tuple(labels)), "treedp", nodes, time.perf_counter() - t0)
