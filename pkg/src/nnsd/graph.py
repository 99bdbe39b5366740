"""Immutable simple graphs on vertices 0..n-1 backed by integer bitsets.

Neighbourhoods are Python ints used as bitsets, so intersection is ``&`` and
counting is ``int.bit_count``.  Everything the solvers do reduces to those two
operations on closed neighbourhoods.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import EmptyGraph, IndexOutOfRange, SelfLoop


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "adj", "closed", "had_duplicates", "_edges")

    def __init__(self, n: int, adj: Iterable[int], had_duplicates: bool = False):
        self.n = n
        self.adj = tuple(adj)
        self.closed = tuple(a | (1 << v) for v, a in enumerate(self.adj))
        self.had_duplicates = had_duplicates
        self._edges = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_neighbors(self, v: int) -> list[int]:
        return list(bits(self.closed[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        if self._edges is None:
            self._edges = [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]
        return list(self._edges)

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def regular_degree(self) -> int | None:
        degs = self.degrees()
        return degs[0] if min(degs) == max(degs) else None

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def is_tree(self) -> bool:
        return self.num_edges == self.n - 1 and self.is_connected()

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in bits(self.adj[v]):
                    if color[w] < 0:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return False
        return True

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, ((full & ~a) & ~(1 << v) for v, a in enumerate(self.adj)))

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex v renamed to perm[v]."""
        return make_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list, collapsing duplicate edges.

    Duplicates are not an error; they set ``had_duplicates`` on the result.
    """
    if n < 1:
        raise EmptyGraph("graphs must have at least one vertex")
    adj = [0] * n
    dup = False
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if adj[u] >> v & 1:
            dup = True
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, had_duplicates=dup)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return make_graph(offset, edges)


def clique_number(g: Graph) -> int:
    """Exact maximum clique size; branch and bound with greedy colouring bounds."""
    adj = g.adj
    best = 0

    def color_order(cand: int) -> tuple[list[int], list[int]]:
        order, colors = [], []
        uncolored = cand
        k = 0
        while uncolored:
            k += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                colors.append(k)
                uncolored &= ~low
                avail &= ~low & ~adj[v]
        return order, colors

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order, colors = color_order(cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best:
                return
            v = order[i]
            sub = cand & adj[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, g.full_mask)
    return best


def is_clique_free(g: Graph, q: int) -> bool:
    """True iff ``g`` has no complete subgraph on ``q`` vertices."""
    if q < 2:
        raise ValueError("q must be at least 2")
    return clique_number(g) < q


@dataclass(frozen=True)
class TreeProfile:
    is_tree: bool
    leaves: frozenset[int] = frozenset()
    supports: frozenset[int] = frozenset()
    leaf_count: dict[int, int] = field(default_factory=dict)
    ell: int = 0
    s_prime: int = 0


@dataclass(frozen=True)
class StructureProfile:
    delta: int
    Delta: int
    regular_degree: int | None
    clique_number: int
    tree: TreeProfile


def tree_profile(g: Graph) -> TreeProfile:
    if not g.is_tree():
        return TreeProfile(is_tree=False)
    if g.n < 2:
        return TreeProfile(is_tree=True)
    leaves = frozenset(v for v in g.vertices if g.degree(v) == 1)
    leaf_mask = sum(1 << v for v in leaves)
    leaf_count = {}
    for v in g.vertices:
        c = (g.adj[v] & leaf_mask).bit_count()
        if c:
            leaf_count[v] = c
    return TreeProfile(
        is_tree=True,
        leaves=leaves,
        supports=frozenset(leaf_count),
        leaf_count=leaf_count,
        ell=sum(leaf_count.values()),
        s_prime=sum(1 for c in leaf_count.values() if c % 2),
    )


def structure_profile(g: Graph) -> StructureProfile:
    degs = g.degrees()
    return StructureProfile(
        delta=min(degs),
        Delta=max(degs),
        regular_degree=g.regular_degree(),
        clique_number=clique_number(g),
        tree=tree_profile(g),
    )
