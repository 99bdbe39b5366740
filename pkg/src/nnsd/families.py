"""Graph families: standard graphs, coronas, the extremal constructions,
free-tree enumeration, connected triangle-free enumeration and seeded
random regular graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BadParams, RetriesExhausted
from .graph import Graph, bits, disjoint_union, make_graph

FAMILY_KINDS = (
    "path", "cycle", "star", "complete", "empty", "complete_multipartite", "turan",
    "sigma", "clique_free_equality", "observation_tree", "random_regular",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def build(self) -> Graph:
        if self.kind not in _BUILDERS:
            raise BadParams(f"unknown family kind {self.kind!r}")
        return _BUILDERS[self.kind](*self.params)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    _need(k >= 1, "star needs k >= 1")
    return make_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return make_graph(n, [])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Parts occupy consecutive index blocks in the given order."""
    _need(len(sizes) >= 1 and all(s >= 1 for s in sizes), "part sizes must be >= 1")
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    n = len(part)
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]])


def turan_part_sizes(n: int, r: int) -> list[int]:
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan(n: int, r: int) -> Graph:
    _need(1 <= r <= n, "turan needs 1 <= r <= n")
    return complete_multipartite(turan_part_sizes(n, r))


def corona(g1: Graph, g2: Graph) -> Graph:
    """G1 keeps labels 0..n1-1; copy i of G2 occupies n1 + i*n2 .. n1 + (i+1)*n2 - 1."""
    n1, n2 = g1.n, g2.n
    edges = list(g1.edges())
    for i in range(n1):
        base = n1 + i * n2
        edges += [(base + u, base + v) for u, v in g2.edges()]
        edges += [(i, base + j) for j in range(n2)]
    return make_graph(n1 + n1 * n2, edges)


def sigma(p: int) -> Graph:
    """K_{p,p} o complement(K_{p+1}); centres are 0..2p-1 (see ``corona_centers``)."""
    _need(p >= 1, "sigma needs p >= 1")
    return corona(complete_multipartite([p, p]), empty(p + 1))


def corona_centers(g1_order: int) -> range:
    return range(g1_order)


def clique_free_equality_family(r: int, p: int) -> Graph:
    """H o complement(K_{(r-1)p+1}) with H complete r-partite, p vertices per part."""
    _need(r >= 2 and p >= 1, "needs r >= 2 and p >= 1")
    return corona(complete_multipartite([p] * r), empty((r - 1) * p + 1))


def clique_free_equality_value(r: int, p: int) -> int:
    return -r * r * p * p + r * p * p


def observation_tree(k: int) -> Graph:
    """A tree whose nonnegative signed domination number is k.

    k <= -2 uses P_|k| o complement(K_2). At k = -1 that corona is K_{1,2},
    whose value is 1, so the smallest tree of value -1 is used instead:
    K_{1,3} with one edge subdivided.
    """
    if k == -1:
        return make_graph(5, [(0, 1), (0, 3), (0, 4), (1, 2)])
    if k < 0:
        return corona(path(-k), empty(2))
    if k == 0:
        return path(2)
    return path(3 * k)


def g6_prism() -> Graph:
    """The triangular prism K_3 x K_2."""
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def g6_k33() -> Graph:
    return complete_multipartite([3, 3])


def prism_copies(m: int) -> Graph:
    _need(m >= 1, "need at least one copy")
    return disjoint_union(*[g6_prism()] * m)


# -- free trees -------------------------------------------------------------

def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical level sequence (Beyer-Hedetniemi step)."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """(first root subtree re-rooted at level 0, the tree with it removed)."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    return [x - 1 for x in seq[1:m]], [0] + seq[m:]


def _is_canonical_free(seq: list[int]) -> bool:
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    if rh < lh:
        return False
    if rh == lh:
        if len(left) > len(rest):
            return False
        if len(left) == len(rest) and left > rest:
            return False
    return True


def _jump(seq: list[int]) -> list[int] | None:
    left, _ = _split(seq)
    p = len(left)
    nxt = _next_rooted(seq, p)
    if nxt is None:
        return None
    if seq[p] > 2:
        new_left, _ = _split(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def level_sequence_to_graph(seq: Sequence[int]) -> Graph:
    stack: list[int] = []
    edges = []
    for v, lev in enumerate(seq):
        del stack[lev:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return make_graph(len(seq), edges)


def free_tree_level_sequences(n: int) -> Iterator[list[int]]:
    """Level sequences of the non-isomorphic free trees on n vertices (WROM order)."""
    _need(1 <= n <= 16, "free tree enumeration supports 1 <= n <= 16")
    if n <= 2:
        yield list(range(n))
        return
    seq = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        while seq is not None and not _is_canonical_free(seq):
            seq = _jump(seq)
        if seq is None:
            return
        yield seq
        seq = _next_rooted(seq)


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    for seq in free_tree_level_sequences(n):
        yield level_sequence_to_graph(seq)


# -- connected triangle-free graphs ------------------------------------------

def _independent_sets(g: Graph) -> Iterator[int]:
    """All nonempty independent vertex sets of g, as bitmasks."""

    def rec(chosen: int, cand: int) -> Iterator[int]:
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            s = chosen | low
            yield s
            yield from rec(s, cand & ~g.adj[v])

    yield from rec(0, g.full_mask)


def canonical_certificate(g: Graph) -> bytes:
    """nauty certificate: equal iff the graphs are isomorphic."""
    import pynauty

    pg = pynauty.Graph(g.n, adjacency_dict={v: g.neighbors(v) for v in g.vertices})
    return pynauty.certificate(pg)


def triangle_free_levels(max_n: int) -> Iterator[tuple[int, list[Graph]]]:
    """Yield (n, graphs) for n = 1..max_n, one representative per isomorphism
    class of connected triangle-free graphs on n vertices.

    Built by vertex extension: every connected graph has a non-cut vertex, so
    attaching a new vertex to each nonempty independent set of each graph on
    n - 1 vertices reaches every class; nauty certificates remove duplicates.
    """
    _need(1 <= max_n <= 12, "triangle-free enumeration supports 1 <= n <= 12")
    level = [make_graph(1, [])]
    yield 1, level
    for m in range(2, max_n + 1):
        seen: set[bytes] = set()
        out = []
        for g in level:
            base = g.edges()
            for s in _independent_sets(g):
                h = make_graph(m, base + [(v, m - 1) for v in bits(s)])
                cert = canonical_certificate(h)
                if cert not in seen:
                    seen.add(cert)
                    out.append(h)
        level = out
        yield m, level


def connected_triangle_free(n: int) -> list[Graph]:
    for m, graphs in triangle_free_levels(n):
        if m == n:
            return graphs


# -- random regular ---------------------------------------------------------

def random_regular(n: int, r: int, seed: int | random.Random | None = None, max_tries: int = 200_000) -> Graph:
    """Simple r-regular graph from the configuration model with full-restart rejection.

    Dense requests are drawn as the complement of an (n - 1 - r)-regular
    graph; complementation is a bijection, so the law stays uniform.
    """
    _need(n >= 1 and 0 <= r < n, "random_regular needs 0 <= r < n")
    _need(n * r % 2 == 0, "n * r must be even")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if 2 * r > n - 1:
        return random_regular(n, n - 1 - r, rng, max_tries).complement()
    points = [v for v in range(n) for _ in range(r)]
    for _ in range(max_tries):
        rng.shuffle(points)
        adj = [0] * n
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or adj[u] >> v & 1:
                ok = False
                break
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if ok:
            return Graph(n, adj)
    raise RetriesExhausted(f"no simple {r}-regular graph on {n} vertices after {max_tries} tries")


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "empty": empty,
    "complete_multipartite": lambda *sizes: complete_multipartite(sizes),
    "turan": turan,
    "sigma": sigma,
    "clique_free_equality": clique_free_equality_family,
    "observation_tree": observation_tree,
    "random_regular": random_regular,
}
