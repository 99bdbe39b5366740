"""Problem definitions and certificate checks shared by every solver."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from ..errors import Infeasible, SizeMismatch
from ..graph import Graph, bits


class Mode(str, enum.Enum):
    NNSDF = "nnsdf"  # every f(N[v]) >= 0, minimise weight
    SDF = "sdf"  # every f(N[v]) >= 1, minimise weight
    S2IF = "s2if"  # every f(N[v]) <= 1, maximise weight

    @property
    def maximize(self) -> bool:
        return self is Mode.S2IF

    def admits(self, total: int) -> bool:
        if self is Mode.NNSDF:
            return total >= 0
        if self is Mode.SDF:
            return total >= 1
        return total <= 1


@dataclass(frozen=True)
class SignFunction:
    labels: tuple[int, ...]

    @classmethod
    def from_negative_mask(cls, n: int, mask: int) -> SignFunction:
        return cls(tuple(-1 if mask >> v & 1 else 1 for v in range(n)))

    @property
    def weight(self) -> int:
        return sum(self.labels)

    @property
    def positive(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == 1)

    @property
    def negative(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == -1)

    def value_on(self, vertices) -> int:
        return sum(self.labels[v] for v in vertices)

    def cut_size(self, g: Graph) -> int:
        """Number of edges joining V- to V+."""
        return sum(1 for u, v in g.edges() if self.labels[u] != self.labels[v])


@dataclass(frozen=True)
class SetProblem:
    """'packing': every |N[v] & X| <= k, maximise |X|.
    'tuple': every |N[v] & X| >= k, minimise |X|."""

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in ("packing", "tuple"):
            raise ValueError(f"unknown set problem {self.kind!r}")
        if self.k < 1:
            raise ValueError("k must be >= 1")

    @property
    def maximize(self) -> bool:
        return self.kind == "packing"


@dataclass
class ParameterResult:
    value: int
    witness: Union[SignFunction, frozenset]
    solver: str
    nodes_explored: int = 0
    elapsed: float = 0.0


def verify_sign_function(g: Graph, f: SignFunction, mode: Mode) -> bool:
    if len(f.labels) != g.n:
        raise SizeMismatch(f"{len(f.labels)} labels for {g.n} vertices")
    if any(x not in (-1, 1) for x in f.labels):
        return False
    return all(mode.admits(f.value_on(bits(g.closed[v]))) for v in g.vertices)


def verify_vertex_set(g: Graph, chosen, problem: SetProblem) -> bool:
    mask = 0
    for v in chosen:
        if not 0 <= v < g.n:
            raise SizeMismatch(f"vertex {v} outside 0..{g.n - 1}")
        mask |= 1 << v
    for v in g.vertices:
        c = (g.closed[v] & mask).bit_count()
        if problem.kind == "packing" and c > problem.k:
            return False
        if problem.kind == "tuple" and c < problem.k:
            return False
    return True


def check_tuple_feasible(g: Graph, k: int) -> None:
    if g.min_degree < k - 1:
        raise Infeasible(f"{k}-tuple domination needs min degree >= {k - 1}, got {g.min_degree}")


def sign_as_threshold(g: Graph, mode: Mode) -> tuple[str, list[int]]:
    """Recast a sign problem over X = V- as per-vertex count thresholds.

    With |N[v]| = m and c = |N[v] & X| we have f(N[v]) = m - 2c, so
    NNSDF needs c <= m // 2, SDF c <= (m - 1) // 2, and S2IF c >= m // 2.
    The first two maximise |X|, the last minimises it.
    """
    sizes = [c.bit_count() for c in g.closed]
    if mode is Mode.NNSDF:
        return "packing", [m // 2 for m in sizes]
    if mode is Mode.SDF:
        return "packing", [(m - 1) // 2 for m in sizes]
    return "tuple", [m // 2 for m in sizes]
