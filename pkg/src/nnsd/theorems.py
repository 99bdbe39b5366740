"""Closed-form bounds, identity checks, tree characterizations and the
per-graph verification report."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Union

from .codecs import MAX_GRAPH6_N, encode_graph6
from .errors import BadParams, CapExceeded, Infeasible, NotATree, NotCliqueFree, NotCubic, NotRegular, TooSmall
from .graph import Graph, StructureProfile, bits, clique_number, structure_profile, tree_profile
from .solvers import (
    ORACLE_CAP,
    Mode,
    ParameterResult,
    limited_packing_number,
    solve_sign_optimum,
    tuple_domination_number,
)

Number = Union[int, Fraction, Decimal]

TOL = Decimal("1e-9")
NEAR = Decimal("1e-6")
_PREC = 50

# Demonstrations of a bound known to be false; never counted as violations.
REFUTED_CHECKS = frozenset({"prior_bipartite_bound"})


@dataclass
class BoundCheck:
    name: str
    lhs: Number
    rhs: Number
    relation: str
    holds: bool
    tight: bool
    near_boundary: bool = False

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "lhs": _num_json(self.lhs),
            "rhs": _num_json(self.rhs),
            "relation": self.relation,
            "holds": self.holds,
            "tight": self.tight,
            "near_boundary": self.near_boundary,
        }


def _num_json(x: Number):
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return float(x)


def compare(name: str, lhs: Number, rhs: Number, relation: str) -> BoundCheck:
    """Compare exactly when both sides are rational, else within TOL."""
    if isinstance(lhs, Decimal) or isinstance(rhs, Decimal):
        with localcontext() as ctx:
            ctx.prec = _PREC
            margin = Decimal(lhs.numerator) / Decimal(lhs.denominator) if isinstance(lhs, Fraction) else Decimal(lhs)
            margin -= Decimal(rhs.numerator) / Decimal(rhs.denominator) if isinstance(rhs, Fraction) else Decimal(rhs)
        tight = abs(margin) <= TOL
        near = not tight and abs(margin) < NEAR
        if relation == ">=":
            holds = margin >= -TOL
        elif relation == "<=":
            holds = margin <= TOL
        else:
            holds = tight
        return BoundCheck(name, lhs, rhs, relation, holds, tight, near)
    margin = Fraction(lhs) - Fraction(rhs)
    if relation == ">=":
        holds = margin >= 0
    elif relation == "<=":
        holds = margin <= 0
    else:
        holds = margin == 0
    return BoundCheck(name, lhs, rhs, relation, holds, margin == 0)


def _sqrt_term(radicand: int) -> Union[int, Decimal]:
    root = math.isqrt(radicand)
    if root * root == radicand:
        return root
    with localcontext() as ctx:
        ctx.prec = _PREC
        return Decimal(radicand).sqrt()


# -- cached parameter evaluation ---------------------------------------------

class Evaluator:
    """Memoised parameter values for one graph."""

    def __init__(self, g: Graph, strategy: str = "auto", oracle_cap: int = ORACLE_CAP):
        self.g = g
        self.strategy = strategy
        self.oracle_cap = oracle_cap
        self._cache: dict[tuple, ParameterResult] = {}

    def _sign_strategy(self) -> str:
        if self.strategy == "treedp" and not self.g.is_tree():
            return "bnb"
        return self.strategy

    def _set_strategy(self) -> str:
        return "bnb" if self.strategy == "treedp" else self.strategy

    def sign(self, mode: Mode) -> ParameterResult:
        key = ("sign", mode)
        if key not in self._cache:
            self._cache[key] = solve_sign_optimum(self.g, mode, self._sign_strategy(), self.oracle_cap)
        return self._cache[key]

    def nnsdn(self) -> int:
        return self.sign(Mode.NNSDF).value

    def sdn(self) -> int:
        return self.sign(Mode.SDF).value

    def s2in(self) -> int:
        return self.sign(Mode.S2IF).value

    def lk(self, k: int) -> int:
        key = ("lk", k)
        if key not in self._cache:
            self._cache[key] = limited_packing_number(self.g, k, self._set_strategy(), oracle_cap=self.oracle_cap)
        return self._cache[key].value

    def tupledom(self, k: int) -> int:
        key = ("tupledom", k)
        if key not in self._cache:
            self._cache[key] = tuple_domination_number(self.g, k, self._set_strategy(), oracle_cap=self.oracle_cap)
        return self._cache[key].value


def _ev(g: Graph, ev: Evaluator | None) -> Evaluator:
    return ev if ev is not None else Evaluator(g)


# -- regular graphs ------------------------------------------------------------

def regular_ks(r: int) -> tuple[int, int]:
    """(packing k, tuple k) linking nnsdn to L_k and the k-tuple domination number."""
    return (r + 1) // 2, (r + 2) // 2


def check_regular_identities(g: Graph, ev: Evaluator | None = None) -> list[BoundCheck]:
    r = g.regular_degree()
    if r is None:
        raise NotRegular("graph is not regular")
    ev = _ev(g, ev)
    n = g.n
    nn = ev.nnsdn()
    kp, kt = regular_ks(r)
    checks = []
    lk = ev.lk(kp) if kp >= 1 else 0
    checks.append(compare("regular_packing_identity", nn, n - 2 * lk, "="))
    checks.append(compare("regular_tuple_identity", nn, 2 * ev.tupledom(kt) - n, "="))
    if r % 2 == 0:
        checks.append(compare("even_regular_sdn_identity", ev.sdn(), nn, "="))
    else:
        checks.append(compare("odd_regular_s2in_identity", nn, -ev.s2in(), "="))
        checks.append(compare("odd_regular_s2in_tuple_identity", ev.s2in(), n - 2 * ev.tupledom((r + 1) // 2), "="))
    return checks


def regular_bounds(n: int, r: int) -> tuple[Fraction, Fraction]:
    if r < 1 or n <= r:
        raise BadParams("regular bounds need r >= 1 and n > r")
    if r % 2 == 0:
        return Fraction(n, r + 1), Fraction(n * (r + 1), r + 3)
    return Fraction(0), Fraction(n * (r - 1), r + 1)


def regular_bound_checks(g: Graph, ev: Evaluator | None = None) -> list[BoundCheck]:
    r = g.regular_degree()
    if r is None:
        raise NotRegular("graph is not regular")
    lo, hi = regular_bounds(g.n, r)
    nn = _ev(g, ev).nnsdn()
    return [compare("regular_lower_bound", nn, lo, ">="), compare("regular_upper_bound", nn, hi, "<=")]


def cubic_upper_check(g: Graph, ev: Evaluator | None = None) -> BoundCheck:
    if g.regular_degree() != 3:
        raise NotCubic("graph is not 3-regular")
    return compare("cubic_upper_bound", _ev(g, ev).nnsdn(), Fraction(g.n, 3), "<=")


# -- clique-free graphs --------------------------------------------------------

def clique_free_lower_bound(n: int, r: int) -> Union[Fraction, Decimal]:
    """-2r/(r-1) + 2/(r-1) * sqrt(r^2 + r(r-1)n) - n; exact when the radicand is a square."""
    if r < 2 or n < 1:
        raise BadParams("needs r >= 2 and n >= 1")
    root = _sqrt_term(r * r + r * (r - 1) * n)
    if isinstance(root, int):
        return Fraction(2 * (root - r), r - 1) - n
    with localcontext() as ctx:
        ctx.prec = _PREC
        return (2 * (root - r)) / (r - 1) - n


def old_bipartite_bound(n: int) -> Union[Fraction, Decimal]:
    """2(-1 + sqrt(1 + 2n)) - n, a published lower bound that fails on the sigma family."""
    if n < 1:
        raise BadParams("needs n >= 1")
    root = _sqrt_term(1 + 2 * n)
    if isinstance(root, int):
        return Fraction(2 * (root - 1) - n)
    with localcontext() as ctx:
        ctx.prec = _PREC
        return 2 * (root - 1) - n


def clique_free_lower_check(g: Graph, r: int, ev: Evaluator | None = None) -> BoundCheck:
    if clique_number(g) >= r + 1:
        raise NotCliqueFree(f"graph contains K_{r + 1}")
    return compare(f"clique_free_lower_bound[r={r}]", _ev(g, ev).nnsdn(), clique_free_lower_bound(g.n, r), ">=")


def prior_bipartite_check(g: Graph, ev: Evaluator | None = None) -> BoundCheck:
    return compare("prior_bipartite_bound", _ev(g, ev).nnsdn(), old_bipartite_bound(g.n), ">=")


def _is_complete_multipartite(g: Graph) -> list[int] | None:
    """Part sizes if g is complete multipartite (complement a union of cliques)."""
    comp = g.complement()
    seen = 0
    sizes = []
    for v in g.vertices:
        if seen >> v & 1:
            continue
        part = comp.closed[v]
        for w in bits(part):
            if comp.closed[w] != part:
                return None
        seen |= part
        sizes.append(part.bit_count())
    return sizes


def turan_edge_check(g: Graph, r: int, known_clique_number: int | None = None) -> BoundCheck:
    """Edge bound for (r+1)-clique-free graphs.

    ``holds`` also requires that equality only occurs for balanced complete
    r-partite graphs with r | n.
    """
    omega = known_clique_number if known_clique_number is not None else clique_number(g)
    if omega >= r + 1:
        raise NotCliqueFree(f"graph contains K_{r + 1}")
    chk = compare(f"turan_edge_bound[r={r}]", g.num_edges, Fraction((r - 1) * g.n * g.n, 2 * r), "<=")
    if chk.tight:
        sizes = _is_complete_multipartite(g)
        certified = g.n % r == 0 and sizes is not None and sizes == [g.n // r] * r
        chk.holds = chk.holds and certified
    return chk


# -- general and trees ---------------------------------------------------------

def max_degree_lower_bound(g: Graph) -> int:
    return -g.n + 2 * ((g.max_degree + 2) // 2)


def delta_lower_check(g: Graph, ev: Evaluator | None = None) -> BoundCheck:
    return compare("max_degree_lower_bound", _ev(g, ev).nnsdn(), max_degree_lower_bound(g), ">=")


def _require_tree(t: Graph) -> None:
    if not t.is_tree():
        raise NotATree("graph is not a tree")


def theta_membership(t: Graph) -> bool:
    """Star-centred trees attaining the max-degree lower bound.

    Some max-degree vertex u must have every vertex outside N[u] be a leaf
    hanging off a set S of at most floor(D/2) neighbours of u, each of degree
    at most 3 (S is padded with leaf neighbours of u to reach floor(D/2)).
    """
    _require_tree(t)
    if t.n == 1:
        return True
    big = t.max_degree
    for u in t.vertices:
        if t.degree(u) != big:
            continue
        outside = t.full_mask & ~t.closed[u]
        supports = 0
        ok = True
        for x in bits(outside):
            if t.degree(x) != 1:
                ok = False
                break
            supports |= t.adj[x]
        if not ok or supports & ~t.adj[u]:
            continue
        if supports.bit_count() > big // 2:
            continue
        if all(t.degree(s) <= 3 for s in bits(supports)):
            return True
    return False


OMEGA_READINGS = ("support", "all")


def omega_membership(t: Graph, reading: str = "support") -> bool:
    """Trees attaining the leaf upper bound.

    Either an even star, or: no support has an even number of leaves, the
    supports dominate, and each support (``reading="support"``) or each vertex
    (``reading="all"``) has at most one non-leaf neighbour.
    """
    _require_tree(t)
    if t.n < 3:
        raise TooSmall("needs n >= 3")
    if reading not in OMEGA_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    if t.max_degree == t.n - 1 and (t.n - 1) % 2 == 0:
        return True
    prof = tree_profile(t)
    if any(c % 2 == 0 for c in prof.leaf_count.values()):
        return False
    smask = 0
    dom = 0
    for s in prof.supports:
        smask |= 1 << s
        dom |= t.closed[s]
    if dom != t.full_mask:
        return False
    nonleaf = t.full_mask & ~sum(1 << v for v in prof.leaves)
    pool = smask if reading == "support" else t.full_mask
    return all((t.adj[v] & nonleaf).bit_count() <= 1 for v in bits(pool))


def tree_upper_bounds(t: Graph) -> tuple[int, int]:
    """(n - ell - s', n - ell + s')."""
    prof = tree_profile(t)
    return t.n - prof.ell - prof.s_prime, t.n - prof.ell + prof.s_prime


def tree_upper_check(t: Graph, ev: Evaluator | None = None) -> list[BoundCheck]:
    """The minus form (adopted) and, for transparency, the plus form."""
    _require_tree(t)
    if t.n < 3:
        raise TooSmall("needs n >= 3")
    nn = _ev(t, ev).nnsdn()
    minus, plus = tree_upper_bounds(t)
    return [
        compare("tree_leaf_upper_bound", nn, minus, "<="),
        compare("tree_leaf_upper_bound_plus_form", nn, plus, "<="),
    ]


def _iff_check(name: str, equality: bool, member: bool) -> BoundCheck:
    return BoundCheck(name, int(equality), int(member), "iff", equality == member, equality and member)


# -- report ------------------------------------------------------------------------

@dataclass
class VerificationReport:
    graph: Graph
    graph_id: str | None
    profile: StructureProfile
    parameters: dict
    checks: list[BoundCheck] = field(default_factory=list)
    theta: bool | None = None
    omega: bool | None = None
    refuted_prior_bound: bool | None = None
    nnsdn_labels: list[int] | None = None
    errors: dict = field(default_factory=dict)

    @property
    def violations(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.holds and c.name not in REFUTED_CHECKS]

    def to_json(self) -> dict:
        g = self.graph
        tp = self.profile.tree
        doc = {
            "graph": {
                "n": g.n,
                "format": "graph6",
                "repr": encode_graph6(g).decode("ascii") if g.n <= MAX_GRAPH6_N else None,
            },
            "profile": {
                "delta": self.profile.delta,
                "Delta": self.profile.Delta,
                "regular": self.profile.regular_degree,
                "clique_number": self.profile.clique_number,
                "is_tree": tp.is_tree,
                "ell": tp.ell if tp.is_tree else None,
                "s_prime": tp.s_prime if tp.is_tree else None,
            },
            "parameters": self.parameters,
            "checks": [c.to_json() for c in self.checks],
            "characterizations": {"theta": self.theta, "omega": self.omega},
            "witnesses": {"nnsdn_labels": self.nnsdn_labels},
            "refuted_prior_bound": self.refuted_prior_bound,
        }
        if self.errors:
            doc["errors"] = self.errors
        return doc


def run_report(
    g: Graph,
    graph_id: str | None = None,
    strategy: str = "auto",
    oracle_cap: int = ORACLE_CAP,
    all_r: bool = False,
    lk: int | None = None,
    tupledom: int | None = None,
) -> VerificationReport:
    ev = Evaluator(g, strategy, oracle_cap)
    prof = structure_profile(g)
    errors: dict = {}

    def attempt(key, fn):
        try:
            return fn()
        except (CapExceeded, Infeasible) as exc:
            errors[key] = f"{type(exc).__name__}: {exc}"
            return None

    params: dict = {
        "nnsdn": attempt("nnsdn", ev.nnsdn),
        "sdn": attempt("sdn", ev.sdn),
        "s2in": attempt("s2in", ev.s2in),
        "lk": None,
        "tupledom": None,
    }
    r = prof.regular_degree
    if lk is None and r:
        lk = regular_ks(r)[0]
    if tupledom is None and r:
        tupledom = regular_ks(r)[1]
    if lk:
        v = attempt("lk", lambda: ev.lk(lk))
        params["lk"] = {"k": lk, "value": v} if v is not None else None
    if tupledom:
        v = attempt("tupledom", lambda: ev.tupledom(tupledom))
        params["tupledom"] = {"k": tupledom, "value": v} if v is not None else None

    rep = VerificationReport(g, graph_id, prof, params, errors=errors)
    if params["nnsdn"] is None:
        return rep
    rep.nnsdn_labels = list(ev.sign(Mode.NNSDF).witness.labels)

    def add(fn):
        out = attempt("checks", fn)
        if out is not None:
            rep.checks.extend(out if isinstance(out, list) else [out])

    if r:
        add(lambda: check_regular_identities(g, ev))
        add(lambda: regular_bound_checks(g, ev))
        if r == 3:
            add(lambda: cubic_upper_check(g, ev))

    base_r = max(2, prof.clique_number)
    for rr in (range(base_r, max(base_r, g.n) + 1) if all_r else [base_r]):
        rep.checks.append(turan_edge_check(g, rr, prof.clique_number))
        rep.checks.append(clique_free_lower_check(g, rr, ev))

    if g.is_bipartite():
        pc = prior_bipartite_check(g, ev)
        rep.checks.append(pc)
        rep.refuted_prior_bound = not pc.holds

    dl = delta_lower_check(g, ev)
    rep.checks.append(dl)

    if prof.tree.is_tree:
        rep.theta = theta_membership(g)
        rep.checks.append(_iff_check("max_degree_bound_characterization", dl.tight, rep.theta))
        if g.n >= 3:
            ups = tree_upper_check(g, ev)
            rep.checks.extend(ups)
            rep.omega = omega_membership(g)
            rep.checks.append(_iff_check("leaf_bound_characterization", ups[0].tight, rep.omega))
    return rep
