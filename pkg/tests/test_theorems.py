import math
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from nnsd import families as fam
from nnsd.errors import BadParams, NotATree, NotCliqueFree, NotCubic, NotRegular, TooSmall
from nnsd.graph import disjoint_union
from nnsd.solvers import Mode, nnsdn
from nnsd.theorems import (
    Evaluator,
    REFUTED_CHECKS,
    check_regular_identities,
    clique_free_lower_bound,
    clique_free_lower_check,
    compare,
    cubic_upper_check,
    delta_lower_check,
    max_degree_lower_bound,
    old_bipartite_bound,
    omega_membership,
    regular_bound_checks,
    regular_bounds,
    run_report,
    theta_membership,
    tree_upper_bounds,
    tree_upper_check,
    turan_edge_check,
)


def _by_name(checks):
    return {c.name: c for c in checks}


def test_compare_exact_and_tolerant():
    c = compare("x", 2, Fraction(2), "<=")
    assert c.holds and c.tight and not c.near_boundary
    c = compare("x", 1, Fraction(4, 3), ">=")
    assert not c.holds and not c.tight
    d = compare("x", -2, Decimal(-2) + Decimal("1e-12"), ">=")
    assert d.holds and d.tight
    e = compare("x", 0, Decimal("1e-7"), ">=")
    assert not e.holds and e.near_boundary
    assert compare("x", 3, 3, "=").holds and not compare("x", 3, 1, "=").holds


def test_regular_identities_c4():
    chk = _by_name(check_regular_identities(fam.cycle(4)))
    assert chk["regular_packing_identity"].holds and chk["regular_packing_identity"].rhs == 2
    assert chk["regular_tuple_identity"].holds and chk["regular_tuple_identity"].rhs == 2
    assert chk["even_regular_sdn_identity"].holds


def test_regular_identities_k4():
    chk = _by_name(check_regular_identities(fam.complete(4)))
    assert chk["regular_packing_identity"].lhs == 0
    assert all(c.holds for c in chk.values())


def test_regular_identities_k33():
    chk = _by_name(check_regular_identities(fam.g6_k33()))
    c = chk["odd_regular_s2in_identity"]
    assert c.holds and c.lhs == 2 and c.rhs == 2
    assert chk["odd_regular_s2in_tuple_identity"].lhs == -2


def test_regular_identities_needs_regular():
    with pytest.raises(NotRegular):
        check_regular_identities(fam.path(4))


@pytest.mark.parametrize(
    "n, r, bounds",
    [(4, 2, (Fraction(4, 3), Fraction(12, 5))), (4, 3, (Fraction(0), Fraction(2))), (5, 4, (Fraction(1), Fraction(25, 7)))],
)
def test_regular_bounds_examples(n, r, bounds):
    assert regular_bounds(n, r) == bounds


def test_regular_bound_sharpness():
    c4 = _by_name(regular_bound_checks(fam.cycle(4)))["regular_upper_bound"]
    assert c4.holds and c4.lhs == 2 and not c4.tight
    assert _by_name(regular_bound_checks(fam.cycle(5)))["regular_upper_bound"].tight
    assert _by_name(regular_bound_checks(fam.complete(4)))["regular_lower_bound"].tight
    assert _by_name(regular_bound_checks(fam.complete(5)))["regular_lower_bound"].tight


@pytest.mark.parametrize("n, r", [(3, 3), (4, 0)])
def test_regular_bounds_reject(n, r):
    with pytest.raises(BadParams):
        regular_bounds(n, r)


def test_cubic_upper():
    assert cubic_upper_check(fam.g6_prism()).tight
    two = disjoint_union(fam.g6_prism(), fam.g6_prism())
    c = cubic_upper_check(two)
    assert c.lhs == 4 and c.tight
    with pytest.raises(NotCubic):
        cubic_upper_check(fam.cycle(5))


def test_cubic_upper_random_n12():
    for seed in range(5):
        c = cubic_upper_check(fam.random_regular(12, 3, seed))
        assert c.holds and c.lhs <= 4


@pytest.mark.parametrize("n, r, value", [(30, 2, -18), (12, 3, -6), (6, 2, -2)])
def test_clique_free_lower_bound_examples(n, r, value):
    b = clique_free_lower_bound(n, r)
    assert isinstance(b, Fraction) and b == value


@given(st.integers(1, 200), st.integers(2, 8))
def test_clique_free_lower_bound_matches_float_formula(n, r):
    b = clique_free_lower_bound(n, r)
    ref = -2 * r / (r - 1) + 2 / (r - 1) * math.sqrt(r * r + r * (r - 1) * n) - n
    assert abs(float(b) - ref) < 1e-9


def test_old_bound_values():
    assert abs(float(old_bipartite_bound(6)) - (-0.7889)) < 1e-4
    assert abs(float(old_bipartite_bound(30)) - (-16.3795)) < 1e-4
    assert old_bipartite_bound(4) == 0


def test_equality_family_hits_bound():
    for r, p in [(2, 1), (2, 2), (3, 1)]:
        g = fam.clique_free_equality_family(r, p)
        c = clique_free_lower_check(g, r)
        assert c.holds and c.tight and c.lhs == fam.clique_free_equality_value(r, p)


def test_clique_free_needs_clique_free():
    with pytest.raises(NotCliqueFree):
        clique_free_lower_check(fam.complete(4), 2)


@pytest.mark.parametrize(
    "g, r, tight", [(fam.turan(6, 3), 3, True), (fam.cycle(5), 2, False), (fam.turan(5, 2), 2, False)]
)
def test_turan_edge_examples(g, r, tight):
    c = turan_edge_check(g, r)
    assert c.holds and c.tight is tight


def test_turan_edge_rhs():
    assert turan_edge_check(fam.cycle(5), 2).rhs == Fraction(25, 4)


def test_delta_lower():
    k5 = delta_lower_check(fam.complete(5))
    assert k5.rhs == 1 and k5.lhs == 1 and k5.tight
    assert delta_lower_check(fam.sigma(1)).tight
    assert max_degree_lower_bound(fam.star(4)) == -5 + 2 * 3


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_delta_lower_always_holds(g):
    assert delta_lower_check(g).holds


@pytest.mark.parametrize("t, member", [(fam.path(2), True), (fam.path(4), True), (fam.path(7), False), (fam.star(4), True)])
def test_theta_examples(t, member):
    assert theta_membership(t) is member


@pytest.mark.parametrize(
    "t, member, value",
    [(fam.star(2), True, 1), (fam.star(3), True, 0), (fam.corona(fam.path(2), fam.empty(2)), False, -2), (fam.path(6), True, 2)],
)
def test_omega_examples(t, member, value):
    assert omega_membership(t) is member
    assert nnsdn(t).value == value


def test_omega_reading_validation():
    with pytest.raises(ValueError):
        omega_membership(fam.path(5), "neither")
    with pytest.raises(TooSmall):
        omega_membership(fam.path(2))
    with pytest.raises(NotATree):
        theta_membership(fam.cycle(4))


@pytest.mark.parametrize("t, rhs, tight", [(fam.path(5), 1, True), (fam.path(7), 3, False), (fam.star(4), 1, True)])
def test_tree_upper_examples(t, rhs, tight):
    minus = tree_upper_check(t)[0]
    assert minus.holds and minus.rhs == rhs and minus.tight is tight


def test_tree_upper_records_plus_form():
    minus, plus = tree_upper_check(fam.path(5))
    assert plus.name.endswith("plus_form") and plus.rhs == 5 - 2 + 2
    assert tree_upper_bounds(fam.path(5)) == (1, 5)
    with pytest.raises(TooSmall):
        tree_upper_check(fam.path(2))


def test_omega_members_attain_leaf_bound():
    # membership is sufficient for equality on every tree with 3 <= n <= 11
    for n in range(3, 12):
        for t in fam.enumerate_free_trees(n):
            if omega_membership(t):
                assert nnsdn(t).value == tree_upper_bounds(t)[0]


def test_report_sigma1():
    rep = run_report(fam.sigma(1))
    chk = _by_name(rep.checks)
    assert chk["clique_free_lower_bound[r=2]"].tight and chk["clique_free_lower_bound[r=2]"].lhs == -2
    assert not chk["prior_bipartite_bound"].holds and rep.refuted_prior_bound is True
    assert chk["max_degree_lower_bound"].tight
    assert "prior_bipartite_bound" in REFUTED_CHECKS and rep.violations == []


def test_report_prism():
    rep = run_report(fam.g6_prism())
    chk = _by_name(rep.checks)
    assert chk["regular_packing_identity"].holds and chk["regular_tuple_identity"].holds
    assert chk["cubic_upper_bound"].tight


def test_report_p6():
    rep = run_report(fam.path(6))
    chk = _by_name(rep.checks)
    assert chk["max_degree_lower_bound"].holds and chk["max_degree_lower_bound"].rhs == -2
    assert chk["tree_leaf_upper_bound"].tight and chk["tree_leaf_upper_bound"].rhs == 2
    assert rep.omega is True


def test_report_p7_nontight():
    rep = run_report(fam.path(7))
    c = _by_name(rep.checks)["tree_leaf_upper_bound"]
    assert c.holds and not c.tight and rep.omega is False and rep.violations == []


def test_report_json_schema():
    doc = run_report(fam.cycle(4)).to_json()
    assert set(doc) == {"graph", "profile", "parameters", "checks", "characterizations", "witnesses", "refuted_prior_bound"}
    assert doc["graph"] == {"n": 4, "format": "graph6", "repr": "Cl"}
    assert set(doc["profile"]) == {"delta", "Delta", "regular", "clique_number", "is_tree", "ell", "s_prime"}
    assert doc["parameters"]["lk"] == {"k": 1, "value": 1}
    assert doc["parameters"]["tupledom"] == {"k": 2, "value": 3}
    for c in doc["checks"]:
        assert set(c) == {"name", "lhs", "rhs", "relation", "holds", "tight", "near_boundary"}
    assert len(doc["witnesses"]["nnsdn_labels"]) == 4


def test_report_all_r_and_cap_errors():
    rep = run_report(fam.cycle(5), all_r=True)
    names = {c.name for c in rep.checks}
    assert {"turan_edge_bound[r=2]", "turan_edge_bound[r=5]"} <= names
    capped = run_report(fam.path(8), strategy="oracle", oracle_cap=4)
    assert "nnsdn" in capped.errors and capped.to_json()["errors"]


def test_evaluator_memoises():
    ev = Evaluator(fam.cycle(6))
    assert ev.sign(Mode.NNSDF) is ev.sign(Mode.NNSDF)
    assert ev.lk(1) == 2 and ev.tupledom(2) == 4
