import math
import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import brute_has_clique, prufer_tree_classes, tree_automorphisms, tree_canonical_form
from nnsd import families as fam
from nnsd.codecs import encode_graph6
from nnsd.errors import BadParams, RetriesExhausted
from nnsd.graph import is_clique_free, tree_profile


def test_star3():
    g = fam.star(3)
    assert g.n == 4 and g.degree(0) == 3 and g.max_degree == 3
    assert all(g.neighbors(i) == [0] for i in range(1, 4))


def test_multipartite_222_has_twelve_edges():
    assert fam.complete_multipartite([2, 2, 2]).num_edges == 12


def test_path6():
    g = fam.path(6)
    assert g.num_edges == 5 and len(tree_profile(g).leaves) == 2


@pytest.mark.parametrize("build", [lambda: fam.path(0), lambda: fam.cycle(2), lambda: fam.star(0),
                                   lambda: fam.turan(3, 4), lambda: fam.complete_multipartite([2, 0]),
                                   lambda: fam.sigma(0), lambda: fam.FamilySpec("nope").build()])
def test_bad_params(build):
    with pytest.raises(BadParams):
        build()


def test_family_spec_builds():
    assert fam.FamilySpec("turan", (6, 3)).build() == fam.turan(6, 3)
    assert fam.FamilySpec("complete_multipartite", (2, 3)).build() == fam.complete_multipartite([2, 3])


def test_turan_examples():
    assert fam.turan(6, 3) == fam.complete_multipartite([2, 2, 2])
    assert fam.turan(6, 3).num_edges == 12 == Fraction(3 - 1, 2 * 3) * 36
    assert fam.turan(5, 2).num_edges == 6 < Fraction(25, 4)
    assert fam.turan(4, 4) == fam.complete(4)


def test_turan_extremal_edge_count_equality_iff_divisible():
    for n in range(1, 21):
        for r in range(1, n + 1):
            g = fam.turan(n, r)
            sizes = fam.turan_part_sizes(n, r)
            assert max(sizes) - min(sizes) <= 1 and sum(sizes) == n
            bound = Fraction(r - 1, 2 * r) * n * n
            assert g.num_edges <= bound
            assert (g.num_edges == bound) == (n % r == 0)
            assert n == r or is_clique_free(g, r + 1)


@given(graphs(max_n=5), graphs(max_n=4))
@settings(max_examples=60, deadline=None)
def test_corona_structure(g1, g2):
    c = fam.corona(g1, g2)
    n1, n2 = g1.n, g2.n
    assert c.n == n1 + n1 * n2
    assert c.num_edges == g1.num_edges + n1 * g2.num_edges + n1 * n2
    for i in range(n1):
        copy = range(n1 + i * n2, n1 + (i + 1) * n2)
        for w in copy:
            # a copy vertex sees exactly its own centre inside G1
            assert [u for u in c.neighbors(w) if u < n1] == [i]
            assert all(u in copy for u in c.neighbors(w) if u >= n1)


def test_corona_k2_k2bar():
    c = fam.corona(fam.path(2), fam.empty(2))
    assert c.n == 6 and sorted(c.degrees()) == [1, 1, 1, 1, 3, 3]


def test_corona_p3_is_obs_tree_minus_three():
    c = fam.corona(fam.path(3), fam.empty(2))
    assert c == fam.observation_tree(-3) and c.n == 9


@pytest.mark.parametrize("p", [1, 2, 3])
def test_sigma_shape(p):
    g = fam.sigma(p)
    assert g.n == 2 * p + 2 * p * (p + 1)
    assert g.is_bipartite() and g.is_connected()
    centres = fam.corona_centers(2 * p)
    assert all(g.degree(c) == p + p + 1 for c in centres)


def test_sigma_sizes():
    assert fam.sigma(1).n == 6 and fam.sigma(3).n == 30


@pytest.mark.parametrize("r, p, n", [(2, 1, 6), (2, 2, 16), (3, 1, 12), (2, 3, 30)])
def test_equality_family_sizes(r, p, n):
    g = fam.clique_free_equality_family(r, p)
    assert g.n == n
    assert is_clique_free(g, r + 1) and not is_clique_free(g, r)


def test_equality_family_r2_is_sigma():
    assert fam.clique_free_equality_family(2, 3) == fam.sigma(3)


def test_observation_tree_shapes():
    assert fam.observation_tree(0) == fam.path(2)
    assert fam.observation_tree(4) == fam.path(12)
    assert fam.observation_tree(-2) == fam.corona(fam.path(2), fam.empty(2))
    assert fam.observation_tree(-1).n == 5
    for k in range(-5, 6):
        assert fam.observation_tree(k).is_tree()


def test_prism_is_cubic_and_k33_is_bipartite():
    assert fam.g6_prism().regular_degree() == 3 and not fam.g6_prism().is_bipartite()
    assert fam.g6_k33().regular_degree() == 3 and fam.g6_k33().is_bipartite()
    assert fam.prism_copies(3).n == 18


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 1), (4, 2), (7, 11), (10, 106), (12, 551), (13, 1301)])
def test_free_tree_counts(n, count):
    assert sum(1 for _ in fam.enumerate_free_trees(n)) == count


@pytest.mark.parametrize("n", range(1, 9))
def test_free_trees_match_prufer_oracle(n):
    forms = [tree_canonical_form(n, t.edges()) for t in fam.enumerate_free_trees(n)]
    assert len(forms) == len(set(forms))
    assert set(forms) == prufer_tree_classes(n)


@pytest.mark.parametrize("n", range(1, 15))
def test_free_trees_satisfy_cayley_orbit_count(n):
    trees = list(fam.enumerate_free_trees(n))
    assert all(t.is_tree() and t.n == n for t in trees)
    forms = {tree_canonical_form(n, t.edges()) for t in trees}
    assert len(forms) == len(trees)
    labeled = sum(math.factorial(n) // tree_automorphisms(n, t.edges()) for t in trees)
    assert labeled == (n ** (n - 2) if n >= 2 else 1)


def test_free_tree_range():
    with pytest.raises(BadParams):
        list(fam.enumerate_free_trees(0))


def test_random_regular_examples():
    g = fam.random_regular(8, 3, 1)
    assert g.regular_degree() == 3
    with pytest.raises(BadParams):
        fam.random_regular(5, 3, 1)
    c = fam.random_regular(6, 2, 5)
    assert c.regular_degree() == 2
    h = nx.Graph(c.edges())
    assert all(len(comp) >= 3 for comp in nx.connected_components(h))
    assert sum(len(cyc) for cyc in nx.cycle_basis(h)) == 6


def test_random_regular_hundred_draws():
    rng = random.Random(99)
    for _ in range(100):
        n = rng.randint(4, 14)
        r = rng.choice([d for d in range(1, n) if n * d % 2 == 0])
        g = fam.random_regular(n, r, rng)
        assert g.regular_degree() == r


def test_random_regular_is_deterministic():
    assert encode_graph6(fam.random_regular(12, 3, 42)) == encode_graph6(fam.random_regular(12, 3, 42))


def test_random_regular_retry_cap():
    with pytest.raises(RetriesExhausted):
        fam.random_regular(12, 5, 0, max_tries=1)


@pytest.mark.parametrize("n", range(1, 8))
def test_triangle_free_counts_match_atlas(n):
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)
             and not any(nx.triangles(g).values())]
    ours = fam.connected_triangle_free(n)
    assert len(ours) == len(atlas)
    assert all(g.is_connected() and not brute_has_clique(g, 3) for g in ours)


def test_triangle_free_counts_larger():
    counts = [len(gs) for _, gs in fam.triangle_free_levels(9)]
    assert counts == [1, 1, 1, 3, 6, 19, 59, 267, 1380]


@given(st.integers(1, 6))
def test_certificate_is_label_invariant(n):
    g = fam.path(n)
    perm = list(range(n))[::-1]
    assert fam.canonical_certificate(g) == fam.canonical_certificate(g.relabel(perm))
