from hypothesis import given, settings
import networkx as nx
import pytest

from sgcolor.data.catalog import Q3_BLACK, clique, cycle_graph, path_graph, q3, q3_sigma
from sgcolor.exceptions import DuplicateEdge, IndexOutOfRange, NotAWalk, SelfLoop, UnderlyingMismatch
from sgcolor.models.graph import Balanced, Sign, SignedGraph, Unbalanced
from sgcolor.services.parity_dsu import ParityDSU
from sgcolor.services.switching import (
    add_universal_positive,
    build_graph,
    disjoint_union,
    full_join,
    induced_subgraph,
    is_balanced,
    is_balanced_set,
    negative_edges_form_cut,
    negative_subgraph,
    normalize_star,
    sign_of_closed_walk,
    switch,
    switching_equivalent,
)

from .strategies import graphs_with_switching, signature_pairs, signed_graphs


def test_build_graph_normalizes_edges():
    g = build_graph(3, [(2, 0, "-"), (1, 0, "+")])
    assert g.edges == ((0, 1, Sign.POS), (0, 2, Sign.NEG))
    assert g.sign(2, 0) is Sign.NEG
    assert g.sign(1, 2) is None


@pytest.mark.parametrize(
    "edges, error",
    [
        ([(0, 1, "+"), (1, 0, "-")], DuplicateEdge),
        ([(1, 1, "+")], SelfLoop),
        ([(0, 3, "-")], IndexOutOfRange),
    ],
)
def test_build_graph_rejects_bad_edges(edges, error):
    with pytest.raises(error):
        build_graph(3, edges)


def test_switch_single_vertex_flips_incident_edges():
    g = clique(3, Sign.NEG)
    switched = switch(g, {0})
    assert switched.sign(0, 1) is Sign.POS
    assert switched.sign(0, 2) is Sign.POS
    assert switched.sign(1, 2) is Sign.NEG


def test_switch_rejects_unknown_vertex():
    with pytest.raises(IndexOutOfRange):
        switch(clique(3), {5})


@given(graphs_with_switching())
def test_switch_is_involution(case):
    g, W = case
    assert switch(switch(g, W), W) == g


@settings(max_examples=100, deadline=None)
@given(graphs_with_switching(max_n=7))
def test_switch_preserves_cycle_signs(case):
    g, W = case
    switched = switch(g, W)
    for cycle in nx.simple_cycles(g.underlying()):
        walk = list(cycle) + [cycle[0]]
        assert sign_of_closed_walk(g, walk) is sign_of_closed_walk(switched, walk)


def test_sign_of_closed_walk_counts_repeated_edges():
    g = path_graph(2, Sign.NEG)
    assert sign_of_closed_walk(g, [0, 1, 0]) is Sign.POS
    assert sign_of_closed_walk(clique(3, Sign.NEG), [0, 1, 2, 0]) is Sign.NEG


@pytest.mark.parametrize("walk", [[], [0, 1, 2], [0, 2, 0]])
def test_sign_of_closed_walk_rejects_non_walks(walk):
    with pytest.raises(NotAWalk):
        sign_of_closed_walk(path_graph(3), walk)


def test_negative_triangle_is_unbalanced():
    cert = is_balanced(clique(3, Sign.NEG))
    assert isinstance(cert, Unbalanced)
    assert cert.cycle[0] == cert.cycle[-1]
    assert sign_of_closed_walk(clique(3, Sign.NEG), cert.cycle) is Sign.NEG


def test_q3_sigma_is_switching_of_positive_cube():
    cert = is_balanced(q3_sigma())
    assert isinstance(cert, Balanced)
    assert all(s is Sign.POS for _, _, s in switch(q3_sigma(), cert.switching).edges)
    assert switch(q3_sigma(), Q3_BLACK) == q3()
    W = switching_equivalent(q3_sigma(), q3())
    assert W is not None
    assert switch(q3_sigma(), W) == q3()


@settings(max_examples=200)
@given(signed_graphs())
def test_balance_certificates_are_sound(g):
    cert = is_balanced(g)
    if isinstance(cert, Balanced):
        assert all(s is Sign.POS for _, _, s in switch(g, cert.switching).edges)
        assert negative_edges_form_cut(g, cert.switching)
    else:
        assert sign_of_closed_walk(g, cert.cycle) is Sign.NEG


@given(graphs_with_switching())
def test_switching_equivalent_finds_witness(case):
    g, W = case
    target = switch(g, W)
    found = switching_equivalent(g, target)
    assert found is not None
    assert switch(g, found) == target


def test_switching_equivalent_rejects_different_cycle_signs():
    assert switching_equivalent(cycle_graph(4, Sign.POS), switch(cycle_graph(4, Sign.POS), {0})) is not None
    odd = SignedGraph(n=4, edges=[(0, 1, "-"), (1, 2, "+"), (2, 3, "+"), (0, 3, "+")])
    assert switching_equivalent(cycle_graph(4), odd) is None


def test_switching_equivalent_needs_same_underlying():
    with pytest.raises(UnderlyingMismatch):
        switching_equivalent(path_graph(3), clique(3))


def all_subsets(n):
    return (frozenset(v for v in range(n) if mask >> v & 1) for mask in range(1 << n))


@settings(max_examples=150, deadline=None)
@given(signature_pairs(max_n=7))
def test_switching_equivalent_none_matches_brute_force(pair):
    g, h = pair
    found = switching_equivalent(g, h)
    reachable = any(switch(g, W) == h for W in all_subsets(g.n))
    assert (found is not None) == reachable
    if found is not None:
        assert switch(g, found) == h


@settings(max_examples=150, deadline=None)
@given(signed_graphs(max_n=7))
def test_balanced_iff_positive_switching_iff_negative_cut(g):
    balanced = isinstance(is_balanced(g), Balanced)
    positive = SignedGraph(n=g.n, edges=[(u, v, Sign.POS) for u, v, _ in g.edges])
    assert (switching_equivalent(g, positive) is not None) == balanced
    assert any(negative_edges_form_cut(g, W) for W in all_subsets(g.n)) == balanced


def test_induced_subgraph_relabels_vertices():
    g = cycle_graph(5, Sign.NEG)
    sub, vmap = induced_subgraph(g, [4, 0, 2])
    assert vmap == [0, 2, 4]
    assert sub.n == 3
    assert sub.edges == ((0, 2, Sign.NEG),)
    assert is_balanced_set(g, [0, 1, 2])
    assert not is_balanced_set(clique(3, Sign.NEG), [0, 1, 2])


def test_negative_subgraph_keeps_isolated_vertices():
    g = SignedGraph(n=4, edges=[(0, 1, "-"), (1, 2, "+")])
    neg = negative_subgraph(g)
    assert sorted(neg.nodes()) == [0, 1, 2, 3]
    assert sorted(neg.edges()) == [(0, 1)]


def test_joins_and_unions():
    union = disjoint_union(clique(2, Sign.NEG), clique(2))
    assert union.n == 4 and union.m == 2
    assert union.sign(2, 3) is Sign.POS

    joined = full_join(clique(2, Sign.NEG), clique(2), lambda u, v: "-" if u == 0 else "+")
    assert joined.m == 6
    assert joined.sign(0, 2) is Sign.NEG and joined.sign(1, 3) is Sign.POS

    star = add_universal_positive(clique(3, Sign.NEG))
    assert star.n == 4
    assert all(star.sign(v, 3) is Sign.POS for v in range(3))


def test_normalize_star_makes_center_edges_positive():
    g = SignedGraph(n=4, edges=[(0, 1, "-"), (0, 2, "+"), (0, 3, "-"), (1, 3, "+")])
    normalized, W = normalize_star(g, 0)
    assert W == frozenset({1, 3})
    assert all(normalized.sign(0, w) is Sign.POS for w in (1, 2, 3))
    assert normalized.sign(1, 3) is Sign.POS


def test_parity_dsu_detects_conflicts_and_rolls_back():
    dsu = ParityDSU(4)
    assert dsu.union(0, 1, odd=True)
    assert dsu.union(1, 2, odd=True)
    assert dsu.consistent(0, 2, odd=False)
    assert not dsu.consistent(0, 2, odd=True)
    mark = dsu.checkpoint()
    assert not dsu.union(0, 2, odd=True)
    assert dsu.union(2, 3, odd=False)
    assert dsu.find(3)[0] == dsu.find(0)[0]
    dsu.rollback(mark)
    assert dsu.peek(3) == (3, 0)
    assert dsu.find(0)[0] == dsu.find(2)[0]
