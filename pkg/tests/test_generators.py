from collections import Counter

import networkx as nx
import pytest

from sgcolor.data.catalog import clique, positive_completion_of_cycle
from sgcolor.exceptions import BadParams, IndexOutOfRange, SamplingExhausted, SelfLoop
from sgcolor.models.construction import Orientation
from sgcolor.models.graph import Sign
from sgcolor.services.constructive import is_connected
from sgcolor.services.detect import has_neg_k4, has_neg_triangle, in_forb_class, is_cograph
from sgcolor.services.generators import (
    arc_graph,
    enumerate_cographs,
    gen_family,
    gen_shift,
    gen_signed_shift3,
    girth_family,
    make_rng,
    random_cograph,
    random_girth_graph,
    random_graph,
    random_k3free_signed_graph,
    random_k4free_signed_graph,
    random_orientation,
    random_signed_graph,
    sample_p4class_member,
    shift_vertices,
    signed_line_graph,
    with_sign,
)
from sgcolor.services.patterns import p4_class


def test_gen_family():
    assert gen_family("neg_clique", i=4) == clique(4, Sign.NEG)
    assert gen_family("positive_completion", graph=nx.cycle_graph(5)) == positive_completion_of_cycle(5)
    all_neg = gen_family("all_neg", graph=nx.path_graph(3))
    assert all_neg.edges == ((0, 1, Sign.NEG), (1, 2, Sign.NEG))


@pytest.mark.parametrize(
    "name, params",
    [
        ("neg_clique", {"i": 0}),
        ("neg_clique", {}),
        ("all_neg", {}),
        ("unknown", {"i": 3}),
    ],
)
def test_gen_family_rejects_bad_params(name, params):
    with pytest.raises(BadParams):
        gen_family(name, **params)


def test_shift_graph_structure():
    assert shift_vertices(2, 3) == [(1, 2), (1, 3), (2, 3)]
    assert nx.is_isomorphic(gen_shift(1, 5), nx.complete_graph(5))
    s24 = gen_shift(2, 4)
    assert s24.number_of_nodes() == 6
    assert s24.number_of_edges() == 4
    seqs = nx.get_node_attributes(s24, "seq")
    for a, b in s24.edges():
        first, second = sorted((seqs[a], seqs[b]))
        assert first[1:] == second[:-1]
    assert gen_shift(3, 6).number_of_edges() == 15
    with pytest.raises(BadParams):
        shift_vertices(4, 3)


def test_signed_shift3_has_positive_cliques_per_middle_value():
    g = gen_signed_shift3(5)
    signs = Counter(s for _, _, s in g.edges)
    assert g.n == 10
    assert signs[Sign.NEG] == 5
    assert signs[Sign.POS] == 12
    with pytest.raises(BadParams):
        gen_signed_shift3(2)


def test_signed_line_graph_signs_consecutive_arcs_negative():
    directed_path = Orientation(n=3, arcs=[(1, 2), (0, 1)])
    assert directed_path.arcs == ((0, 1), (1, 2))
    assert signed_line_graph(directed_path).edges == ((0, 1, Sign.NEG),)
    assert list(arc_graph(directed_path).edges()) == [(0, 1)]

    sink = Orientation(n=3, arcs=[(0, 1), (2, 1)])
    assert signed_line_graph(sink).edges == ((0, 1, Sign.POS),)
    assert arc_graph(sink).number_of_edges() == 0


def test_signed_line_graph_of_directed_triangle():
    cyclic = Orientation(n=3, arcs=[(0, 1), (1, 2), (2, 0)])
    digraph = cyclic.to_digraph()
    assert sorted(digraph.edges()) == [(0, 1), (1, 2), (2, 0)]
    arcs = arc_graph(cyclic)
    assert arcs.number_of_edges() == 3
    assert [arcs.nodes[i]["arc"] for i in arcs] == [(0, 1), (1, 2), (2, 0)]
    g = signed_line_graph(cyclic)
    assert g.m == 3
    assert all(s is Sign.NEG for _, _, s in g.edges)


@pytest.mark.parametrize(
    "arcs, error",
    [
        ([(0, 3)], IndexOutOfRange),
        ([(1, 1)], SelfLoop),
        ([(0, 1), (1, 0)], BadParams),
    ],
)
def test_orientation_rejects_bad_arcs(arcs, error):
    with pytest.raises(error):
        Orientation(n=3, arcs=arcs)


def test_random_orientation_orients_every_edge_once():
    graph = nx.cycle_graph(6)
    D = random_orientation(graph, 4)
    assert len(D.arcs) == 6
    assert {frozenset(a) for a in D.arcs} == {frozenset(e) for e in graph.edges()}
    assert random_orientation(graph, 4) == D


def test_seeded_generators_are_deterministic():
    assert random_signed_graph(9, 0.5, 3, neg_prob=0.4) == random_signed_graph(9, 0.5, 3, neg_prob=0.4)
    assert sorted(random_graph(10, 0.3, 7, 2).edges()) == sorted(random_graph(10, 0.3, 7, 2).edges())
    assert sorted(random_cograph(8, 5).edges()) == sorted(random_cograph(8, 5).edges())
    assert make_rng(11, 1).random() == make_rng(11, 1).random()


def test_random_generators_reject_bad_params():
    with pytest.raises(BadParams):
        make_rng(-1)
    with pytest.raises(BadParams):
        random_graph(5, 1.5, 0)
    with pytest.raises(BadParams):
        random_signed_graph(5, 0.5, 0, neg_prob=-0.1)
    with pytest.raises(BadParams):
        random_girth_graph(5, 2, 0.5, 0)
    with pytest.raises(BadParams):
        girth_family("girth_unknown", 6, 4, 0.5, 0)


def test_with_sign_relabels_nodes():
    graph = nx.Graph([(10, 20), (20, 30)])
    g = with_sign(graph, Sign.NEG)
    assert g.n == 3
    assert g.edges == ((0, 1, Sign.NEG), (1, 2, Sign.NEG))


@pytest.mark.parametrize("seed", range(8))
def test_repaired_random_graphs_are_connected_and_free(seed):
    g3 = random_k3free_signed_graph(10, 0.5, seed, neg_prob=0.5)
    assert has_neg_triangle(g3) is None
    assert is_connected(g3)
    g4 = random_k4free_signed_graph(10, 0.6, seed, neg_prob=0.5)
    assert has_neg_k4(g4) is None
    assert is_connected(g4)


@pytest.mark.parametrize("seed", range(5))
def test_random_girth_graph(seed):
    graph = random_girth_graph(12, 5, 0.4, seed)
    assert nx.girth(graph) >= 5
    g = girth_family("girth_pc", 12, 5, 0.4, seed)
    assert g.n == 12
    assert g.m == 12 * 11 // 2


def test_enumerate_cographs_counts():
    counts = Counter(graph.number_of_nodes() for graph in enumerate_cographs(5))
    assert [counts[n] for n in range(1, 6)] == [1, 2, 4, 10, 24]
    with pytest.raises(BadParams):
        list(enumerate_cographs(0))


@pytest.mark.parametrize("seed", range(6))
def test_random_cograph_is_a_cograph(seed):
    assert is_cograph(with_sign(random_cograph(9, seed), Sign.POS)).is_cograph


@pytest.mark.parametrize("seed", range(10))
def test_sample_p4class_member_is_in_class(seed):
    g = sample_p4class_member(8, seed, neg_prob=0.5)
    assert g.n == 8
    assert in_forb_class(g, p4_class()).member
    assert sample_p4class_member(8, seed, neg_prob=0.5) == g


def test_sample_p4class_member_errors():
    with pytest.raises(BadParams):
        sample_p4class_member(0, 1)
    with pytest.raises(SamplingExhausted):
        sample_p4class_member(5, 1, max_attempts=0)
