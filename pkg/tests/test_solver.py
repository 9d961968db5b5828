from hypothesis import given, settings
import networkx as nx
import pytest

from sgcolor.data.catalog import clique, cycle_graph, path_graph
from sgcolor.exceptions import ExceedsBound, PreconditionViolated
from sgcolor.models.coloring import BalancedColoring
from sgcolor.models.graph import Sign, SignedGraph
from sgcolor.services.solver import (
    chi_b_exact,
    chi_exact,
    color_via_negative,
    coloring_from_sequence,
    find_balanced_k_coloring,
    find_k_coloring,
    is_proper,
    negative_coloring_from_balanced,
    parity_partition,
    validate_coloring,
)
from sgcolor.services.switching import negative_subgraph, switch

from .strategies import signed_graphs


@pytest.mark.parametrize("i, expected", [(1, 1), (2, 1), (3, 2), (4, 2), (5, 3), (6, 3), (7, 4)])
def test_negative_clique_needs_half_the_colors(i, expected):
    k, coloring = chi_b_exact(clique(i, Sign.NEG))
    assert k == expected
    assert coloring.num_colors == expected
    assert validate_coloring(clique(i, Sign.NEG), coloring)


def test_chi_b_of_small_graphs():
    assert chi_b_exact(SignedGraph(n=0))[0] == 0
    assert chi_b_exact(clique(6, Sign.POS))[0] == 1
    assert chi_b_exact(cycle_graph(5, Sign.NEG))[0] == 2
    assert chi_b_exact(cycle_graph(4, Sign.NEG))[0] == 1


def test_chi_b_respects_upper_bound():
    with pytest.raises(ExceedsBound) as info:
        chi_b_exact(clique(5, Sign.NEG), upper=2)
    assert info.value.upper == 2
    assert chi_b_exact(clique(5, Sign.NEG), upper=3)[0] == 3


def test_find_balanced_k_coloring_too_few_colors():
    assert find_balanced_k_coloring(clique(5, Sign.NEG), 2) is None
    assert find_balanced_k_coloring(clique(3, Sign.NEG), 0) is None
    assert find_balanced_k_coloring(SignedGraph(n=0), 0).colors == ()


def test_validate_coloring():
    g = clique(3, Sign.NEG)
    assert not validate_coloring(g, BalancedColoring(colors=(0, 0, 0)))
    assert validate_coloring(g, BalancedColoring(colors=(0, 0, 1)))
    assert not validate_coloring(g, BalancedColoring(colors=(0, 1)))


@settings(max_examples=80, deadline=None)
@given(signed_graphs(max_n=6))
def test_negative_chromatic_number_sandwich(g):
    chi_b, coloring = chi_b_exact(g)
    chi_neg, _ = chi_exact(negative_subgraph(g))
    assert validate_coloring(g, coloring)
    assert chi_b <= chi_neg <= 2 * chi_b


@settings(max_examples=80, deadline=None)
@given(signed_graphs(max_n=6))
def test_balanced_coloring_doubles_into_negative_coloring(g):
    k, coloring = chi_b_exact(g)
    proper = negative_coloring_from_balanced(g, coloring)
    assert is_proper(negative_subgraph(g), proper.colors)
    assert proper.num_colors <= 2 * k


@settings(max_examples=40, deadline=None)
@given(signed_graphs(max_n=5))
def test_chi_b_is_switching_invariant(g):
    k, _ = chi_b_exact(g)
    for mask in range(1 << g.n):
        W = {v for v in range(g.n) if mask >> v & 1}
        assert chi_b_exact(switch(g, W))[0] == k


def test_chi_exact_of_small_graphs():
    assert chi_exact(nx.cycle_graph(5))[0] == 3
    assert chi_exact(nx.cycle_graph(6))[0] == 2
    assert chi_exact(nx.complete_graph(4))[0] == 4
    assert chi_exact(nx.empty_graph(3))[0] == 1
    assert chi_exact(nx.Graph())[0] == 0
    with pytest.raises(ExceedsBound):
        chi_exact(nx.complete_graph(4), upper=3)


def test_find_k_coloring_keeps_fixed_colors():
    graph = nx.cycle_graph(5)
    found = find_k_coloring(graph, 3, fixed={0: 2, 2: 1})
    assert found is not None
    assert found.colors[0] == 2 and found.colors[2] == 1
    assert is_proper(graph, found.colors)
    assert find_k_coloring(graph, 3, fixed={0: 2, 1: 2}) is None
    assert find_k_coloring(graph, 2) is None


def test_find_k_coloring_rejects_out_of_range_fixed_color():
    with pytest.raises(PreconditionViolated):
        find_k_coloring(nx.path_graph(3), 2, fixed={0: 5})


def test_color_via_negative_uses_chromatic_number_of_negative_part():
    g = cycle_graph(5, Sign.NEG)
    coloring = color_via_negative(g)
    assert coloring.num_colors == 3
    assert validate_coloring(g, coloring)
    assert color_via_negative(path_graph(4)).num_colors == 1


def test_parity_partition_splits_negative_edges():
    g = path_graph(3, Sign.NEG)
    partition = parity_partition(g, BalancedColoring(colors=(0, 0, 0)))
    same, other = partition.sides[0]
    assert same | other == frozenset({0, 1, 2})
    assert (0 in same) == (2 in same)
    assert (0 in same) != (1 in same)


def test_parity_partition_rejects_unbalanced_class():
    with pytest.raises(PreconditionViolated):
        parity_partition(clique(3, Sign.NEG), BalancedColoring(colors=(0, 0, 0)))


def test_negative_coloring_of_negative_k4():
    g = clique(4, Sign.NEG)
    _, coloring = chi_b_exact(g)
    proper = negative_coloring_from_balanced(g, coloring)
    assert proper.num_colors == 4
    assert sorted(proper.colors.values()) == [0, 1, 2, 3]


def test_coloring_from_sequence_compacts_colors():
    assert coloring_from_sequence([7, 3, 7, 9]).colors == (0, 1, 0, 2)
