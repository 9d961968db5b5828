from hypothesis import given, settings
import pytest

from sgcolor.data.catalog import clique, cycle_graph, k4m, linear_forest, path_graph, positive_completion_of_cycle, star
from sgcolor.exceptions import BadParams
from sgcolor.models.graph import Sign, SignedGraph
from sgcolor.models.pattern import MatchMode
from sgcolor.services.detect import (
    find_induced,
    find_induced_generic,
    find_induced_path_from,
    has_neg_k4,
    has_neg_triangle,
    in_forb_class,
    is_cograph,
    is_induced_path,
    longest_induced_path,
    verify_embedding,
)
from sgcolor.services.patterns import (
    k3hat_class,
    k4hat_path_class,
    linear_forest_pattern,
    p4_class,
    parse_forbid_list,
    path_pattern,
    pattern_by_name,
)
from sgcolor.services.switching import is_balanced_set, switch

from .strategies import signed_graphs

ONE_NEGATIVE_TRIANGLE = SignedGraph(n=3, edges=[(0, 1, "-"), (1, 2, "+"), (0, 2, "+")])


def test_negative_triangle_found_up_to_switching():
    found = has_neg_triangle(ONE_NEGATIVE_TRIANGLE)
    assert found is not None
    assert sorted(found.mapping) == [0, 1, 2]
    assert verify_embedding(ONE_NEGATIVE_TRIANGLE, pattern_by_name("neg-k3"), found)
    assert has_neg_triangle(clique(3, Sign.POS)) is None


def test_exact_mode_ignores_switching():
    assert find_induced(ONE_NEGATIVE_TRIANGLE, pattern_by_name("k3neg-exact")) is None
    assert find_induced(clique(3, Sign.NEG), pattern_by_name("k3neg-exact")) is not None


def test_negative_k4_is_switching_invariant():
    g = clique(4, Sign.NEG)
    assert has_neg_k4(g) is not None
    assert has_neg_k4(switch(g, {0, 2})) is not None
    assert has_neg_k4(clique(4, Sign.POS)) is None
    assert has_neg_k4(k4m()) is not None


def test_k4m_exact():
    found = find_induced(k4m(), pattern_by_name("k4m-exact"))
    assert found is not None
    assert found.mode is MatchMode.EXACT
    assert find_induced(clique(4, Sign.NEG), pattern_by_name("k4m-exact")) is None


@pytest.mark.parametrize(
    "host, name, present",
    [
        (path_graph(4), "p4", True),
        (cycle_graph(4), "p4", False),
        (cycle_graph(5), "p4", True),
        (star(3), "claw", True),
        (clique(4), "claw", False),
        (star(4), "k14", True),
        (path_graph(5), "linear-forest:2+2", True),
        (clique(5), "linear-forest:2+2", False),
    ],
)
def test_underlying_patterns(host, name, present):
    pattern = pattern_by_name(name)
    found = find_induced(host, pattern)
    assert (found is not None) == present
    if found is not None:
        assert verify_embedding(host, pattern, found)


@settings(max_examples=150, deadline=None)
@given(signed_graphs(max_n=7))
def test_fast_finders_agree_with_backtracking(g):
    for name in ("neg-k3", "k3neg-exact", "neg-k4", "k4m-exact"):
        pattern = pattern_by_name(name)
        fast = find_induced(g, pattern)
        slow = find_induced_generic(g, pattern)
        assert (fast is None) == (slow is None), name
        for found in (fast, slow):
            if found is not None:
                assert verify_embedding(g, pattern, found)


@settings(max_examples=150, deadline=None)
@given(signed_graphs(max_n=8))
def test_no_negative_triangle_iff_closed_neighbourhoods_balanced(g):
    balanced = all(is_balanced_set(g, [v, *g.adjacency[v]]) for v in g.vertices())
    assert (has_neg_triangle(g) is None) == balanced


@settings(max_examples=100, deadline=None)
@given(signed_graphs(max_n=7))
def test_path_embeddings_verify(g):
    for k in (3, 4):
        pattern = path_pattern(k)
        found = find_induced(g, pattern)
        if found is not None:
            assert verify_embedding(g, pattern, found)
            assert is_induced_path(g, found.mapping)


def test_longest_induced_path():
    assert longest_induced_path(path_graph(6)) == (5, (0, 1, 2, 3, 4, 5))
    length, path = longest_induced_path(cycle_graph(6))
    assert length == 4
    assert is_induced_path(cycle_graph(6), path)
    assert longest_induced_path(clique(5))[0] == 1
    assert longest_induced_path(SignedGraph(n=0)) == (0, ())


def test_longest_induced_path_cap():
    length, _ = longest_induced_path(path_graph(10), cap=3)
    assert length >= 3
    with pytest.raises(BadParams):
        longest_induced_path(path_graph(3), cap=0)


def test_find_induced_path_from():
    assert find_induced_path_from(path_graph(5), 0, 4) == (0, 1, 2, 3, 4)
    assert find_induced_path_from(path_graph(5), 2, 3) is None
    assert find_induced_path_from(path_graph(5), 2, 0) == (2,)


def test_is_cograph():
    result = is_cograph(path_graph(4))
    assert not result.is_cograph
    assert is_induced_path(path_graph(4), result.p4)

    joined = is_cograph(clique(3))
    assert joined.is_cograph
    assert joined.cotree.kind == "join"
    assert joined.cotree.leaves() == [0, 1, 2]

    union = is_cograph(SignedGraph(n=3))
    assert union.cotree.kind == "union"


def test_positive_completion_of_c5_is_in_p4_class():
    assert in_forb_class(positive_completion_of_cycle(5), p4_class()).member


def test_forb_class_reports_witnesses():
    result = in_forb_class(path_graph(4, Sign.NEG), parse_forbid_list("p4, neg-k3"))
    assert not result.member
    assert [w.pattern for w in result.witnesses] == ["p4"]
    assert in_forb_class(linear_forest([3, 3]), k4hat_path_class(4)).member


@pytest.mark.parametrize("text", ["", "p4,unknown", "linear-forest:"])
def test_parse_forbid_list_rejects_unknown_names(text):
    with pytest.raises(BadParams):
        parse_forbid_list(text)


def test_linear_forest_pattern_template():
    pattern = linear_forest_pattern([3, 2])
    assert pattern.template.n == 5
    assert pattern.template.m == 3
    assert pattern.mode is MatchMode.UNDERLYING


def test_k3hat_class_adds_extra_patterns():
    claw_free = k3hat_class(["claw"])
    assert claw_free.names == ["neg-k3", "claw"]
    assert not in_forb_class(star(3), claw_free).member
    assert not in_forb_class(ONE_NEGATIVE_TRIANGLE, claw_free).member
    assert in_forb_class(cycle_graph(5, Sign.NEG), claw_free).member
