import pytest

from sgcolor.data.catalog import clique, cycle_graph, path_graph, positive_completion_of_cycle
from sgcolor.exceptions import PartitionNotIndependent, PreconditionViolated
from sgcolor.models.graph import Sign, SignedGraph
from sgcolor.services.constructive import (
    color_join_negative,
    color_layered_nbhd,
    color_linear_forest_k3free,
    color_or_path_k3free,
    color_p4class,
    components,
    exact_nbhd_solver,
    is_connected,
    k3free_path_solver,
    p4class_nbhd_solver,
    three_color_join_side,
)
from sgcolor.services.detect import is_induced_path
from sgcolor.services.generators import (
    random_k3free_signed_graph,
    random_k4free_signed_graph,
    sample_p4class_member,
)
from sgcolor.services.solver import is_proper, validate_coloring
from sgcolor.services.switching import negative_subgraph

# {0, 1} ⋈ {2, 3}, 양쪽 모두 음의 간선 하나씩
SMALL_JOIN = SignedGraph(
    n=4,
    edges=[(0, 1, "-"), (0, 2, "-"), (1, 2, "+"), (0, 3, "+"), (1, 3, "-"), (2, 3, "-")],
)


def test_components_and_connectivity():
    g = SignedGraph(n=5, edges=[(3, 4, "-"), (0, 2, "+")])
    assert components(g) == [[0, 2], [1], [3, 4]]
    assert components(g, [2, 3, 4]) == [[2], [3, 4]]
    assert not is_connected(g)
    assert is_connected(path_graph(3))
    assert not is_connected(SignedGraph(n=0))


def test_k3free_long_path_is_returned():
    result = color_or_path_k3free(path_graph(6), 2, 0)
    assert result.is_path
    assert result.path == (0, 1, 2, 3)


def test_k3free_five_cycle():
    assert color_or_path_k3free(cycle_graph(5), 2, 0).path == (0, 1, 2, 3)
    result = color_or_path_k3free(cycle_graph(5), 3, 0)
    assert not result.is_path
    assert result.coloring.num_colors <= 7
    assert validate_coloring(cycle_graph(5), result.coloring)


def test_k3free_single_color_for_closed_neighborhood():
    result = color_or_path_k3free(clique(4, Sign.POS), 1, 2)
    assert result.coloring.colors == (0, 0, 0, 0)


@pytest.mark.parametrize(
    "g, k, u",
    [
        (clique(3, Sign.NEG), 2, 0),
        (SignedGraph(n=2), 2, 0),
        (path_graph(3), 0, 0),
        (path_graph(3), 2, 3),
    ],
)
def test_k3free_preconditions(g, k, u):
    with pytest.raises(PreconditionViolated):
        color_or_path_k3free(g, k, u)


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_k3free_coloring_or_path_on_random_graphs(seed, k):
    g = random_k3free_signed_graph(9, 0.4, seed, neg_prob=0.5)
    result = color_or_path_k3free(g, k, 0)
    if result.is_path:
        assert len(result.path) == k + 2
        assert result.path[0] == 0
        assert is_induced_path(g, result.path)
    else:
        assert result.coloring.num_colors <= 2 ** k - 1
        assert validate_coloring(g, result.coloring)


def test_layered_nbhd_returns_path_or_coloring():
    result = color_layered_nbhd(path_graph(6), 4, 2)
    assert result.path == (0, 1, 2, 3)
    small = color_layered_nbhd(clique(5, Sign.POS), 4, 1)
    assert small.coloring.num_colors == 1


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("k", [3, 4, 5])
def test_layered_nbhd_on_random_graphs(seed, k):
    g = random_k4free_signed_graph(9, 0.5, seed, neg_prob=0.5)
    b = max(len(set(exact_nbhd_solver(g, v).values())) for v in g.vertices())
    result = color_layered_nbhd(g, k, b)
    if result.is_path:
        assert len(result.path) == k
        assert is_induced_path(g, result.path)
    else:
        assert result.coloring.num_colors <= b * 2 ** (k - 3)
        assert validate_coloring(g, result.coloring)


def test_layered_nbhd_preconditions():
    with pytest.raises(PreconditionViolated):
        color_layered_nbhd(path_graph(4), 2, 1)
    with pytest.raises(PreconditionViolated):
        color_layered_nbhd(clique(4, Sign.NEG), 4, 2)
    with pytest.raises(PreconditionViolated):
        color_layered_nbhd(SignedGraph(n=3), 4, 1)


def test_p4class_nbhd_solver_gives_center_its_own_color():
    g = positive_completion_of_cycle(5)
    colors = p4class_nbhd_solver(g, 0)
    assert set(colors) == set(range(5))
    assert all(colors[v] != colors[0] for v in range(1, 5))


def test_three_color_join_side():
    assert three_color_join_side(SMALL_JOIN, [0, 1], [2, 3], (0, 1)) == {2: 0, 3: 1}


def test_three_color_join_side_preconditions():
    with pytest.raises(PreconditionViolated):
        three_color_join_side(SMALL_JOIN, [0, 1], [2, 3], (0, 2))
    not_a_join = SignedGraph(n=4, edges=[(0, 1, "-"), (0, 2, "-"), (1, 3, "-"), (2, 3, "-")])
    with pytest.raises(PreconditionViolated):
        three_color_join_side(not_a_join, [0, 1], [2, 3], (0, 1))
    positive_inside = SignedGraph(
        n=4,
        edges=[(0, 1, "-"), (0, 2, "+"), (1, 2, "+"), (0, 3, "+"), (1, 3, "+"), (2, 3, "-")],
    )
    with pytest.raises(PartitionNotIndependent):
        three_color_join_side(positive_inside, [0, 1], [2, 3], (0, 1))


def test_color_join_negative():
    coloring = color_join_negative(SMALL_JOIN, [0, 1], [2, 3])
    assert coloring.colors == {0: 3, 1: 4, 2: 0, 3: 1}
    assert is_proper(negative_subgraph(SMALL_JOIN), coloring.colors)
    with pytest.raises(PreconditionViolated):
        color_join_negative(positive_completion_of_cycle(5), [0, 2], [1, 3, 4])


def test_color_p4class_on_known_members(envelope):
    for g in (positive_completion_of_cycle(5), envelope.graph, SMALL_JOIN):
        coloring = color_p4class(g)
        assert coloring.num_colors <= 6
        assert validate_coloring(g, coloring)
        assert is_proper(negative_subgraph(g), dict(enumerate(coloring.colors)))


@pytest.mark.parametrize("seed", range(15))
def test_color_p4class_on_sampled_members(seed):
    g = sample_p4class_member(9, seed, neg_prob=0.6)
    coloring = color_p4class(g)
    assert coloring.num_colors <= 6
    assert validate_coloring(g, coloring)


def test_color_p4class_rejects_non_members():
    with pytest.raises(PreconditionViolated):
        color_p4class(path_graph(4))
    with pytest.raises(PreconditionViolated):
        color_p4class(clique(3, Sign.NEG))


def test_k3free_path_solver():
    solve = k3free_path_solver(4)
    coloring = solve(cycle_graph(4))
    assert coloring.num_colors < 2 ** 2
    assert validate_coloring(cycle_graph(4), coloring)
    assert k3free_path_solver(2)(SignedGraph(n=3)).colors == (0, 0, 0)


def test_color_linear_forest_k3free():
    for g, orders in ((path_graph(4), [3, 2]), (cycle_graph(6), [3, 3])):
        coloring = color_linear_forest_k3free(g, orders)
        assert validate_coloring(g, coloring)
    with pytest.raises(PreconditionViolated):
        color_linear_forest_k3free(cycle_graph(6), [2, 2])
    with pytest.raises(PreconditionViolated):
        color_linear_forest_k3free(path_graph(3), [])
