import pytest

from sgcolor.data.catalog import cycle_graph, positive_completion_of_cycle
from sgcolor.exceptions import IterationCapExceeded, PreconditionViolated
from sgcolor.models.construction import EnvelopeCandidate
from sgcolor.models.graph import Sign
from sgcolor.services.detect import in_forb_class
from sgcolor.services.envelope import (
    build_lr_lazy,
    claim1_xyz,
    envelope_violations,
    find_envelope,
    verify_envelope,
)
from sgcolor.services.patterns import p4_class
from sgcolor.services.solver import is_proper
from sgcolor.services.switching import disjoint_union, negative_subgraph

C5_COLORS = (0, 1, 0, 1, 2)


def three_negative_c5s():
    c5 = cycle_graph(5, Sign.NEG)
    r = disjoint_union(disjoint_union(c5, c5), c5)
    cycles = [tuple(range(5 * i, 5 * i + 5)) for i in range(3)]
    coloring = {v: C5_COLORS[v % 5] for v in r.vertices()}
    return r, cycles, coloring


def test_smallest_envelope(envelope):
    assert verify_envelope(envelope)
    assert envelope.graph.n == 5
    assert envelope.graph.m == 7
    assert len(envelope.graph.negative_edges()) == 5


def test_find_envelope_below_five_vertices():
    assert find_envelope(4) is None


def test_envelope_violations_name_broken_conditions():
    g = positive_completion_of_cycle(5)
    broken = envelope_violations(g, (0, 1, 2, 3, 4))
    assert "two-positive" in broken
    assert "class" not in broken
    assert "chi3" not in broken
    assert envelope_violations(g, (0, 1, 2, 3)) == ["negative-c5"]
    assert not verify_envelope(EnvelopeCandidate(graph=g, cycle=(0, 1, 2, 3, 4)))


def test_claim1_xyz_on_three_cycles():
    r, cycles, coloring = three_negative_c5s()
    xyz = claim1_xyz(r, cycles, coloring, 3)
    assert xyz.common_colors == frozenset({0, 1, 2})
    assert not (xyz.x & xyz.y or xyz.y & xyz.z or xyz.x & xyz.z)
    assert xyz.x | xyz.y | xyz.z == set(r.vertices())
    neg = negative_subgraph(r)
    for members in (xyz.x, xyz.y, xyz.z):
        assert not any(neg.has_edge(a, b) for a in members for b in members)


def test_claim1_xyz_preconditions():
    r, cycles, coloring = three_negative_c5s()
    with pytest.raises(PreconditionViolated):
        claim1_xyz(r, cycles[:2], coloring, 3)
    with pytest.raises(PreconditionViolated):
        claim1_xyz(r, cycles, {v: 0 for v in r.vertices()}, 3)
    with pytest.raises(PreconditionViolated):
        claim1_xyz(r, cycles, coloring, 2)
    with pytest.raises(PreconditionViolated):
        claim1_xyz(r, [(0, 2, 4, 1, 3)] + cycles[1:], coloring, 3)


def test_build_lr_lazy_preconditions(envelope):
    with pytest.raises(PreconditionViolated):
        build_lr_lazy(envelope, max_iters=1, copies=2, colors=3)
    broken = EnvelopeCandidate(graph=positive_completion_of_cycle(5), cycle=(0, 1, 2, 3, 4))
    with pytest.raises(PreconditionViolated):
        build_lr_lazy(broken, max_iters=1, copies=3, colors=3)


def test_build_lr_lazy_stays_in_class(envelope):
    try:
        result = build_lr_lazy(envelope, max_iters=4, copies=3, colors=3)
    except IterationCapExceeded as exc:
        partial = exc.partial
        assert exc.cap == 4
        assert partial.envelopes_attached == 4
        assert partial.graph.n == partial.r_size + 4 * envelope.graph.n
        assert in_forb_class(partial.graph, p4_class()).member
        assert all(it.restriction is not None for it in partial.trace)
        return
    assert in_forb_class(result.graph, p4_class()).member
    assert result.r_size == 3 * envelope.graph.n
    assert result.trace[-1].restriction is None
    colors = result.six_coloring.colors
    assert is_proper(negative_subgraph(result.graph), colors)
    assert len(set(colors.values())) <= 4
