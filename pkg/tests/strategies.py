from itertools import combinations
from typing import FrozenSet, Tuple

from hypothesis.strategies import composite, integers, sampled_from, sets

from sgcolor.models.graph import Sign, SignedGraph

EDGE_CHOICES = (None, Sign.POS, Sign.NEG)


@composite
def signed_graphs(draw, min_n: int = 0, max_n: int = 8) -> SignedGraph:
    n = draw(integers(min_value=min_n, max_value=max_n))
    edges = []
    for u, v in combinations(range(n), 2):
        sign = draw(sampled_from(EDGE_CHOICES))
        if sign is not None:
            edges.append((u, v, sign))
    return SignedGraph(n=n, edges=edges)


@composite
def complete_signed_graphs(draw, min_n: int = 1, max_n: int = 7) -> SignedGraph:
    n = draw(integers(min_value=min_n, max_value=max_n))
    edges = [(u, v, draw(sampled_from((Sign.POS, Sign.NEG)))) for u, v in combinations(range(n), 2)]
    return SignedGraph(n=n, edges=edges)


@composite
def graphs_with_switching(draw, max_n: int = 8) -> Tuple[SignedGraph, FrozenSet[int]]:
    g = draw(signed_graphs(max_n=max_n))
    if g.n == 0:
        return g, frozenset()
    W = draw(sets(integers(min_value=0, max_value=g.n - 1)))
    return g, frozenset(W)


@composite
def signature_pairs(draw, max_n: int = 7) -> Tuple[SignedGraph, SignedGraph]:
    g = draw(signed_graphs(max_n=max_n))
    resigned = [(u, v, draw(sampled_from((Sign.POS, Sign.NEG)))) for u, v, _ in g.edges]
    return g, SignedGraph(n=g.n, edges=resigned)
