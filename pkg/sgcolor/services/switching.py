"""
Switching Service
부호 그래프 생성, switching, 균형 판정, switching 동치, 합성 연산
"""
import logging
from collections import deque
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import IndexOutOfRange, NotAWalk, UnderlyingMismatch
from ..models.graph import (
    Balanced,
    BalanceCertificate,
    Sign,
    SignedEdge,
    SignedGraph,
    SwitchingSet,
    Unbalanced,
)

logger = logging.getLogger(__name__)

JoinSignFn = Callable[[int, int], Sign]


def build_graph(n: int, signed_edges: Iterable[Tuple[int, int, object]]) -> SignedGraph:
    """
    부호 그래프 생성

    Args:
        n: 정점 수
        signed_edges: (u, v, sign) 목록, sign 은 Sign / '+' / '-' / ±1

    Returns:
        SignedGraph: 주어진 간선을 정확히 가진 그래프

    Raises:
        DuplicateEdge, SelfLoop, IndexOutOfRange
    """
    return SignedGraph(n=n, edges=list(signed_edges))


def check_vertices(g: SignedGraph, vertices: Iterable[int]) -> None:
    for v in vertices:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(v, g.n)


def switch(g: SignedGraph, W: Iterable[int]) -> SignedGraph:
    """
    W 의 정점에서 switching: 끝점 중 정확히 하나가 W 에 있는 간선의 부호를 뒤집습니다.

    Raises:
        IndexOutOfRange: W 가 정점 범위를 벗어난 경우
    """
    W = frozenset(W)
    check_vertices(g, W)
    if not W:
        return g
    edges = [
        (u, v, -s if (u in W) != (v in W) else s)
        for u, v, s in g.edges
    ]
    return SignedGraph.trusted(g.n, edges)


def sign_of_closed_walk(g: SignedGraph, walk: Sequence[int]) -> Sign:
    """
    닫힌 보행의 부호 (간선 중복 포함 곱)

    Raises:
        NotAWalk: 비어 있거나, 닫혀 있지 않거나, 인접하지 않은 연속 정점이 있는 경우
    """
    if not walk:
        raise NotAWalk(walk, "빈 보행")
    if walk[0] != walk[-1]:
        raise NotAWalk(walk, "처음과 끝 정점이 다릅니다")
    check_vertices(g, walk)
    result = Sign.POS
    for a, b in zip(walk, walk[1:]):
        s = g.sign(a, b)
        if s is None:
            raise NotAWalk(walk, f"{a}와 {b}는 인접하지 않습니다")
        result = result * s
    return result


def _tree_path(parent: Dict[int, Optional[int]], v: int) -> List[int]:
    path = [v]
    while parent[v] is not None:
        v = parent[v]
        path.append(v)
    return path


def _fundamental_cycle(parent: Dict[int, Optional[int]], u: int, w: int) -> Tuple[int, ...]:
    """BFS 트리 경로 u..lca..w 와 간선 wu 로 닫힌 사이클"""
    pu = _tree_path(parent, u)
    pw = _tree_path(parent, w)
    on_pw = set(pw)
    lca = next(x for x in pu if x in on_pw)
    up = pu[: pu.index(lca) + 1]
    down = list(reversed(pw[: pw.index(lca)]))
    cycle = up + down
    return tuple(cycle + [u])


def potentials(g: SignedGraph) -> Tuple[Dict[int, Sign], Optional[Tuple[int, ...]]]:
    """
    성분마다 가장 작은 정점에서 BFS 로 potential 을 전파합니다.
    위반된 비트리 간선이 처음 발견되면 그 기본 사이클을 함께 돌려줍니다.
    """
    pot: Dict[int, Sign] = {}
    parent: Dict[int, Optional[int]] = {}
    for root in g.vertices():
        if root in pot:
            continue
        pot[root] = Sign.POS
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                s = g.adjacency[u][w]
                if w not in pot:
                    pot[w] = pot[u] * s
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and pot[u] * pot[w] != s:
                    return pot, _fundamental_cycle(parent, u, w)
    return pot, None


def is_balanced(g: SignedGraph) -> BalanceCertificate:
    """
    균형 판정 (Harary potential)

    Returns:
        Balanced(W): switch(g, W) 가 모두 양수, 각 성분의 최소 정점은 W 에 없음
        Unbalanced(C): 부호 곱이 음수인 사이클 C (처음 = 끝)
    """
    pot, cycle = potentials(g)
    if cycle is not None:
        return Unbalanced(cycle=cycle)
    return Balanced(switching=frozenset(v for v, p in pot.items() if p is Sign.NEG))


def induced_subgraph(g: SignedGraph, X: Iterable[int]) -> Tuple[SignedGraph, List[int]]:
    """
    X 로 유도된 부분그래프 (0.. 으로 재번호)

    Returns:
        (부분그래프, vmap): vmap[i] 는 새 정점 i 의 원래 정점
    """
    vmap = sorted(set(X))
    check_vertices(g, vmap)
    index = {v: i for i, v in enumerate(vmap)}
    edges = []
    for v in vmap:
        for w, s in g.adjacency[v].items():
            if v < w and w in index:
                edges.append((index[v], index[w], s))
    return SignedGraph.trusted(len(vmap), edges), vmap


def is_balanced_set(g: SignedGraph, X: Iterable[int]) -> bool:
    """X 로 유도된 부분그래프가 균형인지"""
    sub, _ = induced_subgraph(g, X)
    if sub.n <= 2:
        return True
    return is_balanced(sub).balanced


def same_underlying(g1: SignedGraph, g2: SignedGraph) -> bool:
    return g1.n == g2.n and list(g1.pairs()) == list(g2.pairs())


def product_signature(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """간선별 부호 곱 (기저 그래프가 같아야 함)"""
    if not same_underlying(g1, g2):
        raise UnderlyingMismatch(
            f"기저 그래프가 다릅니다: n={g1.n}/{g2.n}, m={g1.m}/{g2.m}"
        )
    edges = [(u, v, s1 * s2) for (u, v, s1), (_, _, s2) in zip(g1.edges, g2.edges)]
    return SignedGraph.trusted(g1.n, edges)


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> Optional[SwitchingSet]:
    """
    switch(g1, W) = g2 인 W 를 찾습니다 (없으면 None)

    곱 서명이 균형이면 그 Balanced 증거가 W 입니다.
    성분마다 최소 정점은 W 에 넣지 않아 결과가 결정적입니다.

    Raises:
        UnderlyingMismatch: 기저 그래프가 다른 경우
    """
    cert = is_balanced(product_signature(g1, g2))
    if isinstance(cert, Balanced):
        return cert.switching
    return None


def negative_subgraph(g: SignedGraph) -> nx.Graph:
    """같은 정점 위에 음의 간선만 가진 무부호 그래프 Ĝ⁻"""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.negative_edges())
    return graph


def negative_edges_form_cut(g: SignedGraph, W: Iterable[int]) -> bool:
    """음의 간선 집합이 정확히 W 와 나머지 사이의 간선 컷인지"""
    W = frozenset(W)
    return all((s is Sign.NEG) == ((u in W) != (v in W)) for u, v, s in g.edges)


def disjoint_union(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """g1 + g2: g2 의 정점은 g1.n 만큼 밀립니다"""
    shift = g1.n
    edges = list(g1.edges) + [(u + shift, v + shift, s) for u, v, s in g2.edges]
    return SignedGraph.trusted(g1.n + g2.n, edges)


def full_join(
    g1: SignedGraph,
    g2: SignedGraph,
    join_sign_fn: Optional[JoinSignFn] = None,
) -> SignedGraph:
    """
    g1 ⋈ g2: 서로소 합에 모든 교차 쌍을 추가

    Args:
        join_sign_fn: (g1 의 정점, g2 의 정점) → 부호, 기본값은 모두 양수
    """
    base = disjoint_union(g1, g2)
    cross: List[SignedEdge] = []
    for u in range(g1.n):
        for v in range(g2.n):
            s = Sign.POS if join_sign_fn is None else Sign.parse(join_sign_fn(u, v))
            cross.append((u, v + g1.n, s))
    return SignedGraph.trusted(base.n, list(base.edges) + cross)


def add_universal_positive(g: SignedGraph) -> SignedGraph:
    """새 정점 n 을 모든 정점과 양의 간선으로 연결한 (G, σ)*"""
    edges = list(g.edges) + [(v, g.n, Sign.POS) for v in range(g.n)]
    return SignedGraph.trusted(g.n + 1, edges)


def normalize_star(g: SignedGraph, u: int) -> Tuple[SignedGraph, SwitchingSet]:
    """
    u 의 음의 이웃에서 switching 하여 u 에 붙은 간선을 모두 양수로 만듭니다.

    Returns:
        (동치 그래프, 사용한 switching 집합)
    """
    check_vertices(g, [u])
    W = frozenset(w for w, s in g.adjacency[u].items() if s is Sign.NEG)
    return switch(g, W), W
