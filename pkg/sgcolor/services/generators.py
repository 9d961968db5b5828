"""
Generator Service
고정 계열, shift 그래프, arc / 부호 선 그래프, 시드 기반 랜덤 그래프와 클래스 샘플러
"""
import logging
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from ..config import settings
from ..data.catalog import clique
from ..exceptions import BadParams, SamplingExhausted
from ..models.construction import Orientation
from ..models.graph import Sign, SignedEdge, SignedGraph
from .detect import has_neg_k4, has_neg_triangle, in_forb_class, is_cograph
from .patterns import p4_class
from .switching import induced_subgraph

logger = logging.getLogger(__name__)

GraphLike = Union[nx.Graph, SignedGraph]


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """(seed, stream...) 로부터 독립적인 난수 생성기"""
    if seed < 0 or any(s < 0 for s in stream):
        raise BadParams(f"시드는 음수가 될 수 없습니다: {seed}, {stream}")
    return np.random.default_rng(np.random.SeedSequence([seed, *stream]))


def _indexed(graph: GraphLike) -> nx.Graph:
    """노드를 0..n-1 (정렬 순서) 로 바꾼 무부호 그래프"""
    if isinstance(graph, SignedGraph):
        return graph.underlying()
    nodes = sorted(graph.nodes())
    if nodes == list(range(len(nodes))):
        return graph
    return nx.relabel_nodes(graph, {v: i for i, v in enumerate(nodes)}, copy=True)


def with_sign(graph: GraphLike, sign: Sign) -> SignedGraph:
    """모든 간선에 같은 부호를 준 부호 그래프 (G, sign)"""
    graph = _indexed(graph)
    return SignedGraph(n=graph.number_of_nodes(), edges=[(u, v, sign) for u, v in graph.edges()])


def positive_completion(graph: GraphLike) -> SignedGraph:
    """PC(G): G 의 간선은 음수, 나머지 모든 쌍은 양수인 완전 부호 그래프"""
    graph = _indexed(graph)
    n = graph.number_of_nodes()
    edges = [
        (u, v, Sign.NEG if graph.has_edge(u, v) else Sign.POS)
        for u, v in combinations(range(n), 2)
    ]
    return SignedGraph.trusted(n, edges)


FAMILIES = ("neg_clique", "all_neg", "positive_completion")


def gen_family(name: str, **params: Any) -> SignedGraph:
    """
    기본 계열 생성

    Args:
        name: neg_clique (params: i), all_neg / positive_completion (params: graph)

    Raises:
        BadParams: 알 수 없는 계열이거나 파라미터가 잘못된 경우
    """
    if name == "neg_clique":
        i = params.get("i")
        if not isinstance(i, int) or i < 1:
            raise BadParams(f"neg_clique 는 정수 i ≥ 1 이 필요합니다: {i!r}")
        return clique(i, Sign.NEG)
    if name in ("all_neg", "positive_completion"):
        graph = params.get("graph")
        if not isinstance(graph, (nx.Graph, SignedGraph)):
            raise BadParams(f"{name} 는 graph 파라미터가 필요합니다")
        return with_sign(graph, Sign.NEG) if name == "all_neg" else positive_completion(graph)
    raise BadParams(f"알 수 없는 계열: {name} (가능: {', '.join(FAMILIES)})")


# ------------------------------------------------------------
# shift 그래프
# ------------------------------------------------------------

def shift_vertices(k: int, n: int) -> List[Tuple[int, ...]]:
    """1..n 의 증가하는 k-수열, 사전식 순서"""
    if not 1 <= k <= n:
        raise BadParams(f"1 ≤ k ≤ n 이어야 합니다: k={k}, n={n}")
    return list(combinations(range(1, n + 1), k))


def gen_shift(k: int, n: int) -> nx.Graph:
    """
    shift 그래프 S_{k,n}: (s1..sk) 와 (s2..sk+1) 이 인접.
    노드 i 의 "seq" 속성이 i 번째 (사전식) 수열입니다.
    """
    seqs = shift_vertices(k, n)
    index = {s: i for i, s in enumerate(seqs)}
    graph = nx.Graph()
    for i, s in enumerate(seqs):
        graph.add_node(i, seq=s)
    for i, s in enumerate(seqs):
        for x in range(s[-1] + 1, n + 1):
            graph.add_edge(i, index[s[1:] + (x,)])
    return graph


def gen_signed_shift3(n: int) -> SignedGraph:
    """
    부호 shift 그래프 Ŝ_{3,n}: S_{3,n} 의 간선은 음수,
    가운데 값이 같은 두 삼중쌍은 양의 간선 (가운데 값마다 하나의 클리크).
    """
    if n < 3:
        raise BadParams(f"n ≥ 3 이어야 합니다: {n}")
    seqs = shift_vertices(3, n)
    shift = gen_shift(3, n)
    edges: List[SignedEdge] = [(u, v, Sign.NEG) for u, v in shift.edges()]
    by_middle: Dict[int, List[int]] = {}
    for i, s in enumerate(seqs):
        by_middle.setdefault(s[1], []).append(i)
    for members in by_middle.values():
        edges.extend((u, v, Sign.POS) for u, v in combinations(members, 2))
    return SignedGraph(n=len(seqs), edges=edges)


# ------------------------------------------------------------
# arc 그래프와 부호 선 그래프
# ------------------------------------------------------------

def arc_graph(D: Orientation) -> nx.Graph:
    """A(D): 정점은 arc, uv 와 vw 처럼 머리-꼬리로 이어지면 인접 (노드 속성 "arc")"""
    index = {arc: i for i, arc in enumerate(D.arcs)}
    graph = nx.Graph()
    graph.add_nodes_from((i, {"arc": arc}) for arc, i in index.items())
    graph.add_edges_from((index[a], index[b]) for a, b in nx.line_graph(D.to_digraph()).edges())
    return graph


def signed_line_graph(D: Orientation) -> SignedGraph:
    """
    L̂(D): 기저 그래프의 선 그래프 위에서 A(D) 의 간선은 음수, 나머지는 양수.
    정점 i 는 D.arcs[i] 입니다.
    """
    index = {frozenset(arc): i for i, arc in enumerate(D.arcs)}
    consecutive = set(arc_graph(D).edges())
    edges: List[SignedEdge] = []
    for e1, e2 in nx.line_graph(D.underlying()).edges():
        u, v = sorted((index[frozenset(e1)], index[frozenset(e2)]))
        negative = (u, v) in consecutive or (v, u) in consecutive
        edges.append((u, v, Sign.NEG if negative else Sign.POS))
    return SignedGraph(n=len(D.arcs), edges=edges)


# ------------------------------------------------------------
# 시드 기반 랜덤 그래프
# ------------------------------------------------------------

def _check_probability(p: float, what: str) -> None:
    if not 0.0 <= p <= 1.0:
        raise BadParams(f"{what} 는 0..1 범위여야 합니다: {p}")


def random_graph(n: int, p: float, seed: int, *stream: int) -> nx.Graph:
    """G(n, p): 정렬된 쌍 순서로 한 번씩 추첨"""
    if n < 0:
        raise BadParams(f"n ≥ 0 이어야 합니다: {n}")
    _check_probability(p, "p")
    rng = make_rng(seed, *stream)
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pair for pair, x in zip(pairs, draws) if x < p)
    return graph


def random_orientation(graph: nx.Graph, seed: int, *stream: int) -> Orientation:
    """각 간선 (u < v) 을 확률 1/2 로 u→v 또는 v→u"""
    graph = _indexed(graph)
    rng = make_rng(seed, *stream)
    edges = sorted(tuple(sorted(e)) for e in graph.edges())
    flips = rng.random(len(edges)) < 0.5
    arcs = [(v, u) if flip else (u, v) for (u, v), flip in zip(edges, flips)]
    return Orientation(n=graph.number_of_nodes(), arcs=arcs)


def random_signed_graph(
    n: int,
    p: float,
    seed: int,
    *stream: int,
    neg_prob: Optional[float] = None,
) -> SignedGraph:
    """G(n, p) 위에 간선마다 확률 neg_prob 로 음수"""
    neg_prob = settings.SAMPLER_NEG_PROB if neg_prob is None else neg_prob
    _check_probability(neg_prob, "neg_prob")
    graph = random_graph(n, p, seed, *stream)
    rng = make_rng(seed, *stream, 1)
    edges = sorted(graph.edges())
    draws = rng.random(len(edges))
    return SignedGraph.trusted(
        n, [(u, v, Sign.NEG if x < neg_prob else Sign.POS) for (u, v), x in zip(edges, draws)]
    )


def _repair(g: SignedGraph, finder) -> SignedGraph:
    """증거가 없어질 때까지 증거의 가장 작은 간선을 지우고, 정점 0 의 성분만 남깁니다"""
    removed = 0
    while True:
        found = finder(g)
        if found is None:
            break
        mapping = found.mapping
        victim = min(
            (min(a, b), max(a, b)) for a, b in combinations(mapping, 2) if g.has_edge(a, b)
        )
        g = SignedGraph.trusted(g.n, [e for e in g.edges if (e[0], e[1]) != victim])
        removed += 1
    if removed:
        logger.debug(f"🔍 증거 간선 {removed}개 삭제")
    if g.n == 0:
        return g
    component = sorted(nx.node_connected_component(g.underlying(), 0))
    sub, _ = induced_subgraph(g, component)
    return sub


def random_k3free_signed_graph(n: int, p: float, seed: int, *stream: int, neg_prob: Optional[float] = None) -> SignedGraph:
    """연결된 (K̂3, −)-free 랜덤 부호 그래프 (정점 0 의 성분)"""
    return _repair(random_signed_graph(n, p, seed, *stream, neg_prob=neg_prob), has_neg_triangle)


def random_k4free_signed_graph(n: int, p: float, seed: int, *stream: int, neg_prob: Optional[float] = None) -> SignedGraph:
    """연결된 (K̂4, −)-free 랜덤 부호 그래프 (정점 0 의 성분)"""
    return _repair(random_signed_graph(n, p, seed, *stream, neg_prob=neg_prob), has_neg_k4)


def _shortest_cycle(graph: nx.Graph) -> Optional[List[int]]:
    """가장 짧은 사이클 (같으면 닫는 간선이 사전식으로 작은 것)"""
    best: Optional[List[int]] = None
    for u, v in sorted(tuple(sorted(e)) for e in graph.edges()):
        graph.remove_edge(u, v)
        try:
            path = nx.shortest_path(graph, u, v)
        except nx.NetworkXNoPath:
            path = None
        graph.add_edge(u, v)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    return best


def random_girth_graph(n: int, girth: int, p: float, seed: int, *stream: int) -> nx.Graph:
    """
    길이 girth 미만의 사이클을 간선 삭제로 없앤 시드 기반 랜덤 그래프.
    가장 짧은 사이클부터 그 사이클의 가장 작은 간선을 지웁니다.

    Raises:
        BadParams: girth < 3
    """
    if girth < 3:
        raise BadParams(f"girth ≥ 3 이어야 합니다: {girth}")
    graph = random_graph(n, p, seed, *stream)
    while True:
        cycle = _shortest_cycle(graph)
        if cycle is None or len(cycle) >= girth:
            break
        ring = list(zip(cycle, cycle[1:] + cycle[:1]))
        graph.remove_edge(*min(tuple(sorted(e)) for e in ring))
    measured = nx.girth(graph)
    if measured < girth:
        raise BadParams(f"girth 보장 실패: {measured} < {girth}")
    return graph


def girth_family(name: str, n: int, girth: int, p: float, seed: int, *stream: int) -> SignedGraph:
    """girth_neg: (G, −), girth_pc: PC(G), G 는 random_girth_graph"""
    graph = random_girth_graph(n, girth, p, seed, *stream)
    if name == "girth_neg":
        return with_sign(graph, Sign.NEG)
    if name == "girth_pc":
        return positive_completion(graph)
    raise BadParams(f"알 수 없는 girth 계열: {name}")


# ------------------------------------------------------------
# cograph 와 P4-free 클래스 샘플러
# ------------------------------------------------------------

def _random_cograph_edges(vertices: Sequence[int], rng: np.random.Generator) -> List[Tuple[int, int]]:
    if len(vertices) == 1:
        return []
    cut = int(rng.integers(1, len(vertices)))
    left, right = list(vertices[:cut]), list(vertices[cut:])
    join = bool(rng.random() < 0.5)
    edges = _random_cograph_edges(left, rng) + _random_cograph_edges(right, rng)
    if join:
        edges.extend((min(a, b), max(a, b)) for a in left for b in right)
    return edges


def random_cograph(n: int, seed: int, *stream: int) -> nx.Graph:
    """무작위 재귀 union / join 트리로 만든 cograph"""
    if n < 1:
        raise BadParams(f"n ≥ 1 이어야 합니다: {n}")
    rng = make_rng(seed, *stream)
    order = [int(v) for v in rng.permutation(n)]
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(_random_cograph_edges(order, rng))
    return graph


def _safe_negative(neg: Dict[int, set], pos: Dict[int, set], u: int, v: int) -> bool:
    """uv 를 음수로 바꿔도 전부 음인 삼각형과 (K4, M) 이 생기지 않는지"""
    if neg[u] & neg[v]:
        return False
    common = pos[u] & pos[v]
    return not any(b in common for a in common for b in neg[a])


def sample_p4class_member(
    n: int,
    seed: int,
    *stream: int,
    neg_prob: Optional[float] = None,
    max_attempts: Optional[int] = None,
) -> SignedGraph:
    """
    Forb{(K3,−), (K4,M), P4} 의 시드 기반 랜덤 원소

    간선을 시드 순서로 보며 확률 neg_prob 로 음수를 시도하되,
    음의 삼각형이나 (K4, M) 을 만드는 경우는 양수로 둡니다.
    결과는 in_forb_class 로 다시 검증하고 실패하면 다시 뽑습니다.

    Raises:
        BadParams: n < 1
        SamplingExhausted: max_attempts 안에 원소를 얻지 못한 경우
    """
    neg_prob = settings.SAMPLER_NEG_PROB if neg_prob is None else neg_prob
    _check_probability(neg_prob, "neg_prob")
    max_attempts = settings.SAMPLER_MAX_ATTEMPTS if max_attempts is None else max_attempts
    spec = p4_class()
    for attempt in range(max_attempts):
        graph = random_cograph(n, seed, *stream, attempt)
        rng = make_rng(seed, *stream, attempt, 1)
        edges = sorted(graph.edges())
        order = rng.permutation(len(edges))
        draws = rng.random(len(edges))
        neg: Dict[int, set] = {v: set() for v in range(n)}
        pos: Dict[int, set] = {v: set() for v in range(n)}
        for u, v in edges:
            pos[u].add(v)
            pos[v].add(u)
        for idx in order:
            u, v = edges[idx]
            if draws[idx] < neg_prob and _safe_negative(neg, pos, u, v):
                pos[u].discard(v)
                pos[v].discard(u)
                neg[u].add(v)
                neg[v].add(u)
        g = SignedGraph.trusted(
            n, [(u, v, Sign.NEG if v in neg[u] else Sign.POS) for u, v in edges]
        )
        if in_forb_class(g, spec).member:
            return g
        logger.debug(f"⚠️ 샘플 재추첨 (attempt={attempt})")
    raise SamplingExhausted(max_attempts)


def _dedupe(graphs: List[nx.Graph]) -> List[nx.Graph]:
    buckets: Dict[str, List[nx.Graph]] = {}
    unique: List[nx.Graph] = []
    for graph in graphs:
        key = nx.weisfeiler_lehman_graph_hash(graph)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(graph, other) for other in bucket):
            continue
        bucket.append(graph)
        unique.append(graph)
    return unique


def _partitions(n: int, smallest: int = 1) -> Iterator[List[int]]:
    """n 의 분할 (비감소 순서)"""
    if n == 0:
        yield []
        return
    for part in range(smallest, n + 1):
        for rest in _partitions(n - part, part):
            yield [part] + rest


def enumerate_cographs(max_n: int) -> Iterator[nx.Graph]:
    """
    정점 1..max_n 의 모든 cograph (동형 제외), 정점 수 순.
    비연결 cograph 는 연결 cograph 들의 서로소 합, 연결 cograph (n ≥ 2) 는 비연결 cograph 의 여그래프입니다.
    """
    if max_n < 1:
        raise BadParams(f"max_n ≥ 1 이어야 합니다: {max_n}")
    connected: Dict[int, List[nx.Graph]] = {1: [nx.empty_graph(1)]}
    for n in range(1, max_n + 1):
        disconnected: List[nx.Graph] = []
        for parts in _partitions(n):
            if len(parts) < 2:
                continue
            disconnected.extend(_unions(parts, connected))
        disconnected = _dedupe(disconnected)
        if n >= 2:
            connected[n] = _dedupe([nx.complement(h) for h in disconnected])
        for graph in connected[n] + disconnected:
            checked = with_sign(graph, Sign.POS)
            if not is_cograph(checked).is_cograph:
                raise BadParams(f"cograph 가 아닌 그래프가 생성되었습니다: {sorted(graph.edges())}")
            yield graph


def _unions(parts: List[int], connected: Dict[int, List[nx.Graph]]) -> Iterator[nx.Graph]:
    def rec(i: int, start: int, acc: List[nx.Graph]) -> Iterator[nx.Graph]:
        if i == len(parts):
            yield nx.convert_node_labels_to_integers(nx.disjoint_union_all(acc))
            return
        same = i > 0 and parts[i] == parts[i - 1]
        options = connected[parts[i]]
        for j in range(start if same else 0, len(options)):
            yield from rec(i + 1, j, acc + [options[j]])

    yield from rec(0, 0, [])
