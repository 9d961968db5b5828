"""
Induced Subgraph Detection Service
세 가지 매칭 모드의 유도 부분그래프 탐색, 유도 경로, cograph 인식, 금지 클래스 판정
"""
import logging
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..config import settings
from ..data.catalog import get_catalog
from ..exceptions import BadParams, InternalContradiction
from ..models.graph import Sign, SignedGraph
from ..models.pattern import (
    CographResult,
    CotreeNode,
    Embedding,
    ForbCheck,
    ForbSpec,
    MatchMode,
    Pattern,
)
from .switching import check_vertices, switching_equivalent

logger = logging.getLogger(__name__)


# ------------------------------------------------------------
# 증거 검증
# ------------------------------------------------------------

def image_graph(host: SignedGraph, template: SignedGraph, mapping: Sequence[int]) -> SignedGraph:
    """템플릿 순서로 재번호한 호스트 이미지 (인접 관계가 템플릿과 같다고 가정)"""
    edges = [(u, v, host.sign(mapping[u], mapping[v])) for u, v, _ in template.edges]
    return SignedGraph.trusted(template.n, edges)


def verify_embedding(host: SignedGraph, pattern: Pattern, embedding: Embedding) -> bool:
    """
    탐색을 다시 돌리지 않고 증거를 처음부터 검증합니다.
    이미지가 유도 부분그래프이고 모드별 부호 조건을 만족하면 True.
    """
    t = pattern.template
    mapping = embedding.mapping
    if len(mapping) != t.n or len(set(mapping)) != t.n:
        return False
    if any(not 0 <= h < host.n for h in mapping):
        return False
    for a, b in combinations(range(t.n), 2):
        if t.has_edge(a, b) != host.has_edge(mapping[a], mapping[b]):
            return False
    if pattern.mode is MatchMode.UNDERLYING:
        return True
    if pattern.mode is MatchMode.EXACT:
        return all(host.sign(mapping[u], mapping[v]) is s for u, v, s in t.edges)
    W = embedding.switching or frozenset()
    if not W <= set(mapping):
        return False
    for u, v, s in t.edges:
        hu, hv = mapping[u], mapping[v]
        hs = host.sign(hu, hv)
        if (hu in W) != (hv in W):
            hs = -hs
        if hs is not s:
            return False
    return True


def _switching_witness(host: SignedGraph, template: SignedGraph, mapping: Sequence[int]) -> Optional[FrozenSet[int]]:
    W = switching_equivalent(image_graph(host, template, mapping), template)
    if W is None:
        return None
    return frozenset(mapping[i] for i in W)


def _embedding(pattern: Pattern, mapping: Sequence[int], W: Optional[FrozenSet[int]] = None) -> Embedding:
    if pattern.mode is MatchMode.SWITCHING and W is None:
        W = frozenset()
    return Embedding(pattern=pattern.name, mode=pattern.mode, mapping=tuple(mapping), switching=W)


# ------------------------------------------------------------
# 일반 백트래킹 매처
# ------------------------------------------------------------

class _InducedMatcher:
    """템플릿 정점을 차수 내림차순으로, 호스트 후보를 번호 오름차순으로 대응시킵니다."""

    def __init__(self, host: SignedGraph, pattern: Pattern):
        self.host = host
        self.pattern = pattern
        self.t = pattern.template
        self.mode = pattern.mode
        self.order = sorted(range(self.t.n), key=lambda x: (-self.t.degree(x), x))
        position = {x: i for i, x in enumerate(self.order)}
        # 이미 배치된 템플릿 이웃 중 가장 먼저 배치된 정점 (후보 생성 기준)
        self.anchor: List[Optional[int]] = []
        for i, x in enumerate(self.order):
            earlier = [y for y in self.t.adjacency[x] if position[y] < i]
            self.anchor.append(min(earlier, key=position.get) if earlier else None)
        # 배치 시점에 닫히는 템플릿 삼각형 (SWITCHING 가지치기)
        self.triangles: List[List[Tuple[int, int, Sign]]] = []
        for i, x in enumerate(self.order):
            closing = []
            for y, z in combinations(self.order[:i], 2):
                if self.t.has_edge(x, y) and self.t.has_edge(x, z) and self.t.has_edge(y, z):
                    closing.append((y, z, self.t.sign(x, y) * self.t.sign(x, z) * self.t.sign(y, z)))
            self.triangles.append(closing)
        self.mapping: Dict[int, int] = {}
        self.used: Set[int] = set()
        self.switching: Optional[FrozenSet[int]] = None

    def _candidates(self, pos: int):
        anchor = self.anchor[pos]
        if anchor is None:
            return range(self.host.n)
        return self.host.neighbors(self.mapping[anchor])

    def _consistent(self, pos: int, h: int) -> bool:
        x = self.order[pos]
        host = self.host
        if host.degree(h) < self.t.degree(x):
            return False
        for y in self.order[:pos]:
            hy = self.mapping[y]
            ts = self.t.sign(x, y)
            hs = host.sign(h, hy)
            if (ts is None) != (hs is None):
                return False
            if self.mode is MatchMode.EXACT and ts is not hs:
                return False
        if self.mode is MatchMode.SWITCHING:
            for y, z, tsign in self.triangles[pos]:
                hy, hz = self.mapping[y], self.mapping[z]
                if host.sign(h, hy) * host.sign(h, hz) * host.sign(hy, hz) is not tsign:
                    return False
        return True

    def _leaf(self) -> bool:
        if self.mode is not MatchMode.SWITCHING:
            return True
        mapping = [self.mapping[i] for i in range(self.t.n)]
        self.switching = _switching_witness(self.host, self.t, mapping)
        return self.switching is not None

    def _extend(self, pos: int) -> bool:
        if pos == self.t.n:
            return self._leaf()
        x = self.order[pos]
        for h in self._candidates(pos):
            if h in self.used or not self._consistent(pos, h):
                continue
            self.mapping[x] = h
            self.used.add(h)
            if self._extend(pos + 1):
                return True
            self.used.discard(h)
            del self.mapping[x]
        return False

    def run(self) -> Optional[Embedding]:
        if not self._extend(0):
            return None
        mapping = [self.mapping[i] for i in range(self.t.n)]
        return _embedding(self.pattern, mapping, self.switching)


def find_induced_generic(host: SignedGraph, pattern: Pattern) -> Optional[Embedding]:
    """특수 경로 없이 백트래킹만으로 탐색 (교차 검증용)"""
    if pattern.template.n > host.n:
        return None
    return _InducedMatcher(host, pattern).run()


# ------------------------------------------------------------
# 특수 경로 (일반 매처와 결과 존재 여부가 같아야 함)
# ------------------------------------------------------------

def _triangles(g: SignedGraph):
    for u, v, _ in g.edges:
        common = sorted(w for w in g.adjacency[u] if w > v and w in g.adjacency[v])
        for w in common:
            yield u, v, w


def find_negative_triangle(g: SignedGraph) -> Optional[Tuple[int, int, int]]:
    """부호 곱이 음수인 첫 삼각형 (u < v < w)"""
    for u, v, w in _triangles(g):
        if g.sign(u, v) * g.sign(u, w) * g.sign(v, w) is Sign.NEG:
            return u, v, w
    return None


def find_all_negative_triangle(g: SignedGraph) -> Optional[Tuple[int, int, int]]:
    """세 간선이 모두 음수인 첫 삼각형"""
    for u, v, w in _triangles(g):
        if g.sign(u, v) is Sign.NEG and g.sign(u, w) is Sign.NEG and g.sign(v, w) is Sign.NEG:
            return u, v, w
    return None


def find_negative_k4(g: SignedGraph) -> Optional[Tuple[int, int, int, int]]:
    """네 삼각형이 모두 음수인 첫 K4"""
    for u, v, w in _triangles(g):
        if g.sign(u, v) * g.sign(u, w) * g.sign(v, w) is not Sign.NEG:
            continue
        for x in sorted(g.adjacency[u]):
            if x <= w or x not in g.adjacency[v] or x not in g.adjacency[w]:
                continue
            if all(
                g.sign(a, b) * g.sign(a, c) * g.sign(b, c) is Sign.NEG
                for a, b, c in ((u, v, x), (u, w, x), (v, w, x))
            ):
                return u, v, w, x
    return None


def find_k4m_exact(g: SignedGraph) -> Optional[Tuple[int, int, int, int]]:
    """음의 간선 uv, xy 와 네 교차 양의 간선으로 이루어진 (K4, M)"""
    pos = [{w for w, s in g.adjacency[v].items() if s is Sign.POS} for v in g.vertices()]
    for u, v in g.negative_edges():
        common = pos[u] & pos[v]
        for x in sorted(common):
            for y, s in sorted(g.adjacency[x].items()):
                if s is Sign.NEG and y > x and y in common:
                    return u, v, x, y
    return None


def find_p4(g: SignedGraph, vertices: Optional[Sequence[int]] = None) -> Optional[Tuple[int, int, int, int]]:
    """
    유도 P4 a-b-c-d (기저 그래프). vertices 가 주어지면 그 집합 안에서만 찾습니다.
    """
    allowed = set(range(g.n)) if vertices is None else set(vertices)
    adj = [set(g.adjacency[v]) & allowed if v in allowed else set() for v in range(g.n)]
    for b in sorted(allowed):
        for c in sorted(adj[b]):
            if c <= b:
                continue
            A = adj[b] - adj[c] - {c}
            D = adj[c] - adj[b] - {b}
            for a in sorted(A):
                rest = D - adj[a] - {a}
                if rest:
                    return a, b, c, min(rest)
    return None


def _fast_finder(pattern: Pattern) -> Optional[Callable[[SignedGraph], Optional[Tuple[int, ...]]]]:
    catalog = get_catalog()
    t, mode = pattern.template, pattern.mode
    if t == catalog.get("neg-k3") and mode is MatchMode.SWITCHING:
        return find_negative_triangle
    if t == catalog.get("neg-k3") and mode is MatchMode.EXACT:
        return find_all_negative_triangle
    if t == catalog.get("neg-k4") and mode is MatchMode.SWITCHING:
        return find_negative_k4
    if t == catalog.get("k4m") and mode is MatchMode.EXACT:
        return find_k4m_exact
    if t == catalog.get("p4") and mode is MatchMode.UNDERLYING:
        return find_p4
    return None


def find_induced(host: SignedGraph, p: Pattern) -> Optional[Embedding]:
    """
    유도 부분그래프 탐색

    Args:
        host: 호스트 그래프
        p: 패턴 (템플릿 + 매칭 모드)

    Returns:
        Optional[Embedding]: 첫 발생의 증거 (SWITCHING 은 switching 집합 포함)
    """
    if p.template.n > host.n:
        return None
    finder = _fast_finder(p)
    if finder is None:
        return _InducedMatcher(host, p).run()
    found = finder(host)
    if found is None:
        return None
    W = _switching_witness(host, p.template, found) if p.mode is MatchMode.SWITCHING else None
    return _embedding(p, found, W)


def has_neg_triangle(g: SignedGraph) -> Optional[Embedding]:
    """(K3, −) 를 switching 까지 포함해 탐색 (= 부호 곱이 음수인 삼각형)"""
    found = find_negative_triangle(g)
    if found is None:
        return None
    template = get_catalog().get("neg-k3")
    return Embedding(
        pattern="neg-k3",
        mode=MatchMode.SWITCHING,
        mapping=found,
        switching=_switching_witness(g, template, found),
    )


def has_neg_k4(g: SignedGraph) -> Optional[Embedding]:
    """(K4, −) 를 switching 까지 포함해 탐색 (= 네 삼각형이 모두 음수인 K4)"""
    found = find_negative_k4(g)
    if found is None:
        return None
    template = get_catalog().get("neg-k4")
    return Embedding(
        pattern="neg-k4",
        mode=MatchMode.SWITCHING,
        mapping=found,
        switching=_switching_witness(g, template, found),
    )


# ------------------------------------------------------------
# 유도 경로
# ------------------------------------------------------------

def is_induced_path(g: SignedGraph, path: Sequence[int]) -> bool:
    """연속 정점은 인접하고 그 밖의 쌍은 인접하지 않는 서로 다른 정점 열인지"""
    if len(set(path)) != len(path):
        return False
    if any(not 0 <= v < g.n for v in path):
        return False
    for i, j in combinations(range(len(path)), 2):
        if g.has_edge(path[i], path[j]) != (j == i + 1):
            return False
    return True


class _PathSearch:
    """코드 없는 DFS: touch[w] 는 경로의 마지막 정점을 제외한 정점 중 w 의 이웃 수"""

    def __init__(self, g: SignedGraph, cap: int):
        self.g = g
        self.cap = cap
        self.path: List[int] = []
        self.on_path = [False] * g.n
        self.touch = [0] * g.n
        self.best: List[int] = []

    def _push(self, v: int):
        if self.path:
            for w in self.g.adjacency[self.path[-1]]:
                self.touch[w] += 1
        self.path.append(v)
        self.on_path[v] = True

    def _pop(self):
        v = self.path.pop()
        self.on_path[v] = False
        if self.path:
            for w in self.g.adjacency[self.path[-1]]:
                self.touch[w] -= 1

    def _extensions(self) -> List[int]:
        last = self.path[-1]
        return [w for w in self.g.neighbors(last) if not self.on_path[w] and self.touch[w] == 0]

    def longest_from(self, start: int) -> bool:
        """start 에서 가장 긴 경로를 best 에 갱신, cap 에 도달하면 True"""
        self._push(start)
        reached = self._dfs_longest()
        self._pop()
        return reached

    def _dfs_longest(self) -> bool:
        if len(self.path) > len(self.best):
            self.best = list(self.path)
        if len(self.path) - 1 >= self.cap:
            return True
        for w in self._extensions():
            self._push(w)
            if self._dfs_longest():
                self._pop()
                return True
            self._pop()
        return False

    def exact_from(self, start: int, length: int) -> Optional[List[int]]:
        self._push(start)
        found = self._dfs_exact(length)
        self._pop()
        return found

    def _dfs_exact(self, length: int) -> Optional[List[int]]:
        if len(self.path) - 1 == length:
            return list(self.path)
        for w in self._extensions():
            self._push(w)
            found = self._dfs_exact(length)
            self._pop()
            if found is not None:
                return found
        return None


def longest_induced_path(g: SignedGraph, cap: Optional[int] = None) -> Tuple[int, Tuple[int, ...]]:
    """
    기저 그래프의 최장 유도 경로 (간선 수, 정점 열). cap 에 도달하면 탐색을 멈춥니다.

    Args:
        cap: 길이 상한 (기본값 settings.LONGEST_PATH_CAP)
    """
    cap = settings.LONGEST_PATH_CAP if cap is None else cap
    if cap < 1:
        raise BadParams(f"cap 은 1 이상이어야 합니다: {cap}")
    if g.n == 0:
        return 0, ()
    search = _PathSearch(g, cap)
    for start in g.vertices():
        if search.longest_from(start):
            break
    best = tuple(search.best)
    if not is_induced_path(g, best):
        raise InternalContradiction(f"유도 경로가 아닌 결과: {best}")
    return len(best) - 1, best


def find_induced_path_from(g: SignedGraph, start: int, length: int) -> Optional[Tuple[int, ...]]:
    """start 에서 시작하는 간선 length 개의 유도 경로 (없으면 None)"""
    check_vertices(g, [start])
    if length < 0:
        return None
    found = _PathSearch(g, length).exact_from(start, length)
    return tuple(found) if found is not None else None


# ------------------------------------------------------------
# cograph
# ------------------------------------------------------------

def _cotree(graph: nx.Graph, g: SignedGraph, vertices: List[int]) -> Tuple[Optional[CotreeNode], Optional[Tuple[int, int, int, int]]]:
    if len(vertices) == 1:
        return CotreeNode(kind="leaf", vertex=vertices[0]), None
    sub = graph.subgraph(vertices)
    parts = [sorted(c) for c in nx.connected_components(sub)]
    kind = "union"
    if len(parts) == 1:
        parts = [sorted(c) for c in nx.connected_components(nx.complement(sub))]
        kind = "join"
        if len(parts) == 1:
            p4 = find_p4(g, vertices)
            if p4 is None:
                raise InternalContradiction(f"P4 를 찾지 못한 소수 부분그래프: {vertices}")
            return None, p4
    children = []
    for part in sorted(parts, key=min):
        child, p4 = _cotree(graph, g, part)
        if p4 is not None:
            return None, p4
        children.append(child)
    return CotreeNode(kind=kind, children=children), None


def is_cograph(g: SignedGraph) -> CographResult:
    """
    기저 그래프가 유도 P4 를 갖지 않는지 판정하고 분해 트리를 돌려줍니다.
    내부 노드는 union (그래프가 비연결) 또는 join (여그래프가 비연결) 입니다.
    """
    if g.n == 0:
        return CographResult(is_cograph=True, cotree=None)
    tree, p4 = _cotree(g.underlying(), g, list(range(g.n)))
    if p4 is not None:
        return CographResult(is_cograph=False, p4=p4)
    return CographResult(is_cograph=True, cotree=tree)


# ------------------------------------------------------------
# 금지 클래스
# ------------------------------------------------------------

def in_forb_class(g: SignedGraph, spec: ForbSpec) -> ForbCheck:
    """
    Forb_ind(spec) 소속 판정

    Returns:
        ForbCheck: 모든 패턴이 없으면 member=True, 아니면 패턴별 첫 증거 목록
    """
    witnesses = []
    for pattern in spec.patterns:
        found = find_induced(g, pattern)
        if found is not None:
            logger.debug(f"🔍 {pattern.name} 발견: {found.mapping}")
            witnesses.append(found)
    return ForbCheck(member=not witnesses, witnesses=witnesses)
