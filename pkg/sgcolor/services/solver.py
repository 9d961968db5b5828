"""
Exact Coloring Solver
균형 색칠 수 χ_b 와 (무부호) 색칠 수 χ 의 분기 한정 탐색, 색칠 검증
"""
import logging
import time
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import ExceedsBound, PreconditionViolated, SearchTimeout, SolverContractBroken
from ..models.coloring import BalancedColoring, ParityPartition, ProperColoring
from ..models.graph import Balanced, Sign, SignedGraph
from .parity_dsu import ParityDSU
from .switching import induced_subgraph, is_balanced, is_balanced_set, negative_subgraph

logger = logging.getLogger(__name__)

_DEADLINE_CHECK_EVERY = 1024


class _BranchAndBound:
    """
    DSATUR 형 백트래킹 골격 (재귀 없이 명시적 스택)
    - 남은 선택지가 가장 적은 미색칠 정점을 고르고, 같으면 번호가 작은 정점
    - 색은 오름차순, 새 색은 아직 쓰지 않은 색 중 가장 작은 것 하나만 허용
    """

    def __init__(self, n: int, k: int, deadline: Optional[float] = None):
        self.n = n
        self.k = k
        self.color = [-1] * n
        self.used = [0] * k
        self.deadline = deadline
        self.nodes = 0

    def _fresh(self) -> Optional[int]:
        for c in range(self.k):
            if self.used[c] == 0:
                return c
        return None

    def _feasible(self, v: int, c: int) -> bool:
        raise NotImplementedError

    def _assign(self, v: int, c: int) -> None:
        self.color[v] = c
        self.used[c] += 1

    def _unassign(self, v: int) -> None:
        self.used[self.color[v]] -= 1
        self.color[v] = -1

    def _options(self, v: int) -> List[int]:
        fresh = self._fresh()
        opts = [c for c in range(self.k) if self.used[c] > 0 and self._feasible(v, c)]
        if fresh is not None and self._feasible(v, fresh):
            opts.append(fresh)
            opts.sort()
        return opts

    def _select(self) -> Optional[Tuple[int, List[int]]]:
        best: Optional[Tuple[int, List[int]]] = None
        for v in range(self.n):
            if self.color[v] != -1:
                continue
            opts = self._options(v)
            if not opts:
                return v, opts
            if best is None or len(opts) < len(best[1]):
                best = (v, opts)
        return best

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % _DEADLINE_CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise SearchTimeout(f"탐색 마감 초과 ({self.nodes} 노드)")

    def solve(self) -> Optional[List[int]]:
        stack: List[List] = []
        while True:
            chosen = self._select()
            if chosen is None:
                return list(self.color)
            stack.append([chosen[0], chosen[1], 0])
            while stack:
                frame = stack[-1]
                v, opts, i = frame
                if self.color[v] != -1:
                    self._unassign(v)
                if i < len(opts):
                    frame[2] = i + 1
                    self._tick()
                    self._assign(v, opts[i])
                    break
                stack.pop()
            else:
                return None


class _ProperSearch(_BranchAndBound):
    """인접한 두 정점이 같은 색을 갖지 않는 k-색칠"""

    def __init__(self, adj: List[List[int]], k: int, deadline: Optional[float] = None):
        super().__init__(len(adj), k, deadline)
        self.adj = adj
        self.forbid = [[0] * k for _ in range(self.n)]

    def _feasible(self, v: int, c: int) -> bool:
        return self.forbid[v][c] == 0

    def _assign(self, v: int, c: int) -> None:
        super()._assign(v, c)
        for w in self.adj[v]:
            self.forbid[w][c] += 1

    def _unassign(self, v: int) -> None:
        c = self.color[v]
        for w in self.adj[v]:
            self.forbid[w][c] -= 1
        super()._unassign(v)


class _BalancedSearch(_BranchAndBound):
    """각 색 클래스가 균형 집합인 k-색칠 (클래스마다 패리티 DSU)"""

    def __init__(self, g: SignedGraph, k: int, deadline: Optional[float] = None):
        super().__init__(g.n, k, deadline)
        self.g = g
        self.dsu = [ParityDSU(g.n) for _ in range(k)]
        self.marks = [0] * g.n

    def _feasible(self, v: int, c: int) -> bool:
        dsu = self.dsu[c]
        required: Dict[int, int] = {}
        for w, s in self.g.adjacency[v].items():
            if self.color[w] != c:
                continue
            root, parity = dsu.peek(w)
            want = parity ^ (1 if s is Sign.NEG else 0)
            if required.setdefault(root, want) != want:
                return False
        return True

    def _assign(self, v: int, c: int) -> None:
        dsu = self.dsu[c]
        self.marks[v] = dsu.checkpoint()
        for w, s in self.g.adjacency[v].items():
            if self.color[w] == c:
                dsu.union(v, w, s is Sign.NEG)
        super()._assign(v, c)

    def _unassign(self, v: int) -> None:
        self.dsu[self.color[v]].rollback(self.marks[v])
        super()._unassign(v)


# ------------------------------------------------------------
# 공개 연산
# ------------------------------------------------------------

def validate_coloring(g: SignedGraph, c: BalancedColoring) -> bool:
    """모든 색 클래스가 균형 집합이면 True"""
    if len(c.colors) != g.n:
        return False
    return all(is_balanced_set(g, members) for members in c.classes().values())


def find_balanced_k_coloring(g: SignedGraph, k: int, deadline: Optional[float] = None) -> Optional[BalancedColoring]:
    if g.n == 0:
        return BalancedColoring(colors=())
    if k < 1:
        return None
    colors = _BalancedSearch(g, k, deadline).solve()
    return BalancedColoring(colors=tuple(colors)) if colors is not None else None


def chi_b_exact(g: SignedGraph, upper: Optional[int] = None) -> Tuple[int, BalancedColoring]:
    """
    균형 색칠 수와 증거 색칠 (k 를 1부터 늘려가는 반복 심화)

    Args:
        g: 부호 그래프
        upper: 상한, 최적값이 이를 넘으면 ExceedsBound

    Returns:
        (χ_b, 균형 색칠)

    Raises:
        ExceedsBound: 최적값 > upper
    """
    if g.n == 0:
        return 0, BalancedColoring(colors=())
    limit = g.n if upper is None else min(upper, g.n)
    lower = 1 if isinstance(is_balanced(g), Balanced) else 2
    for k in range(lower, limit + 1):
        found = find_balanced_k_coloring(g, k)
        if found is not None:
            logger.debug(f"✅ χ_b = {k} (n={g.n}, m={g.m})")
            return k, found
    raise ExceedsBound(upper if upper is not None else g.n)


def _index_graph(graph: nx.Graph) -> Tuple[List[int], List[List[int]]]:
    nodes = sorted(graph.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    adj = [sorted(index[w] for w in graph.adj[v] if w != v) for v in nodes]
    return nodes, adj


def is_proper(graph: nx.Graph, coloring: Dict[int, int]) -> bool:
    if set(coloring) != set(graph.nodes()):
        return False
    return all(coloring[u] != coloring[v] for u, v in graph.edges())


def find_k_coloring(
    graph: nx.Graph,
    k: int,
    fixed: Optional[Dict[int, int]] = None,
    deadline: Optional[float] = None,
) -> Optional[ProperColoring]:
    """
    진 k-색칠 (미리 정해진 색 fixed 를 유지)

    Args:
        graph: 무부호 그래프
        k: 색 수
        fixed: 노드 → 색 (0..k-1) 사전 색칠
        deadline: time.monotonic() 기준 마감, 넘으면 SearchTimeout

    Returns:
        Optional[ProperColoring]: 없으면 None
    """
    nodes, adj = _index_graph(graph)
    if not nodes:
        return ProperColoring(colors={})
    if k < 1:
        return None
    search = _ProperSearch(adj, k, deadline)
    index = {v: i for i, v in enumerate(nodes)}
    for v, c in sorted((fixed or {}).items()):
        if not 0 <= c < k:
            raise PreconditionViolated(f"사전 색 {c} 는 0..{k - 1} 밖입니다")
        i = index[v]
        if search.forbid[i][c]:
            return None
        search._assign(i, c)
    colors = search.solve()
    if colors is None:
        return None
    return ProperColoring(colors={v: colors[i] for i, v in enumerate(nodes)})


def _lower_bound(graph: nx.Graph) -> int:
    if graph.number_of_nodes() == 0:
        return 0
    if graph.number_of_edges() == 0:
        return 1
    return 2 if nx.is_bipartite(graph) else 3


def chi_exact(
    graph: nx.Graph,
    upper: Optional[int] = None,
    deadline: Optional[float] = None,
) -> Tuple[int, ProperColoring]:
    """
    색칠 수와 증거 진색칠

    upper 가 주어지면 먼저 upper-색칠 가능성을 확인하고, 불가능하면 바로 ExceedsBound 를 던집니다.

    Raises:
        ExceedsBound: 최적값 > upper
    """
    n = graph.number_of_nodes()
    if n == 0:
        return 0, ProperColoring(colors={})
    if upper is not None:
        if upper < 1 or find_k_coloring(graph, upper, deadline=deadline) is None:
            raise ExceedsBound(upper)
    limit = n if upper is None else min(upper, n)
    for k in range(max(1, _lower_bound(graph)), limit + 1):
        found = find_k_coloring(graph, k, deadline=deadline)
        if found is not None:
            return k, found
    raise ExceedsBound(limit)


def color_via_negative(g: SignedGraph) -> BalancedColoring:
    """
    음의 부분그래프의 최적 진색칠을 그대로 균형 색칠로 사용합니다.
    색 수는 정확히 χ(Ĝ⁻).
    """
    _, coloring = chi_exact(negative_subgraph(g))
    return BalancedColoring(colors=tuple(coloring.colors[v] for v in range(g.n)))


def parity_partition(g: SignedGraph, coloring: BalancedColoring) -> ParityPartition:
    """
    색 클래스마다 균형 이분할 (같은 쪽, 반대쪽)

    Raises:
        PreconditionViolated: 균형이 아닌 클래스가 있는 경우
    """
    sides = {}
    for c, members in sorted(coloring.classes().items()):
        sub, vmap = induced_subgraph(g, members)
        cert = is_balanced(sub)
        if not isinstance(cert, Balanced):
            raise PreconditionViolated(f"색 {c} 클래스가 균형이 아닙니다: {members}")
        flipped = frozenset(vmap[i] for i in cert.switching)
        sides[c] = (frozenset(members) - flipped, flipped)
    return ParityPartition(sides=sides)


def negative_coloring_from_balanced(g: SignedGraph, coloring: BalancedColoring) -> ProperColoring:
    """
    균형 k-색칠을 Ĝ⁻ 의 진 2k-색칠로 바꿉니다 (클래스 c 의 두 쪽에 2c, 2c+1).

    Raises:
        PreconditionViolated: 입력이 균형 색칠이 아닌 경우
        SolverContractBroken: 결과가 진색칠이 아닌 경우
    """
    compact = coloring.compact()
    partition = parity_partition(g, compact)
    colors: Dict[int, int] = {}
    for c, (same, other) in partition.sides.items():
        for v in same:
            colors[v] = 2 * c
        for v in other:
            colors[v] = 2 * c + 1
    result = ProperColoring(colors=colors)
    if not is_proper(negative_subgraph(g), result.colors):
        raise SolverContractBroken("음의 부분그래프의 진색칠이 아닙니다")
    return result


def coloring_from_sequence(colors: Sequence[int]) -> BalancedColoring:
    return BalancedColoring(colors=tuple(colors)).compact()
