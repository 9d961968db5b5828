"""
Named Signed Graph Catalog
자주 쓰는 부호 그래프 (완전그래프, 경로, 사이클, 별, Q3, (K4, M), PC(C5) 등)
"""
import logging
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence

from ..exceptions import BadParams
from ..models.graph import Sign, SignedGraph

logger = logging.getLogger(__name__)

# (Q3, σ) 를 (Q3, +) 로 되돌리는 "검은" 정점
Q3_BLACK = (0, 3, 5)


def clique(n: int, sign: Sign = Sign.POS) -> SignedGraph:
    """(K_n, sign)"""
    return SignedGraph.trusted(n, [(u, v, sign) for u, v in combinations(range(n), 2)])


def path_graph(k: int, sign: Sign = Sign.POS) -> SignedGraph:
    """k 개 정점의 경로 P_k"""
    return SignedGraph.trusted(k, [(i, i + 1, sign) for i in range(k - 1)])


def cycle_graph(k: int, sign: Sign = Sign.POS) -> SignedGraph:
    """k 개 정점의 사이클 C_k (k ≥ 3)"""
    if k < 3:
        raise BadParams(f"사이클은 3개 이상의 정점이 필요합니다: {k}")
    edges = [(i, i + 1, sign) for i in range(k - 1)] + [(0, k - 1, sign)]
    return SignedGraph.trusted(k, edges)


def star(leaves: int) -> SignedGraph:
    """K_{1,leaves}, 중심은 0"""
    return SignedGraph.trusted(leaves + 1, [(0, i, Sign.POS) for i in range(1, leaves + 1)])


def linear_forest(orders: Sequence[int]) -> SignedGraph:
    """경로들의 서로소 합 P_{a1} + ... + P_{al} (양수)"""
    edges = []
    offset = 0
    for k in orders:
        if k < 1:
            raise BadParams(f"경로의 정점 수는 1 이상이어야 합니다: {k}")
        edges.extend((offset + i, offset + i + 1, Sign.POS) for i in range(k - 1))
        offset += k
    return SignedGraph.trusted(offset, edges)


def q3(sign: Sign = Sign.POS) -> SignedGraph:
    """3차원 큐브: 정점은 3비트 정수, 한 비트 차이면 인접"""
    edges = [(u, u ^ (1 << b), sign) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return SignedGraph.trusted(8, edges)


def q3_sigma() -> SignedGraph:
    """Q3_BLACK 에서 switching 하면 (Q3, +) 가 되는 서명"""
    black = set(Q3_BLACK)
    edges = [(u, v, Sign.NEG if (u in black) != (v in black) else Sign.POS) for u, v, _ in q3().edges]
    return SignedGraph.trusted(8, edges)


def k4m() -> SignedGraph:
    """(K4, M): 음의 간선이 완전 매칭 {01, 23}"""
    return SignedGraph(
        n=4,
        edges=[(0, 1, "-"), (2, 3, "-"), (0, 2, "+"), (0, 3, "+"), (1, 2, "+"), (1, 3, "+")],
    )


def positive_completion_of_cycle(k: int) -> SignedGraph:
    """PC(C_k): C_k 의 간선은 음수, 나머지 쌍은 양수"""
    cyc = {(i, (i + 1) % k) if i < (i + 1) % k else ((i + 1) % k, i) for i in range(k)}
    edges = [(u, v, Sign.NEG if (u, v) in cyc else Sign.POS) for u, v in combinations(range(k), 2)]
    return SignedGraph.trusted(k, edges)


class GraphCatalog:
    """이름으로 조회하는 고정 부호 그래프 모음"""

    def __init__(self):
        self._builders: Dict[str, Callable[[], SignedGraph]] = {}
        self._cache: Dict[str, SignedGraph] = {}
        self._register_defaults()

    def _register_defaults(self):
        self._builders.update(
            {
                "neg-k3": lambda: clique(3, Sign.NEG),
                "pos-k3": lambda: clique(3, Sign.POS),
                "neg-k4": lambda: clique(4, Sign.NEG),
                "pos-k4": lambda: clique(4, Sign.POS),
                "k4m": k4m,
                "q3-pos": lambda: q3(Sign.POS),
                "q3-neg": lambda: q3(Sign.NEG),
                "q3-sigma": q3_sigma,
                "pc-c5": lambda: positive_completion_of_cycle(5),
                "neg-c6": lambda: cycle_graph(6, Sign.NEG),
                "p4": lambda: path_graph(4),
                "claw": lambda: star(3),
                "k14": lambda: star(4),
            }
        )

    def names(self) -> List[str]:
        return sorted(self._builders)

    def get(self, name: str) -> Optional[SignedGraph]:
        """이름으로 그래프 조회 (없으면 None)"""
        if name not in self._builders:
            return None
        if name not in self._cache:
            self._cache[name] = self._builders[name]()
            logger.debug(f"📌 카탈로그 그래프 생성: {name}")
        return self._cache[name]


# 전역 카탈로그 인스턴스
_catalog: Optional[GraphCatalog] = None


def get_catalog() -> GraphCatalog:
    """카탈로그 싱글톤 인스턴스 반환"""
    global _catalog
    if _catalog is None:
        _catalog = GraphCatalog()
    return _catalog
