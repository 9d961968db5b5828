"""
Construction Pydantic Models
방향 그래프, envelope 후보, XYZ 삼중, lazy 구성 추적 모델
"""
from typing import Any, FrozenSet, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from ..exceptions import BadParams, IndexOutOfRange, SelfLoop
from .coloring import ProperColoring
from .graph import SignedGraph


class Orientation(BaseModel):
    """기저 그래프의 각 간선에 방향을 정확히 하나 준 것 (arc = (tail, head))"""
    n: int = Field(..., ge=0, description="정점 수")
    arcs: Tuple[Tuple[int, int], ...] = Field(default=(), description="정렬된 arc 목록")

    model_config = ConfigDict(frozen=True)

    @field_validator("arcs", mode="before")
    @classmethod
    def _check_arcs(cls, value: Any, info: ValidationInfo) -> Tuple[Tuple[int, int], ...]:
        n = info.data.get("n", 0)
        seen = set()
        arcs = []
        for tail, head in value or ():
            tail, head = int(tail), int(head)
            for x in (tail, head):
                if not 0 <= x < n:
                    raise IndexOutOfRange(x, n)
            if tail == head:
                raise SelfLoop(tail)
            key = frozenset((tail, head))
            if key in seen:
                raise BadParams(f"간선 {{{tail}, {head}}}에 방향이 두 개 주어졌습니다")
            seen.add(key)
            arcs.append((tail, head))
        return tuple(sorted(arcs))

    def underlying(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.arcs)
        return graph

    def to_digraph(self) -> nx.DiGraph:
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(self.n))
        digraph.add_edges_from(self.arcs)
        return digraph


class EnvelopeCandidate(BaseModel):
    """
    envelope: 음의 부분그래프가 정확히 cycle[0..4] 순서의 5-사이클인 클래스 원소
    cycle[0] 은 조인 규칙에서 X, cycle[1], cycle[3] 은 Y, cycle[2], cycle[4] 는 Z 에 연결됩니다.
    """
    graph: SignedGraph = Field(..., description="envelope 부호 그래프")
    cycle: Tuple[int, int, int, int, int] = Field(..., description="지정 정점 v0..v4")

    model_config = ConfigDict(frozen=True)


class XYZTriple(BaseModel):
    """R 의 정점을 덮는 서로소 독립 집합 X, Y, Z"""
    x: FrozenSet[int]
    y: FrozenSet[int]
    z: FrozenSet[int]
    common_colors: FrozenSet[int] = Field(
        default_factory=frozenset, description="φ(X) ∩ φ(Y) ∩ φ(Z)"
    )

    model_config = ConfigDict(frozen=True)


class LazyIteration(BaseModel):
    """build_lr_lazy 한 반복의 기록"""
    iteration: int
    n: int
    m: int
    restriction: Optional[Tuple[int, ...]] = Field(
        default=None, description="R 로 제한된 5-색칠 (없으면 종료 반복)"
    )
    common_colors: List[int] = Field(default_factory=list)


class LazyBuildResult(BaseModel):
    """lazy 구성 결과"""
    graph: SignedGraph
    r_size: int = Field(..., description="R 의 정점 수")
    envelopes_attached: int
    trace: List[LazyIteration] = Field(default_factory=list)
    six_coloring: Optional[ProperColoring] = None
