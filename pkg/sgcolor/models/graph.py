"""
Signed Graph Pydantic Models
부호 그래프, 부호, 균형 인증서 모델
"""
from enum import IntEnum
from functools import cached_property
from typing import Annotated, Any, Dict, FrozenSet, Iterable, Iterator, List, Literal, Optional, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from ..exceptions import BadParams, DuplicateEdge, IndexOutOfRange, SelfLoop


class Sign(IntEnum):
    """간선 부호. 곱셈은 패리티 곱 (위수 2의 군)"""
    POS = 1
    NEG = -1

    def __mul__(self, other: Any) -> "Sign":
        return Sign(int(self) * int(other))

    __rmul__ = __mul__

    def __neg__(self) -> "Sign":
        return Sign(-int(self))

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POS else "-"

    @classmethod
    def parse(cls, value: Any) -> "Sign":
        """'+', '-', ±1 또는 Sign 을 Sign 으로 변환"""
        if isinstance(value, Sign):
            return value
        if value in ("+", "pos", "positive"):
            return cls.POS
        if value in ("-", "neg", "negative"):
            return cls.NEG
        if isinstance(value, int) and value in (1, -1):
            return cls(value)
        raise BadParams(f"알 수 없는 부호 값: {value!r}")

    @classmethod
    def product(cls, signs: Iterable["Sign"]) -> "Sign":
        result = cls.POS
        for s in signs:
            result = result * s
        return result


SignedEdge = Tuple[int, int, Sign]
SwitchingSet = FrozenSet[int]


class SignedGraph(BaseModel):
    """
    단순 부호 그래프 (G, σ)
    정점은 0..n-1, 간선은 (u, v, sign) 이며 u < v 로 정규화되어 정렬 저장됩니다.
    모든 연산은 새 그래프를 돌려주는 불변 값으로 취급합니다.
    """
    n: int = Field(..., ge=0, description="정점 수")
    edges: Tuple[Tuple[int, int, Sign], ...] = Field(
        default=(), description="정렬된 (u, v, sign) 간선 목록 (u < v)"
    )

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"n": 3, "edges": [[0, 1, -1], [0, 2, -1], [1, 2, -1]]}
        },
    )

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize_edges(cls, value: Any, info: ValidationInfo) -> Tuple[SignedEdge, ...]:
        n = info.data.get("n", 0)
        seen = set()
        normalized = []
        for raw in value or ():
            u, v, s = raw
            u, v = int(u), int(v)
            for x in (u, v):
                if not 0 <= x < n:
                    raise IndexOutOfRange(x, n)
            if u == v:
                raise SelfLoop(u)
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in seen:
                raise DuplicateEdge(a, b)
            seen.add((a, b))
            normalized.append((a, b, Sign.parse(s)))
        normalized.sort(key=lambda e: (e[0], e[1]))
        return tuple(normalized)

    @classmethod
    def trusted(cls, n: int, edges: Iterable[SignedEdge]) -> "SignedGraph":
        """이미 정규화된 간선으로 검증 없이 생성 (내부 연산용)"""
        return cls.model_construct(n=n, edges=tuple(sorted(edges, key=lambda e: (e[0], e[1]))))

    # ------------------------------------------------------------
    # 파생 인덱스
    # ------------------------------------------------------------

    @cached_property
    def adjacency(self) -> List[Dict[int, Sign]]:
        adj: List[Dict[int, Sign]] = [dict() for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u][v] = s
            adj[v][u] = s
        return adj

    @cached_property
    def edge_signs(self) -> Dict[Tuple[int, int], Sign]:
        return {(u, v): s for u, v, s in self.edges}

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def sign(self, u: int, v: int) -> Optional[Sign]:
        return self.adjacency[u].get(v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbors(self, v: int) -> List[int]:
        return sorted(self.adjacency[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def pairs(self) -> Iterator[Tuple[int, int]]:
        for u, v, _ in self.edges:
            yield u, v

    def negative_edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v, s in self.edges if s is Sign.NEG]

    def underlying(self) -> nx.Graph:
        """부호를 지운 기저 그래프"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.pairs())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        body = " ".join(f"{u}{s.symbol}{v}" for u, v, s in self.edges)
        return f"SignedGraph(n={self.n}, [{body}])"

    __str__ = __repr__


class Balanced(BaseModel):
    """균형 인증서: 적용하면 모든 간선이 양수가 되는 switching 집합"""
    kind: Literal["balanced"] = "balanced"
    switching: FrozenSet[int] = Field(..., description="switching 집합 W")

    model_config = ConfigDict(frozen=True)

    @property
    def balanced(self) -> bool:
        return True


class Unbalanced(BaseModel):
    """불균형 인증서: 부호 곱이 음수인 사이클 (처음 = 끝)"""
    kind: Literal["unbalanced"] = "unbalanced"
    cycle: Tuple[int, ...] = Field(..., description="닫힌 정점 열")

    model_config = ConfigDict(frozen=True)

    @property
    def balanced(self) -> bool:
        return False


BalanceCertificate = Annotated[Union[Balanced, Unbalanced], Field(discriminator="kind")]
