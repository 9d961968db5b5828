"""
Pattern Pydantic Models
유도 부분그래프 탐색용 패턴, 임베딩, 금지 클래스 모델
"""
from enum import Enum
from typing import FrozenSet, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .graph import SignedGraph


class MatchMode(str, Enum):
    """매칭 모드: 기저 그래프 / 2-간선색 그래프 / switching 동치"""
    UNDERLYING = "underlying"
    EXACT = "exact"
    SWITCHING = "switching"


class Pattern(BaseModel):
    """금지 유도 부분그래프 질의"""
    name: str = Field(..., description="패턴 이름 (예: neg-k3, p5)")
    template: SignedGraph = Field(..., description="템플릿 부호 그래프")
    mode: MatchMode = Field(..., description="매칭 모드")

    model_config = ConfigDict(frozen=True)


class Embedding(BaseModel):
    """
    패턴 발생의 검증 가능한 증거
    mapping[i] 는 템플릿 정점 i 의 호스트 정점입니다.
    SWITCHING 모드에서는 호스트 정점 기준 switching 집합을 함께 기록합니다.
    """
    pattern: str = Field(..., description="패턴 이름")
    mode: MatchMode = Field(..., description="매칭 모드")
    mapping: Tuple[int, ...] = Field(..., description="템플릿 → 호스트 단사 사상")
    switching: Optional[FrozenSet[int]] = Field(
        default=None, description="이미지에 적용할 switching 집합 (SWITCHING 모드)"
    )

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"pattern": "neg-k3", "mode": "switching", "mapping": [0, 1, 2], "switching": []}
        },
    )


class ForbSpec(BaseModel):
    """금지 패턴 목록 (Forb_ind)"""
    patterns: List[Pattern] = Field(default_factory=list, description="금지 패턴들")

    model_config = ConfigDict(frozen=True)

    @property
    def names(self) -> List[str]:
        return [p.name for p in self.patterns]


class ForbCheck(BaseModel):
    """금지 클래스 소속 판정 결과"""
    member: bool = Field(..., description="모든 패턴이 없으면 True")
    witnesses: List[Embedding] = Field(default_factory=list, description="발견된 패턴별 첫 증거")


class CotreeNode(BaseModel):
    """cograph 분해 트리 노드 (leaf / union / join)"""
    kind: Literal["leaf", "union", "join"] = Field(..., description="노드 종류")
    vertex: Optional[int] = Field(default=None, description="leaf 의 정점")
    children: List["CotreeNode"] = Field(default_factory=list, description="자식 노드")

    def leaves(self) -> List[int]:
        if self.kind == "leaf":
            return [self.vertex]
        out: List[int] = []
        for child in self.children:
            out.extend(child.leaves())
        return sorted(out)


CotreeNode.model_rebuild()


class CographResult(BaseModel):
    """cograph 판정 결과: 분해 트리 또는 유도 P4 증거"""
    is_cograph: bool
    cotree: Optional[CotreeNode] = None
    p4: Optional[Tuple[int, int, int, int]] = Field(default=None, description="유도 P4 (경로 순서)")
