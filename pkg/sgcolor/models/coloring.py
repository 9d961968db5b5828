"""
Coloring Pydantic Models
균형 색칠, 색칠-또는-경로, 패리티 분할 모델
"""
from typing import Dict, FrozenSet, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field


class BalancedColoring(BaseModel):
    """
    정점 → 색 (0부터의 작은 정수)
    각 색 클래스가 균형 집합이어야 유효합니다 (validate_coloring 으로 확인).
    """
    colors: Tuple[int, ...] = Field(..., description="colors[v] = 정점 v 의 색")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"colors": [0, 0, 1]}},
    )

    @classmethod
    def from_sequence(cls, colors: Sequence[int]) -> "BalancedColoring":
        return cls(colors=tuple(colors))

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out

    def compact(self) -> "BalancedColoring":
        """색 번호를 처음 등장 순서대로 0.. 으로 다시 매김"""
        remap: Dict[int, int] = {}
        for c in self.colors:
            remap.setdefault(c, len(remap))
        return BalancedColoring(colors=tuple(remap[c] for c in self.colors))


class ProperColoring(BaseModel):
    """무부호 그래프의 진색칠 (노드 → 색)"""
    colors: Dict[int, int] = Field(default_factory=dict, description="노드별 색")

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))


class ColorOrPath(BaseModel):
    """균형 색칠 또는 시작 정점에서 출발하는 유도 경로"""
    kind: Literal["coloring", "path"]
    coloring: Optional[BalancedColoring] = None
    path: Optional[Tuple[int, ...]] = None

    @classmethod
    def of_coloring(cls, coloring: BalancedColoring) -> "ColorOrPath":
        return cls(kind="coloring", coloring=coloring)

    @classmethod
    def of_path(cls, path: Sequence[int]) -> "ColorOrPath":
        return cls(kind="path", path=tuple(path))

    @property
    def is_path(self) -> bool:
        return self.kind == "path"


class ParityPartition(BaseModel):
    """색 클래스별 균형 이분할: 음의 간선은 두 쪽을 가로지르고 양의 간선은 한쪽 안에 있습니다"""
    sides: Dict[int, Tuple[FrozenSet[int], FrozenSet[int]]] = Field(
        default_factory=dict, description="색 → (같은 쪽, 반대쪽)"
    )
