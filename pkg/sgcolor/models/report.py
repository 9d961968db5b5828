"""
Report Pydantic Models
실험 결과 보고서 모델 (CSV: 행, JSON: 전체)
"""
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

Value = Union[bool, int, float, str, None]

CSV_COLUMNS = ["instance_id", "n", "m", "metric_name", "value", "expected", "pass"]


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_REPRODUCED = "NOT-REPRODUCED-AT-DESK-SCALE"


class Witness(BaseModel):
    """재현 가능한 실패 증거: SG 파일 본문 + 연산 입력"""
    sg: str = Field(..., description="SG 형식 그래프 텍스트")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="연산 입력")


class ReportRow(BaseModel):
    """인스턴스별 측정 결과"""
    instance_id: int
    n: int
    m: int
    metric_name: str
    value: Value = None
    expected: Value = None
    passed: bool = Field(..., description="행 통과 여부")
    witness: Optional[Witness] = None

    model_config = {
        "json_schema_extra": {
            "example": {
                "instance_id": 3,
                "n": 3,
                "m": 3,
                "metric_name": "chi_b",
                "value": 2,
                "expected": 2,
                "passed": True,
            }
        }
    }

    def csv_record(self) -> Dict[str, Value]:
        return {
            "instance_id": self.instance_id,
            "n": self.n,
            "m": self.m,
            "metric_name": self.metric_name,
            "value": self.value,
            "expected": self.expected,
            "pass": self.passed,
        }


class Report(BaseModel):
    """실험 보고서 (실행 시각 등 비결정적 값은 담지 않습니다)"""
    experiment: str
    version: str
    seed: int
    params: Dict[str, Any] = Field(default_factory=dict)
    rows: List[ReportRow] = Field(default_factory=list)
    verdict: Verdict = Verdict.PASS
    notes: List[str] = Field(default_factory=list)

    @property
    def failures(self) -> List[ReportRow]:
        return [row for row in self.rows if not row.passed]


class SGFile(BaseModel):
    """SG 파일 내용: 헤더, 간선 (디스크상 1-기반), 주석 줄"""
    n: int = Field(..., ge=0, description="헤더의 정점 수")
    m: int = Field(..., ge=0, description="헤더의 간선 수")
    edges: List[Tuple[int, int, str]] = Field(default_factory=list, description="(u, v, '+'|'-'), 1-기반")
    comments: List[str] = Field(default_factory=list, description="'c ' 뒤의 주석 본문")


class InstanceResult(BaseModel):
    """한 인스턴스의 평가 결과 (행, 메모, 판정 덮어쓰기)"""
    instance_id: int
    rows: List[ReportRow] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    verdict: Optional[Verdict] = None
