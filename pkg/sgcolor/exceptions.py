"""
sgcolor Exceptions
도메인 예외 계층 (ValueError 가 아닌 Exception 을 직접 상속)
"""
from typing import Any, Optional, Sequence


class SignedGraphError(Exception):
    """sgcolor 예외의 최상위 클래스"""


# ------------------------------------------------------------
# sg-core
# ------------------------------------------------------------

class DuplicateEdge(SignedGraphError):
    """같은 정점 쌍에 간선이 두 번 주어진 경우"""

    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"중복 간선: {{{u}, {v}}}")


class SelfLoop(SignedGraphError):
    """자기 루프 간선"""

    def __init__(self, v: int):
        self.v = v
        super().__init__(f"자기 루프는 허용되지 않습니다: {v}")


class IndexOutOfRange(SignedGraphError):
    """정점 번호가 0..n-1 범위를 벗어난 경우"""

    def __init__(self, v: int, n: int):
        self.v, self.n = v, n
        super().__init__(f"정점 {v}는 범위 0..{n - 1} 밖입니다")


class NotAWalk(SignedGraphError):
    """닫힌 보행(closed walk)이 아닌 정점 열"""

    def __init__(self, walk: Sequence[int], reason: str):
        self.walk = tuple(walk)
        super().__init__(f"닫힌 보행이 아닙니다 {self.walk}: {reason}")


class UnderlyingMismatch(SignedGraphError):
    """두 부호 그래프의 기저 그래프가 다른 경우"""


# ------------------------------------------------------------
# sg-color
# ------------------------------------------------------------

class ExceedsBound(SignedGraphError):
    """최적값이 주어진 상한을 넘는 경우"""

    def __init__(self, upper: int):
        self.upper = upper
        super().__init__(f"최적값이 상한 {upper}을(를) 초과합니다")


class PreconditionViolated(SignedGraphError):
    """연산의 사전 조건 위반"""


class SolverContractBroken(SignedGraphError):
    """하위 solver가 약속한 색칠을 돌려주지 않은 경우"""


class PartitionNotIndependent(SignedGraphError):
    """조인 한쪽의 3분할이 음의 부분그래프에서 독립이 아닌 경우"""


class InternalContradiction(SignedGraphError):
    """증명상 배제되는 경우가 발생 (matcher 버그 신호)"""


class SearchTimeout(SignedGraphError):
    """분기 한정 탐색이 마감 시각을 넘긴 경우"""


# ------------------------------------------------------------
# sg-gen
# ------------------------------------------------------------

class BadParams(SignedGraphError):
    """잘못된 생성기/실험 파라미터"""


class SamplingExhausted(SignedGraphError):
    """샘플러가 시도 횟수 안에 조건을 만족하는 그래프를 찾지 못함"""

    def __init__(self, attempts: int):
        self.attempts = attempts
        super().__init__(f"{attempts}회 시도 후에도 샘플을 얻지 못했습니다")


class IterationCapExceeded(SignedGraphError):
    """반복 상한 초과"""

    def __init__(self, cap: int, partial: Optional[Any] = None):
        self.cap = cap
        self.partial = partial
        super().__init__(f"반복 상한 {cap} 초과")


class ClassViolation(SignedGraphError):
    """구성 중인 그래프가 목표 클래스를 벗어남 (envelope 또는 조인 규칙 버그 신호)"""


# ------------------------------------------------------------
# sg-harness
# ------------------------------------------------------------

class ParseError(SignedGraphError):
    """SG 파일 파싱 오류"""

    def __init__(self, line: int, message: str, path: Optional[str] = None):
        self.line = line
        self.path = path
        where = f"{path}:{line}" if path else f"line {line}"
        super().__init__(f"{where}: {message}")


class GraphIOError(SignedGraphError):
    """SG 파일 입출력 오류"""


class UnknownExperiment(SignedGraphError):
    """등록되지 않은 실험 이름"""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"알 수 없는 실험: {name}")
