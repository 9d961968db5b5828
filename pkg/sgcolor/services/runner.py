"""
Experiment Runner Service
등록된 실험 실행, 행 스트리밍, CSV / JSON 보고서 저장
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Union

import pandas as pd
from pydantic import ValidationError

from ..config import settings
from ..exceptions import BadParams, GraphIOError, UnknownExperiment
from ..models.report import CSV_COLUMNS, InstanceResult, Report, ReportRow, Verdict
from .experiments import REGISTRY, Experiment, ExperimentParams

logger = logging.getLogger(__name__)

RowCallback = Callable[[ReportRow], None]


def _evaluate_instance(name: str, params: Dict[str, Any], seed: int, instance_id: int) -> InstanceResult:
    """프로세스 풀 작업 단위 (이름과 파라미터만 넘깁니다)"""
    exp = REGISTRY[name]
    return exp.evaluate(exp.params_model.model_validate(params), seed, instance_id)


class CsvRowWriter:
    """행을 받는 대로 CSV 에 덧붙이는 writer"""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self._started = False

    def __call__(self, row: ReportRow) -> None:
        frame = pd.DataFrame([row.csv_record()], columns=CSV_COLUMNS)
        try:
            if not self._started:
                self.path.parent.mkdir(parents=True, exist_ok=True)
            frame.to_csv(self.path, mode="a" if self._started else "w", header=not self._started, index=False)
        except OSError as e:
            raise GraphIOError(f"CSV 를 쓸 수 없습니다: {self.path} ({e})")
        self._started = True


class ExperimentRunner:
    """
    실험 실행기
    - 인스턴스 i 의 난수는 SeedSequence([seed, i]) 에서만 나옵니다
    - WORKERS > 1 이면 프로세스 풀로 분산하되, 행은 항상 instance_id 순서로 내보냅니다
    """

    def __init__(self, workers: Optional[int] = None):
        self.workers = settings.WORKERS if workers is None else workers

    def names(self) -> List[str]:
        return sorted(REGISTRY)

    def get(self, name: str) -> Experiment:
        if name not in REGISTRY:
            raise UnknownExperiment(name)
        return REGISTRY[name]

    def build_params(self, name: str, params: Optional[Dict[str, Any]] = None) -> ExperimentParams:
        """
        파라미터 모델 생성

        Raises:
            UnknownExperiment: 등록되지 않은 이름
            BadParams: 파라미터 검증 실패
        """
        exp = self.get(name)
        try:
            return exp.params_model.model_validate(params or {})
        except ValidationError as e:
            raise BadParams(f"{name} 파라미터 오류: {e.errors(include_url=False)}")

    def _results(self, name: str, params: ExperimentParams, seed: int) -> Iterator[InstanceResult]:
        exp = self.get(name)
        total = exp.count(params)
        if self.workers > 1 and total > 1:
            dumped = params.model_dump()
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                yield from pool.map(
                    _evaluate_instance,
                    [name] * total,
                    [dumped] * total,
                    [seed] * total,
                    range(total),
                )
            return
        for iid in range(total):
            yield exp.evaluate(params, seed, iid)

    def run(
        self,
        name: str,
        params: Optional[Dict[str, Any]] = None,
        seed: int = 0,
        on_row: Optional[RowCallback] = None,
    ) -> Report:
        """
        실험 실행

        Args:
            name: 실험 이름
            params: 파라미터 (기본값은 각 실험의 파라미터 모델)
            seed: 64비트 시드
            on_row: 행이 만들어질 때마다 호출 (스트리밍)

        Returns:
            Report: 같은 (name, params, seed) 면 같은 보고서
        """
        if not 0 <= seed < 2 ** 64:
            raise BadParams(f"시드는 0..2^64-1 범위여야 합니다: {seed}")
        model = self.build_params(name, params)
        exp = self.get(name)
        logger.info(f"🚀 실험 시작: {name} (seed={seed}, 인스턴스 {exp.count(model)}개)")

        report = Report(
            experiment=name,
            version=settings.VERSION,
            seed=seed,
            params=model.model_dump(mode="json"),
        )
        downgraded = False
        for result in self._results(name, model, seed):
            for row in result.rows:
                report.rows.append(row)
                if on_row is not None:
                    on_row(row)
            report.notes.extend(result.notes)
            downgraded = downgraded or result.verdict is Verdict.NOT_REPRODUCED

        if report.failures:
            report.verdict = Verdict.FAIL
        elif downgraded:
            report.verdict = Verdict.NOT_REPRODUCED
        else:
            report.verdict = Verdict.PASS
        log = logger.info if report.verdict is Verdict.PASS else logger.warning
        marker = "✅" if report.verdict is Verdict.PASS else "⚠️"
        log(f"{marker} 실험 완료: {name} → {report.verdict.value} (행 {len(report.rows)}개, 실패 {len(report.failures)}개)")
        return report


def report_to_json(report: Report) -> str:
    return report.model_dump_json(indent=2)


def write_report(report: Report, path: Union[str, Path]) -> None:
    """
    JSON 보고서 저장

    Raises:
        GraphIOError: 파일을 쓸 수 없는 경우
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report_to_json(report), encoding="utf-8")
    except OSError as e:
        raise GraphIOError(f"보고서를 쓸 수 없습니다: {path} ({e})")
    logger.info(f"📌 보고서 저장: {path}")


def rows_frame(report: Report) -> pd.DataFrame:
    return pd.DataFrame([row.csv_record() for row in report.rows], columns=CSV_COLUMNS)


# 전역 실행기 인스턴스
_runner: Optional[ExperimentRunner] = None


def get_runner() -> ExperimentRunner:
    """실행기 싱글톤 인스턴스 반환"""
    global _runner
    if _runner is None:
        _runner = ExperimentRunner()
    return _runner


def run_experiment(
    name: str,
    params: Optional[Dict[str, Any]] = None,
    seed: int = 0,
    on_row: Optional[RowCallback] = None,
) -> Report:
    return get_runner().run(name, params, seed, on_row)
