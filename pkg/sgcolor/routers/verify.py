"""
verify 서브커맨드
등록된 실험을 실행하고 JSON 보고서 (선택적으로 CSV) 를 저장합니다.
"""
import argparse
import json
import logging
from pathlib import Path
from typing import Any, Dict, List

from ..config import settings
from ..exceptions import BadParams
from ..models.report import Verdict
from ..services.runner import CsvRowWriter, ExperimentRunner, write_report

logger = logging.getLogger(__name__)


def parse_params(items: List[str]) -> Dict[str, Any]:
    """
    key=value 목록 → dict (값은 JSON 으로 읽고 실패하면 문자열)

    Raises:
        BadParams: '=' 가 없는 항목
    """
    params: Dict[str, Any] = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep or not key:
            raise BadParams(f"--param 형식은 key=value 입니다: {item!r}")
        try:
            params[key.replace("-", "_")] = json.loads(raw)
        except json.JSONDecodeError:
            params[key.replace("-", "_")] = raw
    return params


def handle(args: argparse.Namespace) -> int:
    runner = ExperimentRunner(workers=args.workers)
    if args.list:
        for name in runner.names():
            print(f"{name:22s} {runner.get(name).summary}")
        return 0
    if args.experiment is None:
        raise BadParams("실험 이름이 필요합니다 (--list 로 목록 확인)")

    out = Path(args.out) if args.out else Path(settings.REPORT_DIR) / f"{args.experiment}-{args.seed}.json"
    on_row = CsvRowWriter(out.with_suffix(".csv")) if args.csv else None
    report = runner.run(args.experiment, parse_params(args.param), args.seed, on_row)
    write_report(report, out)

    print(f"{report.experiment}: {report.verdict.value} (rows={len(report.rows)}, failures={len(report.failures)}) → {out}")
    for note in report.notes:
        print(f"  📌 {note}")
    return 1 if report.verdict is Verdict.FAIL else 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="실험 실행과 보고서 저장")
    parser.add_argument("experiment", nargs="?", help="실험 이름")
    parser.add_argument("--param", action="append", default=[], metavar="KEY=VALUE", help="실험 파라미터 (반복 가능)")
    parser.add_argument("--seed", type=int, default=0, help="64비트 시드")
    parser.add_argument("--out", help="JSON 보고서 경로 (기본값 REPORT_DIR/<실험>-<시드>.json)")
    parser.add_argument("--csv", action="store_true", help="보고서 옆에 행 단위 CSV 도 저장")
    parser.add_argument("--workers", type=int, default=None, help="프로세스 수 (기본값 WORKERS)")
    parser.add_argument("--list", action="store_true", help="등록된 실험 목록")
    parser.set_defaults(handler=handle)
