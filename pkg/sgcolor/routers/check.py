"""
check 서브커맨드
SG 파일이 금지 패턴 목록의 클래스에 속하는지 판정합니다.
"""
import argparse
import json
import logging

from ..services.detect import in_forb_class
from ..services.patterns import PATTERN_NAMES, parse_forbid_list
from ..services.sgfile import read_sg

logger = logging.getLogger(__name__)


def handle(args: argparse.Namespace) -> int:
    g = read_sg(args.file)
    spec = parse_forbid_list(args.forbid)
    result = in_forb_class(g, spec)
    payload = {
        "file": args.file,
        "forbid": spec.names,
        "member": result.member,
        "witnesses": [
            {"pattern": w.pattern, "mode": w.mode.value, "vertices": [v + 1 for v in w.mapping]}
            for w in result.witnesses
        ],
    }
    print(json.dumps(payload, ensure_ascii=False, indent=2))
    if not result.member:
        logger.info(f"⚠️ {args.file}: 금지 패턴 {len(result.witnesses)}개 발견")
    return 0 if result.member else 1


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="금지 유도 부분그래프 클래스 소속 판정")
    parser.add_argument("file", help="SG 파일")
    parser.add_argument("--forbid", required=True, help=f"쉼표로 구분한 패턴 ({', '.join(PATTERN_NAMES)})")
    parser.set_defaults(handler=handle)
