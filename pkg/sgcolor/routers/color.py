"""
color 서브커맨드
SG 파일을 선택한 알고리즘으로 균형 색칠합니다.
"""
import argparse
import json
import logging
from typing import Any, Dict

from ..exceptions import BadParams
from ..models.coloring import BalancedColoring, ColorOrPath
from ..models.graph import SignedGraph
from ..services.constructive import color_layered_nbhd, color_or_path_k3free, color_p4class
from ..services.solver import chi_b_exact, color_via_negative, validate_coloring
from ..services.sgfile import read_sg

logger = logging.getLogger(__name__)

ALGORITHMS = ("exact", "negative", "thm20", "thm23", "thm30")


def _coloring_payload(g: SignedGraph, coloring: BalancedColoring) -> Dict[str, Any]:
    return {
        "kind": "coloring",
        "num_colors": coloring.num_colors,
        "colors": list(coloring.colors),
        "valid": validate_coloring(g, coloring),
    }


def _outcome_payload(g: SignedGraph, outcome: ColorOrPath) -> Dict[str, Any]:
    if outcome.is_path:
        return {"kind": "path", "path": [v + 1 for v in outcome.path]}
    return _coloring_payload(g, outcome.coloring)


def run_algorithm(g: SignedGraph, algo: str, k: int = None, b: int = None, start: int = 0) -> Dict[str, Any]:
    """
    알고리즘 실행 결과를 JSON 으로 내보낼 dict 로 반환

    Args:
        g: 입력 부호 그래프
        algo: ALGORITHMS 중 하나
        k: thm20 의 k, thm23 의 경로 정점 수
        b: thm23 의 닫힌 이웃 색 예산
        start: 시작 정점 (0-기반)

    Raises:
        BadParams: 필요한 옵션이 없는 경우
    """
    if algo == "exact":
        _, coloring = chi_b_exact(g)
        return _coloring_payload(g, coloring)
    if algo == "negative":
        return _coloring_payload(g, color_via_negative(g))
    if algo == "thm30":
        return _coloring_payload(g, color_p4class(g))
    if k is None:
        raise BadParams(f"{algo} 는 --k 가 필요합니다")
    if algo == "thm20":
        return _outcome_payload(g, color_or_path_k3free(g, k, start))
    if algo == "thm23":
        if b is None:
            raise BadParams("thm23 은 --b 가 필요합니다")
        return _outcome_payload(g, color_layered_nbhd(g, k, b, start=start))
    raise BadParams(f"알 수 없는 알고리즘: {algo}")


def handle(args: argparse.Namespace) -> int:
    g = read_sg(args.file)
    start = args.start - 1
    if g.n and not 0 <= start < g.n:
        raise BadParams(f"--start 는 1..{g.n} 이어야 합니다: {args.start}")
    payload = run_algorithm(g, args.algo, args.k, args.b, start)
    payload = {"file": args.file, "algo": args.algo, **payload}
    print(json.dumps(payload, ensure_ascii=False, indent=2))
    if payload["kind"] == "coloring" and not payload["valid"]:
        logger.error(f"❌ {args.algo}: 유효하지 않은 색칠")
        return 1
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("color", help="균형 색칠")
    parser.add_argument("file", help="SG 파일")
    parser.add_argument("--algo", choices=ALGORITHMS, default="exact", help="색칠 알고리즘")
    parser.add_argument("--k", type=int, help="thm20: 색 예산 지수, thm23: 경로 정점 수")
    parser.add_argument("--b", type=int, help="thm23: 닫힌 이웃 색 예산")
    parser.add_argument("--start", type=int, default=1, help="시작 정점 (1-기반)")
    parser.set_defaults(handler=handle)
