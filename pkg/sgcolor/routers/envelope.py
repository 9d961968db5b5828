"""
envelope 서브커맨드
작은 envelope 를 전수 탐색하고 찾으면 SG 파일로 저장합니다.
"""
import argparse
import json
import logging

from ..services.envelope import find_envelope
from ..services.sgfile import write_sg

logger = logging.getLogger(__name__)


def handle(args: argparse.Namespace) -> int:
    found = find_envelope(args.max_n, args.seed)
    if found is None:
        print(json.dumps({"found": False, "max_n": args.max_n}))
        return 1
    cycle = [v + 1 for v in found.cycle]
    if args.output:
        write_sg(found.graph, args.output, comments=[f"envelope cycle {' '.join(map(str, cycle))}"])
    print(json.dumps({"found": True, "n": found.graph.n, "m": found.graph.m, "cycle": cycle}))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("envelope", help="envelope 탐색")
    parser.add_argument("--max-n", type=int, default=None, help="정점 수 상한")
    parser.add_argument("--seed", type=int, default=None, help="같은 크기 안에서의 탐색 순서 시드")
    parser.add_argument("-o", "--output", help="찾은 envelope 를 저장할 SG 파일")
    parser.set_defaults(handler=handle)
