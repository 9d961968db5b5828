"""
sgcolor CLI Application
Signed graph balanced coloring toolkit
"""
import argparse
import logging
import sys
from typing import List, Optional

from .config import settings
from .exceptions import BadParams, GraphIOError, ParseError, SignedGraphError, UnknownExperiment
from .routers import check, color, envelope, gen, verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

# 사용/입출력 오류로 보는 예외 (나머지 도메인 예외는 위반으로 봅니다)
USAGE_ERRORS = (BadParams, GraphIOError, ParseError, UnknownExperiment)


def configure_logging(level: Optional[str] = None) -> None:
    """로깅 설정 (로그는 stderr, 결과는 stdout)"""
    logging.basicConfig(
        level=getattr(logging, (level or settings.LOG_LEVEL).upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=settings.PROJECT_NAME, description=settings.DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    parser.add_argument("--log-level", default=None, help="로그 레벨 (기본값 LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    # 서브커맨드 등록
    for router in (gen, check, color, verify, envelope):
        router.register(subparsers)
    return parser


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, USAGE_ERRORS):
        return EXIT_USAGE
    if isinstance(exc, SignedGraphError):
        return EXIT_VIOLATION
    return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    """
    CLI 진입점

    Returns:
        int: 0 성공/소속, 1 위반/상한 실패, 2 사용법/입출력 오류
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    configure_logging(args.log_level)
    logger.debug(f"📌 {settings.PROJECT_NAME} {settings.VERSION}: {args.command}")
    try:
        return args.handler(args)
    except SignedGraphError as e:
        code = exit_code_for(e)
        logger.error(f"❌ {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return code
    except Exception as e:
        # 전역 예외 처리
        logger.error(f"❌ Global exception: {e}", exc_info=True)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
