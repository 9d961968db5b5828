"""
SG File Service
SG 텍스트 형식 읽기/쓰기

    c <주석>
    p sg <n> <m>
    e <u> <v> <+|->     (정점은 1-기반)
"""
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Union

from ..exceptions import GraphIOError, ParseError, SignedGraphError
from ..models.graph import SignedGraph
from ..models.report import SGFile

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def parse_sg_text(text: str, path: Optional[str] = None) -> SGFile:
    """
    SG 텍스트 파싱 (구조만 확인, 그래프 제약은 to_graph 에서)

    Raises:
        ParseError: 문법 오류 (1-기반 줄 번호)
    """
    header = None
    edges = []
    comments: List[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        tag = tokens[0]
        if tag == "c":
            rest = raw.lstrip()[1:]
            comments.append((rest[1:] if rest[:1].isspace() else rest).rstrip())
        elif tag == "p":
            if header is not None:
                raise ParseError(lineno, "헤더가 두 번 나왔습니다", path)
            if len(tokens) != 4 or tokens[1] != "sg":
                raise ParseError(lineno, "헤더 형식은 'p sg <n> <m>' 입니다", path)
            n, m = _ints(tokens[2:], lineno, path)
            if n < 0 or m < 0:
                raise ParseError(lineno, "n, m 은 음수가 될 수 없습니다", path)
            header = (n, m)
        elif tag == "e":
            if header is None:
                raise ParseError(lineno, "헤더보다 간선이 먼저 나왔습니다", path)
            if len(tokens) != 4 or tokens[3] not in ("+", "-"):
                raise ParseError(lineno, "간선 형식은 'e <u> <v> <+|->' 입니다", path)
            u, v = _ints(tokens[1:3], lineno, path)
            n = header[0]
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(lineno, f"정점 {x} 는 1..{n} 밖입니다", path)
            if u == v:
                raise ParseError(lineno, f"자기 루프 {u}", path)
            edges.append((u, v, tokens[3], lineno))
        else:
            raise ParseError(lineno, f"알 수 없는 줄 종류 '{tag}'", path)
    if header is None:
        raise ParseError(max(1, len(text.splitlines())), "헤더 'p sg <n> <m>' 가 없습니다", path)
    n, m = header
    if len(edges) != m:
        raise ParseError(len(text.splitlines()), f"헤더는 간선 {m}개, 실제 {len(edges)}개", path)
    seen = {}
    for u, v, _, lineno in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"중복 간선 {key} (줄 {seen[key]})", path)
        seen[key] = lineno
    return SGFile(n=n, m=m, edges=[(u, v, s) for u, v, s, _ in edges], comments=comments)


def _ints(tokens: Iterable[str], lineno: int, path: Optional[str]) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"정수가 아닙니다: {' '.join(tokens)}", path)


def to_graph(sg: SGFile) -> SignedGraph:
    return SignedGraph(n=sg.n, edges=[(u - 1, v - 1, s) for u, v, s in sg.edges])


def from_graph(g: SignedGraph, comments: Optional[Iterable[str]] = None) -> SGFile:
    return SGFile(
        n=g.n,
        m=g.m,
        edges=[(u + 1, v + 1, s.symbol) for u, v, s in g.edges],
        comments=list(comments or []),
    )


def render_sg(sg: SGFile) -> str:
    """SGFile → 텍스트 (간선은 (u, v) 순 정렬)"""
    lines = [f"c {c}".rstrip() for c in sg.comments]
    lines.append(f"p sg {sg.n} {sg.m}")
    lines.extend(f"e {u} {v} {s}" for u, v, s in sorted(sg.edges))
    return "\n".join(lines) + "\n"


def graph_to_text(g: SignedGraph, comments: Optional[Iterable[str]] = None) -> str:
    return render_sg(from_graph(g, comments))


def graph_from_text(text: str, path: Optional[str] = None) -> SignedGraph:
    return to_graph(parse_sg_text(text, path))


def load_sg_file(path: PathLike) -> SGFile:
    """
    SG 파일 로드 (주석 유지)

    Raises:
        GraphIOError: 파일을 읽을 수 없거나 UTF-8 이 아닌 경우
        ParseError: 문법 오류
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphIOError(f"파일을 읽을 수 없습니다: {path} ({e})")
    except UnicodeDecodeError as e:
        raise GraphIOError(f"UTF-8 텍스트가 아닙니다: {path} ({e.reason}, 바이트 {e.start})")
    return parse_sg_text(text, str(path))


def read_sg(path: PathLike) -> SignedGraph:
    sg = load_sg_file(path)
    try:
        return to_graph(sg)
    except SignedGraphError as e:
        raise ParseError(1, str(e), str(path))


def write_sg(g: SignedGraph, path: PathLike, comments: Optional[Iterable[str]] = None) -> None:
    """
    SG 파일 쓰기

    Raises:
        GraphIOError: 파일을 쓸 수 없는 경우
    """
    path = Path(path)
    try:
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(graph_to_text(g, comments), encoding="utf-8")
    except OSError as e:
        raise GraphIOError(f"파일을 쓸 수 없습니다: {path} ({e})")
    logger.debug(f"📌 SG 파일 저장: {path} (n={g.n}, m={g.m})")
