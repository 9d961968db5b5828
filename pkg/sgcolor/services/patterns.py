"""
Pattern Catalog
CLI 패턴 이름 ↔ Pattern 변환과 자주 쓰는 금지 클래스
"""
import re
from typing import Iterable, List

from ..data.catalog import get_catalog, linear_forest, path_graph
from ..exceptions import BadParams
from ..models.graph import SignedGraph
from ..models.pattern import ForbSpec, MatchMode, Pattern

PATTERN_NAMES = ["neg-k3", "neg-k4", "k3neg-exact", "k4m-exact", "p<k>", "claw", "k14", "linear-forest:<a+b+...>"]

_PATH_RE = re.compile(r"^p(\d+)$")
_FOREST_RE = re.compile(r"^linear-forest:(\d+(?:\+\d+)*)$")


def make_pattern(name: str, template: SignedGraph, mode: MatchMode) -> Pattern:
    return Pattern(name=name, template=template, mode=mode)


def path_pattern(k: int) -> Pattern:
    """P_k (정점 k 개), 기저 그래프 매칭"""
    if k < 1:
        raise BadParams(f"경로 패턴의 정점 수는 1 이상이어야 합니다: {k}")
    return make_pattern(f"p{k}", path_graph(k), MatchMode.UNDERLYING)


def linear_forest_pattern(orders: Iterable[int]) -> Pattern:
    orders = list(orders)
    spec = "+".join(str(k) for k in orders)
    return make_pattern(f"linear-forest:{spec}", linear_forest(orders), MatchMode.UNDERLYING)


def pattern_by_name(name: str) -> Pattern:
    """
    CLI 패턴 이름을 Pattern 으로 변환

    Raises:
        BadParams: 알 수 없는 이름
    """
    catalog = get_catalog()
    fixed = {
        "neg-k3": ("neg-k3", MatchMode.SWITCHING),
        "neg-k4": ("neg-k4", MatchMode.SWITCHING),
        "k3neg-exact": ("neg-k3", MatchMode.EXACT),
        "k4m-exact": ("k4m", MatchMode.EXACT),
        "claw": ("claw", MatchMode.UNDERLYING),
        "k14": ("k14", MatchMode.UNDERLYING),
    }
    if name in fixed:
        graph_name, mode = fixed[name]
        return make_pattern(name, catalog.get(graph_name), mode)
    match = _PATH_RE.match(name)
    if match:
        return path_pattern(int(match.group(1)))
    match = _FOREST_RE.match(name)
    if match:
        return linear_forest_pattern(int(k) for k in match.group(1).split("+"))
    raise BadParams(f"알 수 없는 패턴: {name} (사용 가능: {', '.join(PATTERN_NAMES)})")


def forb_spec(names: Iterable[str]) -> ForbSpec:
    return ForbSpec(patterns=[pattern_by_name(n) for n in names])


def parse_forbid_list(text: str) -> ForbSpec:
    """쉼표로 구분된 패턴 이름 목록"""
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise BadParams("금지 패턴 목록이 비어 있습니다")
    return forb_spec(names)


def p4_class() -> ForbSpec:
    """Forb{(K3,−) exact, (K4,M) exact, P4}"""
    return forb_spec(["k3neg-exact", "k4m-exact", "p4"])


def k4hat_path_class(k: int) -> ForbSpec:
    """Forb{(K̂4,−), P_k}"""
    return ForbSpec(patterns=[pattern_by_name("neg-k4"), path_pattern(k)])


def k3hat_class(extra: List[str]) -> ForbSpec:
    """Forb{(K̂3,−), ...}"""
    return forb_spec(["neg-k3"] + list(extra))
