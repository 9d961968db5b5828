"""
Experiment Definitions
각 실험은 파라미터 모델, 인스턴스 수, 인스턴스 평가 함수로 이루어집니다.
모든 난수는 (seed, instance_id) 로부터 나오므로 인스턴스 평가는 서로 독립적입니다.
"""
import logging
import time
from functools import lru_cache
from math import ceil, comb
from typing import Any, Callable, Dict, List, Optional, Tuple, Type

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher
from pydantic import BaseModel, ConfigDict, Field

from ..config import settings
from ..data.catalog import clique, cycle_graph
from ..exceptions import InternalContradiction, IterationCapExceeded, SearchTimeout, SignedGraphError
from ..models.coloring import BalancedColoring
from ..models.graph import Balanced, Sign, SignedGraph
from ..models.report import InstanceResult, ReportRow, Verdict, Witness
from .constructive import (
    color_layered_nbhd,
    color_linear_forest_k3free,
    color_or_path_k3free,
    color_p4class,
    components,
    p4class_nbhd_solver,
)
from .detect import find_induced, in_forb_class, is_induced_path
from .envelope import build_lr_lazy, claim1_xyz, find_envelope, get_default_envelope
from .generators import (
    arc_graph,
    enumerate_cographs,
    gen_shift,
    gen_signed_shift3,
    make_rng,
    random_graph,
    random_girth_graph,
    random_k3free_signed_graph,
    random_k4free_signed_graph,
    random_orientation,
    random_signed_graph,
    sample_p4class_member,
    signed_line_graph,
    with_sign,
)
from .patterns import forb_spec, k3hat_class, k4hat_path_class, linear_forest_pattern, p4_class, path_pattern
from .sgfile import graph_to_text
from .solver import (
    chi_b_exact,
    chi_exact,
    find_k_coloring,
    negative_coloring_from_balanced,
    validate_coloring,
)
from .switching import (
    add_universal_positive,
    disjoint_union,
    induced_subgraph,
    is_balanced,
    negative_edges_form_cut,
    negative_subgraph,
    sign_of_closed_walk,
    switch,
    switching_equivalent,
)

logger = logging.getLogger(__name__)


class ExperimentParams(BaseModel):
    """실험 파라미터 기본 모델 (알 수 없는 키는 거부)"""
    model_config = ConfigDict(extra="forbid", frozen=True)


class Experiment(BaseModel):
    """등록된 실험"""
    name: str
    summary: str
    params_model: Type[ExperimentParams]
    count: Callable[[Any], int]
    evaluate: Callable[[Any, int, int], InstanceResult]

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


REGISTRY: Dict[str, Experiment] = {}


def experiment(name: str, summary: str, params_model: Type[ExperimentParams], count: Callable[[Any], int]):
    """실험 등록 데코레이터"""

    def wrap(evaluate: Callable[[Any, int, int], InstanceResult]):
        REGISTRY[name] = Experiment(
            name=name, summary=summary, params_model=params_model, count=count, evaluate=evaluate
        )
        return evaluate

    return wrap


def _size(graph) -> Tuple[int, int]:
    if isinstance(graph, SignedGraph):
        return graph.n, graph.m
    if graph is None:
        return 0, 0
    return graph.number_of_nodes(), graph.number_of_edges()


def _row(
    iid: int,
    graph,
    metric: str,
    value,
    expected,
    passed: bool,
    inputs: Optional[Dict[str, Any]] = None,
) -> ReportRow:
    """행 생성, 실패한 행에는 SG 텍스트와 입력을 증거로 붙입니다"""
    n, m = _size(graph)
    witness = None
    if not passed and graph is not None:
        signed = graph if isinstance(graph, SignedGraph) else with_sign(graph, Sign.POS)
        witness = Witness(sg=graph_to_text(signed), inputs=dict(inputs or {}))
    return ReportRow(
        instance_id=iid,
        n=n,
        m=m,
        metric_name=metric,
        value=value,
        expected=expected,
        passed=bool(passed),
        witness=witness,
    )


def _error_row(iid: int, graph, metric: str, error: SignedGraphError, inputs: Dict[str, Any]) -> ReportRow:
    return _row(iid, graph, metric, f"{type(error).__name__}: {error}", None, False, inputs)


# ------------------------------------------------------------
# 균형 색칠 수와 음의 부분그래프 색칠 수
# ------------------------------------------------------------

class SandwichParams(ExperimentParams):
    count: int = Field(500, ge=1)
    max_n: int = Field(12, ge=1)
    p: float = Field(0.5, ge=0.0, le=1.0)
    neg_prob: float = Field(0.5, ge=0.0, le=1.0)


@experiment("lemma6-sandwich", "χ_b ≤ χ(Ĝ⁻) ≤ 2χ_b on random signed graphs", SandwichParams, lambda p: p.count)
def lemma6_sandwich(p: SandwichParams, seed: int, iid: int) -> InstanceResult:
    n = int(make_rng(seed, iid).integers(1, p.max_n + 1))
    g = random_signed_graph(n, p.p, seed, iid, 1, neg_prob=p.neg_prob)
    chi_b, coloring = chi_b_exact(g)
    chi_neg, _ = chi_exact(negative_subgraph(g))
    doubled = negative_coloring_from_balanced(g, coloring).num_colors
    ok = chi_b <= chi_neg <= 2 * chi_b and doubled <= 2 * chi_b
    return InstanceResult(
        instance_id=iid,
        rows=[_row(iid, g, "chi_neg", chi_neg, f"[{chi_b}, {2 * chi_b}]", ok, {"chi_b": chi_b})],
    )


class NegCliqueParams(ExperimentParams):
    min_i: int = Field(2, ge=1)
    max_i: int = Field(10, ge=1)


@experiment("neg-clique-chi", "χ_b((K_i, −)) = ⌈i/2⌉", NegCliqueParams, lambda p: max(0, p.max_i - p.min_i + 1))
def neg_clique_chi(p: NegCliqueParams, seed: int, iid: int) -> InstanceResult:
    i = p.min_i + iid
    g = clique(i, Sign.NEG)
    chi_b, coloring = chi_b_exact(g)
    expected = ceil(i / 2)
    ok = chi_b == expected and validate_coloring(g, coloring)
    return InstanceResult(instance_id=iid, rows=[_row(iid, g, "chi_b", chi_b, expected, ok, {"i": i})])


# ------------------------------------------------------------
# shift 그래프, 부호 선 그래프, arc 그래프
# ------------------------------------------------------------

class ShiftParams(ExperimentParams):
    max_n: int = Field(7, ge=1)
    ks: List[int] = Field(default_factory=lambda: [1, 2])


def _shift_cases(p: ShiftParams) -> List[Tuple[int, int]]:
    return [(k, n) for k in p.ks for n in range(max(k, 1), p.max_n + 1)]


@experiment("shift-growth", "χ(S_{k,n}) ≤ 2^χ(S_{k+1,n+1})", ShiftParams, lambda p: len(_shift_cases(p)))
def shift_growth(p: ShiftParams, seed: int, iid: int) -> InstanceResult:
    k, n = _shift_cases(p)[iid]
    small = gen_shift(k, n)
    big = gen_shift(k + 1, n + 1)
    chi_small, _ = chi_exact(small)
    chi_big, _ = chi_exact(big)
    ok = chi_small <= 2 ** chi_big
    return InstanceResult(
        instance_id=iid,
        rows=[_row(iid, small, "chi_shift", chi_small, f"<= 2^{chi_big}", ok, {"k": k, "n": n})],
    )


class SignedShiftParams(ExperimentParams):
    min_n: int = Field(3, ge=3)
    max_n: int = Field(8, ge=3)


def _positive_cliques(g: SignedGraph) -> bool:
    positive = nx.Graph()
    positive.add_nodes_from(g.vertices())
    positive.add_edges_from((u, v) for u, v, s in g.edges if s is Sign.POS)
    for comp in nx.connected_components(positive):
        size = len(comp)
        if positive.subgraph(comp).number_of_edges() != size * (size - 1) // 2:
            return False
    return True


@experiment(
    "thm15-membership",
    "Ŝ_{3,n} ∈ Forb{(K̂3,−), K_{1,4}} with positive edges forming disjoint cliques",
    SignedShiftParams,
    lambda p: max(0, p.max_n - p.min_n + 1),
)
def thm15_membership(p: SignedShiftParams, seed: int, iid: int) -> InstanceResult:
    n = p.min_n + iid
    g = gen_signed_shift3(n)
    member = in_forb_class(g, k3hat_class(["k14"])).member
    cliques = _positive_cliques(g)
    return InstanceResult(
        instance_id=iid,
        rows=[
            _row(iid, g, "member", member, True, member, {"n": n}),
            _row(iid, g, "positive_cliques", cliques, True, cliques, {"n": n}),
        ],
    )


class LineGraphParams(ExperimentParams):
    count: int = Field(50, ge=1)
    max_n: int = Field(12, ge=3)
    p: float = Field(0.4, ge=0.0, le=1.0)


@experiment(
    "thm18-membership",
    "signed line graphs of triangle-free graphs are in Forb{(K̂3,−), K_{1,3}}",
    LineGraphParams,
    lambda p: p.count,
)
def thm18_membership(p: LineGraphParams, seed: int, iid: int) -> InstanceResult:
    n = int(make_rng(seed, iid).integers(3, p.max_n + 1))
    graph = random_girth_graph(n, 4, p.p, seed, iid, 1)
    D = random_orientation(graph, seed, iid, 2)
    g = signed_line_graph(D)
    member = in_forb_class(g, k3hat_class(["claw"])).member
    return InstanceResult(
        instance_id=iid,
        rows=[_row(iid, g, "member", member, True, member, {"n": n, "arcs": [list(a) for a in D.arcs]})],
    )


class ArcGraphParams(ExperimentParams):
    count: int = Field(100, ge=1)
    max_n: int = Field(10, ge=2)
    p: float = Field(0.4, ge=0.0, le=1.0)


def _min_k(value: int, capacity: Callable[[int], int]) -> int:
    k = 0
    while capacity(k) < value:
        k += 1
    return k


@experiment("thm16-sandwich", "log bound and central-binomial bound on χ(A(D))", ArcGraphParams, lambda p: p.count)
def thm16_sandwich(p: ArcGraphParams, seed: int, iid: int) -> InstanceResult:
    n = int(make_rng(seed, iid).integers(2, p.max_n + 1))
    graph = random_graph(n, p.p, seed, iid, 1)
    D = random_orientation(graph, seed, iid, 2)
    chi_g, _ = chi_exact(graph)
    chi_a, _ = chi_exact(arc_graph(D))
    lower = _min_k(chi_g, lambda k: 2 ** k)
    upper = _min_k(chi_g, lambda k: comb(k, k // 2))
    ok = lower <= chi_a <= upper
    return InstanceResult(
        instance_id=iid,
        rows=[
            _row(iid, graph, "chi_arc", chi_a, f"[{lower}, {upper}]", ok,
                 {"chi_g": chi_g, "arcs": [list(a) for a in D.arcs]}),
        ],
    )


# ------------------------------------------------------------
# 구성적 색칠의 상한
# ------------------------------------------------------------

class K3FreeParams(ExperimentParams):
    count: int = Field(200, ge=1)
    max_n: int = Field(14, ge=1)
    max_k: int = Field(4, ge=1)
    p: float = Field(0.3, ge=0.0, le=1.0)
    neg_prob: float = Field(0.5, ge=0.0, le=1.0)


@experiment(
    "thm20-bound",
    "color_or_path_k3free gives ≤ 2^k − 1 colours or an induced path of length k+1",
    K3FreeParams,
    lambda p: p.count,
)
def thm20_bound(p: K3FreeParams, seed: int, iid: int) -> InstanceResult:
    rng = make_rng(seed, iid)
    n = int(rng.integers(1, p.max_n + 1))
    k = 1 + iid % p.max_k
    g = random_k3free_signed_graph(n, p.p, seed, iid, 1, neg_prob=p.neg_prob)
    inputs = {"k": k, "u": 0}
    path_free = find_induced(g, path_pattern(k + 2)) is None
    try:
        result = color_or_path_k3free(g, k, 0)
    except SignedGraphError as e:
        return InstanceResult(instance_id=iid, rows=[_error_row(iid, g, "colors", e, inputs)])
    if result.is_path:
        path = result.path
        ok = not path_free and len(path) == k + 2 and path[0] == 0 and is_induced_path(g, path)
        row = _row(iid, g, "path_edges", len(path) - 1, k + 1, ok, inputs)
    else:
        colors = result.coloring.num_colors
        ok = colors <= 2 ** k - 1 and validate_coloring(g, result.coloring)
        row = _row(iid, g, "colors", colors, f"<= {2 ** k - 1}", ok, inputs)
    return InstanceResult(instance_id=iid, rows=[row])


class ForestParams(ExperimentParams):
    count: int = Field(100, ge=1)
    max_n: int = Field(14, ge=1)
    p: float = Field(0.35, ge=0.0, le=1.0)
    neg_prob: float = Field(0.5, ge=0.0, le=1.0)
    forests: List[List[int]] = Field(default_factory=lambda: [[2, 2], [3, 2], [3, 3], [4, 2], [3, 2, 2]])


@experiment(
    "cor21-bound",
    "linear-forest-free members coloured with < 2^k + (l−1)k colours",
    ForestParams,
    lambda p: p.count,
)
def cor21_bound(p: ForestParams, seed: int, iid: int) -> InstanceResult:
    rng = make_rng(seed, iid)
    n = int(rng.integers(1, p.max_n + 1))
    orders = p.forests[iid % len(p.forests)]
    k, l = max(orders), len(orders)
    bound = 2 ** k + (l - 1) * k
    g = random_k3free_signed_graph(n, p.p, seed, iid, 1, neg_prob=p.neg_prob)
    inputs = {"forest": orders}
    if find_induced(g, linear_forest_pattern(orders)) is not None:
        return InstanceResult(
            instance_id=iid, rows=[_row(iid, g, "member", False, None, True, inputs)]
        )
    try:
        coloring = color_linear_forest_k3free(g, orders)
    except SignedGraphError as e:
        return InstanceResult(instance_id=iid, rows=[_error_row(iid, g, "colors", e, inputs)])
    colors = coloring.num_colors
    ok = colors < bound and validate_coloring(g, coloring)
    return InstanceResult(instance_id=iid, rows=[_row(iid, g, "colors", colors, f"< {bound}", ok, inputs)])


class K4FreeParams(ExperimentParams):
    count: int = Field(50, ge=1)
    max_n: int = Field(12, ge=1)
    ks: List[int] = Field(default_factory=lambda: [3, 4, 5])
    p: float = Field(0.35, ge=0.0, le=1.0)
    neg_prob: float = Field(0.5, ge=0.0, le=1.0)


def _nbhd_budget(g: SignedGraph) -> int:
    best = 1
    for v in g.vertices():
        sub, _ = induced_subgraph(g, [v] + g.neighbors(v))
        best = max(best, chi_b_exact(sub)[0])
    return best


@experiment(
    "thm23-bound",
    "color_layered_nbhd gives ≤ b·2^(k−3) colours or an induced path on k vertices",
    K4FreeParams,
    lambda p: p.count,
)
def thm23_bound(p: K4FreeParams, seed: int, iid: int) -> InstanceResult:
    n = int(make_rng(seed, iid).integers(1, p.max_n + 1))
    k = p.ks[iid % len(p.ks)]
    g = random_k4free_signed_graph(n, p.p, seed, iid, 1, neg_prob=p.neg_prob)
    b = _nbhd_budget(g)
    inputs = {"k": k, "b": b, "start": 0}
    try:
        result = color_layered_nbhd(g, k, b)
    except SignedGraphError as e:
        return InstanceResult(instance_id=iid, rows=[_error_row(iid, g, "colors", e, inputs)])
    if result.is_path:
        path = result.path
        ok = len(path) == k and path[0] == 0 and is_induced_path(g, path)
        row = _row(iid, g, "path_vertices", len(path), k, ok, inputs)
    else:
        bound = b * 2 ** (k - 3)
        colors = result.coloring.num_colors
        ok = colors <= bound and validate_coloring(g, result.coloring)
        row = _row(iid, g, "colors", colors, f"<= {bound}", ok, inputs)
    return InstanceResult(instance_id=iid, rows=[row])


class P4ClassParams(ExperimentParams):
    count: int = Field(100, ge=1)
    min_n: int = Field(1, ge=1)
    max_n: int = Field(60, ge=1)
    exact_max_n: int = Field(14, ge=0)
    neg_prob: Optional[float] = Field(None, ge=0.0, le=1.0)


@experiment("thm30-six", "color_p4class emits ≤ 6 colours on sampled class members", P4ClassParams, lambda p: p.count)
def thm30_six(p: P4ClassParams, seed: int, iid: int) -> InstanceResult:
    n = int(make_rng(seed, iid).integers(p.min_n, p.max_n + 1))
    g = sample_p4class_member(n, seed, iid, 1, neg_prob=p.neg_prob)
    inputs = {"n": n}
    try:
        coloring = color_p4class(g)
    except SignedGraphError as e:
        return InstanceResult(instance_id=iid, rows=[_error_row(iid, g, "colors", e, inputs)])
    colors = coloring.num_colors
    ok = colors <= 6 and validate_coloring(g, coloring)
    rows = [_row(iid, g, "colors", colors, "<= 6", ok, inputs)]
    if n <= p.exact_max_n:
        chi_b, _ = chi_b_exact(g)
        rows.append(_row(iid, g, "chi_b", chi_b, "<= 6", chi_b <= 6, inputs))
    return InstanceResult(instance_id=iid, rows=rows)


class P4FreeParams(ExperimentParams):
    count: int = Field(50, ge=1)
    max_n: int = Field(20, ge=1)
    neg_prob: Optional[float] = Field(None, ge=0.0, le=1.0)


@experiment(
    "cor31-bound",
    "Forb{(K̂4,−), P4} members coloured with ≤ 2^7 colours via the layered neighbourhood colouring",
    P4FreeParams,
    lambda p: p.count,
)
def cor31_bound(p: P4FreeParams, seed: int, iid: int) -> InstanceResult:
    n = int(make_rng(seed, iid).integers(1, p.max_n + 1))
    g = sample_p4class_member(n, seed, iid, 1, neg_prob=p.neg_prob)
    inputs = {"k": 4, "b": 7}
    if not in_forb_class(g, k4hat_path_class(4)).member:
        return InstanceResult(instance_id=iid, rows=[_row(iid, g, "member", False, True, False, inputs)])
    colors: Dict[int, int] = {}
    try:
        for comp in components(g):
            sub, vmap = induced_subgraph(g, comp)
            result = color_layered_nbhd(sub, 4, 7, p4class_nbhd_solver)
            if result.is_path:
                raise InternalContradiction(f"P4-free 성분에서 경로가 나왔습니다: {result.path}")
            for j, v in enumerate(vmap):
                colors[v] = result.coloring.colors[j]
    except SignedGraphError as e:
        return InstanceResult(instance_id=iid, rows=[_error_row(iid, g, "colors", e, inputs)])
    coloring = BalancedColoring(colors=tuple(colors[v] for v in range(g.n)))
    used = coloring.num_colors
    ok = used <= 2 ** 7 and validate_coloring(g, coloring)
    return InstanceResult(instance_id=iid, rows=[_row(iid, g, "colors", used, "<= 128", ok, inputs)])


# ------------------------------------------------------------
# 색칠 하한 구성
# ------------------------------------------------------------

class LowerBoundParams(ExperimentParams):
    colors: int = Field(5, ge=3)
    copies: Optional[int] = Field(None, ge=1)
    max_iters: Optional[int] = Field(None, ge=0)
    max_n: Optional[int] = Field(None, ge=5)
    time_budget_s: Optional[float] = Field(None, gt=0)
    fallback_trials: int = Field(100, ge=0)


def _random_c5_coloring(rng: np.random.Generator, colors: int) -> List[int]:
    while True:
        seq = [int(rng.integers(colors))]
        for _ in range(4):
            seq.append(int(rng.choice([c for c in range(colors) if c != seq[-1]])))
        if seq[-1] != seq[0]:
            return seq


def _claim1_fallback(p: LowerBoundParams, seed: int, iid: int, copies: int) -> List[ReportRow]:
    """무작위 진색칠에 대해 XYZ 삼중의 사후 조건을 확인합니다"""
    c5 = cycle_graph(5, Sign.NEG)
    r = c5
    for _ in range(copies - 1):
        r = disjoint_union(r, c5)
    cycles = [tuple(range(5 * i, 5 * i + 5)) for i in range(copies)]
    rows = []
    for trial in range(p.fallback_trials):
        rng = make_rng(seed, iid, 100, trial)
        coloring: Dict[int, int] = {}
        for cyc in cycles:
            coloring.update(zip(cyc, _random_c5_coloring(rng, p.colors)))
        inputs = {"trial": trial, "coloring": [coloring[v] for v in range(r.n)]}
        try:
            xyz = claim1_xyz(r, cycles, coloring, p.colors)
        except SignedGraphError as e:
            rows.append(_error_row(iid, r, "claim1_common", e, inputs))
            continue
        covered = xyz.x | xyz.y | xyz.z
        ok = len(xyz.common_colors) >= 3 and covered == frozenset(r.vertices())
        rows.append(_row(iid, r, "claim1_common", len(xyz.common_colors), ">= 3", ok, inputs))
    return rows


@experiment(
    "prop33-lower",
    "lazy envelope construction reaches χ(negative) = colors + 1 inside the class",
    LowerBoundParams,
    lambda p: 1,
)
def prop33_lower(p: LowerBoundParams, seed: int, iid: int) -> InstanceResult:
    copies = p.copies if p.copies is not None else max(settings.LAZY_ENVELOPE_COPIES, 2 * p.colors - 3)
    budget = settings.PROP33_TIME_BUDGET_S if p.time_budget_s is None else p.time_budget_s
    deadline = time.monotonic() + budget
    envelope = get_default_envelope() if p.max_n is None else find_envelope(p.max_n)
    if envelope is None:
        result = InstanceResult(
            instance_id=iid,
            verdict=Verdict.NOT_REPRODUCED,
            notes=[f"envelope 없음 (max_n={p.max_n})"],
        )
        result.rows.extend(_claim1_fallback(p, seed, iid, copies))
        return result
    rows = [_row(iid, envelope.graph, "envelope_n", envelope.graph.n, None, True, {})]
    try:
        built = build_lr_lazy(envelope, p.max_iters, copies, p.colors, deadline=deadline)
        refuted = find_k_coloring(negative_subgraph(built.graph), p.colors, deadline=deadline) is None
    except (SearchTimeout, IterationCapExceeded) as e:
        logger.warning(f"⚠️ lazy 구성 중단: {e}")
        result = InstanceResult(
            instance_id=iid,
            rows=rows,
            verdict=Verdict.NOT_REPRODUCED,
            notes=[f"lazy 구성 중단: {type(e).__name__}"],
        )
        result.rows.extend(_claim1_fallback(p, seed, iid, copies))
        return result
    g = built.graph
    member = in_forb_class(g, p4_class()).member
    target = p.colors + 1
    extra_ok = built.six_coloring is not None and built.six_coloring.num_colors <= target
    chi = target if refuted and extra_ok else None
    rows += [
        _row(iid, g, "envelopes_attached", built.envelopes_attached, None, True, {}),
        _row(iid, g, "class_member", member, True, member, {}),
        _row(iid, g, "chi_neg", chi, target, chi == target, {"colors": p.colors, "copies": copies}),
    ]
    return InstanceResult(instance_id=iid, rows=rows)


# ------------------------------------------------------------
# 전수 탐색 실험
# ------------------------------------------------------------

class ProbeParams(ExperimentParams):
    max_n: int = Field(5, ge=1, le=7)
    path_k: int = Field(5, ge=2)


def _switching_representatives(graph: nx.Graph):
    """신장 숲 간선은 양수로 고정한 서명들 (switching 동치류마다 하나)"""
    edges = sorted(tuple(sorted(e)) for e in graph.edges())
    forest = set()
    for comp in nx.connected_components(graph):
        for u, v in nx.bfs_edges(graph, min(comp)):
            forest.add((min(u, v), max(u, v)))
    free = [e for e in edges if e not in forest]
    n = graph.number_of_nodes()
    for mask in range(2 ** len(free)):
        negative = {free[i] for i in range(len(free)) if mask >> i & 1}
        yield SignedGraph.trusted(n, [(u, v, Sign.NEG if (u, v) in negative else Sign.POS) for u, v in edges])


@lru_cache(maxsize=None)
def _atlas(max_n: int) -> Tuple[nx.Graph, ...]:
    return tuple(graph for graph in nx.graph_atlas_g() if 1 <= graph.number_of_nodes() <= max_n)


@experiment(
    "conjecture-probe",
    "largest χ_b among tiny members of Forb{(K̂4,−), P_k} (measurement only)",
    ProbeParams,
    lambda p: p.max_n,
)
def conjecture_probe(p: ProbeParams, seed: int, iid: int) -> InstanceResult:
    n = iid + 1
    spec = k4hat_path_class(p.path_k)
    members = 0
    best = 0
    best_graph: Optional[SignedGraph] = None
    for graph in _atlas(p.max_n):
        if graph.number_of_nodes() != n:
            continue
        for g in _switching_representatives(graph):
            if not in_forb_class(g, spec).member:
                continue
            members += 1
            chi_b, _ = chi_b_exact(g)
            if chi_b > best:
                best, best_graph = chi_b, g
    rows = [
        _row(iid, best_graph, "max_chi_b", best, None, True, {"n": n}),
        _row(iid, best_graph, "members", members, None, True, {"n": n}),
    ]
    return InstanceResult(instance_id=iid, rows=rows)


class EquivalenceParams(ExperimentParams):
    max_n: int = Field(6, ge=1)
    path_k: int = Field(4, ge=4)


@lru_cache(maxsize=None)
def _cographs(max_n: int) -> Tuple[nx.Graph, ...]:
    return tuple(enumerate_cographs(max_n))


def signature_orbits(graph: nx.Graph) -> List[int]:
    """
    기저 그래프 자기동형으로 같아지는 서명을 하나로 묶은 대표 마스크들
    (비트 i = 1 이면 정렬된 i 번째 간선이 음수)
    """
    edges = sorted(tuple(sorted(e)) for e in graph.edges())
    m = len(edges)
    if m == 0:
        return [0]
    index = {e: i for i, e in enumerate(edges)}
    masks = np.arange(2 ** m, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(m)) & 1).astype(np.float64)
    canon = masks.copy()
    for perm in GraphMatcher(graph, graph).isomorphisms_iter():
        target = np.array([index[tuple(sorted((perm[u], perm[v])))] for u, v in edges])
        image = (bits @ np.exp2(target)).astype(np.int64)
        np.minimum(canon, image, out=canon)
    return [int(x) for x in np.unique(canon)]


@experiment(
    "prop26-equivalence",
    "g ∈ Forb{(K3,−), (K4,M), P_k} ⇔ g* ∈ Forb{(K̂4,−), P_k} over all small cograph signatures",
    EquivalenceParams,
    lambda p: len(_cographs(p.max_n)),
)
def prop26_equivalence(p: EquivalenceParams, seed: int, iid: int) -> InstanceResult:
    graph = _cographs(p.max_n)[iid]
    n = graph.number_of_nodes()
    edges = sorted(tuple(sorted(e)) for e in graph.edges())
    three = forb_spec(["k3neg-exact", "k4m-exact", f"p{p.path_k}"])
    starred = k4hat_path_class(p.path_k)
    orbits = signature_orbits(graph)
    mismatches = 0
    witness_graph: Optional[SignedGraph] = None
    for mask in orbits:
        g = SignedGraph.trusted(
            n, [(u, v, Sign.NEG if mask >> i & 1 else Sign.POS) for i, (u, v) in enumerate(edges)]
        )
        left = in_forb_class(g, three).member
        right = in_forb_class(add_universal_positive(g), starred).member
        if left != right:
            mismatches += 1
            witness_graph = witness_graph or g
    shown = witness_graph if witness_graph is not None else with_sign(graph, Sign.POS)
    return InstanceResult(
        instance_id=iid,
        rows=[
            _row(iid, shown, "orbits", len(orbits), None, True),
            _row(iid, shown, "mismatches", mismatches, 0, mismatches == 0, {"k": p.path_k}),
        ],
    )


class SwitchingParams(ExperimentParams):
    exhaustive_n: int = Field(6, ge=0, le=7)
    count: int = Field(1000, ge=0)
    max_n: int = Field(12, ge=1)
    p: float = Field(0.4, ge=0.0, le=1.0)


BRUTE_FORCE_MAX_N = 10


def _cycle_incidence(g: SignedGraph, cycles) -> np.ndarray:
    """사이클 × 간선 0/1 행렬 (열 순서는 g.edges)"""
    position = {(u, v): i for i, (u, v, _) in enumerate(g.edges)}
    cycles = [list(c) for c in cycles]
    matrix = np.zeros((len(cycles), g.m), dtype=np.int64)
    for row, cycle in enumerate(cycles):
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            matrix[row, position[(min(a, b), max(a, b))]] = 1
    return matrix


def _negative_vector(g: SignedGraph) -> np.ndarray:
    return np.fromiter((s is Sign.NEG for _, _, s in g.edges), dtype=np.int64, count=g.m)


def _subsets(n: int):
    for mask in range(1 << n):
        yield frozenset(v for v in range(n) if mask >> v & 1)


def _add(broken: List[str], names: List[str]) -> None:
    broken.extend(name for name in names if name not in broken)


def switching_checks(g: SignedGraph, W, cycles: Optional[np.ndarray] = None) -> List[str]:
    """
    switching 대수 성질 중 깨진 것들의 이름

    Args:
        cycles: _cycle_incidence 행렬 (없으면 사이클 기저)
    """
    broken = []
    switched = switch(g, W)
    if switch(switched, W) != g:
        broken.append("involution")
    if cycles is None:
        cycles = _cycle_incidence(g, nx.cycle_basis(g.underlying()))
    if cycles.size and np.any(cycles @ _negative_vector(g) % 2 != cycles @ _negative_vector(switched) % 2):
        broken.append("cycle-sign")
    found = switching_equivalent(g, switched)
    if found is None or switch(g, found) != switched:
        broken.append("equivalence-witness")
    return broken


def balance_checks(g: SignedGraph, cut_exists: Optional[bool] = None) -> List[str]:
    """
    균형 증거의 건전성과 세 조건의 동치:
    is_balanced ⇔ (G, +) 와 switching 동치 ⇔ 음의 간선이 어떤 W 의 컷

    Args:
        cut_exists: 모든 W 를 훑어 얻은 컷 존재 여부 (없으면 증거의 W 만 확인)
    """
    broken = []
    cert = is_balanced(g)
    balanced = isinstance(cert, Balanced)
    if balanced:
        if any(s is Sign.NEG for _, _, s in switch(g, cert.switching).edges):
            broken.append("balance-certificate")
        if not negative_edges_form_cut(g, cert.switching):
            broken.append("negative-cut")
    elif sign_of_closed_walk(g, cert.cycle) is not Sign.NEG:
        broken.append("balance-certificate")
    positive = SignedGraph.trusted(g.n, [(u, v, Sign.POS) for u, v, _ in g.edges])
    if (switching_equivalent(g, positive) is not None) != balanced:
        broken.append("balanced-iff-positive")
    if cut_exists is not None and cut_exists != balanced:
        broken.append("balanced-iff-cut")
    return broken


def exhaustive_switching_checks(g: SignedGraph, other: SignedGraph, cycles: Optional[np.ndarray] = None) -> List[str]:
    """
    모든 W ⊆ V 에 대해 switching_checks 를 돌리고, 궤도 전체와 비교해
    switching_equivalent(g, other) 의 None 여부를 확인합니다.
    """
    if cycles is None:
        cycles = _cycle_incidence(g, nx.simple_cycles(g.underlying()))
    broken: List[str] = []
    orbit = set()
    cut_exists = False
    for W in _subsets(g.n):
        _add(broken, switching_checks(g, W, cycles))
        orbit.add(switch(g, W))
        cut_exists = cut_exists or negative_edges_form_cut(g, W)
    _add(broken, balance_checks(g, cut_exists))
    if (switching_equivalent(g, other) is None) != (other not in orbit):
        broken.append("equivalence-none")
    return broken


def _switching_count(p: SwitchingParams) -> int:
    return len(_atlas(p.exhaustive_n)) + p.count if p.exhaustive_n >= 1 else p.count


@experiment(
    "switching-algebra",
    "involution, cycle-sign invariance, witness and certificate soundness",
    SwitchingParams,
    _switching_count,
)
def switching_algebra(p: SwitchingParams, seed: int, iid: int) -> InstanceResult:
    atlas = _atlas(p.exhaustive_n) if p.exhaustive_n >= 1 else ()
    failures: List[str] = []
    checked = 0
    shown: Optional[SignedGraph] = None
    if iid < len(atlas):
        graph = atlas[iid]
        representatives = list(_switching_representatives(graph))
        cycles = _cycle_incidence(representatives[0], nx.simple_cycles(graph))
        for index, g in enumerate(representatives):
            other = representatives[(index + 1) % len(representatives)]
            broken = exhaustive_switching_checks(g, other, cycles)
            checked += 1 << g.n
            if broken and shown is None:
                shown, failures = g, broken
        shown = shown or representatives[0]
    else:
        rng = make_rng(seed, iid)
        n = int(rng.integers(1, p.max_n + 1))
        shown = random_signed_graph(n, p.p, seed, iid, 1)
        underlying = shown.underlying()
        short_cycles = nx.simple_cycles(underlying, length_bound=5)
        cycles = _cycle_incidence(shown, list(nx.cycle_basis(underlying)) + list(short_cycles))
        if n <= BRUTE_FORCE_MAX_N and shown.m:
            flipped = int(rng.integers(shown.m))
            other = SignedGraph.trusted(n, [(u, v, -s if i == flipped else s) for i, (u, v, s) in enumerate(shown.edges)])
            failures = exhaustive_switching_checks(shown, other, cycles)
            checked = 1 << n
        else:
            W = frozenset(int(v) for v in np.flatnonzero(rng.random(n) < 0.5))
            failures = switching_checks(shown, W, cycles) + balance_checks(shown)
            checked = 1
    ok = not failures
    return InstanceResult(
        instance_id=iid,
        rows=[_row(iid, shown, "violations", len(failures), 0, ok, {"checked": checked, "broken": failures})],
    )
