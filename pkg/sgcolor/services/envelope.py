"""
Envelope Service
envelope 탐색과 검증, XYZ 삼중 추출, 색칠 하한 그래프의 lazy 구성
"""
import logging
import time
from itertools import combinations, permutations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..config import settings
from ..exceptions import (
    ClassViolation,
    InternalContradiction,
    IterationCapExceeded,
    PreconditionViolated,
)
from ..models.coloring import ProperColoring
from ..models.construction import EnvelopeCandidate, LazyBuildResult, LazyIteration, XYZTriple
from ..models.graph import Sign, SignedEdge, SignedGraph
from .detect import in_forb_class
from .generators import enumerate_cographs, make_rng
from .patterns import p4_class
from .solver import chi_exact, find_k_coloring, is_proper
from .switching import negative_subgraph

logger = logging.getLogger(__name__)

# 조인 규칙에서 cycle[i] 가 연결되는 대상 집합 (0 = X, 1 = Y, 2 = Z)
ROLES = (0, 1, 2, 1, 2)


# ------------------------------------------------------------
# 검증
# ------------------------------------------------------------

def _cycle_edges(cycle: Sequence[int]) -> set:
    return {frozenset((cycle[i], cycle[(i + 1) % 5])) for i in range(5)}


def _join_safe(g: SignedGraph, cycle: Sequence[int]) -> bool:
    """지정 정점 사이의 양의 간선은 같은 역할 (v1, v3 또는 v2, v4) 끼리만"""
    for i, j in combinations(range(5), 2):
        if g.sign(cycle[i], cycle[j]) is Sign.POS and ROLES[i] != ROLES[j]:
            return False
    return True


def envelope_violations(g: SignedGraph, cycle: Sequence[int]) -> List[str]:
    """
    envelope 조건 검사, 깨진 조건의 이름 목록 (비어 있으면 유효)
    - class: Forb{(K3,−), (K4,M), P4} 원소
    - negative-c5: 음의 간선이 정확히 cycle 순서의 5-사이클
    - two-positive: 양의 간선이 정확히 두 개인 삼각형이 없음
    - chi3: 음의 부분그래프의 색칠 수가 3
    - join-safe: 지정 정점 사이 양의 간선은 같은 역할끼리
    """
    broken: List[str] = []
    if len(cycle) != 5 or len(set(cycle)) != 5 or any(not 0 <= v < g.n for v in cycle):
        return ["negative-c5"]
    if not in_forb_class(g, p4_class()).member:
        broken.append("class")
    negatives = {frozenset(e) for e in g.negative_edges()}
    if negatives != _cycle_edges(cycle):
        broken.append("negative-c5")
    for a, b, c in combinations(g.vertices(), 3):
        signs = [g.sign(a, b), g.sign(a, c), g.sign(b, c)]
        if None not in signs and signs.count(Sign.POS) == 2:
            broken.append("two-positive")
            break
    chi, _ = chi_exact(negative_subgraph(g))
    if chi != 3:
        broken.append("chi3")
    if not _join_safe(g, cycle):
        broken.append("join-safe")
    return broken


def verify_envelope(candidate: EnvelopeCandidate) -> bool:
    return not envelope_violations(candidate.graph, candidate.cycle)


# ------------------------------------------------------------
# 탐색
# ------------------------------------------------------------

def _cyclic_orders(vertices: Sequence[int]):
    """첫 정점을 고정하고 방향을 하나로 정한 5-사이클 순서들"""
    first, rest = vertices[0], vertices[1:]
    for perm in permutations(rest):
        if perm[0] < perm[-1]:
            yield (first,) + perm


def _dihedral(cycle: Sequence[int]):
    for shift in range(5):
        rotated = tuple(cycle[(i + shift) % 5] for i in range(5))
        yield rotated
        yield (rotated[0],) + tuple(reversed(rotated[1:]))


def find_envelope(max_n: Optional[int] = None, seed: Optional[int] = None) -> Optional[EnvelopeCandidate]:
    """
    정점 수 max_n 이하에서 가장 작은 envelope 를 전수 탐색합니다.
    기저 cograph 는 동형 제외로 열거하고, 각 5-사이클을 음수로 둔 서명을 검사합니다.

    Args:
        max_n: 정점 수 상한 (기본값 settings.ENVELOPE_MAX_N)
        seed: 주어지면 같은 정점 수 안에서 cograph 순서를 섞습니다

    Returns:
        Optional[EnvelopeCandidate]: 없으면 None
    """
    max_n = settings.ENVELOPE_MAX_N if max_n is None else max_n
    if max_n < 5:
        return None
    logger.info(f"🔍 envelope 탐색 시작 (max_n={max_n})")
    by_size: Dict[int, List[nx.Graph]] = {}
    for graph in enumerate_cographs(max_n):
        by_size.setdefault(graph.number_of_nodes(), []).append(graph)
    for n in range(5, max_n + 1):
        graphs = by_size.get(n, [])
        if seed is not None:
            order = make_rng(seed, n).permutation(len(graphs))
            graphs = [graphs[i] for i in order]
        for graph in graphs:
            found = _envelope_on(graph)
            if found is not None:
                logger.info(f"✅ envelope 발견: n={n}, m={found.graph.m}, cycle={found.cycle}")
                return found
        logger.debug(f"🔍 n={n}: cograph {len(graphs)}개에 envelope 없음")
    logger.info(f"⚠️ max_n={max_n} 안에 envelope 없음")
    return None


def _envelope_on(graph: nx.Graph) -> Optional[EnvelopeCandidate]:
    n = graph.number_of_nodes()
    edges = sorted(tuple(sorted(e)) for e in graph.edges())
    for subset in combinations(range(n), 5):
        for cycle in _cyclic_orders(subset):
            ring = _cycle_edges(cycle)
            if not all(graph.has_edge(*tuple(e)) for e in ring):
                continue
            g = SignedGraph.trusted(
                n, [(u, v, Sign.NEG if frozenset((u, v)) in ring else Sign.POS) for u, v in edges]
            )
            for labelled in _dihedral(cycle):
                if not envelope_violations(g, labelled):
                    return EnvelopeCandidate(graph=g, cycle=labelled)
    return None


_default_envelope: Optional[EnvelopeCandidate] = None


def get_default_envelope() -> EnvelopeCandidate:
    """
    기본 envelope 싱글톤 (find_envelope 결과 캐시)

    Raises:
        PreconditionViolated: 설정된 예산 안에 envelope 가 없는 경우
    """
    global _default_envelope
    if _default_envelope is None:
        found = find_envelope()
        if found is None:
            raise PreconditionViolated(f"ENVELOPE_MAX_N={settings.ENVELOPE_MAX_N} 안에 envelope 가 없습니다")
        _default_envelope = found
    return _default_envelope


# ------------------------------------------------------------
# XYZ 삼중
# ------------------------------------------------------------

def _three_edge_coloring(edges: List[Tuple[int, int]]) -> Optional[List[int]]:
    """최대 차수 3 이분 그래프의 3-간선 색칠 (전수 탐색)"""
    colors = [-1] * len(edges)

    def ok(i: int, c: int) -> bool:
        a, b = edges[i]
        return all(
            colors[j] != c for j in range(i) if edges[j][0] == a or edges[j][1] == b
        )

    def rec(i: int) -> bool:
        if i == len(edges):
            return True
        for c in range(3):
            if ok(i, c):
                colors[i] = c
                if rec(i + 1):
                    return True
        colors[i] = -1
        return False

    return colors if rec(0) else None


def claim1_xyz(
    r: SignedGraph,
    cycles: Sequence[Sequence[int]],
    coloring: Mapping[int, int],
    c: int,
) -> XYZTriple:
    """
    서로소 음의 C5 들의 색칠에서 X, Y, Z 를 뽑습니다.

    세 색 a, b, c' 가 각각 C5 세 개 이상에 나타나고, 색-C5 접속 이분 그래프의
    3-간선 색칠이 각 C5 에서 어느 정점을 X, Y, Z 에 넣을지 정합니다.
    남은 정점은 음의 이웃이 없는 첫 집합에 들어갑니다.

    Args:
        r: C5 들을 포함하는 부호 그래프 R
        cycles: R 안의 음의 5-사이클들 (서로소)
        coloring: R 의 정점 → 색
        c: 색 수 상한

    Raises:
        PreconditionViolated: C5 수 < 2c − 3, 진색칠이 아님, 색이 c 개 초과, 사이클이 음의 C5 가 아님
    """
    k = len(cycles)
    if k < 2 * c - 3:
        raise PreconditionViolated(f"C5 {k}개 < 2c − 3 = {2 * c - 3}")
    neg = negative_subgraph(r)
    if set(coloring) != set(r.vertices()):
        raise PreconditionViolated("색칠이 R 의 정점을 덮지 않습니다")
    if not is_proper(neg, dict(coloring)):
        raise PreconditionViolated("음의 부분그래프의 진색칠이 아닙니다")
    if len(set(coloring.values())) > c:
        raise PreconditionViolated(f"색이 {c}개를 넘습니다")
    seen: set = set()
    for cyc in cycles:
        if len(cyc) != 5 or seen & set(cyc) or any(r.sign(cyc[i], cyc[(i + 1) % 5]) is not Sign.NEG for i in range(5)):
            raise PreconditionViolated(f"서로소 음의 C5 가 아닙니다: {tuple(cyc)}")
        seen |= set(cyc)

    appears: Dict[int, List[int]] = {}
    for idx, cyc in enumerate(cycles):
        for color in sorted({coloring[v] for v in cyc}):
            appears.setdefault(color, []).append(idx)
    popular = sorted((col for col in appears if len(appears[col]) >= 3), key=lambda col: (-len(appears[col]), col))
    if len(popular) < 3:
        raise PreconditionViolated("세 개 이상의 C5 에 나타나는 색이 세 개 미만입니다")
    chosen = popular[:3]
    incidence = [(a, cyc) for a in chosen for cyc in appears[a][:3]]
    edge_colors = _three_edge_coloring(incidence)
    if edge_colors is None:
        raise InternalContradiction("접속 그래프의 3-간선 색칠이 없습니다")

    sets: List[set] = [set(), set(), set()]
    for (color, idx), side in zip(incidence, edge_colors):
        v = next(v for v in cycles[idx] if coloring[v] == color)
        sets[side].add(v)
    placed = set().union(*sets)
    for v in r.vertices():
        if v in placed:
            continue
        for side in range(3):
            if not any(neg.has_edge(v, w) for w in sets[side]):
                sets[side].add(v)
                break
        else:
            raise InternalContradiction(f"정점 {v} 를 받을 집합이 없습니다")

    for members in sets:
        if any(neg.has_edge(a, b) for a, b in combinations(sorted(members), 2)):
            raise InternalContradiction("X, Y, Z 중 독립이 아닌 집합이 있습니다")
    common = frozenset.intersection(*(frozenset(coloring[v] for v in s) for s in sets))
    if len(common) < 3:
        raise InternalContradiction(f"공통 색 {sorted(common)} 이 세 개 미만입니다")
    return XYZTriple(x=frozenset(sets[0]), y=frozenset(sets[1]), z=frozenset(sets[2]), common_colors=common)


# ------------------------------------------------------------
# lazy 구성
# ------------------------------------------------------------

class _LazyBuilder:
    """R (envelope 복사본) ⋈ (붙인 envelope 들의 서로소 합) 을 한 envelope 씩 키웁니다"""

    def __init__(self, envelope: EnvelopeCandidate, copies: int):
        self.envelope = envelope
        self.size = envelope.graph.n
        self.edges: List[SignedEdge] = []
        self.cycles: List[Tuple[int, ...]] = []
        for i in range(copies):
            offset = i * self.size
            self.edges.extend((u + offset, v + offset, s) for u, v, s in envelope.graph.edges)
            self.cycles.append(tuple(v + offset for v in envelope.cycle))
        self.r_size = copies * self.size
        self.n = self.r_size
        self.r = SignedGraph.trusted(self.r_size, list(self.edges))
        self.attached = 0

    @property
    def graph(self) -> SignedGraph:
        return SignedGraph.trusted(self.n, self.edges)

    def attach(self, xyz: XYZTriple) -> None:
        targets = (xyz.x, xyz.y, xyz.z)
        role_of = {v: ROLES[i] for i, v in enumerate(self.envelope.cycle)}
        offset = self.n
        self.edges.extend((u + offset, v + offset, s) for u, v, s in self.envelope.graph.edges)
        for w in range(self.size):
            role = role_of.get(w)
            for x in range(self.r_size):
                negative = role is not None and x in targets[role]
                self.edges.append((x, w + offset, Sign.NEG if negative else Sign.POS))
        self.n += self.size
        self.attached += 1

    def check_join(self, xyz: XYZTriple) -> None:
        """새 envelope 가 클래스를 깨지 않을 조건: X, Y, Z 가 서로소 독립이고 envelope 가 조인 안전"""
        sets = (xyz.x, xyz.y, xyz.z)
        if any(a & b for a, b in combinations(sets, 2)):
            raise ClassViolation("X, Y, Z 가 서로소가 아닙니다")
        for members in sets:
            for a, b in combinations(sorted(members), 2):
                if self.r.sign(a, b) is Sign.NEG:
                    raise ClassViolation(f"N⁻_R 교집합 조건 위반: 음의 간선 ({a}, {b})")
        if not _join_safe(self.envelope.graph, self.envelope.cycle):
            raise ClassViolation("envelope 의 지정 정점 사이에 다른 역할의 양의 간선이 있습니다")

    def extra_coloring(self, colors: int, deadline: Optional[float]) -> Optional[ProperColoring]:
        """R 은 {0,1,2}, 붙인 envelope 는 {3,4,5} (colors ≥ 5), 그 밖에는 (colors+1)-색칠 탐색"""
        neg = negative_subgraph(self.graph)
        if colors >= 5:
            base = _three_color_envelope(self.envelope)
            assignment = {}
            for block in range(self.n // self.size):
                shift = 0 if block * self.size < self.r_size else 3
                for w, c in base.items():
                    assignment[block * self.size + w] = c + shift
            if is_proper(neg, assignment):
                return ProperColoring(colors=assignment)
        return find_k_coloring(neg, colors + 1, deadline=deadline)


def _three_color_envelope(envelope: EnvelopeCandidate) -> Dict[int, int]:
    colors = {v: 0 for v in envelope.graph.vertices()}
    for i, v in enumerate(envelope.cycle):
        colors[v] = (0, 1, 0, 1, 2)[i]
    return colors


def build_lr_lazy(
    envelope: Optional[EnvelopeCandidate] = None,
    max_iters: Optional[int] = None,
    copies: Optional[int] = None,
    colors: int = 5,
    deadline: Optional[float] = None,
) -> LazyBuildResult:
    """
    색칠 수 colors + 1 인 클래스 원소를 lazy 하게 만듭니다.

    R 은 envelope 복사본 copies 개의 서로소 합입니다. 현재 그래프의 음의 부분그래프가
    colors-색칠 가능하면 그 색칠을 R 로 제한해 X, Y, Z 를 뽑고, 새 envelope 를
    R 에 조인합니다 (v0–X, v1·v3–Y, v2·v4–Z 는 음수, 나머지는 양수).
    colors-색칠이 없어지면 종료합니다.

    Args:
        envelope: 기본값 get_default_envelope()
        max_iters: 반복 상한 (기본값 settings.LAZY_MAX_ITERS)
        copies: R 의 복사본 수 (기본값 settings.LAZY_ENVELOPE_COPIES)
        colors: 반박할 색 수
        deadline: time.monotonic() 기준 마감, 넘으면 SearchTimeout

    Raises:
        IterationCapExceeded: 상한 안에 끝나지 않은 경우 (partial 에 진행 중 결과)
        ClassViolation: 조인 조건 또는 최종 클래스 검사 실패
    """
    envelope = envelope or get_default_envelope()
    max_iters = settings.LAZY_MAX_ITERS if max_iters is None else max_iters
    copies = settings.LAZY_ENVELOPE_COPIES if copies is None else copies
    if not verify_envelope(envelope):
        raise PreconditionViolated(f"유효한 envelope 가 아닙니다: {envelope_violations(envelope.graph, envelope.cycle)}")
    if copies < 2 * colors - 3:
        raise PreconditionViolated(f"복사본 {copies}개 < 2·{colors} − 3")

    builder = _LazyBuilder(envelope, copies)
    trace: List[LazyIteration] = []
    logger.info(f"🚀 lazy 구성 시작: |R|={builder.r_size}, colors={colors}, cap={max_iters}")
    started = time.monotonic()

    for iteration in range(max_iters + 1):
        current = builder.graph
        found = find_k_coloring(negative_subgraph(current), colors, deadline=deadline)
        if found is None:
            trace.append(LazyIteration(iteration=iteration, n=current.n, m=current.m))
            break
        if iteration == max_iters:
            partial = LazyBuildResult(
                graph=current, r_size=builder.r_size, envelopes_attached=builder.attached, trace=trace
            )
            raise IterationCapExceeded(max_iters, partial=partial)
        restriction = {v: found.colors[v] for v in range(builder.r_size)}
        xyz = claim1_xyz(builder.r, builder.cycles, restriction, colors)
        builder.check_join(xyz)
        builder.attach(xyz)
        trace.append(
            LazyIteration(
                iteration=iteration,
                n=current.n,
                m=current.m,
                restriction=tuple(restriction[v] for v in range(builder.r_size)),
                common_colors=sorted(xyz.common_colors),
            )
        )
        if iteration % 50 == 0:
            logger.debug(f"🔍 반복 {iteration}: n={builder.n}, 공통 색={sorted(xyz.common_colors)}")

    final = builder.graph
    if not in_forb_class(final, p4_class()).member:
        raise ClassViolation("최종 그래프가 Forb{(K3,−), (K4,M), P4} 밖입니다")
    extra = builder.extra_coloring(colors, deadline)
    if extra is None or not is_proper(negative_subgraph(final), extra.colors):
        raise InternalContradiction(f"{colors + 1}-색칠을 찾지 못했습니다")
    logger.info(
        f"✅ lazy 구성 완료: envelope {builder.attached}개, n={final.n}, "
        f"{time.monotonic() - started:.1f}s"
    )
    return LazyBuildResult(
        graph=final,
        r_size=builder.r_size,
        envelopes_attached=builder.attached,
        trace=trace,
        six_coloring=extra,
    )
