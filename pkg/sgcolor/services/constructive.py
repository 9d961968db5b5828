"""
Constructive Coloring Service
층별 BFS 색칠-또는-경로, 선형 숲 합 색칠, 조인 한쪽 3-색칠, P4-free 클래스 6-색칠
"""
import logging
from collections import deque
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..exceptions import (
    InternalContradiction,
    PartitionNotIndependent,
    PreconditionViolated,
    SolverContractBroken,
)
from ..models.coloring import BalancedColoring, ColorOrPath, ProperColoring
from ..models.graph import Sign, SignedGraph
from ..models.pattern import Pattern
from .detect import find_induced, has_neg_k4, has_neg_triangle, in_forb_class, is_cograph, is_induced_path
from .patterns import linear_forest_pattern, p4_class, path_pattern
from .solver import chi_b_exact, find_k_coloring, is_proper, validate_coloring
from .switching import induced_subgraph, negative_subgraph, normalize_star

logger = logging.getLogger(__name__)

GraphSolver = Callable[[SignedGraph], BalancedColoring]
NbhdSolver = Callable[[SignedGraph, int], Dict[int, int]]


# ------------------------------------------------------------
# 공통 도구
# ------------------------------------------------------------

def components(g: SignedGraph, vertices: Optional[Iterable[int]] = None) -> List[List[int]]:
    """기저 그래프(또는 vertices 로 유도된 부분)의 연결 성분, 최소 정점 순"""
    graph = g.underlying()
    if vertices is not None:
        graph = graph.subgraph(list(vertices))
    return sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])


def is_connected(g: SignedGraph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def _bfs(g: SignedGraph, u: int) -> Tuple[Dict[int, int], Dict[int, Optional[int]]]:
    dist = {u: 0}
    parent: Dict[int, Optional[int]] = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.neighbors(x):
            if w not in dist:
                dist[w] = dist[x] + 1
                parent[w] = x
                queue.append(w)
    return dist, parent


def _shortest_path(parent: Dict[int, Optional[int]], target: int) -> List[int]:
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return list(reversed(path))


def _attachment(g: SignedGraph, dist: Dict[int, int], block: Sequence[int], layer: int) -> int:
    """block 에 이웃을 가진 layer 층의 가장 작은 정점"""
    return min(w for h in block for w in g.adjacency[h] if dist.get(w) == layer)


def _check_solver_output(g: SignedGraph, colors: Dict[int, int], domain: Iterable[int], budget: int, who: str) -> Dict[int, int]:
    domain = sorted(domain)
    if sorted(colors) != domain:
        raise SolverContractBroken(f"{who}: 색칠이 정점 집합을 덮지 않습니다")
    remap: Dict[int, int] = {}
    for v in domain:
        remap.setdefault(colors[v], len(remap))
    if len(remap) > budget:
        raise SolverContractBroken(f"{who}: 색 {len(remap)}개가 한도 {budget}를 넘습니다")
    compact = {v: remap[colors[v]] for v in domain}
    classes: Dict[int, List[int]] = {}
    for v, c in compact.items():
        classes.setdefault(c, []).append(v)
    sub_coloring = BalancedColoring(colors=tuple(compact[v] for v in domain))
    sub, _ = induced_subgraph(g, domain)
    if not validate_coloring(sub, sub_coloring):
        raise SolverContractBroken(f"{who}: 균형이 아닌 색 클래스가 있습니다")
    return compact


def _to_coloring(g: SignedGraph, colors: Dict[int, int]) -> BalancedColoring:
    return BalancedColoring(colors=tuple(colors[v] for v in range(g.n))).compact()


def _finish(g: SignedGraph, u: int, colors: Optional[Dict[int, int]], path: Optional[List[int]], who: str) -> ColorOrPath:
    if path is not None:
        if path[0] != u or not is_induced_path(g, path):
            raise InternalContradiction(f"{who}: 유도 경로가 아닌 결과 {path}")
        logger.debug(f"🔍 {who}: 경로 {path}")
        return ColorOrPath.of_path(path)
    coloring = _to_coloring(g, colors)
    if not validate_coloring(g, coloring):
        raise SolverContractBroken(f"{who}: 결과 색칠이 균형이 아닙니다")
    return ColorOrPath.of_coloring(coloring)


# ------------------------------------------------------------
# (K̂3, −)-free: 색칠 또는 길이 k+1 유도 경로
# ------------------------------------------------------------

def _k3free_layers(g: SignedGraph, k: int, u: int) -> Tuple[Optional[Dict[int, int]], Optional[List[int]]]:
    dist, parent = _bfs(g, u)
    depth = max(dist.values())
    if k == 1:
        if depth >= 2:
            return None, _shortest_path(parent, min(v for v in dist if dist[v] == 2))
        # V = N[u] 는 균형
        return {v: 0 for v in g.vertices()}, None
    if depth >= k + 1:
        return None, _shortest_path(parent, min(v for v in dist if dist[v] == k + 1))

    colors = {v: 0 for v in dist if dist[v] <= 1}
    offset = 1
    for i in range(2, depth + 1):
        layer = sorted(v for v in dist if dist[v] == i)
        for block in components(g, layer):
            x = _attachment(g, dist, block, i - 1)
            near = [h for h in block if g.has_edge(h, x)]
            rest = [h for h in block if not g.has_edge(h, x)]
            for h in near:
                colors[h] = offset
            for part in components(g, rest):
                ui = min(h for h in near if any(g.has_edge(h, c) for c in part))
                if i == k:
                    c0 = min(c for c in part if g.has_edge(ui, c))
                    return None, _shortest_path(parent, x) + [ui, c0]
                sub, vmap = induced_subgraph(g, part + [ui])
                sub_colors, sub_path = _k3free_layers(sub, k - i, vmap.index(ui))
                if sub_path is not None:
                    return None, _shortest_path(parent, x) + [vmap[p] for p in sub_path]
                for j, v in enumerate(vmap):
                    if v != ui:
                        colors[v] = offset + 1 + sub_colors[j]
        offset += 2 ** (k - i)
    return colors, None


def color_or_path_k3free(g: SignedGraph, k: int, u: int) -> ColorOrPath:
    """
    연결된 (K̂3, −)-free 부호 그래프를 2^k − 1 색 이하로 균형 색칠하거나,
    u 에서 시작하는 길이 k+1 의 유도 경로를 찾습니다.

    층 i (≥ 2) 는 크기 2^(k−i) 의 전용 팔레트를 받습니다:
    부착 정점 u_(i−1) 의 이웃에 한 색, 나머지 성분은 재귀 (예산 k − i).

    Raises:
        PreconditionViolated: 음의 삼각형이 있거나 비연결이거나 k < 1
    """
    if k < 1:
        raise PreconditionViolated(f"k 는 1 이상이어야 합니다: {k}")
    if not 0 <= u < g.n:
        raise PreconditionViolated(f"시작 정점 {u} 가 범위 밖입니다")
    if not is_connected(g):
        raise PreconditionViolated("그래프가 연결되어 있지 않습니다")
    if has_neg_triangle(g) is not None:
        raise PreconditionViolated("음의 삼각형이 있습니다")
    colors, path = _k3free_layers(g, k, u)
    result = _finish(g, u, colors, path, "color_or_path_k3free")
    if not result.is_path and result.coloring.num_colors > 2 ** k - 1:
        raise SolverContractBroken(f"색 {result.coloring.num_colors}개 > 2^{k} − 1")
    return result


def k3free_path_solver(m: int) -> GraphSolver:
    """
    Forb{(K̂3, −), P_m} 원소를 성분별 color_or_path_k3free 로 색칠하는 solver
    (m ≥ 3 이면 색 수 < 2^(m−2))
    """

    def solve(g: SignedGraph) -> BalancedColoring:
        if g.n == 0:
            return BalancedColoring(colors=())
        if m <= 2:
            if m == 1 or g.m > 0:
                raise SolverContractBroken(f"P_{m}-free 가 아닌 입력")
            return BalancedColoring(colors=(0,) * g.n)
        colors: Dict[int, int] = {}
        for comp in components(g):
            sub, vmap = induced_subgraph(g, comp)
            result = color_or_path_k3free(sub, m - 2, 0)
            if result.is_path:
                raise SolverContractBroken(f"P_{m}-free 입력에서 유도 경로가 나왔습니다")
            for j, v in enumerate(vmap):
                colors[v] = result.coloring.colors[j]
        return _to_coloring(g, colors)

    return solve


# ------------------------------------------------------------
# F1 + F2
# ------------------------------------------------------------

def color_union_forest(
    g: SignedGraph,
    F1: Pattern,
    F2: Pattern,
    solver1: GraphSolver,
    solver2: GraphSolver,
) -> BalancedColoring:
    """
    Forb{(K̂3, −), F1 + F2} 원소의 균형 색칠 (색 수 ≤ max{s, |F1| + t})

    유도 F1 이 없으면 solver1 의 결과를 그대로 씁니다.
    있으면 복사본 F′ 의 각 정점 닫힌 이웃에 한 색씩, 나머지는 solver2 로 색칠합니다.

    Raises:
        PreconditionViolated: 음의 삼각형이 있거나 나머지에 F2 가 남아 있는 경우
        SolverContractBroken: 하위 solver 결과가 유효하지 않은 경우
    """
    if has_neg_triangle(g) is not None:
        raise PreconditionViolated("음의 삼각형이 있습니다")
    found = find_induced(g, F1)
    if found is None:
        coloring = solver1(g)
        if not validate_coloring(g, coloring):
            raise SolverContractBroken("solver1 결과가 균형 색칠이 아닙니다")
        return coloring

    colors: Dict[int, int] = {}
    for i, fv in enumerate(found.mapping):
        for w in [fv] + g.neighbors(fv):
            colors.setdefault(w, i)
    remainder = [v for v in g.vertices() if v not in colors]
    if remainder:
        sub, vmap = induced_subgraph(g, remainder)
        if find_induced(sub, F2) is not None:
            raise PreconditionViolated(f"{F1.name} + {F2.name} 가 유도 부분그래프로 존재합니다")
        sub_coloring = solver2(sub)
        if not validate_coloring(sub, sub_coloring):
            raise SolverContractBroken("solver2 결과가 균형 색칠이 아닙니다")
        base = len(found.mapping)
        for j, v in enumerate(vmap):
            colors[v] = base + sub_coloring.colors[j]
    coloring = _to_coloring(g, colors)
    if not validate_coloring(g, coloring):
        raise SolverContractBroken("합성 색칠이 균형이 아닙니다")
    return coloring


def color_linear_forest_k3free(g: SignedGraph, path_orders: Sequence[int]) -> BalancedColoring:
    """
    Forb{(K̂3, −), P_a1 + ... + P_al} 원소의 균형 색칠.
    첫 경로를 F1, 나머지를 F2 로 두고 재귀합니다 (경로 정점 수 ≤ k 이면 색 수 < 2^k + (l−1)k).
    """
    orders = list(path_orders)
    if not orders:
        raise PreconditionViolated("경로 목록이 비어 있습니다")
    if len(orders) == 1:
        return k3free_path_solver(orders[0])(g)
    rest = orders[1:]
    return color_union_forest(
        g,
        path_pattern(orders[0]),
        linear_forest_pattern(rest),
        k3free_path_solver(orders[0]),
        lambda sub: color_linear_forest_k3free(sub, rest),
    )


# ------------------------------------------------------------
# (K̂4, −)-free + 이웃 b-색칠: 색칠 또는 정점 k 개 유도 경로
# ------------------------------------------------------------

def exact_nbhd_solver(g: SignedGraph, center: int) -> Dict[int, int]:
    """N[center] 를 χ_b 개의 색으로 정확히 색칠"""
    closed = [center] + g.neighbors(center)
    sub, vmap = induced_subgraph(g, closed)
    _, coloring = chi_b_exact(sub)
    return {v: coloring.colors[j] for j, v in enumerate(vmap)}


def p4class_nbhd_solver(g: SignedGraph, center: int) -> Dict[int, int]:
    """
    중심의 별을 양수로 정규화한 뒤 열린 이웃을 color_p4class (≤ 6) 로 칠하고,
    중심에 새 색 하나를 줍니다 (≤ 7).
    """
    normalized, _ = normalize_star(g, center)
    open_nbhd = normalized.neighbors(center)
    colors = {center: 0}
    if open_nbhd:
        sub, vmap = induced_subgraph(normalized, open_nbhd)
        coloring = color_p4class(sub)
        for j, v in enumerate(vmap):
            colors[v] = 1 + coloring.colors[j]
    return colors


def _layered(g: SignedGraph, k: int, u: int, b: int, solver: NbhdSolver) -> Tuple[Optional[Dict[int, int]], Optional[List[int]]]:
    dist, parent = _bfs(g, u)
    depth = max(dist.values())
    if k == 3:
        if depth >= 2:
            return None, _shortest_path(parent, min(v for v in dist if dist[v] == 2))
        return _check_solver_output(g, solver(g, u), g.vertices(), b, "nbhd_solver"), None
    if depth >= k - 1:
        return None, _shortest_path(parent, min(v for v in dist if dist[v] == k - 1))

    closed_u = [v for v in dist if dist[v] <= 1]
    colors = dict(_check_solver_output(g, solver(g, u), closed_u, b, "nbhd_solver"))
    offset = b
    for i in range(2, depth + 1):
        recursive_budget = b * 2 ** (k - i - 3) if k - i >= 3 else 0
        layer = sorted(v for v in dist if dist[v] == i)
        for block in components(g, layer):
            x = _attachment(g, dist, block, i - 1)
            closed_x = [x] + g.neighbors(x)
            nb = _check_solver_output(g, solver(g, x), closed_x, b, "nbhd_solver")
            near = [h for h in block if g.has_edge(h, x)]
            rest = [h for h in block if not g.has_edge(h, x)]
            for h in near:
                colors[h] = offset + nb[h]
            for part in components(g, rest):
                ui = min(h for h in near if any(g.has_edge(h, c) for c in part))
                if k - i < 3:
                    c0 = min(c for c in part if g.has_edge(ui, c))
                    return None, _shortest_path(parent, x) + [ui, c0]
                sub, vmap = induced_subgraph(g, part + [ui])
                sub_colors, sub_path = _layered(sub, k - i, vmap.index(ui), b, solver)
                if sub_path is not None:
                    return None, _shortest_path(parent, x) + [vmap[p] for p in sub_path]
                for j, v in enumerate(vmap):
                    if v != ui:
                        colors[v] = offset + b + sub_colors[j]
        offset += b + recursive_budget
    return colors, None


def color_layered_nbhd(
    g: SignedGraph,
    k: int,
    b: int,
    nbhd_solver: Optional[NbhdSolver] = None,
    start: int = 0,
) -> ColorOrPath:
    """
    연결된 (K̂4, −)-free 부호 그래프를 b·2^(k−3) 색 이하로 균형 색칠하거나,
    start 에서 시작하는 정점 k 개 (길이 k−1) 의 유도 경로를 찾습니다.

    Args:
        g: 연결 부호 그래프
        k: 경로 정점 수 (≥ 3)
        b: 닫힌 이웃 색칠 예산
        nbhd_solver: (그래프, 중심) → N[중심] 의 색칠, 기본값 exact_nbhd_solver
        start: 시작 정점

    Raises:
        PreconditionViolated: 비연결, 음의 K4 존재, k < 3
        SolverContractBroken: nbhd_solver 가 b 색을 넘기거나 균형이 아닌 경우
    """
    if k < 3:
        raise PreconditionViolated(f"k 는 3 이상이어야 합니다: {k}")
    if not 0 <= start < g.n:
        raise PreconditionViolated(f"시작 정점 {start} 가 범위 밖입니다")
    if not is_connected(g):
        raise PreconditionViolated("그래프가 연결되어 있지 않습니다")
    if has_neg_k4(g) is not None:
        raise PreconditionViolated("음의 K4 가 있습니다")
    solver = nbhd_solver or exact_nbhd_solver
    colors, path = _layered(g, k, start, b, solver)
    result = _finish(g, start, colors, path, "color_layered_nbhd")
    if not result.is_path and result.coloring.num_colors > b * 2 ** (k - 3):
        raise SolverContractBroken(f"색 {result.coloring.num_colors}개 > {b}·2^{k - 3}")
    return result


# ------------------------------------------------------------
# 조인과 P4-free 클래스
# ------------------------------------------------------------

def _negative_inside(g: SignedGraph, vertices: Iterable[int]) -> List[Tuple[int, int]]:
    vs = set(vertices)
    return [(u, v) for u, v in g.negative_edges() if u in vs and v in vs]


def three_color_join_side(
    g: SignedGraph,
    side_a: Sequence[int],
    side_b: Sequence[int],
    uv: Tuple[int, int],
) -> Dict[int, int]:
    """
    g[side_a] ⋈ g[side_b] 에서 side_a 의 음의 간선 uv 로 side_b 를 세 집합
    N⁻(u), N⁻(v), N⁺(u) ∩ N⁺(v) 로 나눕니다 (색 0, 1, 2).

    Raises:
        PreconditionViolated: 조인이 아니거나, uv 가 음의 간선이 아니거나, 음의 삼각형이 생기는 경우
        PartitionNotIndependent: 어떤 집합이 음의 간선을 포함하는 경우
    """
    u, v = uv
    if u not in side_a or v not in side_a or g.sign(u, v) is not Sign.NEG:
        raise PreconditionViolated(f"{uv} 는 side_a 의 음의 간선이 아닙니다")
    colors: Dict[int, int] = {}
    for w in side_b:
        su, sv = g.sign(u, w), g.sign(v, w)
        if su is None or sv is None:
            raise PreconditionViolated(f"조인이 아닙니다: {w} 가 {u} 또는 {v} 와 인접하지 않습니다")
        if su is Sign.NEG and sv is Sign.NEG:
            raise PreconditionViolated(f"음의 삼각형 ({u}, {v}, {w})")
        colors[w] = 0 if su is Sign.NEG else 1 if sv is Sign.NEG else 2
    for a, b in _negative_inside(g, side_b):
        if colors[a] == colors[b]:
            raise PartitionNotIndependent(f"음의 간선 ({a}, {b}) 이 같은 집합 {colors[a]} 안에 있습니다")
    return colors


def color_join_negative(g: SignedGraph, side_a: Sequence[int], side_b: Sequence[int]) -> ProperColoring:
    """
    양쪽 모두 음의 간선을 가진 조인의 음의 부분그래프 6-색칠.
    side_b 는 side_a 의 음의 간선으로 0..2, side_a 는 side_b 의 음의 간선으로 3..5.
    """
    neg_a = _negative_inside(g, side_a)
    neg_b = _negative_inside(g, side_b)
    if not neg_a or not neg_b:
        raise PreconditionViolated("양쪽 모두 음의 간선이 있어야 합니다")
    colors = dict(three_color_join_side(g, side_a, side_b, neg_a[0]))
    for w, c in three_color_join_side(g, side_b, side_a, neg_b[0]).items():
        colors[w] = 3 + c
    covered = sorted(set(side_a) | set(side_b))
    sub, vmap = induced_subgraph(g, covered)
    local = {j: colors[v] for j, v in enumerate(vmap)}
    if not is_proper(negative_subgraph(sub), local):
        raise PartitionNotIndependent("조인 6-색칠이 진색칠이 아닙니다")
    return ProperColoring(colors=colors)


def _join_split(g: SignedGraph) -> Tuple[List[int], List[int]]:
    """연결 cograph 를 G[A] ⋈ G[B] 로 분할 (A = 첫 co-component)"""
    tree = is_cograph(g).cotree
    if tree is None or tree.kind != "join":
        raise InternalContradiction("연결 cograph 의 루트가 join 이 아닙니다")
    side_a = tree.children[0].leaves()
    side_b = sorted(v for child in tree.children[1:] for v in child.leaves())
    return side_a, side_b


def _k_color_negative(g: SignedGraph, vertices: Sequence[int], k: int) -> Optional[Dict[int, int]]:
    sub, vmap = induced_subgraph(g, vertices)
    found = find_k_coloring(negative_subgraph(sub), k)
    if found is None:
        return None
    return {vmap[j]: c for j, c in found.colors.items()}


def _modules_ok(g: SignedGraph, removed: Set[int]) -> bool:
    """G − removed 의 각 성분이 G 의 module 인지"""
    rest = [v for v in g.vertices() if v not in removed]
    for comp in components(g, rest):
        members = set(comp)
        for y in g.vertices():
            if y in members:
                continue
            hits = sum(1 for w in g.adjacency[y] if w in members)
            if hits not in (0, len(members)):
                return False
    return True


def _no_negative_inside(g: SignedGraph, vertices: Set[int]) -> bool:
    return all(not (u in vertices and v in vertices) for u, v in g.negative_edges())


def _grow_a_prime(g: SignedGraph, side_a: Sequence[int]) -> Set[int]:
    """
    A 를 포함하고 음의 간선이 없으며 G − A′ 의 성분이 모두 module 인 극대 A′.
    번호 오름차순으로 한 정점씩 추가한 뒤, 3-색칠 불가능한 한쪽을 가진 성분의
    반대쪽 전체를 추가하는 확장을 더 이상 바뀌지 않을 때까지 반복합니다.
    """
    a_prime = set(side_a)
    changed = True
    while changed:
        changed = False
        for v in g.vertices():
            if v in a_prime:
                continue
            if any(g.adjacency[v].get(w) is Sign.NEG for w in a_prime):
                continue
            if _modules_ok(g, a_prime | {v}):
                a_prime.add(v)
                changed = True
        if changed:
            continue
        rest = [v for v in g.vertices() if v not in a_prime]
        for comp in components(g, rest):
            if len(comp) < 2:
                continue
            sub, vmap = induced_subgraph(g, comp)
            h1, h2 = _join_split(sub)
            h1 = [vmap[j] for j in h1]
            h2 = [vmap[j] for j in h2]
            for hard, other in ((h1, h2), (h2, h1)):
                if _k_color_negative(g, hard, 3) is None:
                    grown = a_prime | set(other)
                    if not _no_negative_inside(g, grown) or not _modules_ok(g, grown):
                        raise InternalContradiction(f"A′ 확장이 조건을 깨뜨립니다: {sorted(other)}")
                    a_prime = grown
                    changed = True
                    break
            if changed:
                break
    return a_prime


def _six_color_component(g: SignedGraph, comp: Sequence[int]) -> Dict[int, int]:
    if len(comp) == 1:
        return {comp[0]: 0}
    sub, vmap = induced_subgraph(g, comp)
    h1, h2 = _join_split(sub)
    c1 = _k_color_negative(sub, h1, 3)
    c2 = _k_color_negative(sub, h2, 3)
    if c1 is not None and c2 is not None:
        colors = dict(c1)
        colors.update({v: 3 + c for v, c in c2.items()})
        return {vmap[j]: c for j, c in colors.items()}
    found = _k_color_negative(g, comp, 6)
    if found is None:
        raise InternalContradiction(f"6-색칠이 불가능한 성분: {comp}")
    return found


def _p4class_component(g: SignedGraph) -> Dict[int, int]:
    """연결 cograph 한 성분의 음의 부분그래프 진 6-색칠"""
    if g.n == 1:
        return {0: 0}
    side_a, side_b = _join_split(g)
    neg_a = _negative_inside(g, side_a)
    neg_b = _negative_inside(g, side_b)
    if neg_a and neg_b:
        return color_join_negative(g, side_a, side_b).colors
    if not neg_a and not neg_b:
        return {**{v: 0 for v in side_a}, **{v: 1 for v in side_b}}
    if neg_a:
        side_a, side_b = side_b, side_a
    # 이제 side_a 에는 음의 간선이 없음
    three = _k_color_negative(g, side_b, 3)
    if three is not None:
        return {**{v: 0 for v in side_a}, **{v: 1 + c for v, c in three.items()}}

    a_prime = _grow_a_prime(g, side_a)
    colors = {v: 5 for v in a_prime}
    rest = [v for v in g.vertices() if v not in a_prime]
    for comp in components(g, rest):
        members = set(comp)
        touches = any(
            g.adjacency[a].get(w) is Sign.NEG for a in a_prime for w in members
        )
        if touches:
            five = _k_color_negative(g, comp, 5)
            if five is None:
                raise InternalContradiction(f"A′ 와 음의 간선으로 이어진 6-색 성분: {comp}")
            colors.update(five)
        else:
            colors.update(_six_color_component(g, comp))
    return colors


def color_p4class(g: SignedGraph, check: bool = True) -> BalancedColoring:
    """
    Forb{(K3,−), (K4,M), P4} 원소의 음의 부분그래프를 6색 이하로 진색칠합니다 (따라서 균형 색칠).

    Args:
        g: 클래스 원소
        check: 클래스 소속을 먼저 확인할지 여부

    Raises:
        PreconditionViolated: 클래스 원소가 아닌 경우
        InternalContradiction: 증명상 배제되는 경우가 발생한 경우
    """
    if check and not in_forb_class(g, p4_class()).member:
        raise PreconditionViolated("Forb{(K3,−), (K4,M), P4} 원소가 아닙니다")
    colors: Dict[int, int] = {}
    for comp in components(g):
        sub, vmap = induced_subgraph(g, comp)
        for j, c in _p4class_component(sub).items():
            colors[vmap[j]] = c
    coloring = BalancedColoring(colors=tuple(colors.get(v, 0) for v in range(g.n)))
    if not is_proper(negative_subgraph(g), dict(enumerate(coloring.colors))):
        raise InternalContradiction("음의 부분그래프 진색칠이 아닙니다")
    if coloring.num_colors > 6:
        raise InternalContradiction(f"색 {coloring.num_colors}개 > 6")
    return coloring
