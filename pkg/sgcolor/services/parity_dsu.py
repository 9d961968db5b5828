"""
Parity Disjoint-Set
상대 부호(패리티)를 기록하는 union-find, trail 스택으로 되돌리기 지원
"""
from typing import List, Tuple


class ParityDSU:
    """
    각 원소는 대표 원소에 대한 패리티(0 = 같은 쪽, 1 = 반대쪽)를 가집니다.
    union(a, b, odd) 는 parity(a) xor parity(b) = odd 제약을 추가하고,
    기존 제약과 모순이면 아무것도 바꾸지 않고 False 를 돌려줍니다.

    모든 쓰기(경로 압축 포함)는 trail 에 기록되므로 checkpoint() 이후 상태를
    rollback(mark) 으로 정확히 되돌릴 수 있습니다.
    """

    def __init__(self, n: int):
        self._parent: List[int] = list(range(n))
        self._parity: List[int] = [0] * n
        self._size: List[int] = [1] * n
        self._trail: List[Tuple[int, int, int, int]] = []

    def __len__(self) -> int:
        return len(self._parent)

    def _write(self, x: int, parent: int, parity: int) -> None:
        self._trail.append((x, self._parent[x], self._parity[x], self._size[x]))
        self._parent[x] = parent
        self._parity[x] = parity

    def find(self, x: int) -> Tuple[int, int]:
        """(대표 원소, 대표 기준 패리티)"""
        path = []
        while self._parent[x] != x:
            path.append(x)
            x = self._parent[x]
        root = x
        # 압축: root 에 가까운 쪽부터 root 기준 패리티로 다시 연결
        acc = 0
        for y in reversed(path):
            acc ^= self._parity[y]
            if self._parent[y] != root:
                self._write(y, root, acc)
        return root, acc

    def peek(self, x: int) -> Tuple[int, int]:
        """압축 없이 조회 (상태를 바꾸지 않음)"""
        acc = 0
        while self._parent[x] != x:
            acc ^= self._parity[x]
            x = self._parent[x]
        return x, acc

    def union(self, a: int, b: int, odd: bool) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        want = 1 if odd else 0
        if ra == rb:
            return (pa ^ pb) == want
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
            pa, pb = pb, pa
        self._write(rb, ra, pa ^ pb ^ want)
        self._trail.append((ra, self._parent[ra], self._parity[ra], self._size[ra]))
        self._size[ra] += self._size[rb]
        return True

    def consistent(self, a: int, b: int, odd: bool) -> bool:
        """union 을 하지 않고 제약이 모순 없는지 확인"""
        ra, pa = self.peek(a)
        rb, pb = self.peek(b)
        if ra != rb:
            return True
        return (pa ^ pb) == (1 if odd else 0)

    def checkpoint(self) -> int:
        return len(self._trail)

    def rollback(self, mark: int) -> None:
        while len(self._trail) > mark:
            x, parent, parity, size = self._trail.pop()
            self._parent[x] = parent
            self._parity[x] = parity
            self._size[x] = size
