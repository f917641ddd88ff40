"""
가중 완전 그래프와 Kruskal 최대 신장 트리
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np
from scipy.spatial.distance import squareform

from ..models.tree import Tree


class UnionFind:
    """정수 [0, n) 위의 결정적 union-find. 랭크가 같으면 작은 루트가 부모가 된다."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb] or (self.rank[ra] == self.rank[rb] and rb < ra):
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass(frozen=True, eq=False)
class WeightedEdgeList:
    """
    n개 정점 완전 그래프의 간선 가중치

    weights는 scipy의 condensed 순서 (0,1), (0,2), …, (0,n−1), (1,2), … 를 따른다.

    Attributes
    ----------
    n : int
        정점 수
    weights : np.ndarray
        길이 n(n−1)/2, 유한하고 0 이상
    """
    n: int
    weights: np.ndarray

    def __post_init__(self):
        weights = np.array(self.weights, dtype=float).reshape(-1)
        if self.n < 1:
            raise ValueError(f"need at least one vertex, got n={self.n}")
        if weights.shape[0] != self.n * (self.n - 1) // 2:
            raise ValueError(f"{self.n} vertices need {self.n * (self.n - 1) // 2} weights, got {weights.shape[0]}")
        if not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise ValueError("edge weights must be finite and non-negative")
        weights.setflags(write=False)
        object.__setattr__(self, 'weights', weights)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> 'WeightedEdgeList':
        """대칭 (n, n) 행렬의 비대각 성분으로 생성 (대각은 무시)"""
        matrix = np.array(matrix, dtype=float)
        np.fill_diagonal(matrix, 0.0)
        return cls(matrix.shape[0], squareform(matrix, checks=False))

    def matrix(self) -> np.ndarray:
        if self.n == 1:
            return np.zeros((1, 1))
        return squareform(self.weights)

    def pairs(self) -> Iterator[Tuple[int, int, float]]:
        k = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j, float(self.weights[k])
                k += 1

    def weight(self, i: int, j: int) -> float:
        if i == j:
            raise ValueError("no self-loop weights")
        i, j = min(i, j), max(i, j)
        # condensed 인덱스
        return float(self.weights[self.n * i - i * (i + 1) // 2 + (j - i - 1)])

    def scaled(self, c: float) -> 'WeightedEdgeList':
        return WeightedEdgeList(self.n, c * self.weights)


def maximum_spanning_tree(w: WeightedEdgeList) -> Tree:
    """
    Kruskal 최대 신장 트리

    간선을 (가중치 내림차순, 정점 쌍 오름차순)으로 정렬하므로 동점은 사전식으로
    결정된다. 모든 가중치가 같으면 정점 0 중심의 별 트리가 된다.

    Parameters
    ----------
    w : WeightedEdgeList
        완전 그래프 가중치

    Returns
    -------
    Tree
    """
    edges = sorted(w.pairs(), key=lambda e: (-e[2], e[0], e[1]))
    forest = UnionFind(w.n)
    chosen: List[Tuple[int, int]] = []
    for i, j, _ in edges:
        if forest.union(i, j):
            chosen.append((i, j))
            if len(chosen) == w.n - 1:
                break
    return Tree(w.n, tuple(chosen))
