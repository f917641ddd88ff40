"""
신장 트리와 트리 구조 가우시안 (트리 사영, KL 분해)
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .gaussian import GaussianDistribution
from .information import gaussian_kl, gaussian_mi, total_correlation

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """
    정점 [0, n) 위의 무방향 신장 트리

    간선은 (작은 정점, 큰 정점) 쌍으로 저장되고 사전식으로 정렬된다.
    따라서 같은 간선 집합이면 항상 같은 객체(==)가 된다.

    Attributes
    ----------
    n : int
        정점 수
    edges : Tuple[Edge, ...]
        n-1개의 정규화된 간선
    """
    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a tree needs at least one vertex, got n={self.n}")
        canonical = tuple(sorted(
            (min(int(u), int(v)), max(int(u), int(v))) for u, v in self.edges
        ))
        object.__setattr__(self, 'edges', canonical)

        if len(canonical) != self.n - 1:
            raise ValueError(f"a spanning tree on {self.n} vertices has {self.n - 1} edges, got {len(canonical)}")
        if len(set(canonical)) != len(canonical):
            raise ValueError(f"duplicate edges in {canonical}")
        for u, v in canonical:
            if u == v or u < 0 or v >= self.n:
                raise ValueError(f"invalid edge ({u}, {v}) for n={self.n}")
        # n-1개 간선으로 연결되어 있으면 비순환이다
        if len(self._reachable(0)) != self.n:
            raise ValueError(f"edges {canonical} do not connect all {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> 'Tree':
        return cls(n, tuple((int(e[0]), int(e[1])) for e in edges))

    @classmethod
    def star(cls, n: int, center: int = 0) -> 'Tree':
        return cls(n, tuple((center, v) for v in range(n) if v != center))

    def adjacency(self) -> List[List[int]]:
        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return neighbors

    def _reachable(self, root: int) -> List[int]:
        neighbors = self.adjacency()
        seen = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in neighbors[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return sorted(seen)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def path(self, source: int, target: int) -> List[int]:
        """source에서 target까지의 유일한 경로 (양 끝 포함)"""
        neighbors = self.adjacency()
        parent = {source: source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if u == target:
                break
            for v in neighbors[u]:
                if v not in parent:
                    parent[v] = u
                    queue.append(v)
        route = [target]
        while route[-1] != source:
            route.append(parent[route[-1]])
        return route[::-1]

    def weight(self, weights: np.ndarray) -> float:
        """(n, n) 가중치 행렬에서 트리 간선 가중치의 합"""
        return float(sum(weights[u, v] for u, v in self.edges))

    def to_json(self) -> List[List[int]]:
        return [[u, v] for u, v in self.edges]


@dataclass(frozen=True, eq=False)
class TreeGaussian:
    """
    트리 T에 대해 마르코프인 가우시안 P_T

    Attributes
    ----------
    tree : Tree
        의존 구조
    base : GaussianDistribution
        사영된 분포
    """
    tree: Tree
    base: GaussianDistribution

    def path_product_error(self) -> float:
        """
        비인접 쌍의 상관계수와 경로 위 간선 상관계수 곱의 최대 차이

        트리 마르코프 성질이 성립하면 0 (수치 오차 범위)이다.
        """
        corr = self.base.correlation()
        worst = 0.0
        for i in range(self.tree.n):
            for k in range(i + 1, self.tree.n):
                if self.tree.has_edge(i, k):
                    continue
                route = self.tree.path(i, k)
                product = np.prod([corr[u, v] for u, v in zip(route[:-1], route[1:])])
                worst = max(worst, abs(corr[i, k] - product))
        return float(worst)


def tree_projection(dist: GaussianDistribution, tree: Tree) -> TreeGaussian:
    """
    트리 T 위의 최적 트리 분포 P_T

    모든 단일 변수 분산과 트리 간선의 상관계수를 보존하고, 비간선 쌍의
    상관계수는 트리 경로 위 간선 상관계수의 곱으로 둔다.

    Parameters
    ----------
    dist : GaussianDistribution
        원 분포
    tree : Tree
        dist의 모든 변수를 잇는 신장 트리

    Returns
    -------
    TreeGaussian

    Raises
    ------
    NotPositiveDefiniteError
        경로 곱 구성이 퇴화했을 때 (양정치 입력에서는 내부 오류)
    """
    if tree.n != dist.dim:
        raise ValueError(f"tree has {tree.n} vertices but distribution has dimension {dist.dim}")
    corr = dist.correlation()
    neighbors = tree.adjacency()
    projected = np.eye(dist.dim)

    # 각 정점에서 BFS로 경로 곱을 누적
    for root in range(dist.dim):
        queue = deque([root])
        seen = {root}
        while queue:
            u = queue.popleft()
            for v in neighbors[u]:
                if v in seen:
                    continue
                seen.add(v)
                projected[root, v] = projected[root, u] * corr[u, v]
                queue.append(v)

    sd = np.sqrt(np.diag(dist.cov))
    cov = projected * np.outer(sd, sd)
    base = GaussianDistribution(dist.mean, (cov + cov.T) / 2.0,
                                name=f'{dist.name}|tree', names=dist.names)
    return TreeGaussian(tree=tree, base=base)


def kl_via_decomposition(dist: GaussianDistribution, tree: Tree) -> float:
    """
    D_KL(P ‖ P_T) = J_P − Σ_{(u,v)∈T} I(X_u; X_v)

    tree_projection 후 gaussian_kl을 계산한 값과 같다.
    """
    if tree.n != dist.dim:
        raise ValueError(f"tree has {tree.n} vertices but distribution has dimension {dist.dim}")
    edge_weight = sum(gaussian_mi(dist, [u], [v]) for u, v in tree.edges)
    return total_correlation(dist) - edge_weight


def kl_to_projection(dist: GaussianDistribution, tree: Tree) -> float:
    """사영 분포를 직접 만들어 계산한 D_KL(P ‖ P_T)"""
    return gaussian_kl(dist, tree_projection(dist, tree).base)
