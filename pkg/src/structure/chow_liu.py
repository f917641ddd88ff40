"""
Chow-Liu 트리 학습과 근사 품질 평가
"""

import numpy as np

from ..estimators.empirical import RHO_SQ_CLAMP, center_by_differencing
from ..linalg.sampling import SampleBatch
from ..models.gaussian import GaussianDistribution
from ..models.information import gaussian_mi
from ..models.tree import Tree, kl_via_decomposition
from ..utils.errors import DegenerateSampleError, InsufficientSamplesError
from ..utils.log import get_logger
from .spanning_tree import WeightedEdgeList, maximum_spanning_tree

logger = get_logger(__name__)


def pairwise_empirical_mi(batch: SampleBatch) -> WeightedEdgeList:
    """
    모든 쌍 (i, j)의 empirical_mi 값을 가중치로 하는 완전 그래프

    한 번의 그람 행렬 X̄ᵀX̄ 로 모든 쌍의 원점 기준 내적을 얻는다.

    Raises
    ------
    DegenerateSampleError
        노름이 0인 열이 있을 때 (해당 열 인덱스 포함)
    """
    if batch.m < 2:
        raise InsufficientSamplesError(f"need at least 2 samples, got m={batch.m}")
    gram = batch.data.T @ batch.data
    norms = np.diag(gram).copy()
    zero = np.flatnonzero(norms <= 0.0)
    if zero.size:
        raise DegenerateSampleError("zero-norm column", column=int(zero[0]))

    rho = np.clip(gram / np.sqrt(np.outer(norms, norms)), -1.0, 1.0)
    mi = -0.5 * np.log1p(-np.minimum(rho ** 2, RHO_SQ_CLAMP))
    return WeightedEdgeList.from_matrix(mi)


def chow_liu(batch: SampleBatch, center: bool = False) -> Tree:
    """
    경험적 MI 가중 완전 그래프의 최대 신장 트리

    Parameters
    ----------
    batch : SampleBatch
        (m, n) 표본
    center : bool
        True이면 표본 차분으로 평균을 제거한 뒤 학습

    Returns
    -------
    Tree
    """
    if center:
        batch = center_by_differencing(batch)
    return maximum_spanning_tree(pairwise_empirical_mi(batch))


def oracle_pairwise_mi(dist: GaussianDistribution) -> WeightedEdgeList:
    """모집단 쌍별 MI I(X_i; X_j) 가중치"""
    n = dist.dim
    matrix = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            matrix[i, j] = matrix[j, i] = gaussian_mi(dist, [i], [j])
    return WeightedEdgeList.from_matrix(matrix)


def optimal_tree(dist: GaussianDistribution) -> Tree:
    """역 KL을 최소화하는 트리 (모집단 MI의 최대 신장 트리)"""
    return maximum_spanning_tree(oracle_pairwise_mi(dist))


def approximation_gap(dist: GaussianDistribution, learned: Tree) -> float:
    """
    D_KL(P ‖ P_learned) − min_T D_KL(P ‖ P_T)

    최솟값은 모집단 MI의 최대 신장 트리에서 얻는다.
    """
    best = optimal_tree(dist)
    return kl_via_decomposition(dist, learned) - kl_via_decomposition(dist, best)


class TreeScorer:
    """
    고정된 분포에 대한 트리 근사 간극 계산기

    모집단 MI와 최적 트리 가중치를 한 번만 계산해 두고, 학습된 트리의 간극을
    wt(T*) − wt(T̂) 로 계산한다. approximation_gap과 같은 값이다.
    """

    def __init__(self, dist: GaussianDistribution):
        self.dist = dist
        self.weights = oracle_pairwise_mi(dist)
        self._matrix = self.weights.matrix()
        self.best = maximum_spanning_tree(self.weights)
        self.best_weight = self.best.weight(self._matrix)
        logger.debug("oracle tree %s with weight %.6g", self.best.to_json(), self.best_weight)

    def gap(self, tree: Tree) -> float:
        if tree.n != self.dist.dim:
            raise ValueError(f"tree has {tree.n} vertices but distribution has dimension {self.dist.dim}")
        return self.best_weight - tree.weight(self._matrix)
