"""
Chow-Liu 구조 학습 모듈

경험적 쌍별 MI로 완전 그래프를 만들고 최대 신장 트리를 구한다.
"""

from .spanning_tree import UnionFind, WeightedEdgeList, maximum_spanning_tree
from .chow_liu import (
    pairwise_empirical_mi,
    chow_liu,
    oracle_pairwise_mi,
    optimal_tree,
    approximation_gap,
    TreeScorer,
)

__all__ = [
    'UnionFind',
    'WeightedEdgeList',
    'maximum_spanning_tree',
    'pairwise_empirical_mi',
    'chow_liu',
    'oracle_pairwise_mi',
    'optimal_tree',
    'approximation_gap',
    'TreeScorer',
]
