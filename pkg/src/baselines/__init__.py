"""
구조 복원 비교 기준선 모듈 (graphical lasso)
"""

from .glasso import GlassoResult, graphical_lasso, precision_to_tree, glasso_tree

__all__ = [
    'GlassoResult',
    'graphical_lasso',
    'precision_to_tree',
    'glasso_tree',
]
