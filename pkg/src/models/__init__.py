"""
모집단 수준 가우시안 모형 모듈

정확한 상호정보량(MI), 조건부 상호정보량(CMI), 엔트로피, KL 발산과
3변수 선형 구조방정식 표현, 트리 사영을 제공한다. 모든 추정기는 이
값들을 기준(oracle)으로 검증된다.
"""

from .gaussian import GaussianDistribution
from .information import (
    gaussian_mi,
    gaussian_cmi,
    gaussian_kl,
    gaussian_entropy,
    total_correlation,
)
from .sem import (
    LinearSEM3,
    sem_to_distribution,
    distribution_to_sem,
    sem_cmi_closed_form,
    sem_mi_closed_form,
    sem_mi_printed_form,
    compare_sem_mi,
)
from .tree import Tree, TreeGaussian, tree_projection, kl_via_decomposition

__all__ = [
    'GaussianDistribution',
    'gaussian_mi',
    'gaussian_cmi',
    'gaussian_kl',
    'gaussian_entropy',
    'total_correlation',
    'LinearSEM3',
    'sem_to_distribution',
    'distribution_to_sem',
    'sem_cmi_closed_form',
    'sem_mi_closed_form',
    'sem_mi_printed_form',
    'compare_sem_mi',
    'Tree',
    'TreeGaussian',
    'tree_projection',
    'kl_via_decomposition',
]
