"""
경험적 MI / CMI 추정과 독립성 검정 모듈

상관계수 기반 MI 추정, 회귀 잔차 기반 CMI 추정, ε/8 임계값 검정기,
표본 차분을 통한 평균 제거를 제공한다.
"""

from .empirical import (
    RHO_SQ_CLAMP,
    MiEstimate,
    CmiEstimate,
    mi_from_correlation,
    empirical_mi,
    empirical_cmi,
    empirical_mi_joint,
    additive_mi_estimate,
    center_by_differencing,
    recommended_sample_size,
    batch_columns,
)
from .base import Decision, TestVerdict, IndependenceTester, decide
from . import testers
from .testers import MiTester, CmiTester

__all__ = [
    'RHO_SQ_CLAMP',
    'MiEstimate',
    'CmiEstimate',
    'mi_from_correlation',
    'empirical_mi',
    'empirical_cmi',
    'empirical_mi_joint',
    'additive_mi_estimate',
    'center_by_differencing',
    'recommended_sample_size',
    'batch_columns',
    'Decision',
    'TestVerdict',
    'IndependenceTester',
    'decide',
    'testers',
    'MiTester',
    'CmiTester',
]
