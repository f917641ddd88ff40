"""
소형 밀집 행렬 연산과 시드 기반 다변량 정규 표본 생성 모듈
"""

from .matrices import (
    PD_TOLERANCE,
    check_symmetric,
    cholesky,
    determinant,
    spd_inverse,
)
from .sampling import (
    SampleBatch,
    substream,
    sample_mvn,
    empirical_covariance,
)

__all__ = [
    'PD_TOLERANCE',
    'check_symmetric',
    'cholesky',
    'determinant',
    'spd_inverse',
    'SampleBatch',
    'substream',
    'sample_mvn',
    'empirical_covariance',
]
