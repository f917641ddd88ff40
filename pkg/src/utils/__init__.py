"""
유틸리티 모듈 (예외 정의, 로깅 설정)
"""

from .errors import (
    GaussianTreeError,
    NotPositiveDefiniteError,
    DegenerateSampleError,
    SingularSubmatrixError,
    LengthMismatchError,
    InsufficientSamplesError,
    TargetUnreachableError,
    SearchExhaustedError,
    DivergedWarning,
)
from .log import get_logger, configure_logging

__all__ = [
    'GaussianTreeError',
    'NotPositiveDefiniteError',
    'DegenerateSampleError',
    'SingularSubmatrixError',
    'LengthMismatchError',
    'InsufficientSamplesError',
    'TargetUnreachableError',
    'SearchExhaustedError',
    'DivergedWarning',
    'get_logger',
    'configure_logging',
]
