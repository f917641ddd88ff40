"""
하한 구성 인스턴스 생성 모듈

검정/추정 하한 쌍, 트리 구조 및 비트리 구조 3변수 블록, 블록 대각 합성,
해밍 거리가 먼 블록 모음을 위한 Gilbert–Varshamov 부호를 제공한다.
"""

from .base import InstancePair
from .pairs import (
    MiTestPair,
    AdditiveEstimationPair,
    mi_test_pair,
    additive_estimation_pair,
)
from .codes import CodeBook, gilbert_varshamov_code
from .blocks import (
    REALIZABLE,
    NONREALIZABLE,
    PRODUCT,
    RealizableBlock,
    NonRealizableBlock,
    realizable_block,
    nonrealizable_block,
    product_distribution,
    block_pair,
    BlockSpec,
    compose_blocks,
    composed_kl,
    FarFamily,
    far_family,
)

__all__ = [
    'InstancePair',
    'MiTestPair',
    'AdditiveEstimationPair',
    'mi_test_pair',
    'additive_estimation_pair',
    'CodeBook',
    'gilbert_varshamov_code',
    'REALIZABLE',
    'NONREALIZABLE',
    'PRODUCT',
    'RealizableBlock',
    'NonRealizableBlock',
    'realizable_block',
    'nonrealizable_block',
    'product_distribution',
    'block_pair',
    'BlockSpec',
    'compose_blocks',
    'composed_kl',
    'FarFamily',
    'far_family',
]
