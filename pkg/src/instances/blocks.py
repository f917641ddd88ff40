"""
3변수 하한 블록과 블록 대각 합성

블록 변수 순서는 (X, Y, Z)이고 블록 b는 인덱스 3b..3b+2를 차지한다.
블록 내부 척도는 t = ε/n (n은 합성에 쓰이는 전체 블록 수)이다.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
from scipy.linalg import block_diag
from scipy.spatial.distance import pdist

from ..models.gaussian import GaussianDistribution
from .base import InstancePair
from .codes import CodeBook

REALIZABLE = 'realizable'
NONREALIZABLE = 'nonrealizable'
PRODUCT = 'product'
BLOCK_KINDS = (REALIZABLE, NONREALIZABLE)
REALIZABLE_VARIANTS = ('main', 'gamma')
BLOCK_NAMES = ('X', 'Y', 'Z')


class RealizableBlock(InstancePair):
    """
    트리 구조 블록 쌍 (R₁, R₂)

    'main' 변형 (공통 비트 B, det = 3, KL = ε/n):
        R₁: Y ← B + U,  Z ← √t·X + W + B
        R₂: Y ← √t·X + B + U,  Z ← W + B
    'gamma' 변형 (γ = ½, det = 1, KL = 5ε/(8n)):
        R₁: Y ← U,  Z ← ½Y + W,  X ← √t·Z + V
        R₂: Y ← U,  Z ← ½Y + W,  X ← √t·Y + V

    R₁의 참 트리는 Y−Z−X, 즉 {(X,Z), (Y,Z)}이다.
    """

    kind = REALIZABLE
    names = BLOCK_NAMES

    def __init__(self, epsilon: float, n: int = 1, variant: str = 'main'):
        super().__init__(epsilon, n)
        if variant not in REALIZABLE_VARIANTS:
            raise ValueError(f"unknown realizable variant '{variant}'")
        self.variant = variant

    def covariance(self, which: int) -> np.ndarray:
        which = self._check_which(which)
        t, s = self.t, np.sqrt(self.t)
        if self.variant == 'main':
            if which == 1:
                return np.array([[1.0, 0.0, s],
                                 [0.0, 2.0, 1.0],
                                 [s, 1.0, 2.0 + t]])
            return np.array([[1.0, s, 0.0],
                             [s, 2.0 + t, 1.0],
                             [0.0, 1.0, 2.0]])
        if which == 1:
            return np.array([[1.0 + 1.25 * t, 0.5 * s, 1.25 * s],
                             [0.5 * s, 1.0, 0.5],
                             [1.25 * s, 0.5, 1.25]])
        return np.array([[1.0 + t, s, 0.5 * s],
                         [s, 1.0, 0.5],
                         [0.5 * s, 0.5, 1.25]])

    def closed_form_kl(self) -> float:
        return self.t if self.variant == 'main' else 0.625 * self.t

    def closed_form_det(self) -> float:
        return 3.0 if self.variant == 'main' else 1.0


class NonRealizableBlock(InstancePair):
    """
    트리 구조가 아닌 블록 쌍, Σ = I + vvᵀ

        R₁: v = (1+t, 1+2t, 1+3t)
        R₂: v = (1+t, 1+3t, 1+2t)

    det = 14t² + 12t + 4, D_KL = (27t⁴ + 24t³ + 6t²)/(28t² + 24t + 8) (양방향)
    R₁에서 I(Y;Z) > I(X;Z) > I(X;Y) 이다.
    """

    kind = NONREALIZABLE
    names = BLOCK_NAMES

    def loadings(self, which: int) -> np.ndarray:
        which = self._check_which(which)
        t = self.t
        if which == 1:
            return np.array([1.0 + t, 1.0 + 2.0 * t, 1.0 + 3.0 * t])
        return np.array([1.0 + t, 1.0 + 3.0 * t, 1.0 + 2.0 * t])

    def covariance(self, which: int) -> np.ndarray:
        v = self.loadings(which)
        return np.eye(3) + np.outer(v, v)

    def closed_form_kl(self) -> float:
        t = self.t
        return (27 * t ** 4 + 24 * t ** 3 + 6 * t ** 2) / (28 * t ** 2 + 24 * t + 8)

    def closed_form_det(self) -> float:
        t = self.t
        return 14 * t ** 2 + 12 * t + 4


def realizable_block(epsilon: float, n: int, which: int, variant: str = 'main') -> GaussianDistribution:
    """트리 구조 블록 R₁ (which=1) 또는 R₂ (which=2)"""
    return RealizableBlock(epsilon, n, variant).distribution(which)


def nonrealizable_block(epsilon: float, n: int, which: int) -> GaussianDistribution:
    """트리 구조가 아닌 블록 R₁ (which=1) 또는 R₂ (which=2)"""
    return NonRealizableBlock(epsilon, n).distribution(which)


def product_distribution(dim: int = 3) -> GaussianDistribution:
    """모든 좌표가 독립인 표준정규 (어떤 트리도 최적)"""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    names = BLOCK_NAMES if dim == 3 else ()
    return GaussianDistribution.zero_mean(np.eye(dim), name=PRODUCT, names=names)


def block_pair(kind: str, epsilon: float, n: int = 1, variant: str = 'main') -> InstancePair:
    if kind == REALIZABLE:
        return RealizableBlock(epsilon, n, variant)
    if kind == NONREALIZABLE:
        return NonRealizableBlock(epsilon, n)
    raise ValueError(f"unknown block kind '{kind}'")


@dataclass(frozen=True)
class BlockSpec:
    """
    독립 블록 ℓ개의 합성 명세

    Attributes
    ----------
    kind : str
        'realizable' 또는 'nonrealizable'
    bits : Tuple[int, ...]
        블록별 선택, 1이면 R₁, 0이면 R₂
    epsilon : float
        허용 오차 (0 < ε < 1)
    n : int
        ε/n 척도에 쓰이는 블록 수 (0이면 len(bits))
    variant : str
        realizable 블록 변형
    """
    kind: str
    bits: Tuple[int, ...]
    epsilon: float
    n: int = 0
    variant: str = 'main'

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise ValueError("a block specification needs at least one bit")
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"bits must be 0 or 1, got {bits}")
        if self.kind not in BLOCK_KINDS:
            raise ValueError(f"unknown block kind '{self.kind}'")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        object.__setattr__(self, 'bits', bits)
        object.__setattr__(self, 'n', int(self.n) if self.n else len(bits))

    @property
    def blocks(self) -> int:
        return len(self.bits)

    def pair(self) -> InstancePair:
        return block_pair(self.kind, self.epsilon, self.n, self.variant)

    def to_dict(self) -> Dict:
        dist = compose_blocks(self)
        return {
            'kind': self.kind,
            'epsilon': self.epsilon,
            'n': self.n,
            'bits': list(self.bits),
            'mean': dist.mean.tolist(),
            'cov': dist.cov.tolist(),
        }


def compose_blocks(spec: BlockSpec) -> GaussianDistribution:
    """
    블록 대각 공분산으로 독립 블록을 합성

    Returns
    -------
    GaussianDistribution
        3ℓ 변수, 이름 X0, Y0, Z0, X1, …
    """
    pair = spec.pair()
    covs = [pair.covariance(1 if bit else 2) for bit in spec.bits]
    names = tuple(f'{v}{b}' for b in range(spec.blocks) for v in BLOCK_NAMES)
    label = ''.join(str(bit) for bit in spec.bits)
    return GaussianDistribution.zero_mean(block_diag(*covs), name=f'{spec.kind}-{label}', names=names)


def composed_kl(first: BlockSpec, second: BlockSpec) -> float:
    """블록별 KL의 합 (다른 비트 수 × 블록 KL)"""
    if (first.kind, first.epsilon, first.n, first.variant) != (second.kind, second.epsilon, second.n, second.variant):
        raise ValueError("block specifications use different block families")
    if first.blocks != second.blocks:
        raise ValueError("block specifications have different lengths")
    differing = sum(a != b for a, b in zip(first.bits, second.bits))
    return differing * first.pair().closed_form_kl()


@dataclass(frozen=True)
class FarFamily:
    """
    해밍 거리가 먼 블록 합성 모음

    Attributes
    ----------
    specs : Tuple[BlockSpec, ...]
        부호어마다 하나
    max_kl : float
        쌍별 KL의 최댓값
    """
    specs: Tuple[BlockSpec, ...]
    max_kl: float

    def __len__(self) -> int:
        return len(self.specs)


def far_family(codebook: CodeBook, kind: str, epsilon: float, variant: str = 'main') -> FarFamily:
    """
    부호어를 비트로 쓰는 블록 합성 모음

    Parameters
    ----------
    codebook : CodeBook
        쌍별 해밍 거리 ≥ min_distance 인 부호
    kind : str
        블록 종류
    epsilon : float
        허용 오차

    Returns
    -------
    FarFamily
    """
    specs = tuple(BlockSpec(kind, tuple(word), epsilon, codebook.n, variant)
                  for word in codebook.words)
    per_block = block_pair(kind, epsilon, codebook.n, variant).closed_form_kl()
    if len(specs) < 2:
        return FarFamily(specs, 0.0)
    distances = np.rint(pdist(codebook.words, metric='hamming') * codebook.n)
    return FarFamily(specs, float(distances.max() * per_block))

