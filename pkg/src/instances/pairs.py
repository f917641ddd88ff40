"""
2변수 검정/추정 하한 쌍
"""

from typing import Tuple

import numpy as np

from ..models.gaussian import GaussianDistribution
from .base import InstancePair


class MiTestPair(InstancePair):
    """
    독립성 검정 하한 쌍

    H₀: X, Y 독립 표준정규
    H₁: Y ← √ε·X + V, 공분산 [[1, √ε], [√ε, 1+ε]]

    D_KL(H₀ ‖ H₁) = ε/2, I_{H₁}(X;Y) = ½ ln(1+ε)
    """

    kind = 'mi-test'
    names = ('X', 'Y')
    labels = (0, 1)

    def covariance(self, which: int) -> np.ndarray:
        if self._check_which(which) == 0:
            return np.eye(2)
        s = np.sqrt(self.epsilon)
        return np.array([[1.0, s], [s, 1.0 + self.epsilon]])

    def closed_form_kl(self) -> float:
        return self.epsilon / 2.0


class AdditiveEstimationPair(InstancePair):
    """
    가법 오차 추정 하한 쌍

    H₀: Y ← (½+ε)·X + V,  H₁: Y ← (½−ε)·X + V
    두 공분산의 행렬식은 1이고 D_KL = 2ε² (양방향)
    """

    kind = 'additive'
    names = ('X', 'Y')
    labels = (0, 1)

    def __init__(self, epsilon: float):
        super().__init__(epsilon, n=1, allow_zero=True)

    def covariance(self, which: int) -> np.ndarray:
        sign = 1.0 if self._check_which(which) == 0 else -1.0
        a = 0.5 + sign * self.epsilon
        return np.array([[1.0, a], [a, 1.0 + a * a]])

    def closed_form_kl(self) -> float:
        return 2.0 * self.epsilon ** 2


def mi_test_pair(epsilon: float) -> Tuple[GaussianDistribution, GaussianDistribution]:
    """(H₀, H₁) = (N(0, I₂), N(0, [[1, √ε], [√ε, 1+ε]]))"""
    return MiTestPair(epsilon).pair()


def additive_estimation_pair(epsilon: float) -> Tuple[GaussianDistribution, GaussianDistribution]:
    """계수 ½ ± ε 의 (H₀, H₁)"""
    return AdditiveEstimationPair(epsilon).pair()
