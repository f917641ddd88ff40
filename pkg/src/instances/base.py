"""
하한 구성용 분포 쌍의 기본 클래스 정의
"""

from abc import ABC, abstractmethod
from typing import Dict, Tuple

import numpy as np

from ..models.gaussian import GaussianDistribution
from ..models.information import gaussian_kl


class InstancePair(ABC):
    """두 가설 분포 (which = 1, 2 또는 0, 1)를 만드는 기본 클래스"""

    kind: str = 'instance'
    names: Tuple[str, ...] = ()
    labels: Tuple[int, int] = (1, 2)

    def __init__(self, epsilon: float, n: int = 1, allow_zero: bool = False):
        """
        Parameters
        ----------
        epsilon : float
            허용 오차, 0 < ε < 1 (allow_zero이면 0 포함)
        n : int
            블록 수, 블록 내부 척도는 t = ε/n
        allow_zero : bool
            ε = 0 (두 분포가 같음)을 허용할지
        """
        epsilon = float(epsilon)
        low_ok = epsilon >= 0.0 if allow_zero else epsilon > 0.0
        if not (low_ok and epsilon < 1.0):
            raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
        if int(n) < 1:
            raise ValueError(f"block count n must be positive, got {n}")
        self.epsilon = epsilon
        self.n = int(n)

    @property
    def t(self) -> float:
        """블록 단위 척도 ε/n"""
        return self.epsilon / self.n

    def _check_which(self, which: int) -> int:
        if which not in self.labels:
            raise ValueError(f"which must be one of {self.labels}, got {which}")
        return which

    @abstractmethod
    def covariance(self, which: int) -> np.ndarray:
        """
        가설 which의 공분산

        Parameters
        ----------
        which : int
            labels 중 하나

        Returns
        -------
        np.ndarray
        """

    @abstractmethod
    def closed_form_kl(self) -> float:
        """D_KL(첫째 ‖ 둘째)의 닫힌 형태"""

    def distribution(self, which: int) -> GaussianDistribution:
        which = self._check_which(which)
        cov = self.covariance(which)
        return GaussianDistribution.zero_mean(cov, name=f'{self.kind}-{which}', names=self.names)

    def pair(self) -> Tuple[GaussianDistribution, GaussianDistribution]:
        first, second = self.labels
        return self.distribution(first), self.distribution(second)

    def kl(self, reverse: bool = False) -> float:
        """두 가설 사이의 gaussian_kl (reverse이면 둘째 ‖ 첫째)"""
        p, q = self.pair()
        return gaussian_kl(q, p) if reverse else gaussian_kl(p, q)

    def to_dict(self, which: int) -> Dict:
        """{kind, epsilon, n, bits, mean, cov} 형식의 인스턴스 JSON"""
        dist = self.distribution(which)
        return {
            'kind': self.kind,
            'epsilon': self.epsilon,
            'n': self.n,
            'bits': [1 if which == 1 else 0],
            'mean': dist.mean.tolist(),
            'cov': dist.cov.tolist(),
        }
