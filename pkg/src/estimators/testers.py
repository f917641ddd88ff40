"""
임계값 기반 MI / CMI 검정기
"""

from typing import Tuple

from ..linalg.sampling import SampleBatch
from .base import IndependenceTester, TestVerdict, decide
from .empirical import empirical_cmi, empirical_mi


def test_mi(x, z, epsilon: float) -> TestVerdict:
    """
    Î(X;Z) ≥ ε/8 이면 DEPENDENT

    I(X;Z) = 0 이면 충분한 표본에서 Î(X;Z) ≤ ε/20 이 높은 확률로 성립한다.

    Parameters
    ----------
    x, z : array_like
        길이 m 표본 열
    epsilon : float
        허용 오차 (0 < ε < 1)

    Returns
    -------
    TestVerdict
    """
    estimate = empirical_mi(x, z)
    return decide(estimate.i_hat, epsilon, estimate.m)


def test_cmi(x, y, z, epsilon: float) -> TestVerdict:
    """Î(X;Y|Z) ≥ ε/8 이면 DEPENDENT"""
    estimate = empirical_cmi(x, y, z)
    return decide(estimate.i_hat, epsilon, estimate.m)


# pytest가 검정 함수로 수집하지 않도록
test_mi.__test__ = False
test_cmi.__test__ = False


class MiTester(IndependenceTester):
    """열 x, z 사이의 독립성 검정"""

    def __init__(self, x: int, z: int, epsilon: float, center: bool = False):
        super().__init__(epsilon, center)
        if x == z:
            raise ValueError("x and z must be different columns")
        self.x = x
        self.z = z

    @property
    def columns(self) -> Tuple[int, ...]:
        return (self.x, self.z)

    def estimate(self, batch: SampleBatch) -> float:
        return empirical_mi(batch.column(self.x), batch.column(self.z)).i_hat


class CmiTester(IndependenceTester):
    """열 z가 주어졌을 때 x, y의 조건부 독립성 검정"""

    def __init__(self, x: int, y: int, z: int, epsilon: float, center: bool = False):
        super().__init__(epsilon, center)
        if len({x, y, z}) != 3:
            raise ValueError("x, y and z must be three different columns")
        self.x = x
        self.y = y
        self.z = z

    @property
    def columns(self) -> Tuple[int, ...]:
        return (self.x, self.y, self.z)

    def estimate(self, batch: SampleBatch) -> float:
        return empirical_cmi(batch.column(self.x), batch.column(self.y),
                             batch.column(self.z)).i_hat
