"""
독립성 검정기의 기본 클래스 정의
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from ..linalg.sampling import SampleBatch
from .empirical import center_by_differencing

# 판정 임계값 ε/8, 독립일 때 추정값 상한 ε/20
THRESHOLD_DIVISOR = 8.0
NULL_BOUND_DIVISOR = 20.0


class Decision(str, Enum):
    """검정 결과"""
    INDEPENDENT = 'independent'
    DEPENDENT = 'dependent'


@dataclass(frozen=True)
class TestVerdict:
    """
    검정기 출력

    Attributes
    ----------
    decision : Decision
        estimate ≥ threshold 이면 DEPENDENT
    estimate : float
        경험적 MI 또는 CMI (nats)
    threshold : float
        epsilon / 8
    epsilon : float
        허용 오차
    m : int
        사용한 표본 수
    """
    __test__ = False

    decision: Decision
    estimate: float
    threshold: float
    epsilon: float
    m: int

    @property
    def dependent(self) -> bool:
        return self.decision is Decision.DEPENDENT

    def to_dict(self) -> Dict:
        return {
            'decision': self.decision.value,
            'estimate': self.estimate,
            'threshold': self.threshold,
            'epsilon': self.epsilon,
            'm': self.m,
        }


def check_epsilon(epsilon: float) -> float:
    epsilon = float(epsilon)
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    return epsilon


def decide(estimate: float, epsilon: float, m: int) -> TestVerdict:
    """
    추정값을 임계값 ε/8과 비교한다 (경계값은 DEPENDENT)

    Parameters
    ----------
    estimate : float
        경험적 정보량 (nats)
    epsilon : float
        허용 오차 (0 < ε < 1)
    m : int
        표본 수

    Returns
    -------
    TestVerdict
    """
    epsilon = check_epsilon(epsilon)
    threshold = epsilon / THRESHOLD_DIVISOR
    decision = Decision.DEPENDENT if estimate >= threshold else Decision.INDEPENDENT
    return TestVerdict(decision=decision, estimate=float(estimate),
                       threshold=threshold, epsilon=epsilon, m=int(m))


class IndependenceTester(ABC):
    """SampleBatch의 열 인덱스에 대해 동작하는 검정기의 기본 클래스"""

    def __init__(self, epsilon: float, center: bool = False):
        """
        Parameters
        ----------
        epsilon : float
            허용 오차 (0 < ε < 1)
        center : bool
            True이면 표본 차분으로 평균을 제거한 뒤 추정
        """
        self.epsilon = check_epsilon(epsilon)
        self.center = center

    @property
    @abstractmethod
    def columns(self) -> Tuple[int, ...]:
        """검정에 쓰이는 열 인덱스"""

    @abstractmethod
    def estimate(self, batch: SampleBatch) -> float:
        """
        준비된 배치에서 정보량을 추정

        Parameters
        ----------
        batch : SampleBatch
            (필요하면 차분된) 표본

        Returns
        -------
        float
            nats
        """

    def prepare(self, batch: SampleBatch) -> SampleBatch:
        for i in self.columns:
            if not 0 <= i < batch.k:
                raise ValueError(f"column index {i} out of range for {batch.k} columns")
        return center_by_differencing(batch) if self.center else batch

    def test(self, batch: SampleBatch) -> TestVerdict:
        """배치에 대한 판정"""
        prepared = self.prepare(batch)
        return decide(self.estimate(prepared), self.epsilon, prepared.m)
