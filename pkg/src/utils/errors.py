"""
패키지 전역 예외 클래스 정의
"""

from typing import Optional


class GaussianTreeError(Exception):
    """패키지에서 발생하는 모든 예외의 기본 클래스"""


class NotPositiveDefiniteError(GaussianTreeError, ValueError):
    """공분산 행렬이 양정치(positive definite)가 아닐 때 발생"""

    def __init__(self, message: str = "matrix is not positive definite",
                 pivot: Optional[int] = None):
        super().__init__(message)
        self.pivot = pivot


class DegenerateSampleError(GaussianTreeError, ValueError):
    """표본 열이 상수(노름 0)이거나 공선(collinear)일 때 발생"""

    def __init__(self, message: str = "degenerate sample",
                 column: Optional[int] = None):
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)
        self.column = column


class SingularSubmatrixError(GaussianTreeError, ValueError):
    """정보량 계산에 필요한 부분행렬의 행렬식이 0 이하일 때 발생"""


class LengthMismatchError(GaussianTreeError, ValueError):
    """입력 열들의 길이가 서로 다를 때 발생"""


class InsufficientSamplesError(GaussianTreeError, ValueError):
    """연산에 필요한 최소 표본 수보다 적을 때 발생"""


class TargetUnreachableError(GaussianTreeError):
    """탐욕적 부호 생성이 목표 크기에 도달하지 못했을 때 발생"""

    def __init__(self, achieved: int, target: int):
        super().__init__(
            f"greedy code construction stalled at {achieved} of {target} words"
        )
        self.achieved = achieved
        self.target = target


class SearchExhaustedError(GaussianTreeError):
    """m* 탐색이 상한까지 성공 확률을 만족하지 못했을 때 발생"""

    def __init__(self, m_max: int, success: float):
        super().__init__(
            f"no sample size up to {m_max} reached the target (last success {success:.3f})"
        )
        self.m_max = m_max
        self.success = success


class DivergedWarning(UserWarning):
    """graphical lasso가 max_iter 안에 수렴하지 못했을 때의 경고"""
