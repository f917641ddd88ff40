"""
3변수 선형 구조방정식(SEM) 표현

    Z ~ N(0, a²),  V ~ N(0, b²),  U ~ N(0, c²)
    X ← αZ + V
    Y ← βX + γZ + U

변수 순서는 (X, Y, Z)이며 평균은 마지막에 더해진다.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .gaussian import GaussianDistribution
from .information import gaussian_mi
from ..utils.log import get_logger

logger = get_logger(__name__)

SEM_NAMES = ('X', 'Y', 'Z')


@dataclass(frozen=True)
class LinearSEM3:
    """
    선형 구조방정식의 매개변수

    Attributes
    ----------
    a, b, c : float
        Z, V, U의 표준편차 (> 0)
    alpha, beta, gamma : float
        회귀 계수
    mu_x, mu_y, mu_z : float
        평균
    """
    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float
    mu_x: float = 0.0
    mu_y: float = 0.0
    mu_z: float = 0.0

    def __post_init__(self):
        for label in ('a', 'b', 'c'):
            value = getattr(self, label)
            if not np.isfinite(value) or value <= 0:
                raise ValueError(f"standard deviation {label} must be positive, got {value}")
        for label in ('alpha', 'beta', 'gamma', 'mu_x', 'mu_y', 'mu_z'):
            if not np.isfinite(getattr(self, label)):
                raise ValueError(f"{label} must be finite")

    @property
    def means(self) -> Tuple[float, float, float]:
        return (self.mu_x, self.mu_y, self.mu_z)


def _sem_covariance(sem: LinearSEM3) -> np.ndarray:
    a2, b2, c2 = sem.a ** 2, sem.b ** 2, sem.c ** 2
    alpha, beta, gamma = sem.alpha, sem.beta, sem.gamma

    var_z = a2
    var_x = alpha ** 2 * a2 + b2
    cov_xz = alpha * a2
    cov_yz = (alpha * beta + gamma) * a2
    cov_xy = beta * var_x + gamma * alpha * a2
    var_y = (alpha * beta + gamma) ** 2 * a2 + beta ** 2 * b2 + c2

    return np.array([
        [var_x, cov_xy, cov_xz],
        [cov_xy, var_y, cov_yz],
        [cov_xz, cov_yz, var_z],
    ])


def sem_to_distribution(sem: LinearSEM3, name: str = 'sem3') -> GaussianDistribution:
    """
    SEM이 유도하는 (X, Y, Z) 결합 분포

    Parameters
    ----------
    sem : LinearSEM3
        구조방정식 매개변수
    name : str
        분포 식별자

    Returns
    -------
    GaussianDistribution
        3×3 공분산과 평균 (μ_x, μ_y, μ_z)
    """
    return GaussianDistribution(np.array(sem.means), _sem_covariance(sem),
                                name=name, names=SEM_NAMES)


def distribution_to_sem(dist: GaussianDistribution) -> LinearSEM3:
    """
    임의의 3변수 양정치 가우시안을 (X, Y, Z) 순서의 SEM으로 표현

    X를 Z에 회귀하고, Y를 (X, Z)에 회귀하여 잔차 분산을 구한다.
    """
    if dist.dim != 3:
        raise ValueError(f"a linear SEM needs exactly 3 variables, got {dist.dim}")
    S = dist.cov
    a2 = S[2, 2]
    alpha = S[0, 2] / a2
    b2 = S[0, 0] - alpha * S[0, 2]

    design = np.array([[S[0, 0], S[0, 2]], [S[0, 2], S[2, 2]]])
    target = np.array([S[0, 1], S[1, 2]])
    beta, gamma = np.linalg.solve(design, target)
    c2 = S[1, 1] - beta * S[0, 1] - gamma * S[1, 2]

    mu_x, mu_y, mu_z = dist.mean
    return LinearSEM3(a=float(np.sqrt(a2)), b=float(np.sqrt(b2)), c=float(np.sqrt(c2)),
                      alpha=float(alpha), beta=float(beta), gamma=float(gamma),
                      mu_x=float(mu_x), mu_y=float(mu_y), mu_z=float(mu_z))


def sem_cmi_closed_form(sem: LinearSEM3) -> float:
    """I(X;Y|Z) = ½ ln(1 + β²b²/c²), 조건값 z와 무관"""
    return 0.5 * float(np.log1p(sem.beta ** 2 * sem.b ** 2 / sem.c ** 2))


def sem_mi_closed_form(sem: LinearSEM3) -> float:
    """
    I(X;Y)를 SEM 매개변수로 직접 전개한 닫힌 형태

    ½ ln( (α²a²+b²)((αβ+γ)²a²+β²b²+c²) / (a²b²γ² + c²(α²a²+b²)) )
    """
    a2, b2, c2 = sem.a ** 2, sem.b ** 2, sem.c ** 2
    var_x = sem.alpha ** 2 * a2 + b2
    var_y = (sem.alpha * sem.beta + sem.gamma) ** 2 * a2 + sem.beta ** 2 * b2 + c2
    denom = a2 * b2 * sem.gamma ** 2 + c2 * var_x
    return 0.5 * float(np.log(var_x * var_y / denom))


def sem_mi_printed_form(sem: LinearSEM3) -> float:
    """(αβ+γ)² 항에 a²가 빠진 형태. a = 1일 때만 sem_mi_closed_form과 같다."""
    a2, b2, c2 = sem.a ** 2, sem.b ** 2, sem.c ** 2
    var_x = sem.alpha ** 2 * a2 + b2
    numer = var_x * ((sem.alpha * sem.beta + sem.gamma) ** 2 + sem.beta ** 2 * b2 + c2)
    denom = a2 * b2 * sem.gamma ** 2 + c2 * var_x
    return 0.5 * float(np.log(numer / denom))


def compare_sem_mi(sem: LinearSEM3, tol: float = 1e-9) -> Tuple[float, float, float]:
    """
    행렬식 기반 I(X;Y)와 두 닫힌 형태를 비교하고 차이를 로그로 남긴다

    행렬식 기반 값이 기준이다.

    Returns
    -------
    Tuple[float, float, float]
        (행렬식 기반, 전개 형태, 인쇄 형태)
    """
    dist = sem_to_distribution(sem)
    reference = gaussian_mi(dist, [0], [1])
    expanded = sem_mi_closed_form(sem)
    printed = sem_mi_printed_form(sem)
    if abs(expanded - reference) > tol:
        logger.warning("expanded SEM MI %.12g differs from determinant MI %.12g", expanded, reference)
    if abs(printed - reference) > tol:
        logger.info("printed SEM MI %.12g differs from determinant MI %.12g (a=%g)",
                    printed, reference, sem.a)
    else:
        logger.debug("SEM MI closed forms agree at %.12g", reference)
    return reference, expanded, printed

