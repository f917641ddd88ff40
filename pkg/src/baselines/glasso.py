"""
Graphical lasso (블록 좌표 하강)와 정밀도 행렬에서 트리 추출

    minimize  tr(SΘ) − log det Θ + λ‖Θ‖₁      (대각 포함)

공분산 추정 W = Θ⁻¹ 의 한 행/열씩 lasso 부분문제를 풀어 갱신한다.
수렴 판정은 쌍대 간극 tr(SΘ) − p + λ‖Θ‖₁ < tol 이다.
"""

import warnings
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from ..linalg.matrices import check_symmetric, cholesky, spd_inverse
from ..linalg.sampling import SampleBatch, empirical_covariance
from ..models.tree import Tree
from ..structure.spanning_tree import WeightedEdgeList, maximum_spanning_tree
from ..utils.errors import DivergedWarning
from ..utils.log import get_logger

logger = get_logger(__name__)

DEFAULT_TOL = 1e-6
DEFAULT_MAX_ITER = 500
LASSO_TOL = 1e-12
LASSO_MAX_SWEEPS = 1000


@dataclass(frozen=True, eq=False)
class GlassoResult:
    """
    Graphical lasso 결과

    Attributes
    ----------
    theta : np.ndarray
        추정 정밀도 행렬 (대칭 양정치)
    lam : float
        정규화 세기 λ
    iterations : int
        수행한 전체 스윕 수
    converged : bool
        max_iter 안에 쌍대 간극이 tol 아래로 내려갔는지
    covariance : np.ndarray
        추정 공분산 W
    dual_history : Tuple[float, ...]
        스윕마다 쌍대 목적 log det W + p (비감소). 블록 좌표 하강은 W에 대해
        쌍대 문제를 푸는 것이어서 스윕마다 단조인 양은 쌍대 목적이고, 원 목적
        (objective)은 중간 Θ에서 단조가 보장되지 않는다.
    """
    theta: np.ndarray
    lam: float
    iterations: int
    converged: bool
    covariance: np.ndarray
    dual_history: Tuple[float, ...] = field(default=())

    def objective(self, S: np.ndarray) -> float:
        """원 목적 tr(SΘ) − log det Θ + λ‖Θ‖₁"""
        _, logdet = np.linalg.slogdet(self.theta)
        return float(np.sum(S * self.theta) - logdet + self.lam * np.abs(self.theta).sum())


def _soft_threshold(x: float, lam: float) -> float:
    return float(np.sign(x) * max(abs(x) - lam, 0.0))


def _lasso(W11: np.ndarray, s12: np.ndarray, lam: float, beta: np.ndarray) -> np.ndarray:
    """min ½βᵀW11β − s12ᵀβ + λ‖β‖₁ 을 순환 좌표 하강으로 푼다 (beta에서 출발)"""
    beta = beta.copy()
    for _ in range(LASSO_MAX_SWEEPS):
        largest = 0.0
        for j in range(beta.shape[0]):
            residual = s12[j] - W11[j] @ beta + W11[j, j] * beta[j]
            updated = _soft_threshold(residual, lam) / W11[j, j]
            largest = max(largest, abs(updated - beta[j]))
            beta[j] = updated
        if largest < LASSO_TOL:
            break
    return beta


def _theta_from_betas(W: np.ndarray, betas: np.ndarray) -> np.ndarray:
    p = W.shape[0]
    theta = np.zeros((p, p))
    for i in range(p):
        rest = np.arange(p) != i
        theta[i, i] = 1.0 / (W[i, i] - W[i, rest] @ betas[i])
        theta[rest, i] = -betas[i] * theta[i, i]
    return (theta + theta.T) / 2.0


def _dual_gap(S: np.ndarray, theta: np.ndarray, lam: float) -> float:
    return float(np.sum(S * theta) - S.shape[0] + lam * np.abs(theta).sum())


def graphical_lasso(S,
                    lam: float,
                    tol: float = DEFAULT_TOL,
                    max_iter: int = DEFAULT_MAX_ITER) -> GlassoResult:
    """
    ℓ₁ 벌점 최대우도 정밀도 행렬 추정

    Parameters
    ----------
    S : array_like
        (p, p) 경험적 공분산, 대각 > 0
    lam : float
        λ ≥ 0. 0이면 S⁻¹을 바로 반환한다
    tol : float
        쌍대 간극 허용치
    max_iter : int
        최대 스윕 수

    Returns
    -------
    GlassoResult

    Raises
    ------
    NotPositiveDefiniteError
        초기값 S + λI 가 양정치가 아닐 때

    Warns
    -----
    DivergedWarning
        max_iter 안에 수렴하지 못했을 때 (converged=False로 반환)
    """
    S = check_symmetric(S, 'empirical covariance')
    if lam < 0:
        raise ValueError(f"lambda must be non-negative, got {lam}")
    if np.any(np.diag(S) <= 0):
        raise ValueError("empirical covariance must have a positive diagonal")
    p = S.shape[0]

    if lam == 0:
        theta = spd_inverse(S)
        return GlassoResult(theta=theta, lam=0.0, iterations=0, converged=True,
                            covariance=S.copy(), dual_history=(float(np.linalg.slogdet(S)[1]) + p,))

    W = S + lam * np.eye(p)
    cholesky(W)
    betas = np.zeros((p, p - 1))
    history: List[float] = [float(np.linalg.slogdet(W)[1]) + p]

    converged = False
    sweep = 0
    for sweep in range(1, max_iter + 1):
        for i in range(p):
            rest = np.arange(p) != i
            W11 = W[np.ix_(rest, rest)]
            betas[i] = _lasso(W11, S[i, rest], lam, betas[i])
            w12 = W11 @ betas[i]
            W[i, rest] = w12
            W[rest, i] = w12

        theta = _theta_from_betas(W, betas)
        gap = _dual_gap(S, theta, lam)
        history.append(float(np.linalg.slogdet(W)[1]) + p)
        logger.debug("glasso sweep %d: dual gap %.3e", sweep, gap)
        if abs(gap) < tol:
            converged = True
            break

    theta = _theta_from_betas(W, betas)
    cholesky(theta)
    if not converged:
        warnings.warn(f"graphical lasso did not converge in {max_iter} sweeps (lambda={lam})",
                      DivergedWarning, stacklevel=2)
    return GlassoResult(theta=theta, lam=float(lam), iterations=sweep, converged=converged,
                        covariance=W.copy(), dual_history=tuple(history))


def precision_to_tree(theta) -> Tree:
    """
    정밀도 행렬의 비대각 크기로 트리를 고른다

    3변수이면 |θ|가 가장 작은 비대각 성분을 버린다 (동점이면 사전식으로 큰 쌍).
    그보다 크면 |θ| 가중 최대 신장 트리를 쓴다.

    Parameters
    ----------
    theta : array_like
        (p, p) 대칭 행렬

    Returns
    -------
    Tree
    """
    theta = check_symmetric(theta, 'precision')
    p = theta.shape[0]
    if p == 3:
        pairs = [(0, 1), (0, 2), (1, 2)]
        # 크기 오름차순, 동점은 큰 쌍 먼저 버림
        drop = min(pairs, key=lambda e: (abs(theta[e]), -e[0], -e[1]))
        return Tree(3, tuple(e for e in pairs if e != drop))
    return maximum_spanning_tree(WeightedEdgeList.from_matrix(np.abs(theta)))


def glasso_tree(batch: SampleBatch, lam: float,
                tol: float = DEFAULT_TOL,
                max_iter: int = DEFAULT_MAX_ITER) -> Tuple[Tree, GlassoResult]:
    """
    1/(m−1) 중심화 공분산에 graphical lasso를 적용하고 트리를 추출

    Returns
    -------
    Tuple[Tree, GlassoResult]
    """
    S = empirical_covariance(batch, centered=True, unbiased=True)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', DivergedWarning)
        result = graphical_lasso(S, lam, tol=tol, max_iter=max_iter)
    if not result.converged:
        logger.debug("glasso with lambda=%g stopped after %d sweeps", lam, result.iterations)
    return precision_to_tree(result.theta), result
