"""
가우시안 정보량의 닫힌 형태 (MI, CMI, 엔트로피, KL 발산)

모든 값은 자연로그 기준(nats)이다.
"""

from typing import Iterable, Tuple

import numpy as np
import scipy.linalg

from .gaussian import GaussianDistribution
from ..linalg.matrices import cholesky, determinant
from ..utils.errors import NotPositiveDefiniteError, SingularSubmatrixError


def _index_set(indices: Iterable[int], n: int, label: str,
               allow_empty: bool = False) -> Tuple[int, ...]:
    """정렬된 중복 없는 인덱스 튜플로 정규화"""
    values = tuple(sorted(int(i) for i in indices))
    if not values and not allow_empty:
        raise ValueError(f"index set {label} must be non-empty")
    if len(set(values)) != len(values):
        raise ValueError(f"index set {label} has duplicates: {values}")
    if values and (values[0] < 0 or values[-1] >= n):
        raise ValueError(f"index set {label} out of range for dimension {n}: {values}")
    return values


def _log_det(cov: np.ndarray, indices: Tuple[int, ...]) -> float:
    sub = cov[np.ix_(indices, indices)]
    if len(indices) <= 3:
        det = determinant(sub)
        if not det > 0.0:
            raise SingularSubmatrixError(f"submatrix {indices} has determinant {det:.3e}")
        return float(np.log(det))
    # 큰 합성 인스턴스에서 det 자체는 float 범위를 넘는다
    sign, logdet = np.linalg.slogdet(sub)
    if not (sign > 0 and np.isfinite(logdet)):
        raise SingularSubmatrixError(f"{len(indices)}x{len(indices)} submatrix is not positive definite")
    return float(logdet)


def gaussian_mi(dist: GaussianDistribution, S: Iterable[int], T: Iterable[int]) -> float:
    """
    I(X_S; X_T) = ½ ln(det(M_S)·det(M_T) / det(M_{S∪T}))

    Parameters
    ----------
    dist : GaussianDistribution
        분포 (평균은 무시된다)
    S, T : Iterable[int]
        서로소인 비어있지 않은 변수 인덱스 집합

    Returns
    -------
    float
        nats 단위 상호정보량

    Raises
    ------
    SingularSubmatrixError
        필요한 부분행렬의 행렬식이 0 이하일 때
    """
    S = _index_set(S, dist.dim, 'S')
    T = _index_set(T, dist.dim, 'T')
    if set(S) & set(T):
        raise ValueError(f"index sets must be disjoint: {S} and {T}")
    union = tuple(sorted(S + T))
    value = 0.5 * (_log_det(dist.cov, S) + _log_det(dist.cov, T) - _log_det(dist.cov, union))
    return float(value)


def gaussian_cmi(dist: GaussianDistribution,
                 S: Iterable[int],
                 T: Iterable[int],
                 R: Iterable[int] = ()) -> float:
    """
    I(X_S; X_T | X_R) = I(X_S; X_{R∪T}) − I(X_S; X_R)

    R이 비어 있으면 gaussian_mi와 같다. 수치 오차로 −1e-10 정도의 음수가
    나올 수 있다.
    """
    S = _index_set(S, dist.dim, 'S')
    T = _index_set(T, dist.dim, 'T')
    R = _index_set(R, dist.dim, 'R', allow_empty=True)
    if not R:
        return gaussian_mi(dist, S, T)
    if set(S) & set(T) or set(S) & set(R) or set(T) & set(R):
        raise ValueError(f"index sets must be pairwise disjoint: {S}, {T}, {R}")
    return gaussian_mi(dist, S, R + T) - gaussian_mi(dist, S, R)


def gaussian_entropy(dist: GaussianDistribution) -> float:
    """미분 엔트로피 ½ ln((2πe)ⁿ det Σ)"""
    n = dist.dim
    return float(0.5 * (n * np.log(2.0 * np.pi * np.e) + _log_det(dist.cov, tuple(range(n)))))


def total_correlation(dist: GaussianDistribution) -> float:
    """
    J_P = Σ_v H(P_v) − H(P) = ½ (Σ_v ln Σ_vv − ln det Σ)

    트리 구조와 무관한 상수항으로, KL 분해에 쓰인다.
    """
    n = dist.dim
    marginals = float(np.sum(np.log(np.diag(dist.cov))))
    return 0.5 * (marginals - _log_det(dist.cov, tuple(range(n))))


def gaussian_kl(p: GaussianDistribution, q: GaussianDistribution) -> float:
    """
    D_KL(p ‖ q) = ½ (tr(Σ_q⁻¹Σ_p) − n + (μ_q−μ_p)ᵀΣ_q⁻¹(μ_q−μ_p) + ln(det Σ_q / det Σ_p))

    Parameters
    ----------
    p, q : GaussianDistribution
        같은 차원의 분포

    Returns
    -------
    float
        nats 단위 KL 발산 (p == q 이면 0)
    """
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    try:
        Lq = cholesky(q.cov)
        Lp = cholesky(p.cov)
    except NotPositiveDefiniteError as exc:
        raise SingularSubmatrixError(f"covariance is not invertible: {exc}") from exc

    trace_term = float(np.trace(scipy.linalg.cho_solve((Lq, True), p.cov)))
    diff = q.mean - p.mean
    mahalanobis = float(diff @ scipy.linalg.cho_solve((Lq, True), diff))
    log_det_q = 2.0 * float(np.sum(np.log(np.diag(Lq))))
    log_det_p = 2.0 * float(np.sum(np.log(np.diag(Lp))))
    return 0.5 * (trace_term - p.dim + mahalanobis + log_det_q - log_det_p)
