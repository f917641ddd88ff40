"""
대칭 행렬 유틸리티 (촐레스키 분해, 행렬식, 역행렬)
"""

import numpy as np
import scipy.linalg

from ..utils.errors import NotPositiveDefiniteError

# 촐레스키 피벗(L_ii^2)이 이 값 이하이면 양정치가 아닌 것으로 판정
PD_TOLERANCE = 1e-12


def check_symmetric(a, name: str = 'matrix') -> np.ndarray:
    """
    정방 대칭 행렬인지 확인하고 float64 배열로 반환

    Parameters
    ----------
    a : array_like
        검사할 행렬
    name : str
        오류 메시지에 쓰일 이름

    Returns
    -------
    np.ndarray
        (a + a.T) / 2 로 대칭화된 사본
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"{name} must be a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} has non-finite entries")
    scale = max(np.max(np.abs(a)), 1.0)
    if not np.allclose(a, a.T, rtol=1e-12, atol=1e-12 * scale):
        raise ValueError(f"{name} is not symmetric")
    return (a + a.T) / 2.0


def cholesky(S) -> np.ndarray:
    """
    S = L·Lᵀ 를 만족하는 하삼각 행렬 L

    Parameters
    ----------
    S : array_like
        대칭 양정치 행렬

    Returns
    -------
    np.ndarray
        하삼각 촐레스키 인자

    Raises
    ------
    NotPositiveDefiniteError
        어떤 피벗이 PD_TOLERANCE 이하일 때
    """
    S = check_symmetric(S)
    try:
        L = scipy.linalg.cholesky(S, lower=True)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError(str(exc)) from exc

    pivots = np.diag(L) ** 2
    bad = np.flatnonzero(pivots <= PD_TOLERANCE)
    if bad.size:
        raise NotPositiveDefiniteError(
            f"cholesky pivot {int(bad[0])} is {pivots[bad[0]]:.3e}", pivot=int(bad[0])
        )
    return L


def determinant(S) -> float:
    """
    행렬식. n ≤ 3 은 닫힌 형태, 그 이상은 LU 분해

    Parameters
    ----------
    S : array_like
        정방 행렬

    Returns
    -------
    float
    """
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise ValueError(f"determinant needs a square matrix, got shape {S.shape}")
    n = S.shape[0]
    if n == 0:
        return 1.0
    if n == 1:
        return float(S[0, 0])
    if n == 2:
        return float(S[0, 0] * S[1, 1] - S[0, 1] * S[1, 0])
    if n == 3:
        return float(
            S[0, 0] * (S[1, 1] * S[2, 2] - S[1, 2] * S[2, 1])
            - S[0, 1] * (S[1, 0] * S[2, 2] - S[1, 2] * S[2, 0])
            + S[0, 2] * (S[1, 0] * S[2, 1] - S[1, 1] * S[2, 0])
        )
    return float(np.linalg.det(S))


def spd_inverse(S) -> np.ndarray:
    """촐레스키 인자를 이용한 대칭 양정치 행렬의 역행렬"""
    L = cholesky(S)
    inv = scipy.linalg.cho_solve((L, True), np.eye(L.shape[0]))
    return (inv + inv.T) / 2.0
