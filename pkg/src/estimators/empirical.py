"""
회귀 기반 경험적 상호정보량 추정기

모든 내적은 평균을 빼지 않은 원점 기준 내적이다. 평균이 0이 아닌 데이터는
center_by_differencing을 먼저 거쳐야 한다.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from ..linalg.matrices import determinant
from ..linalg.sampling import SampleBatch
from ..utils.errors import (
    DegenerateSampleError,
    InsufficientSamplesError,
    LengthMismatchError,
)

# ρ² 상한. ρ = ±1 에서 로그가 발산하지 않도록 자른다
RHO_SQ_CLAMP = 1.0 - 1e-12
# 회귀 분모와 잔차 노름에 대한 상대 임계값
COLLINEAR_TOL = 1e-12


@dataclass(frozen=True)
class MiEstimate:
    """
    경험적 상관계수와 상호정보량

    Attributes
    ----------
    rho_hat : float
        X̄·Z̄ / √((X̄·X̄)(Z̄·Z̄)), [-1, 1]
    i_hat : float
        −½ ln(1 − min(ρ̂², 1 − 1e-12)) (nats)
    m : int
        사용한 표본 수
    """
    rho_hat: float
    i_hat: float
    m: int


@dataclass(frozen=True)
class CmiEstimate:
    """
    Î(X;Y|Z)와 중간 회귀 계수

    Attributes
    ----------
    alpha_hat, beta_hat, gamma_hat : float
        X ≈ α̂Z, Y ≈ β̂X + γ̂Z 의 최소제곱 계수
    rho_tilde : float
        잔차 X̃ = X̄ − α̂Z̄, Ỹ = Ȳ − (α̂β̂ + γ̂)Z̄ 의 상관계수
    i_hat : float
        −½ ln(1 − min(ρ̃², 1 − 1e-12)) (nats)
    m : int
        사용한 표본 수
    """
    alpha_hat: float
    beta_hat: float
    gamma_hat: float
    rho_tilde: float
    i_hat: float
    m: int


def mi_from_correlation(rho: float) -> float:
    """가우시안 쌍의 MI −½ ln(1 − ρ²), ρ²는 RHO_SQ_CLAMP에서 자른다"""
    r = min(float(rho) ** 2, RHO_SQ_CLAMP)
    return -0.5 * float(np.log1p(-r))


def _as_columns(*columns, min_m: int) -> Tuple[np.ndarray, ...]:
    arrays = tuple(np.asarray(c, dtype=float).reshape(-1) for c in columns)
    lengths = {a.shape[0] for a in arrays}
    if len(lengths) != 1:
        raise LengthMismatchError(f"columns have different lengths {sorted(lengths)}")
    m = arrays[0].shape[0]
    if m < min_m:
        raise InsufficientSamplesError(f"need at least {min_m} samples, got m={m}")
    for a in arrays:
        if not np.all(np.isfinite(a)):
            raise ValueError("column has non-finite entries")
    return arrays


def _check_nonzero(norms, offset: int = 0) -> None:
    for i, value in enumerate(norms):
        if value <= 0.0:
            raise DegenerateSampleError("zero-norm column", column=offset + i)


def empirical_mi(x, z) -> MiEstimate:
    """
    Î(X;Z) = −½ ln(1 − ρ̂²)

    Parameters
    ----------
    x, z : array_like
        길이 m (≥ 2)의 표본 열

    Returns
    -------
    MiEstimate

    Raises
    ------
    DegenerateSampleError
        노름이 0인 열이 있을 때 (column 0 = x, 1 = z)
    LengthMismatchError
        두 열의 길이가 다를 때
    """
    x, z = _as_columns(x, z, min_m=2)
    xx, zz, xz = x @ x, z @ z, x @ z
    _check_nonzero((xx, zz))

    rho = float(np.clip(xz / np.sqrt(xx * zz), -1.0, 1.0))
    return MiEstimate(rho_hat=rho, i_hat=mi_from_correlation(rho), m=x.shape[0])


def additive_mi_estimate(x, y) -> MiEstimate:
    """
    가법 오차 추정용 Î(X;Y)

    계산은 empirical_mi와 같다. m = C·(1/ε² + ln(1/δ)) 개의 표본이면
    확률 1−δ 이상으로 |Î − I| ≤ ε 이다 (recommended_sample_size 참조).
    """
    return empirical_mi(x, y)


def empirical_cmi(x, y, z) -> CmiEstimate:
    """
    Î(X;Y|Z): Z에 대한 회귀 잔차의 상관계수로 계산한 조건부 MI

        α̂ = (X̄·Z̄)/(Z̄·Z̄)
        β̂ = ((X̄·Ȳ)(Z̄·Z̄) − (X̄·Z̄)(Ȳ·Z̄)) / D
        γ̂ = ((Ȳ·Z̄)(X̄·X̄) − (X̄·Z̄)(X̄·Ȳ)) / D
        D = (X̄·X̄)(Z̄·Z̄) − (X̄·Z̄)²

    Parameters
    ----------
    x, y, z : array_like
        길이 m (≥ 4)의 표본 열

    Returns
    -------
    CmiEstimate

    Raises
    ------
    DegenerateSampleError
        노름이 0인 열, X와 Z가 공선일 때, Ỹ가 0 잔차일 때
    LengthMismatchError
        열 길이가 다를 때
    """
    x, y, z = _as_columns(x, y, z, min_m=4)
    xx, yy, zz = x @ x, y @ y, z @ z
    xy, xz, yz = x @ y, x @ z, y @ z
    _check_nonzero((xx, yy, zz))

    denom = xx * zz - xz ** 2
    if denom <= COLLINEAR_TOL * xx * zz:
        raise DegenerateSampleError("x and z are collinear", column=0)

    alpha = xz / zz
    beta = (xy * zz - xz * yz) / denom
    gamma = (yz * xx - xz * xy) / denom

    x_res = x - alpha * z
    y_res = y - (alpha * beta + gamma) * z
    xr, yr = x_res @ x_res, y_res @ y_res
    if yr <= COLLINEAR_TOL * yy:
        raise DegenerateSampleError("y is explained by z", column=1)
    if xr <= COLLINEAR_TOL * xx:
        raise DegenerateSampleError("x is explained by z", column=0)

    rho = float(np.clip((x_res @ y_res) / np.sqrt(xr * yr), -1.0, 1.0))
    return CmiEstimate(alpha_hat=float(alpha), beta_hat=float(beta), gamma_hat=float(gamma),
                       rho_tilde=rho, i_hat=mi_from_correlation(rho), m=x.shape[0])


def empirical_mi_joint(x, yz) -> float:
    """
    Î(X;YZ) = ½ ln( σ̂²_X · det(M̂_YZ) / det(M̂) )

    M̂은 (X, Y, Z)의 1/m 정규화 경험적 2차 모멘트 행렬이다.
    empirical_mi(x, z) + empirical_cmi(x, y, z).i_hat 과 같다.

    Parameters
    ----------
    x : array_like
        길이 m 열
    yz : array_like
        (m, 2) 행렬, 열 순서 (Y, Z)

    Returns
    -------
    float
        nats
    """
    yz = np.asarray(yz, dtype=float)
    if yz.ndim != 2 or yz.shape[1] != 2:
        raise ValueError(f"yz must be an m x 2 matrix, got shape {yz.shape}")
    x, y, z = _as_columns(x, yz[:, 0], yz[:, 1], min_m=4)
    data = np.column_stack([x, y, z])
    moment = data.T @ data / data.shape[0]
    _check_nonzero(np.diag(moment))

    det_full = determinant(moment)
    det_yz = determinant(moment[1:, 1:])
    scale = np.prod(np.diag(moment))
    if det_full <= COLLINEAR_TOL * scale or det_yz <= COLLINEAR_TOL * scale / moment[0, 0]:
        raise DegenerateSampleError("joint second-moment matrix is singular")
    return 0.5 * float(np.log(moment[0, 0] * det_yz / det_full))


def center_by_differencing(batch: SampleBatch) -> SampleBatch:
    """
    연속한 두 행의 차 row(2t) − row(2t+1) 로 평균을 제거한 배치

    출력 공분산은 기댓값으로 2Σ가 되어 MI/CMI 추정값은 변하지 않는다.
    m이 홀수이면 마지막 행은 버린다.

    Raises
    ------
    InsufficientSamplesError
        m < 2
    """
    if batch.m < 2:
        raise InsufficientSamplesError(f"differencing needs m >= 2, got m={batch.m}")
    half = batch.m // 2
    data = batch.data[0:2 * half:2] - batch.data[1:2 * half:2]
    return batch.with_data(data)


def recommended_sample_size(epsilon: float,
                            delta: float,
                            kind: str = 'test',
                            constant: float = 20.0) -> int:
    """
    표본 수 계약

    Parameters
    ----------
    epsilon : float
        허용 오차 (0 < ε < 1)
    delta : float
        실패 확률 (0 < δ < 1)
    kind : str
        'test'이면 C·(1/ε)·ln(1/δ), 'additive'이면 C·(1/ε² + ln(1/δ))
    constant : float
        상수 C

    Returns
    -------
    int
    """
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    if kind == 'test':
        m = constant / epsilon * np.log(1.0 / delta)
    elif kind == 'additive':
        m = constant * (1.0 / epsilon ** 2 + np.log(1.0 / delta))
    else:
        raise ValueError(f"unknown sample-size kind '{kind}'")
    return max(int(np.ceil(m)), 4)


def batch_columns(batch: Union[SampleBatch, np.ndarray], *indices: int) -> Tuple[np.ndarray, ...]:
    """배치에서 지정한 열들을 꺼낸다"""
    data = batch.data if isinstance(batch, SampleBatch) else np.asarray(batch, dtype=float)
    for i in indices:
        if not 0 <= i < data.shape[1]:
            raise ValueError(f"column index {i} out of range for {data.shape[1]} columns")
    return tuple(data[:, i] for i in indices)
