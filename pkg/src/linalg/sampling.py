"""
시드 기반 다변량 정규 표본 생성과 경험적 공분산
"""

from dataclasses import dataclass, field
from typing import Sequence, Tuple, Union, TYPE_CHECKING

import numpy as np

from .matrices import cholesky
from ..utils.errors import DegenerateSampleError, InsufficientSamplesError

if TYPE_CHECKING:
    from ..models.gaussian import GaussianDistribution


@dataclass(frozen=True)
class SampleBatch:
    """
    m×k i.i.d. 표본 행렬과 그 출처

    Attributes
    ----------
    data : np.ndarray
        (m, k) 실수 행렬, 행 하나가 표본 하나
    seed : int
        생성에 쓰인 64비트 시드 (외부 데이터이면 0)
    origin : str
        생성 분포의 식별자
    stream : Tuple[int, ...]
        substream 키 (예: (m, trial))
    names : Tuple[str, ...]
        변수 이름, CSV 헤더로 쓰인다
    """
    data: np.ndarray
    seed: int = 0
    origin: str = 'external'
    stream: Tuple[int, ...] = ()
    names: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        data = np.array(self.data, dtype=float)
        if data.ndim != 2 or data.shape[0] < 1 or data.shape[1] < 1:
            raise ValueError(f"sample data must be a non-empty m x k matrix, got shape {data.shape}")
        if not np.all(np.isfinite(data)):
            raise ValueError("sample data has non-finite entries")
        data.setflags(write=False)
        object.__setattr__(self, 'data', data)

        names = tuple(self.names) if self.names else tuple(f'x{i}' for i in range(data.shape[1]))
        if len(names) != data.shape[1]:
            raise ValueError(f"{len(names)} names given for {data.shape[1]} columns")
        object.__setattr__(self, 'names', names)
        object.__setattr__(self, 'stream', tuple(int(s) for s in self.stream))

    @property
    def m(self) -> int:
        return self.data.shape[0]

    @property
    def k(self) -> int:
        return self.data.shape[1]

    def column(self, i: int) -> np.ndarray:
        return self.data[:, i]

    def with_data(self, data: np.ndarray) -> 'SampleBatch':
        """같은 출처 정보를 유지한 새 배치"""
        return SampleBatch(data, seed=self.seed, origin=self.origin,
                           stream=self.stream, names=self.names)


def substream(seed: int, *key: int) -> np.random.Generator:
    """
    (seed, key...)로 주소가 정해지는 독립 난수 생성기

    같은 키는 항상 같은 스트림을 돌려주므로 시행 순서나 병렬도와 무관하게
    재현된다.

    Parameters
    ----------
    seed : int
        마스터 시드 (부호 없는 64비트)
    *key : int
        스트림 키, 예를 들어 (m, trial)

    Returns
    -------
    np.random.Generator
    """
    if seed < 0 or seed >= 2 ** 64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(sequence)


def sample_mvn(dist: 'GaussianDistribution',
               m: int,
               seed: int,
               stream: Sequence[int] = ()) -> SampleBatch:
    """
    N(μ, Σ)에서 m개의 i.i.d. 표본을 μ + L·g 로 생성

    Parameters
    ----------
    dist : GaussianDistribution
        생성 분포
    m : int
        표본 수 (≥ 1)
    seed : int
        시드
    stream : Sequence[int]
        substream 키

    Returns
    -------
    SampleBatch

    Raises
    ------
    NotPositiveDefiniteError
        공분산이 양정치가 아닐 때
    """
    if m < 1:
        raise InsufficientSamplesError(f"need at least one sample, got m={m}")
    L = cholesky(dist.cov)
    rng = substream(seed, *stream)
    g = rng.standard_normal((m, L.shape[0]))
    data = np.asarray(dist.mean, dtype=float) + g @ L.T
    return SampleBatch(data, seed=seed, origin=dist.name, stream=tuple(stream),
                       names=dist.names)


def empirical_covariance(batch: Union[SampleBatch, np.ndarray],
                         centered: bool = False,
                         unbiased: bool = False) -> np.ndarray:
    """
    1/m 정규화 경험적 공분산 (원점 기준 내적)

    Parameters
    ----------
    batch : SampleBatch or np.ndarray
        (m, k) 표본
    centered : bool
        True이면 열 평균을 뺀 뒤 계산
    unbiased : bool
        True이면 1/(m-1) 정규화 (centered일 때만, glasso 기준선 전용)

    Returns
    -------
    np.ndarray
        (k, k) 대칭 행렬

    Raises
    ------
    DegenerateSampleError
        대각 원소가 0인 (상수) 열이 있을 때
    """
    data = batch.data if isinstance(batch, SampleBatch) else np.asarray(batch, dtype=float)
    if data.ndim != 2:
        raise ValueError(f"expected an m x k matrix, got shape {data.shape}")
    m = data.shape[0]
    if unbiased and not centered:
        raise ValueError("the unbiased estimator is only defined for centered data")
    if centered and m < 2:
        raise InsufficientSamplesError(f"centered covariance needs m >= 2, got m={m}")
    if m < 1:
        raise InsufficientSamplesError("empty sample")

    raw_moment = np.mean(data ** 2, axis=0)
    if centered:
        data = data - data.mean(axis=0)
    denom = m - 1 if unbiased else m
    cov = data.T @ data / denom
    cov = (cov + cov.T) / 2.0

    # 평균 제거 후 남는 반올림 잔차도 상수 열로 본다
    zero = np.flatnonzero(np.diag(cov) <= 1e-14 * raw_moment)
    if zero.size:
        raise DegenerateSampleError("constant column in sample", column=int(zero[0]))
    return cov
