"""
다변량 정규분포 클래스
"""

from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

import numpy as np

from ..linalg.matrices import check_symmetric, cholesky
from ..linalg.sampling import SampleBatch, sample_mvn


@dataclass(frozen=True, eq=False)
class GaussianDistribution:
    """
    평균 벡터와 양정치 공분산으로 정의되는 N(μ, Σ)

    Attributes
    ----------
    mean : np.ndarray
        길이 n 평균 벡터
    cov : np.ndarray
        (n, n) 대칭 양정치 공분산
    name : str
        분포 식별자, 표본 배치의 origin으로 전달된다
    names : Tuple[str, ...]
        변수 이름
    """
    mean: np.ndarray
    cov: np.ndarray
    name: str = 'gaussian'
    names: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        cov = check_symmetric(self.cov, 'covariance')
        cholesky(cov)
        mean = np.array(self.mean, dtype=float).reshape(-1)
        if mean.shape[0] != cov.shape[0]:
            raise ValueError(
                f"mean has length {mean.shape[0]} but covariance is {cov.shape[0]}x{cov.shape[0]}"
            )
        if not np.all(np.isfinite(mean)):
            raise ValueError("mean has non-finite entries")
        cov.setflags(write=False)
        mean.setflags(write=False)
        object.__setattr__(self, 'cov', cov)
        object.__setattr__(self, 'mean', mean)

        names = tuple(self.names) if self.names else tuple(f'x{i}' for i in range(cov.shape[0]))
        if len(names) != cov.shape[0]:
            raise ValueError(f"{len(names)} names given for dimension {cov.shape[0]}")
        object.__setattr__(self, 'names', names)

    @classmethod
    def zero_mean(cls, cov, name: str = 'gaussian',
                  names: Sequence[str] = ()) -> 'GaussianDistribution':
        cov = np.asarray(cov, dtype=float)
        return cls(np.zeros(cov.shape[0]), cov, name=name, names=tuple(names))

    @property
    def dim(self) -> int:
        return self.cov.shape[0]

    def correlation(self) -> np.ndarray:
        """상관계수 행렬"""
        sd = np.sqrt(np.diag(self.cov))
        return self.cov / np.outer(sd, sd)

    def with_mean(self, mean) -> 'GaussianDistribution':
        return GaussianDistribution(mean, self.cov, name=self.name, names=self.names)

    def scaled(self, c: float) -> 'GaussianDistribution':
        """공분산을 c배 한 분포 (c > 0)"""
        if c <= 0:
            raise ValueError(f"scale must be positive, got {c}")
        return GaussianDistribution(self.mean, c * self.cov, name=self.name, names=self.names)

    def allclose(self, other: 'GaussianDistribution', atol: float = 1e-10) -> bool:
        return (self.dim == other.dim
                and np.allclose(self.mean, other.mean, rtol=0.0, atol=atol)
                and np.allclose(self.cov, other.cov, rtol=0.0, atol=atol))

    def sample(self, m: int, seed: int, stream: Sequence[int] = ()) -> SampleBatch:
        return sample_mvn(self, m, seed, stream)

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'names': list(self.names),
            'mean': self.mean.tolist(),
            'cov': self.cov.tolist(),
        }

    @classmethod
    def from_dict(cls, payload: Dict) -> 'GaussianDistribution':
        return cls(np.asarray(payload['mean'], dtype=float),
                   np.asarray(payload['cov'], dtype=float),
                   name=payload.get('name', 'gaussian'),
                   names=tuple(payload.get('names', ())))
