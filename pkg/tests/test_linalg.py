"""
행렬 유틸리티와 표본 생성 테스트
"""

import numpy as np
import pytest

from src.linalg import (
    SampleBatch,
    cholesky,
    determinant,
    empirical_covariance,
    sample_mvn,
    spd_inverse,
    substream,
)
from src.models import GaussianDistribution
from src.instances import NonRealizableBlock
from src.utils.errors import (
    DegenerateSampleError,
    InsufficientSamplesError,
    NotPositiveDefiniteError,
)

from .conftest import random_pd


def test_cholesky_identity():
    """단위행렬의 촐레스키 인자는 단위행렬"""
    assert np.array_equal(cholesky(np.eye(3)), np.eye(3))


def test_cholesky_known_factor():
    """[[4,2],[2,3]] → [[2,0],[1,√2]]"""
    L = cholesky([[4.0, 2.0], [2.0, 3.0]])
    assert L == pytest.approx(np.array([[2.0, 0.0], [1.0, np.sqrt(2.0)]]))


def test_cholesky_not_positive_definite():
    """두 번째 피벗이 음수이면 오류"""
    with pytest.raises(NotPositiveDefiniteError):
        cholesky([[1.0, 2.0], [2.0, 1.0]])


def test_cholesky_rejects_asymmetric():
    with pytest.raises(ValueError):
        cholesky([[1.0, 0.5], [0.0, 1.0]])


def test_cholesky_reconstruction_random():
    """무작위 양정치 행렬 1000개에서 L·Lᵀ = S"""
    rng = np.random.default_rng(1)
    for _ in range(1000):
        n = int(rng.integers(1, 7))
        S = random_pd(rng, n)
        L = cholesky(S)
        assert np.allclose(L @ L.T, S, rtol=1e-10, atol=1e-10 * np.abs(S).max())
        assert np.allclose(L, np.tril(L))


def test_determinant_examples():
    """닫힌 형태 행렬식"""
    assert determinant(np.eye(5)) == pytest.approx(1.0)
    assert determinant([[2.0, 1.0], [1.0, 2.0]]) == pytest.approx(3.0)
    sigma = NonRealizableBlock(0.1, 1).covariance(1)
    assert determinant(sigma) == pytest.approx(5.34, rel=1e-12)


def test_determinant_matches_cholesky_pivots(make_pd):
    """det(S) = Π L_ii²"""
    for n in (1, 2, 3, 4, 6):
        S = make_pd(n)
        pivots = np.diag(cholesky(S)) ** 2
        assert determinant(S) > 0
        assert determinant(S) == pytest.approx(np.prod(pivots), rel=1e-9)


def test_spd_inverse(make_pd):
    S = make_pd(4)
    assert np.allclose(spd_inverse(S) @ S, np.eye(4), atol=1e-8)


def test_sample_mvn_identity_covariance():
    """10⁶ 표본의 경험적 공분산은 I₂에 가깝다"""
    dist = GaussianDistribution.zero_mean(np.eye(2))
    batch = sample_mvn(dist, 10 ** 6, seed=7)
    cov = empirical_covariance(batch)
    assert np.linalg.norm(cov - np.eye(2), 2) < 0.01


def test_sample_mvn_single_row():
    dist = GaussianDistribution([1.0, -2.0, 0.5], np.diag([1.0, 2.0, 3.0]))
    batch = sample_mvn(dist, 1, seed=3)
    assert batch.data.shape == (1, 3)
    assert batch.m == 1 and batch.k == 3


def test_sample_mvn_degenerate_covariance():
    """분산이 0인 좌표는 양정치가 아니다"""
    with pytest.raises(NotPositiveDefiniteError):
        GaussianDistribution.zero_mean(np.diag([1.0, 0.0]))


def test_sample_mvn_reproducible():
    """같은 (분포, m, 시드, 스트림) → 같은 배치"""
    dist = GaussianDistribution.zero_mean([[2.0, 0.5], [0.5, 1.0]], name='pair')
    a = sample_mvn(dist, 50, seed=11, stream=(50, 3))
    b = sample_mvn(dist, 50, seed=11, stream=(50, 3))
    c = sample_mvn(dist, 50, seed=11, stream=(50, 4))
    assert np.array_equal(a.data, b.data)
    assert not np.array_equal(a.data, c.data)
    assert a.origin == 'pair'
    assert a.stream == (50, 3)


def test_substream_rejects_bad_seed():
    with pytest.raises(ValueError):
        substream(-1)
    with pytest.raises(ValueError):
        substream(2 ** 64)


def test_sample_batch_validation():
    with pytest.raises(ValueError):
        SampleBatch(np.array([[1.0, np.nan]]))
    with pytest.raises(ValueError):
        SampleBatch(np.zeros(3))
    batch = SampleBatch(np.ones((2, 2)))
    assert batch.names == ('x0', 'x1')
    with pytest.raises(ValueError):
        batch.data[0, 0] = 5.0


def test_empirical_covariance_hand_example():
    """(1,1), (−1,−1) → [[1,1],[1,1]]"""
    batch = SampleBatch(np.array([[1.0, 1.0], [-1.0, -1.0]]))
    assert np.array_equal(empirical_covariance(batch), np.ones((2, 2)))


def test_empirical_covariance_constant_column():
    with pytest.raises(DegenerateSampleError) as info:
        empirical_covariance(np.array([[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]]))
    assert info.value.column == 1
    with pytest.raises(DegenerateSampleError):
        empirical_covariance(np.array([[1.0, 5.0], [2.0, 5.0], [3.0, 5.0]]), centered=True)


def test_empirical_covariance_large_batch(make_pd):
    """큰 표본의 공분산은 Σ에 가깝다"""
    S = make_pd(3, delta=1.0)
    dist = GaussianDistribution.zero_mean(S)
    cov = empirical_covariance(dist.sample(200000, seed=5))
    assert np.linalg.norm(cov - S, 2) < 0.05 * np.linalg.norm(S, 2)


def test_empirical_covariance_symmetric_psd():
    rng = np.random.default_rng(9)
    for _ in range(100):
        data = rng.standard_normal((int(rng.integers(2, 10)), 4))
        for centered in (False, True):
            cov = empirical_covariance(data, centered=centered)
            assert np.array_equal(cov, cov.T)
            assert np.linalg.eigvalsh(cov).min() >= -1e-10


def test_empirical_covariance_flags():
    data = np.array([[1.0, 2.0], [3.0, 1.0], [0.0, -1.0]])
    with pytest.raises(ValueError):
        empirical_covariance(data, unbiased=True)
    with pytest.raises(InsufficientSamplesError):
        empirical_covariance(data[:1], centered=True)
    biased = empirical_covariance(data, centered=True)
    unbiased = empirical_covariance(data, centered=True, unbiased=True)
    assert unbiased == pytest.approx(biased * 3 / 2)
    assert unbiased == pytest.approx(np.cov(data.T))
