"""
pytest 설정 파일
"""

import os
import sys

import numpy as np
import pytest

# 저장소 루트를 파이썬 경로에 추가 (from src.… import)
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='run Monte-Carlo acceptance experiments')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long Monte-Carlo experiment')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


def random_pd(rng: np.random.Generator, n: int, delta: float = 0.1) -> np.ndarray:
    """A·Aᵀ + δI 형태의 무작위 양정치 행렬"""
    A = rng.standard_normal((n, n))
    return A @ A.T + delta * np.eye(n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def make_pd(rng):
    def _make(n: int, delta: float = 0.1) -> np.ndarray:
        return random_pd(rng, n, delta)
    return _make
