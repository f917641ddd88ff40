"""
Gilbert–Varshamov 탐욕 이진 부호
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial.distance import pdist

from ..linalg.sampling import substream
from ..utils.errors import TargetUnreachableError
from ..utils.log import get_logger

logger = get_logger(__name__)

# 후보 예산 = CANDIDATE_BUDGET × target_size
CANDIDATE_BUDGET = 64


def _pairwise_distances(words: np.ndarray) -> np.ndarray:
    if words.shape[0] < 2:
        return np.zeros(0, dtype=int)
    return np.rint(pdist(words, metric='hamming') * words.shape[1]).astype(int)


@dataclass(frozen=True, eq=False)
class CodeBook:
    """
    쌍별 해밍 거리가 min_distance 이상인 이진 부호어 모음

    Attributes
    ----------
    n : int
        부호어 길이 (블록 수)
    words : np.ndarray
        (size, n) 0/1 행렬
    min_distance : int
        보장되는 최소 해밍 거리
    """
    n: int
    words: np.ndarray
    min_distance: int

    def __post_init__(self):
        words = np.array(self.words, dtype=np.uint8)
        if words.ndim != 2 or words.shape[1] != self.n:
            raise ValueError(f"words must be an (size, {self.n}) matrix, got shape {words.shape}")
        if np.any(words > 1):
            raise ValueError("code words must be binary")
        distances = _pairwise_distances(words)
        if distances.size and distances.min() == 0:
            raise ValueError("code words must be distinct")
        if distances.size and distances.min() < self.min_distance:
            raise ValueError(
                f"pairwise distance {int(distances.min())} is below the minimum {self.min_distance}"
            )
        words.setflags(write=False)
        object.__setattr__(self, 'words', words)

    def __len__(self) -> int:
        return self.words.shape[0]

    def distances(self) -> np.ndarray:
        """condensed 순서의 쌍별 해밍 거리"""
        return _pairwise_distances(self.words)


def gilbert_varshamov_code(n: int,
                           min_distance: Optional[int] = None,
                           target_size: int = 16,
                           seed: int = 0) -> CodeBook:
    """
    무작위 후보에 대한 탐욕적 부호 구성

    후보를 차례로 보며 이미 뽑힌 모든 부호어와 거리가 min_distance 이상이면
    받아들인다. 후보는 최대 64·target_size 개이며, 2ⁿ이 예산 이하이면 모든
    부호어를 시드 순열 순서로 본다.

    Parameters
    ----------
    n : int
        부호어 길이 (≥ 5)
    min_distance : int, optional
        최소 해밍 거리, 기본값 ⌈n/5⌉
    target_size : int
        목표 부호어 수 (≤ 2ⁿ)
    seed : int
        후보 생성 시드

    Returns
    -------
    CodeBook
        정확히 target_size 개의 부호어

    Raises
    ------
    TargetUnreachableError
        예산 안에 target_size에 도달하지 못했을 때
    """
    if n < 5:
        raise ValueError(f"code length must be at least 5, got n={n}")
    if min_distance is None:
        min_distance = math.ceil(n / 5)
    if min_distance < 1:
        raise ValueError(f"minimum distance must be positive, got {min_distance}")
    if target_size < 1 or target_size > 2 ** n:
        raise ValueError(f"target size must lie in [1, 2^{n}], got {target_size}")

    rng = substream(seed, n, min_distance)
    budget = CANDIDATE_BUDGET * target_size
    if 2 ** n <= budget:
        order = rng.permutation(2 ** n)
        candidates = ((order[:, None] >> np.arange(n)[::-1]) & 1).astype(np.uint8)
    else:
        candidates = rng.integers(0, 2, size=(budget, n), dtype=np.uint8)

    chosen = np.empty((target_size, n), dtype=np.uint8)
    size = 0
    for word in candidates:
        if size and np.count_nonzero(chosen[:size] != word, axis=1).min() < min_distance:
            continue
        chosen[size] = word
        size += 1
        if size == target_size:
            break

    if size < target_size:
        raise TargetUnreachableError(size, target_size)
    logger.debug("code n=%d d=%d reached %d words", n, min_distance, size)
    return CodeBook(n, chosen, min_distance)
