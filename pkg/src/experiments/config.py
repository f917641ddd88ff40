"""
실험 설정
"""

import dataclasses
import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Tuple, Union

EXPERIMENTS = ('eps-vs-m', 'mi-convergence', 'recovery')
INSTANCE_KINDS = ('realizable', 'nonrealizable', 'product')
CONVERGENCE_KINDS = ('independent', 'dependent', 'cmi-independent', 'cmi-dependent')

DEFAULT_EPSILONS = (0.1, 0.07, 0.05, 0.03, 0.02, 0.015, 0.01)
DEFAULT_M_GRID = tuple(int(round(10 ** e)) for e in (2.0, 2.5, 3.0, 3.5, 4.0))
DEFAULT_LAMBDAS = (0.5, 0.2, 0.1, 0.05, 0.02, 0.01)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    실험 하나의 모든 매개변수

    Attributes
    ----------
    experiment : str
        'eps-vs-m', 'mi-convergence', 'recovery'
    instance : str
        m* 탐색 대상 ('realizable', 'nonrealizable', 'product')
    variant : str
        realizable 블록 변형 ('gamma'가 실험용 구성)
    epsilons : Tuple[float, ...]
        ε 격자
    trials : int
        m마다 시행 수
    success_threshold : float
        m*의 성공 확률 기준
    kl_tolerance_factor : float
        허용 간극 = factor · ε
    seed : int
        마스터 시드
    m_min, m_max : int
        m* 탐색 범위
    m_grid : Tuple[int, ...]
        수렴/복원 실험의 m 격자
    kind : str
        수렴 실험 종류
    lambdas : Tuple[float, ...]
        glasso λ 격자
    n_jobs : int
        병렬 프로세스 수
    progress : bool
        tqdm 진행 표시 여부
    """
    experiment: str = 'eps-vs-m'
    instance: str = 'realizable'
    variant: str = 'gamma'
    epsilons: Tuple[float, ...] = DEFAULT_EPSILONS
    trials: int = 1000
    success_threshold: float = 0.95
    kl_tolerance_factor: float = 0.25
    seed: int = 0
    m_min: int = 8
    m_max: int = 2 ** 24
    m_grid: Tuple[int, ...] = DEFAULT_M_GRID
    kind: str = 'independent'
    lambdas: Tuple[float, ...] = DEFAULT_LAMBDAS
    n_jobs: int = 1
    progress: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'epsilons', tuple(float(e) for e in self.epsilons))
        object.__setattr__(self, 'm_grid', tuple(int(m) for m in self.m_grid))
        object.__setattr__(self, 'lambdas', tuple(float(v) for v in self.lambdas))

        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment '{self.experiment}'")
        if self.instance not in INSTANCE_KINDS:
            raise ValueError(f"unknown instance kind '{self.instance}'")
        if self.kind not in CONVERGENCE_KINDS:
            raise ValueError(f"unknown convergence kind '{self.kind}'")
        if not 0.0 < self.success_threshold < 1.0:
            raise ValueError(f"success_threshold must lie in (0, 1), got {self.success_threshold}")
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if not self.epsilons or any(not 0.0 < e < 1.0 for e in self.epsilons):
            raise ValueError(f"epsilon values must lie in (0, 1), got {self.epsilons}")
        if self.kl_tolerance_factor <= 0:
            raise ValueError("kl_tolerance_factor must be positive")
        if not 1 <= self.m_min <= self.m_max:
            raise ValueError(f"invalid m search bounds [{self.m_min}, {self.m_max}]")
        if any(b <= a for a, b in zip(self.m_grid, self.m_grid[1:])) or min(self.m_grid, default=0) < 2:
            raise ValueError(f"m grid must be strictly increasing with m >= 2, got {self.m_grid}")
        if any(v < 0 for v in self.lambdas) or not self.lambdas:
            raise ValueError("lambda grid must be non-empty and non-negative")
        if self.n_jobs < 1:
            raise ValueError(f"n_jobs must be positive, got {self.n_jobs}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    def to_dict(self) -> Dict[str, Any]:
        payload = dataclasses.asdict(self)
        for key in ('epsilons', 'm_grid', 'lambdas'):
            payload[key] = list(payload[key])
        return payload

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> 'ExperimentConfig':
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(payload) - known
        if unknown:
            raise ValueError(f"unknown configuration keys {sorted(unknown)}")
        return cls(**payload)

    @classmethod
    def from_json(cls, path: Union[str, Path]) -> 'ExperimentConfig':
        with open(path, 'r', encoding='utf-8') as f:
            return cls.from_dict(json.load(f))

    def with_overrides(self, **overrides) -> 'ExperimentConfig':
        """None이 아닌 값만 덮어쓴 사본"""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return dataclasses.replace(self, **changes)

    def config_hash(self) -> str:
        """정규화된 JSON의 SHA-256 (n_jobs, progress 제외)"""
        payload = self.to_dict()
        payload.pop('n_jobs')
        payload.pop('progress')
        canonical = json.dumps(payload, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()
