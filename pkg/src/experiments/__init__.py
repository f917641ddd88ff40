"""
실험 하네스와 명령행 인터페이스 모듈

ε 대 m* 기울기, MI/CMI 수렴 기울기, Chow-Liu 대 graphical lasso 복원
빈도 실험을 재현하고 결과를 CSV/JSON으로 남긴다.
"""

from .config import ExperimentConfig
from .harness import (
    SlopeFit,
    ConvergenceRow,
    ConvergenceCurve,
    RecoveryRow,
    fit_slope,
    experiment_instance,
    success_rate,
    find_m_star,
    eps_vs_m_star,
    convergence_distribution,
    mi_convergence_curve,
    recovery_comparison,
)
from .io import (
    metadata_line,
    parse_metadata,
    write_table,
    read_table,
    write_batch_csv,
    read_batch_csv,
    write_json,
    read_json,
)

__all__ = [
    'ExperimentConfig',
    'SlopeFit',
    'ConvergenceRow',
    'ConvergenceCurve',
    'RecoveryRow',
    'fit_slope',
    'experiment_instance',
    'success_rate',
    'find_m_star',
    'eps_vs_m_star',
    'convergence_distribution',
    'mi_convergence_curve',
    'recovery_comparison',
    'metadata_line',
    'parse_metadata',
    'write_table',
    'read_table',
    'write_batch_csv',
    'read_batch_csv',
    'write_json',
    'read_json',
]
