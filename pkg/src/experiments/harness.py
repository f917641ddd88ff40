"""
몬테카를로 실험 하네스

시행 k, 표본 수 m 의 난수는 substream(seed, m, k, ...) 에서만 나오므로
탐색 경로나 병렬도와 무관하게 결과가 재현된다. 병렬 시행 결과는 시행
인덱스 순서로 모은다.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import linregress
from tqdm import tqdm

from ..baselines.glasso import glasso_tree
from ..estimators.empirical import empirical_cmi, empirical_mi
from ..linalg.sampling import sample_mvn
from ..models.gaussian import GaussianDistribution
from ..models.information import gaussian_cmi, gaussian_mi
from ..models.sem import LinearSEM3, sem_to_distribution
from ..instances.blocks import nonrealizable_block, product_distribution, realizable_block
from ..structure.chow_liu import TreeScorer, chow_liu, optimal_tree
from ..utils.errors import GaussianTreeError, SearchExhaustedError
from ..utils.log import get_logger
from .config import DEFAULT_LAMBDAS, ExperimentConfig

logger = get_logger(__name__)

MAX_RETRIES = 10


@dataclass(frozen=True)
class SlopeFit:
    """
    로그-로그 최소제곱 직선

    Attributes
    ----------
    slope, intercept : float
        log y ≈ slope · log x + intercept
    r_squared : float
        결정계수 [0, 1]
    points : Tuple[Tuple[float, float], ...]
        (log x, log y) 점들
    """
    slope: float
    intercept: float
    r_squared: float
    points: Tuple[Tuple[float, float], ...]

    def to_dict(self) -> Dict:
        return {
            'slope': self.slope,
            'intercept': self.intercept,
            'r_squared': self.r_squared,
            'points': [list(p) for p in self.points],
        }


def fit_slope(x: Sequence[float], y: Sequence[float]) -> SlopeFit:
    """
    자연로그 축에서 y를 x에 회귀

    Parameters
    ----------
    x, y : Sequence[float]
        양수 값, 서로 다른 x가 둘 이상

    Returns
    -------
    SlopeFit
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.size < 2:
        raise ValueError("slope fit needs at least two (x, y) points of equal count")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("slope fit needs positive values on both axes")
    lx, ly = np.log(x), np.log(y)
    fit = linregress(lx, ly)
    r_squared = float(fit.rvalue ** 2) if np.isfinite(fit.rvalue) else 1.0
    return SlopeFit(slope=float(fit.slope), intercept=float(fit.intercept),
                    r_squared=min(max(r_squared, 0.0), 1.0),
                    points=tuple(zip(lx.tolist(), ly.tolist())))


def _map_ordered(fn: Callable, tasks: List, n_jobs: int) -> List:
    if n_jobs <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=n_jobs) as pool:
        return list(pool.map(fn, tasks))


def _chunks(trials: int, n_jobs: int) -> List[range]:
    bounds = np.linspace(0, trials, min(n_jobs, trials) + 1).astype(int)
    return [range(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


# ---------------------------------------------------------------------------
# ε vs m*
# ---------------------------------------------------------------------------

def experiment_instance(kind: str, epsilon: float, variant: str = 'gamma') -> GaussianDistribution:
    """m* 실험용 3변수 분포 (블록 하나, n = 1)"""
    if kind == 'realizable':
        return realizable_block(epsilon, 1, 1, variant)
    if kind == 'nonrealizable':
        return nonrealizable_block(epsilon, 1, 1)
    if kind == 'product':
        return product_distribution(3)
    raise ValueError(f"unknown instance kind '{kind}'")


def _chow_liu_gaps(task) -> List[float]:
    dist, scorer, m, seed, trials = task
    gaps = []
    for k in trials:
        try:
            tree = chow_liu(sample_mvn(dist, m, seed, stream=(m, k)))
            gaps.append(scorer.gap(tree))
        except GaussianTreeError:
            gaps.append(float('inf'))
    return gaps


def success_rate(dist: GaussianDistribution,
                 m: int,
                 epsilon: float,
                 config: ExperimentConfig,
                 scorer: Optional[TreeScorer] = None) -> float:
    """
    trials번의 Chow-Liu 학습 중 근사 간극이 factor·ε 이하인 비율

    퇴화 표본으로 실패한 시행은 실패로 센다.
    """
    scorer = scorer or TreeScorer(dist)
    tolerance = config.kl_tolerance_factor * epsilon
    tasks = [(dist, scorer, m, config.seed, chunk) for chunk in _chunks(config.trials, config.n_jobs)]
    gaps = [g for part in _map_ordered(_chow_liu_gaps, tasks, config.n_jobs) for g in part]
    return float(np.mean(np.asarray(gaps) <= tolerance))


def find_m_star(dist: GaussianDistribution, epsilon: float, config: ExperimentConfig) -> int:
    """
    성공률이 success_threshold 이상인 가장 작은 m

    m_min에서 2배씩 늘려 경계를 찾은 뒤, 실패한 m과 성공한 m 사이를
    이진 탐색한다.

    Parameters
    ----------
    dist : GaussianDistribution
        고정된 참 분포
    epsilon : float
        허용 오차
    config : ExperimentConfig
        시행 수, 성공 기준, 탐색 범위, 시드

    Returns
    -------
    int

    Raises
    ------
    SearchExhaustedError
        m_max까지 성공하지 못했을 때
    """
    scorer = TreeScorer(dist)
    cache: Dict[int, float] = {}
    bar = tqdm(desc=f'm* eps={epsilon:g}', unit='m', disable=not config.progress, leave=False)

    def passes(m: int) -> bool:
        if m not in cache:
            cache[m] = success_rate(dist, m, epsilon, config, scorer)
            logger.debug("eps=%g m=%d success=%.4f", epsilon, m, cache[m])
            bar.update(1)
        return cache[m] >= config.success_threshold

    try:
        hi = config.m_min
        lo = None
        while not passes(hi):
            if hi >= config.m_max:
                raise SearchExhaustedError(config.m_max, cache[hi])
            lo, hi = hi, min(2 * hi, config.m_max)
        if lo is None:
            return hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if passes(mid):
                hi = mid
            else:
                lo = mid
        return hi
    finally:
        bar.close()


def eps_vs_m_star(config: ExperimentConfig) -> Tuple[List[Tuple[float, int]], Optional[SlopeFit]]:
    """
    ε 격자마다 m*를 찾고 log m* 대 log(1/ε) 기울기를 적합

    Returns
    -------
    Tuple[List[Tuple[float, int]], Optional[SlopeFit]]
        (ε, m*) 행과 기울기 (ε가 하나이면 None)
    """
    rows: List[Tuple[float, int]] = []
    for epsilon in tqdm(config.epsilons, desc='epsilon', disable=not config.progress):
        dist = experiment_instance(config.instance, epsilon, config.variant)
        m_star = find_m_star(dist, epsilon, config)
        logger.info("%s eps=%g: m*=%d", config.instance, epsilon, m_star)
        rows.append((epsilon, m_star))

    if len(rows) < 2 or len({r[0] for r in rows}) < 2:
        return rows, None
    fit = fit_slope([1.0 / e for e, _ in rows], [m for _, m in rows])
    logger.info("log m* vs log(1/eps) slope %.4f (r^2 %.4f)", fit.slope, fit.r_squared)
    return rows, fit


# ---------------------------------------------------------------------------
# MI / CMI 수렴
# ---------------------------------------------------------------------------

def convergence_distribution(kind: str) -> Tuple[GaussianDistribution, float]:
    """수렴 실험 종류별 (분포, 참 정보량)"""
    if kind == 'independent':
        dist = GaussianDistribution.zero_mean(np.eye(2), name=kind)
        return dist, 0.0
    if kind == 'dependent':
        dist = GaussianDistribution.zero_mean([[1.0, 1.0], [1.0, 2.0]], name=kind)
        return dist, gaussian_mi(dist, [0], [1])
    if kind == 'cmi-independent':
        sem = LinearSEM3(a=1.0, b=1.0, c=1.0, alpha=1.0, beta=0.0, gamma=1.0)
    elif kind == 'cmi-dependent':
        sem = LinearSEM3(a=1.0, b=1.0, c=1.0, alpha=1.0, beta=1.0, gamma=1.0)
    else:
        raise ValueError(f"unknown convergence kind '{kind}'")
    dist = sem_to_distribution(sem, name=kind)
    return dist, gaussian_cmi(dist, [0], [1], [2])


def _estimate(kind: str, data: np.ndarray) -> float:
    if kind in ('independent', 'dependent'):
        return empirical_mi(data[:, 0], data[:, 1]).i_hat
    return empirical_cmi(data[:, 0], data[:, 1], data[:, 2]).i_hat


def _convergence_trials(task) -> List[Tuple[float, int]]:
    kind, dist, m, seed, trials = task
    out = []
    for k in trials:
        for attempt in range(MAX_RETRIES + 1):
            try:
                batch = sample_mvn(dist, m, seed, stream=(m, k, attempt))
                out.append((_estimate(kind, batch.data), attempt))
                break
            except GaussianTreeError:
                if attempt == MAX_RETRIES:
                    raise
    return out


@dataclass(frozen=True)
class ConvergenceRow:
    """
    m 하나의 수렴 통계

    Attributes
    ----------
    m : int
        표본 수
    mean_error : float
        시행 평균 |Î − I|
    variance : float
        |Î − I|의 시행 간 분산
    retries : int
        퇴화 표본으로 다시 뽑은 횟수
    """
    m: int
    mean_error: float
    variance: float
    retries: int


@dataclass(frozen=True)
class ConvergenceCurve:
    kind: str
    true_value: float
    rows: Tuple[ConvergenceRow, ...]
    fit: SlopeFit


def mi_convergence_curve(kind: str,
                         m_grid: Sequence[int],
                         trials: int,
                         seed: int,
                         n_jobs: int = 1,
                         progress: bool = False) -> ConvergenceCurve:
    """
    m마다 시행 평균 |Î − I|를 구하고 log-log 기울기를 적합

    Parameters
    ----------
    kind : str
        'independent', 'dependent', 'cmi-independent', 'cmi-dependent'
    m_grid : Sequence[int]
        순증가, 각 m ≥ 4
    trials : int
        m마다 시행 수
    seed : int
        마스터 시드
    n_jobs : int
        병렬 프로세스 수
    progress : bool
        tqdm 진행 표시

    Returns
    -------
    ConvergenceCurve
    """
    m_grid = [int(m) for m in m_grid]
    if any(m < 4 for m in m_grid) or any(b <= a for a, b in zip(m_grid, m_grid[1:])):
        raise ValueError(f"m grid must be strictly increasing with m >= 4, got {m_grid}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    dist, true_value = convergence_distribution(kind)

    rows = []
    for m in tqdm(m_grid, desc=kind, disable=not progress):
        tasks = [(kind, dist, m, seed, chunk) for chunk in _chunks(trials, n_jobs)]
        results = [r for part in _map_ordered(_convergence_trials, tasks, n_jobs) for r in part]
        errors = np.abs(np.array([r[0] for r in results]) - true_value)
        retries = int(sum(r[1] for r in results))
        rows.append(ConvergenceRow(m=m, mean_error=float(errors.mean()),
                                   variance=float(errors.var()), retries=retries))
        logger.debug("%s m=%d mean error %.4g (retries %d)", kind, m, rows[-1].mean_error, retries)

    fit = fit_slope([r.m for r in rows], [r.mean_error for r in rows])
    logger.info("%s convergence slope %.4f", kind, fit.slope)
    return ConvergenceCurve(kind=kind, true_value=true_value, rows=tuple(rows), fit=fit)


# ---------------------------------------------------------------------------
# Chow-Liu 대 graphical lasso 복원
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RecoveryRow:
    """
    m 하나의 정답 트리 복원 빈도

    Attributes
    ----------
    m : int
        표본 수
    chow_liu_freq : float
        Chow-Liu 정답 비율
    glasso_freq : float
        λ 격자 중 최고 glasso 정답 비율
    best_lambda : float
        그 λ
    """
    m: int
    chow_liu_freq: float
    glasso_freq: float
    best_lambda: float


def _recovery_trials(task) -> List[Tuple[bool, Tuple[bool, ...]]]:
    dist, truth, lambdas, m, seed, trials = task
    out = []
    for k in trials:
        batch = sample_mvn(dist, m, seed, stream=(m, k))
        try:
            cl_ok = chow_liu(batch) == truth
        except GaussianTreeError:
            cl_ok = False
        gl_ok = []
        for lam in lambdas:
            try:
                tree, result = glasso_tree(batch, lam)
                gl_ok.append(result.converged and tree == truth)
            except GaussianTreeError:
                gl_ok.append(False)
        out.append((cl_ok, tuple(gl_ok)))
    return out


def recovery_comparison(epsilon: float,
                        m_grid: Sequence[int],
                        trials: int = 200,
                        seed: int = 0,
                        lambdas: Sequence[float] = DEFAULT_LAMBDAS,
                        variant: str = 'gamma',
                        n_jobs: int = 1,
                        progress: bool = False) -> List[RecoveryRow]:
    """
    3변수 트리 구조 인스턴스에서 두 방법의 정답 트리 복원 빈도

    glasso는 수렴하지 못한 시행을 실패로 세고, λ 격자 중 가장 좋은 빈도를
    보고한다.

    Returns
    -------
    List[RecoveryRow]
    """
    dist = realizable_block(epsilon, 1, 1, variant)
    truth = optimal_tree(dist)
    lambdas = tuple(float(v) for v in lambdas)

    rows = []
    for m in tqdm(list(m_grid), desc='recovery', disable=not progress):
        tasks = [(dist, truth, lambdas, int(m), seed, chunk) for chunk in _chunks(trials, n_jobs)]
        results = [r for part in _map_ordered(_recovery_trials, tasks, n_jobs) for r in part]
        cl_freq = float(np.mean([r[0] for r in results]))
        gl_freqs = np.mean(np.array([r[1] for r in results], dtype=float), axis=0)
        best = int(np.argmax(gl_freqs))
        rows.append(RecoveryRow(m=int(m), chow_liu_freq=cl_freq,
                                glasso_freq=float(gl_freqs[best]), best_lambda=lambdas[best]))
        logger.info("m=%d chow-liu %.3f glasso %.3f (lambda %g)", m, cl_freq, gl_freqs[best], lambdas[best])
    return rows
