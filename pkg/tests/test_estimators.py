"""
경험적 MI / CMI 추정기와 독립성 검정기 테스트
"""

import numpy as np
import pytest

from src.estimators import (
    RHO_SQ_CLAMP,
    CmiTester,
    Decision,
    MiTester,
    additive_mi_estimate,
    batch_columns,
    center_by_differencing,
    decide,
    empirical_cmi,
    empirical_mi,
    empirical_mi_joint,
    mi_from_correlation,
    recommended_sample_size,
    testers,
)
from src.instances import AdditiveEstimationPair, MiTestPair, mi_test_pair
from src.linalg import SampleBatch
from src.models import GaussianDistribution, LinearSEM3, gaussian_mi, sem_cmi_closed_form, sem_to_distribution
from src.utils.errors import DegenerateSampleError, InsufficientSamplesError, LengthMismatchError

from .conftest import random_pd

RHO_HALF = np.array([[1.0, 0.5], [0.5, 1.0]])


# ---------------------------------------------------------------------------
# Î(X;Z)
# ---------------------------------------------------------------------------

def test_mi_identical_columns_clamped():
    """ρ̂ = ±1 이면 ρ̂²를 1 − 1e-12에서 자른다"""
    x = np.array([1.0, -2.0, 0.5, 3.0])
    for z in (x, -x, 2.5 * x):
        est = empirical_mi(x, z)
        assert abs(est.rho_hat) == pytest.approx(1.0)
        assert est.i_hat == pytest.approx(-0.5 * np.log1p(-min(est.rho_hat ** 2, RHO_SQ_CLAMP)))
        assert est.i_hat == pytest.approx(-0.5 * np.log(1e-12), rel=1e-3)
        assert np.isfinite(est.i_hat)


def test_mi_orthogonal_columns():
    est = empirical_mi([1.0, 0.0, 1.0, 0.0], [0.0, 1.0, 0.0, 1.0])
    assert est.rho_hat == 0.0
    assert est.i_hat == 0.0
    assert est.m == 4


def test_mi_from_correlation():
    assert mi_from_correlation(0.5) == pytest.approx(-0.5 * np.log(0.75))
    assert mi_from_correlation(-0.5) == mi_from_correlation(0.5)
    assert mi_from_correlation(0.0) == 0.0


def test_mi_input_errors():
    with pytest.raises(DegenerateSampleError) as info:
        empirical_mi([1.0, 2.0, 3.0], [0.0, 0.0, 0.0])
    assert info.value.column == 1
    with pytest.raises(LengthMismatchError):
        empirical_mi([1.0, 2.0, 3.0], [1.0, 2.0])
    with pytest.raises(InsufficientSamplesError):
        empirical_mi([1.0], [2.0])
    with pytest.raises(ValueError):
        empirical_mi([1.0, np.nan], [1.0, 2.0])


def test_mi_monte_carlo():
    """ρ = 0.5, m = 10⁵ 이면 Î ≈ 0.14384"""
    dist = GaussianDistribution.zero_mean(RHO_HALF)
    batch = dist.sample(10 ** 5, seed=41)
    est = empirical_mi(*batch_columns(batch, 0, 1))
    assert est.i_hat == pytest.approx(gaussian_mi(dist, [0], [1]), abs=0.01)
    assert est.rho_hat == pytest.approx(0.5, abs=0.01)


def test_mi_scale_and_order_invariance(rng):
    for _ in range(100):
        x, z = rng.standard_normal((2, 30))
        base = empirical_mi(x, z).i_hat
        c = float(rng.uniform(0.01, 100.0))
        assert empirical_mi(c * x, z).i_hat == pytest.approx(base, rel=1e-9, abs=1e-14)
        assert empirical_mi(z, x).i_hat == pytest.approx(base, rel=1e-12, abs=1e-15)


def test_additive_estimate_accuracy():
    """권장 표본 수에서 |Î − I| ≤ ε"""
    epsilon, delta = 0.05, 0.05
    m = recommended_sample_size(epsilon, delta, kind='additive')
    pair = AdditiveEstimationPair(0.2)
    for which in pair.labels:
        dist = pair.distribution(which)
        truth = gaussian_mi(dist, [0], [1])
        for trial in range(20):
            batch = dist.sample(m, seed=5, stream=(which, trial))
            est = additive_mi_estimate(batch.column(0), batch.column(1))
            assert abs(est.i_hat - truth) <= epsilon


# ---------------------------------------------------------------------------
# Î(X;Y|Z)
# ---------------------------------------------------------------------------

def test_cmi_degenerate_inputs():
    rng = np.random.default_rng(2)
    x, z = rng.standard_normal((2, 20))
    with pytest.raises(DegenerateSampleError) as info:
        empirical_cmi(x, z, z)
    assert info.value.column == 1
    with pytest.raises(DegenerateSampleError) as info:
        empirical_cmi(2.0 * z, x, z)
    assert info.value.column == 0
    with pytest.raises(DegenerateSampleError):
        empirical_cmi(x, np.zeros(20), z)
    with pytest.raises(InsufficientSamplesError):
        empirical_cmi(x[:3], x[:3] + 1.0, z[:3])


def test_cmi_sem_monte_carlo():
    """회귀 계수와 Î(X;Y|Z)가 SEM 매개변수로 수렴"""
    sem = LinearSEM3(a=1.0, b=1.0, c=1.0, alpha=0.5, beta=0.8, gamma=-0.3)
    batch = sem_to_distribution(sem).sample(10 ** 5, seed=13)
    est = empirical_cmi(*batch_columns(batch, 0, 1, 2))
    assert est.alpha_hat == pytest.approx(sem.alpha, abs=0.02)
    assert est.beta_hat == pytest.approx(sem.beta, abs=0.02)
    assert est.gamma_hat == pytest.approx(sem.gamma, abs=0.02)
    assert est.i_hat == pytest.approx(sem_cmi_closed_form(sem), abs=0.01)


def test_cmi_error_shrinks_with_m():
    """m = 10², 10³, 10⁴, 10⁵ 에서 |Î(X;Y|Z) − I| 의 중앙값이 감소"""
    sem = LinearSEM3(a=1.0, b=1.0, c=1.0, alpha=0.5, beta=0.8, gamma=-0.3)
    dist = sem_to_distribution(sem)
    truth = sem_cmi_closed_form(sem)
    medians = []
    for m in (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5):
        errors = [abs(empirical_cmi(*batch_columns(dist.sample(m, seed=31, stream=(m, trial)), 0, 1, 2)).i_hat - truth)
                  for trial in range(40)]
        medians.append(np.median(errors))
    assert np.all(np.diff(medians) <= 0.0)
    assert medians[-1] < 0.01


def test_cmi_regression_identity(rng):
    """α̂β̂ + γ̂ = (Ȳ·Z̄)/(Z̄·Z̄)"""
    for _ in range(200):
        x, y, z = rng.standard_normal((3, 25))
        est = empirical_cmi(x, y, z)
        assert est.alpha_hat * est.beta_hat + est.gamma_hat == pytest.approx((y @ z) / (z @ z), rel=1e-9, abs=1e-12)


def test_empirical_chain_rule():
    """Î(X;Z) + Î(X;Y|Z) = Î(X;Y) + Î(X;Z|Y) = Î(X;YZ), 무작위 배치 1000개"""
    rng = np.random.default_rng(29)
    for _ in range(1000):
        m = int(rng.integers(4, 51))
        cov = random_pd(rng, 3, delta=0.5)
        data = rng.standard_normal((m, 3)) @ np.linalg.cholesky(cov).T
        x, y, z = data[:, 0], data[:, 1], data[:, 2]
        left = empirical_mi(x, z).i_hat + empirical_cmi(x, y, z).i_hat
        right = empirical_mi(x, y).i_hat + empirical_cmi(x, z, y).i_hat
        assert left == pytest.approx(right, rel=1e-9, abs=1e-12)
        assert left == pytest.approx(empirical_mi_joint(x, data[:, 1:]), rel=1e-8, abs=1e-10)


def test_cmi_invariances(rng):
    """열별 척도와 X, Y 교환에 대해 불변"""
    for _ in range(100):
        x, y, z = rng.standard_normal((3, 40))
        base = empirical_cmi(x, y, z).i_hat
        cx, cy, cz = rng.uniform(0.1, 10.0, size=3)
        assert empirical_cmi(cx * x, cy * y, cz * z).i_hat == pytest.approx(base, rel=1e-8, abs=1e-12)
        assert empirical_cmi(y, x, z).i_hat == pytest.approx(base, rel=1e-8, abs=1e-12)


def test_joint_mi_shape_check():
    with pytest.raises(ValueError):
        empirical_mi_joint(np.ones(5), np.ones(5))


# ---------------------------------------------------------------------------
# 표본 차분
# ---------------------------------------------------------------------------

def test_differencing_rows():
    batch = SampleBatch(np.arange(10.0).reshape(5, 2), seed=3, origin='toy')
    centered = center_by_differencing(batch)
    assert centered.m == 2
    assert np.array_equal(centered.data, -2.0 * np.ones((2, 2)))
    assert centered.origin == 'toy' and centered.seed == 3
    with pytest.raises(InsufficientSamplesError):
        center_by_differencing(SampleBatch(np.ones((1, 2))))


def test_differencing_shift_invariant(rng):
    data = rng.standard_normal((50, 3))
    shift = np.array([10.0, -4.0, 0.5])
    plain = center_by_differencing(SampleBatch(data))
    shifted = center_by_differencing(SampleBatch(data + shift))
    assert np.allclose(plain.data, shifted.data, atol=1e-12)


def test_differencing_removes_mean():
    """평균이 0이 아니어도 차분 후 Î는 참값에 가깝다"""
    dist = GaussianDistribution([5.0, -3.0], RHO_HALF)
    batch = dist.sample(2 * 10 ** 5, seed=19)
    truth = gaussian_mi(dist, [0], [1])
    raw = empirical_mi(batch.column(0), batch.column(1)).i_hat
    centered = center_by_differencing(batch)
    fixed = empirical_mi(centered.column(0), centered.column(1)).i_hat
    assert fixed == pytest.approx(truth, abs=0.01)
    assert abs(raw - truth) > 0.1


# ---------------------------------------------------------------------------
# 검정기
# ---------------------------------------------------------------------------

def test_decide_boundary():
    """Î = ε/8 정확히 같으면 DEPENDENT"""
    verdict = decide(0.1 / 8, 0.1, 100)
    assert verdict.decision is Decision.DEPENDENT
    assert verdict.dependent
    assert verdict.threshold == 0.1 / 8
    assert decide(np.nextafter(0.1 / 8, 0.0), 0.1, 100).decision is Decision.INDEPENDENT
    assert verdict.to_dict() == {'decision': 'dependent', 'estimate': 0.0125,
                                 'threshold': 0.0125, 'epsilon': 0.1, 'm': 100}


@pytest.mark.parametrize('epsilon', [0.0, 1.0, -0.1, 2.0])
def test_decide_rejects_epsilon(epsilon):
    with pytest.raises(ValueError):
        decide(0.5, epsilon, 10)


def test_mi_tester_calibration():
    """m = 400, ε = 0.1 에서 두 오류율 모두 0.07 이하 (각 2000회)"""
    epsilon, m, trials = 0.1, 400, 2000
    null, _ = mi_test_pair(0.5)
    # I(X;Y) = ½ ln(1+ε') = ε
    _, alternative = mi_test_pair(np.exp(2 * epsilon) - 1.0)
    assert gaussian_mi(alternative, [0], [1]) == pytest.approx(epsilon)

    false_dependent = 0
    false_independent = 0
    for trial in range(trials):
        h0 = null.sample(m, seed=7, stream=(0, trial))
        h1 = alternative.sample(m, seed=7, stream=(1, trial))
        false_dependent += testers.test_mi(h0.column(0), h0.column(1), epsilon).dependent
        false_independent += not testers.test_mi(h1.column(0), h1.column(1), epsilon).dependent
    assert false_dependent / trials <= 0.07
    assert false_independent / trials <= 0.07


def test_cmi_tester_decisions():
    """β = 0 이면 조건부 독립, β가 크면 종속"""
    independent = sem_to_distribution(LinearSEM3(a=1.0, b=1.0, c=1.0, alpha=0.9, beta=0.0, gamma=0.7))
    dependent = sem_to_distribution(LinearSEM3(a=1.0, b=1.0, c=1.0, alpha=0.9, beta=0.6, gamma=0.7))
    epsilon = 0.1
    for trial in range(50):
        a = independent.sample(2000, seed=3, stream=(trial,))
        b = dependent.sample(2000, seed=4, stream=(trial,))
        assert not testers.test_cmi(*batch_columns(a, 0, 1, 2), epsilon).dependent
        assert testers.test_cmi(*batch_columns(b, 0, 1, 2), epsilon).dependent


def test_tester_classes():
    pair = MiTestPair(0.5)
    batch = pair.distribution(1).sample(100, seed=1)
    verdict = MiTester(0, 1, 0.1).test(batch)
    assert verdict.m == 100
    assert verdict.estimate == empirical_mi(batch.column(0), batch.column(1)).i_hat

    centered = MiTester(1, 0, 0.1, center=True).test(batch)
    assert centered.m == 50

    with pytest.raises(ValueError):
        MiTester(0, 0, 0.1)
    with pytest.raises(ValueError):
        MiTester(0, 2, 0.1).test(batch)
    with pytest.raises(ValueError):
        CmiTester(0, 1, 1, 0.1)


def test_cmi_tester_matches_function():
    sem = LinearSEM3(a=1.0, b=2.0, c=1.0, alpha=0.3, beta=0.2, gamma=0.4)
    batch = sem_to_distribution(sem).sample(500, seed=8)
    verdict = CmiTester(0, 1, 2, 0.2).test(batch)
    direct = testers.test_cmi(batch.column(0), batch.column(1), batch.column(2), 0.2)
    assert verdict == direct


def test_recommended_sample_size():
    assert recommended_sample_size(0.1, 0.01) == int(np.ceil(200.0 * np.log(100.0)))
    assert recommended_sample_size(0.1, 0.01, kind='additive') == int(np.ceil(20.0 * (100.0 + np.log(100.0))))
    assert recommended_sample_size(0.99, 0.99) == 4
    with pytest.raises(ValueError):
        recommended_sample_size(0.1, 0.01, kind='other')
    with pytest.raises(ValueError):
        recommended_sample_size(0.0, 0.01)
