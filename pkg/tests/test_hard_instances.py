"""
하한 구성 인스턴스와 GV 부호 테스트
"""

import numpy as np
import pytest

from src.instances import (
    AdditiveEstimationPair,
    BlockSpec,
    CodeBook,
    MiTestPair,
    NonRealizableBlock,
    RealizableBlock,
    additive_estimation_pair,
    block_pair,
    compose_blocks,
    composed_kl,
    far_family,
    gilbert_varshamov_code,
    mi_test_pair,
    nonrealizable_block,
    product_distribution,
    realizable_block,
)
from src.linalg import determinant
from src.models import Tree, gaussian_kl, gaussian_mi, kl_via_decomposition
from src.structure import optimal_tree
from src.utils.errors import TargetUnreachableError

XZ_YZ = Tree(3, ((0, 2), (1, 2)))
XY_YZ = Tree(3, ((0, 1), (1, 2)))


def random_settings(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield float(rng.uniform(0.01, 0.9)), int(rng.integers(1, 21))


@pytest.mark.parametrize('pair_cls, kwargs, seed', [
    (RealizableBlock, {'variant': 'main'}, 1),
    (RealizableBlock, {'variant': 'gamma'}, 2),
    (NonRealizableBlock, {}, 3),
])
def test_block_closed_forms(pair_cls, kwargs, seed):
    """무작위 (ε, n) 50개에서 행렬식과 양방향 KL이 닫힌 형태와 같다"""
    for epsilon, n in random_settings(50, seed=seed):
        pair = pair_cls(epsilon, n, **kwargs)
        for which in (1, 2):
            assert determinant(pair.covariance(which)) == pytest.approx(pair.closed_form_det(), rel=1e-10)
        expected = pair.closed_form_kl()
        assert pair.kl() == pytest.approx(expected, rel=1e-8, abs=1e-10)
        assert pair.kl(reverse=True) == pytest.approx(expected, rel=1e-8, abs=1e-10)


def test_block_kl_examples():
    assert RealizableBlock(0.1).kl() == pytest.approx(0.1)
    assert RealizableBlock(0.1, variant='gamma').kl() == pytest.approx(0.0625)
    assert NonRealizableBlock(0.1).kl() == pytest.approx(0.0867 / 10.68, rel=1e-9)
    assert NonRealizableBlock(0.1).closed_form_det() == pytest.approx(5.34)
    assert RealizableBlock(0.2, 4).t == pytest.approx(0.05)


def test_pair_closed_forms():
    for epsilon, _ in random_settings(50, seed=3):
        h0, h1 = mi_test_pair(epsilon)
        assert gaussian_kl(h0, h1) == pytest.approx(epsilon / 2, rel=1e-10)
        assert gaussian_mi(h1, [0], [1]) == pytest.approx(0.5 * np.log1p(epsilon), rel=1e-10)
        assert gaussian_mi(h0, [0], [1]) == pytest.approx(0.0, abs=1e-15)

        a0, a1 = additive_estimation_pair(epsilon / 2)
        assert determinant(a0.cov) == pytest.approx(1.0)
        assert determinant(a1.cov) == pytest.approx(1.0)
        assert gaussian_kl(a0, a1) == pytest.approx(2 * (epsilon / 2) ** 2, rel=1e-9)


def test_additive_pair_allows_zero():
    pair = AdditiveEstimationPair(0.0)
    assert pair.kl() == pytest.approx(0.0, abs=1e-12)
    assert np.array_equal(pair.covariance(0), pair.covariance(1))
    with pytest.raises(ValueError):
        MiTestPair(0.0)


@pytest.mark.parametrize('epsilon', [0.0, 1.0, 1.5, -0.2])
def test_block_rejects_epsilon(epsilon):
    with pytest.raises(ValueError):
        RealizableBlock(epsilon)
    with pytest.raises(ValueError):
        NonRealizableBlock(epsilon)


def test_block_rejects_arguments():
    with pytest.raises(ValueError):
        RealizableBlock(0.1, variant='other')
    with pytest.raises(ValueError):
        RealizableBlock(0.1, n=0)
    with pytest.raises(ValueError):
        RealizableBlock(0.1).covariance(0)
    with pytest.raises(ValueError):
        block_pair('product', 0.1)


def test_nonrealizable_mi_ordering():
    """R₁: I(Y;Z) > I(X;Z) > I(X;Y), R₂는 Y와 Z의 역할이 바뀐다"""
    r1 = nonrealizable_block(0.1, 1, 1)
    i_xy, i_xz, i_yz = (gaussian_mi(r1, [a], [b]) for a, b in ((0, 1), (0, 2), (1, 2)))
    assert i_yz > i_xz > i_xy
    assert i_xy == pytest.approx(0.19513, abs=1e-5)
    assert i_xz == pytest.approx(0.21078, abs=1e-5)
    assert i_yz == pytest.approx(0.23163, abs=1e-5)
    assert i_xz - i_xy >= 0.1 / 10

    r2 = nonrealizable_block(0.1, 1, 2)
    assert gaussian_mi(r2, [0], [1]) == pytest.approx(i_xz)
    assert gaussian_mi(r2, [0], [2]) == pytest.approx(i_xy)
    assert optimal_tree(r1) == XZ_YZ
    assert optimal_tree(r2) == XY_YZ
    assert kl_via_decomposition(r1, XZ_YZ) > 0


def test_realizable_optimal_trees():
    for variant in ('main', 'gamma'):
        assert optimal_tree(realizable_block(0.1, 1, 1, variant)) == XZ_YZ
        assert optimal_tree(realizable_block(0.1, 1, 2, variant)) == XY_YZ


def test_gamma_blocks_are_tree_distributions():
    """gamma 변형의 두 블록은 각자의 트리에서 정확히 마르코프"""
    for epsilon, n in random_settings(20, seed=5):
        r1 = realizable_block(epsilon, n, 1, 'gamma')
        r2 = realizable_block(epsilon, n, 2, 'gamma')
        assert kl_via_decomposition(r1, XZ_YZ) == pytest.approx(0.0, abs=1e-12)
        assert kl_via_decomposition(r2, XY_YZ) == pytest.approx(0.0, abs=1e-12)


def test_gamma_wrong_tree_gap():
    """R₁에 R₂의 트리를 쓰면 간극 ½ ln(1+t) 는 t/4 보다 크다"""
    t = 0.1
    r1 = realizable_block(t, 1, 1, 'gamma')
    gap = kl_via_decomposition(r1, XY_YZ) - kl_via_decomposition(r1, XZ_YZ)
    assert gap == pytest.approx(0.5 * np.log1p(t), rel=1e-9)
    assert gap > t / 4


def test_product_distribution():
    dist = product_distribution()
    assert dist.names == ('X', 'Y', 'Z')
    assert np.array_equal(dist.cov, np.eye(3))
    assert product_distribution(5).dim == 5
    with pytest.raises(ValueError):
        product_distribution(0)


def test_compose_blocks_layout():
    spec = BlockSpec('realizable', (1, 0, 1), 0.3)
    assert spec.n == 3
    dist = compose_blocks(spec)
    assert dist.dim == 9
    assert dist.names[:4] == ('X0', 'Y0', 'Z0', 'X1')
    assert dist.name == 'realizable-101'
    pair = RealizableBlock(0.3, 3)
    assert np.array_equal(dist.cov[3:6, 3:6], pair.covariance(2))
    assert np.array_equal(dist.cov[0:3, 0:3], pair.covariance(1))
    assert np.all(dist.cov[0:3, 3:] == 0.0)


def test_compose_blocks_independent():
    """서로 다른 블록 사이의 MI는 0"""
    dist = compose_blocks(BlockSpec('nonrealizable', (1, 1, 0), 0.2))
    assert gaussian_mi(dist, [0, 1, 2], [3, 4, 5, 6, 7, 8]) == pytest.approx(0.0, abs=1e-12)
    assert gaussian_mi(dist, [2], [6]) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize('kind', ['realizable', 'nonrealizable'])
def test_composed_kl_additive(kind):
    rng = np.random.default_rng(11)
    for _ in range(20):
        n = int(rng.integers(1, 8))
        a = BlockSpec(kind, tuple(rng.integers(0, 2, n)), 0.4)
        b = BlockSpec(kind, tuple(rng.integers(0, 2, n)), 0.4)
        exact = gaussian_kl(compose_blocks(a), compose_blocks(b))
        assert exact == pytest.approx(composed_kl(a, b), rel=1e-9, abs=1e-12)


def test_block_spec_validation():
    with pytest.raises(ValueError):
        BlockSpec('realizable', (), 0.1)
    with pytest.raises(ValueError):
        BlockSpec('realizable', (0, 2), 0.1)
    with pytest.raises(ValueError):
        BlockSpec('product', (0, 1), 0.1)
    with pytest.raises(ValueError):
        BlockSpec('realizable', (0, 1), 1.0)
    with pytest.raises(ValueError):
        composed_kl(BlockSpec('realizable', (0, 1), 0.1), BlockSpec('realizable', (0, 1), 0.2))
    with pytest.raises(ValueError):
        composed_kl(BlockSpec('realizable', (0, 1), 0.1, n=3), BlockSpec('realizable', (0, 1, 1), 0.1))


def test_gv_code_example():
    """n = 20, d = 4 에서 16개 부호어"""
    code = gilbert_varshamov_code(20, 4, target_size=16, seed=0)
    assert len(code) == 16
    assert code.words.shape == (16, 20)
    assert code.distances().min() >= 4
    assert len({tuple(w) for w in code.words}) == 16


def test_gv_code_full_enumeration():
    """d = 1, n = 5 이면 32개 부호어 전부"""
    code = gilbert_varshamov_code(5, 1, target_size=32, seed=9)
    assert {tuple(int(b) for b in w) for w in code.words} == {
        tuple((v >> s) & 1 for s in range(4, -1, -1)) for v in range(32)
    }


def test_gv_code_defaults_and_determinism():
    a = gilbert_varshamov_code(12, seed=4)
    b = gilbert_varshamov_code(12, seed=4)
    assert a.min_distance == 3
    assert np.array_equal(a.words, b.words)


def test_gv_code_unreachable():
    """길이 5, 거리 5 부호는 보수 쌍 2개가 최대"""
    with pytest.raises(TargetUnreachableError):
        gilbert_varshamov_code(5, 5, target_size=3)


def test_gv_code_rejects_arguments():
    with pytest.raises(ValueError):
        gilbert_varshamov_code(4)
    with pytest.raises(ValueError):
        gilbert_varshamov_code(6, 0)
    with pytest.raises(ValueError):
        gilbert_varshamov_code(5, 1, target_size=33)


def test_codebook_validation():
    with pytest.raises(ValueError, match='distinct'):
        CodeBook(3, [[0, 1, 0], [0, 1, 0]], 1)
    with pytest.raises(ValueError):
        CodeBook(3, [[0, 2, 0]], 1)
    with pytest.raises(ValueError):
        CodeBook(3, [[0, 1, 0], [0, 1, 1]], 2)
    with pytest.raises(ValueError):
        CodeBook(4, [[0, 1, 0]], 1)
    with pytest.raises(ValueError):
        CodeBook(3, [[0, 1, 0]], 1).words[0, 0] = 1


def test_far_family():
    code = gilbert_varshamov_code(20, 4, target_size=16, seed=0)
    family = far_family(code, 'realizable', 0.2)
    assert len(family) == 16
    assert all(spec.n == 20 for spec in family.specs)
    pairwise = [composed_kl(a, b) for i, a in enumerate(family.specs) for b in family.specs[i + 1:]]
    assert family.max_kl == pytest.approx(max(pairwise))
    assert min(pairwise) >= 4 * 0.2 / 20 - 1e-12
    # ε/n 척도에서 최대 KL은 ε 이하
    assert family.max_kl <= 0.2 + 1e-12


def test_instance_to_dict():
    payload = RealizableBlock(0.1).to_dict(1)
    assert set(payload) == {'kind', 'epsilon', 'n', 'bits', 'mean', 'cov'}
    assert payload['kind'] == 'realizable'
    assert payload['bits'] == [1]
    assert payload['cov'] == [[1.0, 0.0, np.sqrt(0.1)], [0.0, 2.0, 1.0], [np.sqrt(0.1), 1.0, 2.1]]

    assert MiTestPair(0.3).to_dict(0)['bits'] == [0]
    spec = BlockSpec('nonrealizable', (0, 1), 0.2)
    payload = spec.to_dict()
    assert payload['bits'] == [0, 1]
    assert len(payload['cov']) == 6
    assert payload['mean'] == [0.0] * 6
