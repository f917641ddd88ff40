"""
명령행 인터페이스

    gtree estimate-mi --data batch.csv [--x 0 --z 1] [--given 2] [--center]
    gtree test-mi --data batch.csv --eps 0.1
    gtree test-cmi --data batch.csv --eps 0.1
    gtree chow-liu --data batch.csv [--center] [--out tree.json]
    gtree gen-instance --kind realizable --eps 0.1 --n 1 --seed 7 --out inst.json
    gtree exp eps-vs-m --config cfg.json --out run.csv
    gtree exp mi-convergence --kind dependent --out conv.csv
    gtree exp recovery --eps 0.1 --out rec.csv
    gtree baseline glasso --data batch.csv --lam 0.1

종료 코드: 0 성공, 2 사용법 오류, 1 실행 오류
"""

import argparse
import hashlib
import json
import sys
from typing import Any, Dict, Optional, Sequence

from ..baselines.glasso import glasso_tree
from ..estimators.empirical import (
    batch_columns,
    center_by_differencing,
    empirical_cmi,
    empirical_mi,
)
from ..estimators.testers import CmiTester, MiTester
from ..instances.blocks import BlockSpec, block_pair, product_distribution
from ..instances.pairs import AdditiveEstimationPair, MiTestPair
from ..models.gaussian import GaussianDistribution
from ..structure.chow_liu import chow_liu
from ..utils.errors import GaussianTreeError
from ..utils.log import configure_logging, get_logger
from .config import CONVERGENCE_KINDS, INSTANCE_KINDS, ExperimentConfig
from .harness import eps_vs_m_star, mi_convergence_curve, recovery_comparison
from .io import read_batch_csv, write_batch_csv, write_json, write_table

logger = get_logger(__name__)

class UsageError(ValueError):
    """인자 조합이 잘못되었을 때 (종료 코드 2)"""


GEN_KINDS = ('realizable', 'nonrealizable', 'mi-test', 'additive', 'product')


def _emit(payload: Any, out: Optional[str]) -> None:
    if out:
        write_json(out, payload)
    else:
        print(json.dumps(payload, sort_keys=True))


def _load(args) -> Any:
    batch = read_batch_csv(args.data)
    return center_by_differencing(batch) if getattr(args, 'center', False) else batch


def _payload_hash(payload: Dict) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode('utf-8')).hexdigest()


def cmd_estimate_mi(args) -> int:
    batch = _load(args)
    if args.given is None:
        x, z = batch_columns(batch, args.x, args.z)
        est = empirical_mi(x, z)
        _emit({'rho_hat': est.rho_hat, 'i_hat': est.i_hat, 'm': est.m}, args.out)
    else:
        x, y, z = batch_columns(batch, args.x, args.z, args.given)
        est = empirical_cmi(x, y, z)
        _emit({'alpha_hat': est.alpha_hat, 'beta_hat': est.beta_hat, 'gamma_hat': est.gamma_hat,
               'rho_tilde': est.rho_tilde, 'i_hat': est.i_hat, 'm': est.m}, args.out)
    return 0


def cmd_test_mi(args) -> int:
    tester = MiTester(args.x, args.z, args.eps, center=args.center)
    _emit(tester.test(read_batch_csv(args.data)).to_dict(), args.out)
    return 0


def cmd_test_cmi(args) -> int:
    tester = CmiTester(args.x, args.y, args.z, args.eps, center=args.center)
    _emit(tester.test(read_batch_csv(args.data)).to_dict(), args.out)
    return 0


def cmd_chow_liu(args) -> int:
    tree = chow_liu(read_batch_csv(args.data), center=args.center)
    _emit(tree.to_json(), args.out)
    return 0


def _instance(args) -> Dict:
    if args.kind == 'product':
        dist = product_distribution(args.dim)
        return {'kind': 'product', 'epsilon': 0.0, 'n': 1, 'bits': [],
                'mean': dist.mean.tolist(), 'cov': dist.cov.tolist()}
    if args.kind in ('mi-test', 'additive'):
        pair = MiTestPair(args.eps) if args.kind == 'mi-test' else AdditiveEstimationPair(args.eps)
        return pair.to_dict(args.which if args.which in pair.labels else pair.labels[-1])
    if args.bits:
        spec = BlockSpec(args.kind, tuple(int(c) for c in args.bits), args.eps,
                         args.n if args.n else 0, args.variant)
        return spec.to_dict()
    which = args.which if args.which in (1, 2) else 1
    return block_pair(args.kind, args.eps, args.n or 1, args.variant).to_dict(which)


def cmd_gen_instance(args) -> int:
    payload = _instance(args)
    if args.kind == 'realizable':
        payload['variant'] = args.variant
    _emit(payload, args.out)
    if args.samples:
        if not args.data_out:
            raise ValueError("--samples needs --data-out")
        names = ()
        if len(payload['cov']) % 3 == 0 and args.kind in ('realizable', 'nonrealizable', 'product'):
            names = tuple(f'{v}{b}' for b in range(len(payload['cov']) // 3) for v in 'XYZ')
        dist = GaussianDistribution(payload['mean'], payload['cov'], name=args.kind, names=names)
        batch = dist.sample(args.samples, args.seed)
        write_batch_csv(args.data_out, batch, config_hash=_payload_hash(payload))
    return 0


def _config(args) -> ExperimentConfig:
    base = ExperimentConfig.from_json(args.config) if args.config else ExperimentConfig()
    return base.with_overrides(
        experiment=args.experiment,
        instance=getattr(args, 'instance', None),
        variant=getattr(args, 'variant', None),
        epsilons=tuple(args.eps) if getattr(args, 'eps', None) else None,
        trials=args.trials,
        seed=args.seed,
        m_grid=tuple(args.m_grid) if getattr(args, 'm_grid', None) else None,
        kind=getattr(args, 'kind', None),
        n_jobs=args.n_jobs,
        progress=True if args.progress else None,
    )


def cmd_exp(args) -> int:
    config = _config(args)
    meta = {'seed': config.seed, 'config_hash': config.config_hash()}
    fit = None
    if config.experiment == 'eps-vs-m':
        rows, fit = eps_vs_m_star(config)
        write_table(args.out, ['epsilon', 'm_star'], rows, meta)
    elif config.experiment == 'mi-convergence':
        curve = mi_convergence_curve(config.kind, config.m_grid, config.trials, config.seed,
                                     n_jobs=config.n_jobs, progress=config.progress)
        fit = curve.fit
        write_table(args.out, ['m', 'mean_error', 'variance', 'retries'],
                    [(r.m, r.mean_error, r.variance, r.retries) for r in curve.rows], meta)
    else:
        if len(config.epsilons) != 1:
            raise UsageError(f"exp recovery takes exactly one epsilon, got {list(config.epsilons)}")
        rows = recovery_comparison(config.epsilons[0], config.m_grid, config.trials, config.seed,
                                   lambdas=config.lambdas, variant=config.variant,
                                   n_jobs=config.n_jobs, progress=config.progress)
        write_table(args.out, ['m', 'chow_liu_freq', 'glasso_freq', 'best_lambda'],
                    [(r.m, r.chow_liu_freq, r.glasso_freq, r.best_lambda) for r in rows], meta)
    if fit is not None and args.fit_out:
        write_json(args.fit_out, dict(fit.to_dict(), **meta))
    return 0


def cmd_glasso(args) -> int:
    tree, result = glasso_tree(read_batch_csv(args.data), args.lam, tol=args.tol, max_iter=args.max_iter)
    _emit({
        'theta': result.theta.tolist(),
        'lambda': result.lam,
        'iterations': result.iterations,
        'converged': result.converged,
        'tree': tree.to_json(),
    }, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='gtree', description='Gaussian tree learning toolkit')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('estimate-mi', help='empirical MI (or CMI with --given)')
    p.add_argument('--data', required=True)
    p.add_argument('--x', type=int, default=0)
    p.add_argument('--z', type=int, default=1)
    p.add_argument('--given', type=int)
    p.add_argument('--center', action='store_true')
    p.add_argument('--out')
    p.set_defaults(func=cmd_estimate_mi)

    p = sub.add_parser('test-mi', help='threshold independence test')
    p.add_argument('--data', required=True)
    p.add_argument('--eps', type=float, required=True)
    p.add_argument('--x', type=int, default=0)
    p.add_argument('--z', type=int, default=1)
    p.add_argument('--center', action='store_true')
    p.add_argument('--out')
    p.set_defaults(func=cmd_test_mi)

    p = sub.add_parser('test-cmi', help='threshold conditional independence test')
    p.add_argument('--data', required=True)
    p.add_argument('--eps', type=float, required=True)
    p.add_argument('--x', type=int, default=0)
    p.add_argument('--y', type=int, default=1)
    p.add_argument('--z', type=int, default=2)
    p.add_argument('--center', action='store_true')
    p.add_argument('--out')
    p.set_defaults(func=cmd_test_cmi)

    p = sub.add_parser('chow-liu', help='learn a tree from a sample batch')
    p.add_argument('--data', required=True)
    p.add_argument('--center', action='store_true')
    p.add_argument('--out')
    p.set_defaults(func=cmd_chow_liu)

    p = sub.add_parser('gen-instance', help='write a hard instance as JSON')
    p.add_argument('--kind', choices=GEN_KINDS, required=True)
    p.add_argument('--eps', type=float, default=0.1)
    p.add_argument('--n', type=int, default=0)
    p.add_argument('--which', type=int, default=1)
    p.add_argument('--bits', help='block selection string, e.g. 101')
    p.add_argument('--variant', choices=('main', 'gamma'), default='main')
    p.add_argument('--dim', type=int, default=3)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--samples', type=int, default=0)
    p.add_argument('--data-out')
    p.add_argument('--out')
    p.set_defaults(func=cmd_gen_instance)

    exp = sub.add_parser('exp', help='run an experiment')
    exp_sub = exp.add_subparsers(dest='experiment', required=True)
    for name in ('eps-vs-m', 'mi-convergence', 'recovery'):
        p = exp_sub.add_parser(name)
        p.add_argument('--config')
        p.add_argument('--out', required=True)
        p.add_argument('--fit-out')
        p.add_argument('--trials', type=int)
        p.add_argument('--seed', type=int)
        p.add_argument('--n-jobs', type=int)
        p.add_argument('--progress', action='store_true')
        if name in ('eps-vs-m', 'recovery'):
            p.add_argument('--eps', type=float, nargs='+')
            p.add_argument('--variant', choices=('main', 'gamma'))
        if name == 'eps-vs-m':
            p.add_argument('--instance', choices=INSTANCE_KINDS)
        if name in ('mi-convergence', 'recovery'):
            p.add_argument('--m-grid', type=int, nargs='+')
        if name == 'mi-convergence':
            p.add_argument('--kind', choices=CONVERGENCE_KINDS)
        p.set_defaults(func=cmd_exp)

    baseline = sub.add_parser('baseline', help='run a baseline estimator')
    baseline_sub = baseline.add_subparsers(dest='baseline', required=True)
    p = baseline_sub.add_parser('glasso')
    p.add_argument('--data', required=True)
    p.add_argument('--lam', type=float, required=True)
    p.add_argument('--tol', type=float, default=1e-6)
    p.add_argument('--max-iter', type=int, default=500)
    p.add_argument('--out')
    p.set_defaults(func=cmd_glasso)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    명령 실행

    Parameters
    ----------
    argv : Sequence[str], optional
        인자 목록, 기본값 sys.argv[1:]

    Returns
    -------
    int
        종료 코드
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        logger.error("%s: %s", args.command, exc)
        return 2
    except (GaussianTreeError, OSError, ValueError) as exc:
        logger.error("%s: %s", args.command, exc)
        return 1


if __name__ == '__main__':
    sys.exit(main())
