# To run, go up one directory and run python -m defect_fcs.main --help

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

import numpy as np

from .dataset import read_dataset, write_dataset
from .harness.analytic_runner import write_analytic_outputs
from .harness.collapse import collapse
from .harness.effective_runner import write_effective_outputs
from .harness.gnuplot import write_gnuplot_script
from .harness.lmg_runner import run_lmg
from .harness.sweep_spec import RunKind, SweepSpec
from .harness.validator import Validator
from .run_config import RunConfig, RunConfigBuilderFromFile, parse_float_list, parse_int_list, write_run_config

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_VALIDATION_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_NUMERICAL_FAILURE = 3

# (x column, y column, group column) of the emitted gnuplot script per subcommand
GNUPLOT_AXES = {
    'effective': ('t_over_tau', 'w_irr', 'tau'),
    'lmg': ('t_over_tau', 'defect_density', 'n_over_tau'),
    'analytic': ('k', 'prob', 'eta'),
    'collapse': ('n_over_tau', 'final_spread', None),
}


class RngConsultedError(ArithmeticError):
    pass


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--config', type=Path, help='INI config file; flags given here override it')
    parser.add_argument('--out', type=Path, help='Output path (default: from config, else results.csv)')
    parser.add_argument(
        '--write-config', dest='write_config', type=Path, help='Also write the resolved config to this INI file'
    )
    parser.add_argument('--jobs', type=int, help='Number of sweep points to run in parallel')
    parser.add_argument(
        '--seedless',
        default=False,
        action='store_true',
        help='Fail if any global random number generator is consulted (default: %(default)s)',
    )
    parser.add_argument(
        '--gnuplot',
        default=False,
        action='store_true',
        help='Also write a gnuplot script next to the output (default: %(default)s)',
    )
    parser.add_argument(
        '--log-level', default='info', choices=('debug', 'info'), help='Log level (default: %(default)s)'
    )


def add_sweep_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--eta', dest='etas', type=parse_float_list, help='Comma separated eta values')
    parser.add_argument('--tau', dest='taus', type=parse_float_list, help='Comma separated tau values')
    parser.add_argument('--omega-c', dest='omega_cs', type=parse_float_list, help='Comma separated gap floors')
    parser.add_argument('--delta', dest='deltas', type=parse_float_list, help='Comma separated drive amplitudes')


def parse_command_line_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description='Full counting statistics of defects after slow critical quenches')
    subparsers = parser.add_subparsers(dest='command', required=True)

    effective_parser = subparsers.add_parser('effective', help='Sweep the effective oscillator model')
    add_common_arguments(effective_parser)
    add_sweep_arguments(effective_parser)

    lmg_parser = subparsers.add_parser('lmg', help='Sweep exact LMG quenches')
    add_common_arguments(lmg_parser)
    lmg_parser.add_argument('--n-sites', dest='n_sites', type=parse_int_list, help='Comma separated system sizes')
    lmg_parser.add_argument(
        '--n-over-tau', dest='n_over_taus', type=parse_float_list, help='Comma separated N/tau values'
    )
    lmg_parser.add_argument('--samples', type=int, help='Sample times per quench')

    analytic_parser = subparsers.add_parser('analytic', help='Tabulate the negative-binomial defect-pair law')
    add_common_arguments(analytic_parser)
    analytic_parser.add_argument(
        '--eta', dest='analytic_etas', type=parse_float_list, help='Comma separated eta values (default: 1,10,100)'
    )
    analytic_parser.add_argument('--k-max', dest='k_max', type=int, help='Largest pair number to tabulate')
    analytic_parser.add_argument(
        '--baseline-sites', dest='baseline_sites', type=int, help='Also export the binomial baseline over L domains'
    )

    collapse_parser = subparsers.add_parser('collapse', help='Measure N/tau collapse of LMG datasets')
    add_common_arguments(collapse_parser)
    collapse_parser.add_argument('inputs', nargs='+', type=Path, help='CSV files written by the lmg subcommand')
    collapse_parser.add_argument('--time-exponent', dest='time_exponent', type=float, help='x = (t/tau) N^a')
    collapse_parser.add_argument(
        '--density-exponent', dest='density_exponent', type=float, help='y = defect_density N^b'
    )

    validate_parser = subparsers.add_parser('validate', help='Run the acceptance suite')
    add_common_arguments(validate_parser)
    validate_parser.add_argument(
        '--criteria', type=parse_int_list, help='Comma separated criterion numbers (default: all)'
    )
    return parser.parse_args(argv)


def build_run_config(args: argparse.Namespace) -> RunConfig:
    run_config = RunConfig() if args.config is None else RunConfigBuilderFromFile(args.config).build_run_config()
    override_names = (
        'out',
        'jobs',
        'etas',
        'taus',
        'omega_cs',
        'deltas',
        'n_sites',
        'n_over_taus',
        'samples',
        'analytic_etas',
        'k_max',
        'baseline_sites',
        'time_exponent',
        'density_exponent',
    )
    overrides = {name: getattr(args, name) for name in override_names if hasattr(args, name)}
    return run_config.with_overrides(**overrides)


def run_command(args: argparse.Namespace, run_config: RunConfig) -> int:
    out = run_config.out
    if args.write_config is not None:
        logger.info('Wrote config %s', write_run_config(args.write_config, run_config))
    if args.command == 'validate':
        selected = None if args.criteria is None else set(args.criteria)
        validator = Validator(run_config, selected)
        results = validator.run_validation()
        if args.out is not None:
            validator.write_report(results, out)
        return EXIT_SUCCESS if all(result.passed for result in results) else EXIT_VALIDATION_FAILURE

    if args.command == 'effective':
        write_effective_outputs(SweepSpec.from_run_config(RunKind.EFFECTIVE, run_config), run_config)
    elif args.command == 'lmg':
        write_dataset(out, run_lmg(SweepSpec.from_run_config(RunKind.LMG, run_config), run_config))
    elif args.command == 'analytic':
        write_analytic_outputs(SweepSpec.from_run_config(RunKind.ANALYTIC, run_config), run_config)
    elif args.command == 'collapse':
        datasets = [read_dataset(path) for path in args.inputs]
        report = collapse(datasets, run_config.time_exponent, run_config.density_exponent, run_config.grid_points)
        write_dataset(out, report.to_dataset())

    if args.gnuplot:
        x_column, y_column, group_column = GNUPLOT_AXES[args.command]
        script_path = write_gnuplot_script(out, x_column, y_column, group_column)
        logger.info('Wrote gnuplot script %s', script_path)
    return EXIT_SUCCESS


def get_numpy_rng_fingerprint() -> tuple[bytes, int, int, float]:
    _, keys, position, has_gauss, cached_gaussian = np.random.get_state(legacy=True)
    return keys.tobytes(), position, has_gauss, cached_gaussian


def run_seedless(args: argparse.Namespace, run_config: RunConfig) -> int:
    """Runs the command and checks that neither global random number generator changed state."""
    numpy_state = get_numpy_rng_fingerprint()
    python_state = random.getstate()
    exit_code = run_command(args, run_config)
    if random.getstate() != python_state or get_numpy_rng_fingerprint() != numpy_state:
        msg = 'A global random number generator was consulted during a --seedless run'
        raise RngConsultedError(msg)
    return exit_code


def run(args: argparse.Namespace) -> int:
    try:
        run_config = build_run_config(args)
        if args.seedless:
            return run_seedless(args, run_config)
        return run_command(args, run_config)
    except ValueError:
        logger.exception('Input error')
        return EXIT_INPUT_ERROR
    except ArithmeticError:
        logger.exception('Numerical failure')
        return EXIT_NUMERICAL_FAILURE


def main(argv: list[str] | None = None) -> int:
    args = parse_command_line_args(argv)
    log_level = {'debug': logging.DEBUG, 'info': logging.INFO}[args.log_level]
    logging.basicConfig(
        level=log_level,
        format='%(asctime)s.%(msecs)03d %(levelname)s %(filename)s:%(lineno)s:%(funcName)s() - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
    )
    return run(args)


if __name__ == '__main__':
    sys.exit(main())
