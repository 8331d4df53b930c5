"""Command-line entry point: awtp-pd <command> [options]."""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from ..analysis import BoundsQuery, TrVariant
from ..utils.config_manager import ConfigManager, parse_rational
from ..utils.errors import AwtpPdError
from ..utils.logging_config import configure_logging
from .commands import (
    EXIT_BOUND_VIOLATED,
    EXIT_CONFIG_ERROR,
    cmd_bounds,
    cmd_export_smt,
    cmd_ext_check,
    cmd_hash_check,
    cmd_run,
    cmd_secrecy,
    parse_message_space,
)
from .models import ExperimentConfig, OutputFormat
from .writers import write_table

logger = logging.getLogger(__name__)


def _int_list(value: str) -> List[int]:
    return [int(v) for v in value.split(',') if v.strip()]


def _add_output_options(parser: argparse.ArgumentParser):
    parser.add_argument('--output', dest='output_path', help='Result file (default: standard output)')
    parser.add_argument('--format', choices=[f.value for f in OutputFormat], help='Result format')


def _add_experiment_options(parser: argparse.ArgumentParser):
    parser.add_argument('--config', dest='config_file', help='Structured config file (JSON or YAML)')
    parser.add_argument('--N', type=int, help='Codeword length')
    parser.add_argument('--u', type=int, help='Field symbols per component')
    parser.add_argument('--q', type=int, help='Prime field size (relaxes q > 2uN^2)')
    parser.add_argument('--rho-r', dest='rho_r', help='Read rate, e.g. 1/2')
    parser.add_argument('--rho-w', dest='rho_w', help='Write rate, e.g. 1/2')
    parser.add_argument('--rho', help='Union rate |S_r u S_w|/N')
    parser.add_argument('--message-length', dest='message_length', type=int,
                        help='Message length l (relaxes the secrecy condition)')
    parser.add_argument('--adversary', choices=['passive', 'adv1_uniform', 'substitution'])
    parser.add_argument('--read-set', dest='read_set', help="Comma-separated indices or 'random'")
    parser.add_argument('--write-set', dest='write_set', help="Comma-separated indices or 'random'")
    parser.add_argument('--seed', type=int, help='Master seed')
    parser.add_argument('--representation', choices=['awtp', 'smt'], help='Measure through AWTP or SMT wires')
    parser.add_argument('--timing', action='store_true', default=None, help='Include wall time in results')
    _add_output_options(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='awtp-pd',
        description='Simulator for message transmission over adversarial wiretap channels with public discussion',
    )
    parser.add_argument('--ini', help='Path to config.ini')
    parser.add_argument('--log-level', dest='log_level', help='Logging level (DEBUG, INFO, WARNING, ...)')
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', help='Monte Carlo reliability experiment')
    _add_experiment_options(run)
    run.add_argument('--trials', type=int, help='Number of trials')
    run.add_argument('--transcript-out', dest='transcript_out', help='Write the trial-0 transcript here')

    secrecy = sub.add_parser('secrecy', help='Exhaustive secrecy verification')
    _add_experiment_options(secrecy)
    secrecy.add_argument('--m1', help='First message, comma-separated field elements')
    secrecy.add_argument('--m2', help='Second message, comma-separated field elements')
    secrecy.add_argument('--adversary-seed', dest='adversary_seed', type=int, help="Seed for the adversary's fixed coins")
    secrecy.add_argument('--budget', type=int, help='Maximum number of enumerated executions')

    bounds = sub.add_parser('bounds', help='Evaluate analytic bounds')
    bounds.add_argument('--rho', help='rho = |S_r u S_w|/N')
    bounds.add_argument('--rho-r', dest='rho_r', default='0')
    bounds.add_argument('--rho-w', dest='rho_w', default='0')
    bounds.add_argument('--epsilon', type=float, default=0.0)
    bounds.add_argument('--delta', type=float, default=0.0)
    bounds.add_argument('--n', type=float, default=0.0, help='Total public-discussion bits')
    bounds.add_argument('--sigma', type=float, default=2.0, help='|Sigma| or wire alphabet size')
    bounds.add_argument('--N', type=int)
    bounds.add_argument('--t', type=int)
    bounds.add_argument('--M', help="|M|: a number, '2^k' or 'inf'")
    bounds.add_argument('--xi', type=float)
    bounds.add_argument('--tr', choices=[v.value for v in TrVariant], help='Only this transmission-rate bound')
    bounds.add_argument('--comparison', '--table1', dest='comparison', action='store_true',
                        help='Emit the SMT-PD comparison rows')
    bounds.add_argument('--two-round', dest='two_round', action='store_true',
                        help='Minimum delta of a two-round protocol')
    _add_output_options(bounds)

    export = sub.add_parser('export-smt', help='Convert a restricted AWTP transcript to a wire transcript')
    export.add_argument('transcript', help='AWTP transcript file')
    export.add_argument('--out', required=True, help='Wire transcript file to write')
    _add_output_options(export)

    hash_check = sub.add_parser('hash-check', help='Exhaustive Delta-universality check')
    hash_check.add_argument('--q', type=_int_list, default=[5, 7, 11], help='Comma-separated primes')
    hash_check.add_argument('--lengths', type=_int_list, default=[1, 2, 3])
    _add_output_options(hash_check)

    ext_check = sub.add_parser('ext-check', help='Exhaustive zero-error extractor check')
    ext_check.add_argument('--q', type=_int_list, default=[5, 7, 11], help='Comma-separated primes')
    ext_check.add_argument('--max-n', dest='max_n', type=int, default=3)
    _add_output_options(ext_check)

    return parser


EXPERIMENT_KEYS = (
    'N', 'u', 'q', 'rho_r', 'rho_w', 'rho', 'message_length', 'adversary', 'read_set', 'write_set',
    'seed', 'representation', 'timing', 'output_path', 'format', 'trials', 'transcript_out',
    'm1', 'm2', 'adversary_seed', 'budget',
)


def dispatch(args: argparse.Namespace, config_manager: ConfigManager) -> int:
    output_path = getattr(args, 'output_path', None) or config_manager.get_output_path()
    fmt = getattr(args, 'format', None) or config_manager.get_output_format()

    if args.command in ('run', 'secrecy'):
        overrides = {key: getattr(args, key, None) for key in EXPERIMENT_KEYS}
        experiment = ExperimentConfig.from_sources(config_manager, args.config_file, overrides)
        command = cmd_run if args.command == 'run' else cmd_secrecy
        records, code = command(experiment, config_manager)
        write_table(records, experiment.output_path, experiment.format)
        return code

    if args.command == 'bounds':
        query = BoundsQuery(
            rho_r=float(parse_rational(args.rho_r)),
            rho_w=float(parse_rational(args.rho_w)),
            rho=None if args.rho is None else float(parse_rational(args.rho)),
            epsilon=args.epsilon,
            delta=args.delta,
            n=args.n,
            sigma_size=args.sigma,
            N=args.N,
            t=args.t,
            message_space_size=None if args.M is None else parse_message_space(args.M),
            xi=args.xi,
        )
        records, code = cmd_bounds(query, comparison=args.comparison, two_round=args.two_round, tr_variant=args.tr)
    elif args.command == 'export-smt':
        records, code = cmd_export_smt(args.transcript, args.out)
    elif args.command == 'hash-check':
        records, code = cmd_hash_check(args.q, args.lengths)
    else:
        records, code = cmd_ext_check(args.q, args.max_n)

    write_table(records, output_path, fmt)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config_manager = ConfigManager(args.ini)
    configure_logging(config_manager, args.log_level.upper() if args.log_level else None)

    try:
        return dispatch(args, config_manager)
    except (ValidationError, ValueError) as e:
        logger.error(f"❌ Configuration error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except AwtpPdError as e:
        logger.error(f"❌ Execution aborted: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BOUND_VIOLATED


if __name__ == '__main__':
    sys.exit(main())
