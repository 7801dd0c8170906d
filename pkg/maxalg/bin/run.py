# -*- coding: utf-8 -*-

"""
The purpose of this module is to provide an executable for the max-convolution
algebra toolbox.

During installation of the toolbox, python creates an entry point to the `main`
function of this module. See :ref:`running` for how to call this executable.
"""

import argparse
import sys


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', dest='config_filepath',
                        help='Path to a configuration file overriding the '
                             'defaults.')
    common.add_argument('--grid', metavar='LO:HI:N',
                        help='Evaluation grid of N points on [LO, HI].')
    common.add_argument('--log-grid', action='store_true',
                        help='Space the --grid points logarithmically.')
    common.add_argument('--points', metavar='P1,P2,...',
                        help='Explicit evaluation points.')
    common.add_argument('--format', choices=['csv', 'json'],
                        help='Output format.')
    common.add_argument('--out', metavar='PATH',
                        help='Write data to PATH instead of stdout.')
    common.add_argument('-q', '--quiet', action='store_true',
                        help='Suppress progress messages.')
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='maxalg',
        description='Evaluate, compare and take limits of distribution '
                    'functions under classical, free and Boolean '
                    'max-convolution.')
    subparsers = parser.add_subparsers(dest='subcommand', metavar='COMMAND')
    subparsers.required = True

    table = subparsers.add_parser(
        'table', parents=[common], help='Tabulate an expression.')
    table.add_argument('expression')

    dist = subparsers.add_parser(
        'dist', parents=[common],
        help='Sup and Levy distance between two expressions.')
    dist.add_argument('expression_a')
    dist.add_argument('expression_b')
    dist.add_argument('--resolution', type=float,
                      help='Lattice spacing of the Levy distance.')

    limit = subparsers.add_parser(
        'limit', parents=[common],
        help='Run a built-in scenario or a JSON experiment file.')
    limit.add_argument('target', nargs='?',
                       help='Scenario name or path to a JSON document.')
    limit.add_argument('--list', action='store_true', dest='list_scenarios',
                       help='List the built-in scenarios.')
    limit.add_argument('--threshold', type=float)
    limit.add_argument('--schedule', metavar='N1,N2,...')
    limit.add_argument('--resolution', type=float)
    limit.add_argument('--no-levy', action='store_false', dest='levy',
                       help='Skip Levy distances.')
    limit.add_argument('--csv-dir', metavar='DIR',
                       help='Write the per-index tables to DIR.')

    tails = subparsers.add_parser(
        'tails', parents=[common],
        help='Tail index estimates and domain of attraction.')
    tails.add_argument('expression')
    tails.add_argument('--probes', metavar='P1,P2,...')
    tails.add_argument('--t', type=float, help='Ratio parameter t > 1.')

    roots = subparsers.add_parser(
        'roots', parents=[common],
        help='Tabulate the free and Boolean n-th roots of an expression.')
    roots.add_argument('expression')
    roots.add_argument('--n', type=int, default=2)

    check = subparsers.add_parser(
        'check', parents=[common], help='Run the identity suite.')
    check.add_argument('--inject-fault', metavar='NAME',
                       help='Make the named identity fail (test hook).')
    return parser


def _cli_config(args):
    from maxalg.bin.utils import CliConfig, parse_grid, parse_schedule, \
        update_setup
    from maxalg.utils.utils import parse_number_list

    expressions = [getattr(args, key) for key in
                   ('expression', 'expression_a', 'expression_b')
                   if getattr(args, key, None) is not None]
    return CliConfig(
        args.subcommand, expressions,
        grid=None if args.grid is None else parse_grid(args.grid),
        log_grid=args.log_grid,
        points=None if args.points is None else parse_number_list(
            args.points),
        out=args.out, format=args.format,
        threshold=getattr(args, 'threshold', None),
        schedule=None if getattr(args, 'schedule', None) is None else
        parse_schedule(args.schedule),
        probes=None if getattr(args, 'probes', None) is None else
        parse_number_list(args.probes),
        t=getattr(args, 't', None), n=getattr(args, 'n', 2),
        resolution=getattr(args, 'resolution', None),
        target=getattr(args, 'target', None),
        list_scenarios=getattr(args, 'list_scenarios', False),
        csv_dir=getattr(args, 'csv_dir', None),
        levy=getattr(args, 'levy', True),
        inject_fault=getattr(args, 'inject_fault', None),
        quiet=args.quiet, settings=update_setup(args.config_filepath))


def main(argv=None):
    """Entry point for running the toolbox.

    Returns the exit code: 0 on success, 1 if a check or experiment fails, 2
    for invalid input, 3 for domain and class errors and 4 for I/O errors.

    Note
    ----

    There is no need to call this function directly, because python sets up
    an executable during :ref:`installation` that can be called from
    terminal.
    """

    from maxalg.bin.utils import run_command
    from maxalg.utils.errors import MaxAlgError
    from maxalg.utils.utils import echo

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    try:
        return run_command(_cli_config(args))
    except MaxAlgError as e:
        echo("maxalg: {}\n".format(e), True)
        return e.exit_code
    except OSError as e:
        echo("maxalg: {}\n".format(e), True)
        return 4


if __name__ == '__main__':
    sys.exit(main())
