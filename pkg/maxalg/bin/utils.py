# -*- coding: utf-8 -*-
"""
This module bundles the commands of the max-convolution algebra toolbox.

Every command takes a :py:class:`CliConfig`, writes data to stdout or to the
``--out`` path and progress messages to stderr, and returns the exit code.

Important functions:

.. autosummary::
    :nosignatures:

    update_setup
    CliConfig
    cmd_table
    cmd_dist
    cmd_limit
    cmd_tails
    cmd_roots
    cmd_check
"""

import json
import os
import sys
import warnings
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from maxalg.distributions.utils import EvalGrid, bool_nth_root, \
    default_grid, free_nth_root, levy_distance, sup_distance
from maxalg.parsing.elaborate import compile_expression
from maxalg.simulation.identities import run_identities
from maxalg.simulation.scenarios import SCENARIOS, describe_scenarios, \
    run_experiment
from maxalg.simulation.sequences import KnSchedule
from maxalg.tails.utils import classify_domain
from maxalg.utils.errors import ClassError, ConfigError, DomainError, \
    MaxAlgError
from maxalg.utils.utils import DEFAULTS_PATH, config_string_to_list, \
    config_string_to_set_of_strings, echo, load_config, parse_number_list, \
    to_csv, to_json

JSON = 'json'
CSV = 'csv'


def _get(config, getter, section, option):
    try:
        return getattr(config, getter)(section, option)
    except ValueError:
        raise ConfigError("Option {} in section [{}] has an invalid value "
                          "{!r}.".format(option, section,
                                         config.get(section, option)))


def update_setup(config_filepath=None):
    """Update default settings with user settings and check they are valid.

    Load settings from configuration file at ``config_filepath``, and check
    that parameter choices are valid. Non-specified settings are filled in
    with defaults.
    """

    config = load_config(DEFAULTS_PATH)

    if config_filepath is not None:
        # config.read does not complain about missing files.
        if not os.path.isfile(config_filepath):
            raise ConfigError("Config filepath {} does not exist.".format(
                config_filepath))
        config.read(config_filepath)

    formats = config_string_to_set_of_strings(
        config.get('restrictions', 'formats'))
    output_format = config.get('output', 'format')
    if output_format not in formats:
        raise ConfigError("Output format {} not supported. Choose from "
                          "{}.".format(output_format, formats))
    _get(config, 'getint', 'output', 'verbose')

    if _get(config, 'getint', 'grid', 'num_points') < 2:
        raise ConfigError("[grid] num_points must be at least 2.")
    if not _get(config, 'getfloat', 'grid', 'lower_bound') < \
            _get(config, 'getfloat', 'grid', 'upper_bound'):
        raise ConfigError("[grid] lower_bound must be below upper_bound.")
    for section, option in [('grid', 'exclusion_radius'),
                            ('limit', 'threshold'),
                            ('limit', 'levy_resolution'),
                            ('tails', 'residual_threshold')]:
        if not _get(config, 'getfloat', section, option) > 0:
            raise ConfigError("[{}] {} must be positive.".format(section,
                                                                option))
    if _get(config, 'getint', 'limit', 'num_workers') < 1:
        raise ConfigError("[limit] num_workers must be at least 1.")
    if not _get(config, 'getfloat', 'tails', 't') > 1:
        raise ConfigError("[tails] t must be larger than 1.")

    try:
        KnSchedule(tuple(config_string_to_list(
            config.get('limit', 'schedule'))))
    except MaxAlgError as e:
        raise ConfigError("[limit] schedule is invalid: {}".format(e))
    probes = config_string_to_list(config.get('tails', 'probes'))
    if not probes or np.any(np.diff(probes) <= 0) or min(probes) <= 0:
        raise ConfigError("[tails] probes must be positive and increasing.")

    return config


def parse_grid(text):
    """Parse ``lo:hi:n``."""

    parts = text.split(':')
    if len(parts) != 3:
        raise ConfigError("Grid must be given as lo:hi:n, got {!r}.".format(
            text))
    try:
        lo, hi = float(parts[0]), float(parts[1])
        n = int(parts[2])
    except ValueError:
        raise ConfigError("Grid must be given as lo:hi:n, got {!r}.".format(
            text))
    return lo, hi, n


def parse_schedule(text):
    """Parse ``n1,n2,...`` into a list of integers."""

    values = parse_number_list(text)
    if not values or any(v != int(v) for v in values):
        raise ConfigError("Schedule must list integers, got {!r}.".format(
            text))
    return [int(v) for v in values]


@dataclass
class CliConfig:
    """Options of one command line invocation.

    Values not given on the command line are taken from ``settings``, the
    result of :py:func:`update_setup`.
    """

    subcommand: str
    expressions: List[str] = field(default_factory=list)
    grid: Optional[Tuple[float, float, int]] = None
    log_grid: bool = False
    points: Optional[List[float]] = None
    out: Optional[str] = None
    format: Optional[str] = None
    threshold: Optional[float] = None
    schedule: Optional[List[int]] = None
    probes: Optional[List[float]] = None
    t: Optional[float] = None
    n: int = 2
    resolution: Optional[float] = None
    target: Optional[str] = None
    list_scenarios: bool = False
    csv_dir: Optional[str] = None
    levy: bool = True
    inject_fault: Optional[str] = None
    quiet: bool = False
    settings: object = None

    def __post_init__(self):
        if self.settings is None:
            self.settings = update_setup()
        if self.grid is not None:
            lo, hi, n = self.grid
            if not lo < hi:
                raise ConfigError("Grid needs lo < hi, got {} and {}.".format(
                    lo, hi))
            if n < 2:
                raise ConfigError("Grid needs at least 2 points.")
            if self.log_grid and not lo > 0:
                raise ConfigError("A logarithmic grid needs lo > 0.")
        if self.points is not None and len(self.points) < 1:
            raise ConfigError("--points needs at least one number.")
        if self.threshold is not None and not self.threshold > 0:
            raise ConfigError("Threshold must be positive.")
        if self.resolution is not None and not self.resolution > 0:
            raise ConfigError("Resolution must be positive.")
        if self.n < 1:
            raise ConfigError("Root index must be at least 1.")
        if self.t is not None and not self.t > 1:
            raise ConfigError("Tail ratio parameter t must be larger than 1.")
        if self.format is not None:
            formats = config_string_to_set_of_strings(
                self.settings.get('restrictions', 'formats'))
            if self.format not in formats:
                raise ConfigError("Output format {} not supported. Choose "
                                  "from {}.".format(self.format, formats))

    @property
    def verbose(self):
        return not self.quiet and \
            self.settings.getint('output', 'verbose') > 0

    def output_format(self, default=None):
        if self.format is not None:
            return self.format
        if default is not None:
            return default
        return self.settings.get('output', 'format')

    def make_grid(self, *distributions):
        """The grid given by ``--points`` or ``--grid``, else the default
        grid of ``distributions``."""

        radius = self.settings.getfloat('grid', 'exclusion_radius')
        if self.points is not None:
            return EvalGrid(sorted(set(self.points)), radius)
        if self.grid is not None:
            lo, hi, n = self.grid
            if self.log_grid:
                return EvalGrid.log(lo, hi, n, radius)
            return EvalGrid.linear(lo, hi, n, radius)
        return default_grid(
            *distributions, num=self.settings.getint('grid', 'num_points'),
            exclusion_radius=radius)

    def emit(self, text):
        if self.out is None:
            sys.stdout.write(text + '\n')
            sys.stdout.flush()
        else:
            with open(self.out, 'w') as f:
                f.write(text + '\n')
            echo("Wrote {}.\n".format(self.out), self.verbose)

    def emit_columns(self, header, columns, data=None):
        """Write columns as CSV, or ``data`` (default: header to column
        lists) as JSON."""

        if self.output_format() == JSON:
            if data is None:
                data = {h: np.asarray(c).tolist()
                        for h, c in zip(header, columns)}
            self.emit(to_json(data))
        else:
            self.emit(to_csv(header, columns))


def cmd_table(cfg):
    """Evaluate an expression on the grid: rows ``(x, F(x))``."""

    F = compile_expression(cfg.expressions[0])
    grid = cfg.make_grid(F)
    cfg.emit_columns(('x', 'F'), (grid.points, F(grid.points)))
    return 0


def cmd_dist(cfg):
    """Sup and Levy distance between two expressions."""

    F = compile_expression(cfg.expressions[0])
    G = compile_expression(cfg.expressions[1])
    grid = cfg.make_grid(F, G)
    resolution = cfg.resolution
    if resolution is None:
        resolution = cfg.settings.getfloat('limit', 'levy_resolution')
    result = {'sup_distance': sup_distance(F, G, grid),
              'levy_distance': levy_distance(F, G, resolution,
                                             grid=grid),
              'grid_points': len(grid)}
    if cfg.output_format(JSON) == CSV:
        cfg.emit(to_csv(('sup_distance', 'levy_distance'),
                        ([result['sup_distance']],
                         [result['levy_distance']])))
    else:
        cfg.emit(to_json(result))
    return 0


def _load_experiment(target):
    if target in SCENARIOS:
        return SCENARIOS[target], target
    with open(target) as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError("Malformed JSON in {}: {}".format(target, e))
    name = os.path.splitext(os.path.basename(target))[0]
    return document, name


def cmd_limit(cfg):
    """Run a built-in scenario or a JSON experiment document.

    Returns 1 if the experiment does not pass, e.g. when a limit theorem's
    implication fails.
    """

    if cfg.list_scenarios:
        rows = describe_scenarios()
        if cfg.output_format(JSON) == JSON:
            cfg.emit(to_json([{'name': name, 'check': check,
                               'description': description}
                              for name, check, description in rows]))
        else:
            cfg.emit('\n'.join('{}\t{}\t{}'.format(*row) for row in rows))
        return 0
    if cfg.target is None:
        raise ConfigError("limit needs a scenario name or an experiment "
                          "file; see --list.")
    if cfg.output_format(JSON) != JSON:
        raise ConfigError("limit writes JSON; use --csv-dir for tables.")

    document, name = _load_experiment(cfg.target)
    if not isinstance(document, dict):
        raise ConfigError("An experiment document must be a JSON object.")
    settings = cfg.settings
    convolutions = config_string_to_set_of_strings(
        settings.get('restrictions', 'convolutions'))
    requested = document.get('convolutions', [])
    if not isinstance(requested, list):
        raise ConfigError("'convolutions' must be a list of names.")
    unknown = sorted(set(requested) - convolutions)
    if unknown:
        raise ConfigError("Convolution {} not supported. Choose from "
                          "{}.".format(unknown[0], convolutions))
    threshold = cfg.threshold
    if threshold is None and 'threshold' not in document:
        threshold = settings.getfloat('limit', 'threshold')
    indices = cfg.schedule
    if indices is None and 'schedule' not in document:
        indices = config_string_to_list(settings.get('limit', 'schedule'))
    schedule = None
    if indices is not None:
        schedule = KnSchedule(tuple(indices),
                              float(document.get('k_scale', 1.)),
                              float(document.get('k_exponent', 1.)))
    grid = None
    if cfg.points is not None or cfg.grid is not None:
        grid = cfg.make_grid()
    resolution = cfg.resolution
    if resolution is None:
        resolution = settings.getfloat('limit', 'levy_resolution')
    if cfg.csv_dir is not None:
        os.makedirs(cfg.csv_dir, exist_ok=True)

    echo("Running experiment {}...\n".format(name), cfg.verbose)
    result = run_experiment(
        document, name, threshold, schedule, grid, cfg.levy,
        levy_resolution=resolution,
        num_workers=settings.getint('limit', 'num_workers'),
        csv_dir=cfg.csv_dir)
    cfg.emit(to_json(result))
    for report in result['reports']:
        echo("{}: {}, final distance {:.3g}\n".format(
            report.convolution, report.verdict, report.final_distance),
            cfg.verbose)
    if not result['passed']:
        echo("Experiment {} did not pass.\n".format(name), True)
        return 1
    return 0


def cmd_tails(cfg):
    """Tail index estimates and domain classification."""

    F = compile_expression(cfg.expressions[0])
    settings = cfg.settings
    probes = cfg.probes
    if probes is None:
        probes = config_string_to_list(settings.get('tails', 'probes'))
    t = cfg.t if cfg.t is not None else settings.getfloat('tails', 't')
    report = classify_domain(
        F, t, probes, settings.getfloat('tails', 'residual_threshold'))
    if cfg.output_format(JSON) == CSV:
        cfg.emit(to_csv(*report.to_columns()))
    else:
        cfg.emit(to_json(report))
    echo("{}\n".format(report.classification), cfg.verbose)
    return 0


def cmd_roots(cfg):
    """Tabulate ``F`` with its free and Boolean ``n``-th roots.

    A root that does not exist for ``F`` is skipped with a warning.
    """

    F = compile_expression(cfg.expressions[0])
    header = ['x', 'F']
    roots = []
    for name, construct in [('free_root', free_nth_root),
                            ('bool_root', bool_nth_root)]:
        try:
            roots.append(construct(F, cfg.n))
            header.append(name)
        except (DomainError, ClassError) as e:
            warnings.warn("Skipping {}: {}".format(name, e), RuntimeWarning)
    grid = cfg.make_grid(F)
    x = grid.points
    cfg.emit_columns(header, [x, F(x)] + [G(x) for G in roots])
    return 0


def cmd_check(cfg):
    """Run the identity suite; returns 1 if any identity fails."""

    echo("Running identity suite...\n", cfg.verbose)
    results = run_identities(inject_fault=cfg.inject_fault)
    failed = [r.name for r in results if not r.passed]
    cfg.emit(to_json({'passed': not failed, 'failed': failed,
                      'identities': results}))
    if failed:
        echo("Failed identities: {}\n".format(', '.join(failed)), True)
        return 1
    echo("All {} identities passed.\n".format(len(results)), cfg.verbose)
    return 0


COMMANDS = {'table': cmd_table, 'dist': cmd_dist, 'limit': cmd_limit,
            'tails': cmd_tails, 'roots': cmd_roots, 'check': cmd_check}


def run_command(cfg):
    """Dispatch ``cfg.subcommand``."""

    return COMMANDS[cfg.subcommand](cfg)
