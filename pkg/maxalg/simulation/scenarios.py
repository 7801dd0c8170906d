# -*- coding: utf-8 -*-
"""
Limit experiments described as JSON documents, and the built-in scenarios.

An experiment document names a sequence, the check to run on it and optional
settings::

    {
      "check": "boolean_classical",
      "sequence": {"kind": "bool_root", "target": "dagum(1, 1)"},
      "schedule": [10, 31, 100, 316, 1000, 3162],
      "threshold": 0.01
    }

See :ref:`formats` for all keys.

.. autosummary::
    :nosignatures:

    SCENARIOS
    CHECKS
    parse_sequence
    run_experiment
    run_scenario
"""

from maxalg.distributions.utils import EvalGrid
from maxalg.parsing.elaborate import compile_expression
from maxalg.simulation.sequences import CP_PRELIMIT, \
    REMARK_TRUNCATED_PARETO, SEQUENCE_KINDS, KnSchedule, SequenceSpec, \
    expected_limit
from maxalg.simulation.utils import conjecture_probe, \
    corollary_classical_free_check, counterexample_remark, run_limit, \
    theorem_boolean_classical_check, theorem_converse_check, \
    theorem_limit_check
from maxalg.utils.errors import ConfigError

CHECKS = ('run', 'limit', 'converse', 'boolean_classical', 'classical_free',
          'counterexample', 'conjecture')

SCENARIOS = {
    'bp-boolean-classical-dagum': {
        'description': "Boolean roots of D_1: classical and Boolean powers "
                       "converge together, to Phi_1 and D_1.",
        'check': 'boolean_classical',
        'sequence': {'kind': 'bool_root', 'target': 'dagum(1, 1)'}},
    'bp-boolean-classical-frechet': {
        'description': "Classical roots of Phi_1: classical limit Phi_1, "
                       "Boolean limit D_1.",
        'check': 'boolean_classical',
        'sequence': {'kind': 'classical_root', 'target': 'frechet(1)'}},
    'bp-boolean-classical-cp': {
        'description': "Compound Poisson pre-limits: classical limit "
                       "cpc(1, Phi_1) and its chi_inv image.",
        'check': 'boolean_classical',
        'sequence': {'kind': 'cp_prelimit', 'lam': 1,
                     'base': 'frechet(1)'}},
    'boolean-free-dagum': {
        'description': "Boolean roots of D_1 converge to D_1 under Boolean "
                       "powers, so their free powers converge to "
                       "bn(D_1, 1) = P_1.",
        'check': 'limit',
        'sequence': {'kind': 'bool_root', 'target': 'dagum(1, 1)'},
        'limit': 'dagum(1, 1)'},
    'boolean-free-dirac': {
        'description': "Boolean roots of the unit step at 1 stay the step "
                       "under every power.",
        'check': 'limit',
        'sequence': {'kind': 'bool_root', 'target': 'dirac(1)'},
        'limit': 'dirac(1)'},
    'free-boolean-converse-cp': {
        'description': "Free roots of cpf(0.5, Phi_1), which is positive at "
                       "0: Boolean powers converge to 1 / (2 - F).",
        'check': 'converse',
        'sequence': {'kind': 'free_root', 'target': 'cpf(0.5, frechet(1))'},
        'limit': 'cpf(0.5, frechet(1))'},
    'classical-free-frechet': {
        'description': "Classical roots of Phi_1: classical limit Phi_1 "
                       "forces the free limit lambda(Phi_1) = P_1.",
        'check': 'classical_free',
        'sequence': {'kind': 'classical_root', 'target': 'frechet(1)'},
        'limit': 'frechet(1)'},
    'compound-poisson': {
        'description': "Compound Poisson pre-limits with lam = 1 and base "
                       "Phi_1 under classical and free powers.",
        'check': 'run',
        'sequence': {'kind': 'cp_prelimit', 'lam': 1, 'base': 'frechet(1)'},
        'convolutions': ['classical', 'free']},
    'truncated-free-root-gumbel': {
        'description': "Truncated free roots reproduce the Gumbel law on "
                       "[-n, inf) under free powers.",
        'check': 'run',
        'sequence': {'kind': 'truncated_free_root', 'target': 'gumbel()'},
        'convolutions': ['free']},
    'remark-counterexample': {
        'description': "Truncated Pareto sequence: free powers equal P_1, "
                       "Boolean powers miss D_1 below 1.",
        'check': 'counterexample',
        'sequence': {'kind': 'remark_truncated_pareto', 'alpha': 1}},
    'conjecture-f1': {
        'description': "Free limit P_1 vanishing on [0, 1): Boolean limit "
                       "1 / (2 - F) on {F > 0}, 0 below.",
        'check': 'conjecture',
        'sequence': {'kind': 'remark_f1', 'target': 'pareto(1)'}},
    'conjecture-f2': {
        'description': "Free limit P_1 vanishing on [0, 1): Boolean limit "
                       "1 / (2 - F) on {F > 0}, 1/2 on [0, 1).",
        'check': 'conjecture',
        'sequence': {'kind': 'remark_f2', 'target': 'pareto(1)'}},
}


def _require(config, key, kind=None):
    if key not in config:
        raise ConfigError("Experiment document is missing '{}'.".format(key))
    value = config[key]
    if kind is not None and not isinstance(value, kind):
        raise ConfigError("Experiment key '{}' has the wrong type.".format(
            key))
    return value


def _number(config, key, default=None):
    value = config.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError("Experiment key '{}' must be a number.".format(key))
    return float(value)


def parse_sequence(config):
    """Build a :py:class:`SequenceSpec` from its JSON description."""

    if not isinstance(config, dict):
        raise ConfigError("'sequence' must be an object.")
    kind = _require(config, 'kind', str)
    if kind not in SEQUENCE_KINDS:
        raise ConfigError("Unknown sequence kind '{}'; choose from "
                          "{}.".format(kind, SEQUENCE_KINDS))
    if kind == REMARK_TRUNCATED_PARETO:
        return SequenceSpec.remark_truncated_pareto(
            _number(config, 'alpha', 1.))
    if kind == CP_PRELIMIT:
        return SequenceSpec.cp_prelimit(
            _number(config, 'lam'),
            compile_expression(_require(config, 'base', str)))
    target = compile_expression(_require(config, 'target', str))
    return getattr(SequenceSpec, kind)(target)


def _parse_schedule(config):
    indices = config.get('schedule')
    if indices is None:
        indices = list(KnSchedule.default().indices)
    if not isinstance(indices, list) or not indices:
        raise ConfigError("'schedule' must be a nonempty list of integers.")
    return KnSchedule(tuple(indices), _number(config, 'k_scale', 1.),
                      _number(config, 'k_exponent', 1.))


def _parse_grid(config):
    if 'points' in config:
        points = config['points']
        if not isinstance(points, list):
            raise ConfigError("'points' must be a list of numbers.")
        return EvalGrid(points)
    grid = config.get('grid')
    if grid is None:
        return None
    if not isinstance(grid, dict):
        raise ConfigError("'grid' must be an object with lo, hi and n.")
    lo = _number(grid, 'lo')
    hi = _number(grid, 'hi')
    n = int(_number(grid, 'n', 2001))
    if lo is None or hi is None or not lo < hi or n < 2:
        raise ConfigError("Grid needs lo < hi and n >= 2.")
    if grid.get('log', False):
        return EvalGrid.log(lo, hi, n)
    return EvalGrid.linear(lo, hi, n)


def _limit(config, key='limit'):
    text = config.get(key)
    if text is None:
        return None
    if not isinstance(text, str):
        raise ConfigError("'{}' must be an expression string.".format(key))
    return compile_expression(text)


def run_experiment(config, name=None, threshold=None, schedule=None,
                   grid=None, compute_levy=True, **run_options):
    """Run the experiment described by ``config``.

    Keyword arguments override the corresponding keys of the document.
    ``run_options`` (``levy_resolution``, ``num_workers``, ``csv_dir``) are
    passed on to :py:func:`~maxalg.simulation.utils.run_limit`.

    Returns
    -------

    result: dict
        ``name``, ``check``, ``sequence``, ``reports`` (list of
        :py:class:`~maxalg.simulation.utils.ConvergenceReport`), ``passed``
        and ``notes``.
    """

    if not isinstance(config, dict):
        raise ConfigError("An experiment document must be a JSON object.")
    check = _require(config, 'check', str)
    if check not in CHECKS:
        raise ConfigError("Unknown check '{}'; choose from {}.".format(
            check, CHECKS))
    if threshold is None:
        threshold = _number(config, 'threshold')
    if schedule is None:
        schedule = _parse_schedule(config)
    if grid is None:
        grid = _parse_grid(config)
    options = dict(run_options,
                   compute_levy=bool(config.get('levy', compute_levy)))
    notes = []

    if check == 'counterexample':
        sequence = config.get('sequence', {})
        alpha = _number(sequence, 'alpha', _number(config, 'alpha', 1.))
        report = counterexample_remark(alpha, schedule, grid, threshold,
                                       **options)
        reports = [report]
        passed = report.details['limits_disagree'] and \
            report.details['free']['verdict'] == 'converged'
        label = 'remark_truncated_pareto({})'.format(alpha)
    else:
        spec = parse_sequence(_require(config, 'sequence'))
        label = spec.label
        if check == 'run':
            convolutions = config.get('convolutions', ['classical', 'free',
                                                       'bool'])
            candidates = config.get('candidates', {})
            reports = []
            for conv in convolutions:
                if conv in candidates:
                    candidate = compile_expression(candidates[conv])
                else:
                    candidate = expected_limit(spec, conv)
                if candidate is None:
                    notes.append("no known {} limit".format(conv))
                    continue
                reports.append(run_limit(spec, schedule, conv, candidate,
                                         grid, threshold, **options))
            passed = all(r.converged for r in reports)
        elif check == 'conjecture':
            report = conjecture_probe(spec, schedule, grid, threshold,
                                      _limit(config), **options)
            reports = [report]
            passed = report.converged
        elif check == 'boolean_classical':
            reports = list(theorem_boolean_classical_check(
                spec, schedule, grid, threshold, _limit(config), **options))
            passed = reports[1].details['verdicts_agree']
        else:
            conv, func = {
                'limit': ('bool', theorem_limit_check),
                'converse': ('free', theorem_converse_check),
                'classical_free': ('classical',
                                   corollary_classical_free_check)}[check]
            F = _limit(config)
            if F is None:
                F = expected_limit(spec, conv)
            if F is None:
                raise ConfigError("Check '{}' needs a 'limit' expression "
                                  "for {}.".format(check, spec.label))
            reports = list(func(spec, schedule, F, grid, threshold,
                                **options))
            passed = reports[1].details['implication_holds']

    return {'name': name, 'check': check, 'sequence': label,
            'reports': reports, 'passed': bool(passed), 'notes': notes}


def run_scenario(name, **kwargs):
    """Run the built-in scenario ``name``; see :py:data:`SCENARIOS`."""

    if name not in SCENARIOS:
        raise ConfigError("Unknown scenario '{}'; choose from {}.".format(
            name, sorted(SCENARIOS)))
    return run_experiment(SCENARIOS[name], name, **kwargs)


def describe_scenarios():
    """Rows ``(name, check, description)`` of the built-in scenarios."""

    return [(name, s['check'], s['description'])
            for name, s in sorted(SCENARIOS.items())]
