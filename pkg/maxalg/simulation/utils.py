# -*- coding: utf-8 -*-
"""
Convergence experiments for sequences of max-convolution powers.

:py:func:`run_limit` evaluates ``power(conv, F_n, k_n)`` along a schedule and
measures its distance to a candidate limit on the continuity points of the
candidate. The theorem checks pair two runs whose verdicts are related by a
limit theorem: a Boolean limit forces a free limit, a free limit that is
positive at 0 forces a Boolean limit, and classical and Boolean limits exist
together.

.. autosummary::
    :nosignatures:

    ConvergenceReport
    run_limit
    assess
    theorem_limit_check
    theorem_converse_check
    theorem_boolean_classical_check
    corollary_classical_free_check
    counterexample_remark
    conjecture_probe
    pairing_distance
    implication_holds
    verdicts_agree
    index_table
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from maxalg.conversion.utils import bn, classical_to_boolean, \
    classical_to_free, converse_boolean_limit
from maxalg.distributions.families import Dagum, Pareto
from maxalg.distributions.utils import EvalGrid, Pointwise1, apply_map, \
    default_grid, levy_distance, power, require_positive, sup_distance
from maxalg.simulation.sequences import KnSchedule, SequenceSpec, \
    build_sequence, expected_limit
from maxalg.utils.errors import HypothesisError, ParameterError
from maxalg.utils.utils import get_default_config, to_csv

CONVERGED = 'converged'
DIVERGED = 'diverged'
INCONCLUSIVE = 'inconclusive'

# Values of F(0) at or below this count as 0 for the converse theorem.
POSITIVITY_TOLERANCE = 1e-12


@dataclass
class ConvergenceReport:
    """Result of a limit experiment.

    Attributes
    ----------

    label: str
        Sequence and candidate description.
    convolution: str
        ``classical``, ``free`` or ``bool``.
    indices: list[int]
        Sequence indices ``n``.
    k_values: list[int]
        Powers ``k_n``.
    sup_distances: list[float]
        Sup distance to the candidate on its continuity points, per index.
    levy_distances: list[float | None]
        Levy distance estimates, per index.
    decay_exponent: float | None
        Least-squares slope of log distance against log n over the second
        half of the schedule.
    verdict: str
        ``converged``, ``diverged`` or ``inconclusive``.
    threshold: float
    notes: list[str]
    details: dict
        Experiment specific values, e.g. the run of a paired convolution.
    """

    label: str
    convolution: str
    indices: List[int]
    k_values: List[int]
    sup_distances: List[float]
    levy_distances: List[Optional[float]]
    decay_exponent: Optional[float]
    verdict: str
    threshold: float
    notes: List[str] = field(default_factory=list)
    details: Dict = field(default_factory=dict)

    @property
    def converged(self):
        return self.verdict == CONVERGED

    @property
    def final_distance(self):
        return self.sup_distances[-1]

    def to_dict(self):
        return {'label': self.label, 'convolution': self.convolution,
                'indices': list(self.indices),
                'k_values': list(self.k_values),
                'sup_distances': list(self.sup_distances),
                'levy_distances': list(self.levy_distances),
                'decay_exponent': self.decay_exponent,
                'verdict': self.verdict, 'threshold': self.threshold,
                'notes': list(self.notes), 'details': dict(self.details)}


def _limit_settings():
    config = get_default_config()
    return {'threshold': config.getfloat('limit', 'threshold'),
            'exact_threshold': config.getfloat('limit', 'exact_threshold'),
            'levy_resolution': config.getfloat('limit', 'levy_resolution'),
            'trend_slack': config.getfloat('limit', 'trend_slack'),
            'num_workers': config.getint('limit', 'num_workers')}


def decay_exponent(indices, distances):
    """Slope of ``log(distance)`` against ``log(n)`` over the second half of
    the schedule, or None if fewer than two positive distances remain."""

    indices = np.asarray(indices, dtype=float)
    distances = np.asarray(distances, dtype=float)
    start = len(indices) // 2
    n = indices[start:]
    d = distances[start:]
    mask = d > 0
    if np.count_nonzero(mask) < 2:
        return None
    slope = np.polyfit(np.log(n[mask]), np.log(d[mask]), 1)[0]
    return float(slope)


def assess(distances, threshold, decay=None, trend_slack=None):
    """Verdict of a distance sequence.

    ``converged`` if the last distance is below ``threshold`` and the last
    three do not increase (up to ``trend_slack``); ``diverged`` if the last
    distance is at or above ``threshold`` and the fitted decay is not
    clearly negative; ``inconclusive`` otherwise or with fewer than three
    indices.
    """

    if trend_slack is None:
        trend_slack = _limit_settings()['trend_slack']
    if len(distances) < 3:
        return INCONCLUSIVE
    last = distances[-3:]
    nonincreasing = all(b <= a + trend_slack for a, b in zip(last, last[1:]))
    if distances[-1] < threshold and nonincreasing:
        return CONVERGED
    if distances[-1] >= threshold and (decay is None or decay >= -0.1):
        return DIVERGED
    return INCONCLUSIVE


def _as_schedule(schedule):
    if schedule is None:
        return KnSchedule.default()
    if isinstance(schedule, KnSchedule):
        return schedule
    return KnSchedule(tuple(schedule))


def index_table(spec, n, k, conv, candidate, grid):
    """Header and columns ``(x, power(conv, F_n, k)(x), candidate(x))`` on
    the grid points."""

    x = grid.points
    powered = power(conv, build_sequence(spec, n), k)
    return ('x', 'power', 'candidate'), (x, powered(x), candidate(x))


def run_limit(spec, schedule, conv, candidate=None, grid=None,
              threshold=None, levy_resolution=None, num_workers=None,
              compute_levy=True, label=None, csv_dir=None):
    """Compare ``power(conv, F_n, k_n)`` with ``candidate`` along
    ``schedule``.

    Parameters
    ----------

    spec: SequenceSpec
    schedule: KnSchedule | list[int] | None
        Defaults to the configured schedule with ``k_n = n``.
    conv: str
        ``classical``, ``free`` or ``bool``.
    candidate: AbstractDistFn | None
        Defaults to :py:func:`~maxalg.simulation.sequences.expected_limit`.
    grid: EvalGrid | None
        Defaults to :py:func:`~maxalg.distributions.utils.default_grid` of
        the candidate.
    threshold: float | None
    levy_resolution: float | None
    num_workers: int | None
        Indices are evaluated in a thread pool if larger than 1.
    compute_levy: bool
    label: str | None
    csv_dir: str | None
        If given, the table of :py:func:`index_table` is written there for
        every index, as ``<kind>_<conv>_n<n>.csv``.

    Returns
    -------

    report: ConvergenceReport
    """

    settings = _limit_settings()
    schedule = _as_schedule(schedule)
    if candidate is None:
        candidate = expected_limit(spec, conv)
        if candidate is None:
            raise ParameterError("No known {} limit for {}; pass a "
                                 "candidate.".format(conv, spec.label))
    if grid is None:
        grid = default_grid(candidate)
    if threshold is None:
        threshold = settings['threshold']
    if levy_resolution is None:
        levy_resolution = settings['levy_resolution']
    if num_workers is None:
        num_workers = settings['num_workers']

    def measure(item):
        n, k = item
        powered = power(conv, build_sequence(spec, n), k)
        sup = sup_distance(powered, candidate, grid)
        levy = levy_distance(powered, candidate, levy_resolution,
                             grid=grid) if compute_levy else None
        return sup, levy

    items = list(schedule)
    if num_workers > 1:
        with ThreadPoolExecutor(max_workers=num_workers) as executor:
            results = list(executor.map(measure, items))
    else:
        results = [measure(item) for item in items]

    sups = [r[0] for r in results]
    levys = [r[1] for r in results]
    decay = decay_exponent(schedule.indices, sups)
    verdict = assess(sups, threshold, decay, settings['trend_slack'])
    if label is None:
        label = '{} under {} vs {!r}'.format(spec.label, conv, candidate)
    report = ConvergenceReport(label, conv, list(schedule.indices),
                               list(schedule.k_values), sups, levys, decay,
                               verdict, float(threshold))
    if csv_dir is not None:
        paths = []
        for n, k in items:
            path = os.path.join(csv_dir, '{}_{}_n{}.csv'.format(
                spec.kind, conv, n))
            to_csv(*index_table(spec, n, k, conv, candidate, grid), path=path)
            paths.append(path)
        report.details['csv_files'] = paths
    return report


def implication_holds(premise, conclusion):
    """False only if ``premise`` converged and ``conclusion`` did not."""

    return not premise.converged or conclusion.converged


def verdicts_agree(a, b):
    """True if both runs converged or neither did."""

    return a.converged == b.converged


def theorem_limit_check(spec, schedule, F, grid=None, threshold=None,
                        **kwargs):
    """Boolean run against ``F`` and free run against ``bn(F, 1)``.

    If the Boolean powers converge to ``F``, the free powers converge to the
    max-Belinschi-Nica image of ``F`` at time 1.

    Returns
    -------

    : tuple[ConvergenceReport, ConvergenceReport]
        The Boolean and the free report. The free report notes whether the
        implication holds.
    """

    require_positive(F, 'Boolean limit')
    boolean = run_limit(spec, schedule, 'bool', F, grid, threshold, **kwargs)
    free = run_limit(spec, schedule, 'free', bn(F, 1), None, threshold,
                     **kwargs)
    free.details['implication_holds'] = implication_holds(boolean, free)
    return boolean, free


def theorem_converse_check(spec, schedule, F, grid=None, threshold=None,
                           **kwargs):
    """Free run against ``F`` and Boolean run against ``1 / (2 - F)``.

    Requires ``F`` supported on [0, inf) and ``F(0) > 0``; otherwise
    :py:exc:`~maxalg.utils.errors.HypothesisError` is raised.
    """

    require_positive(F, 'Converse limit check')
    if F.value(0.) <= POSITIVITY_TOLERANCE:
        raise HypothesisError("The converse limit theorem needs F(0) > 0, "
                              "got F(0) = {}.".format(F.value(0.)))
    free = run_limit(spec, schedule, 'free', F, grid, threshold, **kwargs)
    boolean = run_limit(spec, schedule, 'bool', converse_boolean_limit(F),
                        None, threshold, **kwargs)
    boolean.details['implication_holds'] = implication_holds(free, boolean)
    return free, boolean


def pairing_distance(spec, schedule=None, grid=None):
    """Sup distance between ``chi`` of the Boolean power and the classical
    power at the last scheduled index."""

    schedule = _as_schedule(schedule)
    n, k = list(schedule)[-1]
    F_n = build_sequence(spec, n)
    classical = power('classical', F_n, k)
    paired = apply_map('chi', power('bool', F_n, k))
    if grid is None:
        grid = default_grid(classical)
    return sup_distance(paired, classical, grid)


def theorem_boolean_classical_check(spec, schedule, grid=None,
                                    threshold=None, classical_limit=None,
                                    **kwargs):
    """Classical run against ``F`` and Boolean run against
    ``chi_inv(F)``.

    The classical and the Boolean powers converge together, with limits
    paired by ``chi``. ``F`` defaults to the expected classical limit of the
    sequence.

    Returns
    -------

    : tuple[ConvergenceReport, ConvergenceReport]
        The classical and the Boolean report. The Boolean report holds
        ``verdicts_agree`` and the ``pairing_distance`` of the last index.
    """

    if not spec.is_positive():
        raise HypothesisError("The Boolean-classical correspondence needs a "
                              "sequence on [0, inf).")
    if classical_limit is None:
        classical_limit = expected_limit(spec, 'classical')
        if classical_limit is None:
            raise ParameterError("No known classical limit for {}.".format(
                spec.label))
    classical = run_limit(spec, schedule, 'classical', classical_limit, grid,
                          threshold, **kwargs)
    boolean = run_limit(spec, schedule, 'bool',
                        classical_to_boolean(classical_limit), grid,
                        threshold, **kwargs)
    boolean.details['verdicts_agree'] = verdicts_agree(classical, boolean)
    boolean.details['pairing_distance'] = pairing_distance(spec, schedule,
                                                           grid)
    return classical, boolean


def corollary_classical_free_check(spec, schedule, F, grid=None,
                                   threshold=None, **kwargs):
    """Classical run against ``F`` and free run against
    ``lambda_vee(F)``."""

    classical = run_limit(spec, schedule, 'classical', F, grid, threshold,
                          **kwargs)
    free = run_limit(spec, schedule, 'free', classical_to_free(F), None,
                     threshold, **kwargs)
    free.details['implication_holds'] = implication_holds(classical, free)
    return classical, free


def counterexample_remark(alpha=1., schedule=None, grid=None,
                          threshold=None, probe=0.5, **kwargs):
    """Free convergence without the matching Boolean limit.

    ``F_n = P_alpha(n^(1/alpha) .)`` truncated at 1 has free ``n``-th
    powers equal to ``P_alpha = bn(D_alpha, 1)``, yet its Boolean powers
    converge to ``D_alpha`` truncated at 1 rather than to ``D_alpha``.

    Returns
    -------

    report: ConvergenceReport
        The Boolean run against the truncated limit. ``details`` holds the
        free run, the Boolean value at ``probe`` at the last index, the
        value ``D_alpha(probe)`` and the flag ``limits_disagree``.
    """

    settings = _limit_settings()
    spec = SequenceSpec.remark_truncated_pareto(alpha)
    schedule = _as_schedule(schedule)
    free = run_limit(spec, schedule, 'free', Pareto(alpha), grid,
                     settings['exact_threshold'], **kwargs)
    boolean = run_limit(spec, schedule, 'bool',
                        expected_limit(spec, 'bool'), grid, threshold,
                        **kwargs)

    n, k = list(schedule)[-1]
    value = power('bool', build_sequence(spec, n), k).value(probe)
    untruncated = Dagum(1., alpha).value(probe)
    disagree = bool(abs(value - untruncated) > boolean.threshold)
    boolean.details.update({'free': free.to_dict(), 'probe': probe,
                            'boolean_value_at_probe': value,
                            'dagum_value_at_probe': untruncated,
                            'limits_disagree': disagree})
    if disagree:
        boolean.notes.append(
            "limits disagree with untruncated D_alpha: Boolean power is {} "
            "at x = {}, D_alpha is {}".format(value, probe, untruncated))
    return boolean


def conjecture_probe(spec, schedule=None, grid=None, threshold=None,
                     free_limit=None, **kwargs):
    """Boolean powers of a sequence whose free powers converge to ``F``.

    Tests convergence to ``1 / (2 - F)`` on the continuity points where
    ``F > 0``. On ``{F = 0} & [0, inf)`` the values of the last Boolean
    power are only summarised in ``details``; no verdict is given there.
    """

    schedule = _as_schedule(schedule)
    if free_limit is None:
        free_limit = expected_limit(spec, 'free')
    if grid is None:
        grid = default_grid(free_limit)
    values = free_limit(grid.points)
    support = grid.points[values > 0]
    zero_set = grid.points[(values == 0) & (grid.points >= 0)]
    if support.size == 0:
        raise HypothesisError("F vanishes on every grid point.")

    candidate = Pointwise1('free_to_boolean_limit', free_limit)
    report = run_limit(spec, schedule, 'bool', candidate,
                       EvalGrid(support, grid.exclusion_radius), threshold,
                       label='{} under bool vs 1/(2 - F) on {{F > 0}}'.format(
                           spec.label), **kwargs)
    if zero_set.size:
        n, k = list(schedule)[-1]
        last = power('bool', build_sequence(spec, n), k)(zero_set)
        report.details['zero_set'] = {
            'points': int(zero_set.size), 'min': float(np.min(last)),
            'max': float(np.max(last)), 'mean': float(np.mean(last))}
    return report
