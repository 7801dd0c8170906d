# -*- coding: utf-8 -*-
"""
Tail analysis of distribution functions.

A survival function ``1 - F`` that is regularly varying of index ``-alpha``
places ``F`` simultaneously in the classical domain of attraction of the
Frechet law, the free one of the Pareto law and the Boolean one of the Dagum
law. This module estimates the index from ratios of exact survival values at
increasing probe points and compares the tails of convolution powers.

.. autosummary::
    :nosignatures:

    TailReport
    survival
    rv_index
    tail_equivalence
    tail_ratio
    classify_domain
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from maxalg.distributions.utils import power
from maxalg.utils.errors import DomainError, TailVanished
from maxalg.utils.utils import config_string_to_list, get_default_config

FRECHET_DOMAIN = 'FrechetDomain'
NOT_CLASSIFIED = 'NotClassified'


def _tail_defaults():
    config = get_default_config()
    return (config_string_to_list(config.get('tails', 'probes')),
            config.getfloat('tails', 't'),
            config.getfloat('tails', 'residual_threshold'))


@dataclass
class TailReport:
    """Result of a regular variation analysis.

    Attributes
    ----------

    probes: list[float]
        Probe points ``x``.
    ratios: list[float]
        ``survival(F, t x) / survival(F, x)`` per probe.
    estimates: list[float]
        Index estimate ``-log(ratio) / log(t)`` per probe.
    index: float
        Estimate at the largest probe.
    residual: float
        Spread of the estimates over the last three probes.
    classification: str
        ``FrechetDomain`` or ``NotClassified``.
    alpha_hat: float | None
        Estimated Frechet index if classified.
    """

    probes: List[float]
    t: float
    ratios: List[float] = field(default_factory=list)
    estimates: List[float] = field(default_factory=list)
    index: Optional[float] = None
    residual: Optional[float] = None
    classification: str = NOT_CLASSIFIED
    alpha_hat: Optional[float] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self):
        return {'probes': list(self.probes), 't': self.t,
                'ratios': list(self.ratios),
                'estimates': list(self.estimates), 'index': self.index,
                'residual': self.residual,
                'classification': self.classification,
                'alpha_hat': self.alpha_hat, 'notes': list(self.notes)}

    def to_columns(self):
        """Header and columns of the ``(x, ratio, estimate)`` CSV."""

        return ('x', 'ratio', 'estimate'), (self.probes, self.ratios,
                                            self.estimates)


def survival(F, x):
    """``1 - F(x)``, evaluated through the exact complementary form of the
    graph."""

    return F.survival(x)


def _check_probes(probes):
    probes = np.asarray(probes, dtype=float).ravel()
    if probes.size == 0 or np.any(np.diff(probes) <= 0):
        raise DomainError("Tail probes must be nonempty and increasing.")
    return probes


def _positive_survival(F, x):
    s = np.asarray(F.survival(x), dtype=float)
    vanished = np.nonzero(s <= 0)[0]
    if len(vanished):
        raise TailVanished("Survival function is 0 at probe {}.".format(
            x[vanished[0]]))
    return s


def rv_index(F, t=None, probes=None):
    """Estimate the index of regular variation of ``1 - F``.

    Parameters
    ----------

    F: AbstractDistFn
    t: float
        Ratio of the probe pairs ``(x, t x)``, ``t > 1``.
    probes: list[float]
        Increasing probe points ``x``.

    Returns
    -------

    report: TailReport
        Unclassified; see :py:func:`classify_domain`.
    """

    default_probes, default_t, _ = _tail_defaults()
    t = default_t if t is None else float(t)
    if not t > 1:
        raise DomainError("Tail ratio t must be > 1, got {}.".format(t))
    probes = _check_probes(default_probes if probes is None else probes)

    s = _positive_survival(F, probes)
    s_t = _positive_survival(F, t * probes)
    ratios = s_t / s
    estimates = -np.log(ratios) / np.log(t)
    last = estimates[-3:]
    return TailReport(probes.tolist(), t, ratios.tolist(), estimates.tolist(),
                      float(estimates[-1]), float(np.max(last) - np.min(last)))


def tail_equivalence(F, conv, t, probes=None):
    """Ratios ``survival(power(conv, F, t), x) / (t survival(F, x))``.

    They tend to 1 for all three convolutions whenever ``1 - F`` stays
    positive along the probes.
    """

    if probes is None:
        probes = _tail_defaults()[0]
    probes = _check_probes(probes)
    s = _positive_survival(F, probes)
    s_power = np.asarray(power(conv, F, t).survival(probes), dtype=float)
    return s_power / (float(t) * s)


def tail_ratio(F, G, probes=None):
    """Ratios ``survival(G, x) / survival(F, x)``; tend to 1 if the tails
    are equivalent."""

    if probes is None:
        probes = _tail_defaults()[0]
    probes = _check_probes(probes)
    s = _positive_survival(F, probes)
    return np.asarray(G.survival(probes), dtype=float) / s


def classify_domain(F, t=None, probes=None, residual_threshold=None):
    """Test ``F`` for the Frechet-type domains of attraction.

    ``F`` is classified as ``FrechetDomain`` with index ``alpha_hat`` if the
    index estimates of :py:func:`rv_index` settle (spread over the last three
    probes below ``residual_threshold``) at a positive value. Other tails,
    including vanishing ones, are reported as ``NotClassified``.
    """

    if residual_threshold is None:
        residual_threshold = _tail_defaults()[2]
    try:
        report = rv_index(F, t, probes)
    except TailVanished as e:
        default_probes, default_t, _ = _tail_defaults()
        report = TailReport(
            list(default_probes if probes is None else probes),
            default_t if t is None else float(t))
        report.notes.append(str(e))
        return report

    if np.isfinite(report.index) and report.index > 0 and \
            report.residual < residual_threshold:
        report.classification = FRECHET_DOMAIN
        report.alpha_hat = report.index
    else:
        report.notes.append("Index estimates do not settle at a positive "
                            "value.")
    return report
