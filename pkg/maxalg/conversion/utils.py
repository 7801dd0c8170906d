# -*- coding: utf-8 -*-
"""
Maps between the classical, free and Boolean max-convolution worlds.

.. autosummary::
    :nosignatures:

    BnParameter
    bn
    boolean_to_classical
    classical_to_boolean
    classical_to_free
    exchange_check
    theta_preimage
    converse_boolean_limit
    free_to_classical_limit
"""

from dataclasses import dataclass

import numpy as np

from maxalg.algebra.scalar import pq_exchange
from maxalg.distributions.utils import Pointwise1, TruncateBelow, \
    apply_map, power, require_positive, sup_distance
from maxalg.utils.errors import DomainError


@dataclass(frozen=True)
class BnParameter:
    """Time ``t >= 0`` of the max-Belinschi-Nica semigroup."""

    t: float

    def __post_init__(self):
        if not (np.isfinite(self.t) and self.t >= 0):
            raise DomainError("Semigroup time must be >= 0, got {}.".format(
                self.t))


def bn(F, t, fused=False):
    """Max-Belinschi-Nica map: free power ``1 + t`` followed by Boolean power
    ``1 / (1 + t)``.

    Parameters
    ----------

    F: AbstractDistFn
        Distribution function supported on [0, inf).
    t: float | BnParameter
        Semigroup time.
    fused: bool
        If True, return a single pointwise node evaluating the closed form
        instead of the composition of the two powers. At ``t = 1`` the node
        evaluates ``max(2 - 1/u, 0)``.

    Returns
    -------

    : AbstractDistFn
        Preserves the classes ``delta_plus`` and ``delta_plus_zero``. At
        ``t = 1`` it maps Boolean max-limits to free max-limits.
    """

    if not isinstance(t, BnParameter):
        t = BnParameter(float(t))
    require_positive(F, 'Max-Belinschi-Nica map')
    if fused:
        return Pointwise1('bn', F, t.t)
    return power('bool', power('free', F, 1. + t.t), 1. / (1. + t.t))


def boolean_to_classical(G):
    """Apply ``chi``: Boolean max-limits become classical max-limits."""

    return apply_map('chi', G)


def classical_to_boolean(F):
    """Apply ``chi_inv``, the inverse of :py:func:`boolean_to_classical`."""

    return apply_map('chi_inv', F)


def classical_to_free(F):
    """Apply ``lambda_vee``: classical max-limits become free max-limits."""

    return apply_map('lambda_vee', F)


def exchange_check(F, p, q, grid=None):
    """Sup distance between the two sides of the free/Boolean exchange
    identity.

    Compares the Boolean ``q`` power of the free ``p`` power of ``F`` with
    the free ``p'`` power of the Boolean ``q'`` power, where
    ``(p', q') = pq_exchange(p, q)``. The identity holds exactly, so the
    result only reflects rounding.
    """

    require_positive(F, 'Exchange identity')
    p_new, q_new = pq_exchange(p, q)
    lhs = power('bool', power('free', F, p), q)
    rhs = power('free', power('bool', F, q_new), p_new)
    return sup_distance(lhs, rhs, grid)


def theta_preimage(H):
    """``F = 1 / (1 - log H)`` with ``bn(F, 1) == lambda_vee(H)``.

    Every image of a distribution function on [0, inf) under ``lambda_vee``
    is reached by the max-Belinschi-Nica map at time 1.
    """

    return classical_to_boolean(H)


def converse_boolean_limit(F):
    """``1 / (2 - F(x))`` for ``x >= 0`` and 0 below.

    If the free powers of a sequence converge to ``F`` and ``F > 0`` on
    [0, inf), the Boolean powers converge to this function.
    """

    require_positive(F, 'Converse limit')
    return TruncateBelow(Pointwise1('free_to_boolean_limit', F), 0.)


def free_to_classical_limit(F):
    """Classical max-limit ``exp(-(1 - F(x)))`` on ``x >= 0`` paired with a
    free max-limit ``F > 0``: the max-compound Poisson law with rate 1 and
    base ``F``."""

    return boolean_to_classical(converse_boolean_limit(F))
