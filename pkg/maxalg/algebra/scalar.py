# -*- coding: utf-8 -*-
"""
Max-convolution operations on values of distribution functions.

All operations act pointwise on numbers in the unit interval [0, 1]. They
accept python floats or numpy arrays: scalars are returned as
:py:class:`UnitValue`, arrays as ``np.ndarray``. Every result is clamped to
[0, 1]; inputs outside the unit interval by more than ``unit_tolerance`` raise
:py:exc:`~maxalg.utils.errors.DomainError`.

.. autosummary::
    :nosignatures:

    UnitValue
    classical_max
    free_max
    bool_max
    classical_power
    free_power
    bool_power
    lambda_vee
    chi
    chi_inv
    bn_scalar
    bn_unit_time
    pq_exchange
    pq_exchange_inverse
    mixture
    free_to_boolean_limit
"""

import numpy as np

from maxalg.utils.errors import DomainError
from maxalg.utils.utils import get_default_config

UNIT_TOLERANCE = get_default_config().getfloat('numerics', 'unit_tolerance')


class UnitValue(float):
    """A float in [0, 1].

    Values outside the unit interval by at most ``UNIT_TOLERANCE`` are
    clamped to the nearest end point.
    """

    def __new__(cls, value):
        value = float(value)
        if not -UNIT_TOLERANCE <= value <= 1 + UNIT_TOLERANCE:
            raise DomainError(
                "Value {} is not in the unit interval.".format(value))
        return super(UnitValue, cls).__new__(cls, min(max(value, 0.), 1.))


def as_unit(u):
    """Validate and clamp ``u`` (scalar or array) to the unit interval."""

    u = np.asarray(u, dtype=float)
    bad = ~((u >= -UNIT_TOLERANCE) & (u <= 1 + UNIT_TOLERANCE))
    if np.any(bad):
        raise DomainError("Value {} is not in the unit interval.".format(
            u[bad].flat[0] if u.ndim else float(u)))
    return np.clip(u, 0., 1.)


def _result(r):
    r = np.clip(r, 0., 1.)
    if r.ndim == 0:
        return UnitValue(r)
    return r


def _on_positive(u, func):
    """Apply ``func`` where ``u > 0``, 0 elsewhere.

    ``func`` never sees a zero, so ``log(0)`` and ``1/0`` are not evaluated.
    """

    u = np.asarray(u, dtype=float)
    flat = np.atleast_1d(u)
    out = np.zeros_like(flat)
    mask = flat > 0
    out[mask] = func(flat[mask])
    return out.reshape(u.shape)


def _check_exponent(t, minimum, strict, name):
    # Exponents may be arrays broadcasting against the values.
    t = np.asarray(t, dtype=float)
    bad = ~np.isfinite(t) | (t < minimum)
    if strict:
        bad |= t == minimum
    if np.any(bad):
        relation = '>' if strict else '>='
        raise DomainError("{} exponent must be {} {}, got {}.".format(
            name, relation, minimum, t[bad].flat[0] if t.ndim else float(t)))
    return float(t) if t.ndim == 0 else t


def classical_max(u, v):
    """Classical max-convolution: the product ``u * v``."""

    return _result(as_unit(u) * as_unit(v))


def free_max(u, v):
    """Free max-convolution ``max(u + v - 1, 0)``."""

    return _result(np.maximum(as_unit(u) + as_unit(v) - 1., 0.))


def bool_max(u, v):
    """Boolean max-convolution ``uv / (u + v - uv)``, 0 if either is 0."""

    u, v = np.broadcast_arrays(as_unit(u), as_unit(v))
    shape = u.shape
    u, v = np.atleast_1d(u), np.atleast_1d(v)
    out = np.zeros(u.shape)
    mask = (u > 0) & (v > 0)
    uu, vv = u[mask], v[mask]
    out[mask] = uu * vv / (uu + vv - uu * vv)
    return _result(out.reshape(shape))


def classical_power(u, t):
    """Classical convolution power ``u ** t`` for ``t > 0``."""

    t = _check_exponent(t, 0, True, 'Classical')
    return _result(np.power(as_unit(u), t))


def _free_power(u, t):
    # Total for every real t; for t < 1 the result is not a distribution
    # function value of a free power. Used by the free root construction.
    return np.maximum(t * u - (t - 1.), 0.)


def free_power(u, t):
    """Free convolution power ``max(t*u - (t - 1), 0)`` for ``t >= 1``."""

    t = _check_exponent(t, 1, False, 'Free')
    return _result(_free_power(as_unit(u), t))


def _bool_power(u, t):
    # u / (t - (t - 1) u), written so the denominator is visibly positive.
    u, t = np.broadcast_arrays(np.asarray(u, dtype=float), t)
    shape = u.shape
    u, t = np.atleast_1d(u), np.atleast_1d(t)
    out = np.zeros(u.shape)
    mask = u > 0
    w = u[mask]
    out[mask] = w / (w + t[mask] * (1. - w))
    return out.reshape(shape)


def bool_power(u, t):
    """Boolean convolution power ``u / (t - (t - 1) u)`` for ``t > 0``."""

    t = _check_exponent(t, 0, True, 'Boolean')
    return _result(_bool_power(as_unit(u), t))


def lambda_vee(u):
    """Homomorphism from classical to free max-convolution:
    ``max(1 + log u, 0)`` with 0 mapped to 0."""

    return _result(_on_positive(as_unit(u),
                                lambda w: np.maximum(1. + np.log(w), 0.)))


def chi(u):
    """Boolean to classical bijection ``exp(1 - 1/u)``, 0 mapped to 0."""

    return _result(_on_positive(as_unit(u), lambda w: np.exp(1. - 1. / w)))


def chi_inv(u):
    """Classical to Boolean bijection ``1 / (1 - log u)``, 0 mapped to 0."""

    return _result(_on_positive(as_unit(u), lambda w: 1. / (1. - np.log(w))))


def bn_scalar(u, t):
    """Max-Belinschi-Nica map: free power ``1 + t`` followed by Boolean power
    ``1 / (1 + t)``.

    Parameters
    ----------

    u: float | np.ndarray
        Values in [0, 1].
    t: float
        Semigroup time, ``t >= 0``.

    Returns
    -------

    : UnitValue | np.ndarray
    """

    t = _check_exponent(t, 0, False, 'Semigroup')
    return _result(_bool_power(_free_power(as_unit(u), 1. + t), 1. / (1. + t)))


def bn_unit_time(u):
    """Closed form of :py:func:`bn_scalar` at ``t = 1``:
    ``max(2 - 1/u, 0)``."""

    return _result(_on_positive(as_unit(u),
                                lambda w: np.maximum(2. - 1. / w, 0.)))


def pq_exchange(p, q):
    """Exponents ``(p', q')`` with
    ``bool_power(free_power(u, p), q) == free_power(bool_power(u, q'), p')``.

    Parameters
    ----------

    p: float
        Free exponent, ``p >= 1``.
    q: float
        Boolean exponent, ``q > 1 - 1/p``. The boundary is rejected.

    Returns
    -------

    : tuple[float, float]
        ``p' = pq / (1 - p + pq)`` and ``q' = 1 - p + pq``.
    """

    p = float(p)
    q = float(q)
    if not np.isfinite(p) or p < 1:
        raise DomainError("Free exponent must be >= 1, got {}.".format(p))
    if not np.isfinite(q) or q <= 1. - 1. / p:
        raise DomainError("Boolean exponent must be > 1 - 1/p = {}, got "
                          "{}.".format(1. - 1. / p, q))
    q_new = 1. - p + p * q
    return p * q / q_new, q_new


def pq_exchange_inverse(p_new, q_new):
    """Invert :py:func:`pq_exchange`: ``p = 1 - q' + p'q'``,
    ``q = p'q' / (1 - q' + p'q')``."""

    p_new = float(p_new)
    q_new = float(q_new)
    if not np.isfinite(p_new) or p_new < 1:
        raise DomainError("Free exponent must be >= 1, got {}.".format(p_new))
    if not np.isfinite(q_new) or q_new <= 0:
        raise DomainError("Boolean exponent must be > 0, got {}.".format(
            q_new))
    p = 1. - q_new + p_new * q_new
    return p, p_new * q_new / p


def mixture(u, v, w):
    """Convex combination ``(1 - w) u + w v`` for ``0 <= w <= 1``."""

    w = float(w)
    if not 0 <= w <= 1:
        raise DomainError("Mixture weight must be in [0, 1], got {}.".format(
            w))
    return _result((1. - w) * as_unit(u) + w * as_unit(v))


def free_to_boolean_limit(u):
    """``1 / (2 - u)``: carries a free max-limit to the Boolean max-limit of
    the same sequence."""

    return _result(1. / (2. - as_unit(u)))
