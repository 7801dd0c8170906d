# -*- coding: utf-8 -*-
"""
Closed-form parametric distribution functions.

The max-stable laws of the three max-convolutions and the max-compound
Poisson laws:

- classical extreme value laws: :py:class:`Gumbel`, :py:class:`Frechet`,
  :py:class:`Weibull`;
- free extreme value laws: :py:class:`FreeExponential`, :py:class:`Pareto`,
  :py:class:`BetaLaw`;
- Boolean max-stable laws: :py:class:`Dagum`;
- max-compound Poisson laws :py:class:`CompoundPoissonClassical`,
  :py:class:`CompoundPoissonFree` and their pre-limit sequence
  :py:func:`cp_prelimit`.

Every family provides an exact survival function, so tails are evaluated
without cancellation.
"""

import warnings
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from maxalg.distributions.utils import DELTA, DELTA_PLUS, DELTA_PLUS_ZERO, \
    AbstractDistFn, Dirac, ParametricLeaf, mixture
from maxalg.utils.errors import ParameterError


def _check_positive(name, value):
    value = float(value)
    if not (np.isfinite(value) and value > 0):
        raise ParameterError("Parameter {} must be positive, got {}.".format(
            name, value))
    return value


def _check_nonnegative(name, value):
    value = float(value)
    if not (np.isfinite(value) and value >= 0):
        raise ParameterError("Parameter {} must be nonnegative, got "
                             "{}.".format(name, value))
    return value


def _masked(x, mask, func, fill):
    out = np.full(x.shape, fill, dtype=float)
    out[mask] = func(x[mask])
    return out


class Gumbel(ParametricLeaf):
    """``exp(-exp(-x))``."""

    family = 'gumbel'

    def __init__(self):
        super(Gumbel, self).__init__(DELTA, {})

    def _evaluate(self, x):
        return np.exp(-np.exp(-x))

    def _survival(self, x):
        return -np.expm1(-np.exp(-x))

    def _log_evaluate(self, x):
        return -np.exp(-x)

    def _alpha(self):
        return -np.inf

    def _omega(self):
        return np.inf


class Frechet(ParametricLeaf):
    """``exp(-x**(-alpha))`` for ``x > 0``, 0 otherwise."""

    family = 'frechet'

    def __init__(self, alpha):
        self.shape = _check_positive('alpha', alpha)
        super(Frechet, self).__init__(DELTA_PLUS_ZERO, {'alpha': self.shape})

    def _evaluate(self, x):
        return _masked(x, x > 0, lambda y: np.exp(-y ** -self.shape), 0.)

    def _survival(self, x):
        return _masked(x, x > 0, lambda y: -np.expm1(-y ** -self.shape), 1.)

    def _log_evaluate(self, x):
        return _masked(x, x > 0, lambda y: -y ** -self.shape, -np.inf)

    def _alpha(self):
        return 0.

    def _omega(self):
        return np.inf


class Weibull(ParametricLeaf):
    """``exp(-(-x)**alpha)`` for ``x <= 0``, 1 for ``x > 0``."""

    family = 'weibull'

    def __init__(self, alpha):
        self.shape = _check_positive('alpha', alpha)
        super(Weibull, self).__init__(DELTA, {'alpha': self.shape})

    def _evaluate(self, x):
        return _masked(x, x <= 0, lambda y: np.exp(-(-y) ** self.shape), 1.)

    def _survival(self, x):
        return _masked(x, x <= 0, lambda y: -np.expm1(-(-y) ** self.shape),
                       0.)

    def _log_evaluate(self, x):
        return _masked(x, x <= 0, lambda y: -(-y) ** self.shape, 0.)

    def _alpha(self):
        return -np.inf

    def _omega(self):
        return 0.


class FreeExponential(ParametricLeaf):
    """``(1 - exp(-x))_+``, the free counterpart of the Gumbel law."""

    family = 'freeexp'

    def __init__(self):
        super(FreeExponential, self).__init__(DELTA, {})

    def _evaluate(self, x):
        return np.maximum(-np.expm1(-x), 0.)

    def _survival(self, x):
        return np.minimum(np.exp(-x), 1.)

    def _alpha(self):
        return 0.

    def _omega(self):
        return np.inf


class Pareto(ParametricLeaf):
    """``(1 - x**(-alpha))_+`` for ``x > 0``."""

    family = 'pareto'

    def __init__(self, alpha):
        self.shape = _check_positive('alpha', alpha)
        super(Pareto, self).__init__(DELTA_PLUS_ZERO, {'alpha': self.shape})

    def _evaluate(self, x):
        return _masked(x, x > 1, lambda y: 1. - y ** -self.shape, 0.)

    def _survival(self, x):
        return _masked(x, x > 1, lambda y: y ** -self.shape, 1.)

    def _alpha(self):
        return 1.

    def _omega(self):
        return np.inf


class BetaLaw(ParametricLeaf):
    """``(1 - |x|**alpha)_+`` for ``x <= 0``, 1 for ``x > 0``."""

    family = 'betalaw'

    def __init__(self, alpha):
        self.shape = _check_positive('alpha', alpha)
        super(BetaLaw, self).__init__(DELTA, {'alpha': self.shape})

    def _evaluate(self, x):
        return _masked(x, x <= 0,
                       lambda y: np.maximum(1. - (-y) ** self.shape, 0.), 1.)

    def _survival(self, x):
        return _masked(x, x <= 0,
                       lambda y: np.minimum((-y) ** self.shape, 1.), 0.)

    def _alpha(self):
        return -1.

    def _omega(self):
        return 0.


class Dagum(ParametricLeaf):
    """``1 / (1 + lam * x**(-alpha))`` for ``x > 0``, 0 otherwise.

    The Boolean max-stable laws.
    """

    family = 'dagum'

    def __init__(self, lam, alpha):
        self.lam = _check_positive('lam', lam)
        self.shape = _check_positive('alpha', alpha)
        super(Dagum, self).__init__(DELTA_PLUS_ZERO, {'lam': self.lam,
                                                      'alpha': self.shape})

    def _evaluate(self, x):
        return _masked(x, x > 0,
                       lambda y: 1. / (1. + self.lam * y ** -self.shape), 0.)

    def _survival(self, x):
        return _masked(x, x > 0,
                       lambda y: self.lam / (y ** self.shape + self.lam), 1.)

    def _log_evaluate(self, x):
        return _masked(x, x > 0,
                       lambda y: -np.log1p(self.lam * y ** -self.shape),
                       -np.inf)

    def _alpha(self):
        return 0.

    def _omega(self):
        return np.inf


def _warn_if_jump_at_zero(base):
    jump = base.value(1e-9) - base.value(-1e-9)
    if 0. in base.discontinuities or jump > 1e-6:
        warnings.warn("The base distribution of a compound Poisson law "
                      "should be continuous at 0; evaluating the formula "
                      "anyway.", RuntimeWarning)


class _CompoundPoisson(ParametricLeaf):

    def __init__(self, lam, base):
        if not isinstance(base, AbstractDistFn):
            raise ParameterError("Compound Poisson laws need a base "
                                 "distribution function.")
        self.lam = _check_nonnegative('lam', lam)
        _warn_if_jump_at_zero(base)
        super(_CompoundPoisson, self).__init__(DELTA_PLUS, {'lam': self.lam},
                                               (base,))

    @property
    def base(self):
        return self.children[0]

    def _discontinuities(self):
        return (0.,) + self.base.discontinuities

    def _omega(self):
        if self.lam == 0:
            return 0.
        return max(self.base.omega, 0.)


class CompoundPoissonClassical(_CompoundPoisson):
    """``exp(-lam (1 - G(x)))`` for ``x >= 0``, 0 otherwise."""

    family = 'cpc'

    def _evaluate(self, x):
        return np.where(x >= 0,
                        np.exp(-self.lam * self.base._survival(x)), 0.)

    def _survival(self, x):
        return np.where(x >= 0,
                        -np.expm1(-self.lam * self.base._survival(x)), 1.)

    def _log_evaluate(self, x):
        return np.where(x >= 0, -self.lam * self.base._survival(x), -np.inf)

    def _alpha(self):
        return 0.


class CompoundPoissonFree(_CompoundPoisson):
    """``(1 - lam (1 - G(x)))_+`` for ``x >= 0``, 0 otherwise."""

    family = 'cpf'

    def _evaluate(self, x):
        return np.where(
            x >= 0, np.maximum(1. - self.lam * self.base._survival(x), 0.), 0.)

    def _survival(self, x):
        return np.where(
            x >= 0, np.minimum(self.lam * self.base._survival(x), 1.), 1.)

    def _discontinuities(self):
        points = super(CompoundPoissonFree, self)._discontinuities()
        if self.lam >= 1:
            points += (self.alpha,)
        return points

    def _alpha(self):
        # F(0) >= 1 - lam > 0 for lam < 1; otherwise the zero set can extend
        # into (0, inf) and is found by bisection.
        return 0. if self.lam < 1 else None


# name -> (class, parameter names, takes a base distribution)
FAMILIES = {
    'gumbel': (Gumbel, (), False),
    'frechet': (Frechet, ('alpha',), False),
    'weibull': (Weibull, ('alpha',), False),
    'freeexp': (FreeExponential, (), False),
    'pareto': (Pareto, ('alpha',), False),
    'betalaw': (BetaLaw, ('alpha',), False),
    'dagum': (Dagum, ('lam', 'alpha'), False),
    'cpc': (CompoundPoissonClassical, ('lam',), True),
    'cpf': (CompoundPoissonFree, ('lam',), True),
}


@dataclass(frozen=True)
class FamilySpec:
    """Family name, parameters in constructor order and, for compound
    Poisson laws, the base distribution ``G``."""

    kind: str
    params: Tuple[float, ...] = ()
    base: Optional[AbstractDistFn] = field(default=None, compare=False)


def make(spec):
    """Construct the :py:class:`ParametricLeaf` described by ``spec``."""

    if spec.kind not in FAMILIES:
        raise ParameterError("Unknown family {}; choose from {}.".format(
            spec.kind, sorted(FAMILIES)))
    cls, names, takes_base = FAMILIES[spec.kind]
    if len(spec.params) != len(names):
        raise ParameterError("Family {} takes parameters {}, got {}.".format(
            spec.kind, names, spec.params))
    if takes_base:
        return cls(*spec.params, base=spec.base)
    if spec.base is not None:
        raise ParameterError("Family {} takes no base distribution.".format(
            spec.kind))
    return cls(*spec.params)


def cp_prelimit(lam, base, N):
    """Pre-limit of the max-compound Poisson laws.

    ``(1 - lam/N) + (lam/N) G(x)`` for ``x >= 0`` and ``(lam/N) G(x)`` below,
    i.e. the mixture of the unit step at 0 and ``G`` with weight ``lam/N``.
    Its ``N``-th classical and free powers converge to
    :py:class:`CompoundPoissonClassical` and :py:class:`CompoundPoissonFree`.
    """

    lam = _check_nonnegative('lam', lam)
    if int(N) != N or N < 1:
        raise ParameterError("N must be a positive integer, got {}.".format(N))
    if N < lam:
        raise ParameterError("N must be >= lam, got N={} < lam={}.".format(
            N, lam))
    _warn_if_jump_at_zero(base)
    return mixture(Dirac(0.), base, lam / N)


def normalizing_constants(F, n):
    """Affine normalisation of a max-stable law.

    Returns ``(conv, a, b)`` with
    ``power(conv, F, n)(a * x + b) == F(x)`` for all ``x``.
    """

    family = getattr(F, 'family', None)
    if family == 'gumbel':
        return 'classical', 1., float(np.log(n))
    if family == 'frechet':
        return 'classical', n ** (1. / F.shape), 0.
    if family == 'weibull':
        return 'classical', n ** (-1. / F.shape), 0.
    if family == 'freeexp':
        return 'free', 1., float(np.log(n))
    if family == 'pareto':
        return 'free', n ** (1. / F.shape), 0.
    if family == 'betalaw':
        return 'free', n ** (-1. / F.shape), 0.
    if family == 'dagum':
        return 'bool', n ** (1. / F.shape), 0.
    raise ParameterError("{} is not a max-stable family.".format(family))
