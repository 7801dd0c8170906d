# -*- coding: utf-8 -*-
"""
Distribution functions as immutable expression graphs.

Every max-convolution in this toolbox acts pointwise on the values ``F(x)``
of distribution functions. A :py:class:`AbstractDistFn` therefore stores how
it is composed from leaves (parametric families, empirical step functions,
unit steps) and pointwise nodes, and evaluates lazily on numpy arrays. Besides
evaluation, each node tracks

- its domain class (``delta``: all of R, ``delta_plus``: vanishes on
  (-inf, 0), ``delta_plus_zero``: additionally vanishes at 0),
- the locations of known jumps, which are skipped when comparing against a
  limit candidate,
- an exact complementary form of ``1 - F``, used for tail analysis.

.. autosummary::
    :nosignatures:

    AbstractDistFn
    ParametricLeaf
    EmpiricalLeaf
    Dirac
    AffineRescale
    TruncateBelow
    Pointwise1
    Pointwise2
    EvalGrid
    evaluate
    combine
    power
    apply_map
    alpha
    omega
    is_freely_max_id
    is_free_regular_max_id
    free_nth_root
    bool_nth_root
    classical_nth_root
    sup_distance
    levy_distance
    default_grid
"""

from abc import abstractmethod
from collections import namedtuple
from functools import cached_property

import numpy as np
from scipy import optimize

from maxalg.algebra import scalar
from maxalg.utils.errors import ClassError, DomainError, EmptyGrid, \
    ParameterError
from maxalg.utils.utils import format_number, get_default_config

DELTA = 'delta'
DELTA_PLUS = 'delta_plus'
DELTA_PLUS_ZERO = 'delta_plus_zero'

_TAG_RANK = {DELTA: 0, DELTA_PLUS: 1, DELTA_PLUS_ZERO: 2}

CONVOLUTIONS = ('classical', 'free', 'bool')
MAPS = ('lambda_vee', 'chi', 'chi_inv')
MAX_OPS = ('classical_max', 'free_max', 'bool_max')


def is_positive_class(tag):
    """True for the classes of distribution functions vanishing on
    (-inf, 0)."""

    return _TAG_RANK[tag] >= _TAG_RANK[DELTA_PLUS]


def most_restrictive(*tags):
    return max(tags, key=_TAG_RANK.get)


def least_restrictive(*tags):
    return min(tags, key=_TAG_RANK.get)


def tag_from_support(alpha_value, value_at_zero):
    """Domain class of a distribution function with left support end point
    ``alpha_value`` and value ``value_at_zero`` at 0."""

    if alpha_value < 0:
        return DELTA
    if alpha_value > 0 or value_at_zero == 0:
        return DELTA_PLUS_ZERO
    return DELTA_PLUS


def _bisection_settings():
    config = get_default_config()
    return (config.getfloat('numerics', 'bisection_tolerance'),
            config.getfloat('numerics', 'bracket_cap'),
            config.getint('numerics', 'max_iterations'))


def bisect_alpha(F):
    """``sup{x: F(x) = 0}`` within the bisection tolerance.

    The bracket doubles from [-1, 1]; beyond the bracket cap the end point is
    reported as infinite. The bracket is then refined by
    :py:func:`scipy.optimize.bisect` on the sign of ``F(x) > 0``.
    """

    tol, cap, max_iterations = _bisection_settings()
    lo, hi = -1., 1.
    while F.value(lo) > 0:
        hi = lo
        lo *= 2
        if lo < -cap:
            return -np.inf
    while F.value(hi) == 0:
        lo = hi
        hi *= 2
        if hi > cap:
            return np.inf
    return optimize.bisect(lambda x: (F.value(x) > 0) - 0.5, lo, hi,
                           xtol=tol, maxiter=max_iterations)


def bisect_omega(F):
    """``inf{x: F(x) = 1}``; see :py:func:`bisect_alpha`."""

    tol, cap, max_iterations = _bisection_settings()
    lo, hi = -1., 1.
    while F.value(hi) < 1:
        lo = hi
        hi *= 2
        if hi > cap:
            return np.inf
    while F.value(lo) == 1:
        hi = lo
        lo *= 2
        if lo < -cap:
            return -np.inf
    return optimize.bisect(lambda x: (F.value(x) >= 1) - 0.5, lo, hi,
                           xtol=tol, maxiter=max_iterations)


class AbstractDistFn:
    """Abstract base class of distribution function nodes.

    Instances are immutable after construction and may be evaluated
    concurrently. Call an instance on a float or an array to evaluate it.

    Attributes
    ----------

    class_tag: str
        One of ``DELTA``, ``DELTA_PLUS``, ``DELTA_PLUS_ZERO``. The tag is
        sound: positive classes vanish on (-inf, 0), ``DELTA_PLUS_ZERO`` also
        at 0.
    children: tuple[AbstractDistFn]
        Input nodes.
    node: str
        Node kind used in the JSON representation.
    """

    node = None

    def __init__(self, class_tag, children=()):
        self.class_tag = class_tag
        self.children = tuple(children)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        y = self._clipped(self._evaluate, x)
        if y.ndim == 0:
            return scalar.UnitValue(y)
        return y

    def survival(self, x):
        """Evaluate ``1 - F(x)`` through the node's complementary form."""

        x = np.asarray(x, dtype=float)
        y = self._clipped(self._survival, x)
        if y.ndim == 0:
            return float(y)
        return y

    @staticmethod
    def _clipped(func, x):
        with np.errstate(over='ignore', under='ignore', divide='ignore'):
            y = func(np.atleast_1d(x))
        return np.clip(y, 0., 1.).reshape(x.shape)

    def value(self, x):
        """Evaluate at a single point and return a float."""

        return float(self._clipped(self._evaluate, np.asarray(float(x))))

    @abstractmethod
    def _evaluate(self, x):
        """Evaluate on a one-dimensional array ``x``."""

        pass

    def _survival(self, x):
        return 1. - self._evaluate(x)

    def log_value(self, x):
        """Evaluate ``log F(x)``, ``-inf`` where ``F`` vanishes.

        Nodes with a closed-form logarithm keep full precision where ``F(x)``
        underflows.
        """

        x = np.asarray(x, dtype=float)
        with np.errstate(over='ignore', under='ignore', divide='ignore',
                         invalid='ignore'):
            y = self._log_evaluate(np.atleast_1d(x))
        y = np.minimum(y, 0.).reshape(x.shape)
        return float(y) if y.ndim == 0 else y

    def _log_evaluate(self, x):
        with np.errstate(divide='ignore'):
            return np.log(np.clip(self._evaluate(x), 0., 1.))

    @cached_property
    def discontinuities(self):
        """Sorted tuple of known jump locations."""

        return tuple(sorted(set(float(d) for d in self._discontinuities()
                                if np.isfinite(d))))

    def _discontinuities(self):
        return ()

    @cached_property
    def alpha(self):
        """Left end point ``sup{x: F(x) = 0}`` of the support."""

        value = self._alpha()
        return bisect_alpha(self) if value is None else float(value)

    @cached_property
    def omega(self):
        """Right end point ``inf{x: F(x) = 1}`` of the support."""

        value = self._omega()
        return bisect_omega(self) if value is None else float(value)

    def _alpha(self):
        """Closed form of alpha, or None to fall back to bisection."""

        return None

    def _omega(self):
        return None

    def to_dict(self):
        """JSON compatible representation mirroring the graph."""

        d = {'node': self.node}
        d.update(self._fields())
        if self.children:
            d['children'] = [c.to_dict() for c in self.children]
        return d

    def _fields(self):
        return {}

    def __repr__(self):
        args = [repr(c) for c in self.children]
        args += ['{}={}'.format(k, v) for k, v in self._fields().items()]
        return '{}({})'.format(type(self).__name__, ', '.join(args))


class ParametricLeaf(AbstractDistFn):
    """Closed-form distribution function of a named family.

    Subclasses set ``family`` and implement the evaluation, its
    complementary form and the support end points. See
    :py:mod:`maxalg.distributions.families`.

    Attributes
    ----------

    family: str
        Family name.
    params: dict
        Parameter values, in the order of the family's constructor.
    """

    node = 'parametric'
    family = None

    def __init__(self, class_tag, params, children=()):
        super(ParametricLeaf, self).__init__(class_tag, children)
        self.params = dict(params)

    def _fields(self):
        return {'family': self.family, 'params': self.params}

    def __repr__(self):
        args = ['{}={}'.format(k, format_number(v))
                for k, v in self.params.items()]
        args += [repr(c) for c in self.children]
        return '{}({})'.format(type(self).__name__, ', '.join(args))


class EmpiricalLeaf(AbstractDistFn):
    """Right-continuous step function of a weighted sample.

    Tied sample points merge and add their weights. Weights default to equal
    weights and are normalised to sum to one.
    """

    node = 'empirical'

    def __init__(self, points, weights=None):
        points = np.asarray(points, dtype=float).ravel()
        if points.size == 0:
            raise ParameterError("Empirical distribution needs at least one "
                                 "sample point.")
        if not np.all(np.isfinite(points)):
            raise ParameterError("Sample points must be finite.")
        if weights is None:
            weights = np.ones_like(points)
        weights = np.asarray(weights, dtype=float).ravel()
        if weights.shape != points.shape:
            raise ParameterError("Got {} weights for {} sample points.".format(
                weights.size, points.size))
        if np.any(weights < 0) or not np.all(np.isfinite(weights)) or \
                weights.sum() <= 0:
            raise ParameterError("Weights must be finite, nonnegative and "
                                 "not all zero.")
        self.points, inverse = np.unique(points, return_inverse=True)
        merged = np.bincount(inverse.ravel(), weights=weights)
        self.weights = merged / merged.sum()
        self._cumulative = np.concatenate([[0.], np.cumsum(self.weights)])
        self._cumulative[-1] = 1.
        alpha_value = self.points[np.argmax(self.weights > 0)]
        super(EmpiricalLeaf, self).__init__(tag_from_support(
            alpha_value, float(self._cumulative[
                np.searchsorted(self.points, 0., side='right')])))

    def _evaluate(self, x):
        return self._cumulative[np.searchsorted(self.points, x, side='right')]

    def _survival(self, x):
        return 1. - self._evaluate(x)

    def _discontinuities(self):
        return self.points[self.weights > 0]

    def _alpha(self):
        return self.points[np.argmax(self.weights > 0)]

    def _omega(self):
        return self.points[np.nonzero(self.weights > 0)[0][-1]]

    def _fields(self):
        return {'points': self.points.tolist(),
                'weights': self.weights.tolist()}


class Dirac(AbstractDistFn):
    """Unit step at ``location``: the distribution of the constant
    ``location``."""

    node = 'dirac'

    def __init__(self, location):
        location = float(location)
        if not np.isfinite(location):
            raise ParameterError("Dirac location must be finite.")
        self.location = location
        super(Dirac, self).__init__(tag_from_support(location,
                                                     float(location <= 0)))

    def _evaluate(self, x):
        return (x >= self.location).astype(float)

    def _survival(self, x):
        return (x < self.location).astype(float)

    def _discontinuities(self):
        return self.location,

    def _alpha(self):
        return self.location

    def _omega(self):
        return self.location

    def _fields(self):
        return {'location': self.location}


class AffineRescale(AbstractDistFn):
    """``x -> child(a * x + b)`` with ``a > 0``."""

    node = 'affine'

    def __init__(self, child, a, b=0.):
        a = float(a)
        b = float(b)
        if not (np.isfinite(a) and a > 0):
            raise ParameterError("Scale must be positive, got {}.".format(a))
        if not np.isfinite(b):
            raise ParameterError("Shift must be finite, got {}.".format(b))
        self.a = a
        self.b = b
        if b == 0:
            tag = child.class_tag
        else:
            tag = tag_from_support((child.alpha - b) / a, child.value(b))
        super(AffineRescale, self).__init__(tag, (child,))

    @property
    def child(self):
        return self.children[0]

    def _evaluate(self, x):
        return self.child._evaluate(self.a * x + self.b)

    def _survival(self, x):
        return self.child._survival(self.a * x + self.b)

    def _log_evaluate(self, x):
        return self.child._log_evaluate(self.a * x + self.b)

    def _discontinuities(self):
        return [(d - self.b) / self.a for d in self.child.discontinuities]

    def _alpha(self):
        return (self.child.alpha - self.b) / self.a

    def _omega(self):
        return (self.child.omega - self.b) / self.a

    def _fields(self):
        return {'a': self.a, 'b': self.b}


class TruncateBelow(AbstractDistFn):
    """0 for ``x < cut`` and ``child(x)`` for ``x >= cut``."""

    node = 'truncate'

    def __init__(self, child, cut):
        cut = float(cut)
        if not np.isfinite(cut):
            raise ParameterError("Cut point must be finite.")
        self.cut = cut
        if cut > 0:
            tag = DELTA_PLUS_ZERO
        elif cut == 0:
            tag = tag_from_support(0., child.value(0.))
        else:
            tag = DELTA
        super(TruncateBelow, self).__init__(
            most_restrictive(tag, child.class_tag), (child,))

    @property
    def child(self):
        return self.children[0]

    def _evaluate(self, x):
        return np.where(x >= self.cut, self.child._evaluate(x), 0.)

    def _survival(self, x):
        return np.where(x >= self.cut, self.child._survival(x), 1.)

    def _log_evaluate(self, x):
        return np.where(x >= self.cut, self.child._log_evaluate(x), -np.inf)

    def _discontinuities(self):
        return self.child.discontinuities + (self.cut,)

    def _alpha(self):
        return max(self.cut, self.child.alpha)

    def _omega(self):
        return max(self.cut, self.child.omega)

    def _fields(self):
        return {'cut': self.cut}


# Pointwise operators.
# func(u, param) evaluates on values, survival(s, param) on complementary
# values s = 1 - u. keeps_zero: 0 maps to 0, so domain classes are inherited.
# keeps_alpha: u > 0 iff result > 0. kink: the result can hit 0 where the
# input is positive, which adds alpha(result) to the exclusion list.
# from_log(log_u, param), if set, evaluates on log u instead of u, which keeps
# the result exact where u underflows.
_Op = namedtuple('_Op', ['func', 'survival', 'keeps_zero', 'keeps_alpha',
                         'kink', 'from_log'], defaults=(None,))


def _log_survival(s):
    return -np.log1p(-s)


def _chi_inv_survival(s, _):
    big = _log_survival(s)
    with np.errstate(invalid='ignore'):
        return np.where(np.isinf(big), 1., big / (1. + big))


def _bn_survival(s, t):
    s1 = np.minimum((1. + t) * s, 1.)
    tau = 1. / (1. + t)
    return tau * s1 / (1. + (tau - 1.) * s1)


def _bn(u, t):
    if t == 1:
        return scalar.bn_unit_time(u)
    return scalar.bn_scalar(u, t)


def _bool_max_survival(a, b, _):
    with np.errstate(invalid='ignore', divide='ignore'):
        r = (a + b - 2. * a * b) / (1. - a * b)
    return np.where(a * b >= 1., 1., r)


POINTWISE1_OPS = {
    'free_power': _Op(
        scalar.free_power, lambda s, t: np.minimum(t * s, 1.),
        True, False, True),
    'free_root': _Op(
        lambda u, t: scalar._free_power(scalar.as_unit(u), t),
        lambda s, t: np.minimum(t * s, 1.),
        False, False, False),
    'bool_power': _Op(
        scalar.bool_power, lambda s, t: t * s / (1. + (t - 1.) * s),
        True, True, False),
    'classical_power': _Op(
        scalar.classical_power, lambda s, t: -np.expm1(t * np.log1p(-s)),
        True, True, False),
    'lambda_vee': _Op(
        lambda u, _: scalar.lambda_vee(u),
        lambda s, _: np.minimum(_log_survival(s), 1.),
        True, False, True, lambda log_u, _: np.maximum(1. + log_u, 0.)),
    'chi': _Op(
        lambda u, _: scalar.chi(u), lambda s, _: -np.expm1(-s / (1. - s)),
        True, True, False),
    'chi_inv': _Op(
        lambda u, _: scalar.chi_inv(u), _chi_inv_survival,
        True, True, False, lambda log_u, _: 1. / (1. - log_u)),
    'bn': _Op(
        _bn, _bn_survival, True, False, True),
    'free_to_boolean_limit': _Op(
        lambda u, _: scalar.free_to_boolean_limit(u),
        lambda s, _: s / (1. + s),
        False, False, False),
}

POINTWISE2_OPS = {
    'classical_max': _Op(
        lambda u, v, _: scalar.classical_max(u, v),
        lambda a, b, _: a + b - a * b, True, True, False),
    'free_max': _Op(
        lambda u, v, _: scalar.free_max(u, v),
        lambda a, b, _: np.minimum(a + b, 1.), True, False, True),
    'bool_max': _Op(
        lambda u, v, _: scalar.bool_max(u, v), _bool_max_survival,
        True, True, False),
    'mixture': _Op(
        scalar.mixture, lambda a, b, w: (1. - w) * a + w * b,
        False, False, False),
}


class Pointwise1(AbstractDistFn):
    """A scalar map applied to the values of ``child``.

    Parameters
    ----------

    op: str
        Key of ``POINTWISE1_OPS``.
    child: AbstractDistFn
    param: float | None
        Exponent or semigroup time of the map, if it takes one.
    """

    node = 'pointwise1'

    def __init__(self, op, child, param=None):
        if op not in POINTWISE1_OPS:
            raise DomainError("Unknown pointwise map {}.".format(op))
        self.op = op
        self.param = None if param is None else float(param)
        self._op = POINTWISE1_OPS[op]
        if op == 'free_root' and self.param == 1:
            tag = child.class_tag
        else:
            tag = child.class_tag if self._op.keeps_zero else DELTA
        super(Pointwise1, self).__init__(tag, (child,))

    @property
    def child(self):
        return self.children[0]

    def _evaluate(self, x):
        if self._op.from_log is not None:
            log_u = np.minimum(self.child._log_evaluate(x), 0.)
            return self._op.from_log(log_u, self.param)
        return self._op.func(self.child._evaluate(x), self.param)

    def _log_evaluate(self, x):
        if self.op == 'classical_power':
            return self.param * self.child._log_evaluate(x)
        if self.op == 'chi':
            u = np.clip(self.child._evaluate(x), 0., 1.)
            with np.errstate(divide='ignore'):
                return 1. - 1. / u
        return super(Pointwise1, self)._log_evaluate(x)

    def _survival(self, x):
        s = np.clip(self.child._survival(x), 0., 1.)
        return self._op.survival(s, self.param)

    def _discontinuities(self):
        points = list(self.child.discontinuities)
        if self._op.kink:
            points.append(self.alpha)
        return points

    def _alpha(self):
        if self._op.keeps_alpha:
            return self.child.alpha
        if self.op in ('free_root', 'free_to_boolean_limit'):
            return self.child.alpha if self.param == 1 else -np.inf
        return None

    def _omega(self):
        # Every map sends 1 to 1 and values below 1 below 1.
        return self.child.omega

    def _fields(self):
        return {'op': self.op, 'param': self.param}


class Pointwise2(AbstractDistFn):
    """A scalar binary operation applied to the values of two children."""

    node = 'pointwise2'

    def __init__(self, op, left, right, param=None):
        if op not in POINTWISE2_OPS:
            raise DomainError("Unknown pointwise operation {}.".format(op))
        self.op = op
        self.param = None if param is None else float(param)
        self._op = POINTWISE2_OPS[op]
        if self._op.keeps_zero:
            tag = most_restrictive(left.class_tag, right.class_tag)
        else:
            tag = least_restrictive(left.class_tag, right.class_tag)
        super(Pointwise2, self).__init__(tag, (left, right))

    @property
    def left(self):
        return self.children[0]

    @property
    def right(self):
        return self.children[1]

    def _evaluate(self, x):
        return self._op.func(self.left._evaluate(x), self.right._evaluate(x),
                             self.param)

    def _survival(self, x):
        a = np.clip(self.left._survival(x), 0., 1.)
        b = np.clip(self.right._survival(x), 0., 1.)
        return self._op.survival(a, b, self.param)

    def _log_evaluate(self, x):
        if self.op == 'classical_max':
            return self.left._log_evaluate(x) + self.right._log_evaluate(x)
        return super(Pointwise2, self)._log_evaluate(x)

    def _discontinuities(self):
        points = list(self.left.discontinuities + self.right.discontinuities)
        if self._op.kink:
            points.append(self.alpha)
        return points

    def _alpha(self):
        if self._op.keeps_alpha:
            return max(self.left.alpha, self.right.alpha)
        if self.op == 'mixture':
            if self.param == 0:
                return self.left.alpha
            if self.param == 1:
                return self.right.alpha
            return min(self.left.alpha, self.right.alpha)
        return None

    def _omega(self):
        if self.op == 'mixture' and self.param in (0, 1):
            return self.children[int(self.param)].omega
        return max(self.left.omega, self.right.omega)

    def _fields(self):
        return {'op': self.op, 'param': self.param}


def evaluate(F, x):
    """Evaluate ``F`` at ``x`` (float or array)."""

    return F(x)


def alpha(F):
    """Left end point of the support, possibly ``-inf``."""

    return F.alpha


def omega(F):
    """Right end point of the support, possibly ``inf``."""

    return F.omega


def require_positive(F, what):
    if not is_positive_class(F.class_tag):
        raise ClassError("{} requires a distribution function supported on "
                         "[0, inf), got class {}.".format(what, F.class_tag))


def combine(op, F, G):
    """Max-convolution of two distribution functions.

    Parameters
    ----------

    op: str
        One of ``classical_max``, ``free_max``, ``bool_max``.
    F, G: AbstractDistFn
        Operands. ``bool_max`` requires both in a positive class.

    Returns
    -------

    : Pointwise2
    """

    if op not in MAX_OPS:
        raise DomainError("Unknown max-convolution {}; choose from "
                          "{}.".format(op, MAX_OPS))
    if op == 'bool_max':
        require_positive(F, 'Boolean max-convolution')
        require_positive(G, 'Boolean max-convolution')
    return Pointwise2(op, F, G)


def power(conv, F, t):
    """Convolution power of ``F`` with real exponent ``t``.

    The free power needs ``t >= 1``, the classical power ``t > 0``. The
    Boolean power needs ``t >= 0`` and ``F`` in a positive class; ``t = 0``
    gives the unit step at ``alpha(F)``.
    """

    t = float(t)
    if conv == 'classical':
        if not t > 0:
            raise DomainError("Classical power needs t > 0, got {}.".format(
                t))
        return Pointwise1('classical_power', F, t)
    if conv == 'free':
        if not t >= 1:
            raise DomainError("Free power needs t >= 1, got {}.".format(t))
        return Pointwise1('free_power', F, t)
    if conv == 'bool':
        require_positive(F, 'Boolean power')
        if not t >= 0:
            raise DomainError("Boolean power needs t >= 0, got {}.".format(t))
        if t == 0:
            return Dirac(F.alpha)
        return Pointwise1('bool_power', F, t)
    raise DomainError("Unknown convolution {}; choose from {}.".format(
        conv, CONVOLUTIONS))


def apply_map(m, F):
    """Apply ``lambda_vee``, ``chi`` or ``chi_inv`` pointwise.

    ``chi`` and ``chi_inv`` require ``F`` in a positive class.
    """

    if m not in MAPS:
        raise DomainError("Unknown map {}; choose from {}.".format(m, MAPS))
    if m != 'lambda_vee':
        require_positive(F, 'Map {}'.format(m))
    return Pointwise1(m, F)


def mixture(F, G, w):
    """``(1 - w) F + w G``."""

    if not 0 <= float(w) <= 1:
        raise ParameterError("Mixture weight must be in [0, 1], got "
                             "{}.".format(w))
    return Pointwise2('mixture', F, G, w)


def is_freely_max_id(F):
    """Freely max-infinitely divisible iff ``alpha(F) > -inf``."""

    return bool(F.alpha > -np.inf)


def is_free_regular_max_id(F):
    """Free regular max-infinitely divisible iff ``alpha(F) > 0``; defined
    for distribution functions vanishing on (-inf, 0]."""

    if F.class_tag != DELTA_PLUS_ZERO:
        raise ClassError("Free regularity is defined for distribution "
                         "functions with F(0) = 0, got class {}.".format(
                             F.class_tag))
    return bool(F.alpha > 0)


def _check_root_index(n):
    if int(n) != n or n < 1:
        raise DomainError("Root index must be an integer >= 1, got {}.".format(
            n))
    return int(n)


def free_nth_root(F, n):
    """Distribution function ``G`` with ``power('free', G, n) == F``.

    ``G = F/n - (1/n - 1)`` on ``[alpha(F), inf)`` and 0 below; exists iff
    ``alpha(F) > -inf``.
    """

    n = _check_root_index(n)
    if not is_freely_max_id(F):
        raise DomainError("Free roots need alpha(F) > -inf.")
    if n == 1:
        return F
    return TruncateBelow(Pointwise1('free_root', F, 1. / n), F.alpha)


def bool_nth_root(F, n):
    """Boolean ``n``-th root ``F / (1/n - (1/n - 1) F)``."""

    n = _check_root_index(n)
    require_positive(F, 'Boolean root')
    if n == 1:
        return F
    return power('bool', F, 1. / n)


def classical_nth_root(F, n):
    """Classical ``n``-th root ``F ** (1/n)``."""

    n = _check_root_index(n)
    if n == 1:
        return F
    return power('classical', F, 1. / n)


def rescale(F, a, b=0.):
    return AffineRescale(F, a, b)


def truncate(F, cut):
    return TruncateBelow(F, cut)


class EvalGrid:
    """Probe points for comparing distribution functions.

    Parameters
    ----------

    points: array_like
        Strictly increasing, finite.
    exclusion_radius: float
        Points closer than this to a discontinuity of the limit candidate
        are skipped by :py:func:`sup_distance`.
    """

    def __init__(self, points, exclusion_radius=None):
        if exclusion_radius is None:
            exclusion_radius = get_default_config().getfloat(
                'grid', 'exclusion_radius')
        points = np.array(points, dtype=float).ravel()
        if points.size == 0 or not np.all(np.isfinite(points)):
            raise ParameterError("Grid points must be finite and nonempty.")
        if np.any(np.diff(points) <= 0):
            raise ParameterError("Grid points must be strictly increasing.")
        if not exclusion_radius > 0:
            raise ParameterError("Exclusion radius must be positive.")
        points.flags.writeable = False
        self.points = points
        self.exclusion_radius = float(exclusion_radius)

    @classmethod
    def linear(cls, lo, hi, num, exclusion_radius=None):
        return cls(np.linspace(lo, hi, int(num)), exclusion_radius)

    @classmethod
    def log(cls, lo, hi, num, exclusion_radius=None):
        if not lo > 0:
            raise ParameterError("A logarithmic grid needs lo > 0.")
        return cls(np.geomspace(lo, hi, int(num)), exclusion_radius)

    def __len__(self):
        return len(self.points)

    def continuity_points(self, discontinuities=()):
        """Grid points farther than ``exclusion_radius`` from every
        discontinuity."""

        x = self.points
        if len(discontinuities):
            d = np.sort(np.asarray(discontinuities, dtype=float))
            idx = np.searchsorted(d, x)
            left = d[np.clip(idx - 1, 0, len(d) - 1)]
            right = d[np.clip(idx, 0, len(d) - 1)]
            distance = np.minimum(np.abs(x - left), np.abs(x - right))
            x = x[distance > self.exclusion_radius]
        if x.size == 0:
            raise EmptyGrid("No grid point is a continuity point of the "
                            "candidate.")
        return x


def default_grid(*distributions, num=None, exclusion_radius=None):
    """Probe grid covering ``[alpha - 1, omega + 1]`` of all
    ``distributions``, clipped to the configured bounds.

    Half of the points are linearly spaced, the other half logarithmically
    clustered on both sides of each finite ``alpha``.
    """

    config = get_default_config()
    if num is None:
        num = config.getint('grid', 'num_points')
    lower = config.getfloat('grid', 'lower_bound')
    upper = config.getfloat('grid', 'upper_bound')
    floor = config.getfloat('grid', 'log_floor')

    alphas = [F.alpha for F in distributions]
    omegas = [F.omega for F in distributions]
    lo = max(min(alphas) - 1, lower)
    hi = min(max(omegas) + 1, upper)
    if not lo < hi:
        lo = min(alphas) - 1
        hi = max(omegas) + 1

    anchors = sorted(set(a for a in alphas if lo <= a <= hi))
    if not anchors:
        anchors = [min(max(0., lo), hi)]
    num_linear = num // 2 + 1
    per_side = max((num - num_linear) // (2 * len(anchors)), 2)

    parts = [np.linspace(lo, hi, num_linear), np.array(anchors)]
    for a in anchors:
        if hi - a > floor:
            parts.append(a + np.geomspace(floor, hi - a, per_side))
        if a - lo > floor:
            parts.append(a - np.geomspace(floor, a - lo, per_side))
    points = np.unique(np.concatenate(parts))
    points = points[(points >= lo) & (points <= hi)]
    return EvalGrid(points, exclusion_radius)


def sup_distance(F, G, grid=None):
    """Largest ``|F(x) - G(x)|`` over grid points that are continuity points
    of ``G``."""

    if grid is None:
        grid = default_grid(F, G)
    x = grid.continuity_points(G.discontinuities)
    return float(np.max(np.abs(F(x) - G(x))))


def _levy_points(F, G, resolution, grid=None):
    if grid is None:
        grid = default_grid(F, G)
    lo, hi = grid.points[0], grid.points[-1]
    num = int(min((hi - lo) / resolution, 20000)) + 1
    jumps = np.array(F.discontinuities + G.discontinuities)
    jumps = jumps[(jumps >= lo) & (jumps <= hi)]
    offsets = np.array([-0.5, 0.5]) * resolution
    parts = [grid.points, np.linspace(lo, hi, num),
             (jumps[:, None] + offsets[None, :]).ravel(), jumps]
    return np.unique(np.concatenate(parts))


def levy_distance(F, G, resolution=None, points=None, grid=None):
    """Levy distance on the lattice ``{k * resolution}``.

    Returns the smallest lattice ``eps`` with
    ``F(x - eps) - eps <= G(x) <= F(x + eps) + eps`` and the same with ``F``
    and ``G`` swapped, for all probe points. The result is symmetric and
    exceeds the Levy distance restricted to the probe points by less than
    ``resolution``.

    Unless ``points`` are given, the probe points are the points of ``grid``
    (default: :py:func:`default_grid` of ``F`` and ``G``), a lattice over its
    range and both sides of every jump inside that range.
    """

    if resolution is None:
        resolution = get_default_config().getfloat('limit', 'levy_resolution')
    if not resolution > 0:
        raise DomainError("Resolution must be positive.")
    x = _levy_points(F, G, resolution, grid) if points is None else \
        np.asarray(points, dtype=float)
    slack = 1e-12
    fx = F(x)
    gx = G(x)

    def within(eps):
        fm, fp = F(x - eps), F(x + eps)
        gm, gp = G(x - eps), G(x + eps)
        return bool(np.all(fm - eps <= gx + slack) and
                    np.all(gx <= fp + eps + slack) and
                    np.all(gm - eps <= fx + slack) and
                    np.all(fx <= gp + eps + slack))

    if within(0.):
        return 0.
    lo, hi = 0, int(np.ceil(1. / resolution))
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if within(mid * resolution):
            hi = mid
        else:
            lo = mid
    return hi * resolution


def check_distribution(F, points=None):
    """Probe the defining properties of a distribution function.

    Returns a list of violated properties, empty if none is found:
    monotonicity on ``points``, limits 0 and 1, soundness of the class tag
    and right-continuity at declared jumps.
    """

    if points is None:
        points = default_grid(F).points
    points = np.asarray(points, dtype=float)
    problems = []
    values = F(points)
    if np.any(np.diff(values) < -1e-12):
        problems.append('not nondecreasing')
    if F.value(-1e300) > 1e-12:
        problems.append('limit at -inf is not 0')
    if F.value(1e300) < 1 - 1e-12:
        problems.append('limit at +inf is not 1')
    if is_positive_class(F.class_tag):
        negative = np.append(points[points < 0], -0.5)
        if np.any(F(negative) != 0):
            problems.append('tagged {} but positive below 0'.format(
                F.class_tag))
    if F.class_tag == DELTA_PLUS_ZERO and F.value(0.) != 0:
        problems.append('tagged {} but F(0) > 0'.format(F.class_tag))
    for d in F.discontinuities:
        step = 1e-9 * max(1., abs(d))
        if abs(F.value(d + step) - F.value(d)) > 1e-6:
            problems.append('not right-continuous at {}'.format(d))
    return problems
