# -*- coding: utf-8 -*-
"""
Sequences of distribution functions fed into limit experiments.

A :py:class:`SequenceSpec` names a constructor ``n -> F_n``: the Boolean,
free and classical ``n``-th roots of a target, the truncated free root used
to characterise free max-infinitely divisible laws, the max-compound Poisson
pre-limits and the truncated sequences showing where the free-Boolean limit
correspondence needs extra hypotheses. :py:class:`KnSchedule` supplies the
indices ``n`` and exponents ``k_n``.

.. autosummary::
    :nosignatures:

    SequenceSpec
    KnSchedule
    build_sequence
    expected_limit
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from maxalg.conversion.utils import bn, converse_boolean_limit
from maxalg.distributions.families import BetaLaw, CompoundPoissonClassical, \
    CompoundPoissonFree, Dagum, Frechet, Pareto, cp_prelimit
from maxalg.distributions.utils import AbstractDistFn, AffineRescale, \
    Pointwise1, TruncateBelow, apply_map, bool_nth_root, classical_nth_root, \
    free_nth_root, is_positive_class, mixture, require_positive
from maxalg.utils.errors import DomainError, ParameterError
from maxalg.utils.utils import config_string_to_list, format_number, \
    get_default_config

BOOL_ROOT = 'bool_root'
FREE_ROOT = 'free_root'
CLASSICAL_ROOT = 'classical_root'
TRUNCATED_FREE_ROOT = 'truncated_free_root'
CP_PRELIMIT = 'cp_prelimit'
REMARK_TRUNCATED_PARETO = 'remark_truncated_pareto'
REMARK_F1 = 'remark_f1'
REMARK_F2 = 'remark_f2'

SEQUENCE_KINDS = (BOOL_ROOT, FREE_ROOT, CLASSICAL_ROOT, TRUNCATED_FREE_ROOT,
                  CP_PRELIMIT, REMARK_TRUNCATED_PARETO, REMARK_F1, REMARK_F2)


@dataclass(frozen=True)
class SequenceSpec:
    """Named constructor of a sequence ``F_n``.

    Use the class methods rather than the constructor; they validate the
    target against the convolutions the sequence is meant for.

    Attributes
    ----------

    kind: str
        One of ``SEQUENCE_KINDS``.
    target: AbstractDistFn | None
        Target distribution, or the base ``G`` of a compound Poisson
        pre-limit.
    params: tuple[float]
        ``(lam,)`` for compound Poisson pre-limits, ``(alpha,)`` for the
        truncated Pareto sequence.
    """

    kind: str
    target: Optional[AbstractDistFn] = field(default=None, compare=False)
    params: Tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in SEQUENCE_KINDS:
            raise ParameterError("Unknown sequence kind {}; choose from "
                                 "{}.".format(self.kind, SEQUENCE_KINDS))

    @classmethod
    def bool_root(cls, target):
        """``F_n = bool_nth_root(target, n)``."""

        require_positive(target, 'Boolean root sequence')
        return cls(BOOL_ROOT, target)

    @classmethod
    def free_root(cls, target):
        """``F_n = free_nth_root(target, n)``."""

        if not target.alpha > -np.inf:
            raise DomainError("Free root sequences need alpha(F) > -inf.")
        return cls(FREE_ROOT, target)

    @classmethod
    def classical_root(cls, target):
        """``F_n = target ** (1/n)``."""

        return cls(CLASSICAL_ROOT, target)

    @classmethod
    def truncated_free_root(cls, target):
        """``F_n = target / n - (1/n - 1)`` on ``[-n, inf)``, 0 below.

        Its free ``n``-th power equals ``target`` on ``[-n, inf)`` for any
        target, which shows every distribution function is a limit of free
        max-convolution powers.
        """

        return cls(TRUNCATED_FREE_ROOT, target)

    @classmethod
    def cp_prelimit(cls, lam, base):
        """``F_N = (1 - lam/N) 1_[0, inf) + (lam/N) base``."""

        lam = float(lam)
        if not (np.isfinite(lam) and lam >= 0):
            raise ParameterError("lam must be nonnegative, got {}.".format(
                lam))
        return cls(CP_PRELIMIT, base, (lam,))

    @classmethod
    def remark_truncated_pareto(cls, alpha):
        """``F_n(x) = P_alpha(n^(1/alpha) x)`` for ``x >= 1``, 0 below.

        The free ``n``-th powers equal ``P_alpha`` while the Boolean powers
        converge to the Dagum law truncated at 1.
        """

        alpha = float(alpha)
        if not (np.isfinite(alpha) and alpha > 0):
            raise ParameterError("alpha must be positive, got {}.".format(
                alpha))
        return cls(REMARK_TRUNCATED_PARETO, None, (alpha,))

    @classmethod
    def remark_f1(cls, target):
        """``1 - 1/n + target/n`` on ``[a, inf)``, linear
        ``(1 - 1/n) x / a`` on ``[0, a)``, 0 below, where
        ``a = alpha(target) > 0``."""

        _check_positive_alpha(target)
        return cls(REMARK_F1, target)

    @classmethod
    def remark_f2(cls, target):
        """``1 - 1/n + target/n`` on ``[0, inf)``, 0 below; requires
        ``alpha(target) > 0``."""

        _check_positive_alpha(target)
        return cls(REMARK_F2, target)

    @property
    def label(self):
        args = [format_number(p) for p in self.params]
        if self.target is not None:
            args.insert(0, repr(self.target))
        return '{}({})'.format(self.kind, ', '.join(args))

    def is_positive(self):
        """True if every ``F_n`` vanishes on (-inf, 0), so that Boolean
        powers apply."""

        if self.kind == CLASSICAL_ROOT:
            return is_positive_class(self.target.class_tag)
        if self.kind == FREE_ROOT:
            return bool(self.target.alpha >= 0)
        if self.kind == TRUNCATED_FREE_ROOT:
            return False
        if self.kind == CP_PRELIMIT:
            return is_positive_class(self.target.class_tag)
        return True


def _check_positive_alpha(target):
    require_positive(target, 'Truncated free-Boolean sequence')
    if not target.alpha > 0:
        raise ParameterError("The target needs alpha(F) > 0, got {}.".format(
            target.alpha))


def build_sequence(spec, n):
    """The distribution function ``F_n`` of ``spec``."""

    if int(n) != n or n < 1:
        raise ParameterError("Sequence index must be an integer >= 1, got "
                             "{}.".format(n))
    n = int(n)
    kind = spec.kind
    target = spec.target
    if kind == BOOL_ROOT:
        return bool_nth_root(target, n)
    if kind == FREE_ROOT:
        return free_nth_root(target, n)
    if kind == CLASSICAL_ROOT:
        return classical_nth_root(target, n)
    if kind == TRUNCATED_FREE_ROOT:
        return TruncateBelow(Pointwise1('free_root', target, 1. / n), -n)
    if kind == CP_PRELIMIT:
        return cp_prelimit(spec.params[0], target, n)
    if kind == REMARK_TRUNCATED_PARETO:
        alpha = spec.params[0]
        return TruncateBelow(AffineRescale(Pareto(alpha), n ** (1. / alpha)),
                             1.)
    if kind == REMARK_F1:
        a = target.alpha
        ramp = AffineRescale(BetaLaw(1.), 1. / a, -1.)
        return mixture(ramp, target, 1. / n)
    if kind == REMARK_F2:
        return TruncateBelow(Pointwise1('free_root', target, 1. / n), 0.)
    raise ParameterError("Unknown sequence kind {}.".format(kind))


def _boolean_limit_of_free_root(target):
    # 1 / (2 - F) on [alpha(F), inf), 0 below.
    return TruncateBelow(Pointwise1('free_to_boolean_limit', target),
                         target.alpha)


def _direct_limit(spec, conv):
    kind = spec.kind
    target = spec.target
    if kind == BOOL_ROOT:
        return {'bool': lambda: target,
                'free': lambda: bn(target, 1)}.get(conv)
    if kind == CLASSICAL_ROOT:
        return {'classical': lambda: target,
                'free': lambda: apply_map('lambda_vee', target)}.get(conv)
    if kind == FREE_ROOT:
        return {'free': lambda: target,
                'bool': (lambda: _boolean_limit_of_free_root(target))
                if spec.is_positive() else None}.get(conv)
    if kind == TRUNCATED_FREE_ROOT:
        return {'free': lambda: target,
                'classical': lambda: Pointwise1(
                    'chi', Pointwise1('free_to_boolean_limit', target))
                }.get(conv)
    if kind == CP_PRELIMIT:
        lam = spec.params[0]
        return {'classical': lambda: CompoundPoissonClassical(lam, target),
                'free': lambda: CompoundPoissonFree(lam, target)}.get(conv)
    if kind == REMARK_TRUNCATED_PARETO:
        alpha = spec.params[0]
        return {'free': lambda: Pareto(alpha),
                'bool': lambda: TruncateBelow(Dagum(1., alpha), 1.)}.get(conv)
    if kind == REMARK_F1:
        return {'free': lambda: target,
                'bool': lambda: _boolean_limit_of_free_root(target)}.get(conv)
    if kind == REMARK_F2:
        return {'free': lambda: target,
                'bool': lambda: converse_boolean_limit(target)}.get(conv)
    return None


def expected_limit(spec, conv):
    """Known weak limit of ``power(conv, F_n, n)``, or None.

    Limits not listed for a sequence kind are derived from the
    Boolean-classical bijection: a Boolean limit ``G`` implies the classical
    limit ``chi(G)``, and a classical limit ``F`` of a sequence on [0, inf)
    implies the Boolean limit ``chi_inv(F)``.
    """

    if conv not in ('classical', 'free', 'bool'):
        raise DomainError("Unknown convolution {}.".format(conv))
    if conv == 'bool' and not spec.is_positive():
        return None
    direct = _direct_limit(spec, conv)
    if direct is not None:
        return direct()
    if conv == 'classical':
        limit = _direct_limit(spec, 'bool')
        return None if limit is None else apply_map('chi', limit())
    if conv == 'bool':
        limit = _direct_limit(spec, 'classical')
        if limit is None:
            return None
        limit = limit()
        if not is_positive_class(limit.class_tag):
            return None
        return apply_map('chi_inv', limit)
    return None


@dataclass(frozen=True)
class KnSchedule:
    """Indices ``n`` and powers ``k_n = ceil(scale * n ** exponent)``.

    Both sequences must be strictly increasing positive integers.
    """

    indices: Tuple[int, ...]
    scale: float = 1.
    exponent: float = 1.

    def __post_init__(self):
        indices = tuple(self.indices)
        if not indices:
            raise ParameterError("A schedule needs at least one index.")
        if any(int(n) != n or n < 1 for n in indices):
            raise ParameterError("Schedule indices must be positive "
                                 "integers, got {}.".format(indices))
        object.__setattr__(self, 'indices', tuple(int(n) for n in indices))
        if not (self.scale > 0 and np.isfinite(self.exponent)):
            raise ParameterError("Schedule scale must be positive.")
        for values in (self.indices, self.k_values):
            if any(b <= a for a, b in zip(values, values[1:])):
                raise ParameterError("Schedule must be strictly increasing, "
                                     "got {}.".format(values))

    @classmethod
    def default(cls):
        config = get_default_config()
        return cls(tuple(config_string_to_list(
            config.get('limit', 'schedule'))))

    def k(self, n):
        # Guard against ceil(1000.0000000001) from rounding in n ** 1.
        value = self.scale * n ** self.exponent
        return max(int(np.ceil(value - 1e-9 * value)), 1)

    @property
    def k_values(self):
        return tuple(self.k(n) for n in self.indices)

    def __iter__(self):
        return iter(zip(self.indices, self.k_values))

    def __len__(self):
        return len(self.indices)
