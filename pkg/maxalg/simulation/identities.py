# -*- coding: utf-8 -*-
"""
Identity suite of the max-convolution algebra.

Each identity computes the largest deviation between two sides of an exact
relation: scalar laws on random samples, lifted laws on probe grids of
parametric distribution functions. The suite backs the ``check`` command.

.. autosummary::
    :nosignatures:

    IdentityResult
    IDENTITIES
    run_identities
"""

from dataclasses import dataclass

import numpy as np

from maxalg.algebra import scalar
from maxalg.conversion.utils import bn, exchange_check, \
    free_to_classical_limit, theta_preimage
from maxalg.distributions.families import BetaLaw, CompoundPoissonClassical, \
    CompoundPoissonFree, Dagum, Frechet, FreeExponential, Gumbel, Pareto, \
    Weibull, normalizing_constants
from maxalg.distributions.utils import AffineRescale, apply_map, \
    bool_nth_root, check_distribution, classical_nth_root, default_grid, \
    free_nth_root, power, sup_distance
from maxalg.tails.utils import tail_ratio
from maxalg.utils.errors import ConfigError

EXACT = 1e-12
COMPOSED = 1e-10

# Added to the deviation of the identity named by ``inject_fault``.
FAULT_OFFSET = 1.

SEED = 0
NUM_SAMPLES = 10 ** 5
NUM_POWER_SAMPLES = 10 ** 4
ALPHAS = (0.5, 1., 2.)


@dataclass
class IdentityResult:
    name: str
    max_deviation: float
    tolerance: float
    passed: bool
    description: str = ''

    def to_dict(self):
        return {'name': self.name, 'max_deviation': self.max_deviation,
                'tolerance': self.tolerance, 'passed': self.passed,
                'description': self.description}


IDENTITIES = {}


def identity(name, tolerance):
    """Register ``func(rng) -> max deviation`` under ``name``."""

    def register(func):
        IDENTITIES[name] = (func, tolerance)
        return func

    return register


def _max(*deviations):
    return float(max(np.max(np.abs(d)) for d in deviations))


def _distance(F, G):
    return sup_distance(F, G, default_grid(G))


def _positive_laws():
    return (Dagum(1., 1.), Dagum(1., 2.),
            CompoundPoissonFree(0.5, Frechet(1.)))


@identity('max_convolution_laws', EXACT)
def max_convolution_laws(rng):
    """Commutativity, associativity and unit of the three
    max-convolutions."""

    u, v, w = rng.uniform(size=(3, NUM_SAMPLES))
    deviations = []
    for op in (scalar.classical_max, scalar.free_max, scalar.bool_max):
        deviations += [op(u, v) - op(v, u),
                       op(op(u, v), w) - op(u, op(v, w)),
                       op(u, 1.) - u]
    return _max(*deviations)


@identity('lambda_vee_homomorphism', EXACT)
def lambda_vee_homomorphism(rng):
    """``lambda_vee`` turns products into free max-convolutions and
    classical into free powers."""

    u, v = rng.uniform(size=(2, NUM_SAMPLES))
    t = rng.uniform(1., 10., NUM_SAMPLES)
    lv = scalar.lambda_vee
    return _max(lv(u * v) - scalar.free_max(lv(u), lv(v)),
                lv(u ** t) - scalar.free_power(lv(u), t))


@identity('chi_homomorphism', EXACT)
def chi_homomorphism(rng):
    """``chi`` turns Boolean max-convolutions into products; ``chi_inv`` is
    its inverse."""

    u, v = rng.uniform(0.01, 1., size=(2, NUM_SAMPLES))
    chi, chi_inv = scalar.chi, scalar.chi_inv
    return _max(chi(scalar.bool_max(u, v)) - chi(u) * chi(v),
                chi_inv(u * v) - scalar.bool_max(chi_inv(u), chi_inv(v)),
                chi(chi_inv(u)) - u, chi_inv(chi(u)) - u)


@identity('power_laws', EXACT)
def power_laws(rng):
    """Additivity and composition of free and Boolean powers."""

    u = rng.uniform(size=NUM_POWER_SAMPLES)
    t, s = rng.uniform(1., 10., size=(2, NUM_POWER_SAMPLES))
    tb, sb = rng.uniform(1e-3, 10., size=(2, NUM_POWER_SAMPLES))
    fp, bp = scalar.free_power, scalar.bool_power
    return _max(scalar.free_max(fp(u, t), fp(u, s)) - fp(u, t + s),
                fp(fp(u, t), s) - fp(u, t * s),
                scalar.bool_max(bp(u, tb), bp(u, sb)) - bp(u, tb + sb),
                bp(bp(u, tb), sb) - bp(u, tb * sb))


@identity('exchange_identity', COMPOSED)
def exchange_identity(rng):
    """Boolean power of a free power equals a free power of a Boolean
    power, with exponents from ``pq_exchange``."""

    deviations = [np.subtract(scalar.pq_exchange(2., 0.75), (3., 0.5))]
    for F in _positive_laws():
        for p, q in ((2., 0.75), (1.5, 0.9), (3., 0.7)):
            deviations.append(exchange_check(F, p, q))
    u = rng.uniform(size=NUM_POWER_SAMPLES)
    p = rng.uniform(1., 10., NUM_POWER_SAMPLES)
    q = 1. - 1. / p + rng.uniform(1e-3, 5., NUM_POWER_SAMPLES)
    for ui, pi, qi in zip(u[:1000], p, q):
        p_new, q_new = scalar.pq_exchange(pi, qi)
        lhs = scalar.bool_power(scalar.free_power(ui, pi), qi)
        rhs = scalar.free_power(scalar.bool_power(ui, q_new), p_new)
        deviations.append(lhs - rhs)
        deviations.append(np.subtract(
            scalar.pq_exchange_inverse(p_new, q_new), (pi, qi)))
    return _max(*deviations)


@identity('bn_semigroup', COMPOSED)
def bn_semigroup(rng):
    """``bn(bn(F, t), s) == bn(F, t + s)``."""

    deviations = []
    for F in _positive_laws():
        for t in (0.5, 1., 2.):
            for s in (0.5, 1., 2.):
                deviations.append(_distance(bn(bn(F, t), s), bn(F, t + s)))
    return _max(*deviations)


@identity('bn_unit_time', EXACT)
def bn_unit_time(rng):
    """``bn(F, 1) == lambda_vee(chi(F))``, the fused form agrees, and
    ``bn(D_alpha, 1) == P_alpha``."""

    deviations = []
    for F in _positive_laws():
        deviations.append(_distance(bn(F, 1), apply_map(
            'lambda_vee', apply_map('chi', F))))
        deviations.append(_distance(bn(F, 1, fused=True), bn(F, 1)))
    for alpha in ALPHAS:
        deviations.append(_distance(bn(Dagum(1., alpha), 1), Pareto(alpha)))
    return _max(*deviations)


@identity('bn_tail', 1e-3)
def bn_tail(rng):
    """``bn(F, t)`` has the same tail as ``F``."""

    probes = [1e6]
    deviations = []
    for F in (Dagum(1., 1.), Dagum(1., 2.)):
        for t in (0.5, 1., 2.):
            deviations.append(tail_ratio(F, bn(F, t), probes) - 1.)
    return _max(*deviations)


@identity('theta_preimage', EXACT)
def theta_preimage_identity(rng):
    """``bn(theta_preimage(H), 1) == lambda_vee(H)``."""

    deviations = []
    for H in (Frechet(1.), CompoundPoissonClassical(1., Frechet(2.))):
        deviations.append(_distance(bn(theta_preimage(H), 1),
                                    apply_map('lambda_vee', H)))
    return _max(*deviations)


@identity('extreme_value_pairings', EXACT)
def extreme_value_pairings(rng):
    """``lambda_vee`` maps the classical extreme value laws onto the free
    ones; ``chi`` pairs Dagum and Frechet laws."""

    deviations = [_distance(apply_map('lambda_vee', Gumbel()),
                            FreeExponential())]
    for alpha in ALPHAS:
        deviations += [
            _distance(apply_map('lambda_vee', Frechet(alpha)), Pareto(alpha)),
            _distance(apply_map('lambda_vee', Weibull(alpha)),
                      BetaLaw(alpha)),
            _distance(apply_map('chi', Dagum(1., alpha)), Frechet(alpha)),
            _distance(apply_map('chi_inv', Frechet(alpha)),
                      Dagum(1., alpha))]
    return _max(*deviations)


@identity('max_stability', COMPOSED)
def max_stability(rng):
    """Rescaled powers of max-stable laws reproduce the law."""

    laws = [Gumbel(), FreeExponential()]
    for alpha in ALPHAS:
        laws += [Frechet(alpha), Weibull(alpha), Pareto(alpha),
                 BetaLaw(alpha), Dagum(1., alpha)]
    deviations = []
    for F in laws:
        for n in (2, 10, 100):
            conv, a, b = normalizing_constants(F, n)
            deviations.append(_distance(AffineRescale(power(conv, F, n), a, b),
                                        F))
    return _max(*deviations)


@identity('root_inversion', COMPOSED)
def root_inversion(rng):
    """Free, Boolean and classical ``n``-th roots invert the powers."""

    deviations = []
    for F in _positive_laws() + (Pareto(1.),):
        for n in (2, 7, 64):
            deviations += [
                _distance(power('free', free_nth_root(F, n), n), F),
                _distance(power('bool', bool_nth_root(F, n), n), F),
                _distance(power('classical', classical_nth_root(F, n), n), F)]
    return _max(*deviations)


@identity('compound_poisson', EXACT)
def compound_poisson(rng):
    """The free compound Poisson law is the ``lambda_vee`` image of the
    classical one; for ``lam < 1`` the converse limit map sends it back to
    a classical compound Poisson law."""

    base = Frechet(1.)
    deviations = []
    for lam in (0.5, 1., 2.):
        deviations.append(_distance(
            apply_map('lambda_vee', CompoundPoissonClassical(lam, base)),
            CompoundPoissonFree(lam, base)))
    for lam in (0.25, 0.5, 0.9):
        deviations.append(_distance(
            free_to_classical_limit(CompoundPoissonFree(lam, base)),
            CompoundPoissonClassical(lam, base)))
    return _max(*deviations)


@identity('support_endpoints', 1e-9)
def support_endpoints(rng):
    """``alpha(F^(free t))`` solves ``F(x) = 1 - 1/t``."""

    deviations = []
    for t in (2., 3., 10.):
        # Frechet(1) equals 1 - 1/t at x = -1 / log(1 - 1/t).
        expected = -1. / np.log(1. - 1. / t)
        deviations.append(power('free', Frechet(1.), t).alpha - expected)
    return _max(*deviations)


@identity('distribution_properties', 0.)
def distribution_properties(rng):
    """Number of violated distribution function properties on composite
    graphs."""

    D1 = Dagum(1., 1.)
    graphs = [bn(D1, 1), power('free', Frechet(1.), 2),
              free_nth_root(Pareto(1.), 5), bool_nth_root(D1, 5),
              apply_map('lambda_vee', Gumbel()),
              apply_map('chi', CompoundPoissonFree(0.5, Frechet(1.)))]
    return float(sum(len(check_distribution(F)) for F in graphs))


def run_identities(names=None, inject_fault=None, seed=SEED):
    """Evaluate the identities in ``names`` (all by default).

    Parameters
    ----------

    names: list[str] | None
    inject_fault: str | None
        Test hook: the named identity reports a deviation increased by
        ``FAULT_OFFSET`` and therefore fails.
    seed: int
        Seed of the random samples; results are deterministic.

    Returns
    -------

    results: list[IdentityResult]
    """

    if names is None:
        names = list(IDENTITIES)
    for name in list(names) + ([inject_fault] if inject_fault else []):
        if name not in IDENTITIES:
            raise ConfigError("Unknown identity '{}'; choose from {}.".format(
                name, sorted(IDENTITIES)))
    results = []
    for name in names:
        func, tolerance = IDENTITIES[name]
        deviation = func(np.random.default_rng(seed))
        if name == inject_fault:
            deviation += FAULT_OFFSET
        results.append(IdentityResult(
            name, deviation, tolerance, bool(deviation <= tolerance),
            (func.__doc__ or '').split('\n\n')[0].strip()))
    return results
