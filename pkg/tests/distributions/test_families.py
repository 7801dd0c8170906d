# coding=utf-8

import numpy as np
import pytest

from maxalg.distributions.families import FAMILIES, BetaLaw, \
    CompoundPoissonClassical, CompoundPoissonFree, Dagum, FamilySpec, \
    Frechet, FreeExponential, Gumbel, Pareto, Weibull, cp_prelimit, make, \
    normalizing_constants
from maxalg.distributions.utils import AffineRescale, Dirac, EvalGrid, \
    apply_map, check_distribution, default_grid, power, sup_distance
from maxalg.utils.errors import ParameterError

MAX_STABLE = [Gumbel(), Frechet(1.), Frechet(3.), Weibull(0.5), Weibull(2.),
              FreeExponential(), Pareto(0.5), Pareto(2.), BetaLaw(1.),
              BetaLaw(2.), Dagum(1., 1.), Dagum(3., 0.5)]

ALL_LAWS = MAX_STABLE + [CompoundPoissonClassical(0.7, Frechet(1.)),
                         CompoundPoissonFree(0.5, Frechet(2.)),
                         CompoundPoissonFree(2., Pareto(1.))]


@pytest.mark.parametrize('F, x, expected', [
    (Gumbel(), 0., np.exp(-1.)),
    (Frechet(1.), 1., np.exp(-1.)),
    (Frechet(2.), 0., 0.),
    (Weibull(1.), -1., np.exp(-1.)),
    (Weibull(1.), 0.5, 1.),
    (FreeExponential(), 1., 1. - np.exp(-1.)),
    (FreeExponential(), -1., 0.),
    (Pareto(2.), 2., 0.75),
    (BetaLaw(1.), -0.5, 0.5),
    (BetaLaw(2.), -2., 0.),
    (Dagum(1., 1.), 1., 0.5),
    (Dagum(2., 1.), 1., 1. / 3.),
    (CompoundPoissonClassical(1., Frechet(1.)), 1., np.exp(np.exp(-1.) - 1.)),
    (CompoundPoissonFree(0.5, Frechet(1.)), 0., 0.5),
    (CompoundPoissonFree(0.5, Frechet(1.)), -1e-9, 0.)])
def test_closed_forms(F, x, expected):
    assert F(x) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize('F', ALL_LAWS)
def test_is_distribution_function(F):
    assert check_distribution(F) == []


@pytest.mark.parametrize('F', ALL_LAWS)
def test_survival_is_complement(F):
    x = default_grid(F).points
    np.testing.assert_allclose(F.survival(x), 1. - F(x), atol=1e-12)


@pytest.mark.parametrize('F, alpha, omega', [
    (Gumbel(), -np.inf, np.inf), (Weibull(1.), -np.inf, 0.),
    (FreeExponential(), 0., np.inf), (Pareto(1.), 1., np.inf),
    (BetaLaw(1.), -1., 0.), (Dagum(1., 1.), 0., np.inf),
    (CompoundPoissonClassical(0., Frechet(1.)), 0., 0.)])
def test_support(F, alpha, omega):
    assert F.alpha == alpha
    assert F.omega == omega


def test_free_compound_poisson_with_large_rate():
    # 2 (1 - exp(-1/x)) < 1 iff x > 1 / log 2.
    F = CompoundPoissonFree(2., Frechet(1.))
    assert F.alpha == pytest.approx(1. / np.log(2.), abs=1e-9)
    assert F.alpha in F.discontinuities


@pytest.mark.parametrize('args', [(0.,), (-1.,), (np.inf,), (np.nan,)])
@pytest.mark.parametrize('cls', [Frechet, Weibull, Pareto, BetaLaw])
def test_invalid_shape(cls, args):
    with pytest.raises(ParameterError):
        cls(*args)


def test_invalid_compound_poisson():
    with pytest.raises(ParameterError):
        CompoundPoissonFree(-1., Frechet(1.))
    with pytest.raises(ParameterError):
        CompoundPoissonClassical(1., 'frechet')
    with pytest.raises(ParameterError):
        Dagum(1., -1.)


def test_jump_of_base_at_zero_warns():
    with pytest.warns(RuntimeWarning):
        CompoundPoissonClassical(1., Dirac(0.))
    with pytest.warns(RuntimeWarning):
        cp_prelimit(1., Dirac(0.), 10)


class TestMake:

    def test_registry(self):
        assert sorted(FAMILIES) == ['betalaw', 'cpc', 'cpf', 'dagum',
                                    'frechet', 'freeexp', 'gumbel', 'pareto',
                                    'weibull']

    def test_make(self):
        F = make(FamilySpec('dagum', (1., 2.)))
        assert isinstance(F, Dagum)
        assert F.params == {'lam': 1., 'alpha': 2.}

    def test_make_with_base(self):
        F = make(FamilySpec('cpf', (0.5,), Frechet(1.)))
        assert isinstance(F, CompoundPoissonFree)
        assert F.base.params == {'alpha': 1.}

    @pytest.mark.parametrize('spec', [
        FamilySpec('lognormal', (1.,)), FamilySpec('pareto', ()),
        FamilySpec('dagum', (1.,)), FamilySpec('gumbel', (), Frechet(1.)),
        FamilySpec('cpc', (1.,))])
    def test_invalid(self, spec):
        with pytest.raises(ParameterError):
            make(spec)

    def test_spec_equality_ignores_base(self):
        assert FamilySpec('cpf', (1.,), Frechet(1.)) == \
            FamilySpec('cpf', (1.,), Frechet(2.))


@pytest.mark.parametrize('n', [2, 10, 100])
@pytest.mark.parametrize('F', MAX_STABLE)
def test_max_stability(F, n):
    conv, a, b = normalizing_constants(F, n)
    stable = AffineRescale(power(conv, F, n), a, b)
    assert sup_distance(stable, F) <= 1e-10


def test_normalizing_constants_need_max_stable_family():
    with pytest.raises(ParameterError):
        normalizing_constants(CompoundPoissonFree(0.5, Frechet(1.)), 2)


@pytest.mark.parametrize('classical, free', [
    (Gumbel(), FreeExponential()), (Frechet(1.), Pareto(1.)),
    (Frechet(2.5), Pareto(2.5)), (Weibull(1.), BetaLaw(1.)),
    (Weibull(3.), BetaLaw(3.))])
def test_lambda_vee_pairs_extreme_value_laws(classical, free):
    assert sup_distance(apply_map('lambda_vee', classical), free) <= 1e-12


def test_chi_pairs_dagum_with_frechet():
    for alpha in (0.5, 1., 2.):
        assert sup_distance(apply_map('chi', Dagum(1., alpha)),
                            Frechet(alpha)) <= 1e-12


def test_lambda_vee_of_classical_compound_poisson():
    for lam in (0.25, 1., 3.):
        G = Frechet(2.)
        assert sup_distance(
            apply_map('lambda_vee', CompoundPoissonClassical(lam, G)),
            CompoundPoissonFree(lam, G)) <= 1e-12


class TestPrelimit:

    def test_is_mixture_with_step(self):
        F = cp_prelimit(2., Frechet(1.), 10)
        assert F(-1.) == 0
        assert F(0.) == pytest.approx(0.8)
        assert F(1.) == pytest.approx(0.8 + 0.2 * np.exp(-1.))

    def test_classical_powers(self):
        G = Frechet(1.)
        N = 1000
        prelimit = power('classical', cp_prelimit(1., G, N), N)
        assert sup_distance(prelimit, CompoundPoissonClassical(1., G)) <= 1e-2

    def test_free_powers(self):
        G = Frechet(1.)
        N = 1000
        prelimit = power('free', cp_prelimit(0.5, G, N), N)
        grid = EvalGrid.linear(-1., 50., 511)
        assert sup_distance(prelimit, CompoundPoissonFree(0.5, G),
                            grid) <= 1e-10

    @pytest.mark.parametrize('lam, N', [(-1., 10), (1., 0), (1., 2.5),
                                        (5., 2)])
    def test_invalid(self, lam, N):
        with pytest.raises(ParameterError):
            cp_prelimit(lam, Frechet(1.), N)
