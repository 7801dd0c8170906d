# coding=utf-8

import numpy as np
import pytest

from maxalg.algebra import scalar
from maxalg.conversion.utils import BnParameter, bn, boolean_to_classical, \
    classical_to_boolean, classical_to_free, converse_boolean_limit, \
    exchange_check, free_to_classical_limit, theta_preimage
from maxalg.distributions.families import CompoundPoissonClassical, \
    CompoundPoissonFree, Dagum, Frechet, FreeExponential, Gumbel, Pareto
from maxalg.distributions.utils import DELTA_PLUS, DELTA_PLUS_ZERO, \
    apply_map, default_grid, sup_distance
from maxalg.utils.errors import ClassError, DomainError


class TestBn:

    @pytest.mark.parametrize('alpha', [0.5, 1., 2.])
    @pytest.mark.parametrize('fused', [False, True])
    def test_maps_dagum_to_pareto(self, alpha, fused):
        assert sup_distance(bn(Dagum(1., alpha), 1., fused),
                            Pareto(alpha)) <= 1e-12

    def test_fused_equals_composed(self, _positive_law):
        for t in (0.3, 1., 4.):
            assert sup_distance(bn(_positive_law, t, fused=True),
                                bn(_positive_law, t)) <= 1e-12

    def test_fused_unit_time_uses_closed_form(self, _positive_law):
        x = default_grid(_positive_law).points
        np.testing.assert_array_equal(
            bn(_positive_law, 1., fused=True)(x),
            scalar.bn_unit_time(_positive_law(x)))

    def test_unit_time_is_lambda_vee_after_chi(self, _positive_law):
        composed = classical_to_free(boolean_to_classical(_positive_law))
        assert sup_distance(bn(_positive_law, 1.), composed) <= 1e-12

    def test_semigroup(self, _positive_law):
        lhs = bn(bn(_positive_law, 0.5), 1.5)
        assert sup_distance(lhs, bn(_positive_law, 2.)) <= 1e-10

    def test_time_zero(self, _dagum):
        assert sup_distance(bn(_dagum, 0.), _dagum) <= 1e-14

    def test_keeps_positive_classes(self, _dagum, _cp_free):
        assert bn(_dagum, 1.).class_tag == DELTA_PLUS_ZERO
        assert bn(_cp_free, 1.).class_tag == DELTA_PLUS

    def test_keeps_tail(self, _pareto):
        image = bn(_pareto, 2.)
        assert image.survival(1e6) / _pareto.survival(1e6) == \
            pytest.approx(1., abs=1e-5)

    def test_needs_positive_support(self, _gumbel):
        with pytest.raises(ClassError):
            bn(_gumbel, 1.)

    @pytest.mark.parametrize('t', [-1., np.inf, np.nan])
    def test_time_domain(self, t, _dagum):
        with pytest.raises(DomainError):
            bn(_dagum, t)
        with pytest.raises(DomainError):
            BnParameter(t)

    def test_accepts_parameter(self, _dagum):
        assert bn(_dagum, BnParameter(1.))(1.) == bn(_dagum, 1.)(1.)


class TestMaps:

    @pytest.mark.parametrize('alpha', [0.5, 1., 3.])
    def test_boolean_classical_pairing(self, alpha):
        assert sup_distance(boolean_to_classical(Dagum(1., alpha)),
                            Frechet(alpha)) <= 1e-12
        assert sup_distance(classical_to_boolean(Frechet(alpha)),
                            Dagum(1., alpha)) <= 1e-12

    @pytest.mark.parametrize('alpha', [0.5, 1., 3.])
    def test_chi_inv_exact_where_frechet_underflows(self, alpha):
        x = np.geomspace(1e-6, 1e-2, 50)
        np.testing.assert_allclose(classical_to_boolean(Frechet(alpha))(x),
                                   Dagum(1., alpha)(x), rtol=1e-12, atol=0)

    def test_lambda_vee_of_compound_poisson(self):
        base = Frechet(1.)
        x = np.geomspace(1e-4, 1e4, 200)
        np.testing.assert_allclose(
            classical_to_free(CompoundPoissonClassical(3., base))(x),
            CompoundPoissonFree(3., base)(x), rtol=0, atol=1e-14)

    def test_classical_to_free(self):
        assert sup_distance(classical_to_free(Gumbel()),
                            FreeExponential()) <= 1e-12
        assert sup_distance(classical_to_free(Frechet(2.)),
                            Pareto(2.)) <= 1e-12

    def test_chi_needs_positive_support(self, _gumbel):
        with pytest.raises(ClassError):
            boolean_to_classical(_gumbel)


@pytest.mark.parametrize('p, q', [(2., 0.75), (1., 0.5), (3., 2.),
                                  (5., 0.81)])
def test_exchange(p, q, _positive_law):
    assert exchange_check(_positive_law, p, q) <= 1e-10


def test_exchange_needs_positive_support(_gumbel):
    with pytest.raises(ClassError):
        exchange_check(_gumbel, 2., 0.75)


@pytest.mark.parametrize('H', [Frechet(1.), Frechet(2.),
                               CompoundPoissonClassical(1., Frechet(2.))])
def test_theta_preimage(H):
    F = theta_preimage(H)
    assert sup_distance(bn(F, 1.), apply_map('lambda_vee', H)) <= 1e-12


class TestConverseLimits:

    def test_boolean_limit_values(self, _cp_free):
        G = converse_boolean_limit(_cp_free)
        assert G(-1.) == 0
        assert G(0.) == pytest.approx(2. / 3.)
        assert G(1e300) == 1

    def test_boolean_limit_of_positive_law(self, _dagum):
        # Dagum(1, 1) vanishes at 0 but the limit jumps to 1/2 there.
        G = converse_boolean_limit(_dagum)
        assert G(0.) == 0.5
        assert 0. in G.discontinuities

    @pytest.mark.parametrize('lam', [0.25, 0.5, 0.9])
    def test_free_to_classical(self, lam):
        base = Frechet(1.)
        F = CompoundPoissonFree(lam, base)
        G = free_to_classical_limit(F)
        grid = default_grid(F)
        assert sup_distance(G, CompoundPoissonClassical(lam, base),
                            grid) <= 1e-12

    def test_needs_positive_support(self, _gumbel):
        with pytest.raises(ClassError):
            converse_boolean_limit(_gumbel)
