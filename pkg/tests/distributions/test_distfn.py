# coding=utf-8

"""Distribution function graphs: evaluation, classes, roots and distances."""

import numpy as np
import pytest

from maxalg.algebra.scalar import UnitValue
from maxalg.distributions.families import CompoundPoissonFree, Dagum, \
    Frechet, Gumbel, Pareto, Weibull
from maxalg.distributions.utils import DELTA, DELTA_PLUS, DELTA_PLUS_ZERO, \
    AbstractDistFn, AffineRescale, Dirac, EmpiricalLeaf, EvalGrid, \
    Pointwise1, TruncateBelow, apply_map, bisect_alpha, bisect_omega, \
    bool_nth_root, check_distribution, classical_nth_root, combine, \
    default_grid, evaluate, free_nth_root, is_free_regular_max_id, \
    is_freely_max_id, levy_distance, mixture, power, sup_distance
from maxalg.utils.errors import ClassError, DomainError, EmptyGrid, \
    ParameterError


class TestEvaluation:

    def test_scalar_and_array(self, _pareto):
        assert isinstance(_pareto(2.), UnitValue)
        assert _pareto(2.) == 0.5
        np.testing.assert_array_equal(evaluate(_pareto, [0.5, 1., 2., 4.]),
                                      [0., 0., 0.5, 0.75])

    def test_dirac(self):
        step = Dirac(0.)
        np.testing.assert_array_equal(step([-1., 0., 1.]), [0., 1., 1.])
        assert step.discontinuities == (0.,)

    def test_value_is_float(self, _dagum):
        assert type(_dagum.value(1.)) is float
        assert _dagum.value(1.) == 0.5

    def test_log_value_below_underflow(self, _frechet):
        # exp(-1e4) underflows to 0.
        assert _frechet(1e-4) == 0
        assert _frechet.log_value(1e-4) == pytest.approx(-1e4)
        assert _frechet.log_value(-1.) == -np.inf
        squared = combine('classical_max', _frechet, _frechet)
        assert squared.log_value(1e-4) == pytest.approx(-2e4)
        assert power('classical', _frechet, 3).log_value(1e-4) == \
            pytest.approx(-3e4)
        assert AffineRescale(_frechet, 2.).log_value(5e-5) == \
            pytest.approx(-1e4)

    def test_log_value_default(self, _pareto):
        np.testing.assert_allclose(_pareto.log_value([2., 4.]),
                                   np.log([0.5, 0.75]))
        assert _pareto.log_value(0.5) == -np.inf

    def test_survival_has_no_cancellation(self, _pareto):
        assert _pareto.survival(1e20) == pytest.approx(1e-20)
        powered = power('free', _pareto, 3)
        assert powered.survival(1e20) == pytest.approx(3e-20)
        assert power('bool', _pareto, 3).survival(1e20) == \
            pytest.approx(3e-20)
        assert power('classical', _pareto, 3).survival(1e20) == \
            pytest.approx(3e-20)


class TestClasses:

    @pytest.mark.parametrize('F, tag', [
        (Gumbel(), DELTA),
        (Weibull(1.), DELTA),
        (Frechet(1.), DELTA_PLUS_ZERO),
        (CompoundPoissonFree(0.5, Frechet(1.)), DELTA_PLUS),
        (Dirac(0.), DELTA_PLUS),
        (Dirac(1.), DELTA_PLUS_ZERO),
        (Dirac(-1.), DELTA),
        (TruncateBelow(Gumbel(), 1.), DELTA_PLUS_ZERO),
        (TruncateBelow(Gumbel(), 0.), DELTA_PLUS),
        (AffineRescale(Frechet(1.), 1., 1.), DELTA),
        (AffineRescale(Frechet(1.), 2., -1.), DELTA_PLUS_ZERO)])
    def test_tags(self, F, tag):
        assert F.class_tag == tag

    def test_tags_are_sound(self):
        graphs = [combine('bool_max', Dagum(1., 1.), Pareto(2.)),
                  power('free', CompoundPoissonFree(0.5, Frechet(1.)), 3),
                  apply_map('chi', Frechet(2.)),
                  mixture(Dirac(0.), Frechet(1.), 0.1)]
        for F in graphs:
            assert check_distribution(F) == []

    def test_boolean_operations_need_positive_support(self, _gumbel,
                                                      _pareto):
        with pytest.raises(ClassError):
            combine('bool_max', _gumbel, _pareto)
        with pytest.raises(ClassError):
            power('bool', _gumbel, 2)
        with pytest.raises(ClassError):
            apply_map('chi', _gumbel)

    def test_lambda_vee_accepts_any_class(self, _gumbel):
        assert apply_map('lambda_vee', _gumbel).class_tag == DELTA

    @pytest.mark.parametrize('conv, t', [('free', 0.5), ('classical', 0.),
                                         ('bool', -1.), ('tensor', 2.)])
    def test_power_domain(self, conv, t, _pareto):
        with pytest.raises(DomainError):
            power(conv, _pareto, t)

    def test_unknown_operations(self, _pareto):
        with pytest.raises(DomainError):
            combine('min', _pareto, _pareto)
        with pytest.raises(DomainError):
            apply_map('log', _pareto)
        with pytest.raises(DomainError):
            Pointwise1('sqrt', _pareto)

    def test_boolean_power_zero_is_step_at_alpha(self, _pareto):
        step = power('bool', _pareto, 0)
        assert isinstance(step, Dirac)
        assert step.location == 1.


class TestSupport:

    def test_closed_forms(self, _pareto, _gumbel):
        assert _pareto.alpha == 1.
        assert _pareto.omega == np.inf
        assert _gumbel.alpha == -np.inf

    def test_free_power_moves_alpha(self, _frechet):
        powered = power('free', _frechet, 2)
        # Frechet(1) equals 1/2 at 1 / log 2.
        assert powered.alpha == pytest.approx(1. / np.log(2.), abs=1e-9)
        assert powered.value(powered.alpha - 1e-9) == 0
        assert powered.value(powered.alpha + 1e-9) > 0

    def test_bisection_matches_closed_forms(self, _pareto):
        F = EmpiricalLeaf([1., 3.])
        assert bisect_alpha(F) == pytest.approx(1., abs=1e-9)
        assert bisect_omega(F) == pytest.approx(3., abs=1e-9)
        # Beyond the bracket cap.
        assert bisect_alpha(Dirac(-5e9)) == -np.inf
        assert bisect_omega(_pareto) == np.inf

    def test_classical_and_boolean_powers_keep_alpha(self, _dagum):
        assert power('classical', _dagum, 5).alpha == 0.
        assert power('bool', _dagum, 5).alpha == 0.

    def test_bounded_support(self):
        F = mixture(Dirac(1.), Dirac(3.), 0.5)
        assert F.alpha == 1.
        assert F.omega == 3.


class TestDivisibility:

    @pytest.mark.parametrize('F', [Frechet(1.), Pareto(1.), Dagum(1., 1.),
                                   CompoundPoissonFree(0.5, Frechet(1.)),
                                   apply_map('lambda_vee', Gumbel()),
                                   apply_map('lambda_vee', Weibull(2.))])
    def test_freely_max_id(self, F):
        assert is_freely_max_id(F)

    @pytest.mark.parametrize('F', [Gumbel(), Weibull(1.)])
    def test_not_freely_max_id(self, F):
        assert not is_freely_max_id(F)

    def test_free_regular(self, _pareto, _frechet, _cp_free):
        assert is_free_regular_max_id(_pareto)
        assert not is_free_regular_max_id(_frechet)
        with pytest.raises(ClassError):
            is_free_regular_max_id(_cp_free)

    @pytest.mark.parametrize('n', [1, 2, 7, 64])
    def test_roots_invert_powers(self, n, _positive_law):
        F = _positive_law
        grid = default_grid(F)
        for conv, root in [('free', free_nth_root), ('bool', bool_nth_root),
                           ('classical', classical_nth_root)]:
            assert sup_distance(power(conv, root(F, n), n), F, grid) <= 1e-10

    def test_free_root_needs_finite_alpha(self, _gumbel):
        with pytest.raises(DomainError):
            free_nth_root(_gumbel, 2)

    def test_free_root_of_pareto(self, _pareto):
        root = free_nth_root(_pareto, 3)
        np.testing.assert_allclose(root([0., 1., 2.]), [0., 2 / 3, 2.5 / 3])

    @pytest.mark.parametrize('n', [0, 2.5, -1])
    def test_root_index(self, n, _pareto):
        with pytest.raises(DomainError):
            bool_nth_root(_pareto, n)


class TestEmpirical:

    def test_step_function(self):
        F = EmpiricalLeaf([2., 0., 1., 1.])
        np.testing.assert_allclose(F([-1., 0., 0.5, 1., 2.]),
                                   [0., 0.25, 0.25, 0.75, 1.])
        assert F.discontinuities == (0., 1., 2.)
        assert F.alpha == 0.
        assert F.omega == 2.
        assert F.class_tag == DELTA_PLUS

    def test_weights(self):
        F = EmpiricalLeaf([1., 2.], [3., 1.])
        assert F(1.) == 0.75
        assert F.class_tag == DELTA_PLUS_ZERO

    @pytest.mark.parametrize('points, weights', [
        ([], None), ([1., np.inf], None), ([1., 2.], [1.]),
        ([1., 2.], [-1., 2.]), ([1., 2.], [0., 0.])])
    def test_invalid(self, points, weights):
        with pytest.raises(ParameterError):
            EmpiricalLeaf(points, weights)


class TestGraphs:

    def test_affine_rescale(self, _pareto):
        F = AffineRescale(_pareto, 2., 1.)
        assert F(1.5) == _pareto(4.)
        assert F.alpha == 0.
        with pytest.raises(ParameterError):
            AffineRescale(_pareto, 0.)

    def test_truncate(self, _gumbel):
        F = TruncateBelow(_gumbel, 0.)
        assert F(-0.1) == 0
        assert F(0.) == _gumbel(0.)
        assert 0. in F.discontinuities

    def test_mixture(self, _pareto):
        F = mixture(Dirac(0.), _pareto, 0.5)
        assert F(0.5) == 0.5
        assert F(2.) == 0.75
        with pytest.raises(ParameterError):
            mixture(Dirac(0.), _pareto, 2.)

    def test_to_dict(self, _dagum):
        d = power('bool', _dagum, 2).to_dict()
        assert d['node'] == 'pointwise1'
        assert d['op'] == 'bool_power'
        assert d['param'] == 2.
        assert d['children'] == [{'node': 'parametric', 'family': 'dagum',
                                  'params': {'lam': 1., 'alpha': 1.}}]

    def test_check_distribution_detects_decrease(self):

        class Decreasing(AbstractDistFn):
            def _evaluate(self, x):
                return np.where(x < 0, 0., np.where(x < 1, 0.8, 0.5))

        problems = check_distribution(Decreasing(DELTA), [-1., 0.5, 2.])
        assert 'not nondecreasing' in problems
        assert 'limit at +inf is not 1' in problems


class TestDistances:

    def test_sup_distance_skips_jumps(self):
        grid = EvalGrid.linear(-1., 1., 201)
        assert sup_distance(Dirac(0.), Dirac(0.), grid) == 0
        assert sup_distance(Dirac(0.), Dirac(0.5), grid) == 1

    def test_sup_distance_of_closed_forms(self, _frechet, _pareto):
        grid = EvalGrid([0.5, 1., 2.])
        assert sup_distance(_frechet, _pareto, grid) == \
            pytest.approx(np.exp(-1.))

    def test_empty_grid(self):
        with pytest.raises(EmptyGrid):
            sup_distance(Dirac(0.), Dirac(1.), EvalGrid([1.]))

    def test_invalid_grid(self):
        with pytest.raises(ParameterError):
            EvalGrid([1., 0.])
        with pytest.raises(ParameterError):
            EvalGrid([0., np.nan])
        with pytest.raises(ParameterError):
            EvalGrid.log(0., 1., 5)

    def test_levy_distance(self, _dagum):
        assert levy_distance(Dirac(0.), Dirac(0.5)) == \
            pytest.approx(0.5, abs=2e-3)
        assert levy_distance(_dagum, _dagum) == 0
        assert levy_distance(Dirac(0.5), Dirac(0.)) == \
            levy_distance(Dirac(0.), Dirac(0.5))

    def test_levy_distance_of_far_apart_steps(self):
        # Capped at 1: no eps < 1 lets the steps at 0 and 1 cover each other.
        assert levy_distance(Dirac(0.), Dirac(1.)) == pytest.approx(1.)
        assert levy_distance(Dirac(1.), Dirac(0.)) == pytest.approx(1.)

    def test_levy_distance_uses_the_grid(self):
        G = mixture(Dirac(0.), Dirac(10.), 0.5)
        assert levy_distance(Dirac(0.), G) == pytest.approx(0.5, abs=2e-3)
        left_of_jumps = EvalGrid.linear(-1., -0.5, 11)
        assert levy_distance(Dirac(0.), G, grid=left_of_jumps) == 0

    def test_levy_below_sup(self, _frechet, _pareto):
        assert levy_distance(_frechet, _pareto) <= \
            sup_distance(_frechet, _pareto) + 1e-3

    def test_default_grid(self, _pareto):
        grid = default_grid(_pareto)
        assert grid.points[0] == 0.
        assert grid.points[-1] == 1e3
        assert 1. in grid.points
        assert np.all(np.diff(grid.points) > 0)
