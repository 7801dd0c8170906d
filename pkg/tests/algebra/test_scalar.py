# coding=utf-8

"""Laws of the scalar max-convolution operations."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxalg.algebra import scalar
from maxalg.utils.errors import DomainError

unit = st.floats(0., 1.)
positive_unit = st.floats(0.01, 1.)
free_exponent = st.floats(1., 10.)
bool_exponent = st.floats(1e-3, 10.)

TOL = 1e-12

MAX_OPS = [scalar.classical_max, scalar.free_max, scalar.bool_max]


@pytest.mark.parametrize('op', MAX_OPS)
class TestMaxConvolutionLaws:

    @given(u=unit, v=unit)
    def test_commutative(self, op, u, v):
        assert op(u, v) == pytest.approx(op(v, u), abs=TOL)

    @given(u=unit, v=unit, w=unit)
    def test_associative(self, op, u, v, w):
        assert op(op(u, v), w) == pytest.approx(op(u, op(v, w)), abs=TOL)

    @given(u=unit)
    def test_unit_and_zero(self, op, u):
        assert op(u, 1.) == pytest.approx(u, abs=TOL)
        assert op(u, 0.) == 0

    @given(u=unit, v=unit, w=unit)
    def test_monotone(self, op, u, v, w):
        lo, hi = sorted([u, v])
        assert op(lo, w) <= op(hi, w) + TOL

    def test_vectorised(self, op, _rng):
        u, v = _rng.uniform(size=(2, 100))
        result = op(u, v)
        assert isinstance(result, np.ndarray)
        np.testing.assert_allclose(result, [op(a, b) for a, b in zip(u, v)],
                                   atol=TOL)


def test_closed_forms():
    assert scalar.classical_max(0.5, 0.5) == 0.25
    assert scalar.free_max(0.5, 0.5) == 0
    assert scalar.free_max(0.75, 0.75) == 0.5
    assert scalar.bool_max(0.5, 0.5) == pytest.approx(1 / 3)
    assert scalar.bool_max(0., 0.) == 0


def test_results_are_unit_values():
    result = scalar.free_max(0.3, 0.9)
    assert isinstance(result, scalar.UnitValue)
    assert 0 <= result <= 1


@pytest.mark.parametrize('value', [-0.1, 1.1, np.nan])
def test_domain(value):
    with pytest.raises(DomainError):
        scalar.classical_max(value, 0.5)


def test_unit_tolerance_clamps():
    assert scalar.as_unit(1. + 1e-13) == 1.
    assert scalar.UnitValue(-1e-13) == 0.
    with pytest.raises(DomainError):
        scalar.UnitValue(1. + 1e-9)


class TestPowers:

    @given(u=unit, t=free_exponent, s=free_exponent)
    def test_free_additive(self, u, t, s):
        lhs = scalar.free_max(scalar.free_power(u, t), scalar.free_power(u, s))
        assert lhs == pytest.approx(scalar.free_power(u, t + s), abs=TOL)

    @given(u=unit, t=free_exponent, s=free_exponent)
    def test_free_composition(self, u, t, s):
        lhs = scalar.free_power(scalar.free_power(u, t), s)
        assert lhs == pytest.approx(scalar.free_power(u, t * s), abs=TOL)

    @given(u=unit, t=bool_exponent, s=bool_exponent)
    def test_bool_additive(self, u, t, s):
        lhs = scalar.bool_max(scalar.bool_power(u, t), scalar.bool_power(u, s))
        assert lhs == pytest.approx(scalar.bool_power(u, t + s), abs=TOL)

    @given(u=unit, t=bool_exponent, s=bool_exponent)
    def test_bool_composition(self, u, t, s):
        lhs = scalar.bool_power(scalar.bool_power(u, t), s)
        assert lhs == pytest.approx(scalar.bool_power(u, t * s), abs=TOL)

    @given(u=unit)
    def test_integer_powers_match_repeated_convolution(self, u):
        for op, power in [(scalar.classical_max, scalar.classical_power),
                          (scalar.free_max, scalar.free_power),
                          (scalar.bool_max, scalar.bool_power)]:
            assert op(op(u, u), u) == pytest.approx(power(u, 3), abs=TOL)

    def test_identity_exponent(self):
        assert scalar.free_power(0.3, 1) == pytest.approx(0.3)
        assert scalar.bool_power(0.3, 1) == pytest.approx(0.3)

    @pytest.mark.parametrize('func, t', [(scalar.free_power, 0.5),
                                         (scalar.bool_power, 0),
                                         (scalar.classical_power, -1),
                                         (scalar.free_power, np.inf)])
    def test_exponent_domain(self, func, t):
        with pytest.raises(DomainError):
            func(0.5, t)

    @pytest.mark.parametrize('func', [scalar.classical_power,
                                      scalar.free_power, scalar.bool_power])
    def test_array_exponents(self, func, _rng):
        u = _rng.uniform(size=50)
        t = _rng.uniform(1., 10., size=50)
        expected = [func(ui, ti) for ui, ti in zip(u, t)]
        np.testing.assert_allclose(func(u, t), expected, rtol=0, atol=1e-15)

    def test_array_exponent_domain(self):
        with pytest.raises(DomainError, match='got 0.5'):
            scalar.free_power(0.5, np.array([2., 0.5, 3.]))


class TestMaps:

    @given(u=unit, v=unit)
    def test_lambda_vee_homomorphism(self, u, v):
        lhs = scalar.lambda_vee(u * v)
        rhs = scalar.free_max(scalar.lambda_vee(u), scalar.lambda_vee(v))
        assert lhs == pytest.approx(rhs, abs=TOL)

    @given(u=positive_unit, t=free_exponent)
    def test_lambda_vee_powers(self, u, t):
        lhs = scalar.lambda_vee(u ** t)
        rhs = scalar.free_power(scalar.lambda_vee(u), t)
        assert lhs == pytest.approx(rhs, abs=TOL)

    @given(u=positive_unit, v=positive_unit)
    def test_chi_homomorphism(self, u, v):
        lhs = scalar.chi(scalar.bool_max(u, v))
        assert lhs == pytest.approx(scalar.chi(u) * scalar.chi(v), abs=TOL)

    @given(u=positive_unit)
    def test_chi_inverse_pair(self, u):
        assert scalar.chi(scalar.chi_inv(u)) == pytest.approx(u, abs=TOL)
        assert scalar.chi_inv(scalar.chi(u)) == pytest.approx(u, abs=TOL)

    def test_end_points(self):
        for func in (scalar.lambda_vee, scalar.chi, scalar.chi_inv,
                     scalar.bn_unit_time):
            assert func(0.) == 0
            assert func(1.) == 1

    def test_lambda_vee_vanishes_below_1_over_e(self):
        assert scalar.lambda_vee(np.exp(-1.) * 0.99) == 0

    @given(u=unit)
    def test_bn_unit_time(self, u):
        expected = scalar.lambda_vee(scalar.chi(u))
        assert scalar.bn_scalar(u, 1) == pytest.approx(expected, abs=TOL)
        assert scalar.bn_unit_time(u) == pytest.approx(expected, abs=TOL)

    @given(u=unit, t=st.floats(0., 3.), s=st.floats(0., 3.))
    def test_bn_semigroup(self, u, t, s):
        lhs = scalar.bn_scalar(scalar.bn_scalar(u, t), s)
        assert lhs == pytest.approx(scalar.bn_scalar(u, t + s), abs=1e-10)

    def test_bn_time_zero_is_identity(self):
        assert scalar.bn_scalar(0.4, 0) == pytest.approx(0.4)

    def test_free_to_boolean_limit(self):
        assert scalar.free_to_boolean_limit(0.) == 0.5
        assert scalar.free_to_boolean_limit(1.) == 1.


class TestExchange:

    def test_golden(self):
        assert scalar.pq_exchange(2., 0.75) == (3., 0.5)

    @settings(max_examples=200)
    @given(u=unit, p=free_exponent, gap=st.floats(1e-3, 5.))
    def test_exchange_identity(self, u, p, gap):
        q = 1. - 1. / p + gap
        p_new, q_new = scalar.pq_exchange(p, q)
        lhs = scalar.bool_power(scalar.free_power(u, p), q)
        rhs = scalar.free_power(scalar.bool_power(u, q_new), p_new)
        assert lhs == pytest.approx(rhs, abs=1e-10)

    @given(p=free_exponent, gap=st.floats(1e-3, 5.))
    def test_round_trip(self, p, gap):
        q = 1. - 1. / p + gap
        p_back, q_back = scalar.pq_exchange_inverse(*scalar.pq_exchange(p, q))
        assert p_back == pytest.approx(p, rel=1e-10)
        assert q_back == pytest.approx(q, rel=1e-10)

    def test_boundary_rejected(self):
        with pytest.raises(DomainError):
            scalar.pq_exchange(2., 0.5)
        with pytest.raises(DomainError):
            scalar.pq_exchange(0.5, 1.)


def test_mixture():
    assert scalar.mixture(0., 1., 0.25) == 0.25
    with pytest.raises(DomainError):
        scalar.mixture(0.5, 0.5, 1.5)
