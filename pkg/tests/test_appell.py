"""Appell families: exact polynomials, generating products, expansion oracles."""
from fractions import Fraction
from math import factorial

import numpy as np
import pytest

from umbra import appell
from umbra.errors import DivergenceError, InvalidParameterError, TruncationError
from umbra.seqcore import Sequence


@pytest.fixture(scope="module")
def bernoulli():
    return appell.bernoulli_family()


@pytest.fixture(scope="module")
def identity():
    return appell.identity_family()


@pytest.fixture(scope="module")
def hermite_type():
    return appell.gauss_hermite_family()


class TestFamilies:
    def test_bernoulli_numbers(self):
        assert appell.bernoulli_numbers(4) == (1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30))

    def test_reciprocal_convolution_enforced(self):
        with pytest.raises(InvalidParameterError):
            appell.AppellFamily("broken", (Fraction(1), Fraction(1)), (Fraction(1), Fraction(1)))

    def test_zero_constant_rejected(self):
        with pytest.raises(InvalidParameterError):
            appell.family_from_taylor((Fraction(0), Fraction(1)))

    def test_bernoulli_inverse_is_shifted_factorials(self, bernoulli):
        # 1/A = (e^t - 1)/t has coefficients 1/(m+1)!; the reciprocal recurrence must find them
        assert bernoulli.a_inv_taylor[:5] == tuple(Fraction(1, factorial(m + 1)) for m in range(5))

    def test_bernoulli_evaluator_crossover_consistent(self, bernoulli):
        for z in (0.2, 0.3001, 1.5, -0.24, 2j * 0.1):
            series_side = sum(float(c) * complex(z) ** m for m, c in enumerate(bernoulli.a_inv_taylor))
            assert bernoulli.inverse_at(z) == pytest.approx(series_side, rel=1e-12)


class TestAppellPoly:
    def test_identity_family_gives_monomials(self, identity):
        for sign in ("plus", "minus"):
            assert appell.appell_poly(identity, 3, sign) == (0, 0, 0, 1)

    def test_bernoulli_first_polys(self, bernoulli):
        assert appell.appell_poly(bernoulli, 1, "plus") == (Fraction(-1, 2), 1)
        assert appell.appell_poly(bernoulli, 2, "plus") == (Fraction(1, 6), -1, 1)

    def test_bernoulli_complementary_closed_form(self, bernoulli):
        # a_n^-(x) = ((x+1)^{n+1} - x^{n+1}) / (n+1); n = 1 gives x + 1/2
        assert appell.appell_poly(bernoulli, 1, "minus") == (Fraction(1, 2), 1)
        got = appell.appell_poly(bernoulli, 3, "minus")
        # ((x+1)^4 - x^4)/4 = x^3 + 3x^2/2 + x + 1/4
        assert got == (Fraction(1, 4), 1, Fraction(3, 2), 1)

    def test_order_cap(self, bernoulli):
        with pytest.raises(TruncationError):
            appell.appell_poly(bernoulli, bernoulli.order + 1)

    def test_reciprocity(self, bernoulli):
        rec = bernoulli.reciprocal()
        for n in (0, 2, 5):
            assert appell.appell_poly(bernoulli, n, "plus") == appell.appell_poly(rec, n, "minus")
            assert appell.appell_poly(bernoulli, n, "minus") == appell.appell_poly(rec, n, "plus")

    @pytest.mark.parametrize("n", range(7))
    def test_umbral_composition_cancels(self, bernoulli, n):
        assert all(c == 0 for c in appell.umbral_composition_check(bernoulli, n))


class TestGeneratingCheck:
    def test_t_zero(self, bernoulli):
        assert appell.generating_check(bernoulli, 5, 0.0, 0.7) == 0

    def test_bernoulli_product(self, bernoulli):
        assert appell.generating_check(bernoulli, 30, 0.3, 0.5) < 1e-10
        assert appell.generating_check(bernoulli, 30, 0.3, 0.5, "minus") < 1e-10

    def test_identity_family_both_sides_exponential(self, identity):
        for t in (0.1, 0.4):
            assert appell.generating_check(identity, 20, t, 0.3) < 1e-12


class TestExpansion:
    def test_identity_family_recovers_taylor(self, identity):
        g = appell.GaussianFunction(Fraction(1))
        res = appell.expansion_coefficients(identity, g, 6)
        expected = [1, 0, -1, 0, Fraction(1, 2), 0, Fraction(-1, 6)]
        for got, want in zip(res.coefficients, expected):
            assert complex(got) == pytest.approx(complex(float(want)), abs=1e-10)

    def test_real_input_keeps_tiny_imag_reported(self, identity):
        g = appell.GaussianFunction(Fraction(1))
        res = appell.expansion_coefficients(identity, g, 6)
        assert res.max_imag < 1e-10

    def test_bernoulli_matches_operational_oracle(self, bernoulli):
        g = appell.GaussianFunction(Fraction(1))
        res = appell.expansion_coefficients(bernoulli, g, 10)
        oracle = appell.operational_coefficients(bernoulli, g, 10)
        for got, want in zip(res.coefficients, oracle):
            assert abs(complex(got) - float(want)) < 1e-8

    def test_hermite_type_matches_operational_oracle(self, hermite_type):
        # backward-heat divergence forces the Gaussian scale below 1/4 here
        g = appell.GaussianFunction(Fraction(1, 8))
        res = appell.expansion_coefficients(hermite_type, g, 10)
        oracle = appell.operational_coefficients(hermite_type, g, 10)
        for got, want in zip(res.coefficients, oracle):
            assert abs(complex(got) - float(want)) < 1e-8

    def test_coefficient_cap(self, bernoulli):
        with pytest.raises(TruncationError):
            appell.expansion_coefficients(bernoulli, appell.GaussianFunction(Fraction(1)), 30)

    def test_integrability_guard(self):
        coeffs = [Fraction(0)] * 25
        for l in range(13):
            coeffs[2 * l] = Fraction(1, factorial(l))
        exp_square = appell.AppellFamily("exp-square", tuple(coeffs), eval_inv=lambda z: np.exp(-z * z))
        with pytest.raises(DivergenceError):
            appell.expansion_coefficients(exp_square, appell.GaussianFunction(Fraction(1)), 4)


class TestReconstruct:
    def test_zero_coefficients_give_zero(self, bernoulli):
        res = appell.ExpansionResult((0.0, 0.0, 0.0), "bernoulli", (0, 0, 0))
        assert appell.reconstruct(bernoulli, res, 0.4) == 0

    def test_identity_family_partial_taylor(self, identity):
        g = appell.GaussianFunction(Fraction(1))
        res = appell.expansion_coefficients(identity, g, 12)
        got = appell.reconstruct(identity, res, 0.5)
        partial = sum(float(g.taylor(n)) * 0.5 ** n for n in range(13))
        assert got == pytest.approx(partial, abs=1e-9)

    def test_bernoulli_residual_decreases(self, bernoulli):
        g = appell.GaussianFunction(Fraction(1))
        xs = np.linspace(-1.0, 1.0, 21)
        sup16 = appell.reconstruction_residual(bernoulli, appell.expansion_coefficients(bernoulli, g, 16), g, xs)
        sup20 = appell.reconstruction_residual(bernoulli, appell.expansion_coefficients(bernoulli, g, 20), g, xs)
        assert sup20 < sup16


class TestUmbralBridge:
    def test_gauss_evolution_matches_closed_form(self):
        a = Sequence.of([1] * 40)
        xs = np.linspace(-0.8, 0.8, 10)
        assert appell.gauss_umbral_bridge_residual(a, Fraction(1, 4), xs) < 1e-10

    def test_bridge_on_varying_sequence(self):
        a = Sequence.of([Fraction(1, n + 1) for n in range(36)])
        xs = [0.3, -0.5, 0.7]
        assert appell.gauss_umbral_bridge_residual(a, Fraction(1, 2), xs) < 1e-10
