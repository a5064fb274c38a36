"""Exactness tests for the sequence transforms."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbra.errors import InvalidParameterError, SequenceFormatError
from umbra.seqcore import (
    HermiteParams,
    LaguerreParams,
    ModularParams,
    Sequence,
    Stage,
    binomial_transform,
    compose_transforms,
    hermite_after_modular_gap,
    hermite_complementary_seq,
    hermite_inverse_seq,
    hermite_transform_seq,
    laguerre_transform_seq,
    modular_after_hermite_gap,
    modular_inverse,
    modular_transform,
    rising_k_binomial,
    sequence_from_json,
    sequence_to_json,
)

rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=100
)
sequences = st.lists(rationals, min_size=1, max_size=16).map(Sequence.of)


def seq(*terms):
    return Sequence.of(Fraction(t) for t in terms)


class TestBinomial:
    def test_all_ones_collapses(self):
        assert binomial_transform(seq(1, 1, 1, 1)).terms == seq(1, 0, 0, 0).terms

    def test_delta_spreads(self):
        assert binomial_transform(seq(1, 0, 0, 0)).terms == seq(1, 1, 1, 1).terms

    def test_linear_ramp(self):
        # direct summation of the defining sum: b_1 = 0 - 1, all later terms cancel
        assert binomial_transform(seq(0, 1, 2, 3)).terms == seq(0, -1, 0, 0).terms

    @given(sequences)
    @settings(max_examples=60)
    def test_involution(self, a):
        assert binomial_transform(binomial_transform(a)).terms == a.terms


class TestModular:
    def test_reduces_to_binomial_at_unit_params(self):
        a = seq(3, "1/2", -7, 11)
        p = ModularParams(1, 1)
        assert modular_transform(a, p).terms == binomial_transform(a).terms

    def test_alpha_two_all_ones(self):
        assert modular_transform(seq(1, 1, 1), ModularParams(2, 1)).terms == seq(1, 1, 1).terms

    def test_powers_of_two(self):
        assert modular_transform(seq(1, 2, 4), ModularParams(1, 1)).terms == seq(1, -1, 1).terms

    def test_inverse_direct_sum(self):
        got = modular_inverse(seq(1, 0, 0), ModularParams(1, 2))
        assert got.terms == seq(1, "1/2", "1/4").terms

    def test_inverse_rejects_zero_beta(self):
        with pytest.raises(InvalidParameterError):
            modular_inverse(seq(1, 2), ModularParams(1, 0))

    @given(sequences, rationals, rationals.filter(lambda b: b != 0))
    @settings(max_examples=60)
    def test_roundtrip(self, a, alpha, beta):
        p = ModularParams(alpha, beta)
        assert modular_inverse(modular_transform(a, p), p).terms == a.terms

    @given(sequences, rationals)
    @settings(max_examples=30)
    def test_inverse_is_scaled_alpha_one_transform(self, b, alpha):
        # a_n = beta^{-n} * [B(alpha, 1) b]_n
        p = ModularParams(alpha, Fraction(3, 2))
        via_inverse = modular_inverse(b, p)
        via_scaling = modular_transform(b, ModularParams(alpha, 1))
        for n, (x, y) in enumerate(zip(via_inverse.terms, via_scaling.terms)):
            assert x == Fraction(3, 2) ** -n * y


class TestRisingKBinomial:
    @given(sequences)
    @settings(max_examples=30)
    def test_k_zero_is_binomial(self, a):
        assert rising_k_binomial(a, 0).terms == binomial_transform(a).terms

    def test_all_ones_k1(self):
        assert rising_k_binomial(seq(1, 1, 1, 1), 1).terms == seq(0, -1, 0, 0).terms

    def test_delta_at_one_k1(self):
        assert rising_k_binomial(seq(0, 1, 0, 0), 1).terms == seq(0, -1, -2, -3).terms


class TestHermite:
    def test_delta_gives_alpha_powers(self):
        p = HermiteParams(3, 5)
        got = hermite_transform_seq(seq(1, 0, 0, 0, 0), p)
        assert got.terms == tuple(Fraction(3) ** n for n in range(5))

    def test_all_ones_gives_hermite_values(self):
        got = hermite_transform_seq(seq(1, 1, 1), HermiteParams(1, 1))
        assert got.terms[2] == 3  # H_2(1,1) = 1 + 2

    def test_two_term_example(self):
        got = hermite_transform_seq(seq(1, 1, 0), HermiteParams(2, 3))
        assert got.terms[2] == 10  # 4 + 2*3

    def test_complementary_all_ones(self):
        got = hermite_complementary_seq(seq(1, 1, 1), HermiteParams(1, 1))
        assert got.terms[2] == 3

    def test_complementary_beta_zero_scales(self):
        a = seq(2, 3, 5, 7)
        got = hermite_complementary_seq(a, HermiteParams(Fraction(1, 2), 0))
        assert got.terms == tuple(Fraction(1, 2) ** n * a[n] for n in range(4))

    def test_complementary_interleaved(self):
        got = hermite_complementary_seq(seq(1, 0, 1), HermiteParams(1, 1))
        assert got.terms[2] == 3

    def test_transform_beta_zero_projects_onto_a0(self):
        a = seq(4, 9, 16)
        got = hermite_transform_seq(a, HermiteParams(2, 0))
        assert got.terms == tuple(Fraction(2) ** n * 4 for n in range(3))

    def test_inverse_beta_zero(self):
        b = seq(3, 6, 12)
        got = hermite_inverse_seq(b, HermiteParams(2, 0))
        assert got.terms == tuple(Fraction(2) ** -n * b[n] for n in range(3))

    def test_inverse_direct_sum(self):
        got = hermite_inverse_seq(seq(1, 0, 2), HermiteParams(1, 1))
        assert got.terms[2] == 0  # 2 - 2*1

    def test_inverse_rejects_zero_alpha(self):
        with pytest.raises(InvalidParameterError):
            hermite_inverse_seq(seq(1, 2), HermiteParams(0, 1))

    @given(sequences, rationals.filter(lambda a: a != 0), rationals)
    @settings(max_examples=60)
    def test_roundtrip_with_complementary(self, a, alpha, beta):
        p = HermiteParams(alpha, beta)
        assert hermite_inverse_seq(hermite_complementary_seq(a, p), p).terms == a.terms


class TestLaguerre:
    def test_delta_gives_beta_powers(self):
        got = laguerre_transform_seq(seq(1, 0, 0, 0), LaguerreParams(7, 2))
        assert got.terms == tuple(Fraction(2) ** n for n in range(4))

    def test_all_ones_gives_classical_values(self):
        got = laguerre_transform_seq(seq(1, 1, 1), LaguerreParams(1, 1))
        assert got.terms[1] == 0
        assert got.terms[2] == Fraction(-1, 2)

    def test_alpha_zero_keeps_only_a0(self):
        got = laguerre_transform_seq(seq(5, 1, 1), LaguerreParams(0, 3))
        assert got.terms == tuple(Fraction(3) ** n * 5 for n in range(3))


class TestCompose:
    def test_empty_pipeline_is_identity(self):
        a = seq(1, 2, 3)
        assert compose_transforms([], a).terms == a.terms

    @given(sequences)
    @settings(max_examples=30)
    def test_double_binomial_is_identity(self, a):
        pipeline = [Stage("binomial"), Stage("binomial")]
        assert compose_transforms(pipeline, a).terms == a.terms

    def test_pipeline_matches_sequential_calls(self):
        a = seq(1, 1, 1, 1)
        pipeline = [
            Stage("modular", alpha=Fraction(2), beta=Fraction(3)),
            Stage("hermite", alpha=Fraction(1, 2), beta=Fraction(5)),
        ]
        via_pipeline = compose_transforms(pipeline, a)
        direct = hermite_transform_seq(
            modular_transform(a, ModularParams(2, 3)), HermiteParams(Fraction(1, 2), 5)
        )
        assert via_pipeline.terms == direct.terms

    def test_unknown_stage_rejected(self):
        with pytest.raises(InvalidParameterError):
            compose_transforms([Stage("hankel")], seq(1))

    def test_stage_missing_param_rejected(self):
        with pytest.raises(InvalidParameterError):
            compose_transforms([Stage("modular", alpha=Fraction(1))], seq(1, 2))

    def test_printed_composite_formula_disagrees(self):
        # soft property: the literal composite formula does not match the
        # sequential pipeline; the gap is reported, not corrected
        gap = hermite_after_modular_gap(seq(1, 1, 1, 1), 1, 2, 3, 1)
        assert any(g != 0 for g in gap)

    @given(sequences, rationals, rationals, rationals, rationals)
    @settings(max_examples=30)
    def test_derived_composite_closed_form_holds(self, a, alpha, beta, gamma, delta):
        # B(alpha,beta) after H(gamma,delta) equals one Hermite transform with
        # parameters (alpha - beta gamma, beta^2 delta), exactly
        gap = modular_after_hermite_gap(a, alpha, beta, gamma, delta)
        assert all(g == 0 for g in gap)


class TestExchangeFormat:
    def test_roundtrip(self):
        a = seq("1/3", -2, "7/5", 0)
        assert sequence_from_json(sequence_to_json(a)).terms == a.terms

    def test_renders_integers_bare(self):
        assert sequence_to_json(seq(1, "1/2")) == '{"terms": ["1", "1/2"]}'

    def test_rejects_zero_denominator(self):
        with pytest.raises(SequenceFormatError):
            sequence_from_json('{"terms": ["1/0"]}')

    def test_rejects_bad_json_with_location(self):
        with pytest.raises(SequenceFormatError) as err:
            sequence_from_json('{"terms": [')
        assert err.value.line is not None

    def test_rejects_missing_terms(self):
        with pytest.raises(SequenceFormatError):
            sequence_from_json('{"values": ["1"]}')

    def test_rejects_float_terms(self):
        with pytest.raises(SequenceFormatError):
            sequence_from_json('{"terms": [1.5]}')
