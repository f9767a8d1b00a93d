"""Intersection dimensions: admissible sets, M_k, exact values, the builder."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from gaussradix.arith import GaussianInt, QI
from gaussradix.dimension import (
    Config,
    DimValue,
    HypothesisError,
    admissible_digits,
    attractor_dimension,
    build_translation,
    dimension,
    in_fundamental_translations,
    lambda_target,
    m_k,
    validate,
)
from gaussradix.radix import DigitSeq, DigitSet, evaluate

CFG04 = Config(3, DigitSet.restricted(3, (0, 4)), "bounded")
CFG048 = Config(3, DigitSet.restricted(3, (0, 4, 8)), "sparse")
ALPHA = DigitSeq((), (-4, 0, 4))


class TestValidate:
    def test_bounded_ok(self):
        assert validate(CFG04) == []

    def test_sparse_ok(self):
        assert validate(CFG048) == []

    def test_gap_one_rejected(self):
        bad = Config(3, DigitSet.restricted(3, (0, 1)), "bounded")
        assert any("= 1" in v for v in validate(bad))

    def test_sparse_gap_checks(self):
        v = validate(Config(5, DigitSet.restricted(5, (0, 3)), "sparse"))
        assert v == []
        v = validate(Config(3, DigitSet.restricted(3, (0, 3)), "sparse"))
        assert v  # gap 3 is not above 3 for n=3

    def test_bounded_range(self):
        bad = Config(3, DigitSet.restricted(3, (0, 8)), "bounded")
        assert any("exceeds" in v for v in validate(bad))


class TestAdmissible:
    def test_examples(self):
        D = CFG04.digits
        assert admissible_digits(D, -4) == (0,)
        assert admissible_digits(D, 0) == (0, 4)
        assert admissible_digits(DigitSet.restricted(3, (0, 4, 8)), 4) == (4, 8)

    def test_invalid_translation_digit(self):
        with pytest.raises(ValueError):
            admissible_digits(CFG04.digits, 3)


class TestMk:
    def test_piecewise_formula(self):
        for k in range(1, 31):
            expected = 2 ** ((k + (0, -1, 1)[k % 3]) // 3)
            assert m_k(CFG04, ALPHA, k) == expected

    def test_all_zero(self):
        zero = DigitSeq((), (0,))
        assert m_k(CFG04, zero, 6) == 2**6
        assert m_k(CFG048, zero, 4) == 3**4


class TestDimValue:
    def test_canonicalisation(self):
        assert DimValue(10, 4, 6) == DimValue(10, 2, 3)
        assert DimValue(10, 64, 6) == DimValue(10, 2, 1)
        assert DimValue(10, 1, 5) == DimValue(10, 1, 1)

    def test_cross_power_inequality(self):
        assert DimValue(10, 4, 3) != DimValue(10, 2, 3)

    def test_display(self):
        v = DimValue.from_cycle_factors((1, 2, 1), 10)
        assert v.as_json() == {
            "coefficient": "1/3",
            "base_log": "log(2)/log(sqrt(10))",
            "decimal": "0.2007",
        }

    def test_scaling(self):
        full = DimValue(10, 4, 1)  # log|D| / log|b| with |D| = 2
        assert full.scaled(Fraction(1, 3)) == DimValue(10, 4, 3)
        assert full.scaled(Fraction(0)) .is_zero()
        assert full.scaled(Fraction(1)) == full


class TestDimension:
    def test_example_intersection(self):
        rep = dimension(CFG04, ALPHA)
        assert rep.m_cycle == (1, 2, 1)
        assert rep.value == DimValue(10, 4, 3)
        assert rep.value.decimal() == pytest.approx(0.20068, abs=1e-4)
        assert rep.hausdorff == rep.packing == rep.lower_box == rep.upper_box

    def test_all_zero_gives_attractor_dimension(self):
        rep = dimension(CFG04, DigitSeq((), (0,)))
        assert rep.value == attractor_dimension(CFG04)
        assert rep.value == DimValue(10, 4, 1)

    def test_singleton_factors_give_zero(self):
        rep = dimension(CFG04, DigitSeq((), (4, -4)))
        assert rep.value.is_zero()

    def test_prefix_does_not_change_value(self):
        rng = random.Random(9)
        for _ in range(25):
            q = rng.randint(1, 4)
            prefix = tuple(rng.choice((-4, 0, 4)) for _ in range(q))
            with_prefix = DigitSeq(prefix, ALPHA.cycle)
            assert dimension(CFG04, with_prefix).value == dimension(CFG04, ALPHA).value

    def test_monotone_in_cycle_digits(self):
        def dim_le(a, b):
            # log(m_a)/(q_a log B) <= log(m_b)/(q_b log B) iff m_a^q_b <= m_b^q_a
            return a.m**b.q <= b.m**a.q

        base_rep = dimension(CFG04, DigitSeq((), (0, 4)))
        grown = dimension(CFG04, DigitSeq((), (0, 4, 0)))
        shrunk = dimension(CFG04, DigitSeq((), (0, 4, 4)))
        assert dim_le(base_rep.value, grown.value)
        assert dim_le(shrunk.value, base_rep.value)

    def test_regime_violation_raises(self):
        bad = Config(3, DigitSet.restricted(3, (0, 1)), "bounded")
        with pytest.raises(HypothesisError):
            dimension(bad, DigitSeq((), (0,)))

    def test_alpha_digit_outside_delta(self):
        with pytest.raises(ValueError):
            dimension(CFG04, DigitSeq((), (3,)))


class TestBuilder:
    def test_level_one_is_all_zero_tail(self):
        beta = build_translation(CFG04, (), Fraction(1))
        assert beta == DigitSeq((), (0,))
        assert dimension(CFG04, beta).value == attractor_dimension(CFG04)

    def test_level_zero_is_max_gap_tail(self):
        beta = build_translation(CFG04, (), Fraction(0))
        assert beta == DigitSeq((), (4,))
        assert dimension(CFG04, beta).value.is_zero()

    def test_level_third(self):
        beta = build_translation(CFG04, (), Fraction(1, 3))
        assert len(beta.cycle) == 3
        assert sorted(beta.cycle) == [0, 4, 4]
        assert dimension(CFG04, beta).value == lambda_target(CFG04, Fraction(1, 3))

    def test_level_grid_with_random_prefixes(self):
        rng = random.Random(77)
        for cfg in (CFG04, CFG048):
            deltas = cfg.delta.digits
            for lam in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
                for _ in range(20):
                    prefix = tuple(rng.choice(deltas) for _ in range(rng.randint(0, 4)))
                    beta = build_translation(cfg, prefix, lam)
                    assert dimension(cfg, beta).value == lambda_target(cfg, lam)

    def test_out_of_range_level(self):
        with pytest.raises(ValueError):
            build_translation(CFG04, (), Fraction(3, 2))

    def test_proximity_to_any_target_sharing_prefix(self):
        # |beta - alpha|^2 <= (2 max|d| (s+2)/n^2)^2 / (n^2+1)^m exactly
        rng = random.Random(13)
        base = CFG04.base
        for _ in range(40):
            q, p = rng.randint(0, 2), rng.randint(1, 3)
            alpha = DigitSeq(
                tuple(rng.choice((-4, 0, 4)) for _ in range(q)),
                tuple(rng.choice((-4, 0, 4)) for _ in range(p)),
            )
            m = rng.randint(0, 5)
            prefix = alpha.first(m)
            beta = build_translation(CFG04, prefix, Fraction(1, 2))
            diff = evaluate(beta, base) - evaluate(alpha, base)
            radius_sq = Fraction(2 * 4 * (3 + 2), 9) ** 2
            assert diff.norm() <= radius_sq / Fraction(10**m)


class TestFundamentalTranslations:
    def test_zero(self):
        seq = in_fundamental_translations(CFG04, QI())
        assert seq == DigitSeq((), (0,))

    def test_example_value(self):
        alpha = QI(GaussianInt(-28, 24), 1) / QI(GaussianInt(-19, 26), 1)
        seq = in_fundamental_translations(CFG04, alpha)
        assert seq == ALPHA

    def test_far_value_rejected(self):
        assert in_fundamental_translations(CFG04, QI(GaussianInt(10, 0), 1)) is None
