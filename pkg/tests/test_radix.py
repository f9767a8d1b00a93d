"""Radix codec: evaluation, encoding, grammar, membership search."""
from __future__ import annotations

import random

import pytest

from gaussradix.arith import QI, GaussianInt
from gaussradix.radix import (
    Base,
    DigitSeq,
    DigitSet,
    combine,
    digit_polynomial,
    encode_integer,
    evaluate,
    find_expansion,
    format_seq,
    has_unique_expansion,
    member,
    parse_seq,
)

B3 = Base(3)


def gi(re, im=0):
    return GaussianInt(re, im)


class TestCanonicalForm:
    def test_primitive_cycle(self):
        assert DigitSeq((), (5, 0, 5, 0)).cycle == (5, 0)
        assert DigitSeq((), (4, 4, 4)).cycle == (4,)

    def test_prefix_absorbed_into_cycle(self):
        s = DigitSeq((0, 0, 4), (0, 0, 4))
        assert s.prefix == () and s.cycle == (0, 0, 4)
        t = DigitSeq((7, 5), (0, 5))
        assert t.prefix == (7,) and t.cycle == (5, 0)

    def test_structural_equality_is_sequence_equality(self):
        assert DigitSeq((5,), (0, 5)) == DigitSeq((), (5, 0))
        assert DigitSeq((1,), (0,)) != DigitSeq((), (0,))

    def test_empty_cycle_rejected(self):
        with pytest.raises(ValueError):
            DigitSeq((1,), ())

    def test_indexing_and_override(self):
        s = DigitSeq((9,), (1, 2, 3))
        assert s.first(7) == (9, 1, 2, 3, 1, 2, 3)
        t = s.with_prefix_override((7, 7, 7, 7))
        assert t.first(7) == (7, 7, 7, 7, 1, 2, 3)


class TestEvaluate:
    def test_periodic_closed_form(self):
        assert evaluate(DigitSeq((), (5, 0)), B3) == QI(gi(-27, -11), 17)

    def test_example_translation_value(self):
        v = evaluate(DigitSeq((), (-4, 0, 4)), B3)
        assert v == QI(gi(-28, 24), 1) / QI(gi(-19, 26), 1)

    def test_all_zero(self):
        for n in range(2, 7):
            assert evaluate(DigitSeq((), (0,)), Base(n)).is_zero()

    def test_linearity_over_digitwise_sums(self):
        rng = random.Random(11)
        for _ in range(100):
            q1, p1 = rng.randint(0, 3), rng.randint(1, 4)
            q2, p2 = rng.randint(0, 3), rng.randint(1, 4)
            x = DigitSeq(
                tuple(rng.randint(-9, 9) for _ in range(q1)),
                tuple(rng.randint(-9, 9) for _ in range(p1)),
            )
            y = DigitSeq(
                tuple(rng.randint(-9, 9) for _ in range(q2)),
                tuple(rng.randint(-9, 9) for _ in range(p2)),
            )
            s = combine(x, y, lambda a, b: a + b, DigitSeq)
            assert evaluate(s, B3) == evaluate(x, B3) + evaluate(y, B3)


class TestEncode:
    def test_zero(self):
        assert encode_integer(gi(0), B3) == [0]

    def test_minus_one(self):
        assert encode_integer(gi(-1), B3) == [9, 6, 1]

    def test_base_itself(self):
        assert encode_integer(gi(-3, 1), B3) == [0, 1]

    def test_round_trip_small(self):
        for n in (2, 3, 4, 5):
            base = Base(n)
            for re in range(-12, 13):
                for im in range(-12, 13):
                    g = gi(re, im)
                    digits = encode_integer(g, base)
                    assert all(0 <= d <= n * n for d in digits)
                    assert digit_polynomial(list(reversed(digits)), base) == g


class TestGrammar:
    def test_cycle_only(self):
        s = parse_seq("0.[](5,0)*")
        assert s.prefix == () and s.cycle == (5, 0)

    def test_prefix_and_cycle(self):
        s = parse_seq("0.[5](5,0)*")
        assert s.prefix == (5,) and s.cycle == (5, 0)

    def test_unicode_minus(self):
        assert parse_seq("0.[](−4,0,4)*") == DigitSeq((), (-4, 0, 4))

    def test_round_trip_canonical_corpus(self):
        rng = random.Random(5)
        corpus = []
        while len(corpus) < 50:
            q, p = rng.randint(0, 3), rng.randint(1, 4)
            seq = DigitSeq(
                tuple(rng.randint(-9, 9) for _ in range(q)),
                tuple(rng.randint(-9, 9) for _ in range(p)),
            )
            corpus.append(format_seq(seq))
        for text in corpus:
            assert format_seq(parse_seq(text)) == text

    @pytest.mark.parametrize("bad", ["", "0.[]()*", "0.[1](2)", "0.(2)*", "0.[a](1)*"])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_seq(bad)


class TestMember:
    def test_zero_always_member_with_zero_digit(self):
        for n in (2, 3, 5):
            for digs in ((0, 4), (0, 1, 2), (0, n * n)):
                D = DigitSet(n, digs)
                assert member(QI(), Base(n), D)

    def test_witness_for_known_value(self):
        D = DigitSet.restricted(3, (0, 5))
        z = QI(gi(-27, -11), 17)
        w = find_expansion(z, B3, D)
        assert w == DigitSeq((), (5, 0))

    def test_one_not_in_sparse_attractor(self):
        D = DigitSet.restricted(3, (0, 4))
        assert not member(QI(GaussianInt(1, 0), 1), B3, D)

    def test_member_of_every_evaluated_sequence(self):
        rng = random.Random(1234)
        for _ in range(5000):
            n = rng.choice((2, 3))
            base = Base(n)
            pool = list(range(n * n + 1))
            rng.shuffle(pool)
            digs = tuple(sorted(pool[: rng.randint(1, 3)]))
            D = DigitSet.restricted(n, digs)
            q, p = rng.randint(0, 3), rng.randint(1, 3)
            seq = DigitSeq(
                tuple(rng.choice(digs) for _ in range(q)),
                tuple(rng.choice(digs) for _ in range(p)),
            )
            z = evaluate(seq, base)
            w = find_expansion(z, base, D)
            assert w is not None
            assert evaluate(w, base) == z

    def test_out_of_range_value_rejected_fast(self):
        D = DigitSet.restricted(3, (0, 4))
        assert find_expansion(QI(gi(10), 1), B3, D) is None


class TestUniqueExpansion:
    def test_sparse_translation_is_unique(self):
        delta = DigitSet(3, (-4, 0, 4))
        z = evaluate(DigitSeq((), (-4, 0, 4)), B3)
        assert has_unique_expansion(z, B3, delta)

    def test_full_alphabet_is_not_unique(self):
        # 1 = 0.(2n-1) a 0 a 0 ... admits a second expansion over the full
        # difference alphabet, so uniqueness must fail
        delta = DigitSet(3, tuple(range(-9, 10)))
        one = QI(gi(1), 1)
        assert find_expansion(one, B3, delta) is not None
        assert not has_unique_expansion(one, B3, delta)

    def test_outside_value_not_unique(self):
        delta = DigitSet(3, (-4, 0, 4))
        assert not has_unique_expansion(QI(gi(10), 1), B3, delta)


SIX_IDENTITY_CASES = list(range(3, 11))


@pytest.mark.parametrize("n", SIX_IDENTITY_CASES)
def test_six_witness_identities(n):
    base = Base(n)
    a = (n - 1) ** 2 + 1
    one = QI(gi(1), 1)

    def ev(prefix, cycle):
        return evaluate(DigitSeq(tuple(prefix), tuple(cycle)), base)

    z_pre = ev([2 * n - 1], [a, 0])
    z_post = ev([0], [0, a])
    assert one + z_pre == z_post
    assert z_post - one == z_pre
    assert QI(gi(n, 1), 1) + ev([n * n, 0], [0, a]) == ev([0, 2 * n - 1], [a, 0])
    assert QI(gi(-n, -1), 1) + ev([0, 2 * n - 1], [a, 0]) == ev([n * n, 0], [0, a])
    assert QI(gi(n - 1, 1), 1) + ev([], [a, 0]) == ev([], [0, a])
    assert QI(gi(-n + 1, -1), 1) + ev([], [0, a]) == ev([], [a, 0])
