import random

import pytest

from lgapery import (
    DifferentialOperator,
    PeriodEngine,
    check_recurrence,
    parse,
    period_sequence,
    period_sequence_naive,
    to_recurrence,
)
from conftest import random_laurent

TETRA = parse("x + y + z + 1/(x*y*z)")

APERY_OPERATOR = DifferentialOperator.from_coefficients([
    [0, 0, 0, 1],
    [-5, -27, -51, -34],
    [1, 3, 3, 1],
])


class TestPeriodSequence:
    def test_tetrahedron_through_eight(self):
        seq = period_sequence(TETRA, 8)
        assert seq.values == [1, 0, 0, 0, 24, 0, 0, 0, 2520]

    def test_tetrahedron_multinomial_formula(self):
        # a_{4d} counts balanced monomials: (4d)! / (d!)^4.
        import math
        seq = period_sequence(TETRA, 12)
        for d in range(4):
            assert seq.values[4 * d] == math.factorial(4 * d) // math.factorial(d) ** 4

    def test_v12_first_terms(self, catalog_periods):
        assert catalog_periods["V12"].values[:5] == [1, 5, 73, 1445, 33001]

    def test_zero_terms(self):
        assert period_sequence(parse("x + 17*y"), 0).values == [1]

    def test_constant_one(self):
        assert period_sequence_naive(parse("1"), 6).values == [1] * 7
        assert period_sequence(parse("1"), 6).values == [1] * 7

    def test_integrality_enforced(self):
        seq = period_sequence(parse("(1+x)*(1+y)*(1+z)/(x*y*z)"), 6)
        assert all(v.denominator == 1 for v in seq.values)


class TestOracleEquivalence:
    def test_catalog_polynomials(self, catalog_periods):
        for name, seq in catalog_periods.items():
            naive = period_sequence_naive(seq.source, 8)
            assert naive.values == seq.values[:9], name

    def test_v16_three_terms(self):
        v16 = parse("(1+x+y+z)*(1+z)*(1+y)*(1+x)/(x*y*z)")
        assert period_sequence(v16, 3).values == period_sequence_naive(v16, 3).values

    def test_random_corpus(self):
        rng = random.Random(424242)
        for _ in range(50):
            p = random_laurent(rng, max_terms=5, span=2)
            n = rng.randint(1, 6)
            assert period_sequence(p, n).values == \
                period_sequence_naive(p, n).values, p.to_text()


class TestEngine:
    def test_prefix_reuse_within_horizon(self):
        engine = PeriodEngine(TETRA, 12)
        assert engine.values(8) == period_sequence(TETRA, 8).values
        assert engine.values() == period_sequence(TETRA, 12).values

    def test_extension_beyond_horizon_refused(self):
        engine = PeriodEngine(TETRA, 6)
        with pytest.raises(ValueError, match="horizon"):
            engine.values(7)

    def test_consistency_across_horizons(self):
        a = period_sequence(TETRA, 10).values
        b = period_sequence(TETRA, 16).values
        assert b[:11] == a


class TestCheckRecurrence:
    def test_v12_periods_satisfy_the_recurrence(self, catalog_periods):
        rec = to_recurrence(APERY_OPERATOR)
        assert check_recurrence(catalog_periods["V12"], rec)

    def test_perturbed_recurrence_fails(self, catalog_periods):
        # 17 -> 18 in the middle factor.
        wrong = DifferentialOperator.from_coefficients([
            [0, 0, 0, 1],
            [-5, -28, -54, -36],   # -t(1+2D)(18D^2+18D+5)
            [1, 3, 3, 1],
        ])
        rec = to_recurrence(wrong)
        assert not check_recurrence(catalog_periods["V12"], rec)

    def test_constant_sequence(self):
        # n a_n - n a_{n-1} = 0, i.e. operator (t-1)D + t after normalization.
        op = DifferentialOperator.from_coefficients([[0, 1], [-1, -1]])
        rec = to_recurrence(op)
        seq = period_sequence(parse("1"), 6)
        assert check_recurrence(seq, rec)
