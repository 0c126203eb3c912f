import random
from fractions import Fraction

import pytest

from lgapery import (
    DifferentialOperator,
    DiscoveryError,
    ExactPoint,
    UniPoly,
    apply_operator,
    involution,
    operator_from_recurrence,
    operator_from_series,
    parse,
    period_sequence,
    singular_points,
    symbol,
    to_recurrence,
)
from lgapery.pfops import leading_row

APERY_OPERATOR = DifferentialOperator.from_coefficients([
    [0, 0, 0, 1],
    [-5, -27, -51, -34],
    [1, 3, 3, 1],
])

EXPECTED = {
    "V12": ((1, -34, 1), Fraction(1)),
    "V16": ((16, -24, 1), Fraction(16)),
    "V18": ((-27, -18, 1), Fraction(-27)),
    "R1": ((64, -20, 1), Fraction(64)),
}

EXPECTED_SURDS = {
    "V12": (Fraction(17), Fraction(12), 2),
    "V16": (Fraction(12), Fraction(8), 2),
    "V18": (Fraction(9), Fraction(6), 3),
}


class TestRecurrenceConversion:
    def test_reference_operator_recurrence(self):
        rec = to_recurrence(APERY_OPERATOR)
        q0, q1, q2 = rec.coefficient_polynomials
        n = UniPoly.variable()
        assert q0 == n ** 3
        assert q1 == -(2 * n - 1) * (17 * n ** 2 - 17 * n + 5)
        assert q2 == (n - 1) ** 3

    def test_pure_euler_operator(self):
        op = DifferentialOperator.from_coefficients([[0, 1]])
        rec = to_recurrence(op)
        assert rec.coefficient_polynomials[0] == UniPoly.variable()

    def test_round_trip(self):
        assert operator_from_recurrence(to_recurrence(APERY_OPERATOR)) == APERY_OPERATOR

    def test_round_trip_random(self):
        rng = random.Random(2718)
        for _ in range(25):
            rows = [[rng.randint(-5, 5) for _ in range(rng.randint(1, 4))]
                    for _ in range(rng.randint(1, 4))]
            width = max(len(r) for r in rows)
            rows = [r + [0] * (width - len(r)) for r in rows]
            if not any(rows[j][-1] for j in range(len(rows))):
                rows[0][-1] = 1
            op = DifferentialOperator.from_coefficients(rows)
            assert operator_from_recurrence(to_recurrence(op)) == op


class TestApply:
    def test_reference_annihilates_v12(self, catalog_periods):
        values = catalog_periods["V12"].values
        out = apply_operator(APERY_OPERATOR, values[:31], 28)
        assert all(v == 0 for v in out)

    def test_euler_operator_scales_coefficients(self):
        op = DifferentialOperator.from_coefficients([[0, 1]])
        series = [Fraction(1)] * 6
        assert apply_operator(op, series, 5) == [Fraction(n) for n in range(6)]

    def test_insufficient_terms_rejected(self):
        from lgapery.pfops import OperatorError
        with pytest.raises(OperatorError):
            apply_operator(APERY_OPERATOR, [Fraction(1)] * 3, 5)


class TestDiscovery:
    def test_v12_recovers_reference_operator_exactly(self, catalog_operators):
        assert catalog_operators["V12"] == APERY_OPERATOR

    def test_geometric_series(self):
        series = [Fraction(1)] * 20
        op = operator_from_series(series, 4, 4, 8)
        # Normalized form of (1-t)D - t (relation n a_n - n a_{n-1} = 0).
        assert op == DifferentialOperator.from_coefficients([[0, 1], [-1, -1]])

    def test_minimality_order_then_degree(self, catalog_operators):
        for name, op in catalog_operators.items():
            assert op.order == 3
            assert op.degree == 2, name

    def test_stability_under_series_extension(self, catalog_periods,
                                               catalog_operators):
        for name, seq in catalog_periods.items():
            op40 = operator_from_series(seq.values, 4, 4, 8)
            assert op40 == catalog_operators[name], name

    def test_held_out_verification_beyond_fit(self, catalog_periods,
                                              catalog_operators):
        # Operators were fitted from 30 terms; they must also kill the tail.
        for name, seq in catalog_periods.items():
            out = apply_operator(catalog_operators[name], seq.values,
                                 len(seq.values) - 1)
            assert all(v == 0 for v in out), name

    def test_no_annihilator_raises(self):
        rng = random.Random(1)
        series = [Fraction(rng.randint(1, 9)) for _ in range(30)]
        with pytest.raises(DiscoveryError, match="ansatz box"):
            operator_from_series(series, 2, 2, 6)

    def test_too_short_series_raises(self):
        with pytest.raises(DiscoveryError, match="too short"):
            operator_from_series([Fraction(1)] * 5, 4, 4, 8)


class TestSymbol:
    def test_catalog_symbols(self, catalog_operators):
        for name, (coeffs, _m) in EXPECTED.items():
            sym = symbol(catalog_operators[name])
            assert sym.coeffs == tuple(Fraction(c) for c in coeffs), name

    def test_self_reciprocal_top_row_is_fixed(self):
        # V12's top row t^2 - 34t + 1 is its own reversal.
        assert leading_row(APERY_OPERATOR) == UniPoly((1, -34, 1))
        assert symbol(APERY_OPERATOR) == UniPoly((1, -34, 1))

    def test_euler_operator_symbol_is_constant(self):
        op = DifferentialOperator.from_coefficients([[0, 1]])
        assert symbol(op).degree == 0


class TestSingularPoints:
    def test_catalog_surds(self, catalog_operators):
        for name, (p, q, d) in EXPECTED_SURDS.items():
            pts = singular_points(catalog_operators[name]).finite_points
            assert {(pt.rational, pt.coefficient, pt.radicand) for pt in pts} \
                == {(p, q, d), (p, -q, d)}, name

    def test_r1_rational_points(self, catalog_operators):
        pts = singular_points(catalog_operators["R1"]).finite_points
        assert all(pt.is_rational for pt in pts)
        assert sorted(pt.rational for pt in pts) == [4, 16]

    def test_zero_and_infinity_always_included(self, catalog_operators):
        s = singular_points(catalog_operators["V12"])
        assert s.includes_zero and s.includes_infinity

    def test_degenerate_top_row_zero_roots_flagged(self):
        # F_1 = t^2: both symbol roots escape to infinity.
        op = DifferentialOperator.from_coefficients([[0, 0], [0, 0], [0, 1]])
        s = singular_points(op)
        assert s.finite_points == ()
        assert s.extra_infinite_roots == 2

    def test_numeric_fallback_for_quartic_symbol(self):
        tetra = parse("x + y + z + 1/(x*y*z)")
        seq = period_sequence(tetra, 41)
        op = operator_from_series(seq.values, 4, 4, 8)
        assert op.order == 3 and op.degree == 4
        s = singular_points(op)
        assert not s.exact
        assert s.unresolved_complex_pairs == 1
        vals = sorted(float(pt.value) for pt in s.finite_points)
        assert len(vals) == 2
        assert abs(vals[0] + 4.0) < 1e-50 or abs(vals[0] + 0.25) < 1e-50
        # Critical values of the superpotential are +-4: roots are 4, -4.
        assert abs(abs(vals[0]) - 4.0) < 1e-50
        assert abs(abs(vals[1]) - 4.0) < 1e-50

    def test_quadratic_with_rational_square_discriminant(self):
        # Top row (1-2t)(1-3t): critical values 2 and 3.
        op = DifferentialOperator.from_coefficients([[0, 1], [0, -5], [0, 6]])
        pts = singular_points(op).finite_points
        assert sorted(pt.rational for pt in pts) == [2, 3]


class TestInvolution:
    def test_catalog_m_values(self, catalog_operators):
        for name, (_coeffs, m) in EXPECTED.items():
            datum = involution(catalog_operators[name])
            assert datum.exists
            assert datum.M == m, name

    def test_root_product_equals_m(self, catalog_operators):
        for name, op in catalog_operators.items():
            datum = involution(op)
            pts = singular_points(op).finite_points
            prod_rat = (pts[0].rational * pts[1].rational
                        + pts[0].coefficient * pts[1].coefficient * pts[0].radicand)
            prod_surd = (pts[0].rational * pts[1].coefficient
                         + pts[0].coefficient * pts[1].rational)
            assert prod_rat == datum.M and prod_surd == 0, name

    def test_involution_swaps_r1_roots(self, catalog_operators):
        datum = involution(catalog_operators["R1"])
        assert datum.M == 64
        assert Fraction(64) / 4 == 16 and Fraction(64) / 16 == 4

    def test_non_quadratic_symbol_has_no_involution(self):
        op = DifferentialOperator.from_coefficients([[0, 1]])
        datum = involution(op)
        assert not datum.exists and datum.M is None


class TestExactPoint:
    def test_sign_logic(self):
        assert ExactPoint(Fraction(17), Fraction(-12), 2).sign() == 1
        assert ExactPoint(Fraction(9), Fraction(-6), 3).sign() == -1
        assert ExactPoint(Fraction(0), Fraction(-1), 5).sign() == -1
        assert ExactPoint(Fraction(2), Fraction(-1), 4).sign() == 0

    def test_value_hp(self):
        pt = ExactPoint(Fraction(17), Fraction(-12), 2)
        v = pt.value_hp(40)
        assert abs(float(v) - (17 - 12 * 2 ** 0.5)) < 1e-12
