"""Paired recurrence solutions and the Apery limit b_n / a_n.

The two solutions are normalized a_0 = 1 and b_0 = 0, b_1 = 1, with the
recurrence enforced from n = 1 (resp. n = 2) on; both are computed in exact
rational arithmetic and only the final ratio is rounded. Convergence is
geometric with rate |t1| / |t2| given the two finite singular points, which
drives both the stopping rule and the reported error estimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hpreal import (
    HighPrecisionReal,
    RecognizedConstant,
    bits_for_digits,
    recognize,
)
from .pfops import ExactPoint, NumericPoint, Recurrence, SingularSet


class SolveError(Exception):
    """Leading recurrence coefficient vanished at a needed index."""

    def __init__(self, n: int):
        super().__init__(f"leading coefficient q_0(n) vanishes at n = {n}")
        self.n = n


class AperyPreconditionError(Exception):
    """The singular set does not support an Apery limit."""


class ConvergenceError(Exception):
    pass


@dataclass
class SolutionPair:
    recurrence: Recurrence
    a: list[Fraction]
    b: list[Fraction]


def solve_pair(rec: Recurrence, n_terms: int) -> SolutionPair:
    """Forward-solve the two normalized solutions up to index n_terms.

    Refuses (with the offending index) whenever q_0(n) = 0 for some
    1 <= n <= n_terms; division by zero is never silent.
    """
    q = rec.coefficient_polynomials
    span = rec.span
    lead = [q[0](Fraction(n)) for n in range(n_terms + 1)]
    for n in range(1, n_terms + 1):
        if lead[n] == 0:
            raise SolveError(n)

    def step(values: list[Fraction], n: int) -> Fraction:
        total = Fraction(0)
        for j in range(1, span + 1):
            if n - j >= 0 and n - j < len(values):
                qj = q[j](Fraction(n))
                if qj != 0 and values[n - j] != 0:
                    total += qj * values[n - j]
        return -total / lead[n]

    a = [Fraction(1)]
    for n in range(1, n_terms + 1):
        a.append(step(a, n))
    b = [Fraction(0)]
    if n_terms >= 1:
        b.append(Fraction(1))
    for n in range(2, n_terms + 1):
        b.append(step(b, n))
    return SolutionPair(recurrence=rec, a=a, b=b)


@dataclass
class AperyResult:
    limit: HighPrecisionReal
    terms_used: int
    error_bound: HighPrecisionReal
    convergence_ratio: HighPrecisionReal
    recognized: RecognizedConstant | None

    def to_json_dict(self, digits: int) -> dict:
        from .jsonutil import frac_str
        rec = None
        if self.recognized is not None:
            rec = {
                "coefficient": frac_str(self.recognized.coefficient),
                "basis": self.recognized.basis,
                "residual": self.recognized.residual.to_decimal(3),
            }
        return {
            "limit": self.limit.to_decimal(digits),
            "terms_used": self.terms_used,
            "error_bound": self.error_bound.to_decimal(3),
            "ratio": self.convergence_ratio.to_decimal(12),
            "recognized": rec,
        }


def _ordered_moduli(singular: SingularSet, digits: int):
    """|t1| <= |t2| for the two finite singular points (exact ordering for
    exact points). Raises AperyPreconditionError on equal moduli, non-real
    points, or a finite-point count other than two."""
    pts = singular.finite_points
    if len(pts) != 2:
        raise AperyPreconditionError(
            f"need exactly two finite singular points, found {len(pts)}")
    if all(isinstance(p, ExactPoint) for p in pts):
        p1, p2 = pts
        if not (p1.is_real and p2.is_real):
            raise AperyPreconditionError(
                "singular points form a complex pair: |t1| = |t2|")
        s1, t1c = p1.modulus_squared_surd()
        s2, t2c = p2.modulus_squared_surd()
        diff = ExactPoint(s1 - s2, t1c - t2c, p1.radicand)
        sign = diff.sign()
        if sign == 0:
            raise AperyPreconditionError(
                "singular points have equal modulus: |t1| = |t2|")
        lo, hi = (p1, p2) if sign < 0 else (p2, p1)
        return abs(lo.value_hp(digits)), abs(hi.value_hp(digits))
    if all(isinstance(p, NumericPoint) for p in pts):
        v1, v2 = (abs(p.value) for p in pts)
        lo, hi = (v1, v2) if v1 < v2 else (v2, v1)
        gap = hi - lo
        eps = HighPrecisionReal.from_fraction(
            Fraction(1, 10 ** 20), lo.precision_bits)
        if gap < eps * hi:
            raise AperyPreconditionError(
                "singular point moduli are numerically equal: |t1| = |t2|")
        return lo, hi
    raise AperyPreconditionError("mixed exact/numeric singular points")


def limit_error_model(singular: SingularSet, n: int,
                      digits: int = 50,
                      fitted_constant: HighPrecisionReal | None = None
                      ) -> HighPrecisionReal:
    """Heuristic error estimate (|t1| / |t2|)**n, optionally scaled by a
    constant fitted from observed increments. An estimate, not a proof."""
    lo, hi = _ordered_moduli(singular, digits + 10)
    ratio = lo / hi
    bits = bits_for_digits(digits)
    acc = HighPrecisionReal.from_int(1, max(bits, ratio.precision_bits))
    base = ratio
    k = n
    while k:
        if k & 1:
            acc = acc * base
        k >>= 1
        if k:
            base = base * base
    if fitted_constant is not None:
        acc = acc * fitted_constant
    return acc.with_precision(bits)


def apery_limit(rec: Recurrence, singular: SingularSet,
                precision_digits: int = 50, max_terms: int = 200,
                basis=None, max_denominator: int = 10000,
                run_recognition: bool = True) -> AperyResult:
    """Evaluate lim b_n / a_n to precision_digits.

    The iteration stops once both the raw Cauchy increments and the fitted
    geometric model C * ratio**n stay below 10**-precision_digits for five
    consecutive indices; the reported limit is the last ratio, with the
    model value as its error estimate.
    """
    work_digits = precision_digits + 12
    bits = bits_for_digits(work_digits)
    lo, hi = _ordered_moduli(singular, work_digits)
    ratio = (lo / hi).with_precision(bits)
    pair = solve_pair(rec, max_terms)
    tol = HighPrecisionReal.from_fraction(
        Fraction(1, 10 ** precision_digits), bits)

    ratios: dict[int, HighPrecisionReal] = {}

    def r_at(n: int) -> HighPrecisionReal | None:
        if pair.a[n] == 0:
            return None
        if n not in ratios:
            ratios[n] = HighPrecisionReal.from_fraction(
                Fraction(pair.b[n]) / pair.a[n], bits)
        return ratios[n]

    increments: dict[int, HighPrecisionReal] = {}

    def inc_at(n: int) -> HighPrecisionReal | None:
        if n not in increments:
            r_cur, r_prev = r_at(n), r_at(n - 1)
            if r_cur is None or r_prev is None:
                return None
            increments[n] = abs(r_cur - r_prev)
        return increments[n]

    ratio_powers: dict[int, HighPrecisionReal] = {}

    def ratio_pow(n: int) -> HighPrecisionReal:
        if n not in ratio_powers:
            acc = HighPrecisionReal.from_int(1, bits)
            base, k = ratio, n
            while k:
                if k & 1:
                    acc = acc * base
                k >>= 1
                if k:
                    base = base * base
            ratio_powers[n] = acc
        return ratio_powers[n]

    def fitted_constant(n: int) -> HighPrecisionReal:
        best = HighPrecisionReal.from_int(0, bits)
        for i in range(max(2, n - 9), n + 1):
            d = inc_at(i)
            if d is None:
                continue
            c = d / ratio_pow(i)
            if c > best:
                best = c

        if best.is_zero():
            best = HighPrecisionReal.from_int(1, bits)
        return best

    consecutive = 0
    for n in range(2, max_terms + 1):
        d = inc_at(n)
        if d is None:
            consecutive = 0
            continue
        c_fit = fitted_constant(n)
        model = c_fit * ratio_pow(n)
        if d < tol and model < tol:
            consecutive += 1
            if consecutive >= 5:
                limit = r_at(n)
                bound = model
                result = AperyResult(
                    limit=limit,
                    terms_used=n,
                    error_bound=bound.with_precision(bits_for_digits(precision_digits)),
                    convergence_ratio=ratio.with_precision(
                        bits_for_digits(precision_digits)),
                    recognized=None,
                )
                if run_recognition:
                    result.recognized = recognize(
                        limit.with_precision(bits_for_digits(precision_digits)),
                        basis=basis, max_denominator=max_denominator)
                return result
        else:
            consecutive = 0
    raise ConvergenceError(
        f"b_n/a_n did not stabilize to {precision_digits} digits within "
        f"{max_terms} terms")
