"""High-precision real arithmetic on scaled big integers.

A value is mantissa * 2**scale with a stated precision in bits; every
operation rounds (half-to-even) back to the operands' precision, with 32
guard bits folded into every precision request. On top of the arithmetic
live the constants (pi, sqrt, zeta(3), each with two independent formulas),
dilogarithm/trilogarithm evaluation, double-exponential (tanh-sinh)
quadrature, and continued-fraction recognition of rational multiples of a
basis constant.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

GUARD_BITS = 32
_LOG2_10 = math.log2(10)


def bits_for_digits(digits: int) -> int:
    return int(digits * _LOG2_10) + 1 + GUARD_BITS


def digits_for_bits(bits: int) -> int:
    return max(1, int((bits - GUARD_BITS) / _LOG2_10))


def _rshift_round(m: int, k: int) -> int:
    """Shift right k bits with round-half-to-even (k may be <= 0)."""
    if k <= 0:
        return m << (-k)
    sign = -1 if m < 0 else 1
    a = abs(m)
    q, r = divmod(a, 1 << k)
    half = 1 << (k - 1)
    if r > half or (r == half and q & 1):
        q += 1
    return sign * q


class HighPrecisionReal:
    """Immutable scaled-bigint real: value = mantissa * 2**scale."""

    __slots__ = ("mantissa", "scale", "precision_bits")

    def __init__(self, mantissa: int, scale: int, precision_bits: int):
        if precision_bits < 8:
            raise ValueError("precision_bits too small")
        if mantissa == 0:
            scale = 0
        else:
            bl = mantissa.bit_length()
            if bl > precision_bits:
                drop = bl - precision_bits
                mantissa = _rshift_round(mantissa, drop)
                scale += drop
        object.__setattr__(self, "mantissa", mantissa)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "precision_bits", precision_bits)

    def __setattr__(self, name, value):
        raise AttributeError("HighPrecisionReal is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n: int, bits: int) -> "HighPrecisionReal":
        return cls(n, 0, bits)

    @classmethod
    def from_fraction(cls, fr, bits: int) -> "HighPrecisionReal":
        fr = Fraction(fr)
        if fr == 0:
            return cls(0, 0, bits)
        num, den = fr.numerator, fr.denominator
        shift = bits + 2 + max(0, den.bit_length() - num.bit_length())
        m = _rshift_round_div(num << shift, den)
        return cls(m, -shift, bits)

    def with_precision(self, bits: int) -> "HighPrecisionReal":
        return HighPrecisionReal(self.mantissa, self.scale, bits)

    # -- exact views -------------------------------------------------------

    def to_fraction(self) -> Fraction:
        if self.scale >= 0:
            return Fraction(self.mantissa * (1 << self.scale))
        return Fraction(self.mantissa, 1 << (-self.scale))

    def is_zero(self) -> bool:
        return self.mantissa == 0

    @property
    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def __float__(self) -> float:
        try:
            return math.ldexp(self.mantissa, self.scale)
        except OverflowError:
            m = self.mantissa
            bl = m.bit_length()
            return math.ldexp(_rshift_round(m, bl - 53), self.scale + bl - 53)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "HighPrecisionReal | None":
        if isinstance(other, HighPrecisionReal):
            return other
        if isinstance(other, (int, Fraction)):
            return HighPrecisionReal.from_fraction(other, self.precision_bits)
        return None

    def __neg__(self):
        return HighPrecisionReal(-self.mantissa, self.scale, self.precision_bits)

    def __abs__(self):
        return HighPrecisionReal(abs(self.mantissa), self.scale, self.precision_bits)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = min(self.precision_bits, o.precision_bits)
        if self.mantissa == 0:
            return o.with_precision(prec)
        if o.mantissa == 0:
            return self.with_precision(prec)
        s = min(self.scale, o.scale)
        m = (self.mantissa << (self.scale - s)) + (o.mantissa << (o.scale - s))
        return HighPrecisionReal(m, s, prec)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = min(self.precision_bits, o.precision_bits)
        return HighPrecisionReal(self.mantissa * o.mantissa,
                                 self.scale + o.scale, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.mantissa == 0:
            raise ZeroDivisionError("division by zero")
        prec = min(self.precision_bits, o.precision_bits)
        if self.mantissa == 0:
            return HighPrecisionReal(0, 0, prec)
        shift = prec + 4 + max(0, o.mantissa.bit_length() - self.mantissa.bit_length())
        m = _rshift_round_div(self.mantissa << shift, o.mantissa)
        return HighPrecisionReal(m, self.scale - o.scale - shift, prec)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def sqrt(self) -> "HighPrecisionReal":
        if self.mantissa < 0:
            raise ValueError("square root of a negative value")
        prec = self.precision_bits
        if self.mantissa == 0:
            return HighPrecisionReal(0, 0, prec)
        m, s = self.mantissa, self.scale
        t = 2 * prec + 8 - m.bit_length()
        if (s - t) % 2:
            t += 1
        if t > 0:
            m <<= t
        elif t < 0:
            m = _rshift_round(m, -t)
            t = 0
            if (s - t) % 2:
                m <<= 1
                t = 1
        r = isqrt(m)
        return HighPrecisionReal(r, (s - t) // 2, prec)

    # -- comparisons (exact on the represented values) ---------------------

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError("cannot compare")
        s = min(self.scale, o.scale)
        a = self.mantissa << (self.scale - s)
        b = o.mantissa << (o.scale - s)
        return (a > b) - (a < b)

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash(self.to_fraction())

    # -- printing ----------------------------------------------------------

    def to_decimal(self, digits: int) -> str:
        """Round to `digits` significant decimal digits."""
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if self.mantissa == 0:
            return "0"
        f = abs(self.to_fraction())
        e10 = _decimal_exponent(f)
        scaled = f * Fraction(10) ** (digits - 1 - e10)
        n = _round_fraction_half_even(scaled)
        if n >= 10 ** digits:
            n //= 10
            e10 += 1
        s = str(n)
        sign = "-" if self.mantissa < 0 else ""
        if -6 <= e10 < digits + 6:
            if e10 >= digits - 1:
                body = s + "0" * (e10 - digits + 1)
            elif e10 >= 0:
                body = s[: e10 + 1] + "." + s[e10 + 1:]
                body = body.rstrip(".")
            else:
                body = "0." + "0" * (-e10 - 1) + s
            return sign + body
        mant = s[0] + ("." + s[1:] if len(s) > 1 else "")
        return f"{sign}{mant}e{e10:+d}"

    def __repr__(self):
        return f"HighPrecisionReal({self.to_decimal(min(20, digits_for_bits(self.precision_bits)))})"


def _rshift_round_div(num: int, den: int) -> int:
    """Rounded integer division (half to even), den > 0 or < 0 allowed."""
    if den < 0:
        num, den = -num, -den
    sign = -1 if num < 0 else 1
    a = abs(num)
    q, r = divmod(a, den)
    twice = 2 * r
    if twice > den or (twice == den and q & 1):
        q += 1
    return sign * q


def _decimal_exponent(f: Fraction) -> int:
    """Largest e with 10**e <= f (f > 0)."""
    e = int(math.floor((f.numerator.bit_length() - f.denominator.bit_length())
                       * math.log10(2)))
    while Fraction(10) ** e > f:
        e -= 1
    while Fraction(10) ** (e + 1) <= f:
        e += 1
    return e


def _round_fraction_half_even(f: Fraction) -> int:
    return _rshift_round_div(f.numerator, f.denominator)


# -- fixed-point constant kernels (integer value = real * 2**W) -------------

_cache_lock = threading.Lock()
_cache: dict[tuple, int] = {}


def _cached(key, compute):
    with _cache_lock:
        if key in _cache:
            return _cache[key]
    value = compute()
    with _cache_lock:
        _cache[key] = value
    return value


def _atan_inv_fix(m: int, w: int) -> int:
    """atan(1/m) * 2**w for integer m >= 2."""
    total = 0
    power = (1 << w) // m
    m2 = m * m
    k = 0
    while power:
        term = power // (2 * k + 1)
        total += -term if k & 1 else term
        power //= m2
        k += 1
    return total


def _pi_fix_machin(w: int) -> int:
    return _cached(("pi_machin", w),
                   lambda: 16 * _atan_inv_fix(5, w) - 4 * _atan_inv_fix(239, w))


def _pi_fix_stormer(w: int) -> int:
    return _cached(("pi_stormer", w),
                   lambda: 24 * _atan_inv_fix(8, w) + 8 * _atan_inv_fix(57, w)
                   + 4 * _atan_inv_fix(239, w))


def _atanh_inv_fix(m: int, w: int) -> int:
    """atanh(1/m) * 2**w for integer m >= 2."""
    total = 0
    power = (1 << w) // m
    m2 = m * m
    k = 0
    while power:
        total += power // (2 * k + 1)
        power //= m2
        k += 1
    return total


def _ln2_fix(w: int) -> int:
    # ln 2 = 2 atanh(1/3) (with a second route available via 18/(2*13)... we
    # keep the standard three-term combination for an internal cross check).
    return _cached(("ln2", w),
                   lambda: 2 * _atanh_inv_fix(3, w))


def _zeta3_fix_binomial(w: int) -> int:
    """zeta(3) * 2**w via the alternating central-binomial series
    (5/2) * sum (-1)^(n-1) / (n^3 binom(2n, n))."""
    def compute():
        total = 0
        binom = 2  # binom(2, 1)
        n = 1
        while True:
            term = (1 << w) // (n ** 3 * binom)
            if term == 0:
                break
            total += -term if (n - 1) & 1 else term
            n += 1
            binom = binom * (2 * n - 1) * 2 // n
        return (5 * total) // 2
    return _cached(("zeta3_binomial", w), compute)


def _bernoulli_numbers(count: int) -> list[Fraction]:
    """B_0 .. B_count (B_1 = -1/2 convention), exact."""
    bs: list[Fraction] = []
    for m in range(count + 1):
        if m == 0:
            bs.append(Fraction(1))
            continue
        acc = Fraction(0)
        for j in range(m):
            acc += comb(m + 1, j) * bs[j]
        bs.append(-acc / (m + 1))
    return bs


def _zeta3_fix_euler_maclaurin(w: int) -> int:
    """zeta(3) * 2**w via the defining series plus an Euler-Maclaurin tail."""
    def compute():
        n_cut = 1 << 14
        k_max = max(8, (w // 100) + 14)
        total = 0
        for n in range(1, n_cut):
            total += (1 << w) // n ** 3
        tail = Fraction(1, 2 * n_cut ** 2) + Fraction(1, 2 * n_cut ** 3)
        bern = _bernoulli_numbers(2 * k_max)
        for k in range(1, k_max + 1):
            tail += bern[2 * k] * (2 * k + 1) / (2 * Fraction(n_cut) ** (2 * k + 2))
        return total + _round_fraction_half_even(tail * (1 << w))
    return _cached(("zeta3_em", w), compute)


def pi(digits: int, method: str = "machin") -> HighPrecisionReal:
    """pi to the requested decimal precision.

    Two independent arctangent decompositions are available ("machin" and
    "stormer"); tests cross-check them against each other.
    """
    w = bits_for_digits(digits) + 8
    if method == "machin":
        fix = _pi_fix_machin(w)
    elif method == "stormer":
        fix = _pi_fix_stormer(w)
    else:
        raise ValueError(f"unknown pi method {method!r}")
    return HighPrecisionReal(fix, -w, bits_for_digits(digits))


def sqrt_int(k: int, digits: int, method: str = "newton") -> HighPrecisionReal:
    """sqrt(k) for a nonnegative integer k.

    "newton" uses the integer square root of k << 2W; the independent
    "continued_fraction" route runs the periodic surd expansion and squares
    out its convergents.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    bits = bits_for_digits(digits)
    if k == 0:
        return HighPrecisionReal(0, 0, bits)
    if method == "newton":
        w = bits + 8
        fix = isqrt(k << (2 * w))
        return HighPrecisionReal(fix, -w, bits)
    if method == "continued_fraction":
        return HighPrecisionReal.from_fraction(_sqrt_cf_fraction(k, bits + 8), bits)
    raise ValueError(f"unknown sqrt method {method!r}")


def _sqrt_cf_fraction(k: int, bits: int) -> Fraction:
    """Rational approximation of sqrt(k) with error < 2**-bits, from the
    periodic continued fraction of the quadratic surd."""
    a0 = isqrt(k)
    if a0 * a0 == k:
        return Fraction(a0)
    # x_i = (sqrt(k) + p) / q; a = floor(x_i)
    p, q, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k_cur = 0, 1
    # Convergents h/k satisfy |h/k - sqrt(k)| < 1/k^2.
    while k_cur * k_cur < (1 << (bits + 2)):
        p = a * q - p
        q = (k - p * p) // q
        a = (a0 + p) // q
        h_prev, h = h, a * h + h_prev
        k_prev, k_cur = k_cur, a * k_cur + k_prev
    return Fraction(h, k_cur)


def zeta3(digits: int, method: str = "binomial") -> HighPrecisionReal:
    """zeta(3), via the fast alternating central-binomial series, or the
    defining series with an Euler-Maclaurin tail ("euler_maclaurin")."""
    w = bits_for_digits(digits) + 8
    if method == "binomial":
        fix = _zeta3_fix_binomial(w)
    elif method == "euler_maclaurin":
        fix = _zeta3_fix_euler_maclaurin(w)
    else:
        raise ValueError(f"unknown zeta3 method {method!r}")
    return HighPrecisionReal(fix, -w, bits_for_digits(digits))


def ln2(digits: int) -> HighPrecisionReal:
    w = bits_for_digits(digits) + 8
    return HighPrecisionReal(_ln2_fix(w), -w, bits_for_digits(digits))


def pi_cubed(digits: int) -> HighPrecisionReal:
    p = pi(digits + 4)
    return (p * p * p).with_precision(bits_for_digits(digits))


def pi_cubed_over_sqrt3(digits: int) -> HighPrecisionReal:
    v = pi_cubed(digits + 4) / sqrt_int(3, digits + 4)
    return v.with_precision(bits_for_digits(digits))


# -- elementary functions ----------------------------------------------------

def hp_exp(x: HighPrecisionReal, bits: int | None = None) -> HighPrecisionReal:
    """exp(x) at the requested precision (default: x's precision)."""
    bits = bits or x.precision_bits
    j = isqrt(bits) + 2
    w = bits + j + 16
    ln2_f = Fraction(_ln2_fix(w), 1 << w)
    xf = x.to_fraction()
    n = _round_fraction_half_even(xf / ln2_f)
    r = xf - n * ln2_f
    rf = _round_fraction_half_even(r * (1 << w))
    rf = _rshift_round(rf, j)
    term = 1 << w
    acc = term
    k = 1
    while term:
        term = _rshift_round(term * rf, w) // k
        acc += term
        k += 1
    for _ in range(j):
        acc = _rshift_round(acc * acc, w)
    return HighPrecisionReal(acc, n - w, bits)


def hp_log(x: HighPrecisionReal, bits: int | None = None) -> HighPrecisionReal:
    """Natural log of a positive value."""
    if x.mantissa <= 0:
        raise ValueError("log of a nonpositive value")
    bits = bits or x.precision_bits
    w = bits + 16
    m, s = x.mantissa, x.scale
    bl = m.bit_length()
    # v = m * 2**(1-bl) in [1, 2); x = v * 2**(s + bl - 1)
    v_fix = _rshift_round(m, bl - 1 - w)
    one = 1 << w
    z = ((v_fix - one) << w) // (v_fix + one)
    z2 = _rshift_round(z * z, w)
    acc = 0
    p = z
    k = 0
    while p:
        acc += p // (2 * k + 1)
        p = _rshift_round(p * z2, w)
        k += 1
    log_v = 2 * acc
    e = s + bl - 1
    total = log_v + e * _ln2_fix(w)
    return HighPrecisionReal(total, -w, bits)


# -- polylogarithms ----------------------------------------------------------

def li(s: int, x, digits: int) -> HighPrecisionReal:
    """Li_s(x) = sum x^n / n^s for s in {2, 3} and |x| <= 1.

    Exact special values are used at x = +-1; elsewhere the defining series
    is summed with a geometric tail bound.
    """
    if s not in (2, 3):
        raise ValueError("only s = 2 and s = 3 are supported")
    bits = bits_for_digits(digits)
    if not isinstance(x, HighPrecisionReal):
        x = HighPrecisionReal.from_fraction(Fraction(x), bits + 16)
    fx = x.to_fraction()
    if abs(fx) > 1:
        raise ValueError("|x| must be <= 1")
    if fx == 1:
        if s == 3:
            return zeta3(digits)
        p = pi(digits + 4)
        return (p * p / 6).with_precision(bits)
    if fx == -1:
        if s == 3:
            return (zeta3(digits + 4) * Fraction(-3, 4)).with_precision(bits)
        p = pi(digits + 4)
        return (-(p * p) / 12).with_precision(bits)
    w = bits + 16
    xv = x.with_precision(w)
    term = xv
    acc = HighPrecisionReal(0, 0, w)
    n = 1
    eps = HighPrecisionReal(1, -w - 2, w)
    while abs(term) > eps:
        acc = acc + term / n ** s
        n += 1
        term = term * xv
        if n > 10 ** 6:
            raise ValueError("series too close to the unit circle")
    return acc.with_precision(bits)


# -- double-exponential quadrature -------------------------------------------

class QuadratureError(Exception):
    pass


def quad_de(f, a, b, digits: int, max_levels: int = 12) -> HighPrecisionReal:
    """Tanh-sinh quadrature of f over (a, b).

    The integrand may have integrable (at worst logarithmic) endpoint
    singularities; nodes are generated with exact distances from the
    endpoints so f never sees the endpoints themselves. Levels are doubled
    until two successive levels agree to the requested tolerance.
    """
    value, _levels = _quad_de_impl(f, a, b, digits, max_levels)
    return value


def _quad_de_impl(f, a, b, digits: int,
                  max_levels: int) -> tuple[HighPrecisionReal, int]:
    work_bits = bits_for_digits(digits) + 48
    wb = work_bits

    def as_hp(v):
        if isinstance(v, HighPrecisionReal):
            return v.with_precision(wb)
        return HighPrecisionReal.from_fraction(Fraction(v), wb)

    a_hp, b_hp = as_hp(a), as_hp(b)
    width = b_hp - a_hp
    mid = (a_hp + b_hp) / 2
    pi_hp = HighPrecisionReal(_pi_fix_machin(wb), -wb, wb)
    pi_half = pi_hp / 2
    t_max = math.asinh((wb * math.log(2) + 30) * 2 / math.pi)
    tol = HighPrecisionReal.from_fraction(Fraction(1, 10 ** (digits + 2)), wb)
    tiny = HighPrecisionReal(1, -wb + 12, wb)

    def node_contribution(t_num: int, t_den_log2: int):
        """Weighted f-sum of the node pair at t = t_num / 2**t_den_log2."""
        t = HighPrecisionReal.from_fraction(Fraction(t_num, 1 << t_den_log2), wb)
        et = hp_exp(t, wb)
        inv_et = 1 / et
        cosh_t = (et + inv_et) / 2
        sinh_t = (et - inv_et) / 2
        big_e = hp_exp(pi_hp * sinh_t, wb)  # exp(2 * (pi/2) sinh t)
        denom = big_e + 2 + 1 / big_e
        w = pi_half * cosh_t * 4 / denom
        if w < tiny:
            return None
        inv = 1 / (1 + big_e)
        if inv.is_zero():
            return None
        y_plus = b_hp - width * inv
        y_minus = a_hp + width * inv
        if t_num == 0:
            return w * f(mid)
        return w * (f(y_plus) + f(y_minus))

    # Level 0: step h = 1.
    total = node_contribution(0, 0)
    k = 1
    while True:
        contrib = node_contribution(k, 0)
        if contrib is None:
            break
        total = total + contrib
        k += 1
    prev_estimate = total * width / 2
    for level in range(1, max_levels + 1):
        k = 1
        max_k = int(t_max * (1 << level)) + 1
        while k <= max_k:
            contrib = node_contribution(k, level)
            if contrib is not None:
                total = total + contrib
            k += 2
        estimate = total * width / 2 * Fraction(1, 1 << level)
        err = abs(estimate - prev_estimate)
        scale = abs(estimate)
        bound = tol if scale < 1 else tol * scale
        if level >= 2 and err < bound:
            return estimate.with_precision(bits_for_digits(digits)), level
        prev_estimate = estimate
    raise QuadratureError(
        f"tanh-sinh did not converge within {max_levels} levels")


def v16_membrane_value(digits: int) -> HighPrecisionReal:
    """The membrane integral behind the V16 special value: the real part of
    2 * int_{-1}^{1} log(y) log(-y) / (1 - y) dy, split over (0, 1) as
    2 * (int log^2 y / (1 - y) + int log^2 y / (1 + y)).

    Evaluates to 7 zeta(3); recognition confirms the coefficient.
    """
    if digits > 40:
        raise ValueError("digits > 40 exceeds the quadrature budget")
    work = digits + 8

    def f_minus(y):
        lg = hp_log(y)
        return lg * lg / (1 - y)

    def f_plus(y):
        lg = hp_log(y)
        return lg * lg / (1 + y)

    i_minus = quad_de(f_minus, 0, 1, work)
    i_plus = quad_de(f_plus, 0, 1, work)
    return ((i_minus + i_plus) * 2).with_precision(bits_for_digits(digits))


# -- constant recognition ----------------------------------------------------

BASIS_ONE = "one"
BASIS_ZETA3 = "zeta3"
BASIS_PI3 = "pi3"
BASIS_PI3_OVER_SQRT3 = "pi3_over_sqrt3"


def default_basis() -> list[tuple[str, object]]:
    """Recognition basis in trial order. Each entry is (tag, digits -> value)."""
    return [
        (BASIS_ONE, lambda digits: HighPrecisionReal.from_int(1, bits_for_digits(digits))),
        (BASIS_ZETA3, zeta3),
        (BASIS_PI3_OVER_SQRT3, pi_cubed_over_sqrt3),
        (BASIS_PI3, pi_cubed),
    ]


@dataclass
class RecognizedConstant:
    """x ~= coefficient * basis, with the verification residual."""

    coefficient: Fraction
    basis: str
    residual: HighPrecisionReal


def recognize(x: HighPrecisionReal, basis=None, max_denominator: int = 10000,
              guard_digits: int = 8) -> RecognizedConstant | None:
    """Identify x as a small rational multiple of one basis constant.

    Continued-fraction reconstruction (Fraction.limit_denominator) is run on
    x / B for each basis value B; a candidate p/q is accepted only if the
    residual times q**2 beats 10**-(digits - guard_digits) (the q**2 factor
    rules out the generic 1/q**2 approximation quality every real number
    has) and the match survives re-verification with B recomputed at doubled
    precision. Returns None when nothing passes; absence is a valid result.
    """
    digits = digits_for_bits(x.precision_bits)
    if digits < 3 * guard_digits:
        raise ValueError(
            f"x carries {digits} digits; need at least {3 * guard_digits}")
    threshold = HighPrecisionReal.from_fraction(
        Fraction(1, 10 ** (digits - guard_digits)), x.precision_bits + 8)
    xf = x.to_fraction()
    for tag, fn in (basis if basis is not None else default_basis()):
        b = fn(digits)
        cand = (xf / b.to_fraction()).limit_denominator(max_denominator)
        weight = cand.denominator ** 2
        residual = abs(x - b * cand)
        if residual * weight < threshold:
            b2 = fn(2 * digits)
            residual2 = abs(x - b2 * cand)
            if residual2 * weight < threshold:
                return RecognizedConstant(coefficient=cand, basis=tag,
                                          residual=residual2)
    return None
