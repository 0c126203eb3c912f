"""Differential operators in t and D = t d/dt, and their discovery from
series data.

An operator is sum_{j,k} c[j][k] t^j D^k acting on power series by
t^j D^k : a_n t^n -> n^k a_n t^(n+j), so annihilating a series is the same
as a linear recurrence sum_j q_j(n) a_{n-j} = 0 with
q_j(n) = sum_k c[j][k] (n-j)^k. Discovery solves for the c[j][k] by exact
nullspace computation (fraction-free Bareiss elimination) over the first
series coefficients and verifies the result on held-out terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import hpreal
from .linalg import nullspace, vector_gcd
from .unipoly import UniPoly


class DiscoveryError(Exception):
    """No verified annihilator within the ansatz box, or an ambiguous one."""


class OperatorError(Exception):
    pass


@dataclass(frozen=True)
class DifferentialOperator:
    """Normalized operator sum c[j][k] t^j D^k.

    coeffs[j][k] are integers with overall content 1 and the leading
    coefficient of the top row F_r(t) = sum_j c[j][r] t^j positive.
    """

    order: int
    degree: int
    coeffs: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_coefficients(cls, coeffs) -> "DifferentialOperator":
        rows = [[Fraction(c) for c in row] for row in coeffs]
        degree = len(rows) - 1
        order = len(rows[0]) - 1 if rows else -1
        if any(len(r) != order + 1 for r in rows):
            raise OperatorError("ragged coefficient matrix")
        # Clear denominators, divide by content.
        lcm = 1
        for row in rows:
            for c in row:
                lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [[int(c * lcm) for c in row] for row in rows]
        content = vector_gcd([x for row in ints for x in row])
        if content == 0:
            raise OperatorError("zero operator")
        ints = [[x // content for x in row] for row in ints]
        top = [ints[j][order] for j in range(degree + 1)]
        if not any(top):
            raise OperatorError("top row F_r is identically zero")
        lead = next(x for x in reversed(top) if x)
        if lead < 0:
            ints = [[-x for x in row] for row in ints]
        return cls(order=order, degree=degree,
                   coeffs=tuple(tuple(Fraction(x) for x in row) for row in ints))

    def coefficient_of_dk(self, k: int) -> UniPoly:
        """F_k(t): the polynomial multiplying D^k."""
        return UniPoly(tuple(self.coeffs[j][k] for j in range(self.degree + 1)))

    def to_string(self) -> str:
        parts = []
        for k in range(self.order, -1, -1):
            fk = self.coefficient_of_dk(k)
            if fk.is_zero:
                continue
            dk = "" if k == 0 else ("D" if k == 1 else f"D^{k}")
            body = f"({fk.to_string('t')})"
            parts.append(f"{body}*{dk}" if dk else body)
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class Recurrence:
    """sum_{j=0}^{span} q_j(n) a_{n-j} = 0; q_j are polynomials in n."""

    coefficient_polynomials: tuple[UniPoly, ...]

    @property
    def span(self) -> int:
        return len(self.coefficient_polynomials) - 1

    @property
    def leading(self) -> UniPoly:
        return self.coefficient_polynomials[0]

    def to_strings(self) -> list[str]:
        return [q.to_string("n") for q in self.coefficient_polynomials]


def to_recurrence(op: DifferentialOperator) -> Recurrence:
    """The recurrence induced on series coefficients:
    q_j(n) = sum_k c[j][k] (n - j)^k."""
    polys = []
    for j in range(op.degree + 1):
        q = UniPoly.zero()
        shifted = UniPoly((-j, 1))  # n - j
        power = UniPoly.one()
        for k in range(op.order + 1):
            c = op.coeffs[j][k]
            if c != 0:
                q = q + power * c
            power = power * shifted
        polys.append(q)
    return Recurrence(coefficient_polynomials=tuple(polys))


def operator_from_recurrence(rec: Recurrence) -> DifferentialOperator:
    """Inverse of to_recurrence on normalized representatives:
    c[j][k] = coefficient of m^k in q_j(m + j)."""
    order = max(q.degree for q in rec.coefficient_polynomials)
    rows = []
    for j, q in enumerate(rec.coefficient_polynomials):
        shifted = q.compose_linear(1, j)
        rows.append([shifted.coefficient(k) for k in range(order + 1)])
    return DifferentialOperator.from_coefficients(rows)


def apply_operator(op: DifferentialOperator, series, n_out: int) -> list[Fraction]:
    """Coefficients 0..n_out of op applied to the truncated series."""
    if len(series) < n_out + 1:
        raise OperatorError(
            f"need {n_out + 1} series terms, have {len(series)}")
    values = [Fraction(x) for x in series]
    out = []
    for m in range(n_out + 1):
        total = Fraction(0)
        for j in range(min(op.degree, m) + 1):
            a = values[m - j]
            if a == 0:
                continue
            n = m - j
            npow = 1
            for k in range(op.order + 1):
                c = op.coeffs[j][k]
                if c != 0:
                    total += c * npow * a
                npow *= n
        out.append(total)
    return out


def operator_from_series(series, max_order: int = 4, max_degree: int = 4,
                         verify_margin: int = 8) -> DifferentialOperator:
    """Minimal (order, then degree) operator annihilating the series.

    For each candidate box size, an exact nullspace of the fit equations
    (all but the last verify_margin coefficients) is computed; a candidate
    is accepted only if the nullspace is one-dimensional and the operator
    kills every available coefficient including the held-out ones.
    Candidates needing more fit rows than available are skipped.
    """
    values = [Fraction(x) for x in series]
    n_terms = len(values)
    fit_rows = n_terms - verify_margin
    feasible = False
    for r in range(1, max_order + 1):
        for d in range(0, max_degree + 1):
            unknowns = (r + 1) * (d + 1)
            if fit_rows < unknowns:
                continue
            feasible = True
            matrix = []
            for m in range(fit_rows):
                row = []
                for j in range(d + 1):
                    a = values[m - j] if m >= j else Fraction(0)
                    n = m - j
                    npow = 1
                    for k in range(r + 1):
                        row.append(a * npow)
                        npow *= n
                matrix.append(row)
            basis = nullspace(matrix, unknowns)
            if not basis:
                continue
            if len(basis) > 1:
                raise DiscoveryError(
                    f"ambiguous fit at order {r}, degree {d}: nullspace has "
                    f"dimension {len(basis)}; supply more series terms")
            vec = basis[0]
            rows = [[vec[j * (r + 1) + k] for k in range(r + 1)]
                    for j in range(d + 1)]
            if not any(rows[j][r] for j in range(d + 1)):
                continue
            op = DifferentialOperator.from_coefficients(rows)
            if all(v == 0 for v in apply_operator(op, values, n_terms - 1)):
                return op
    if not feasible:
        raise DiscoveryError(
            f"series too short: {n_terms} terms cannot fit any candidate in "
            f"a {max_order}x{max_degree} box with margin {verify_margin}")
    raise DiscoveryError(
        f"no annihilator within the {max_order}x{max_degree} ansatz box")


def leading_row(op: DifferentialOperator) -> UniPoly:
    """The top row F_r(t) as stored (integer coefficients, content 1)."""
    return op.coefficient_of_dk(op.order)


def _stripped_top_row(op: DifferentialOperator) -> tuple[UniPoly, int]:
    f = op.coefficient_of_dk(op.order)
    coeffs = list(f.coeffs)
    zeros = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zeros += 1
    return UniPoly(tuple(coeffs)), zeros


def symbol(op: DifferentialOperator) -> UniPoly:
    """Monic symbol of the operator, in the chart whose finite nonzero
    singular points are the critical values of the superpotential.

    The series variable t of sum a_n t^n sees singular points at the
    reciprocals of those critical values, so the symbol reported here is the
    monic reversal of the top row F_r(t) (after stripping zero roots of F_r,
    which correspond to extra singularities at infinity). For an operator
    with self-reciprocal top row the two charts agree.
    """
    core, _zeros = _stripped_top_row(op)
    return UniPoly(tuple(reversed(core.coeffs))).monic()


def symbol_infinite_multiplicity(op: DifferentialOperator) -> int:
    """Zero roots of the top row F_r: singular points the critical-value
    chart places at infinity (degenerate cases only)."""
    _core, zeros = _stripped_top_row(op)
    return zeros


# -- singular points ---------------------------------------------------------

@dataclass(frozen=True)
class ExactPoint:
    """p + q * sqrt(d) with rational p, q and squarefree integer d.

    q = 0 encodes a plain rational. d < 0 encodes a complex pair member;
    such points never occur for the shipped catalog."""

    rational: Fraction
    coefficient: Fraction = Fraction(0)
    radicand: int = 1

    @property
    def is_rational(self) -> bool:
        return self.coefficient == 0

    @property
    def is_real(self) -> bool:
        return self.coefficient == 0 or self.radicand > 0

    def conjugate(self) -> "ExactPoint":
        return ExactPoint(self.rational, -self.coefficient, self.radicand)

    def sign(self) -> int:
        """Exact sign of the real value."""
        if not self.is_real:
            raise ValueError("sign of a non-real point")
        p, q = self.rational, self.coefficient
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        lhs = p * p
        rhs = q * q * self.radicand
        if lhs == rhs:
            return 0
        big_is_p = lhs > rhs
        return (1 if p > 0 else -1) if big_is_p else (1 if q > 0 else -1)

    def modulus_squared_surd(self) -> tuple[Fraction, Fraction]:
        """|value|^2 as (s, t) meaning s + t*sqrt(radicand); exact for real
        points. For complex points (radicand < 0), |value|^2 is rational and
        returned as (s, 0)."""
        p, q = self.rational, self.coefficient
        if self.is_real:
            return (p * p + q * q * self.radicand, 2 * p * q)
        return (p * p - q * q * self.radicand, Fraction(0))

    def value_hp(self, digits: int) -> "hpreal.HighPrecisionReal":
        if not self.is_real:
            raise ValueError("numeric value of a non-real point")
        bits = hpreal.bits_for_digits(digits)
        base = hpreal.HighPrecisionReal.from_fraction(self.rational, bits + 8)
        if self.coefficient == 0:
            return base.with_precision(bits)
        root = hpreal.sqrt_int(self.radicand, digits + 4)
        return (base + root * self.coefficient).with_precision(bits)

    def to_json_dict(self) -> dict:
        from .jsonutil import frac_str
        if self.is_rational:
            return {"kind": "rational", "value": frac_str(self.rational)}
        return {"kind": "surd", "rational": frac_str(self.rational),
                "coefficient": frac_str(self.coefficient),
                "radicand": self.radicand}


@dataclass(frozen=True)
class NumericPoint:
    """Numeric real root (fallback for symbols of degree > 2)."""

    value: "hpreal.HighPrecisionReal"
    digits: int

    def to_json_dict(self) -> dict:
        return {"kind": "numeric", "value": self.value.to_decimal(self.digits),
                "digits": self.digits}


@dataclass
class SingularSet:
    """Singular points of the local system: 0, infinity, and the roots of
    the operator symbol (critical-value chart; see :func:`symbol`)."""

    finite_points: tuple
    includes_zero: bool = True
    includes_infinity: bool = True
    extra_infinite_roots: int = 0
    exact: bool = True
    unresolved_complex_pairs: int = 0

    def to_json_dict(self) -> dict:
        return {
            "finite_points": [p.to_json_dict() for p in self.finite_points],
            "includes_zero": self.includes_zero,
            "includes_infinity": self.includes_infinity,
            "extra_infinite_roots": self.extra_infinite_roots,
            "exact": self.exact,
            "unresolved_complex_pairs": self.unresolved_complex_pairs,
        }


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = s^2 * d with d squarefree (sign carried by d). Trial division."""
    if n == 0:
        return 0, 0
    sign = 1 if n > 0 else -1
    n = abs(n)
    s = 1
    d = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n
    return s, sign * d


def singular_points(op: DifferentialOperator,
                    numeric_digits: int = 64) -> SingularSet:
    """Roots of the symbol, plus 0 and infinity.

    Degree <= 2 symbols give exact rational or quadratic-surd roots; higher
    degrees fall back to numeric real roots (Sturm isolation plus Newton
    refinement) and report any complex pairs by count only. The symbol's
    normalization guarantees the finite points are nonzero; degenerate zero
    roots of the top row surface as extra_infinite_roots.
    """
    core = symbol(op)
    zero_mult = symbol_infinite_multiplicity(op)
    deg = core.degree
    if deg <= 0:
        return SingularSet(finite_points=(), extra_infinite_roots=zero_mult)
    if deg == 1:
        root = -core.coefficient(0) / core.coefficient(1)
        return SingularSet(finite_points=(ExactPoint(root),),
                           extra_infinite_roots=zero_mult)
    if deg == 2:
        b = core.coefficient(1) / core.coefficient(2)
        c = core.coefficient(0) / core.coefficient(2)
        disc = b * b - 4 * c
        if disc == 0:
            pt = ExactPoint(-b / 2)
            return SingularSet(finite_points=(pt, pt),
                               extra_infinite_roots=zero_mult)
        inner = disc.numerator * disc.denominator
        s, d = _squarefree_split(inner)
        if d == 1:
            root_half = Fraction(s, disc.denominator)
            pts = (ExactPoint((-b - root_half) / 2),
                   ExactPoint((-b + root_half) / 2))
            return SingularSet(finite_points=pts,
                               extra_infinite_roots=zero_mult)
        coeff = Fraction(s, 2 * disc.denominator)
        pts = (ExactPoint(-b / 2, -coeff, d), ExactPoint(-b / 2, coeff, d))
        return SingularSet(finite_points=pts,
                           extra_infinite_roots=zero_mult)
    roots = _real_roots_numeric(core, numeric_digits)
    pairs = (deg - len(roots)) // 2
    pts = tuple(NumericPoint(value=r, digits=numeric_digits) for r in roots)
    return SingularSet(finite_points=pts, extra_infinite_roots=zero_mult,
                       exact=False, unresolved_complex_pairs=pairs)


def _sturm_chain(p: UniPoly) -> list[UniPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        _, rem = chain[-2].divmod(chain[-1])
        if rem.is_zero:
            break
        chain.append(-rem)
    return [q for q in chain if not q.is_zero]


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _real_roots_numeric(p: UniPoly, digits: int):
    """All real roots, isolated by Sturm bisection and polished by Newton."""
    chain = _sturm_chain(p)
    work = p
    bound = Fraction(1) + max(abs(c) for c in p.coeffs) / abs(p.leading)
    isolated = []
    total = _sign_changes(chain, -bound) - _sign_changes(chain, bound)
    queue = [(-bound, bound, total)]
    while queue:
        lo, hi, count = queue.pop()
        if count == 0:
            continue
        if count == 1:
            isolated.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if work(mid) == 0:
            # Nudge the cut to keep roots interior.
            mid = mid + (hi - lo) / (2 ** 10 + 7)
        left = _sign_changes(chain, lo) - _sign_changes(chain, mid)
        right = count - left
        queue.append((lo, mid, left))
        queue.append((mid, hi, right))
    roots = []
    bits = hpreal.bits_for_digits(digits)
    for lo, hi in sorted(isolated):
        lo, hi = _refine_bisect(work, lo, hi, 64)
        x = hpreal.HighPrecisionReal.from_fraction((lo + hi) / 2, bits + 16)
        deriv = work.derivative()
        for _ in range(2 + int(math.log2(digits + 1)) * 2):
            fx = work(x)
            dx = deriv(x)
            if dx.is_zero():
                break
            x = x - fx / dx
        roots.append(x.with_precision(bits))
    return roots


def _refine_bisect(p: UniPoly, lo: Fraction, hi: Fraction, steps: int):
    flo = p(lo)
    if flo == 0:
        return lo, lo
    for _ in range(steps):
        mid = (lo + hi) / 2
        fm = p(mid)
        if fm == 0:
            return mid, mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


# -- involution ---------------------------------------------------------------

@dataclass
class InvolutionDatum:
    """The map iota(t) = M / t exchanging the two finite singular points,
    present exactly when the symbol is quadratic (then M is its constant
    coefficient, the product of the two roots)."""

    exists: bool
    M: Fraction | None

    def to_json_dict(self) -> dict:
        from .jsonutil import frac_str
        return {"exists": self.exists,
                "M": frac_str(self.M) if self.exists else None}


def involution(op: DifferentialOperator) -> InvolutionDatum:
    sym = symbol(op)
    if sym.degree != 2:
        return InvolutionDatum(exists=False, M=None)
    m = sym.coefficient(0)
    pts = singular_points(op).finite_points
    if len(pts) == 2 and all(isinstance(p, ExactPoint) for p in pts):
        prod_rational = (pts[0].rational * pts[1].rational
                         + pts[0].coefficient * pts[1].coefficient
                         * pts[0].radicand)
        prod_surd = (pts[0].rational * pts[1].coefficient
                     + pts[0].coefficient * pts[1].rational)
        if prod_rational != m or prod_surd != 0:
            raise OperatorError("root product does not match the symbol")
    return InvolutionDatum(exists=True, M=m)
