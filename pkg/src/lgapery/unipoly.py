"""Dense univariate polynomials with exact rational coefficients.

Shared by the lattice-geometry code (edge polynomials), the differential
operator code (operator rows, recurrence coefficients) and the singular point
analysis. Coefficients are stored ascending by degree with no trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def variable(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "UniPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; works for Fraction, int, or any ring element
        supporting * and +."""
        if not self.coeffs:
            return x * 0
        acc = x * 0 + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading
        if self.degree < d:
            return UniPoly(()), self
        quot = [Fraction(0)] * (self.degree - d + 1)
        for k in range(self.degree - d, -1, -1):
            c = rem[k + d] / lead
            quot[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(tuple(quot)), UniPoly(tuple(rem))

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        lead = self.leading
        return UniPoly(tuple(c / lead for c in self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def compose_linear(self, a, b) -> "UniPoly":
        """The polynomial p(a*u + b)."""
        lin = UniPoly((b, a))
        acc = UniPoly(())
        for c in reversed(self.coeffs):
            acc = acc * lin + UniPoly((c,))
        return acc

    def content_normalized(self) -> "UniPoly":
        """Scale to integer coefficients with content 1 and positive leading
        coefficient."""
        if self.is_zero:
            return self
        lcm = 1
        for c in self.coeffs:
            d = c.denominator
            lcm = lcm * d // gcd(lcm, d)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return UniPoly(tuple(ints))

    def reversed_coeffs(self) -> "UniPoly":
        """u^deg * p(1/u)."""
        return UniPoly(tuple(reversed(self.coeffs)))

    def to_string(self, var: str = "t") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = _frac_str(abs(c))
            else:
                mag = abs(c)
                vk = var if k == 1 else f"{var}^{k}"
                body = vk if mag == 1 else f"{_frac_str(mag)}*{vk}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self.to_string()!r})"


def _coerce(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to UniPoly")


def _frac_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"
