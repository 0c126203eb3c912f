"""Helpers for the JSON report formats.

Integers that fit in 64 bits are emitted as JSON numbers; anything larger
becomes a decimal string so consumers never lose precision. Rationals are
"p" or "p/q" strings.
"""

from __future__ import annotations

from fractions import Fraction

_I64_MAX = 2**63 - 1
_I64_MIN = -(2**63)


def encode_int(n: int):
    if _I64_MIN <= n <= _I64_MAX:
        return int(n)
    return str(n)


def frac_str(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
