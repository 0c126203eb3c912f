"""Built-in catalog of the four Landau-Ginzburg superpotentials.

Each entry carries the verbatim product form of the Minkowski polynomial,
together with the expected symbol, involution constant and recognition basis
used for validation and reporting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hpreal import BASIS_PI3_OVER_SQRT3, BASIS_ZETA3
from .laurent import LaurentPolynomial, parse
from .unipoly import UniPoly


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    phi_text: str
    phi: LaurentPolynomial
    expected_symbol: UniPoly
    expected_M: Fraction
    expected_basis: str


def _entry(name, text, symbol_coeffs, m, basis) -> CatalogEntry:
    return CatalogEntry(
        name=name,
        phi_text=text,
        phi=parse(text),
        expected_symbol=UniPoly(symbol_coeffs),
        expected_M=Fraction(m),
        expected_basis=basis,
    )


_ENTRIES: tuple[CatalogEntry, ...] = (
    _entry("V12", "(1+x+z)*(1+x+y+z)*(1+z)*(y+z)/(x*y*z)",
           (1, -34, 1), 1, BASIS_ZETA3),
    _entry("V16", "(1+x+y+z)*(1+z)*(1+y)*(1+x)/(x*y*z)",
           (16, -24, 1), 16, BASIS_ZETA3),
    _entry("V18", "(x+y+z)*(x+y+z+x*y+x*z+y*z+x*y*z)/(x*y*z)",
           (-27, -18, 1), -27, BASIS_PI3_OVER_SQRT3),
    _entry("R1", "(1+x+y+z)*(x*y*z+x*y+x*z+y*z)/(x*y*z)",
           (64, -20, 1), 64, BASIS_ZETA3),
)


def entries() -> tuple[CatalogEntry, ...]:
    return _ENTRIES


def get(name: str) -> CatalogEntry | None:
    wanted = name.strip().upper()
    for entry in _ENTRIES:
        if entry.name.upper() == wanted:
            return entry
    return None


def validate() -> None:
    """Structural startup validation; raises on any inconsistency."""
    if len(_ENTRIES) != 4:
        raise AssertionError("catalog must have exactly four entries")
    for entry in _ENTRIES:
        if entry.phi.is_zero() or entry.phi.dimension != 3:
            raise AssertionError(f"{entry.name}: bad polynomial")
        if entry.phi != parse(entry.phi.to_text()):
            raise AssertionError(f"{entry.name}: text round trip failed")
        if entry.expected_symbol.degree != 2 or entry.expected_symbol.leading != 1:
            raise AssertionError(f"{entry.name}: expected symbol must be monic quadratic")
        if entry.expected_symbol.coefficient(0) != entry.expected_M:
            raise AssertionError(f"{entry.name}: M must be the symbol's constant term")
