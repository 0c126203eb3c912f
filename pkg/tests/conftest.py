import random

import pytest

from lgapery import (
    LaurentPolynomial,
    catalog_entries,
    operator_from_series,
    period_sequence,
)

CATALOG_TERMS = 40
DISCOVERY_TERMS = 30


@pytest.fixture(scope="session")
def catalog_periods():
    """40-term period sequences for the four catalog polynomials (computed
    once per session; several modules share them)."""
    return {e.name: period_sequence(e.phi, CATALOG_TERMS)
            for e in catalog_entries()}


@pytest.fixture(scope="session")
def catalog_operators(catalog_periods):
    """Operators discovered from the first 30 period terms."""
    return {name: operator_from_series(seq.values[:DISCOVERY_TERMS + 1], 4, 4, 8)
            for name, seq in catalog_periods.items()}


def random_laurent(rng: random.Random, dimension: int = 3, max_terms: int = 5,
                   span: int = 2) -> LaurentPolynomial:
    """Small random Laurent polynomial with support in [-span, span]^d."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            e = tuple(rng.randint(-span, span) for _ in range(dimension))
            c = rng.randint(-4, 4)
            if c:
                terms[e] = terms.get(e, 0) + c
        p = LaurentPolynomial(dimension, terms)
        if not p.is_zero():
            return p
