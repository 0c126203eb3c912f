"""Exact toolkit for toric Landau-Ginzburg models.

From a Laurent superpotential this package computes the period sequence
(constant terms of powers), discovers the annihilating Picard-Fuchs operator
by exact linear algebra, analyzes its symbol / singular points / involution,
certifies the Minkowski temperedness criterion on the Newton polytope, and
evaluates and recognizes Apery constants as rational multiples of zeta(3) or
pi^3/sqrt(3).
"""

from .apery import (
    AperyPreconditionError,
    AperyResult,
    ConvergenceError,
    SolutionPair,
    SolveError,
    apery_limit,
    limit_error_model,
    solve_pair,
)
from .catalog import CatalogEntry, entries as catalog_entries, get as catalog_get
from .hpreal import (
    HighPrecisionReal,
    QuadratureError,
    RecognizedConstant,
    li,
    pi,
    quad_de,
    recognize,
    sqrt_int,
    v16_membrane_value,
    zeta3,
)
from .laurent import (
    DimensionMismatchError,
    LaurentError,
    LaurentPolynomial,
    ParseError,
    parse,
)
from .periods import (
    PeriodEngine,
    PeriodSequence,
    check_recurrence,
    period_sequence,
    period_sequence_naive,
)
from .pfops import (
    DifferentialOperator,
    DiscoveryError,
    ExactPoint,
    InvolutionDatum,
    OperatorError,
    Recurrence,
    SingularSet,
    apply_operator,
    involution,
    operator_from_recurrence,
    operator_from_series,
    singular_points,
    symbol,
    to_recurrence,
)
from .polytope import (
    Edge,
    Facet,
    FacetFrame,
    GeometryError,
    LatticePolytope,
    TemperednessReport,
    edge_polynomial,
    edges,
    facet_frame,
    facet_polynomial,
    facets,
    has_only_pm1_roots,
    is_reflexive,
    newton_polytope,
    temperedness_check,
)
from .unipoly import UniPoly

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
