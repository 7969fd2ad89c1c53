"""Logarithmic and Grunsky coefficients of univalent functions.

Truncated power-series arithmetic, Grunsky tables and inequality checks, a
catalog of classical members of S, and the two-variable maximization that
bounds |gamma_3| by sqrt(133)/15.
"""
from .bivariate import BivariateSeries, bivariate_exp, bivariate_log, divided_difference
from .bound import (
    OptimizationResult,
    RegionPoint,
    bound_constant,
    edge_profile,
    exact_edge_identity,
    gradient_residual,
    maximize_psi,
    phi,
    psi,
    region_bounds,
    stationary_points,
)
from .catalog import CATALOG_NAMES, CatalogEntry, catalog_function, default_catalog
from .errors import (
    DivisionBySingularSeries,
    InsufficientTruncation,
    NonUnitConstantTerm,
    OutOfRange,
    ParameterOutOfRange,
    ProvenanceMismatch,
    UnknownCatalogEntry,
)
from .grunsky import (
    GrunskyTable,
    QuadraticForm,
    coefficients_from_grunsky,
    gamma3_from_grunsky,
    grunsky_quadratic,
    grunsky_table,
    odd_grunsky,
    two_term_inequality,
)
from .logcoeffs import LogCoefficientVector, gamma_closed_form, log_coefficients
from .series import (
    NormalizedFunction,
    UnivariateSeries,
    rotate,
    series_arith,
    series_exp,
    series_log,
    series_sqrt,
    sqrt_transform,
    substitute_square,
)
from .verify import VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "bivariate_exp",
    "bivariate_log",
    "BivariateSeries",
    "bound_constant",
    "catalog_function",
    "CATALOG_NAMES",
    "CatalogEntry",
    "coefficients_from_grunsky",
    "default_catalog",
    "divided_difference",
    "DivisionBySingularSeries",
    "edge_profile",
    "exact_edge_identity",
    "gamma3_from_grunsky",
    "gamma_closed_form",
    "gradient_residual",
    "grunsky_quadratic",
    "grunsky_table",
    "GrunskyTable",
    "InsufficientTruncation",
    "log_coefficients",
    "LogCoefficientVector",
    "maximize_psi",
    "NonUnitConstantTerm",
    "NormalizedFunction",
    "odd_grunsky",
    "OptimizationResult",
    "OutOfRange",
    "ParameterOutOfRange",
    "phi",
    "ProvenanceMismatch",
    "psi",
    "QuadraticForm",
    "region_bounds",
    "RegionPoint",
    "rotate",
    "run_verification",
    "series_arith",
    "series_exp",
    "series_log",
    "series_sqrt",
    "sqrt_transform",
    "stationary_points",
    "substitute_square",
    "two_term_inequality",
    "UnivariateSeries",
    "UnknownCatalogEntry",
    "VerificationReport",
]
