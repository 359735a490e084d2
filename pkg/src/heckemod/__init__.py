"""Exact Hecke operator characteristic polynomials on level-1 cusp
spaces, their factorizations modulo primes, the periodic root tables
those factorizations fall into, trace-formula cross checks, and
Galois-theoretic irreducibility certificates."""

from .cache import CharpolyCache, cached_charpoly
from .errors import (
    ComputationError,
    FalsificationError,
    InsufficientPrecision,
    Lemma1Violation,
    NonIntegralTrace,
    PeriodNotFound,
    RootNestingViolation,
    SplittingViolation,
)
from .galois import (
    Certificate,
    CycleType,
    NotFound,
    SquarefreeFailure,
    certify_full_symmetric,
    certify_irreducible,
    corollary_conclusion,
    cycle_type,
    deduce,
    prop2_shape_filter,
    remark_rule,
    residues_qualify,
    theorem1_conclusion,
)
from .gfpoly import FactorMultiset, FpPoly, factor, poly_str, reduce_mod, roots
from .hecke import IntPoly, charpoly, dim_cusp, hecke_matrix, monomial_basis
from .modfactor import (
    charpoly_mod,
    congruence_class_invariance,
    lemma1_check,
    quotient_sequence,
    root_sequence,
    serre_classification_check,
    serre_eigenvalue_set,
    small_ell_rule,
    table_rows,
)
from .qseries import QExpansion, delta, eisenstein4, eisenstein6
from .traceformula import hurwitz_class_number, trace

__version__ = "0.1.0"

__all__ = [
    "CharpolyCache",
    "Certificate",
    "ComputationError",
    "CycleType",
    "FactorMultiset",
    "FalsificationError",
    "FpPoly",
    "InsufficientPrecision",
    "IntPoly",
    "Lemma1Violation",
    "NonIntegralTrace",
    "NotFound",
    "PeriodNotFound",
    "QExpansion",
    "RootNestingViolation",
    "SplittingViolation",
    "SquarefreeFailure",
    "cached_charpoly",
    "certify_full_symmetric",
    "certify_irreducible",
    "charpoly",
    "charpoly_mod",
    "congruence_class_invariance",
    "corollary_conclusion",
    "cycle_type",
    "deduce",
    "delta",
    "dim_cusp",
    "eisenstein4",
    "eisenstein6",
    "factor",
    "hecke_matrix",
    "hurwitz_class_number",
    "lemma1_check",
    "monomial_basis",
    "poly_str",
    "prop2_shape_filter",
    "quotient_sequence",
    "reduce_mod",
    "remark_rule",
    "residues_qualify",
    "root_sequence",
    "roots",
    "serre_classification_check",
    "serre_eigenvalue_set",
    "small_ell_rule",
    "table_rows",
    "theorem1_conclusion",
    "trace",
]
