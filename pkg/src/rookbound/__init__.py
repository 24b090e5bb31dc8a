"""Exact combinatorics of Ferrers-diagram matrix spaces.

The package computes, verifies, and enumerates the objects attached to
spaces of matrices supported on a Ferrers diagram in which every
nonzero matrix has rank at least d: the deletion bound kappa, q-rook
polynomials and their trailing degrees, rank censuses over finite
fields, MDS-constructibility tests, explicit Reed-Solomon diagonal
constructions, non-constructive existence bounds, density regimes, and
Catalan-type counting formulas.  Everything is exact integer
arithmetic; randomized estimation is seeded and reproducible.
"""

from .arith import (
    NEG_INFINITY,
    ExtendedInt,
    IntPolynomial,
    NegInfinity,
    binomial,
    catalan,
    poly_trailing_degree,
    q_binomial,
    q_binomial_eval,
)
from .bounds import (
    DensityClass,
    EquivalenceReport,
    KappaReport,
    MdsVerdict,
    check_equivalences,
    classify_density,
    existence_lower_bound,
    kappa,
    mc_density_exponent,
    mc_upper_bound,
    mds_constructible,
)
from .construction import (
    ConstructedSpace,
    RSCode,
    VerifyReport,
    build_space,
    optimality_check,
    rs_code,
    space_from_json,
    space_to_json,
    verify_space,
)
from .counting import (
    ChainReport,
    CountComparison,
    chain_check,
    charmds2,
    count_mds2,
    count_mds3_square,
)
from .diagrams import (
    DiagonalProfile,
    FerrersDiagram,
    LatticePath,
    diagonal_profile,
    enumerate_diagrams,
    from_path,
    is_generalized_dyck,
    parse_diagram,
    to_path,
    transpose,
)
from .errors import BudgetExceeded, HypothesisViolation
from .gfmatrix import (
    DensityEstimate,
    FieldTable,
    RankCensus,
    SupportedMatrix,
    ball_size,
    ball_size_polynomial,
    brute_force_census,
    census_polynomial,
    degree_recursion_check,
    estimate_density,
    field_table,
    is_prime_power,
    matrix_rank,
    min_rank,
    sample_subspace,
)
from .rooks import (
    diagonal_surplus,
    enumerate_placements,
    inv,
    placement_count,
    rook_polynomial,
    tau_closed_form,
    tau_via_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "NEG_INFINITY",
    "BudgetExceeded",
    "ChainReport",
    "ConstructedSpace",
    "CountComparison",
    "DensityClass",
    "DensityEstimate",
    "DiagonalProfile",
    "EquivalenceReport",
    "ExtendedInt",
    "FerrersDiagram",
    "FieldTable",
    "HypothesisViolation",
    "IntPolynomial",
    "KappaReport",
    "LatticePath",
    "MdsVerdict",
    "NegInfinity",
    "RSCode",
    "RankCensus",
    "SupportedMatrix",
    "VerifyReport",
    "ball_size",
    "ball_size_polynomial",
    "binomial",
    "brute_force_census",
    "build_space",
    "catalan",
    "census_polynomial",
    "chain_check",
    "charmds2",
    "check_equivalences",
    "classify_density",
    "count_mds2",
    "count_mds3_square",
    "degree_recursion_check",
    "diagonal_profile",
    "diagonal_surplus",
    "enumerate_diagrams",
    "enumerate_placements",
    "estimate_density",
    "existence_lower_bound",
    "field_table",
    "from_path",
    "inv",
    "is_generalized_dyck",
    "is_prime_power",
    "kappa",
    "matrix_rank",
    "mc_density_exponent",
    "mc_upper_bound",
    "mds_constructible",
    "min_rank",
    "optimality_check",
    "parse_diagram",
    "placement_count",
    "poly_trailing_degree",
    "q_binomial",
    "q_binomial_eval",
    "rook_polynomial",
    "rs_code",
    "sample_subspace",
    "space_from_json",
    "space_to_json",
    "tau_closed_form",
    "tau_via_polynomial",
    "to_path",
    "transpose",
    "verify_space",
]
