"""Exact pseudomodel counting and decisions for CNF formulas via imbalance blocks."""
from .blocks import BlockDecomposition, GroundState, decompose, ground_assignment
from .bounds import (
    XUnsatCertificate,
    count_pseudomodels,
    enumerate_flip_vectors,
    hardness_report,
    partition_asymptotic,
    partition_count_exact,
    sat_bound,
    single_block_bound,
)
from .decide import (
    CandidateBudgetExceeded,
    PartitionSpec,
    SpecError,
    Verdict,
    count_xsat_models,
    decide_part_sat,
    decide_sat,
    decide_xsat,
    enumerate_pseudomodels,
    target_sigma,
)
from .formula import (
    DimacsError,
    Formula,
    FormulaError,
    OccurrenceProfile,
    clause_true_counts,
    occurrence_profile,
    parse_dimacs,
    sigma,
    to_dimacs,
)

__version__ = "0.1.0"
