"""Solow-Polasky diversity on ordered one-dimensional data.

Gap-sum and matrix evaluation, exact fixed-cardinality selection by dynamic
programming, reduction of ordered l1 curves / biobjective fronts to the line,
and numerical checks of the exponential-kernel characterization.
"""

from .characterization import (
    AdditivityReport,
    additivity_residual,
    cauchy_linearity_check,
    certify_kernel,
    factorization_residual,
    fit_beta_from_unit_value,
    second_branch_gap,
)
from .diversity import (
    DiversityValue,
    GapVector,
    LineInstance,
    build_similarity_matrix,
    diversity_gap_sum,
    diversity_matrix,
    three_point_excess,
    two_point_excess,
)
from .dp import DpTable, Selection, brute_force, solve, solve_with_table, state_transition_counts
from .errors import (
    ArgumentError,
    DegenerateTriple,
    DomainError,
    DuplicateCollapsed,
    GoldenMismatch,
    InstanceTooLarge,
    NotOrdered,
    ParseError,
    SingularMatrix,
)
from .kernels import KernelFunction
from .l1 import (
    OrderedCurveSample,
    ScalarReduction,
    detect_signs,
    generate_parabola_front,
    generate_zdt3_front,
    reduce,
)
from .line_optimal import (
    ContinuousOptimum,
    gap_contribution,
    gap_contribution_second_derivative,
    jensen_certificate,
    uniform_optimum,
)

__version__ = "0.1.0"
