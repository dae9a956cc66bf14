"""Quadratic-form test statistics for linear hypotheses ``H theta = y``.

The Wald-type statistic (and its diagonal-kernel modification) is invariant
under the choice of hypothesis matrix: any two consistent systems with the
same solution set yield the same value, so the cheapest encoding can be used.
The ANOVA-type statistic is not invariant; the safe reductions are dropping
zero rows and collapsing pairwise parallel rows with a square-root weight.
This package computes the statistics, decides solution-set equivalence,
produces canonical and reduced hypothesis forms, and times the computational
payoff of minimal hypothesis matrices.
"""

from .bench import (
    BenchConfig,
    BenchReport,
    BenchRow,
    build_setting_a,
    build_setting_b,
    emit_report,
    run_benchmark,
    sample_compound_symmetry_normal,
)
from .hypothesis import (
    DependenceClass,
    DependencePartition,
    EquivalenceVerdict,
    InconsistentHypothesisError,
    LinearHypothesis,
    ProjectionForm,
    canonical_form,
    dependence_classes,
    equivalent,
    is_consistent,
    projection_form,
    reduce_for_ats,
)
from .io import (
    format_matrix_csv,
    read_matrix_csv,
    read_vector_csv,
    write_matrix_csv,
    write_vector_csv,
)
from .linalg import (
    DEFAULT_TOLERANCE,
    NumericError,
    Tolerance,
    as_matrix,
    as_vector,
    kron,
    pinv,
    projection,
    rank,
    rref,
    svd,
)
from .statistics import (
    StatisticInput,
    StatisticResult,
    WtsKernel,
    ats,
    ats_standardized,
    diag_selector,
    mats,
    sample_covariance,
    vech_upper,
    wts,
)

__version__ = "0.1.0"

__all__ = [
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "DEFAULT_TOLERANCE",
    "DependenceClass",
    "DependencePartition",
    "EquivalenceVerdict",
    "InconsistentHypothesisError",
    "LinearHypothesis",
    "NumericError",
    "ProjectionForm",
    "StatisticInput",
    "StatisticResult",
    "Tolerance",
    "WtsKernel",
    "as_matrix",
    "as_vector",
    "ats",
    "ats_standardized",
    "build_setting_a",
    "build_setting_b",
    "canonical_form",
    "dependence_classes",
    "diag_selector",
    "emit_report",
    "equivalent",
    "format_matrix_csv",
    "is_consistent",
    "kron",
    "mats",
    "pinv",
    "projection",
    "projection_form",
    "rank",
    "read_matrix_csv",
    "read_vector_csv",
    "reduce_for_ats",
    "rref",
    "run_benchmark",
    "sample_compound_symmetry_normal",
    "sample_covariance",
    "svd",
    "vech_upper",
    "write_matrix_csv",
    "write_vector_csv",
    "wts",
]
