"""Exact walk matrices and Smith normal forms, with checks for the path graph A_n."""
from .graphs import Graph, adjacency_matrix, divisor_matrix_b1, divisor_matrix_b2, path_graph
from .intmat import (
    IntegerMatrix,
    SmithForm,
    determinant,
    determinant_divisor,
    direct_sum_zero,
    invariant_factors,
    invariant_factors_by_minors,
    mat_mul,
    rank,
    smith_normal_form,
)
from .partitions import (
    NotEquitableError,
    Partition,
    characteristic_matrix,
    discrete_partition,
    is_equitable,
    quotient_matrix,
    rank_bound_holds,
    symmetric_partition,
)
from .walk import (
    EnumerationLimitError,
    truncated_walk_matrix,
    walk_count_dp,
    walk_count_enumerate,
    walk_matrix,
)

__version__ = "0.1.0"
