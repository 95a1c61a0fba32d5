"""Walk matrices and two independent walk counters for the path graph A_n.

``walk_matrix`` builds columns by repeated matrix-vector products.
``walk_count_enumerate`` counts +/-1 step sequences that stay inside 1..n by
brute force, and ``walk_count_dp`` propagates a count vector along the path.
"""
from __future__ import annotations

import itertools

from .graphs import adjacency_matrix, divisor_matrix_b1, divisor_matrix_b2, path_graph
from .intmat import IntegerMatrix

ENUMERATION_LIMIT = 24


class EnumerationLimitError(ValueError):
    """Raised when brute-force enumeration is asked for too long a walk."""


def walk_matrix(m: IntegerMatrix) -> IntegerMatrix:
    """``[e, M e, ..., M^(n-1) e]`` with ``e`` the all-ones vector."""
    if not m.is_square:
        raise ValueError(f"walk matrix needs a square matrix, got {m.shape}")
    n = m.rows
    # sparse row view; adjacency and quotient matrices are tridiagonal
    sparse_rows = [[(j, x) for j, x in enumerate(row) if x] for row in m]
    columns = [[1] * n]
    for _ in range(n - 1):
        prev = columns[-1]
        columns.append([sum(x * prev[j] for j, x in row) for row in sparse_rows])
    return IntegerMatrix(zip(*columns))


def path_walk_matrix(n: int) -> IntegerMatrix:
    return walk_matrix(adjacency_matrix(path_graph(n)))


def truncated_walk_matrix(n: int) -> IntegerMatrix:
    """Leading ceil(n/2) x ceil(n/2) block of W(A_n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return path_walk_matrix(n).leading_block((n + 1) // 2)


def quotient_walk_matrix(n: int) -> IntegerMatrix:
    """W(B1) for even n, W(B2) for odd n, both of order ceil(n/2)."""
    r = (n + 1) // 2
    b = divisor_matrix_b1(r) if n % 2 == 0 else divisor_matrix_b2(r)
    return walk_matrix(b)


def _check_args(n: int, i: int, j: int):
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= i <= n:
        raise ValueError(f"start vertex {i} outside 1..{n}")
    if j < 1:
        raise ValueError("column index j must be >= 1")


def walk_count_enumerate(n: int, i: int, j: int, limit: int = ENUMERATION_LIMIT) -> int:
    """Count step sequences of length j-1 from vertex i that never leave 1..n."""
    _check_args(n, i, j)
    steps = j - 1
    if steps > limit:
        raise EnumerationLimitError(
            f"2^{steps} sequences exceeds the enumeration cap of 2^{limit}; "
            "use walk_count_dp"
        )
    count = 0
    for seq in itertools.product((1, -1), repeat=steps):
        pos = i
        for x in seq:
            pos += x
            if pos < 1 or pos > n:
                break
        else:
            count += 1
    return count


def walk_count_dp(n: int, i: int, j: int) -> int:
    _check_args(n, i, j)
    counts = [0] * (n + 2)
    counts[i] = 1
    for _ in range(j - 1):
        # sentinels at 0 and n+1 absorb walks that step off the path
        counts = [0] + [counts[v - 1] + counts[v + 1] for v in range(1, n + 1)] + [0]
    return sum(counts)


def row_difference_reduction(m: IntegerMatrix) -> IntegerMatrix:
    """Apply row_i <- row_i - row_{i-1} for i = last down to 2."""
    rows = m.tolist()
    for i in range(len(rows) - 1, 0, -1):
        rows[i] = [a - b for a, b in zip(rows[i], rows[i - 1])]
    return IntegerMatrix(rows)


def is_unit_upper_triangular(m: IntegerMatrix) -> bool:
    return m.is_square and all(
        m[i, j] == (1 if i == j else 0)
        for i in range(m.rows)
        for j in range(i + 1)
    )
