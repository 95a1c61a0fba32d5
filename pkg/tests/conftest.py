import itertools
from fractions import Fraction

import pytest

from walksnf import IntegerMatrix

# W(A_3) and W(A_10) as printed in the source example
W_A3 = [[1, 1, 2], [1, 2, 2], [1, 1, 2]]
W_A10 = [
    [1, 1, 2, 3, 6, 10, 20, 35, 70, 126],
    [1, 2, 3, 6, 10, 20, 35, 70, 126, 251],
    [1, 2, 4, 7, 14, 25, 50, 91, 181, 334],
    [1, 2, 4, 8, 15, 30, 56, 111, 208, 409],
    [1, 2, 4, 8, 16, 31, 61, 117, 228, 436],
    [1, 2, 4, 8, 16, 31, 61, 117, 228, 436],
    [1, 2, 4, 8, 15, 30, 56, 111, 208, 409],
    [1, 2, 4, 7, 14, 25, 50, 91, 181, 334],
    [1, 2, 3, 6, 10, 20, 35, 70, 126, 251],
    [1, 1, 2, 3, 6, 10, 20, 35, 70, 126],
]
W_BAR_A10 = [
    [1, 1, 2, 3, 6],
    [1, 2, 3, 6, 10],
    [1, 2, 4, 7, 14],
    [1, 2, 4, 8, 15],
    [1, 2, 4, 8, 16],
]


def leibniz_det(rows):
    """Permutation-expansion determinant; independent of any elimination."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total


def fraction_rank(rows):
    """Rank by Gauss-Jordan over Fraction."""
    a = [[Fraction(x) for x in row] for row in rows]
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


@pytest.fixture
def w_a10():
    return IntegerMatrix(W_A10)
