"""Exact dense integer matrices and their normal forms.

Entries are plain Python ints, so nothing here ever overflows. Elimination
is fraction-free (Bareiss) for determinant and rank, and the Smith normal
form is computed by unimodular row/column reduction. The determinant-divisor
route (gcd of all k x k minors) is kept as an independent oracle for small
matrices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence


class IntegerMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("_data", "rows", "cols")

    def __init__(self, data: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("ragged rows")
        self._data = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntegerMatrix:
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence[int]) -> IntegerMatrix:
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        return cls([entries[i * cols:(i + 1) * cols] for i in range(rows)])

    @classmethod
    def column(cls, values: Iterable[int]) -> IntegerMatrix:
        return cls([[v] for v in values])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat view."""
        return tuple(x for row in self._data for x in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._data]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(zip(*self._data))

    @property
    def T(self) -> IntegerMatrix:
        return self.transpose()

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntegerMatrix:
        return IntegerMatrix([[self._data[i][j] for j in cols] for i in rows])

    def leading_block(self, k: int) -> IntegerMatrix:
        """Leading k x k principal submatrix."""
        if not 1 <= k <= min(self.shape):
            raise ValueError(f"block order {k} out of range for {self.shape}")
        return IntegerMatrix([row[:k] for row in self._data[:k]])

    def to_numpy(self, dtype=float):
        import numpy as np

        return np.array(self._data, dtype=dtype)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.tolist()!r})"


def mat_mul(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    bt = b.transpose()._data
    return IntegerMatrix(
        [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a._data]
    )


def _bareiss(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free row echelon reduction in place.

    Returns ``(rank, sign)`` where ``sign`` tracks row swaps. For a
    nonsingular square input the last diagonal entry is the determinant
    up to ``sign``.
    """
    m = len(rows)
    n = len(rows[0])
    prev = 1
    sign = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        pivot_row = rows[r]
        p = pivot_row[c]
        for i in range(r + 1, m):
            ri = rows[i]
            a = ri[c]
            for j in range(c + 1, n):
                # exact division: every intermediate is a minor of the input
                ri[j] = (p * ri[j] - a * pivot_row[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r, sign


def determinant(m: IntegerMatrix) -> int:
    if not m.is_square:
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    rows = m.tolist()
    r, sign = _bareiss(rows)
    if r < m.rows:
        return 0
    return sign * rows[-1][-1]


def rank(m: IntegerMatrix) -> int:
    """Rank over the rationals."""
    return _bareiss(m.tolist())[0]


def direct_sum_zero(m: IntegerMatrix, k: int) -> IntegerMatrix:
    """Block-diagonal ``m (+) O_k``."""
    if not m.is_square:
        raise ValueError("direct sum expects a square matrix")
    if k < 0:
        raise ValueError("zero block order must be non-negative")
    n = m.rows
    out = [list(row) + [0] * k for row in m]
    out.extend([0] * (n + k) for _ in range(k))
    return IntegerMatrix(out)


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_t of a matrix, with t its rank."""

    rows: int
    cols: int
    invariant_factors: tuple[int, ...] = field(default=())

    def __post_init__(self):
        d = self.invariant_factors
        if any(x < 1 for x in d):
            raise ValueError("invariant factors must be positive")
        if any(b % a for a, b in zip(d, d[1:])):
            raise ValueError(f"divisibility chain broken: {d}")
        if len(d) > min(self.rows, self.cols):
            raise ValueError("more invariant factors than the matrix allows")

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def diagonal(self) -> IntegerMatrix:
        """The full normal form ``diag(d_1, ..., d_t, 0, ..., 0)``."""
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, d in enumerate(self.invariant_factors):
            out[i][i] = d
        return IntegerMatrix(out)


def _smallest_nonzero(a, t, m, n):
    best = None
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def _move_pivot(a, t, i, j):
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def _nearest_quotient(x: int, p: int) -> int:
    q, rem = divmod(x, p)
    # divmod's remainder has the sign of p; stepping q up flips it to the
    # smaller symmetric residue
    if 2 * abs(rem) > abs(p):
        q += 1
    return q


def smith_diagonal(m: IntegerMatrix) -> tuple[int, ...]:
    """Invariant factors by elementary integer row/column reduction.

    Each stage moves the smallest nonzero entry of the trailing block to the
    pivot, clears its row and column by nearest-quotient subtraction and
    repeats until the pivot divides the whole trailing block.
    """
    a = m.tolist()
    rows, cols = m.shape
    diag = []
    t = 0
    while t < min(rows, cols):
        found = _smallest_nonzero(a, t, rows, cols)
        if found is None:
            break
        _move_pivot(a, t, found[1], found[2])
        while True:
            p = a[t][t]
            pivot_row = a[t]
            for i in range(t + 1, rows):
                x = a[i][t]
                if x:
                    q = _nearest_quotient(x, p)
                    if q:
                        ri = a[i]
                        for j in range(t, cols):
                            ri[j] -= q * pivot_row[j]
            for j in range(t + 1, cols):
                x = pivot_row[j]
                if x:
                    q = _nearest_quotient(x, p)
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
            # a leftover remainder smaller than |p| becomes the next pivot
            best = None
            for i in range(t + 1, rows):
                x = a[i][t]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, t)
            for j in range(t + 1, cols):
                x = pivot_row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), t, j)
            if best is not None:
                _move_pivot(a, t, best[1], best[2])
                continue
            bad = next(
                (i for i in range(t + 1, rows)
                 if any(x % p for x in a[i][t + 1:])),
                None,
            )
            if bad is None:
                break
            # fold the offending row into the pivot row; the next pass
            # produces a remainder that shrinks the pivot
            ri = a[bad]
            for j in range(t, cols):
                pivot_row[j] += ri[j]
        diag.append(abs(a[t][t]))
        t += 1
    return tuple(diag)


def invariant_factors(m: IntegerMatrix) -> SmithForm:
    return SmithForm(m.rows, m.cols, smith_diagonal(m))


def smith_normal_form(m: IntegerMatrix) -> IntegerMatrix:
    return invariant_factors(m).diagonal()


def determinant_divisor(m: IntegerMatrix, k: int) -> int:
    """gcd of all k x k minors; ``D(0) = 1``.

    Enumerates every minor, so only use it on small matrices.
    """
    if not 0 <= k <= min(m.shape):
        raise ValueError(f"k={k} out of range for a {m.rows}x{m.cols} matrix")
    if k == 0:
        return 1
    g = 0
    for rs in itertools.combinations(range(m.rows), k):
        for cs in itertools.combinations(range(m.cols), k):
            g = gcd(g, determinant(m.submatrix(rs, cs)))
            if g == 1:
                return 1
    return g


def invariant_factors_by_minors(m: IntegerMatrix) -> SmithForm:
    """Oracle route: d_k = D(k) / D(k-1) until the first vanishing divisor."""
    factors = []
    prev = 1
    for k in range(1, min(m.shape) + 1):
        dk = determinant_divisor(m, k)
        if dk == 0:
            break
        factors.append(dk // prev)
        prev = dk
    return SmithForm(m.rows, m.cols, tuple(factors))
