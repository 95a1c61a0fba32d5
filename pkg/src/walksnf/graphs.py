"""Simple undirected graphs on vertices 1..n and the path-graph quotients."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .intmat import IntegerMatrix


@dataclass(frozen=True)
class Graph:
    """Simple graph with 1-based vertex labels.

    ``edges`` holds each edge once as a sorted pair ``(i, j)`` with ``i < j``.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        normalized = set()
        for e in edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {{{i}, {j}}} has a vertex outside 1..{n}")
            pair = (min(i, j), max(i, j))
            if pair in normalized:
                raise ValueError(f"repeated edge {pair}")
            normalized.add(pair)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))


def path_graph(n: int) -> Graph:
    """The Dynkin graph A_n: vertices 1..n joined consecutively."""
    if n < 1:
        raise ValueError("path graph needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def adjacency_matrix(g: Graph) -> IntegerMatrix:
    a = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = 1
    return IntegerMatrix(a)


def _tridiagonal(r: int) -> list[list[int]]:
    b = [[0] * r for _ in range(r)]
    for i in range(r - 1):
        b[i][i + 1] = b[i + 1][i] = 1
    return b


def divisor_matrix_b1(r: int) -> IntegerMatrix:
    """Quotient of A_{2r} by the mirror partition {{1,2r}, {2,2r-1}, ...}.

    Tridiagonal with unit off-diagonals and a single 1 in the bottom-right
    corner (the middle pair are neighbours of each other). ``r = 1`` gives
    ``[[1]]``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    b = _tridiagonal(r)
    b[r - 1][r - 1] = 1
    return IntegerMatrix(b)


def divisor_matrix_b2(r: int) -> IntegerMatrix:
    """Quotient of A_{2r-1} by the mirror partition with a middle singleton.

    Entry (r, r-1) is 2 since the middle vertex sees both members of the
    adjacent pair. ``r = 1`` gives ``[[0]]``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    b = _tridiagonal(r)
    if r >= 2:
        b[r - 1][r - 2] = 2
    return IntegerMatrix(b)
