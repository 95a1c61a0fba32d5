"""Equitable partitions, characteristic matrices and quotient matrices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, adjacency_matrix
from .intmat import IntegerMatrix, rank


class NotEquitableError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """Ordered cells over the vertex set 1..n. Cell order fixes matrix order."""

    cells: tuple[frozenset[int], ...]

    def __init__(self, cells: Iterable[Iterable[int]]):
        cells = tuple(frozenset(int(v) for v in c) for c in cells)
        if not cells or any(not c for c in cells):
            raise ValueError("partition cells must be non-empty")
        seen: set[int] = set()
        for c in cells:
            if seen & c:
                raise ValueError(f"cells overlap on {sorted(seen & c)}")
            seen |= c
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError("cells must cover exactly the vertices 1..n")
        object.__setattr__(self, "cells", cells)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def cell_of(self) -> dict[int, int]:
        """Vertex -> 0-based cell index."""
        return {v: k for k, c in enumerate(self.cells) for v in c}

    def as_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.cells]


def discrete_partition(n: int) -> Partition:
    return Partition([v] for v in range(1, n + 1))


def symmetric_partition(n: int) -> Partition:
    """Mirror partition of A_n: {1,n}, {2,n-1}, ..., plus {(n+1)/2} for odd n."""
    if n < 1:
        raise ValueError("n must be positive")
    r = (n + 1) // 2
    return Partition({k, n + 1 - k} for k in range(1, r + 1))


def _check_vertex_set(g: Graph, p: Partition):
    if p.n != g.n:
        raise ValueError(f"partition covers {p.n} vertices, graph has {g.n}")


def _neighbor_counts(g: Graph, p: Partition) -> list[list[int]]:
    where = p.cell_of()
    counts = [[0] * len(p) for _ in range(g.n)]
    for i, j in g.edges:
        counts[i - 1][where[j]] += 1
        counts[j - 1][where[i]] += 1
    return counts


def is_equitable(g: Graph, p: Partition) -> bool:
    _check_vertex_set(g, p)
    counts = _neighbor_counts(g, p)
    for cell in p.cells:
        profiles = {tuple(counts[v - 1]) for v in cell}
        if len(profiles) > 1:
            return False
    return True


def characteristic_matrix(p: Partition) -> IntegerMatrix:
    """n x r incidence matrix of vertices against cells."""
    where = p.cell_of()
    return IntegerMatrix(
        [[int(where[v] == k) for k in range(len(p))] for v in range(1, p.n + 1)]
    )


def quotient_matrix(g: Graph, p: Partition) -> IntegerMatrix:
    """Divisor matrix: entry (i, j) counts neighbours in cell j of a vertex of cell i."""
    _check_vertex_set(g, p)
    if not is_equitable(g, p):
        raise NotEquitableError("partition is not equitable for this graph")
    counts = _neighbor_counts(g, p)
    return IntegerMatrix([counts[min(cell) - 1] for cell in p.cells])


def rank_bound_holds(g: Graph, p: Partition) -> bool:
    """Whether rank W(G) is at most the number of cells of ``p``."""
    from .walk import walk_matrix

    if not is_equitable(g, p):
        raise NotEquitableError("partition is not equitable for this graph")
    return rank(walk_matrix(adjacency_matrix(g))) <= len(p)
