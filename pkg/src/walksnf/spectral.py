"""Closed-form eigenpairs of the transposed quotient matrices, in floating point.

For the quotient ``B1`` of order r the eigenvalues of ``B1^T`` are
``-2 cos(2k pi / (2r+1))``; for ``B2`` they are ``2 cos((2k-1) pi / (2r))``,
k = 1..r. The eigenvectors are sums of cosines (see the two constructors).
Combined with the eigenvector expression for ``det W(M)`` these reproduce the
exact walk-matrix determinants computed in :mod:`walksnf.intmat`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import divisor_matrix_b1, divisor_matrix_b2
from .intmat import IntegerMatrix

PROJECTION_TOL = 1e-8
EIGENVALUE_GAP = 1e-6
FAMILIES = ("B1", "B2")


@dataclass(frozen=True)
class EigenPair:
    eigenvalue: float
    eigenvector: np.ndarray

    def residual(self, m: IntegerMatrix) -> float:
        """``max |M^T v - lambda v|``."""
        v = self.eigenvector
        return float(np.max(np.abs(m.to_numpy().T @ v - self.eigenvalue * v)))


def _check_index(r: int, k: int):
    if r < 1:
        raise ValueError("r must be positive")
    if not 1 <= k <= r:
        raise ValueError(f"k={k} outside 1..{r}")


def eigenpair_b1(r: int, k: int) -> EigenPair:
    """k-th eigenpair of ``B1^T`` of order r.

    Entry s < r of the eigenvector is
    ``(-1)^(r-s) * (1 + 2 sum_{i=1}^{r-s} cos(i alpha))``, the last entry is 1.
    """
    _check_index(r, k)
    alpha = 2 * k * np.pi / (2 * r + 1)
    # partial[m] = 1 + 2 sum_{i=1}^{m} cos(i alpha)
    partial = 1 + 2 * np.concatenate(([0.0], np.cumsum(np.cos(alpha * np.arange(1, r)))))
    depth = np.arange(r - 1, -1, -1)
    v = (-1.0) ** depth * partial[depth]
    return EigenPair(-2 * np.cos(alpha), v)


def eigenpair_b2(r: int, k: int) -> EigenPair:
    """k-th eigenpair of ``B2^T``: ``w = (2cos((r-1)b), ..., 2cos(b), 1)``."""
    _check_index(r, k)
    beta = (2 * k - 1) * np.pi / (2 * r)
    depth = np.arange(r - 1, -1, -1)
    w = np.where(depth == 0, 1.0, 2 * np.cos(depth * beta))
    return EigenPair(2 * np.cos(beta), w)


def divisor_matrix(family: str, r: int) -> IntegerMatrix:
    return {"B1": divisor_matrix_b1, "B2": divisor_matrix_b2}[_family(family)](r)


def eigenpairs(family: str, r: int) -> list[EigenPair]:
    make = {"B1": eigenpair_b1, "B2": eigenpair_b2}[_family(family)]
    return [make(r, k) for k in range(1, r + 1)]


def _family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    return family


def allones_projection_product(r: int, family: str) -> float:
    """Product over k of the entry sums of the k-th eigenvector."""
    if r < 1:
        raise ValueError("r must be positive")
    return float(np.prod([p.eigenvector.sum() for p in eigenpairs(family, r)]))


def cos_vandermonde_matrix(thetas: Sequence[float]) -> np.ndarray:
    """Rows ``1, 2cos(theta), 2cos(2 theta), ..., 2cos((q-1) theta)``."""
    thetas = np.asarray(thetas, dtype=float)
    q = len(thetas)
    mat = 2 * np.cos(np.outer(np.arange(q), thetas))
    mat[0] = 1.0
    return mat


def cos_vandermonde_det(thetas: Sequence[float]) -> float:
    if len(thetas) < 1:
        raise ValueError("need at least one angle")
    return float(np.linalg.det(cos_vandermonde_matrix(thetas)))


def cos_vandermonde_product(thetas: Sequence[float]) -> float:
    """``prod_{j < i} (2cos(theta_i) - 2cos(theta_j))``."""
    c = 2 * np.cos(np.asarray(thetas, dtype=float))
    q = len(c)
    return float(np.prod([c[i] - c[j] for i in range(q) for j in range(i)]))


def min_eigenvalue_gap(pairs: Sequence[EigenPair]) -> float:
    lam = np.sort([p.eigenvalue for p in pairs])
    return float(np.min(np.diff(lam))) if len(lam) > 1 else np.inf


def walk_det_formula(m: IntegerMatrix, pairs: Sequence[EigenPair]) -> tuple[float, int]:
    """det W(M) from an eigenbasis of ``M^T``, and the nonzero-projection count.

    The value is ``prod_{k<j}(lambda_j - lambda_k) * prod_j sum(xi_j) /
    det[xi_1 ... xi_q]``. The count of eigenvectors whose entry sum is
    nonzero equals rank W(M) when the eigenvalues are distinct; the count is
    only reported when the eigenvalue gap exceeds ``EIGENVALUE_GAP``.
    """
    q = m.rows
    if not m.is_square or len(pairs) != q:
        raise ValueError(f"need {m.rows} eigenpairs for a square matrix of order {q}")
    xi = np.column_stack([p.eigenvector for p in pairs])
    lam = np.array([p.eigenvalue for p in pairs])
    basis_det = np.linalg.det(xi)
    if basis_det == 0 or not np.isfinite(np.linalg.cond(xi)) or np.linalg.cond(xi) > 1e12:
        raise np.linalg.LinAlgError("eigenvector matrix is numerically singular")
    if min_eigenvalue_gap(pairs) <= EIGENVALUE_GAP:
        raise ValueError("eigenvalues are not numerically distinct; rank count untrusted")
    diffs = np.prod([lam[j] - lam[k] for j in range(q) for k in range(j)])
    sums = xi.sum(axis=0)
    value = float(diffs * np.prod(sums) / basis_det)
    scale = np.max(np.abs(xi), axis=0)
    count = int(np.sum(np.abs(sums) > PROJECTION_TOL * scale))
    return value, count
