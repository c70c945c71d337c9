"""Dense GF(2) linear algebra on numpy uint8 matrices (XOR row operations)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def to_gf2(matrix) -> np.ndarray:
    arr = np.asarray(matrix, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return (arr % 2).astype(np.uint8)


@dataclass(frozen=True)
class RowReduceResult:
    matrix: np.ndarray
    rank: int
    pivots: tuple[int, ...]


def gf2_row_reduce(matrix) -> RowReduceResult:
    """Reduced row-echelon form over GF(2)."""
    mat = to_gf2(matrix).copy()
    m, n = mat.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nonzero = np.nonzero(mat[row:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = row + int(nonzero[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        hits = np.nonzero(mat[:, col])[0]
        for r in hits:
            if r != row:
                mat[r, :] ^= mat[row, :]
        pivots.append(col)
        row += 1
    return RowReduceResult(matrix=mat, rank=len(pivots), pivots=tuple(pivots))


def gf2_rank(matrix) -> int:
    if np.asarray(matrix).size == 0:
        return 0
    return gf2_row_reduce(matrix).rank


def gf2_nullspace(matrix) -> np.ndarray:
    """Rows form a basis of {x : matrix @ x = 0 (mod 2)}; shape (0, n) for a trivial kernel."""
    reduced = gf2_row_reduce(matrix)
    mat = reduced.matrix
    n = mat.shape[1]
    pivots = set(reduced.pivots)
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        vec = np.zeros(n, dtype=np.uint8)
        vec[free] = 1
        for row, col in enumerate(reduced.pivots):
            if mat[row, free]:
                vec[col] = 1
        basis.append(vec)
    if not basis:
        return np.zeros((0, n), dtype=np.uint8)
    return np.vstack(basis)


def gf2_solve_consistent(matrix, vector) -> bool:
    """True iff matrix @ x = vector has a solution over GF(2)."""
    mat = to_gf2(matrix)
    vec = to_gf2(vector).reshape(-1, 1)
    if mat.shape[0] != vec.shape[0]:
        raise ValueError(f"shape mismatch: {mat.shape} vs {vec.shape}")
    return gf2_rank(mat) == gf2_rank(np.concatenate([mat, vec], axis=1))
