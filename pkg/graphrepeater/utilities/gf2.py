"""Dense GF(2) linear algebra on numpy uint8 arrays."""
from typing import List, Optional, Tuple
import numpy as np


def as_gf2(matrix) -> np.ndarray:
    return (np.asarray(matrix, dtype=np.int64) % 2).astype(np.uint8)

def row_reduce(matrix, n_pivot_cols:Optional[int] = None) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns; pivots are searched in the first n_pivot_cols columns"""
    work = as_gf2(matrix).copy()
    if work.ndim != 2:
        raise ValueError(f'expected a 2D matrix, got shape {work.shape}')
    n_rows, n_cols = work.shape
    pivots: List[int] = []
    row = 0
    for col in range(n_cols if n_pivot_cols is None else n_pivot_cols):
        if row == n_rows:
            break
        candidates = np.nonzero(work[row:, col])[0]
        if len(candidates) == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
        others = np.nonzero(work[:, col])[0]
        others = others[others != row]
        work[others] ^= work[row]
        pivots.append(col)
        row += 1
    return work, pivots

def rank(matrix) -> int:
    return len(row_reduce(matrix)[1])

def nullspace(matrix) -> np.ndarray:
    """Basis (as rows) of {x : matrix @ x = 0}"""
    reduced, pivots = row_reduce(matrix)
    n_cols = reduced.shape[1]
    free = [c for c in range(n_cols) if c not in pivots]
    basis = np.zeros((len(free), n_cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, p in enumerate(pivots):
            basis[i, p] = reduced[r, f]
    return basis

def in_rowspace(vector, matrix) -> bool:
    m = as_gf2(matrix)
    return rank(np.vstack([m, as_gf2(vector)[None, :]])) == rank(m)

def int_to_bits(values:np.ndarray, width:int) -> np.ndarray:
    """Little-endian bit expansion of integers, shape (len(values), width)"""
    values = np.asarray(values, dtype=np.int64)
    return ((values[:, None] >> np.arange(width, dtype=np.int64)) & 1).astype(np.uint8)

def solve_combination(rows, target) -> Optional[np.ndarray]:
    """Coefficients c with c @ rows = target over GF(2), or None when target is outside the row space"""
    rows = as_gf2(rows)
    n_rows, n_cols = rows.shape
    augmented = np.hstack([rows, np.eye(n_rows, dtype=np.uint8)])
    reduced, pivots = row_reduce(augmented, n_pivot_cols=n_cols)
    t = np.concatenate([as_gf2(target), np.zeros(n_rows, dtype=np.uint8)])
    for r, col in enumerate(pivots):
        if t[col]:
            t ^= reduced[r]
    if t[:n_cols].any():
        return None
    return t[n_cols:]
