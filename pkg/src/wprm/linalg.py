"""Gaussian elimination over GF(q) on matrices of element encodings."""

from __future__ import annotations

import numpy as np

from .field import GF


def row_reduce(field: GF, matrix) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Zero rows are dropped, so the result has ``len(pivots)`` rows.
    """
    M = np.array(matrix, dtype=np.int64, copy=True)
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            M[[r, p]] = M[[p, r]]
        M[r] = field.mul_arr(M[r], field.inv_arr(M[r, c]))
        factors = M[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            M[hit] = field.sub_arr(M[hit], field.mul_arr(factors[hit, None], M[r][None, :]))
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(field: GF, matrix) -> int:
    M = np.asarray(matrix)
    if M.size == 0:
        return 0
    return len(row_reduce(field, M)[1])
