"""Exact rank and nullity of integer matrices.

Fraction-free (Bareiss) elimination over Python's arbitrary-precision
integers: every update ``(pivot*a - b*c) / previous_pivot`` divides
exactly because the intermediate entries are minors of the input, so no
rationals ever appear and the result is the true rank over the
rationals.  Rows are pivoted by first nonzero entry; columns with no
remaining nonzero entry are skipped and counted towards the nullity.

For an integer matrix A and an integer eigenvalue candidate lam, the
nullity of A - lam*I is exactly the multiplicity of lam, which is what
the spectral checks use this module for.
"""

from __future__ import annotations

import numpy as np

__all__ = ["integer_rank", "integer_nullity"]


def _to_int_rows(matrix) -> list[list[int]]:
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2:
            raise ValueError(f"expected a 2-d matrix, got ndim={matrix.ndim}")
        if not np.issubdtype(matrix.dtype, np.integer):
            raise ValueError(f"expected an integer matrix, got dtype {matrix.dtype}")
        return [[int(x) for x in row] for row in matrix]
    rows = [[int(x) for x in row] for row in matrix]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("rows have unequal lengths")
    return rows


def integer_rank(matrix) -> int:
    """Rank over the rationals of an integer matrix (ndarray or nested lists)."""
    rows = _to_int_rows(matrix)
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        pivot = rows[r][c]
        row_r = rows[r]
        for i in range(r + 1, n_rows):
            row_i = rows[i]
            factor = row_i[c]
            for j in range(c + 1, n_cols):
                row_i[j] = (pivot * row_i[j] - factor * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        r += 1
        if r == n_rows:
            break
    return r


def integer_nullity(matrix) -> int:
    """Dimension of the rational kernel: column count minus rank."""
    rows = _to_int_rows(matrix)
    n_cols = len(rows[0]) if rows else 0
    return n_cols - integer_rank(rows)
