"""Fraction-free exact linear algebra for small dense rational systems.

Rows are cleared of denominators and eliminated Bareiss-style so every
intermediate value is an integer (exact division at each step).  Pivots are
chosen by the first-nonzero rule; the systems solved here are at most 32x32
with small integer entries, so no further pivoting is needed.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from serencube.ratpoly import RationalLike


class SingularMatrixError(ValueError):
    """Raised when elimination meets a structurally singular matrix."""


def _integer_rows(
    rows: Sequence[Sequence[RationalLike]],
) -> tuple[list[list[int]], list[Fraction]]:
    """Scale each row to integers; return rows and the per-row scale factors."""
    out = []
    scales = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        m = lcm(*(v.denominator for v in fr)) if fr else 1
        out.append([int(v * m) for v in fr])
        scales.append(Fraction(m))
    return out, scales


def _bareiss_triangularize(m: list[list[int]]) -> tuple[list[list[int]], int, list[int]]:
    """In-place fraction-free triangularization.

    Returns (matrix, sign, pivot_rows) where sign tracks row swaps and
    pivot_rows lists the pivot row used for each eliminated column.
    Raises SingularMatrixError when no pivot exists for some column of the
    leading square block.
    """
    nrows = len(m)
    ncols = len(m[0])
    nsquare = min(nrows, ncols)
    sign = 1
    prev = 1
    pivots = []
    for k in range(nsquare):
        piv = next((i for i in range(k, nrows) if m[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError(f"no pivot in column {k}")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivots.append(k)
        for i in range(k + 1, nrows):
            row_i, row_k = m[i], m[k]
            mik = row_i[k]
            mkk = row_k[k]
            for j in range(k + 1, ncols):
                row_i[j] = (row_i[j] * mkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = m[k][k]
    return m, sign, pivots


def determinant(matrix: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    rows, scales = _integer_rows(matrix)
    try:
        tri, sign, _ = _bareiss_triangularize(rows)
    except SingularMatrixError:
        return Fraction(0)
    det = Fraction(sign * tri[n - 1][n - 1])
    for s in scales:
        det /= s
    return det


def is_invertible(matrix: Sequence[Sequence[RationalLike]]) -> bool:
    return determinant(matrix) != 0


def solve_fraction_free(
    lhs: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]
) -> list[Fraction]:
    """Exact solution of a square system; lhs @ x == rhs holds exactly.

    Raises SingularMatrixError for a singular left-hand side.
    """
    n = len(lhs)
    if any(len(row) != n for row in lhs):
        raise ValueError("lhs must be square")
    if len(rhs) != n:
        raise ValueError(f"rhs length {len(rhs)} != system size {n}")
    aug = [list(row) + [rhs[i]] for i, row in enumerate(lhs)]
    rows, _ = _integer_rows(aug)
    tri, _, _ = _bareiss_triangularize(rows)
    # Back substitution over exact rationals.
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(tri[i][n])
        for j in range(i + 1, n):
            acc -= tri[i][j] * x[j]
        if tri[i][i] == 0:
            raise SingularMatrixError(f"zero pivot in row {i}")
        x[i] = acc / tri[i][i]
    return x
