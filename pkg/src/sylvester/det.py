"""Determinants, cofactors, and the row-replacing operators D^(i).

``det`` works on both :class:`SymMatrix` (returning a polynomial) and
:class:`IntMatrix` (returning an int) through one Laplace routine that
memoizes on the set of surviving columns, so an n x n determinant costs
about n * 2**n subproblems instead of n! products.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, InvalidDimension, NotGeneric, NotSquare
from .matrix import IntMatrix, MinorSpec, SymMatrix, minor
from .ring import ONE, ZERO, EntryVar, MultiPoly


def laplace_det(rows, zero, one):
    """Determinant of a square grid by first-row expansion over column subsets.

    ``rows`` is a sequence of equal-length sequences whose entries support
    ``+``, ``-``, ``*`` and truthiness (falsy means zero).  The memo lives
    only for this call.
    """
    n = len(rows)
    if n == 0:
        return one
    memo: dict[tuple[int, ...], object] = {}

    def rec(cols):
        if not cols:
            return one
        hit = memo.get(cols)
        if hit is not None:
            return hit
        row = rows[n - len(cols)]
        total = zero
        for pos, c in enumerate(cols):
            x = row[c]
            if not x:
                continue
            term = x * rec(cols[:pos] + cols[pos + 1:])
            total = total - term if pos & 1 else total + term
        memo[cols] = total
        return total

    return rec(tuple(range(n)))


def det(m):
    """Exact determinant; ``det`` of the 0x0 matrix is 1."""
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.n_rows}x{m.n_cols} matrix")
    if isinstance(m, IntMatrix):
        return laplace_det(m.rows, 0, 1)
    return laplace_det(m.rows, ZERO, ONE)


def _check_position(m, i, j):
    if not m.is_square:
        raise NotSquare(f"{m.n_rows}x{m.n_cols}")
    n = m.n_rows
    if n < 1:
        raise InvalidDimension("cofactors need n >= 1")
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"({i}, {j}) outside {n}x{n}")


def cofactor(m, i: int, j: int):
    """(-1)**(i+j) * det(m with row i and column j deleted)."""
    _check_position(m, i, j)
    d = det(minor(m, MinorSpec.single(i, j)))
    return -d if (i + j) & 1 else d


def cofactor_via_derivative(m: SymMatrix, i: int, j: int) -> MultiPoly:
    """d det(m) / d(entry at (i, j)); needs distinct single-variable entries."""
    _check_position(m, i, j)
    if not isinstance(m, SymMatrix) or not m.is_generic():
        raise NotGeneric("entries must be distinct single variables")
    return det(m).diff(m[i, j].as_variable())


def expand_along_row(m: SymMatrix, i: int) -> MultiPoly:
    """sum_j m[i,j] * cofactor(m, i, j)."""
    total = ZERO
    for j in range(1, m.n_cols + 1):
        total = total + m[i, j] * cofactor(m, i, j)
    return total


def expand_along_col(m: SymMatrix, j: int) -> MultiPoly:
    """sum_i m[i,j] * cofactor(m, i, j)."""
    total = ZERO
    for i in range(1, m.n_rows + 1):
        total = total + m[i, j] * cofactor(m, i, j)
    return total


@dataclass(frozen=True)
class DOperator:
    """D^(i) = sum_j a[n+1,j] * d/da[i,j] for base dimension ``n``.

    The border row is always n+1, so ``n`` is given explicitly rather than
    guessed from a polynomial that may be missing variables.
    """

    target_row: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidDimension(f"n must be >= 1, got {self.n}")
        if not 1 <= self.target_row <= self.n:
            raise IndexOutOfRange(f"target row {self.target_row} outside 1..{self.n}")

    def __call__(self, p: MultiPoly) -> MultiPoly:
        return apply_D(self, p)

    def __str__(self):
        return f"D^({self.target_row})"


def apply_D(op: DOperator, p: MultiPoly) -> MultiPoly:
    """Differentiate along row ``op.target_row`` with border-row coefficients.

    Variables absent from ``p`` contribute nothing, which is what lets the
    same operator act on determinants of minors.
    """
    border = op.n + 1
    total = ZERO
    for j in range(1, op.n + 1):
        d = p.diff(EntryVar(op.target_row, j))
        if d:
            total = total + MultiPoly.var(border, j) * d
    return total


def border_expansion(n: int, base_det: MultiPoly) -> MultiPoly:
    """det of the bordered matrix, from the base determinant alone.

    a[n+1,n+1] * base - sum_i a[i,n+1] * D^(i) base.
    """
    if n < 1:
        raise InvalidDimension(f"n must be >= 1, got {n}")
    total = MultiPoly.var(n + 1, n + 1) * base_det
    for i in range(1, n + 1):
        d = apply_D(DOperator(i, n), base_det)
        if d:
            total = total - MultiPoly.var(i, n + 1) * d
    return total
