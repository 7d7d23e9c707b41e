"""Fraction-free (Bareiss) determinant of integer matrices.

Each elimination step replaces the trailing block by

    a'[r][c] = (a[p][p] * a[r][c] - a[r][p] * a[p][c]) / previous_pivot

and Sylvester's identity on the 2x2 minor guarantees the division is exact.
The remainder is checked on every step anyway; a nonzero remainder raises
:class:`ExactDivisionError` since it can only come from a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ExactDivisionError, NotSquare, PivotBreakdown
from .matrix import IntMatrix

__all__ = ["EliminationTrace", "IntMatrix", "bareiss_det", "bareiss_minors", "exact_div"]


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ExactDivisionError(f"{num} / {den} leaves remainder {r}")
    return q


@dataclass
class EliminationTrace:
    """Record of one elimination.

    ``pivots`` holds ``(step, pivot_row, pivot_value)`` with 1-based step and
    row (the row of the working matrix the pivot came from, before the
    swap).  ``principal_minors[k-1]`` is the k x k leading minor of the
    row-permuted input; the list stops early at the first zero pivot with
    nothing to swap in.  ``snapshots`` (only when requested) holds a copy
    of the working matrix after each step.
    """

    pivots: list[tuple[int, int, int]] = field(default_factory=list)
    sign: int = 1
    principal_minors: list[int] = field(default_factory=list)
    swaps: list[tuple[int, int]] = field(default_factory=list)
    divisions: int = 0
    snapshots: list[list[list[int]]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "pivots": [[s, r, str(v)] for s, r, v in self.pivots],
            "sign": self.sign,
            "swaps": [list(s) for s in self.swaps],
            "principal_minors": [str(d) for d in self.principal_minors],
            "divisions": self.divisions,
        }


def _eliminate(m: IntMatrix, allow_swaps: bool, keep_snapshots: bool = False):
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.n_rows}x{m.n_cols} matrix")
    n = m.n_rows
    a = m.tolist()
    trace = EliminationTrace()
    if n == 0:
        return 1, trace
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            below = next((r for r in range(k + 1, n) if a[r][k]), None)
            if not allow_swaps and k < n - 1:
                raise PivotBreakdown(f"leading {k + 1}x{k + 1} minor is zero; a row swap would be needed")
            if below is None:
                trace.principal_minors.append(0)
                return 0, trace
            a[k], a[below] = a[below], a[k]
            trace.sign = -trace.sign
            trace.swaps.append((k + 1, below + 1))
            pivot_row = below
        else:
            pivot_row = k
        p = a[k][k]
        trace.pivots.append((k + 1, pivot_row + 1, p))
        trace.principal_minors.append(p)
        row_k = a[k]
        for r in range(k + 1, n):
            row_r = a[r]
            arp = row_r[k]
            for c in range(k + 1, n):
                row_r[c] = exact_div(p * row_r[c] - arp * row_k[c], prev)
                trace.divisions += 1
            row_r[k] = 0
        prev = p
        if keep_snapshots:
            trace.snapshots.append([row[:] for row in a])
    return trace.sign * a[n - 1][n - 1], trace


def bareiss_det(m: IntMatrix, *, snapshots: bool = False) -> tuple[int, EliminationTrace]:
    """Exact determinant with first-nonzero-below row pivoting."""
    return _eliminate(m, allow_swaps=True, keep_snapshots=snapshots)


def bareiss_minors(m: IntMatrix) -> list[int]:
    """Leading principal minors d_1..d_n of ``m`` itself (no row swaps)."""
    _, trace = _eliminate(m, allow_swaps=False)
    return trace.principal_minors
