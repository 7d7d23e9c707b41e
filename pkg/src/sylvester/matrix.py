"""Symbolic and integer matrices, minors, and the bordered constructions.

Indices are 1-based throughout, matching the a[r,c] variable labels.
Deleting rows or columns renumbers positions but never relabels variables,
so the entries of ``minor(generic_matrix(3), MinorSpec((1,), (1,)))`` are
still ``a[2,2], a[2,3], a[3,2], a[3,3]``.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import IndexOutOfRange, InvalidDimension, InvalidIndexPair, MatrixFormatError, NotSquare
from .ring import EntryVar, MultiPoly


def _grid_shape(rows, n_rows, n_cols):
    if n_rows is None:
        n_rows = len(rows)
    if n_cols is None:
        n_cols = len(rows[0]) if rows else 0
    if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
        raise InvalidDimension(f"entries do not form a {n_rows}x{n_cols} grid")
    return n_rows, n_cols


class _Grid:
    __slots__ = ("n_rows", "n_cols", "rows")

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.n_rows, self.n_cols, self.rows) == (other.n_rows, other.n_cols, other.rows)

    def __hash__(self):
        return hash((self.n_rows, self.n_cols, self.rows))

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, rc):
        """1-based ``m[r, c]``."""
        r, c = rc
        if not (1 <= r <= self.n_rows and 1 <= c <= self.n_cols):
            raise IndexOutOfRange(f"({r}, {c}) outside {self.n_rows}x{self.n_cols}")
        return self.rows[r - 1][c - 1]

    def _delete(self, rows: Iterable[int], cols: Iterable[int]):
        drop_r, drop_c = set(rows), set(cols)
        return tuple(
            tuple(x for c, x in enumerate(row, 1) if c not in drop_c)
            for r, row in enumerate(self.rows, 1)
            if r not in drop_r
        )

    def transpose(self):
        cols = [[row[c] for row in self.rows] for c in range(self.n_cols)]
        return type(self)(cols, self.n_cols, self.n_rows)


class SymMatrix(_Grid):
    """Immutable matrix with :class:`MultiPoly` entries.

    Integers passed as entries are embedded as constant polynomials.
    """

    __slots__ = ()

    def __init__(self, rows: Sequence[Sequence], n_rows: int | None = None, n_cols: int | None = None):
        self.rows = tuple(tuple(MultiPoly.coerce(x) for x in row) for row in rows)
        self.n_rows, self.n_cols = _grid_shape(self.rows, n_rows, n_cols)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"SymMatrix({self.n_rows}x{self.n_cols}: [{body}])"

    def is_generic(self) -> bool:
        """True if every entry is a single variable and no variable repeats."""
        seen = set()
        for row in self.rows:
            for x in row:
                v = x.as_variable()
                if v is None or v in seen:
                    return False
                seen.add(v)
        return True

    def variables(self) -> set[EntryVar]:
        return {v for row in self.rows for x in row for v in x.variables()}

    def substitute(self, assignment) -> SymMatrix:
        return SymMatrix([[x.substitute(assignment) for x in row] for row in self.rows],
                         self.n_rows, self.n_cols)

    def to_int(self) -> IntMatrix:
        """Integer matrix; every entry must be constant."""
        return IntMatrix([[x.constant_value() for x in row] for row in self.rows],
                         self.n_rows, self.n_cols)


class IntMatrix(_Grid):
    """Immutable dense matrix of Python ints."""

    __slots__ = ()

    def __init__(self, rows: Sequence[Sequence[int]], n_rows: int | None = None, n_cols: int | None = None):
        rows = tuple(tuple(rows_i) for rows_i in rows)
        for row in rows:
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise TypeError(f"IntMatrix entries must be int, got {type(x).__name__}")
        self.rows = rows
        self.n_rows, self.n_cols = _grid_shape(rows, n_rows, n_cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(r == c) for c in range(n)] for r in range(n)], n, n)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]!r})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def embed(self) -> SymMatrix:
        return SymMatrix(self.rows, self.n_rows, self.n_cols)


@dataclass(frozen=True)
class MinorSpec:
    """Rows and columns to delete, in ORIGINAL 1-based indices, sorted ascending."""

    deleted_rows: tuple[int, ...]
    deleted_cols: tuple[int, ...]

    def __post_init__(self):
        rows, cols = tuple(self.deleted_rows), tuple(self.deleted_cols)
        for idx in rows + cols:
            if isinstance(idx, bool) or not isinstance(idx, int):
                raise TypeError("minor indices must be int")
            if idx < 1:
                raise IndexOutOfRange(f"index {idx} < 1")
        if len(rows) != len(cols) or len(rows) not in (1, 2):
            raise InvalidDimension("a minor deletes one or two rows and the same number of columns")
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise InvalidIndexPair(f"repeated index in rows={rows} cols={cols}")
        object.__setattr__(self, "deleted_rows", tuple(sorted(rows)))
        object.__setattr__(self, "deleted_cols", tuple(sorted(cols)))

    @classmethod
    def single(cls, i: int, k: int) -> MinorSpec:
        return cls((i,), (k,))

    @classmethod
    def double(cls, i: int, j: int, k: int, l: int) -> MinorSpec:
        return cls((i, j), (k, l))

    def __str__(self):
        return f"{','.join(map(str, self.deleted_rows))}|{','.join(map(str, self.deleted_cols))}"


def generic_matrix(n: int) -> SymMatrix:
    """The n x n matrix whose (r, c) entry is the variable a[r,c]."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidDimension(f"generic_matrix needs n >= 1, got {n!r}")
    return SymMatrix([[MultiPoly.var(r, c) for c in range(1, n + 1)] for r in range(1, n + 1)], n, n)


def minor(m, spec: MinorSpec):
    """Delete ``spec``'s rows and columns from the square matrix ``m``.

    Works for both :class:`SymMatrix` and :class:`IntMatrix`.
    """
    if not m.is_square:
        raise NotSquare(f"minor of a {m.n_rows}x{m.n_cols} matrix")
    n = m.n_rows
    for idx in spec.deleted_rows + spec.deleted_cols:
        if idx > n:
            raise IndexOutOfRange(f"index {idx} outside a {n}x{n} matrix")
    size = n - len(spec.deleted_rows)
    return type(m)(m._delete(spec.deleted_rows, spec.deleted_cols), size, size)


def replace_row_with_border(m: SymMatrix, i: int) -> SymMatrix:
    """A^(i): row ``i`` replaced by a[n+1,1] ... a[n+1,n]."""
    if not m.is_square:
        raise NotSquare(f"{m.n_rows}x{m.n_cols}")
    n = m.n_rows
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"row {i} outside 1..{n}")
    border = tuple(MultiPoly.var(n + 1, c) for c in range(1, n + 1))
    rows = [border if r == i else row for r, row in enumerate(m.rows, 1)]
    return SymMatrix(rows, n, n)


def extend(m: SymMatrix) -> SymMatrix:
    """A+: append column a[., n+1] and row a[n+1, .] of fresh variables."""
    if not m.is_square:
        raise NotSquare(f"{m.n_rows}x{m.n_cols}")
    n = m.n_rows
    rows = [list(row) + [MultiPoly.var(r, n + 1)] for r, row in enumerate(m.rows, 1)]
    rows.append([MultiPoly.var(n + 1, c) for c in range(1, n + 2)])
    return SymMatrix(rows, n + 1, n + 1)


# -- JSON matrix format -------------------------------------------------------


def _parse_int(text, where):
    if isinstance(text, bool) or not isinstance(text, str):
        raise MatrixFormatError(f"{where}: entries must be decimal strings, got {text!r}")
    s = text.strip()
    body = s[1:] if s[:1] in "+-" else s
    if not body or not body.isdigit() or not body.isascii():
        raise MatrixFormatError(f"{where}: {text!r} is not a decimal integer")
    return int(s)


def matrix_from_json(doc) -> IntMatrix:
    """Parse ``{"rows": n, "cols": m, "entries": [["1", ...], ...]}``.

    ``doc`` may be a JSON string or an already-decoded dict.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MatrixFormatError("matrix document must be a JSON object")
    missing = {"rows", "cols", "entries"} - doc.keys()
    if missing:
        raise MatrixFormatError(f"missing keys: {sorted(missing)}")
    n_rows, n_cols, entries = doc["rows"], doc["cols"], doc["entries"]
    for name, val in (("rows", n_rows), ("cols", n_cols)):
        if isinstance(val, bool) or not isinstance(val, int) or val < 0:
            raise MatrixFormatError(f"{name!r} must be a nonnegative integer")
    if not isinstance(entries, list) or len(entries) != n_rows:
        raise MatrixFormatError(f"'entries' must be a list of {n_rows} rows")
    rows = []
    for r, row in enumerate(entries, 1):
        if not isinstance(row, list) or len(row) != n_cols:
            raise MatrixFormatError(f"row {r} must be a list of {n_cols} entries")
        rows.append([_parse_int(x, f"entry ({r},{c})") for c, x in enumerate(row, 1)])
    return IntMatrix(rows, n_rows, n_cols)


def matrix_to_json(m: IntMatrix) -> dict:
    return {"rows": m.n_rows, "cols": m.n_cols, "entries": [[str(x) for x in row] for row in m.rows]}
