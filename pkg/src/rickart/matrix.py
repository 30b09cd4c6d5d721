"""Immutable dense matrices over an exact field, and the elimination kernel.

Zero-width and zero-height matrices are allowed; they represent empty
bases (for instance the column space of the zero matrix).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import FieldMismatch, ParseError, ShapeMismatch, SingularMatrix
from .scalars import Field, field_from_json

__all__ = [
    "Matrix",
    "echelon",
    "rref",
    "rank",
    "nullspace",
    "column_space_basis",
    "solve",
    "inverse",
    "same_column_space",
]


class Matrix:
    """A rows x cols matrix of scalars of one field.

    Instances are hashable values; every operation returns a new matrix.
    """

    __slots__ = ("field", "shape", "_rows", "_hash")

    def __init__(self, rows: Iterable[Sequence], field: Field, shape: tuple[int, int] | None = None):
        elem = field.element
        data = tuple(tuple(elem(x) for x in row) for row in rows)
        if shape is None:
            if not data:
                raise ShapeMismatch("shape is required for a matrix with no rows")
            shape = (len(data), len(data[0]))
        r, c = shape
        if len(data) != r or any(len(row) != c for row in data):
            raise ShapeMismatch(f"entries do not form a {r}x{c} array")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "shape", (r, c))
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, data: tuple, field: Field, shape: tuple[int, int]) -> "Matrix":
        # trusted constructor: data already holds tuples of field elements
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "shape", shape)
        object.__setattr__(m, "_rows", data)
        object.__setattr__(m, "_hash", None)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (_rebuild, (type(self), self._rows, self.field, self.shape))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        z = field.zero
        return Matrix._raw(tuple((z,) * cols for _ in range(rows)), field, (rows, cols))

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        z, o = field.zero, field.one
        return Matrix._raw(
            tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, (n, n)
        )

    @classmethod
    def diag(cls, values: Sequence, field: Field) -> "Matrix":
        n = len(values)
        return Matrix([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field, n_rows: int) -> "Matrix":
        cols = [tuple(field.element(x) for x in col) for col in columns]
        return Matrix._raw(
            tuple(tuple(col[i] for col in cols) for i in range(n_rows)), field, (n_rows, len(cols))
        )

    # -- access -----------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row_tuples(self) -> tuple:
        return self._rows

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._rows)

    def columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix._raw(
            tuple(tuple(row[j] for j in indices) for row in self._rows),
            self.field,
            (self.rows, len(indices)),
        )

    def row_slice(self, indices: Sequence[int]) -> "Matrix":
        return Matrix._raw(
            tuple(self._rows[i] for i in indices), self.field, (len(indices), self.cols)
        )

    def is_zero(self) -> bool:
        return not any(x for row in self._rows for x in row)

    # -- value semantics --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.shape, self._rows))
            object.__setattr__(self, "_hash", h)
        return h

    def sort_key(self) -> tuple:
        """Lexicographic key over the entries (row-major)."""
        return tuple(_scalar_key(x) for row in self._rows for x in row)

    def __str__(self):
        return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in self._rows) + "]"

    def __repr__(self):
        return f"Matrix({self}, field={self.field})"

    # -- arithmetic -------------------------------------------------------

    def _check_same(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.field,
            self.shape,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.field,
            self.shape,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self._rows), self.field, self.shape)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        cols = list(zip(*other._rows)) if k else [()] * m
        out = []
        for row in self._rows:
            out_row = []
            for col in cols:
                acc = zero
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                out_row.append(acc)
            out.append(tuple(out_row))
        return Matrix._raw(tuple(out), self.field, (n, m))

    def scale(self, s) -> "Matrix":
        s = self.field.element(s)
        return Matrix._raw(tuple(tuple(s * x for x in r) for r in self._rows), self.field, self.shape)

    def transpose(self) -> "Matrix":
        r, c = self.shape
        return Matrix._raw(
            tuple(tuple(self._rows[i][j] for i in range(r)) for j in range(c)), self.field, (c, r)
        )

    def star(self) -> "Matrix":
        """Conjugate transpose."""
        r, c = self.shape
        return Matrix._raw(
            tuple(tuple(self._rows[i][j].conjugate() for i in range(r)) for j in range(c)),
            self.field,
            (c, r),
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ShapeMismatch(f"cannot hstack {self.shape} and {other.shape}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return Matrix._raw(
            tuple(r + s for r, s in zip(self._rows, other._rows)),
            self.field,
            (self.rows, self.cols + other.cols),
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ShapeMismatch(f"cannot vstack {self.shape} and {other.shape}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return Matrix._raw(self._rows + other._rows, self.field, (self.rows + other.rows, self.cols))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        fmt = self.field.format
        return {
            "field": self.field.to_json(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[fmt(x) for x in row] for row in self._rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        try:
            field = field_from_json(obj["field"])
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed matrix object: {exc}") from exc
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise ParseError("'entries' must be a list of lists")
        for row in entries:
            for x in row:
                if not isinstance(x, str):
                    raise ParseError(f"scalar entries must be strings, got {x!r}")
        try:
            return cls([[field.parse(x) for x in row] for row in entries], field, (rows, cols))
        except ShapeMismatch as exc:
            raise ParseError(str(exc)) from exc


def _rebuild(cls, rows, field, shape):
    return cls._raw(rows, field, shape)


def _scalar_key(x):
    if hasattr(x, "value"):
        return (x.value,)
    return (x.re, x.im)


# -- elimination --------------------------------------------------------------


def echelon(a: Matrix) -> tuple[list[list], list[int]]:
    """Fraction-free (Bareiss) row echelon form.

    Pivot rows are chosen as the first row at or below the current position
    with a nonzero entry in the pivot column. Returns the echelon rows and the
    pivot columns.
    """
    m = [list(row) for row in a.row_tuples()]
    n_rows, n_cols = a.shape
    prev = a.field.one
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        top = m[r]
        for i in range(r + 1, n_rows):
            row = m[i]
            f = row[c]
            m[i] = [(p * row[k] - f * top[k]) / prev if k > c else a.field.zero if k == c else row[k]
                    for k in range(n_cols)]
        prev = p
        pivots.append(c)
        r += 1
    return m, pivots


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m, pivots = echelon(a)
    n_cols = a.cols
    for i, c in enumerate(pivots):
        inv = m[i][c].inverse()
        m[i] = [x * inv for x in m[i]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        src = m[i]
        for k in range(i):
            f = m[k][c]
            if f:
                m[k] = [x - f * y for x, y in zip(m[k], src)]
    return Matrix._raw(tuple(tuple(r) for r in m), a.field, a.shape), pivots


def rank(a: Matrix) -> int:
    return len(echelon(a)[1])


def nullspace(a: Matrix) -> Matrix:
    """Columns spanning {z : a z = 0}, one per free column of the RREF."""
    r, pivots = rref(a)
    n = a.cols
    field = a.field
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -r[i, f]
        basis.append(v)
    return Matrix.from_columns(basis, field, n)


def column_space_basis(a: Matrix) -> Matrix:
    """The pivot columns of ``a``: an independent spanning set of its range."""
    _, pivots = echelon(a)
    return a.columns(pivots)


def solve(b: Matrix, a: Matrix) -> Matrix | None:
    """A matrix x with ``b @ x == a``, or None when no solution exists.

    Each column of ``a`` is reduced against the columns of ``b``.
    """
    if b.rows != a.rows:
        raise ShapeMismatch(f"cannot solve {b.shape} x = {a.shape}")
    aug, pivots = rref(b.hstack(a))
    if pivots and pivots[-1] >= b.cols:
        return None
    field = a.field
    x = [[field.zero] * a.cols for _ in range(b.cols)]
    for i, pc in enumerate(pivots):
        x[pc] = [aug[i, b.cols + j] for j in range(a.cols)]
    return Matrix._raw(tuple(tuple(r) for r in x), field, (b.cols, a.cols))


def inverse(a: Matrix) -> Matrix:
    if not a.is_square:
        raise ShapeMismatch(f"inverse of non-square {a.shape}")
    n = a.rows
    aug, pivots = rref(a.hstack(Matrix.identity(n, a.field)))
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return aug.columns(range(n, 2 * n))


def same_column_space(a: Matrix, b: Matrix) -> bool:
    """Whether two n-row matrices span the same column space."""
    ra, rb = rank(a), rank(b)
    return ra == rb and rank(a.hstack(b)) == ra
