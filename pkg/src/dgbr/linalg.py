"""Dense exact matrices over a Field.

Naive Gaussian elimination throughout; every dimension in this package is
desk scale, so clarity wins over asymptotics.  Entries are raw field values
(Fraction or residue int), never Scalar wrappers.
"""
from __future__ import annotations

from .errors import ShapeMismatch
from .fields import Field


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        rows = [tuple(field.coerce(x) for x in r) for r in rows]
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ShapeMismatch("ragged rows")
        elif ncols is None:
            ncols = 0
        self.field = field
        self.rows = tuple(rows)
        self.nrows = len(rows)
        self.ncols = ncols

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, m, n):
        z = field.zero
        return cls(field, [[z] * n for _ in range(m)], ncols=n)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field, cols, nrows: int):
        z = field.zero
        rows = [[z] * len(cols) for _ in range(nrows)]
        for j, col in enumerate(cols):
            if len(col) != nrows:
                raise ShapeMismatch(f"column {j} has length {len(col)}, expected {nrows}")
            for i, x in enumerate(col):
                rows[i][j] = field.coerce(x)
        return cls(field, rows, ncols=len(cols))

    # -- basics ------------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], ncols=self.nrows)

    def is_zero(self):
        zero = self.field.is_zero
        return all(zero(x) for r in self.rows for x in r)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.ncols))

    def __add__(self, other):
        self._same_shape(other)
        add = self.field.add
        return Matrix(
            self.field,
            [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __sub__(self, other):
        self._same_shape(other)
        sub = self.field.sub
        return Matrix(
            self.field,
            [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(x) for x in r] for r in self.rows], ncols=self.ncols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            c = self.field.coerce(other)
            mul = self.field.mul
            return Matrix(self.field, [[mul(c, x) for x in r] for r in self.rows], ncols=self.ncols)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        add, mul, zero, is_zero = f.add, f.mul, f.zero, f.is_zero
        cols = other.rows
        out = []
        for r in self.rows:
            row = [zero] * other.ncols
            for k, a in enumerate(r):
                if is_zero(a):
                    continue
                ck = cols[k]
                for j in range(other.ncols):
                    b = ck[j]
                    if not is_zero(b):
                        row[j] = add(row[j], mul(a, b))
            out.append(row)
        return Matrix(self.field, out, ncols=other.ncols)

    def _same_shape(self, other):
        if not isinstance(other, Matrix) or self.field != other.field:
            raise ShapeMismatch("matrix operands must share a field")
        if self.shape != other.shape:
            raise ShapeMismatch(f"shape mismatch {self.shape} vs {other.shape}")

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ShapeMismatch("hstack needs equal row counts")
        return Matrix(
            self.field,
            [tuple(a) + tuple(b) for a, b in zip(self.rows, other.rows)],
            ncols=self.ncols + other.ncols,
        )

    def apply(self, vec):
        """Matrix times a column given as a sequence; returns a tuple."""
        if len(vec) != self.ncols:
            raise ShapeMismatch(f"vector length {len(vec)} vs {self.ncols} columns")
        f = self.field
        vec = [f.coerce(x) for x in vec]
        out = []
        for r in self.rows:
            acc = f.zero
            for a, x in zip(r, vec):
                if not f.is_zero(a) and not f.is_zero(x):
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return tuple(out)

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column indices)."""
        f = self.field
        rows = [list(r) for r in self.rows]
        m, n = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(n):
            pr = None
            for i in range(r, m):
                if not f.is_zero(rows[i][c]):
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = f.inv(rows[r][c])
            rows[r] = [f.mul(inv, x) for x in rows[r]]
            for i in range(m):
                if i != r and not f.is_zero(rows[i][c]):
                    t = rows[i][c]
                    rows[i] = [f.sub(x, f.mul(t, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == m:
                break
        return Matrix(f, rows, ncols=n), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right kernel, as column tuples (free variables = 1)."""
        f = self.field
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for j in free:
            col = [f.zero] * self.ncols
            col[j] = f.one
            for r, pc in enumerate(pivots):
                col[pc] = f.neg(R.rows[r][j])
            basis.append(tuple(col))
        return basis

    def column_space_pivots(self):
        """Indices of a maximal independent set of columns (leftmost first)."""
        return self.rref()[1]

    def solve(self, rhs):
        """One exact solution of self * x = rhs, or None if inconsistent.

        Free variables are set to zero, which makes the answer canonical for
        the fixed column order.  rhs may be a sequence or a 1-column Matrix.
        """
        if isinstance(rhs, Matrix):
            if rhs.ncols != 1:
                raise ShapeMismatch("solve expects a single column")
            rhs = rhs.column(0)
        if len(rhs) != self.nrows:
            raise ShapeMismatch(f"rhs length {len(rhs)} vs {self.nrows} rows")
        f = self.field
        aug = Matrix(
            f,
            [tuple(r) + (f.coerce(b),) for r, b in zip(self.rows, rhs)] if self.nrows else [],
            ncols=self.ncols + 1,
        )
        R, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        sol = [f.zero] * self.ncols
        for r, pc in enumerate(pivots):
            sol[pc] = R.rows[r][self.ncols]
        return tuple(sol)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.nrows
        R, pivots = self.hstack(Matrix.identity(self.field, n)).rref()
        if tuple(pivots[:n]) != tuple(range(n)):
            return None
        return Matrix(self.field, [r[n:] for r in R.rows], ncols=n)

    def __repr__(self):
        fmt = self.field.format
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"
