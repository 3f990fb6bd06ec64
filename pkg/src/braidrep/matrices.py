"""Dense square matrices over the exact scalar rings.

Products, determinants, inverses and block embeddings are all exact.  The
determinant uses division-free expansion by minors with memoisation over
column subsets, which is plenty for the dimensions that occur here (at most
7).  Inverses use Gauss-Jordan elimination with exact pivoting over fields
and the adjugate divided by a unit determinant elsewhere.

The module also computes invariant lines of 2x2 matrices over a field.  The
direction (v1, v2) spans an invariant line of [[a, b], [c, d]] exactly when
c*v1^2 + (d - a)*v1*v2 - b*v2^2 = 0, so the search reduces to exact root
extraction from a binary quadratic.  Lines are only sought with coordinates
in the working field; scalar matrices fix every line and are reported with a
distinguished marker.
"""

from __future__ import annotations

from .rings import Element, NonUnitError, Ring, RingMismatchError

__all__ = [
    "Matrix", "Line", "ALL_LINES", "MatrixError", "NonInvertibleError",
    "ShapeError", "block_embed", "invariant_lines", "common_invariant_line",
    "line_is_invariant",
]


class MatrixError(ValueError):
    pass


class NonInvertibleError(MatrixError):
    pass


class ShapeError(MatrixError):
    pass


class Matrix:
    __slots__ = ("ring", "dim", "rows")

    def __init__(self, ring, rows):
        dim = len(rows)
        if dim < 1 or any(len(r) != dim for r in rows):
            raise ShapeError("matrix must be square with dimension >= 1")
        fixed = []
        for row in rows:
            out = []
            for v in row:
                if isinstance(v, Element):
                    if v.ring != ring:
                        raise RingMismatchError("entry from a different ring")
                    out.append(v)
                else:
                    out.append(ring.scalar(v))
            fixed.append(tuple(out))
        self.ring = ring
        self.dim = dim
        self.rows = tuple(fixed)

    @classmethod
    def identity(cls, ring, dim):
        one, zero = ring.one, ring.zero
        return cls(ring, [[one if i == j else zero for j in range(dim)]
                          for i in range(dim)])

    def entry(self, i, j):
        return self.rows[i][j]

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError("matrix rings differ")
        if other.dim != self.dim:
            raise ShapeError("matrix dimensions differ")
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.ring.zero
                for k in range(n):
                    a = self.rows[i][k]
                    if a.is_zero:
                        continue
                    b = other.rows[k][j]
                    if b.is_zero:
                        continue
                    acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return Matrix(self.ring, rows)

    def _entrywise(self, other, op):
        if other.ring != self.ring or other.dim != self.dim:
            raise MatrixError("matrix shapes or rings differ")
        return Matrix(self.ring, [[op(a, b) for a, b in zip(r1, r2)]
                                  for r1, r2 in zip(self.rows, other.rows)])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._entrywise(other, lambda a, b: a + b)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._entrywise(other, lambda a, b: a - b)

    def scale(self, scalar):
        if not isinstance(scalar, Element):
            scalar = self.ring.scalar(scalar)
        return Matrix(self.ring, [[scalar * v for v in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring or other.dim != self.dim:
            return False
        return all(a == b for r1, r2 in zip(self.rows, other.rows)
                   for a, b in zip(r1, r2))

    __hash__ = None

    def is_zero(self):
        return all(v.is_zero for row in self.rows for v in row)

    def is_identity(self):
        return self == Matrix.identity(self.ring, self.dim)

    def is_scalar(self):
        d = self.rows[0][0]
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.rows[i][j]
                if i == j:
                    if v != d:
                        return False
                elif not v.is_zero:
                    return False
        return True

    def det(self):
        n = self.dim
        rows = self.rows
        ring = self.ring
        memo = {}

        def minor(r, mask):
            if r == n:
                return ring.one
            got = memo.get(mask)
            if got is not None:
                return got
            total = ring.zero
            sign = 1
            for j in range(n):
                if not (mask >> j) & 1:
                    continue
                a = rows[r][j]
                if not a.is_zero:
                    term = a * minor(r + 1, mask & ~(1 << j))
                    total = total + term if sign > 0 else total - term
                sign = -sign
            memo[mask] = total
            return total

        return minor(0, (1 << n) - 1)

    def _submatrix(self, skip_row, skip_col):
        rows = [[v for j, v in enumerate(row) if j != skip_col]
                for i, row in enumerate(self.rows) if i != skip_row]
        return Matrix(self.ring, rows)

    def inverse(self):
        if self.ring.is_field:
            return self._inverse_field()
        d = self.det()
        if not d.is_unit:
            raise NonInvertibleError(f"determinant {d} is not a unit")
        dinv = d.inverse()
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                cof = self._submatrix(j, i).det() if n > 1 else self.ring.one
                if (i + j) % 2:
                    cof = -cof
                row.append(cof * dinv)
            rows.append(row)
        return Matrix(self.ring, rows)

    def _inverse_field(self):
        n = self.dim
        ring = self.ring
        aug = [list(self.rows[i]) +
               [ring.one if i == j else ring.zero for j in range(n)]
               for i in range(n)]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if not aug[r][col].is_zero:
                    pivot = r
                    break
            if pivot is None:
                raise NonInvertibleError(
                    f"determinant {self.det()} vanishes: matrix not invertible")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r == col or aug[r][col].is_zero:
                    continue
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
        return Matrix(ring, [row[n:] for row in aug])

    def apply(self, vector):
        return tuple(
            sum((a * v for a, v in zip(row, vector) if not a.is_zero),
                self.ring.zero)
            for row in self.rows)

    def __str__(self):
        return "[" + "; ".join(", ".join(str(v) for v in row)
                               for row in self.rows) + "]"

    __repr__ = __str__

    def to_json(self):
        return {"ring": self.ring.descriptor(), "dim": self.dim,
                "entries": [[str(v) for v in row] for row in self.rows]}

    @staticmethod
    def from_json(obj):
        ring = Ring.from_descriptor(obj["ring"])
        dim = obj["dim"]
        entries = obj["entries"]
        if len(entries) != dim or any(len(r) != dim for r in entries):
            raise ShapeError("entry grid does not match declared dimension")
        return Matrix(ring, [[ring.parse(s) for s in row] for row in entries])


def block_embed(block, position, total_dim):
    """Copy ``block`` at rows/cols [position, position+dim) of an identity,
    with 1-based ``position``."""
    if position < 1 or position - 1 + block.dim > total_dim:
        raise ShapeError(
            f"block of dimension {block.dim} does not fit at position "
            f"{position} of {total_dim}")
    out = [[block.ring.one if i == j else block.ring.zero
            for j in range(total_dim)] for i in range(total_dim)]
    base = position - 1
    for i in range(block.dim):
        for j in range(block.dim):
            out[base + i][base + j] = block.rows[i][j]
    return Matrix(block.ring, out)


class _AllLines:
    def __repr__(self):
        return "ALL_LINES"


ALL_LINES = _AllLines()


class Line:
    """A 1-dimensional subspace, stored as the unique direction whose first
    nonzero coordinate is 1."""

    __slots__ = ("ring", "direction")

    def __init__(self, ring, direction):
        vec = [v if isinstance(v, Element) else ring.scalar(v) for v in direction]
        lead = next((v for v in vec if not v.is_zero), None)
        if lead is None:
            raise MatrixError("a line needs a nonzero direction")
        inv = lead.inverse()
        self.ring = ring
        self.direction = tuple(inv * v for v in vec)

    @property
    def dim(self):
        return len(self.direction)

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return (self.ring == other.ring and self.dim == other.dim
                and all(a == b for a, b in zip(self.direction, other.direction)))

    __hash__ = None

    def sort_key(self):
        return tuple(str(v) for v in self.direction)

    def __repr__(self):
        return "span(" + ", ".join(str(v) for v in self.direction) + ")"

    def to_json(self):
        return {"ring": self.ring.descriptor(),
                "direction": [str(v) for v in self.direction]}


def line_is_invariant(matrix, line):
    """Exact test that matrix * v is parallel to v for v spanning the line."""
    v = line.direction
    w = matrix.apply(v)
    n = len(v)
    for i in range(n):
        for j in range(i + 1, n):
            if not (w[i] * v[j] - w[j] * v[i]).is_zero:
                return False
    return True


def invariant_lines(matrix):
    """All invariant lines of a 2x2 matrix over a field, with coordinates in
    the field; returns ALL_LINES for scalar matrices."""
    if matrix.dim != 2:
        raise ShapeError("invariant lines are computed for 2x2 matrices")
    ring = matrix.ring
    if not ring.is_field:
        raise MatrixError("invariant lines need a field of coefficients")
    a, b = matrix.rows[0]
    c, d = matrix.rows[1]
    alpha, beta, gamma = c, d - a, -b
    if alpha.is_zero and beta.is_zero and gamma.is_zero:
        return ALL_LINES
    lines = []
    if alpha.is_zero:
        lines.append(Line(ring, (ring.one, ring.zero)))
        if not beta.is_zero:
            lines.append(Line(ring, (-gamma, beta)))
    else:
        disc = beta * beta - 4 * alpha * gamma
        root = ring.sqrt(disc)
        if root is not None:
            two_alpha = alpha + alpha
            r1 = (-beta + root) / two_alpha
            lines.append(Line(ring, (r1, ring.one)))
            if not root.is_zero:
                r2 = (-beta - root) / two_alpha
                lines.append(Line(ring, (r2, ring.one)))
    uniq = []
    for line in lines:
        if not any(line == known for known in uniq):
            uniq.append(line)
    uniq.sort(key=Line.sort_key)
    return uniq


def common_invariant_line(matrices, ring=None):
    """A line invariant under every given 2x2 matrix, or None.

    With no non-scalar matrix every line is invariant; that vacuous case is
    reported as span(1, 0) by convention (pass ``ring`` for an empty list).
    """
    non_scalar = [m for m in matrices if not m.is_scalar()]
    if not non_scalar:
        if matrices:
            ring = matrices[0].ring
        if ring is None:
            raise MatrixError("pass a ring to take a vacuous intersection")
        return Line(ring, (ring.one, ring.zero))
    first = invariant_lines(non_scalar[0])
    if first is ALL_LINES:  # unreachable: non-scalar, but keep the guard
        raise MatrixError("scalar matrix misclassified")
    survivors = [line for line in first
                 if all(line_is_invariant(m, line) for m in non_scalar[1:])]
    if not survivors:
        return None
    survivors.sort(key=Line.sort_key)
    return survivors[0]
