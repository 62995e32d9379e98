"""Exact dense matrices over a ScalarRing.

Elimination routines require a field (rat, gauss, qsqrt<d>); multiplication,
Kronecker products and block constructions work over any shipped semiring.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, List, Optional, Sequence, Tuple

from .errors import RingMismatchError, ShapeMismatchError, SingularMatrixError
from .scalars import Scalar, ScalarRing, involute, is_positive, is_strictly_positive

Rows = Tuple[Tuple[Scalar, ...], ...]


@dataclass(frozen=True)
class Matrix:
    ring: ScalarRing
    rows: int
    cols: int
    entries: Rows

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ShapeMismatchError(f"entries do not form a {self.rows}x{self.cols} matrix")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_rows(cls, ring: ScalarRing, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> "Matrix":
        entries = tuple(tuple(ring.scalar(x) for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(ring, len(entries), cols, entries)

    @classmethod
    def from_columns(cls, ring: ScalarRing, columns: Sequence[Sequence[Any]], rows: int) -> "Matrix":
        return cls.from_rows(ring, [[col[i] for col in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def zero(cls, ring: ScalarRing, rows: int, cols: int) -> "Matrix":
        z = ring.zero()
        return cls(ring, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, ring: ScalarRing, n: int) -> "Matrix":
        z, o = ring.zero(), ring.one()
        return cls(ring, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, ring: ScalarRing, values: Sequence[Any]) -> "Matrix":
        n = len(values)
        z = ring.zero()
        diag = [ring.scalar(v) for v in values]
        return cls(ring, n, n, tuple(tuple(diag[i] if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, ring: ScalarRing, values: Sequence[Any]) -> "Matrix":
        return cls.from_rows(ring, [[v] for v in values], cols=1)

    # -- access ------------------------------------------------------------------

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i]

    def column_values(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(r[j] for r in self.entries)

    def column_matrix(self, j: int) -> "Matrix":
        return Matrix(self.ring, self.rows, 1, tuple((r[j],) for r in self.entries))

    def select_columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.ring, self.rows, len(indices), tuple(tuple(r[j] for j in indices) for r in self.entries))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.ring, len(rows), len(cols), tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def to_lists(self) -> List[List[Scalar]]:
        return [list(r) for r in self.entries]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -------------------------------------------------------------

    def _check_ring(self, other: "Matrix"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        z = self.ring.zero()
        other_cols = [other.column_values(j) for j in range(other.cols)]
        out = []
        for r in self.entries:
            row = []
            for col in other_cols:
                acc = z
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix(self.ring, self.rows, other.cols, tuple(out))

    def _entrywise(self, other: "Matrix", op) -> "Matrix":
        self._check_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatchError(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")
        return Matrix(self.ring, self.rows, self.cols, tuple(
            tuple(op(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        ))

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._entrywise(other, lambda a, b: a + b)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._entrywise(other, lambda a, b: a - b)

    def __neg__(self) -> "Matrix":
        return self.map(lambda a: -a)

    def scale(self, s: Scalar) -> "Matrix":
        return self.map(lambda a: s * a)

    def map(self, fn, ring: Optional[ScalarRing] = None) -> "Matrix":
        """Apply ``fn`` to every entry; ``ring`` names the target ring if it changes."""
        return Matrix(ring or self.ring, self.rows, self.cols, tuple(tuple(fn(a) for a in r) for r in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def conjugate(self) -> "Matrix":
        return self.map(involute)

    def conj_transpose(self) -> "Matrix":
        """The ‡-transpose: involute every entry and transpose."""
        return self.conjugate().transpose()

    def kron(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        out = []
        for ra in self.entries:
            for rb in other.entries:
                out.append(tuple(a * b for a in ra for b in rb))
        return Matrix(self.ring, self.rows * other.rows, self.cols * other.cols, tuple(out))

    def block_diag(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        z = self.ring.zero()
        top = tuple(r + (z,) * other.cols for r in self.entries)
        bottom = tuple((z,) * self.cols + r for r in other.entries)
        return Matrix(self.ring, self.rows + other.rows, self.cols + other.cols, top + bottom)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.rows != other.rows:
            raise ShapeMismatchError("hstack needs equal row counts")
        return Matrix(self.ring, self.rows, self.cols + other.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.cols != other.cols:
            raise ShapeMismatchError("vstack needs equal column counts")
        return Matrix(self.ring, self.rows + other.rows, self.cols, self.entries + other.entries)

    # -- predicates ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not a for r in self.entries for a in r)

    def is_identity(self) -> bool:
        return self.is_square and all(
            (a.is_one() if i == j else a.is_zero()) for i, r in enumerate(self.entries) for j, a in enumerate(r)
        )

    def is_hermitian(self) -> bool:
        return self.is_square and self == self.conj_transpose()

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.entries) + "]"


# -- elimination ------------------------------------------------------------------

class PivotOrder(str, Enum):
    """Column scan order for echelon reduction.

    Within a column the pivot row is the one with the largest absolute
    numerator, ties broken by the lowest index. Scanning columns in reverse
    selects different free variables and hence a different kernel basis.
    """

    FORWARD = "forward"
    REVERSE = "reverse"


def _require_field(ring: ScalarRing):
    if not ring.is_field:
        raise RingMismatchError(f"elimination needs a field, got {ring}")


def rref(m: Matrix, order: PivotOrder = PivotOrder.FORWARD) -> Tuple[Matrix, List[int]]:
    """Reduced echelon form (w.r.t. the column scan order) and pivot columns."""
    _require_field(m.ring)
    a = m.to_lists()
    columns = range(m.cols) if order == PivotOrder.FORWARD else range(m.cols - 1, -1, -1)
    pivots: List[int] = []
    r = 0
    for c in columns:
        if r == m.rows:
            break
        best = None
        for i in range(r, m.rows):
            if a[i][c] and (best is None or a[i][c].height() > a[best][c].height()):
                best = i
        if best is None:
            continue
        a[r], a[best] = a[best], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix.from_rows(m.ring, a, cols=m.cols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix, order: PivotOrder = PivotOrder.FORWARD) -> Matrix:
    """Basis of {x : m x = 0} as the columns of a (m.cols x k) matrix."""
    reduced, pivots = rref(m, order)
    ring = m.ring
    free = [c for c in range(m.cols) if c not in pivots]
    columns = []
    for f in free:
        vec = [ring.zero()] * m.cols
        vec[f] = ring.one()
        for row, pc in enumerate(pivots):
            vec[pc] = -reduced[row, f]
        columns.append(vec)
    return Matrix.from_columns(ring, columns, m.cols)


def column_basis(m: Matrix, order: PivotOrder = PivotOrder.FORWARD) -> Matrix:
    """The pivot columns of m: a basis of its column space."""
    _, pivots = rref(m, order)
    return m.select_columns(sorted(pivots))


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises SingularMatrixError."""
    if not m.is_square:
        raise ShapeMismatchError(f"cannot invert a {m.rows}x{m.cols} matrix")
    augmented = m.hstack(Matrix.identity(m.ring, m.rows))
    reduced, pivots = rref(augmented)
    if pivots[: m.rows] != list(range(m.rows)):
        raise SingularMatrixError("matrix is not invertible")
    return reduced.select_columns(range(m.rows, 2 * m.rows))


def determinant(m: Matrix) -> Scalar:
    """Fraction-free (Bareiss) determinant with row pivoting."""
    if not m.is_square:
        raise ShapeMismatchError("determinant of a non-square matrix")
    _require_field(m.ring)
    n = m.rows
    ring = m.ring
    if n == 0:
        return ring.one()
    a = m.to_lists()
    sign = ring.one()
    prev = ring.one()
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return ring.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_principal_minors(m: Matrix) -> List[Scalar]:
    return [determinant(m.submatrix(range(k), range(k))) for k in range(1, m.rows + 1)]


def is_positive_definite(m: Matrix) -> bool:
    """Hermitian m is positive-definite iff every leading principal minor is positive.

    Bareiss elimination without pivoting: the k-th pivot is the k-th leading
    principal minor, so the scan stops at the first one that is not positive.
    """
    _require_field(m.ring)
    n = m.rows
    a = m.to_lists()
    prev = m.ring.one()
    for k in range(n):
        if not is_strictly_positive(a[k][k]):
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return True


def is_positive_semidefinite(m: Matrix) -> bool:
    """Exact PSD test for a Hermitian matrix by pivoted LDL elimination.

    A zero diagonal entry is accepted only when its whole row vanishes;
    otherwise each pivot must be positive and is eliminated by a Schur
    complement step.
    """
    _require_field(m.ring)
    if not m.is_hermitian():
        return False
    a = m.to_lists()
    remaining = list(range(m.rows))
    while remaining:
        pivot = next((k for k in remaining if a[k][k]), None)
        if pivot is None:
            return all(not a[i][j] for i in remaining for j in remaining)
        if not is_positive(a[pivot][pivot]):
            return False
        for k in remaining:
            if not a[k][k] and a[k][pivot]:
                # zero diagonal with a nonzero off-diagonal entry: indefinite
                return False
        remaining.remove(pivot)
        d = a[pivot][pivot]
        for i in remaining:
            if not a[i][pivot]:
                continue
            factor = a[i][pivot] / d
            for j in remaining:
                a[i][j] = a[i][j] - factor * a[pivot][j]
    return True


def solve_columns(m: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """X with m X = rhs, or None if some column has no solution."""
    reduced, pivots = rref(m.hstack(rhs))
    if any(p >= m.cols for p in pivots):
        return None
    ring = m.ring
    out = [[ring.zero()] * rhs.cols for _ in range(m.cols)]
    for row, pc in enumerate(pivots):
        for j in range(rhs.cols):
            out[pc][j] = reduced[row, m.cols + j]
    return Matrix.from_rows(ring, out, cols=rhs.cols)

