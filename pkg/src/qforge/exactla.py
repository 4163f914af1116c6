"""Dense exact linear algebra over the rationals.

Rationals are plain :class:`fractions.Fraction` values.  Matrices are
immutable row-major :class:`RatMatrix` objects; every routine here works
by exact Gaussian elimination with first-nonzero pivoting in column order,
so results are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = list  # list of Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    # construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "RatMatrix":
        """Build from a list of rows; ``cols`` is needed only when there are no rows."""
        nrows = len(rows)
        if nrows == 0:
            return cls(0, cols or 0, ())
        ncols = len(rows[0])
        if cols is not None and cols != ncols:
            raise ValueError(f"expected {cols} columns, got {ncols}")
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(as_rational(x) for x in r)
        return cls(nrows, ncols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        e = [Fraction(0)] * (n * n)
        for i in range(n):
            e[i * n + i] = Fraction(1)
        return cls(n, n, tuple(e))

    @classmethod
    def column(cls, values: Iterable) -> "RatMatrix":
        vals = [as_rational(v) for v in values]
        return cls(len(vals), 1, tuple(vals))

    @classmethod
    def blocks(cls, grid: Sequence[Sequence["RatMatrix"]]) -> "RatMatrix":
        """Assemble a block matrix; block shapes must be consistent."""
        heights = [row[0].rows for row in grid]
        widths = [b.cols for b in grid[0]] if grid else []
        out = []
        for bi, row in enumerate(grid):
            if len(row) != len(widths):
                raise ValueError("ragged block grid")
            for bj, b in enumerate(row):
                if b.shape != (heights[bi], widths[bj]):
                    raise ValueError(f"block ({bi},{bj}) has shape {b.shape}")
            for i in range(heights[bi]):
                line = []
                for b in row:
                    line.extend(b.entries[i * b.cols:(i + 1) * b.cols])
                out.append(line)
        return cls(sum(heights), sum(widths), tuple(x for line in out for x in line))

    # access --------------------------------------------------------------

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def column_major(self) -> list:
        """Entries read column by column (the vectorization used for Hom spaces)."""
        return [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]

    @classmethod
    def from_column_major(cls, rows: int, cols: int, values: Sequence) -> "RatMatrix":
        e = [Fraction(0)] * (rows * cols)
        for j in range(cols):
            for i in range(rows):
                e[i * cols + j] = as_rational(values[j * rows + i])
        return cls(rows, cols, tuple(e))

    def is_zero(self) -> bool:
        return not any(self.entries)

    # arithmetic ------------------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return RatMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return RatMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "RatMatrix":
        c = as_rational(c)
        return RatMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [Fraction(0)] * (n * p)
        for i in range(n):
            for k in range(m):
                aik = a[i * m + k]
                if not aik:
                    continue
                base = k * p
                for j in range(p):
                    bkj = b[base + j]
                    if bkj:
                        out[i * p + j] += aik * bkj
        return RatMatrix(n, p, tuple(out))

    def apply(self, v: Sequence) -> Vector:
        """Matrix times a column vector given as a sequence."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        c = self.cols
        return [sum((self.entries[i * c + j] * v[j] for j in range(c) if v[j]), Fraction(0))
                for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        """Kronecker product; row (i, k) of the result sits at index i*other.rows + k."""
        r, c = self.rows * other.rows, self.cols * other.cols
        out = [Fraction(0)] * (r * c)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.entries[i * self.cols + j]
                if not a:
                    continue
                for k in range(other.rows):
                    row = (i * other.rows + k) * c + j * other.cols
                    for l in range(other.cols):
                        b = other.entries[k * other.cols + l]
                        if b:
                            out[row + l] = a * b
        return RatMatrix(r, c, tuple(out))

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return RatMatrix.from_rows([a + b for a, b in zip(self.to_rows(), other.to_rows())],
                                   cols=self.cols + other.cols) if self.rows else RatMatrix(0, self.cols + other.cols, ())


# elimination ---------------------------------------------------------------


def _rref(rows: list, ncols: int) -> tuple:
    """In-place reduced row echelon form of a list of Fraction rows.

    Returns the pivot column list.  Row updates only touch the nonzero
    columns of the pivot row, which matters for the very sparse systems
    built from quiver representations.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        support = [j for j in range(c, ncols) if prow[j]]
        if inv != 1:
            for j in support:
                prow[j] *= inv
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j in support:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def _rows_of(M: RatMatrix) -> list:
    return M.to_rows()


def rref(M: RatMatrix) -> tuple:
    """Return ``(R, pivot_columns)`` with R the reduced row echelon form of M."""
    rows = _rows_of(M)
    pivots = _rref(rows, M.cols)
    return RatMatrix.from_rows(rows, cols=M.cols), pivots


def rank(M: RatMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    # eliminate along the shorter side
    if M.rows > M.cols:
        M = M.transpose()
    return len(_rref(_rows_of(M), M.cols))


def kernel_basis(M: RatMatrix) -> list:
    """Basis of {x : Mx = 0}, one vector per free column of the RREF, in column order.

    Each vector has a 1 in its free coordinate, zeros in the other free
    coordinates, and the forced values in the pivot coordinates.
    """
    n = M.cols
    if M.rows == 0:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    rows = _rows_of(M)
    pivots = _rref(rows, n)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(v)
    return basis


def image_pivot_rows(M: RatMatrix) -> list:
    """Row positions that carry pivots in the RREF of the column space of M."""
    if M.rows == 0 or M.cols == 0:
        return []
    return _rref(M.transpose().to_rows(), M.rows)


def cokernel_reps(M: RatMatrix) -> list:
    """Standard basis vectors whose residues form a basis of codomain / image(M).

    The column space is row-reduced (as the row space of the transpose), and
    the standard vectors at the non-pivot positions complete its pivots to a
    basis of the codomain.
    """
    pivots = set(image_pivot_rows(M))
    reps = []
    for i in range(M.rows):
        if i not in pivots:
            e = [Fraction(0)] * M.rows
            e[i] = Fraction(1)
            reps.append(e)
    return reps


def solve(M: RatMatrix, b: Sequence) -> Optional[Vector]:
    """Some x with Mx = b (free variables set to zero), or None if inconsistent."""
    if len(b) != M.rows:
        raise ValueError(f"right-hand side of length {len(b)} for {M.shape} matrix")
    n = M.cols
    rows = [r + [as_rational(bi)] for r, bi in zip(M.to_rows(), b)]
    pivots = _rref(rows, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][n]
    return x


def residues_independent(M: RatMatrix, vectors: Sequence[Sequence]) -> bool:
    """True iff the given codomain vectors are independent modulo the column space of M."""
    if not vectors:
        return True
    aug = M.hstack(RatMatrix.from_rows([list(col) for col in zip(*vectors)], cols=len(vectors)))
    return rank(aug) == rank(M) + len(vectors)


def inertia(S: RatMatrix) -> tuple:
    """Exact ``(positive, negative, zero)`` inertia of a symmetric matrix.

    Symmetric elimination with diagonal pivoting (a congruence, so the
    inertia is unchanged).  When only a zero diagonal with a nonzero
    off-diagonal entry s_ij remains, the basis change e_i -> e_i + t*e_j
    produces a nonzero diagonal entry, so elimination can always continue.
    """
    if S.rows != S.cols or S != S.transpose():
        raise ValueError("inertia needs a symmetric matrix")
    A = S.to_rows()
    n = S.rows
    active = list(range(n))
    pos = neg = 0
    while active:
        p = next((i for i in active if A[i][i]), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i < j and A[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j  (or minus, whichever keeps the diagonal nonzero; A[j][j] = 0)
            t = 1
            for k in range(n):
                A[i][k] += t * A[j][k]
            for k in range(n):
                A[k][i] += t * A[k][j]
            p = i
        d = A[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        prow = A[p][:]
        for i in active:
            f = A[i][p]
            if f:
                f = f / d
                for k in active:
                    A[i][k] -= f * prow[k]
                A[i][p] = Fraction(0)
        for i in active:
            A[p][i] = Fraction(0)
    return pos, neg, n - pos - neg
