"""Small dense exact matrices over rationals or complex rationals.

Sizes in this package never exceed ~12x12 (most are 4x4 .. 6x6, plus the
20-column differentials of the exterior module), so everything is plain
dense arithmetic.  Rank uses fraction-free (Bareiss) elimination on the
cleared-denominator integer matrix when entries are rational; solving and
kernels use exact reduced row echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

from .scalars import CScalar, Q, Scalar, conj, scalar_is_zero, scalar_to_float


class Matrix:
    """Immutable dense matrix with Fraction or CScalar entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(_coerce(x) for x in row) for row in rows)
        if not rs:
            raise ValueError("empty matrix")
        w = len(rs[0])
        if any(len(r) != w for r in rs):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rs)
        object.__setattr__(self, "nrows", len(rs))
        object.__setattr__(self, "ncols", w)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(m: int, n: int | None = None) -> "Matrix":
        n = m if n is None else n
        return Matrix([[Fraction(0)] * n for _ in range(m)])

    @staticmethod
    def diag(entries: Sequence) -> "Matrix":
        n = len(entries)
        return Matrix([[entries[i] if i == j else Fraction(0) for j in range(n)]
                       for i in range(n)])

    @staticmethod
    def from_cols(cols: Sequence[Sequence]) -> "Matrix":
        n = len(cols[0])
        return Matrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    # -- access --------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(self.rows[i][j] for i in range(self.nrows))

    def cols(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows])

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, s) -> "Matrix":
        s = _coerce(s)
        return Matrix([[a * s for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.cols()
        return Matrix([[_dot(r, c) for c in ocols] for r in self.rows])

    def matvec(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(r, v) for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def conjugate(self) -> "Matrix":
        return Matrix([[conj(a) for a in r] for r in self.rows])

    def conj_transpose(self) -> "Matrix":
        return self.conjugate().transpose()

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(a) for a in r] for r in self.rows])

    def trace(self) -> Scalar:
        _square(self)
        out = self.rows[0][0]
        for i in range(1, self.nrows):
            out = out + self.rows[i][i]
        return out

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def power(self, k: int) -> "Matrix":
        _square(self)
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(scalar_is_zero(a) for r in self.rows for a in r)

    def is_real(self) -> bool:
        return all(not isinstance(a, CScalar) or a.is_real()
                   for r in self.rows for a in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r1, r2 in zip(self.rows, other.rows)
            for a, b in zip(r1, r2))

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix[{body}]"

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["Matrix", "Matrix", list[int]]:
        """Reduced row echelon form.

        Returns (R, T, pivots) with T @ self == R exactly; pivots lists the
        pivot column of each nonzero row of R.
        """
        m = [list(r) for r in self.rows]
        t = [[Fraction(int(i == j)) for j in range(self.nrows)]
             for i in range(self.nrows)]
        pivots: list[int] = []
        pr = 0
        for pc in range(self.ncols):
            pivot_row = None
            for i in range(pr, self.nrows):
                if not scalar_is_zero(m[i][pc]):
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
            t[pr], t[pivot_row] = t[pivot_row], t[pr]
            inv = m[pr][pc]
            m[pr] = [a / inv for a in m[pr]]
            t[pr] = [a / inv for a in t[pr]]
            for i in range(self.nrows):
                if i != pr and not scalar_is_zero(m[i][pc]):
                    f = m[i][pc]
                    m[i] = [a - f * b for a, b in zip(m[i], m[pr])]
                    t[i] = [a - f * b for a, b in zip(t[i], t[pr])]
            pivots.append(pc)
            pr += 1
            if pr == self.nrows:
                break
        return Matrix(m), Matrix(t), pivots

    def rank(self) -> int:
        if all(isinstance(a, Fraction) for r in self.rows for a in r):
            return _bareiss_rank(self.rows)
        return len(self.rref()[2])

    def nullspace(self) -> list[tuple]:
        """Exact basis of the kernel (one vector per free column)."""
        r, _, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for i, pc in enumerate(pivots):
                v[pc] = -r.rows[i][f]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "Matrix":
        _square(self)
        r, t, pivots = self.rref()
        if len(pivots) != self.nrows:
            raise ValueError("matrix is singular")
        return t

    def det(self) -> Scalar:
        _square(self)
        m = [list(r) for r in self.rows]
        n = self.nrows
        out = Fraction(1)
        for pc in range(n):
            pivot_row = None
            for i in range(pc, n):
                if not scalar_is_zero(m[i][pc]):
                    pivot_row = i
                    break
            if pivot_row is None:
                return Fraction(0) * out
            if pivot_row != pc:
                m[pc], m[pivot_row] = m[pivot_row], m[pc]
                out = -out
            out = out * m[pc][pc]
            inv = m[pc][pc]
            for i in range(pc + 1, n):
                if not scalar_is_zero(m[i][pc]):
                    f = m[i][pc] / inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[pc])]
        return out

    def charpoly(self) -> list[Fraction]:
        """Coefficients of det(xI - M), ascending, via Faddeev-LeVerrier."""
        _square(self)
        n = self.nrows
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        mk = Matrix.identity(n)
        for k in range(1, n + 1):
            mk = self @ mk
            ck = -mk.trace() / k
            coeffs[n - k] = ck
            mk = mk + Matrix.identity(n) * ck
        return coeffs

    # -- conversions ---------------------------------------------------------

    def to_float(self):
        import numpy as np
        if self.is_real():
            return np.array([[float(a.re) if isinstance(a, CScalar) else float(a)
                              for a in r] for r in self.rows], dtype=float)
        return np.array([[scalar_to_float(a) for a in r] for r in self.rows],
                        dtype=complex)

    def max_abs_float(self) -> float:
        return max((abs(scalar_to_float(a)) for r in self.rows for a in r),
                   default=0.0)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of an exact linear solve A x = b.

    Either `solution` is a vector with A @ solution == b, or `certificate`
    is a row y with y A = 0 and y . b != 0 (so the system is infeasible).
    `kernel` always holds an exact basis of ker A.
    """

    solution: tuple | None
    kernel: list[tuple]
    certificate: tuple | None

    @property
    def feasible(self) -> bool:
        return self.solution is not None


def solve_linear(a: Matrix, b: Sequence) -> LinearSolution:
    """Exact solution set of A x = b with infeasibility certificate."""
    if len(b) != a.nrows:
        raise ValueError("right-hand side length mismatch")
    r, t, pivots = a.rref()
    tb = t.matvec(tuple(_coerce(x) for x in b))
    nrank = len(pivots)
    for i in range(nrank, a.nrows):
        if not scalar_is_zero(tb[i]):
            return LinearSolution(None, a.nullspace(), t.row(i))
    x = [Fraction(0)] * a.ncols
    for i, pc in enumerate(pivots):
        x[pc] = tb[i]
    return LinearSolution(tuple(x), a.nullspace(), None)


def solve_particular(rows: Sequence[Sequence], b: Sequence) -> tuple | None:
    """One exact solution of A x = b, or None; no certificate, no kernel.

    Lighter than solve_linear (no transform tracking); zero rows are
    skipped up front.  Free variables are set to 0.
    """
    aug = []
    for r, bv in zip(rows, b):
        bv = _coerce(bv)
        if all(scalar_is_zero(_coerce(x)) for x in r):
            if not scalar_is_zero(bv):
                return None
            continue
        aug.append([_coerce(x) for x in r] + [bv])
    if not aug:
        return tuple(Fraction(0) for _ in rows[0]) if rows else ()
    ncols = len(aug[0]) - 1
    pivots = []
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for i in range(pr, len(aug)):
            if not scalar_is_zero(aug[i][pc]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[pr], aug[pivot_row] = aug[pivot_row], aug[pr]
        inv = aug[pr][pc]
        aug[pr] = [x / inv for x in aug[pr]]
        for i in range(len(aug)):
            if i != pr and not scalar_is_zero(aug[i][pc]):
                f = aug[i][pc]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[pr])]
        pivots.append(pc)
        pr += 1
        if pr == len(aug):
            break
    for i in range(pr, len(aug)):
        if not scalar_is_zero(aug[i][ncols]):
            return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = aug[i][ncols]
    return tuple(x)


def mat_from_vectors(vectors: Sequence[Sequence]) -> Matrix:
    """Matrix whose columns are the given vectors."""
    return Matrix.from_cols([tuple(v) for v in vectors])


def dot(u: Sequence, v: Sequence) -> Scalar:
    return _dot(u, v)


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(s, v: Sequence) -> tuple:
    s = _coerce(s)
    return tuple(s * a for a in v)


def vec_is_zero(v: Sequence) -> bool:
    return all(scalar_is_zero(a) for a in v)


def primitive_rational_vector(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale a rational vector to coprime integers, first nonzero positive."""
    nz = [a for a in v if a != 0]
    if not nz:
        return tuple(Fraction(0) for _ in v)
    from math import lcm
    den = 1
    for a in v:
        den = lcm(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


# -- internal helpers ---------------------------------------------------------

def _coerce(x) -> Scalar:
    if isinstance(x, (Fraction, CScalar)):
        return x
    if isinstance(x, (int, str)):
        return Q(x)
    if isinstance(x, complex):
        raise TypeError("floats are not allowed in exact matrices")
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact matrices")
    raise TypeError(f"unsupported matrix entry {x!r}")


def _dot(u: Sequence, v: Sequence) -> Scalar:
    out = None
    for a, b in zip(u, v):
        p = a * b
        out = p if out is None else out + p
    return Fraction(0) if out is None else out


def _same_shape(a: Matrix, b: Matrix):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def _square(a: Matrix):
    if a.nrows != a.ncols:
        raise ValueError(f"matrix not square: {a.shape}")


def _bareiss_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    # Clear denominators row by row (does not change the rank), then run
    # fraction-free elimination on integers.
    from math import lcm
    m = []
    for r in rows:
        den = 1
        for a in r:
            den = lcm(den, a.denominator)
        m.append([int(a * den) for a in r])
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(nc):
        pivot_row = None
        for i in range(row, nr):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        for i in range(row + 1, nr):
            for j in range(col + 1, nc):
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) // prev
            m[i][col] = 0
        prev = m[row][col]
        rank += 1
        row += 1
        if row == nr:
            break
    return rank
