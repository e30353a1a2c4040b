"""Lie algebras as exact structure constants, and almost abelian data.

Sign convention: structure equations are read with da(X, Y) = -a([X, Y]),
so "df1 = f1 ^ f6" means [f1, f6] = -f1, i.e. ad_{f6} f1 = f1.  An almost
abelian algebra is stored through the matrix B of ad_{e6} restricted to
the codimension-one abelian ideal h = span<e1..e5>.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import (Matrix, mat_from_vectors, primitive_rational_vector,
                     solve_particular, vec_is_zero)
from .scalars import Q, rat_sqrt

# J restricted to h1 in an adapted basis (e2, e3, e4, e5):
# J e2 = e5, J e3 = e4.
J1_STANDARD = Matrix([[0, 0, 0, -1],
                      [0, 0, -1, 0],
                      [0, 1, 0, 0],
                      [1, 0, 0, 0]])


class JacobiError(ValueError):
    pass


class NotAlmostAbelianError(ValueError):
    pass


class HermitianCompatibilityError(ValueError):
    """(J, g) is not Hermitian for this algebra (w != 0 or [A, J1] != 0)."""

    def __init__(self, message, w=None, commutator=None):
        super().__init__(message)
        self.w = w
        self.commutator = commutator


class LieAlgebra:
    """Finite-dimensional Lie algebra given by exact structure constants.

    `c[i][j]` is the coefficient tuple of [e_i, e_j]; antisymmetry is
    enforced structurally and the Jacobi identity is verified at
    construction time.
    """

    __slots__ = ("dim", "c", "labels")

    def __init__(self, dim: int, brackets: dict[tuple[int, int], Sequence],
                 labels: Sequence[str] | None = None, _check: bool = True):
        c = [[tuple(Fraction(0) for _ in range(dim)) for _ in range(dim)]
             for _ in range(dim)]
        for (i, j), vec in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket key must have 0 <= i < j < dim, got {(i, j)}")
            v = tuple(Q(x) if not isinstance(x, Fraction) else x for x in vec)
            if len(v) != dim:
                raise ValueError("bracket value has wrong length")
            c[i][j] = v
            c[j][i] = tuple(-x for x in v)
        self.c = tuple(tuple(row) for row in c)
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple(
            f"f{i + 1}" for i in range(dim))
        if _check:
            self._check_jacobi()

    def _check_jacobi(self):
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = self.bracket_vec(self.c[i][j], _unit(n, k))
                    s = _vadd(s, self.bracket_vec(self.c[j][k], _unit(n, i)))
                    s = _vadd(s, self.bracket_vec(self.c[k][i], _unit(n, j)))
                    if not vec_is_zero(s):
                        raise JacobiError(
                            f"Jacobi identity fails on basis triple {(i, j, k)}")

    # -- brackets ------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.c[i][j]

    def bracket_vec(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                coef = x[i] * y[j]
                cij = self.c[i][j]
                for k in range(n):
                    if cij[k] != 0:
                        out[k] += coef * cij[k]
        return tuple(out)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ad_x on the whole algebra."""
        cols = [self.bracket_vec(x, _unit(self.dim, j)) for j in range(self.dim)]
        return mat_from_vectors(cols)

    # -- structural predicates -------------------------------------------------

    def derived_vectors(self) -> list[tuple]:
        return [self.c[i][j] for i in range(self.dim)
                for j in range(i + 1, self.dim)
                if not vec_is_zero(self.c[i][j])]

    def derived_dim(self) -> int:
        vecs = self.derived_vectors()
        if not vecs:
            return 0
        return mat_from_vectors(vecs).rank()

    def is_abelian(self) -> bool:
        return self.derived_dim() == 0

    def is_nilpotent(self) -> bool:
        # lower central series; its terms decrease, so a stalled rank means
        # the series has stabilized at a nonzero ideal
        current = self.derived_vectors()
        prev_rank = None
        while True:
            rank = mat_from_vectors(current).rank() if current else 0
            if rank == 0:
                return True
            if rank == prev_rank:
                return False
            prev_rank = rank
            nxt = []
            for i in range(self.dim):
                e = _unit(self.dim, i)
                for v in current:
                    w = self.bracket_vec(e, v)
                    if not vec_is_zero(w):
                        nxt.append(w)
            current = nxt

    def to_json(self) -> str:
        terms = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(self.dim):
                    x = self.c[i][j][k]
                    if x != 0:
                        terms.append([i + 1, j + 1, k + 1,
                                      x.numerator, x.denominator])
        return json.dumps({"dim": self.dim, "c": terms, "labels": list(self.labels)})

    @staticmethod
    def from_json(text: str) -> "LieAlgebra":
        doc = json.loads(text)
        dim = doc["dim"]
        brackets: dict[tuple[int, int], list] = {}
        for i, j, k, num, den in doc["c"]:
            key = (i - 1, j - 1)
            vec = brackets.setdefault(key, [Fraction(0)] * dim)
            vec[k - 1] = Fraction(num, den)
        return LieAlgebra(dim, brackets, doc.get("labels"))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim})"


def algebra_from_structure_equations(
        eqs: Sequence[Sequence[tuple]], labels: Sequence[str] | None = None,
) -> LieAlgebra:
    """Build an algebra from structure equations df^k = sum coeff f^i ^ f^j.

    `eqs[k-1]` lists (coeff, i, j) terms with 1-based i < j.  The bracket
    follows from da(X, Y) = -a([X, Y]).
    """
    dim = len(eqs)
    brackets: dict[tuple[int, int], list] = {}
    for k, terms in enumerate(eqs):
        for coeff, i, j in terms:
            if not (1 <= i < j <= dim):
                raise ValueError(f"bad term indices {(i, j)} in df^{k + 1}")
            vec = brackets.setdefault((i - 1, j - 1), [Fraction(0)] * dim)
            vec[k] -= Q(coeff)
    return LieAlgebra(dim, brackets, labels)


@dataclass(frozen=True)
class AlmostAbelianData:
    """The triple (a, v, A) encoding B = [[a, 0], [v, A]] = ad_{e6}|_h.

    The frame is orthonormal and adapted: h1 = span<e2..e5>, J e1 = e6,
    J e2 = e5, J e3 = e4.  Hermitian compatibility ([A, J1] = 0) is a
    property of the data, not an invariant of the type.
    """

    a: Fraction
    v: tuple[Fraction, ...]
    A: Matrix

    def __post_init__(self):
        object.__setattr__(self, "a", Q(self.a))
        object.__setattr__(self, "v", tuple(Q(x) for x in self.v))
        if self.A.nrows != self.A.ncols or self.A.nrows != len(self.v):
            raise ValueError("inconsistent (v, A) dimensions")

    @property
    def half_dim(self) -> int:
        return (len(self.v) + 2) // 2

    @property
    def dim(self) -> int:
        return len(self.v) + 2

    def b_matrix(self) -> Matrix:
        n = len(self.v) + 1
        rows = [[self.a] + [Fraction(0)] * (n - 1)]
        for i, vi in enumerate(self.v):
            rows.append([vi] + list(self.A.row(i)))
        return Matrix(rows)

    def commutes_with_j1(self) -> bool:
        return self.A.commutator(J1_STANDARD).is_zero()


def from_almost_abelian(data: AlmostAbelianData,
                        labels: Sequence[str] | None = None) -> LieAlgebra:
    """Algebra with [e_{2n}, x] = B x on the abelian ideal span<e1..e_{2n-1}>."""
    b = data.b_matrix()
    dim = data.dim
    brackets = {}
    for i in range(dim - 1):
        col = b.col(i)
        vec = [-x for x in col] + [Fraction(0)]
        if not vec_is_zero(vec):
            brackets[(i, dim - 1)] = vec
    return LieAlgebra(dim, brackets, labels)


def is_unimodular(alg: LieAlgebra) -> bool:
    """True iff every ad_x is traceless."""
    for i in range(alg.dim):
        tr = sum(alg.c[i][j][j] for j in range(alg.dim))
        if tr != 0:
            return False
    return True


def find_codim1_abelian_ideal(alg: LieAlgebra) -> Matrix | None:
    """A codimension-one abelian ideal as a (dim x dim-1) column basis.

    Hyperplanes are scanned as kernels of covectors normalized to 1 on a
    pivot coordinate; for a fixed pivot, "ker(lambda) is an abelian ideal"
    is a linear system in lambda, so the search is exact and complete.
    Pivots are tried from the last coordinate down, which makes
    span<e1..e_{n-1}> the preferred answer when it qualifies.
    """
    n = alg.dim
    for m in reversed(range(n)):
        others = [j for j in range(n) if j != m]
        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        # abelian: [e_i - l_i e_m, e_j - l_j e_m] = 0 for i < j (both != m)
        for ai, i in enumerate(others):
            for j in others[ai + 1:]:
                cij = alg.c[i][j]
                cim = alg.c[i][m]
                cjm = alg.c[j][m]
                for k in range(n):
                    row = [Fraction(0)] * (n - 1)
                    row[others.index(j)] = -cim[k]
                    row[ai] += cjm[k]
                    rows.append(row)
                    rhs.append(-cij[k])
        # ideal: lambda([e_m, e_j]) = 0 for j != m, with lambda_m = 1
        for j in others:
            cmj = alg.c[m][j]
            row = [cmj[k] for k in others]
            rows.append(row)
            rhs.append(-cmj[m])
        if not rows:
            lam = [Fraction(0)] * (n - 1)
        else:
            sol = solve_particular(rows, rhs)
            if sol is None:
                continue
            lam = list(sol)
        basis = []
        for idx, j in enumerate(others):
            u = [Fraction(0)] * n
            u[j] = Fraction(1)
            u[m] = -lam[idx]
            basis.append(tuple(u))
        h = mat_from_vectors(basis)
        assert _is_abelian_ideal(alg, basis), "internal: candidate failed recheck"
        return h
    return None


def _is_abelian_ideal(alg: LieAlgebra, basis: list[tuple]) -> bool:
    span = mat_from_vectors(basis)
    rank0 = span.rank()
    for a_i, x in enumerate(basis):
        for y in basis[a_i + 1:]:
            if not vec_is_zero(alg.bracket_vec(x, y)):
                return False
    for i in range(alg.dim):
        e = _unit(alg.dim, i)
        for x in basis:
            w = alg.bracket_vec(e, x)
            if vec_is_zero(w):
                continue
            aug = mat_from_vectors(basis + [w])
            if aug.rank() != rank0:
                return False
    return True


@dataclass(frozen=True)
class AdaptedFrame:
    """Result of adapted-basis extraction for a Hermitian pair (J, g).

    `frame` holds the g-orthogonal (generally non-unit) adapted vectors
    u1..u6 as columns, with J u1 = u6, J u2 = u5, J u3 = u4 exactly, and
    `norm_squares` their exact squared g-norms.  `b_raw` is ad_{u6}
    restricted to h in the u-basis.  When every needed square root is
    rational, `data` carries the orthonormal (a, v, A); otherwise it is
    None and `float_data()` provides the tagged numeric version.  All
    SKT/Kaehler criteria can be evaluated exactly from the raw form in
    either case (see hermitian.criteria_from_frame).
    """

    algebra: LieAlgebra
    frame: Matrix
    norm_squares: tuple[Fraction, ...]
    b_raw: Matrix
    data: AlmostAbelianData | None

    @property
    def exact(self) -> bool:
        return self.data is not None

    @property
    def a_raw(self) -> Fraction:
        return self.b_raw[0, 0]

    @property
    def v_raw(self) -> tuple[Fraction, ...]:
        return tuple(self.b_raw[i, 0] for i in range(1, 5))

    @property
    def a_matrix_raw(self) -> Matrix:
        return self.b_raw.submatrix(range(1, 5), range(1, 5))

    @property
    def gram_h1(self) -> Matrix:
        n = self.norm_squares
        return Matrix.diag([n[1], n[2], n[3], n[4]])

    @property
    def n6_squared(self) -> Fraction:
        return self.norm_squares[5]

    def float_data(self) -> tuple[float, tuple, list]:
        """(a, v, A) in the orthonormal frame, as floats."""
        import math
        n6 = math.sqrt(float(self.norm_squares[5]))
        ns = [math.sqrt(float(x)) for x in self.norm_squares]
        a = float(self.b_raw[0, 0]) / n6
        v = tuple(float(self.b_raw[i, 0]) * ns[0] / (ns[i] * n6)
                  for i in range(1, 5))
        amat = [[float(self.b_raw[i, j]) * ns[j] / (ns[i] * n6)
                 for j in range(1, 5)] for i in range(1, 5)]
        return a, v, amat


def adapted_data(alg: LieAlgebra, j: Matrix, g: Matrix) -> AdaptedFrame:
    """Extract (a, v, A) in an orthonormal basis adapted to Jk + h1 + k.

    Raises HermitianCompatibilityError when (J, g) is not Hermitian for
    this algebra (w != 0 or [A, J1] != 0), NotAlmostAbelianError when no
    codimension-one abelian ideal exists.
    """
    n = alg.dim
    _validate_hermitian_pair(j, g)
    h = find_codim1_abelian_ideal(alg)
    if h is None:
        raise NotAlmostAbelianError("no codimension-one abelian ideal")

    # k = h-perp: kernel of the 5x6 system (g . h_col)^t x = 0
    perp = (h.T @ g).nullspace()
    assert len(perp) == 1
    u6 = primitive_rational_vector(perp[0])
    u1 = tuple(-x for x in j.matvec(u6))

    # h1 = orthogonal complement of span(u1, u6)
    constraints = Matrix([g.matvec(u1), g.matvec(u6)])
    h1_basis = constraints.nullspace()
    assert len(h1_basis) == 4

    def inner(x, y):
        return sum(a * b for a, b in zip(g.matvec(x), y))

    u2 = primitive_rational_vector(h1_basis[0])
    u5 = tuple(j.matvec(u2))
    u3 = None
    for cand in h1_basis[1:]:
        r = list(cand)
        for b in (u2, u5):
            nb = inner(b, b)
            coef = inner(tuple(r), b) / nb
            r = [x - coef * y for x, y in zip(r, b)]
        if not vec_is_zero(r):
            u3 = primitive_rational_vector(r)
            break
    assert u3 is not None
    u4 = tuple(j.matvec(u3))

    frame_vecs = [u1, u2, u3, u4, u5, u6]
    frame = mat_from_vectors(frame_vecs)
    gram = frame.T @ g @ frame
    norms2 = tuple(gram[i, i] for i in range(6))
    for i in range(6):
        for jj in range(6):
            if i != jj and gram[i, jj] != 0:
                raise AssertionError("adapted frame is not g-orthogonal")

    # ad_{u6} restricted to h, in the u1..u5 coordinates
    hmat = frame.submatrix(range(6), range(5))
    cols = []
    for ui in frame_vecs[:5]:
        w = alg.bracket_vec(u6, ui)
        sol = solve_particular(hmat.rows, w)
        if sol is None:
            raise NotAlmostAbelianError("ad_{e6} does not preserve the ideal")
        cols.append(sol)
    b_raw = mat_from_vectors(cols)

    w_entries = tuple(b_raw[0, jj] for jj in range(1, 5))
    if any(x != 0 for x in w_entries):
        raise HermitianCompatibilityError(
            f"(J, g) is not Hermitian: w = {w_entries} != 0", w=w_entries)
    a_raw = b_raw.submatrix(range(1, 5), range(1, 5))
    comm = a_raw.commutator(J1_STANDARD)
    if not comm.is_zero():
        raise HermitianCompatibilityError(
            "(J, g) is not Hermitian: [A, J1] != 0", commutator=comm)

    data = None
    n6 = rat_sqrt(norms2[5])
    n2 = rat_sqrt(norms2[1])
    n3 = rat_sqrt(norms2[2])
    if n6 is not None and n2 is not None and n3 is not None:
        ns = [n6, n2, n3, n3, n2]  # norms of u1..u5 (|u1| = |u6| etc.)
        a = b_raw[0, 0] / n6
        v = tuple(b_raw[i, 0] * ns[0] / (ns[i] * n6) for i in range(1, 5))
        amat = Matrix([[b_raw[i, jj] * ns[jj] / (ns[i] * n6)
                        for jj in range(1, 5)] for i in range(1, 5)])
        data = AlmostAbelianData(a, v, amat)
    return AdaptedFrame(alg, frame, norms2, b_raw, data)


def _validate_hermitian_pair(j: Matrix, g: Matrix):
    n = j.nrows
    if (j @ j) != -Matrix.identity(n):
        raise ValueError("J^2 != -Id")
    if g.T != g:
        raise ValueError("metric is not symmetric")
    for k in range(1, n + 1):
        if g.submatrix(range(k), range(k)).det() <= 0:
            raise ValueError("metric is not positive definite")
    if (j.T @ g @ j) != g:
        raise ValueError("metric is not J-compatible")


def _unit(n: int, i: int) -> tuple:
    return tuple(Fraction(int(k == i)) for k in range(n))


def _vadd(x: Iterable, y: Iterable) -> tuple:
    return tuple(a + b for a, b in zip(x, y))
