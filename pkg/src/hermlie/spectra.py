"""Exact spectra of small rational matrices.

char_poly_spectrum factors det(xI - M) over Q (sympy does the
factorization), reports rational eigenvalues with Jordan data, irreducible
quadratic factors with negative discriminant as exact complex pairs, and
falls back to numeric roots (tagged with a tolerance) for anything that
does not factor into linear/quadratic pieces over Q.

normal_block_diagonalize realizes the spectral theorem for normal
operators: an orthogonal Q with Qt M Q = diag(real eigenvalues, 2x2
rotation-scaling blocks).  It stays exact whenever the required square
roots are rational and otherwise switches to floats under an explicit
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .linalg import Matrix, mat_from_vectors
from .scalars import rat_sqrt

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class RationalEigenvalue:
    value: Fraction
    multiplicity: int
    max_jordan: int
    partition: tuple[int, ...]  # Jordan block sizes, descending


@dataclass(frozen=True)
class QuadraticFactor:
    """Irreducible monic factor x^2 + b x + c with negative discriminant.

    Roots are u +/- i*w with u = -b/2 rational and w^2 = c - b^2/4 > 0.
    `w` is filled in when it is itself rational (always the case for the
    catalog algebras), else None.
    """

    b: Fraction
    c: Fraction
    multiplicity: int
    max_jordan: int
    partition: tuple[int, ...]  # sizes of conjugate block pairs, descending

    @property
    def u(self) -> Fraction:
        return -self.b / 2

    @property
    def w2(self) -> Fraction:
        return self.c - self.b * self.b / 4

    @property
    def w(self) -> Fraction | None:
        return rat_sqrt(self.w2)


@dataclass(frozen=True)
class SpectrumReport:
    dim: int
    rational_eigenvalues: list[RationalEigenvalue]
    quadratic_factors: list[QuadraticFactor]
    numeric_eigenvalues: list[complex]
    numeric_tol: float | None  # None when the factorization is fully exact

    @property
    def exact(self) -> bool:
        return not self.numeric_eigenvalues


def charpoly_sympy(m: Matrix) -> sympy.Poly:
    coeffs = m.charpoly()  # ascending
    x = sympy.Symbol("x")
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                       for c in reversed(coeffs)], x, domain="QQ")


def _jordan_partition_from_kernels(kdims: list[int]) -> tuple[int, ...]:
    # kdims[j-1] = dim ker p(M)^j (divided by the factor degree for
    # quadratics); the number of blocks of size >= j is the j-th difference.
    counts = []
    prev = 0
    for d in kdims:
        counts.append(d - prev)
        prev = d
    partition = []
    for j in range(len(counts)):
        n_ge = counts[j]
        n_ge_next = counts[j + 1] if j + 1 < len(counts) else 0
        partition.extend([j + 1] * (n_ge - n_ge_next))
    return tuple(sorted(partition, reverse=True))


def _kernel_dims(m: Matrix, p: Matrix, mult: int) -> list[int]:
    """dim ker p(M)^j for j = 1..mult (p given as the evaluated matrix)."""
    n = m.nrows
    dims = []
    power = Matrix.identity(n)
    for _ in range(mult):
        power = power @ p
        dims.append(n - power.rank())
    return dims


def _eval_poly_at_matrix(poly: sympy.Poly, m: Matrix) -> Matrix:
    coeffs = [Fraction(str(c)) for c in poly.all_coeffs()]  # descending
    out = Matrix.zero(m.nrows)
    for c in coeffs:
        out = out @ m + Matrix.identity(m.nrows) * c
    return out


def char_poly_spectrum(m: Matrix, tol: float = DEFAULT_TOL) -> SpectrumReport:
    """Full exact factorization of the characteristic polynomial of M.

    Jordan block sizes come from exact ranks of p(M)^j.  Factors that are
    neither linear nor complex-quadratic over Q are handed to a numeric
    root finder and tagged with `tol`.
    """
    if m.nrows != m.ncols:
        raise ValueError("char_poly_spectrum requires a square matrix")
    if not m.is_real():
        raise ValueError("char_poly_spectrum works on rational matrices")
    poly = charpoly_sympy(m)
    _, factors = poly.factor_list()
    rat: list[RationalEigenvalue] = []
    quad: list[QuadraticFactor] = []
    numeric: list[complex] = []
    for fac, mult in factors:
        fac = sympy.Poly(fac, poly.gen)
        deg = fac.degree()
        if deg == 1:
            a1, a0 = [Fraction(str(c)) for c in fac.all_coeffs()]
            lam = -a0 / a1
            pm = m - Matrix.identity(m.nrows) * lam
            kdims = _kernel_dims(m, pm, mult)
            part = _jordan_partition_from_kernels(kdims)
            rat.append(RationalEigenvalue(lam, mult, max(part), part))
        elif deg == 2:
            a2, b, c = [Fraction(str(co)) for co in fac.all_coeffs()]
            b, c = b / a2, c / a2
            disc = b * b - 4 * c
            if disc < 0:
                pm = _eval_poly_at_matrix(sympy.Poly([1, b, c], poly.gen), m)
                kdims = _kernel_dims(m, pm, mult)
                part = _jordan_partition_from_kernels([d // 2 for d in kdims])
                quad.append(QuadraticFactor(b, c, mult, max(part), part))
            else:
                numeric.extend(_numeric_roots(fac, mult))
        else:
            numeric.extend(_numeric_roots(fac, mult))
    rat.sort(key=lambda e: e.value)
    quad.sort(key=lambda q: (q.u, q.w2))
    count = sum(e.multiplicity for e in rat) + 2 * sum(q.multiplicity for q in quad)
    count += len(numeric)
    assert count == m.nrows, "multiplicities must sum to the dimension"
    return SpectrumReport(m.nrows, rat, quad, numeric,
                          tol if numeric else None)


def _numeric_roots(fac: sympy.Poly, mult: int) -> list[complex]:
    import numpy as np
    coeffs = [float(c) for c in fac.all_coeffs()]
    roots = np.roots(coeffs)
    return [complex(r) for r in roots] * mult


def eigenvalue_pairs(report: SpectrumReport) -> list[tuple[complex, int]]:
    """All eigenvalues as (complex value, multiplicity); exact ones first."""
    out: list[tuple[complex, int]] = []
    for e in report.rational_eigenvalues:
        out.append((complex(float(e.value), 0.0), e.multiplicity))
    for q in report.quadratic_factors:
        w2 = q.w2
        w = float(w2) ** 0.5
        out.append((complex(float(q.u), w), q.multiplicity))
        out.append((complex(float(q.u), -w), q.multiplicity))
    for z in report.numeric_eigenvalues:
        out.append((z, 1))
    return out


def are_similar(a: Matrix, b: Matrix) -> bool:
    """Exact similarity test over Q via invariant (Jordan) data.

    Two rational matrices are similar over Q iff they have the same
    characteristic polynomial and, for every irreducible factor p and
    every j, equal ranks of p(.)^j.
    """
    if a.shape != b.shape:
        return False
    pa, pb = charpoly_sympy(a), charpoly_sympy(b)
    if pa != pb:
        return False
    _, factors = pa.factor_list()
    for fac, mult in factors:
        fac = sympy.Poly(fac, pa.gen)
        if mult == 1:
            continue
        fa = _eval_poly_at_matrix(fac, a)
        fb = _eval_poly_at_matrix(fac, b)
        power_a = Matrix.identity(a.nrows)
        power_b = Matrix.identity(b.nrows)
        for _ in range(mult):
            power_a = power_a @ fa
            power_b = power_b @ fb
            if power_a.rank() != power_b.rank():
                return False
    return True


class NotNormalError(ValueError):
    def __init__(self, i: int, j: int, value: Fraction):
        self.position = (i, j)
        self.value = value
        super().__init__(
            f"matrix is not normal: [M, Mt] has entry {value} at {(i, j)}")


@dataclass(frozen=True)
class NormalBlockResult:
    """Output of normal_block_diagonalize.

    In exact mode q/d are rational with Qt Q = I and Qt M Q = D exactly and
    residual == 0.  In numeric mode q/d are float arrays wrapped back into
    plain nested lists is avoided; they are numpy arrays, and residual is
    the achieved max-norm defect, guaranteed <= tol.
    """

    q: object
    d: object
    exact: bool
    tol: float
    residual: float
    blocks: list[tuple] = field(default_factory=list)


def normal_block_diagonalize(m: Matrix, tol: float = DEFAULT_TOL) -> NormalBlockResult:
    """Orthogonal block diagonalization of an exactly normal matrix."""
    if m.nrows != m.ncols:
        raise ValueError("matrix must be square")
    comm = m @ m.T - m.T @ m
    for i in range(m.nrows):
        for j in range(m.ncols):
            if comm[i, j] != 0:
                raise NotNormalError(i, j, comm[i, j])
    report = char_poly_spectrum(m, tol)
    if not report.exact:
        return _numeric_block_diagonalize(m, tol)
    cols: list[tuple] = []
    norms2: list[Fraction] = []
    blocks: list[tuple] = []
    n = m.nrows
    for eig in report.rational_eigenvalues:
        space = (m - Matrix.identity(n) * eig.value).nullspace()
        ortho = _gram_schmidt(space)
        for v in ortho:
            cols.append(v)
            norms2.append(_sq(v))
            blocks.append((eig.value,))
    for q in report.quadratic_factors:
        w = q.w
        if w is None:
            return _numeric_block_diagonalize(m, tol)
        pm = _eval_poly_at_matrix(
            sympy.Poly([1, q.b, q.c], sympy.Symbol("x")), m)
        space = pm.nullspace()
        taken: list[tuple] = []
        for cand in space:
            v = _project_out(cand, taken)
            if all(x == 0 for x in v):
                continue
            # y = (u x - M x)/w gives the canonical [[u, w], [-w, u]] block
            mx = m.matvec(v)
            y = tuple((q.u * a - b) / w for a, b in zip(v, mx))
            taken.extend([v, y])
            cols.extend([v, y])
            norms2.extend([_sq(v), _sq(y)])
            blocks.append((q.u, w))
            if len(taken) == len(space):
                break
    scales = [rat_sqrt(n2) for n2 in norms2]
    if any(s is None for s in scales):
        return _numeric_block_diagonalize(m, tol)
    qmat = mat_from_vectors([tuple(x / s for x in c)
                             for c, s in zip(cols, scales)])
    d = qmat.T @ m @ qmat
    assert (qmat.T @ qmat) == Matrix.identity(n)
    return NormalBlockResult(qmat, d, True, tol, 0.0, blocks)


def _numeric_block_diagonalize(m: Matrix, tol: float) -> NormalBlockResult:
    import numpy as np
    from scipy.linalg import schur
    a = m.to_float()
    t, z = schur(a, output="real")
    # Real Schur of a normal matrix is block diagonal; canonicalize the 2x2
    # blocks to [[a, b], [-b, a]] with b > 0.
    n = a.shape[0]
    i = 0
    blocks = []
    while i < n:
        if i + 1 < n and abs(t[i + 1, i]) > tol:
            if t[i, i + 1] < 0:
                z[:, i + 1] *= -1
                t[:, i + 1] *= -1
                t[i + 1, :] *= -1
            blocks.append((t[i, i], t[i, i + 1]))
            i += 2
        else:
            blocks.append((t[i, i],))
            i += 1
    d = z.T @ a @ z
    dd = np.zeros_like(d)
    i = 0
    for blk in blocks:
        if len(blk) == 1:
            dd[i, i] = d[i, i]
            i += 1
        else:
            dd[i:i + 2, i:i + 2] = d[i:i + 2, i:i + 2]
            i += 2
    residual = float(np.max(np.abs(d - dd)))
    if residual > tol:
        raise ArithmeticError(
            f"numeric block diagonalization residual {residual} exceeds {tol}")
    return NormalBlockResult(z, dd, False, tol, residual, blocks)


def _gram_schmidt(vectors: list[tuple]) -> list[tuple]:
    out: list[tuple] = []
    for v in vectors:
        r = _project_out(v, out)
        if any(x != 0 for x in r):
            out.append(r)
    return out


def _project_out(v: tuple, basis: list[tuple]) -> tuple:
    r = list(v)
    for b in basis:
        nb = _sq(b)
        coef = sum(x * y for x, y in zip(r, b)) / nb
        r = [x - coef * y for x, y in zip(r, b)]
    return tuple(r)


def _sq(v: tuple) -> Fraction:
    return sum(x * x for x in v)
