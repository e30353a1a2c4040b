"""Complex frame computations for Hermitian almost abelian data.

Everything here lives in the fixed frame Z1 = e1 - i e6, Z2 = e2 - i e5,
Z3 = e3 - i e4 attached to an adapted orthonormal basis; callers with
other Hermitian structures must first pass through adapted_data.  The
module provides the closed-form matrices of dbar on (1,0)- and
(2,0)-vectors and of the Schouten bracket, brute-force oracles for all
three straight from the structure constants, and the holomorphic Poisson
solver (kernel of dbar intersected with the isotropic cone of the
Schouten form).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .liealg import AlmostAbelianData, LieAlgebra, from_almost_abelian
from .linalg import Matrix, mat_from_vectors
from .scalars import CScalar, CZERO, I as IMAG, as_cscalar


@dataclass(frozen=True)
class DolbeaultData:
    """The scalars (a, w1..w4, alpha, beta) read off (a, v, A)."""

    a: Fraction
    w1: CScalar
    w2: CScalar
    w3: CScalar
    w4: CScalar
    alpha: CScalar
    beta: CScalar

    @staticmethod
    def from_data(d: AlmostAbelianData) -> "DolbeaultData":
        if not d.commutes_with_j1():
            raise ValueError("A does not commute with J1; data is not Hermitian")
        A, v = d.A, d.v
        return DolbeaultData(
            a=d.a,
            w1=CScalar(A[0, 0], -A[0, 3]),
            w2=CScalar(A[0, 1], -A[0, 2]),
            w3=CScalar(A[1, 0], -A[1, 3]),
            w4=CScalar(A[1, 1], -A[1, 2]),
            alpha=CScalar(v[0], v[3]),
            beta=CScalar(v[1], v[2]),
        )

    def to_almost_abelian(self) -> AlmostAbelianData:
        A = Matrix([
            [self.w1.re, self.w2.re, -self.w2.im, -self.w1.im],
            [self.w3.re, self.w4.re, -self.w4.im, -self.w3.im],
            [self.w3.im, self.w4.im, self.w4.re, self.w3.re],
            [self.w1.im, self.w2.im, self.w2.re, self.w1.re],
        ])
        v = (self.alpha.re, self.beta.re, self.beta.im, self.alpha.im)
        return AlmostAbelianData(self.a, v, A)


def dolbeault_matrices(dd: DolbeaultData) -> tuple[Matrix, Matrix, Matrix]:
    """(M10, M20, S): dbar_{Zbar1} on g^{1,0} and g^{2,0}, Schouten form.

    Bases: (Z1, Z2, Z3) and (Z1^Z2, Z1^Z3, Z2^Z3).
    """
    i = IMAG
    a = CScalar(dd.a)
    m10 = Matrix([[i * a, CZERO, CZERO],
                  [i * dd.alpha, i * dd.w1, i * dd.w2],
                  [i * dd.beta, i * dd.w3, i * dd.w4]])
    m20 = Matrix([[i * (a + dd.w1), i * dd.w2, CZERO],
                  [i * dd.w3, i * (a + dd.w4), CZERO],
                  [-i * dd.beta, i * dd.alpha, i * (dd.w1 + dd.w4)]])
    s = Matrix([[-2 * i * dd.w3, i * (dd.w1 - dd.w4), CZERO],
                [i * (dd.w1 - dd.w4), 2 * i * dd.w2, CZERO],
                [CZERO, CZERO, CZERO]])
    return m10, m20, s


def det_m20_closed_form(dd: DolbeaultData) -> CScalar:
    """det of dbar on (2,0): -i [(a + w1)(a + w4) - w2 w3] (w1 + w4).

    In the block-normal frame (w2 = w3 = 0, the spectral-theorem shape
    every SKT A can be brought to) this reduces to the three-factor
    product -i (a + w1)(a + w4)(w1 + w4).
    """
    a = CScalar(dd.a)
    return -IMAG * ((a + dd.w1) * (a + dd.w4) - dd.w2 * dd.w3) * (dd.w1 + dd.w4)


# -- brute-force oracles from structure constants ----------------------------------

def z_frame_vectors(n: int = 6) -> list[tuple]:
    """Z1, Z2, Z3, conj(Z1..Z3) as CScalar coefficient vectors."""
    def vec(re_idx, im_idx, sign):
        out = [CZERO] * n
        out[re_idx] = CScalar(1)
        out[im_idx] = CScalar(0, sign)
        return tuple(out)
    zs = [vec(0, 5, -1), vec(1, 4, -1), vec(2, 3, -1)]
    zbars = [tuple(c.conjugate() for c in z) for z in zs]
    return zs + zbars


def _frame_matrix() -> Matrix:
    return mat_from_vectors(z_frame_vectors())


def complex_bracket(alg: LieAlgebra, x: tuple, y: tuple) -> tuple:
    return alg.bracket_vec(x, y)


def m10_oracle(alg: LieAlgebra) -> Matrix:
    """dbar_{Zbar1} on (Z1, Z2, Z3) computed as [Zbar1, .]^{1,0}."""
    frame = _frame_matrix()
    inv = frame.inverse()
    zs = z_frame_vectors()
    cols = []
    for j in range(3):
        w = complex_bracket(alg, zs[3], zs[j])
        coords = inv.matvec(w)
        cols.append(tuple(coords[:3]))
    return mat_from_vectors(cols)


def m20_oracle(alg: LieAlgebra) -> Matrix:
    """dbar_{Zbar1} on (Z1^Z2, Z1^Z3, Z2^Z3) via the derivation rule."""
    m10 = m10_oracle(alg)
    pairs = [(0, 1), (0, 2), (1, 2)]
    cols = []
    for (a, b) in pairs:
        # dbar(Z_a ^ Z_b) = (dbar Z_a) ^ Z_b + Z_a ^ (dbar Z_b)
        acc = {p: CZERO for p in pairs}
        for c in range(3):
            _accumulate_wedge(acc, m10[c, a], c, b, pairs)
            _accumulate_wedge(acc, m10[c, b], a, c, pairs)
        cols.append(tuple(acc[p] for p in pairs))
    return mat_from_vectors(cols)


def _accumulate_wedge(acc, coeff, i, j, pairs):
    if coeff.is_zero() or i == j:
        return
    if i < j:
        acc[(i, j)] = acc[(i, j)] + coeff
    else:
        acc[(j, i)] = acc[(j, i)] - coeff


def schouten_oracle(alg: LieAlgebra, pi: "Bivector20",
                    sigma: "Bivector20" | None = None) -> CScalar:
    """Z1^Z2^Z3 coefficient of [pi, sigma] via the raw Schouten expansion.

    [X0^X1, Y0^Y1] = sum_{j,k mod 2} (-1)^{j+k} [Xj, Yk] ^ X_{j+1} ^ Y_{k+1}.
    """
    sigma = pi if sigma is None else sigma
    zs = z_frame_vectors()
    frame_inv = _frame_matrix().inverse()
    pairs = [(0, 1), (0, 2), (1, 2)]
    total = CZERO
    for (pa, pb), cp in zip(pairs, pi.components):
        if cp.is_zero():
            continue
        for (qa, qb), cq in zip(pairs, sigma.components):
            if cq.is_zero():
                continue
            x = [zs[pa], zs[pb]]
            y = [zs[qa], zs[qb]]
            for j in range(2):
                for k in range(2):
                    br = complex_bracket(alg, x[j], y[k])
                    coords = frame_inv.matvec(br)
                    # trivector coefficient on Z1^Z2^Z3
                    coef = _wedge3_coefficient(coords, x[(j + 1) % 2],
                                               y[(k + 1) % 2], frame_inv)
                    if (j + k) % 2:
                        coef = -coef
                    total = total + cp * cq * coef
    return total


def _wedge3_coefficient(coords_a, vec_b, vec_c, frame_inv) -> CScalar:
    cb = frame_inv.matvec(vec_b)
    cc = frame_inv.matvec(vec_c)
    # determinant of the (Z1, Z2, Z3) components
    rows = [tuple(coords_a[:3]), tuple(cb[:3]), tuple(cc[:3])]
    return (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
            - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
            + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))


# -- bivectors ---------------------------------------------------------------------

@dataclass(frozen=True)
class Bivector20:
    """(2,0)-bivector x Z1^Z2 + y Z1^Z3 + z Z2^Z3."""

    components: tuple[CScalar, CScalar, CScalar]

    @staticmethod
    def of(x, y, z) -> "Bivector20":
        return Bivector20((as_cscalar(x), as_cscalar(y), as_cscalar(z)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def complex_matrix(self) -> dict:
        """Expansion in e_i ^ e_j (0-based pairs), complex coefficients."""
        zs = z_frame_vectors()
        pairs = [(0, 1), (0, 2), (1, 2)]
        out: dict[tuple[int, int], CScalar] = {}
        for (a, b), c in zip(pairs, self.components):
            if c.is_zero():
                continue
            x, y = zs[a], zs[b]
            for i in range(6):
                for j in range(i + 1, 6):
                    w = x[i] * y[j] - x[j] * y[i]
                    if not w.is_zero():
                        out[(i, j)] = out.get((i, j), CZERO) + c * w
        return {k: v for k, v in out.items() if not v.is_zero()}

    def scale(self, s) -> "Bivector20":
        s = as_cscalar(s)
        return Bivector20(tuple(c * s for c in self.components))


@dataclass(frozen=True)
class PoissonSpace:
    """Holomorphic Poisson structures for a Dolbeault data set.

    `kernel` is an exact basis of ker(dbar on (2,0)); `representatives`
    generate the Poisson locus when it is a linear subspace (`is_linear`),
    else they span the cone's vertex set and `quadric` carries the
    restricted Schouten form for the caller.
    """

    kernel: list[Bivector20]
    representatives: list[Bivector20]
    span_dim: int
    is_linear: bool
    quadric: Matrix | None


def holomorphic_poisson_space(dd: DolbeaultData) -> PoissonSpace:
    """ker(M20) intersected with the isotropic cone of the Schouten form."""
    _, m20, s = dolbeault_matrices(dd)
    kernel_vecs = m20.nullspace()
    kernel = [Bivector20(tuple(as_cscalar(x) for x in v)) for v in kernel_vecs]
    if not kernel:
        return PoissonSpace([], [], 0, True, None)
    k = len(kernel_vecs)
    basis = mat_from_vectors(kernel_vecs)  # 3 x k
    q = basis.T @ s @ basis
    if q.is_zero():
        return PoissonSpace(kernel, kernel, k, True, None)
    radical = q.nullspace()
    rank = k - len(radical)
    reps = [_combine(kernel_vecs, r) for r in radical]
    if rank == 1:
        # q = c l^2: the zero locus inside the kernel is exactly the radical
        return PoissonSpace(kernel, reps, len(reps), True, q)
    return PoissonSpace(kernel, reps, len(reps), False, q)


def _combine(kernel_vecs: list[tuple], coords: tuple) -> Bivector20:
    out = [CZERO, CZERO, CZERO]
    for c, vec in zip(coords, kernel_vecs):
        for i in range(3):
            out[i] = out[i] + as_cscalar(c) * as_cscalar(vec[i])
    return Bivector20(tuple(out))


def schouten_bracket_check(pi: Bivector20, dd: DolbeaultData) -> CScalar:
    """pi^t S pi, asserted equal to the brute-force Schouten expansion."""
    _, _, s = dolbeault_matrices(dd)
    v = pi.components
    quick = CZERO
    for i in range(3):
        for j in range(3):
            quick = quick + v[i] * s[i, j] * v[j]
    alg = from_almost_abelian(dd.to_almost_abelian())
    brute = schouten_oracle(alg, pi)
    assert quick == brute, "Schouten matrix disagrees with the raw expansion"
    return quick


def apply_m20(dd: DolbeaultData, pi: Bivector20) -> tuple:
    _, m20, _ = dolbeault_matrices(dd)
    return m20.matvec(pi.components)
