"""Hermitian structures on Lie algebras: integrability, torsion, SKT/Kaehler.

The Bismut torsion of an integrable Hermitian pair is computed as
H(X, Y, Z) = d omega(JX, JY, JZ), i.e. -J d J omega with J acting on a
k-form through J^{-1} in every slot.  This orientation of d^c is the one
that reproduces the published torsion forms (H = f^{123} on the standard
SKT example); the opposite sign would negate every listed H.  For
integrable J it agrees with i(del - dbar) omega, which is also
implemented via an exact bidegree decomposition and asserted equal in
the tests.

The SKT/Kaehler verdict is computed twice: directly on forms (dH = 0,
d omega = 0) and through the adapted (a, v, A) criteria (A normal with
eigenvalue real parts in {0, -a/2}, equivalently a A + A^2 + At A skew;
A skew and v = 0 for Kaehler).  The two routes must agree exactly; a
mismatch raises RouteDisagreementError, which is an internal defect and
never a user error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import KForm, d
from .liealg import AdaptedFrame, LieAlgebra, adapted_data, _validate_hermitian_pair
from .linalg import Matrix, mat_from_vectors
from .scalars import CScalar, I as IMAG, Q
from .spectra import char_poly_spectrum


class RouteDisagreementError(AssertionError):
    """Direct form computation and (a, v, A) criterion disagree."""


class NotIntegrableError(ValueError):
    pass


@dataclass(frozen=True)
class HermitianStructure:
    """An almost complex structure with a compatible inner product."""

    j: Matrix
    g: Matrix

    def __post_init__(self):
        _validate_hermitian_pair(self.j, self.g)

    @property
    def dim(self) -> int:
        return self.j.nrows

    def omega(self) -> KForm:
        """Fundamental 2-form omega(x, y) = g(Jx, y)."""
        w = self.j.T @ self.g  # w[i][j] = g(J e_i, e_j)
        n = self.dim
        return KForm(n, 2, {(i, j): w[i, j] for i in range(n)
                            for j in range(i + 1, n)})


class NijenhuisTensor:
    """Vector-valued N(e_i, e_j); optionally lowered with a metric."""

    def __init__(self, alg: LieAlgebra, j: Matrix):
        n = alg.dim
        if (j @ j) != -Matrix.identity(n):
            raise ValueError("J^2 != -Id")
        jc = [j.col(i) for i in range(n)]
        vals = {}
        for a in range(n):
            for b in range(a + 1, n):
                ea = _unit(n, a)
                eb = _unit(n, b)
                t1 = alg.bracket_vec(jc[a], jc[b])
                t2 = j.matvec(alg.bracket_vec(jc[a], eb))
                t3 = j.matvec(alg.bracket_vec(ea, jc[b]))
                t4 = alg.bracket_basis(a, b)
                v = tuple(t1[k] - t2[k] - t3[k] - t4[k] for k in range(n))
                if any(x != 0 for x in v):
                    vals[(a, b)] = v
        self.dim = n
        self.values = vals

    def entry(self, i: int, j: int) -> tuple:
        zero = tuple(Fraction(0) for _ in range(self.dim))
        if i == j:
            return zero
        if i < j:
            return self.values.get((i, j), zero)
        return tuple(-x for x in self.entry(j, i))

    def lowered(self, g: Matrix, i: int, j: int, k: int) -> Fraction:
        """N(e_i, e_j, e_k) = g(N(e_i, e_j), e_k)."""
        v = self.entry(i, j)
        return sum(a * b for a, b in zip(g.matvec(v), _unit(self.dim, k)))

    def is_zero(self) -> bool:
        return not self.values


def nijenhuis(alg: LieAlgebra, j: Matrix) -> NijenhuisTensor:
    return NijenhuisTensor(alg, j)


def is_integrable(alg: LieAlgebra, j: Matrix) -> bool:
    return nijenhuis(alg, j).is_zero()


def bismut_torsion(alg: LieAlgebra, hs: HermitianStructure) -> KForm:
    """Torsion 3-form H = d^c omega = d omega(J., J., J.)."""
    if not is_integrable(alg, hs.j):
        raise NotIntegrableError(
            "J is not integrable; d^c has no bidegree meaning")
    domega = d(alg, hs.omega())
    return domega.transform(hs.j)


# -- bidegree decomposition ------------------------------------------------------

def complex_frame(j: Matrix) -> Matrix:
    """Columns Z_1..Z_m, conj(Z_1)..conj(Z_m) spanning the J eigenspaces."""
    n = j.nrows
    ji = j.map(CScalar.of) - Matrix.identity(n).map(lambda x: IMAG * x)
    holo = ji.nullspace()
    if 2 * len(holo) != n:
        raise ValueError("J has no complex eigenbasis (is J^2 = -Id?)")
    cols = [tuple(v) for v in holo] + \
        [tuple(CScalar.of(x).conjugate() for x in v) for v in holo]
    return mat_from_vectors(cols)


def type_component(phi: KForm, j: Matrix, p: int, q: int) -> KForm:
    """The (p, q)-part of a complex k-form, expressed in real coordinates."""
    if p + q != phi.k:
        raise ValueError("p + q must equal the degree")
    frame = complex_frame(j)
    m = frame.nrows // 2
    in_frame = phi.transform(frame)
    selected = {idx: c for idx, c in in_frame.coeffs.items()
                if sum(1 for i in idx if i < m) == p}
    back = KForm(phi.n, phi.k, selected).transform(frame.inverse())
    return back


def dc_via_bidegree(alg: LieAlgebra, hs: HermitianStructure) -> KForm:
    """d^c omega = i(del - dbar) omega through exact type projection."""
    domega = d(alg, hs.omega())
    del_part = type_component(domega, hs.j, 2, 1)
    dbar_part = type_component(domega, hs.j, 1, 2)
    residual = domega - del_part - dbar_part
    if not residual.is_zero():
        raise NotIntegrableError("d omega has a (3,0)+(0,3) part")
    return (del_part - dbar_part) * IMAG


# -- SKT / Kaehler verdicts ---------------------------------------------------------

@dataclass(frozen=True)
class CriterionTrace:
    """Exact record of the adapted-data criteria behind a verdict."""

    exact_data: bool
    normal: bool
    normality_defect: Matrix
    skt_skew_defect: Matrix
    kahler_skew_defect: Matrix
    v_raw: tuple
    eigen_real_parts: list
    allowed_real_parts: tuple
    real_parts_ok: bool  # numeric (1e-9) when irrational eigenvalues occur

    def to_json_obj(self) -> dict:
        return {
            "exact_data": self.exact_data,
            "normal": self.normal,
            "eigen_real_parts": [str(x) for x in self.eigen_real_parts],
            "allowed_real_parts": [str(x) for x in self.allowed_real_parts],
            "real_parts_ok": self.real_parts_ok,
        }


@dataclass(frozen=True)
class SKTVerdict:
    is_hermitian_integrable: bool
    is_kahler: bool
    is_skt: bool
    torsion_H: KForm | None
    criterion_trace: CriterionTrace | None
    adapted: AdaptedFrame | None = field(default=None, repr=False)

    def to_json_obj(self) -> dict:
        return {
            "hermitian": True,
            "integrable": self.is_hermitian_integrable,
            "kahler": self.is_kahler,
            "skt": self.is_skt,
            "H": self.torsion_H.to_json_obj() if self.torsion_H else None,
            "criterion_trace": (self.criterion_trace.to_json_obj()
                                if self.criterion_trace else None),
        }


def adapted_criteria(frame: AdaptedFrame, tol: float = 1e-9) -> tuple[bool, bool, CriterionTrace]:
    """(skt, kahler) from the adapted frame, exact in the raw Gram form.

    With G the (diagonal) Gram matrix of the unnormalized h1 frame and
    At = ad_{u6}|_{h1}, the orthonormal-frame conditions transport to
      Kaehler:  At G + G At^t = 0  and  v = 0,
      SKT:      Y + Y^t = 0,  Y = (a At + At^2) G + G At^t G^-1 At G,
      normal:   At G At^t = G At^t G^-1 At G,
    which stay rational even when unit normalization would need surds.
    """
    g1 = frame.gram_h1
    g1i = g1.inverse()
    at = frame.a_matrix_raw
    ar = frame.a_raw

    kahler_defect = at @ g1 + g1 @ at.T
    kahler = kahler_defect.is_zero() and all(x == 0 for x in frame.v_raw)

    y = (at * ar + at @ at) @ g1 + g1 @ at.T @ g1i @ at @ g1
    skt_defect = y + y.T
    skt = skt_defect.is_zero()

    normal_defect = at @ g1 @ at.T - g1 @ at.T @ g1i @ at @ g1
    normal = normal_defect.is_zero()

    # eigenvalue real parts of At live at raw scale; allowed {0, -a_raw/2}
    rep = char_poly_spectrum(at, tol)
    reals: list = [e.value for e in rep.rational_eigenvalues
                   for _ in range(e.multiplicity)]
    reals += [q.u for q in rep.quadratic_factors
              for _ in range(2 * q.multiplicity)]
    allowed = (Fraction(0), -ar / 2)
    if rep.exact:
        ok = all(x in allowed for x in reals)
        # the two criterion forms are equivalent: skew <-> normal + real parts
        assert skt == (normal and ok), "criterion forms disagree"
    else:
        numeric = [z.real for z in rep.numeric_eigenvalues]
        ok = (all(x in allowed for x in reals)
              and all(min(abs(x), abs(x + float(ar) / 2)) <= tol for x in numeric))
        reals = reals + numeric
    trace = CriterionTrace(frame.exact, normal, normal_defect, skt_defect,
                           kahler_defect, frame.v_raw, reals, allowed, ok)
    return skt, kahler, trace


def skt_verdict(alg: LieAlgebra, hs: HermitianStructure) -> SKTVerdict:
    """Dual-route SKT / Kaehler verdict for an almost abelian algebra."""
    integrable = is_integrable(alg, hs.j)
    if not integrable:
        return SKTVerdict(False, False, False, None, None, None)
    omega = hs.omega()
    domega = d(alg, omega)
    torsion = domega.transform(hs.j)
    kahler_direct = domega.is_zero()
    skt_direct = d(alg, torsion).is_zero()

    frame = adapted_data(alg, hs.j, hs.g)
    skt_crit, kahler_crit, trace = adapted_criteria(frame)

    if skt_direct != skt_crit or kahler_direct != kahler_crit:
        raise RouteDisagreementError(
            f"direct route (skt={skt_direct}, kahler={kahler_direct}) vs "
            f"criterion route (skt={skt_crit}, kahler={kahler_crit})")
    return SKTVerdict(True, kahler_direct, skt_direct, torsion, trace, frame)


def torsion_in_adapted_frame(alg: LieAlgebra, hs: HermitianStructure) -> KForm:
    """H expressed in the exact orthonormal adapted basis (when available)."""
    frame = adapted_data(alg, hs.j, hs.g)
    if not frame.exact:
        raise ValueError("adapted frame is not rationally orthonormal")
    from .scalars import rat_sqrt
    cols = []
    for i in range(6):
        s = rat_sqrt(frame.norm_squares[i])
        cols.append(tuple(x / s for x in frame.frame.col(i)))
    e = mat_from_vectors(cols)
    h = bismut_torsion(alg, hs)
    return h.transform(e)


def expected_torsion_from_data(a, v, amat: Matrix) -> KForm:
    """The adapted-frame expansion of H in terms of (a, v, A).

    Serves as an independent oracle for bismut_torsion on adapted frames.
    """
    v = tuple(Q(x) for x in v)
    t = {
        (0, 1, 2): amat[0, 2] - amat[1, 3],
        (0, 3, 4): -(amat[0, 2] - amat[1, 3]),
        (0, 1, 3): -(amat[0, 1] + amat[1, 0]),
        (0, 2, 4): -(amat[0, 1] + amat[1, 0]),
        (0, 2, 3): -2 * amat[1, 1],
        (0, 1, 4): -2 * amat[0, 0],
        (0, 1, 5): -v[0],
        (0, 2, 5): -v[1],
        (0, 3, 5): -v[2],
        (0, 4, 5): -v[3],
    }
    return KForm(6, 3, t)


def _unit(n: int, i: int) -> tuple:
    return tuple(Fraction(int(k == i)) for k in range(n))
