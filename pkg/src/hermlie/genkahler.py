"""Generalized Kaehler triples: verification, splitness, canonical bundle.

A triple (J+, J-, g) is generalized Kaehler when both pairs are
integrable Hermitian structures with opposite torsion, d^c_+ omega_+ =
-d^c_- omega_-, and that common torsion is closed.  Split means
[J+, J-] = 0.  The canonical-bundle generators of the split examples are
built from the printed exponential expansions and tested for closedness
under the twisted differential d - H^.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dolbeault import (Bivector20, DolbeaultData, apply_m20,
                        z_frame_vectors)
from .exterior import KForm, MixedForm, twisted_d
from .hermitian import HermitianStructure, bismut_torsion, is_integrable
from .liealg import LieAlgebra, adapted_data
from .linalg import Matrix, mat_from_vectors
from .scalars import CScalar, I as IMAG, as_cscalar

J_GK_PLUS = Matrix([[0, 0, 0, 0, 0, -1],
                    [0, 0, -1, 0, 0, 0],
                    [0, 1, 0, 0, 0, 0],
                    [0, 0, 0, 0, -1, 0],
                    [0, 0, 0, 1, 0, 0],
                    [1, 0, 0, 0, 0, 0]])
J_GK_MINUS = Matrix([[0, 0, 0, 0, 0, -1],
                     [0, 0, 1, 0, 0, 0],
                     [0, -1, 0, 0, 0, 0],
                     [0, 0, 0, 0, 1, 0],
                     [0, 0, 0, -1, 0, 0],
                     [1, 0, 0, 0, 0, 0]])


@dataclass(frozen=True)
class GKTriple:
    j_plus: Matrix
    j_minus: Matrix
    g: Matrix


@dataclass(frozen=True)
class GKVerdict:
    valid: bool
    split: bool
    torsion: KForm | None
    commutator: Matrix
    failures: tuple[str, ...]

    def to_json_obj(self) -> dict:
        return {
            "valid": self.valid,
            "split": self.split,
            "H": self.torsion.to_json_obj() if self.torsion else None,
            "failures": list(self.failures),
        }


def verify_gk(alg: LieAlgebra, t: GKTriple) -> GKVerdict:
    """Check every generalized Kaehler invariant exactly.

    Failures are reported individually; the torsion H = d^c_+ omega_+ and
    the commutator [J+, J-] are returned in all cases where they make
    sense.
    """
    failures = []
    for label, j in (("plus", t.j_plus), ("minus", t.j_minus)):
        try:
            HermitianStructure(j, t.g)
        except ValueError as exc:
            failures.append(f"(J_{label}, g) not Hermitian: {exc}")
    commutator = t.j_plus.commutator(t.j_minus)
    torsion = None
    if not failures:
        for label, j in (("plus", t.j_plus), ("minus", t.j_minus)):
            if not is_integrable(alg, j):
                failures.append(f"J_{label} not integrable")
    if not failures:
        hp = bismut_torsion(alg, HermitianStructure(t.j_plus, t.g))
        hm = bismut_torsion(alg, HermitianStructure(t.j_minus, t.g))
        torsion = hp
        if not (hp + hm).is_zero():
            failures.append("torsion mismatch: d^c_+ omega_+ != -d^c_- omega_-")
        from .exterior import d as ce_d
        if not ce_d(alg, hp).is_zero():
            failures.append("not pluriclosed: d d^c_+ omega_+ != 0")
    return GKVerdict(not failures, commutator.is_zero(), torsion,
                     commutator, tuple(failures))


def commutator_poisson(alg: LieAlgebra, t: GKTriple) -> Bivector20:
    """(2,0)-part of [J+, J-] g^{-1} w.r.t. J+, in the adapted frame.

    For valid split triples this is the zero bivector; whenever the
    triple is valid the result is asserted to be holomorphic Poisson.
    """
    c = t.j_plus.commutator(t.j_minus)
    pi = commutator_poisson_from_endo(alg, c, t.j_plus, t.g)
    verdict = verify_gk(alg, t)
    if verdict.valid:
        frame = adapted_data(alg, t.j_plus, t.g)
        if frame.exact:
            from .dolbeault import schouten_bracket_check
            dd = DolbeaultData.from_data(frame.data)
            assert all(as_cscalar(x).is_zero() for x in apply_m20(dd, pi))
            assert schouten_bracket_check(pi, dd).is_zero()
    return pi


def commutator_poisson_from_endo(alg: LieAlgebra, c: Matrix, j_plus: Matrix,
                                 g: Matrix) -> Bivector20:
    """Project the bivector C g^{-1} to its (2,0)-part w.r.t. J+."""
    frame = adapted_data(alg, j_plus, g)
    if not frame.exact:
        raise ValueError("adapted frame is not rationally orthonormal")
    from .scalars import rat_sqrt
    cols = []
    for i in range(6):
        s = rat_sqrt(frame.norm_squares[i])
        cols.append(tuple(x / s for x in frame.frame.col(i)))
    e = mat_from_vectors(cols)
    b = c @ g.inverse()  # bivector components b^{ij} in the original frame
    b_adapted = e.inverse() @ b @ e.inverse().T
    w = mat_from_vectors(z_frame_vectors()).map(as_cscalar)
    wi = w.inverse()
    bz = wi @ b_adapted.map(as_cscalar) @ wi.T
    return Bivector20((as_cscalar(bz[0, 1]), as_cscalar(bz[0, 2]),
                       as_cscalar(bz[1, 2])))


# -- canonical bundle generators ----------------------------------------------------

class FrameMismatchError(ValueError):
    pass


def canonical_generators(alg: LieAlgebra, t: GKTriple
                         ) -> tuple[MixedForm, MixedForm, tuple[bool, bool]]:
    """Spinor-line generators rho1, rho2 and their twisted closedness.

    Requires the split structure in the standard adapted frame
    (J+ = J_GK_PLUS, J- = J_GK_MINUS, g the standard inner product):

      rho1 = e^{i omega_+} (f1 - i f6)
      rho2 = e^{i omega_+} (f2 - i f3) ^ (f4 - i f5)

    and reports whether (d - H^) rho_i = 0 with H = d^c_+ omega_+.
    """
    if t.j_plus != J_GK_PLUS or t.j_minus != J_GK_MINUS \
            or t.g != Matrix.identity(6):
        raise FrameMismatchError(
            "canonical generators are defined in the standard adapted frame")
    omega = HermitianStructure(t.j_plus, t.g).omega()
    one_minus = KForm(6, 1, {(0,): 1, (5,): CScalar(0, -1)})
    pair = KForm(6, 1, {(1,): 1, (2,): CScalar(0, -1)}).wedge(
        KForm(6, 1, {(3,): 1, (4,): CScalar(0, -1)}))
    rho1 = MixedForm(6, [one_minus,
                         (omega * IMAG).wedge(one_minus),
                         omega.wedge(omega).wedge(one_minus) * Fraction(-1, 2)])
    rho2 = MixedForm(6, [pair, (omega * IMAG).wedge(pair)])
    h = bismut_torsion(alg, HermitianStructure(t.j_plus, t.g))
    closed1 = twisted_d(alg, h, rho1).is_zero()
    closed2 = twisted_d(alg, h, rho2).is_zero()
    return rho1, rho2, (closed1, closed2)
