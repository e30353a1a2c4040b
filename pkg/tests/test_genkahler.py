"""Generalized Kaehler verification, commutator bivector, canonical bundle."""

from fractions import Fraction as F

import pytest

from hermlie.catalog import build, known_structures
from hermlie.dolbeault import Bivector20, DolbeaultData
from hermlie.exterior import KForm
from hermlie.genkahler import (FrameMismatchError, GKTriple, J_GK_MINUS,
                               J_GK_PLUS, canonical_generators,
                               commutator_poisson,
                               commutator_poisson_from_endo, verify_gk)
from hermlie.hermitian import HermitianStructure
from hermlie.liealg import AlmostAbelianData, LieAlgebra, from_almost_abelian
from hermlie.linalg import Matrix
from hermlie.scalars import CScalar, I as IMAG

G6 = Matrix.identity(6)

J_ADAPTED = Matrix([[0, 0, 0, 0, 0, -1],
                    [0, 0, 0, 0, -1, 0],
                    [0, 0, 0, -1, 0, 0],
                    [0, 0, 1, 0, 0, 0],
                    [0, 1, 0, 0, 0, 0],
                    [1, 0, 0, 0, 0, 0]])


def gk_triple():
    return GKTriple(J_GK_PLUS, J_GK_MINUS, G6)


def phi_matrices(s, v2, v3):
    phi1 = Matrix([[0, s, 0, 0, 0, 0],
                   [-s, 0, -v3, v2, 0, 0],
                   [0, v3, 0, 0, -v2, 0],
                   [0, -v2, 0, 0, -v3, 0],
                   [0, 0, v2, v3, 0, s],
                   [0, 0, 0, 0, -s, 0]])
    phi2 = Matrix([[0, 0, 0, 0, -s, 0],
                   [0, 0, v2, v3, 0, s],
                   [0, -v2, 0, 0, -v3, 0],
                   [0, -v3, 0, 0, v2, 0],
                   [s, 0, v3, -v2, 0, 0],
                   [0, -s, 0, 0, 0, 0]])
    return phi1, phi2


def k23_algebra(s=F(1), v=(F(1), 0, 0, 0)):
    amat = Matrix([[0, 0, 0, 0], [0, 0, s, 0], [0, -s, 0, 0], [0, 0, 0, 0]])
    return from_almost_abelian(AlmostAbelianData(0, v, amat))


def test_verify_gk_k17():
    alg = build("k17", {"p": F(-1, 2)})
    v = verify_gk(alg, gk_triple())
    assert v.valid and v.split
    assert v.torsion == KForm.basis(6, (0, 1, 2))
    assert v.commutator.is_zero()


def test_verify_gk_k8_diagonal_s():
    alg = build("k8", {"p": F(3), "q": F(-3, 2), "s": F(-3, 2)})
    v = verify_gk(alg, gk_triple())
    assert v.valid and v.split
    assert v.torsion == KForm.from_terms(
        6, 3, [((0, 1, 2), 3), ((0, 3, 4), 3)])


def test_verify_gk_trivial_kahler():
    alg = build("k15", {"p": 0})
    [kahler] = known_structures("k15", {"p": 0})
    t = GKTriple(kahler.j_plus, kahler.j_plus, kahler.g)
    v = verify_gk(alg, t)
    assert v.valid and v.split and v.torsion.is_zero()


def test_verify_gk_invalid_torsion_mismatch():
    alg = build("k17", {"p": F(-1, 2)})
    t = GKTriple(J_GK_PLUS, J_GK_PLUS, G6)
    v = verify_gk(alg, t)
    assert not v.valid
    assert any("torsion mismatch" in f for f in v.failures)


def test_verify_gk_reports_non_integrable():
    alg = build("k13")
    bad = Matrix([[0, -1, 0, 0, 0, 0],
                  [1, 0, 0, 0, 0, 0],
                  [0, 0, 0, -1, 0, 0],
                  [0, 0, 1, 0, 0, 0],
                  [0, 0, 0, 0, 0, -1],
                  [0, 0, 0, 0, 1, 0]])
    v = verify_gk(alg, GKTriple(bad, bad, G6))
    assert not v.valid
    assert any("not integrable" in f for f in v.failures)


def test_commutator_poisson_split_zero():
    alg = build("k17", {"p": F(-1, 2)})
    pi = commutator_poisson(alg, gk_triple())
    assert pi.is_zero()


def test_commutator_poisson_phi1_projection():
    # hypothetical commutator phi1: (2,0)-part is (s/2) (Z1^Z2 + i b/s Z2^Z3)
    s, v2, v3 = F(2), F(1, 2), F(-1, 3)
    v = (F(1), v2, v3, F(1))
    alg = k23_algebra(s=s, v=v)
    phi1, phi2 = phi_matrices(s, v2, v3)
    pi = commutator_poisson_from_endo(alg, phi1, J_ADAPTED, G6)
    beta = CScalar(v2, v3)
    expected = Bivector20.of(F(1), 0, IMAG * beta / CScalar(s)).scale(F(s) / 2)
    assert pi.components == expected.components
    # and the imaginary branch through phi2
    pi2 = commutator_poisson_from_endo(alg, phi2, J_ADAPTED, G6)
    expected2 = expected.scale(-IMAG)
    assert pi2.components == expected2.components
    # both are holomorphic Poisson for the k23 data
    frame_data = AlmostAbelianData(
        0, v, Matrix([[0, 0, 0, 0], [0, 0, s, 0], [0, -s, 0, 0], [0, 0, 0, 0]]))
    dd = DolbeaultData.from_data(frame_data)
    from hermlie.dolbeault import apply_m20, schouten_bracket_check
    assert all(CScalar.of(x).is_zero() for x in apply_m20(dd, pi))
    assert schouten_bracket_check(pi, dd).is_zero()


def test_canonical_generators_k17():
    alg = build("k17", {"p": F(-1, 2)})
    rho1, rho2, closed = canonical_generators(alg, gk_triple())
    assert closed == (False, False)
    assert rho1.degrees() == [1, 3, 5]
    assert rho2.degrees() == [2, 4]
    # top term of rho2 is i omega ^ (f2 - if3) ^ (f4 - if5)
    omega = HermitianStructure(J_GK_PLUS, G6).omega()
    pair = KForm(6, 1, {(1,): 1, (2,): CScalar(0, -1)}).wedge(
        KForm(6, 1, {(3,): 1, (4,): CScalar(0, -1)}))
    assert rho2.degree_part(4) == (omega * IMAG).wedge(pair)


def test_canonical_generators_abelian_flat():
    alg = LieAlgebra(6, {})
    rho1, rho2, closed = canonical_generators(alg, gk_triple())
    assert closed == (True, True)


def test_canonical_generators_k8():
    alg = build("k8", {"p": F(1), "q": F(-1, 2), "s": F(0)})
    _, _, closed = canonical_generators(alg, gk_triple())
    assert closed == (False, False)


def test_canonical_generators_frame_mismatch():
    alg = build("k17", {"p": F(-1, 2)})
    with pytest.raises(FrameMismatchError):
        canonical_generators(alg, GKTriple(J_ADAPTED, J_GK_MINUS, G6))


def test_omega_pm_printed_forms():
    hp = HermitianStructure(J_GK_PLUS, G6).omega()
    hm = HermitianStructure(J_GK_MINUS, G6).omega()
    assert hp == KForm.from_terms(6, 2, [((0, 5), 1), ((1, 2), 1), ((3, 4), 1)])
    assert hm == KForm.from_terms(6, 2, [((0, 5), 1), ((1, 2), -1), ((3, 4), -1)])
