"""Edge behavior: invalid triples, non-catalog inputs, validation, goldens."""

import json
from fractions import Fraction as F

import pytest

from hermlie.catalog import build
from hermlie.exterior import KForm, d
from hermlie.genkahler import GKTriple, J_GK_MINUS, J_GK_PLUS, commutator_poisson, verify_gk
from hermlie.hermitian import HermitianStructure
from hermlie.liealg import LieAlgebra, adapted_data, algebra_from_structure_equations
from hermlie.linalg import Matrix
from hermlie.recognition import recognize

G6 = Matrix.identity(6)


def test_commutator_poisson_on_invalid_triple():
    # conjugating J+ by a non-automorphism gives a genuine Hermitian but
    # non-integrable second structure: the triple fails verification while
    # the commutator bivector is still computed
    alg = build("k17", {"p": F(-1, 2)})
    r = Matrix([[1, 0, 0, 0, 0, 0],
                [0, 0, -1, 0, 0, 0],
                [0, 1, 0, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 0, -1],
                [0, 0, 0, 0, 1, 0]])
    assert (r.T @ r) == G6
    j_minus = r @ J_GK_MINUS @ r.inverse()
    assert (j_minus @ j_minus) == -G6
    t = GKTriple(J_GK_PLUS, j_minus, G6)
    verdict = verify_gk(alg, t)
    assert not verdict.valid
    pi = commutator_poisson(alg, t)  # no assertion firing on invalid input
    assert pi is not None


def test_recognize_non_catalog_algebra():
    # irrational rotation speed ratio: eigenvalues +-i sqrt(2), no catalog row
    alg = algebra_from_structure_equations(
        [[(2, 2, 6)], [(-1, 1, 6)], [], [], [], []])
    cands, inv = recognize(alg)
    assert cands == []
    assert inv.almost_abelian and not inv.nilpotent


def test_recognize_reports_spectrum_invariants():
    alg = build("k17", {"p": F(-1, 2)})
    _, inv = recognize(alg)
    assert inv.spectrum is not None
    vals = {(str(e.value), e.multiplicity)
            for e in inv.spectrum.rational_eigenvalues}
    assert ("1", 1) in vals and ("-1/2", 2) in vals and ("0", 2) in vals


def test_adapted_data_validates_metric():
    alg = build("k13")
    j = J_GK_PLUS
    with pytest.raises(ValueError):
        adapted_data(alg, j, Matrix.diag([1, 1, 1, 1, 1, -1]))  # not posdef
    g_bad = Matrix.identity(6).rows
    g_bad = [list(r) for r in g_bad]
    g_bad[0][1] = F(1, 2)  # not symmetric
    with pytest.raises(ValueError):
        adapted_data(alg, j, Matrix(g_bad))
    with pytest.raises(ValueError):
        adapted_data(alg, Matrix.identity(6), G6)  # J^2 != -Id


def test_hermitian_structure_validates():
    with pytest.raises(ValueError):
        HermitianStructure(Matrix.identity(6), G6)
    # J-incompatible metric
    g = Matrix.diag([2, 1, 1, 1, 1, 1])
    with pytest.raises(ValueError):
        HermitianStructure(J_GK_PLUS, g)  # pairs (1,6) carry unequal weights


def test_golden_serialized_domega():
    # lexicographic basis order makes serialized coefficients bit-stable
    p = F(-1, 2)
    alg = algebra_from_structure_equations(
        [[(1, 1, 6)], [(p, 2, 6)], [(p, 3, 6)], [], [], []])
    omega = KForm.from_terms(6, 2, [((0, 5), 1), ((1, 2), 1), ((3, 4), 1)])
    doc = json.dumps(d(alg, omega).to_json_obj(), sort_keys=True)
    golden = ('{"degree": 3, "terms": [{"im": {"den": 1, "num": 0}, '
              '"indices": [2, 3, 6], "re": {"den": 1, "num": 1}}]}')
    assert doc == golden


def test_abelian_everything_trivial():
    alg = LieAlgebra(6, {})
    t = GKTriple(J_GK_PLUS, J_GK_MINUS, G6)
    verdict = verify_gk(alg, t)
    assert verdict.valid and verdict.split and verdict.torsion.is_zero()
    assert commutator_poisson(alg, t).is_zero()
