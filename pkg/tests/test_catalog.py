"""Catalog construction, printed structures, recognition round trips."""

import random
from fractions import Fraction as F

import pytest

from hermlie.catalog import (FAMILIES, J_GK_MINUS, J_GK_PLUS,
                             ParameterError, UnknownAlgebraError, build,
                             j_from_pairs, known_structures, manifest,
                             table3_complex_structure)
from hermlie.hermitian import is_integrable
from hermlie.liealg import LieAlgebra, is_unimodular
from hermlie.linalg import Matrix
from hermlie.recognition import (candidates_contain, family_b_matrix,
                                 ideal_frame_operator, recognize)


def test_build_k13():
    alg = build("k13")
    assert alg.bracket_basis(0, 5) == (F(-1), 0, 0, 0, 0, 0)
    assert all(
        alg.bracket_basis(i, j) == tuple([0] * 6)
        for i in range(5) for j in range(i + 1, 5))


def test_build_k25_spec_example():
    alg = build("k25", {"p": 0, "q": 0, "r": 1})
    # (f26, -f16, f46, -f36, 0, 0)
    assert alg.bracket_basis(1, 5) == (F(-1), 0, 0, 0, 0, 0)
    assert alg.bracket_basis(0, 5) == (0, F(1), 0, 0, 0, 0)
    assert alg.bracket_basis(3, 5) == (0, 0, F(-1), 0, 0, 0)
    assert alg.bracket_basis(2, 5) == (0, 0, 0, F(1), 0, 0)


def test_g612_unimodular_example():
    fam = FAMILIES["g6.12"]
    assert fam.unimodular_condition({"p": F(1), "q": F(-1, 4)})
    alg = build("g6.12", {"p": 1, "q": F(-1, 4)})
    assert is_unimodular(alg)


def test_g61_unimodular_example():
    params = {"p": F(1), "q": F(-1), "r": F(-1, 2), "s": F(-1, 2)}
    fam = FAMILIES["g6.1"]
    assert fam.unimodular_condition(params)
    assert is_unimodular(build("g6.1", params))


def test_parameter_violations():
    with pytest.raises(ParameterError):
        build("k17", {"p": 2})  # |p| <= 1 required
    with pytest.raises(ParameterError):
        build("k17", {})  # missing parameter
    with pytest.raises(ParameterError):
        build("k11", {"p": 1, "q": 1, "r": 1, "s": 2})  # |q|=|r| needs |s|<=1
    with pytest.raises(UnknownAlgebraError):
        build("k99")


def test_unimodular_column_random(rng):
    # table predicate matches the trace computation, both ways
    cases = {
        "g6.1": {"p": F(1), "q": F(-1), "r": F(-1, 2)},
        "g6.8": {"p": F(1), "q": F(1, 2), "r": F(1, 2)},
        "g4.5+2R": {"p": F(1, 2)},
        "g5.13+R": {"p": F(1, 2), "r": F(1)},
        "g5.17+R": {"p": F(1), "r": F(1, 2)},
    }
    solves = {
        "g6.1": ("s", lambda P: -1 - P["p"] - P["q"] - P["r"]),
        "g6.8": ("s", lambda P: -(P["p"] + P["q"] + P["r"]) / 2),
        "g4.5+2R": ("q", lambda P: -1 - P["p"]),
        "g5.13+R": ("q", lambda P: -(1 + P["p"]) / 2),
        "g5.17+R": ("q", lambda P: -P["p"]),
    }
    for name, base in cases.items():
        var, solve = solves[name]
        good = dict(base)
        good[var] = solve(base)
        fam = FAMILIES[name]
        if not fam.admissible(good):
            assert is_unimodular(build(name, good))
            assert fam.unimodular_condition(good)
        bad = dict(base)
        bad[var] = solve(base) + F(1, 3)
        if not fam.admissible(bad):
            assert not is_unimodular(build(name, bad))
            assert not fam.unimodular_condition(bad)


def test_k_alias_equations_match():
    pairs = [
        ("k17", {"p": F(-1, 2)}, "g4.5+2R", {"p": F(-1, 2), "q": F(-1, 2)}),
        ("k1", {"p": F(-1, 2), "r": F(-1, 2)},
         "g6.1", {"p": F(-1, 2), "q": F(-1, 2), "r": F(-1, 2), "s": F(-1, 2)}),
        ("k19", {"p": F(2), "q": F(-1)}, "g4.6+2R", {"p": F(2), "q": F(-1)}),
        ("k23", {"p": F(0)}, "g5.14+R", {"p": F(0)}),
    ]
    for kname, kp, gname, gp in pairs:
        assert build(kname, kp).c == build(gname, gp).c


def test_table3_j_integrable_spot():
    samples = {
        "k1": {"p": F(1, 2), "r": F(1, 4)},
        "k4": {"q": F(1, 2)},
        "k5": {"p": F(1, 2)},
        "k7": {"p": F(3)},
        "k12": {"p": F(2), "q": F(1, 3)},
        "k21": {},
        "k24": {},
        "k26": {"p": F(-1, 2)},
    }
    for name, params in samples.items():
        alg = build(name, params)
        j = table3_complex_structure(name)
        assert is_integrable(alg, j), name


def test_table3_j_unknown():
    with pytest.raises(UnknownAlgebraError):
        table3_complex_structure("g6.3")


def test_table3_j_printed_rows():
    assert table3_complex_structure("k1") == j_from_pairs(
        [(1, 6), (2, 3), (4, 5)])
    assert table3_complex_structure("k24") == j_from_pairs(
        [(1, 3), (2, 4), (5, 6)])
    assert table3_complex_structure("k12") == j_from_pairs(
        [(1, 6), (2, 3), (4, 5)])


def test_known_structures_roles():
    ks = known_structures("k19", {"p": F(2), "q": 0})
    assert [k.role for k in ks] == ["kahler"]
    ks = known_structures("k23", {"p": 0})
    assert [k.role for k in ks] == ["skt"]
    assert ks[0].j_plus == j_from_pairs([(1, 2), (3, 5), (4, 6)])
    ks = known_structures("k11", {"p": F(2), "q": F(-1), "r": 0, "s": F(1, 2)})
    assert [k.role for k in ks] == ["skt", "gk_split"]
    gk = ks[1]
    assert gk.j_plus == J_GK_PLUS and gk.j_minus == J_GK_MINUS
    ks = known_structures("k17", {"p": F(-1, 2)})
    assert [k.role for k in ks] == ["skt", "gk_split"]
    assert known_structures("k17", {"p": F(-1, 3)}) == []


def test_manifest_complete():
    rows = manifest()
    names = {r["name"] for r in rows}
    assert len(rows) == len(FAMILIES)
    assert {"g6.1", "g5.18+R", "k1", "k26", "nilp1", "nilp3"} <= names


def test_family_b_matrix_matches_ad():
    fam = FAMILIES["k17"]
    params = {"p": F(-1, 2)}
    b = family_b_matrix(fam, params)
    assert b == Matrix.diag([1, F(-1, 2), F(-1, 2), 0, 0])
    m = ideal_frame_operator(build("k17", params))
    assert m == b


def test_recognize_k17():
    cands, inv = recognize(build("k17", {"p": F(-1, 2)}))
    assert inv.almost_abelian and not inv.nilpotent
    assert candidates_contain(cands, "k17", {"p": F(-1, 2)})
    # also matches its decomposable alias
    assert candidates_contain(cands, "g4.5+2R", {"p": F(-1, 2), "q": F(-1, 2)})


def test_recognize_scaled_conjugated(rng):
    alg = build("k15", {"p": 0})
    p = _random_glin(rng)
    conj = _conjugate(alg, p)
    cands, inv = recognize(conj)
    assert candidates_contain(cands, "k15", {"p": 0})


def test_recognize_abelian():
    cands, inv = recognize(LieAlgebra(6, {}))
    assert cands == []
    assert inv.nilpotent and inv.abelian


def test_recognize_nilpotent_trio():
    for name in ("nilp1", "nilp2", "nilp3"):
        cands, inv = recognize(build(name))
        assert inv.nilpotent
        assert candidates_contain(cands, name, {})
        others = {c.name for c in cands} - {name}
        assert not others & {"nilp1", "nilp2", "nilp3"} - {name}


def test_recognize_scale_free_k7():
    cands, _ = recognize(build("k7", {"p": F(2)}))
    assert candidates_contain(cands, "k7", {"p": F(2)})
    assert any(c.scale_free for c in cands if c.name == "k7")


def test_no_skt_outside_the_list_spot_probe():
    # falsifiable desk-scale probe: five complex-structure rows that carry
    # no SKT structure at all; the tabulated J with every diagonal
    # J-compatible metric (denominators <= 4) must never be SKT
    from itertools import product
    from hermlie.hermitian import HermitianStructure, is_integrable, skt_verdict
    cases = [("k5", {"p": F(1, 2)}), ("k12", {"p": 1, "q": F(1, 2)}),
             ("k14", {}), ("k21", {}), ("k24", {})]
    weights = [F(1), F(1, 2), F(2), F(3, 4)]
    checked = 0
    for name, params in cases:
        alg = build(name, params)
        fam = FAMILIES[name]
        j = table3_complex_structure(name)
        pairs = fam.complex_structure_pairs
        for vals in product(weights, repeat=3):
            diag = [F(0)] * 6
            for (i, jj), w in zip(pairs, vals):
                diag[i - 1] = w
                diag[jj - 1] = w
            g = Matrix.diag(diag)
            hs = HermitianStructure(j, g)
            v = skt_verdict(alg, hs)
            assert v.is_hermitian_integrable
            assert not v.is_skt, (name, vals)
            checked += 1
    assert checked == 5 * len(weights) ** 3


def _random_glin(rng, n=6):
    while True:
        m = Matrix([[F(rng.randint(-2, 2)) for _ in range(n)]
                    for _ in range(n)])
        if m.rank() == n:
            return m


def _conjugate(alg, p):
    pi = p.inverse()
    brackets = {}
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            w = pi.matvec(alg.bracket_vec(p.col(i), p.col(j)))
            if any(c != 0 for c in w):
                brackets[(i, j)] = w
    return LieAlgebra(alg.dim, brackets)
