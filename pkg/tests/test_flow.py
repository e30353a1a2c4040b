"""Reduced pluriclosed flow: exact RHS, RK4, closed form, solitons."""

from fractions import Fraction as F

import numpy as np
import pytest

from hermlie.flow import (FlowState, PreSingularTimeError, closed_form_v0,
                          flow_rhs, integrate, scaling_factor_squared,
                          skt_defect_float, soliton_check)
from hermlie.linalg import Matrix


def k17_state():
    return FlowState.initial(1, (0, 0, 0, 0),
                             Matrix.diag([F(-1, 2), F(-1, 2), 0, 0]))


def test_rhs_k17_spec_example():
    st = k17_state()
    assert st.k_half_rank == 1
    da, dv, dA = flow_rhs(st)
    assert da == F(-3, 4)
    assert dv == (0, 0, 0, 0)
    assert dA == st.A * F(-3, 4)


def test_rhs_zero_state():
    st = FlowState.initial(0, (0, 0, 0, 0), Matrix.zero(4))
    da, dv, dA = flow_rhs(st)
    assert da == 0 and dv == (0, 0, 0, 0) and dA.is_zero()


def test_rhs_pure_v():
    st = FlowState.initial(0, (0, 1, 0, 0), Matrix.zero(4))
    assert st.k_half_rank == 0
    da, dv, dA = flow_rhs(st)
    assert da == 0
    assert dv == (0, -1, 0, 0)  # c v - |v|^2 v / 2 = -v/2 - v/2
    assert dA.is_zero()


def test_scaling_factor():
    assert scaling_factor_squared(1, 1, 2) == F(1, 4)
    assert scaling_factor_squared(1, 0, 3) == F(1, 4)
    assert scaling_factor_squared(1, 1, 0) == 1
    with pytest.raises(PreSingularTimeError):
        scaling_factor_squared(1, 1, -1)


def test_closed_form_scaling():
    a_t, amat_t, c2 = closed_form_v0(1, Matrix.diag([F(-1, 2), F(-1, 2), 0, 0]), 2)
    assert c2 == F(1, 4)
    assert abs(a_t - 0.5) < 1e-15
    assert abs(amat_t[0, 0] + 0.25) < 1e-15


def test_rk4_matches_closed_form():
    st = k17_state()
    traj = integrate(st, 2.0, 1e-3)
    a_end = traj.state_at(-1)[0]
    assert abs(a_end - 0.5) < 1e-8
    assert not traj.aborted


def test_rk4_constant_cases():
    # zero state stays zero; a=0 with skew A is a fixed point
    st = FlowState.initial(0, (0, 0, 0, 0), Matrix.zero(4))
    traj = integrate(st, 1.0, 1e-2)
    assert np.max(np.abs(traj.states)) == 0
    skew = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    st = FlowState.initial(0, (0, 0, 0, 0), skew)
    traj = integrate(st, 1.0, 1e-2)
    assert np.allclose(traj.states[0], traj.states[-1])


def test_rk4_order_probe():
    st = k17_state()
    errs = []
    for dt in (2e-3, 1e-3):
        traj = integrate(st, 2.0, dt)
        a_end = traj.state_at(-1)[0]
        errs.append(abs(a_end - 0.5))
    if errs[1] > 1e-14:
        assert errs[0] / errs[1] >= 12  # nominal 16 for RK4


def test_soliton_check_k17():
    rep = soliton_check(k17_state(), [0.0, 2.5, 5.0, 7.5, 10.0])
    assert rep.is_soliton
    assert rep.max_deviation < 1e-8


def test_soliton_direction_invariance():
    st = k17_state()
    traj = integrate(st, 10.0, 1e-3)
    amat0 = st.A.to_float()
    unit0 = amat0 / np.linalg.norm(amat0)
    for idx in (1000, 5000, 10000):
        amat_t = traj.state_at(idx)[2]
        unit_t = amat_t / np.linalg.norm(amat_t)
        assert np.max(np.abs(unit_t - unit0)) < 1e-10


def test_soliton_requires_v0():
    st = FlowState.initial(1, (1, 0, 0, 0), Matrix.zero(4))
    with pytest.raises(ValueError):
        soliton_check(st, [1.0])


def test_skt_preserved_along_flow():
    st = k17_state()
    assert skt_defect_float(float(st.a), st.A.to_float()) == 0
    traj = integrate(st, 10.0, 1e-3)
    for idx in range(0, 10001, 1000):
        a, v, amat = traj.state_at(idx)
        assert skt_defect_float(a, amat) < 1e-12


def test_general_v_branch_runs():
    st = FlowState.initial(1, (F(1, 2), 0, 0, 0),
                           Matrix.diag([F(-1, 2), F(-1, 2), 0, 0]))
    traj = integrate(st, 5.0, 1e-3)
    assert not traj.aborted
    a, v, amat = traj.state_at(-1)
    assert np.isfinite(a)


def test_trajectory_rows_serialization():
    st = k17_state()
    traj = integrate(st, 0.01, 1e-3)
    rows = traj.to_rows()
    assert len(rows) == 11
    assert len(rows[0]) == 1 + 1 + 4 + 16
    doc = traj.to_json_obj()
    assert doc["columns"][0] == "t" and len(doc["columns"]) == 22


def test_uncorrected_variant_differs_only_through_v():
    # the sign flip sits inside S, so it acts on v' only
    st = FlowState.initial(1, (F(1, 2), 0, 0, 0),
                           Matrix.diag([F(-1, 2), F(-1, 2), 0, 0]))
    da1, dv1, dA1 = flow_rhs(st, corrected=True)
    da2, dv2, dA2 = flow_rhs(st, corrected=False)
    assert da1 == da2 and dA1 == dA2
    assert dv1 != dv2
    # S_corrected - S_uncorrected = -a^2 Id
    assert tuple(a - b for a, b in zip(dv1, dv2)) == tuple(
        -st.a * st.a * x for x in st.v)
    # on the v = 0 branch the two variants coincide
    st0 = k17_state()
    assert flow_rhs(st0, corrected=True)[1] == flow_rhs(st0, corrected=False)[1]
