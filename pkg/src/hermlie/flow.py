"""The reduced pluriclosed flow for almost abelian Hermitian data.

The flow acts on the triple (a, v, A) by

    a' = c a,   v' = c v + S v - |v|^2 v / 2,   A' = c A,

with c = -(k/4 + 1/2) a^2 - |v|^2 / 2, 2k = rk(A + At) frozen at t = 0,
and S = -(k/4 + 1/2) a^2 Id - A At / 2 + a (A + At) / 4.  For v = 0 the
system has the closed-form solution (a(t), A(t)) = (a0, A0) c(t) with
c(t) = (1 + a0^2 (k/2 + 1) t)^{-1/2}, which identifies the stationary
directions as expanding solitons (c decreases from 1).

The right-hand side is evaluated exactly on rational states; time
stepping is classical fixed-step RK4 in floats (the only numerics in
this module).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import Matrix
from .scalars import Q


@dataclass(frozen=True)
class FlowState:
    """(a, v, A) at time t; k = rk(A0 + A0t)/2 is fixed by the initial data."""

    t: Fraction
    a: Fraction
    v: tuple[Fraction, ...]
    A: Matrix
    k_half_rank: int

    @staticmethod
    def initial(a, v, amat: Matrix) -> "FlowState":
        rank = (amat + amat.T).rank()
        if rank % 2:
            raise ValueError("A + At must have even rank")
        return FlowState(Fraction(0), Q(a), tuple(Q(x) for x in v), amat,
                         rank // 2)

    @property
    def dim_h1(self) -> int:
        return self.A.nrows


def flow_rhs(state: FlowState, corrected: bool = True
             ) -> tuple[Fraction, tuple, Matrix]:
    """Exact rational evaluation of (a', v', A').

    `corrected=False` flips the sign inside the parenthesis of the first
    summand of S (the uncorrected variant from the earlier literature);
    it exists purely for differential testing.
    """
    a, v, amat, k = state.a, state.v, state.A, state.k_half_rank
    n = amat.nrows
    vnorm2 = sum(x * x for x in v)
    half = Fraction(1, 2) if corrected else Fraction(-1, 2)
    coef = -(Fraction(k, 4) + Fraction(1, 2)) * a * a
    s_coef = -(Fraction(k, 4) + half) * a * a
    c = coef - vnorm2 / 2
    s = (Matrix.identity(n) * s_coef
         - (amat @ amat.T) * Fraction(1, 2)
         + (amat + amat.T) * (a / 4))
    da = c * a
    sv = s.matvec(v)
    dv = tuple(c * x + y - vnorm2 / 2 * x for x, y in zip(v, sv))
    dA = amat * c
    return da, dv, dA


def _pack(a, v, amat) -> np.ndarray:
    return np.concatenate(([a], v, np.asarray(amat, dtype=float).ravel()))


def _unpack(y: np.ndarray, n: int):
    return y[0], y[1:1 + n], y[1 + n:].reshape(n, n)


def _rhs_float(y: np.ndarray, k: int, n: int) -> np.ndarray:
    a, v, amat = _unpack(y, n)
    vnorm2 = float(v @ v)
    coef = -(k / 4.0 + 0.5) * a * a
    c = coef - vnorm2 / 2.0
    s = coef * np.eye(n) - 0.5 * (amat @ amat.T) + (a / 4.0) * (amat + amat.T)
    da = c * a
    dv = c * v + s @ v - 0.5 * vnorm2 * v
    damat = c * amat
    return _pack(da, dv, damat)


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray  # row i = packed state at times[i]
    k_half_rank: int
    dim_h1: int
    aborted: bool  # True when a non-finite state stopped the integration

    def state_at(self, index: int):
        return _unpack(self.states[index], self.dim_h1)

    def to_rows(self) -> list[list[float]]:
        return [[float(t)] + list(map(float, row))
                for t, row in zip(self.times, self.states)]

    def to_json_obj(self) -> dict:
        n = self.dim_h1
        header = (["t", "a"] + [f"v{i}" for i in range(1, n + 1)]
                  + [f"A{i}{j}" for i in range(1, n + 1)
                     for j in range(1, n + 1)])
        return {"columns": header, "rows": self.to_rows(),
                "k_half_rank": self.k_half_rank, "aborted": self.aborted}


def integrate(state: FlowState, t_end: float, dt: float = 1e-3) -> Trajectory:
    """Classical fixed-step RK4 from the given exact initial state."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    n = state.dim_h1
    k = state.k_half_rank
    y = _pack(float(state.a), [float(x) for x in state.v],
              [[float(x) for x in row] for row in state.A.rows])
    steps = int(round(t_end / dt))
    times = [0.0]
    out = [y]
    aborted = False
    for i in range(steps):
        k1 = _rhs_float(y, k, n)
        k2 = _rhs_float(y + dt / 2 * k1, k, n)
        k3 = _rhs_float(y + dt / 2 * k2, k, n)
        k4 = _rhs_float(y + dt * k3, k, n)
        y = y + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not np.all(np.isfinite(y)):
            aborted = True
            break
        times.append((i + 1) * dt)
        out.append(y)
    return Trajectory(np.array(times), np.vstack(out), k, n, aborted)


class PreSingularTimeError(ValueError):
    pass


def scaling_factor_squared(a0, k: int, t) -> Fraction:
    """c(t)^2 = 1/(1 + a0^2 (k/2 + 1) t), exact for rational inputs."""
    a0, t = Q(a0), Q(t)
    den = 1 + a0 * a0 * (Fraction(k, 2) + 1) * t
    if den <= 0:
        raise PreSingularTimeError(f"1 + a0^2 (k/2+1) t = {den} <= 0")
    return 1 / den


def closed_form_v0(a0, amat: Matrix, t) -> tuple[float, np.ndarray, Fraction]:
    """(a(t), A(t), c(t)^2) on the v = 0 branch: the pair scales by c(t).

    c(t)^2 is exact; the scaled pair is returned in floats since c itself
    is generally irrational.
    """
    rank = (amat + amat.T).rank()
    if rank % 2:
        raise ValueError("A + At must have even rank")
    k = rank // 2
    c2 = scaling_factor_squared(a0, k, t)
    c = float(c2) ** 0.5
    a_t = float(Q(a0)) * c
    amat_t = amat.to_float() * c
    return a_t, amat_t, c2


@dataclass(frozen=True)
class SolitonReport:
    is_soliton: bool
    max_deviation: float
    samples: list[float]
    tol: float


def soliton_check(state: FlowState, t_samples: list[float], dt: float = 1e-3,
                  tol: float = 1e-8) -> SolitonReport:
    """RK4 trajectory vs the closed-form scaling on the v = 0 branch."""
    if any(x != 0 for x in state.v):
        raise ValueError("soliton check requires v = 0")
    t_end = max(t_samples)
    traj = integrate(state, t_end, dt)
    a0 = float(state.a)
    amat0 = state.A.to_float()
    dev = 0.0
    for ts in t_samples:
        idx = int(round(ts / dt))
        a_num, v_num, amat_num = traj.state_at(idx)
        c = float(scaling_factor_squared(state.a, state.k_half_rank,
                                         Fraction(ts).limit_denominator(10 ** 9))) ** 0.5
        dev = max(dev, abs(a_num - c * a0),
                  float(np.max(np.abs(v_num))),
                  float(np.max(np.abs(amat_num - c * amat0))))
    return SolitonReport(dev <= tol, dev, list(t_samples), tol)


def skt_defect_float(a: float, amat: np.ndarray) -> float:
    """Max-norm of the symmetric part of a A + A^2 + At A (0 iff SKT)."""
    m = a * amat + amat @ amat + amat.T @ amat
    return float(np.max(np.abs(m + m.T)))
