"""Catalog of six-dimensional non-nilpotent almost abelian Lie algebras.

Families carry their printed structure equations, parameter constraints,
unimodularity condition, the explicit integrable complex structure where
one is listed, and the known Kaehler / SKT / split generalized Kaehler
example structures.  Family names follow the g- and k- numbering of the
standard six-dimensional classification; the three nilpotent almost
abelian algebras with complex structures are included as nilp1..nilp3.

Recognition of a given algebra against the catalog lives in
hermlie.recognition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .liealg import LieAlgebra, algebra_from_structure_equations
from .linalg import Matrix
from .scalars import Q


class UnknownAlgebraError(KeyError):
    pass


class ParameterError(ValueError):
    def __init__(self, name: str, violations: list[str]):
        self.violations = violations
        super().__init__(f"{name}: parameter constraints violated: "
                         + "; ".join(violations))


def j_from_pairs(pairs: Sequence[tuple[int, int]], dim: int = 6) -> Matrix:
    """Complex structure with J f_i = f_j for each 1-based (i, j) pair."""
    m = [[Fraction(0)] * dim for _ in range(dim)]
    for i, j in pairs:
        m[j - 1][i - 1] = Fraction(1)
        m[i - 1][j - 1] = Fraction(-1)
    return Matrix(m)


# recognition slot grammar: each slot names one block of ad_{f6}|_h
#   ("r", x)        real eigenvalue x, plain 1x1 block
#   ("j", x, k)     real eigenvalue x with a k x k Jordan block
#   ("c", u, w)     complex pair u +/- i w as a 2x2 rotation block
#   ("cj", u, w)    doubled complex pair with a nontrivial 2x2 complex Jordan
# where x/u/w are either exact constants or parameter names.
Slot = tuple


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple[str, ...]
    equations: Callable[[dict], list]
    constraints: Callable[[dict], list[str]]
    table: str
    unimodular_condition: Callable[[dict], bool] | None = None
    unimodular_desc: str = "-"
    complex_structure_pairs: tuple[tuple[int, int], ...] | None = None
    slots: tuple[Slot, ...] = ()
    scale_free: bool = False
    alias: str | None = None
    description: str = ""

    def admissible(self, params: dict) -> list[str]:
        missing = [p for p in self.params if p not in params]
        extra = [p for p in params if p not in self.params]
        out = []
        if missing:
            out.append(f"missing parameters {missing}")
        if extra:
            out.append(f"unknown parameters {extra}")
        if out:
            return out
        return self.constraints(params)


def _never(_params: dict) -> bool:
    return False


def _c(x) -> Fraction:
    return Q(x)


def _norm_params(params: dict) -> dict:
    return {k: Q(v) for k, v in params.items()}


FAMILIES: dict[str, Family] = {}


def _register(fam: Family):
    if fam.name in FAMILIES:
        raise ValueError(f"duplicate family {fam.name}")
    FAMILIES[fam.name] = fam


def _diag_eqs(coeffs):
    """Structure equations df^k = coeffs[k] f^{k6} (None entries omitted)."""
    eqs = []
    for k, c in enumerate(coeffs, start=1):
        eqs.append([(c, k, 6)] if c is not None else [])
    eqs.append([])
    return eqs


# --------------------------------------------------------------------------
# Table 1: indecomposable families
# --------------------------------------------------------------------------

_register(Family(
    "g6.1", ("p", "q", "r", "s"),
    lambda P: _diag_eqs([1, P["p"], P["q"], P["r"], P["s"]]),
    lambda P: _chain_abs(1, P["p"], P["q"], P["r"], P["s"]),
    "table1",
    lambda P: P["s"] == -1 - P["p"] - P["q"] - P["r"], "s = -1-p-q-r",
    slots=(("r", 1), ("r", "p"), ("r", "q"), ("r", "r"), ("r", "s")),
))

_register(Family(
    "g6.2", ("p", "q", "r"),
    lambda P: [[(1, 1, 6)], [(P["p"], 2, 6), (1, 3, 6)], [(P["p"], 3, 6)],
               [(P["q"], 4, 6)], [(P["r"], 5, 6)], []],
    lambda P: _chain_abs(1, P["q"], P["r"]),
    "table1",
    lambda P: P["r"] == -1 - 2 * P["p"] - P["q"], "r = -1-2p-q",
    slots=(("r", 1), ("j", "p", 2), ("r", "q"), ("r", "r")),
))

_register(Family(
    "g6.3", ("p", "q"),
    lambda P: [[(1, 1, 6)], [(P["p"], 2, 6), (1, 3, 6)],
               [(P["p"], 3, 6), (1, 4, 6)], [(P["p"], 4, 6)],
               [(P["q"], 5, 6)], []],
    lambda P: _chain_abs(1, P["q"]),
    "table1",
    lambda P: P["q"] == -1 - 3 * P["p"], "q = -1-3p",
    slots=(("r", 1), ("j", "p", 3), ("r", "q")),
))

_register(Family(
    "g6.4", ("p",),
    lambda P: [[(1, 1, 6)], [(P["p"], 2, 6), (1, 3, 6)],
               [(P["p"], 3, 6), (1, 4, 6)], [(P["p"], 4, 6), (1, 5, 6)],
               [(P["p"], 5, 6)], []],
    lambda P: [],
    "table1",
    lambda P: P["p"] == Fraction(-1, 4), "p = -1/4",
    slots=(("r", 1), ("j", "p", 4)),
))

_register(Family(
    "g6.5", (),
    lambda P: [[(1, 1, 6), (1, 2, 6)], [(1, 2, 6), (1, 3, 6)],
               [(1, 3, 6), (1, 4, 6)], [(1, 4, 6), (1, 5, 6)],
               [(1, 5, 6)], []],
    lambda P: [],
    "table1",
    slots=(("j", 1, 5),),
))

_register(Family(
    "g6.6", ("p", "q"),
    lambda P: [[(1, 1, 6)], [(P["p"], 2, 6), (1, 3, 6)], [(P["p"], 3, 6)],
               [(P["q"], 4, 6), (1, 5, 6)], [(P["q"], 5, 6)], []],
    lambda P: [] if abs(P["p"]) >= abs(P["q"]) else ["|p| >= |q|"],
    "table1",
    lambda P: P["q"] == Fraction(-1, 2) - P["p"], "q = -1/2-p",
    slots=(("r", 1), ("j", "p", 2), ("j", "q", 2)),
))

_register(Family(
    "g6.7", ("p", "q"),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6)], [(P["p"], 2, 6), (1, 3, 6)],
               [(P["p"], 3, 6)], [(P["q"], 4, 6), (1, 5, 6)],
               [(P["q"], 5, 6)], []],
    lambda P: [] if P["p"] ** 2 + P["q"] ** 2 != 0 else ["p^2+q^2 != 0"],
    "table1",
    lambda P: P["q"] == Fraction(-3, 2) * P["p"], "q = -3p/2",
    slots=(("j", "p", 3), ("j", "q", 2)),
    scale_free=True,
))

_register(Family(
    "g6.8", ("p", "q", "r", "s"),
    lambda P: [[(P["p"], 1, 6)], [(P["q"], 2, 6)], [(P["r"], 3, 6)],
               [(P["s"], 4, 6), (1, 5, 6)], [(-1, 4, 6), (P["s"], 5, 6)], []],
    lambda P: _chain_abs(P["p"], P["q"], P["r"]),
    "table1",
    lambda P: P["s"] == -(P["p"] + P["q"] + P["r"]) / 2, "s = -(p+q+r)/2",
    slots=(("r", "p"), ("r", "q"), ("r", "r"), ("c", "s", 1)),
))

_register(Family(
    "g6.9", ("p", "q", "r"),
    lambda P: [[(P["p"], 1, 6)], [(P["q"], 2, 6), (1, 3, 6)],
               [(P["q"], 3, 6)], [(P["r"], 4, 6), (1, 5, 6)],
               [(-1, 4, 6), (P["r"], 5, 6)], []],
    lambda P: [] if P["p"] != 0 else ["p != 0"],
    "table1",
    lambda P: P["r"] == -P["p"] / 2 - P["q"], "r = -p/2-q",
    slots=(("r", "p"), ("j", "q", 2), ("c", "r", 1)),
))

_register(Family(
    "g6.10", ("p", "q"),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6)], [(P["p"], 2, 6), (1, 3, 6)],
               [(P["p"], 3, 6)], [(P["q"], 4, 6), (1, 5, 6)],
               [(-1, 4, 6), (P["q"], 5, 6)], []],
    lambda P: [],
    "table1",
    lambda P: P["q"] == Fraction(-3, 2) * P["p"], "q = -3p/2",
    slots=(("j", "p", 3), ("c", "q", 1)),
))

_register(Family(
    "g6.11", ("p", "q", "r", "s"),
    lambda P: [[(P["p"], 1, 6)], [(P["q"], 2, 6), (1, 3, 6)],
               [(-1, 2, 6), (P["q"], 3, 6)],
               [(P["r"], 4, 6), (P["s"], 5, 6)],
               [(-P["s"], 4, 6), (P["r"], 5, 6)], []],
    lambda P: _g611_constraints(P),
    "table1",
    lambda P: P["r"] == -P["p"] / 2 - P["q"], "r = -p/2-q",
    slots=(("r", "p"), ("c", "q", 1), ("c", "r", "s")),
))

_register(Family(
    "g6.12", ("p", "q"),
    lambda P: [[(P["p"], 1, 6)],
               [(P["q"], 2, 6), (1, 3, 6), (-1, 4, 6)],
               [(-1, 2, 6), (P["q"], 3, 6), (-1, 5, 6)],
               [(P["q"], 4, 6), (1, 5, 6)],
               [(-1, 4, 6), (P["q"], 5, 6)], []],
    lambda P: [] if P["p"] != 0 else ["p != 0"],
    "table1",
    lambda P: P["q"] == -P["p"] / 4, "q = -p/4",
    slots=(("r", "p"), ("cj", "q", 1)),
))


def _g611_constraints(P) -> list[str]:
    out = []
    if P["p"] * P["s"] == 0:
        out.append("ps != 0")
    q, r, s = abs(P["q"]), abs(P["r"]), abs(P["s"])
    if not (q > r or (q == r and s <= 1)):
        out.append("|q| > |r| or (|q| = |r| and |s| <= 1)")
    return out


def _chain_abs(*vals) -> list[str]:
    """1 >= |v1| >= ... >= |vk| > 0 style chains (first value literal)."""
    out = []
    seq = [abs(Q(v)) for v in vals]
    for a, b in zip(seq, seq[1:]):
        if a < b:
            out.append("nonincreasing absolute values required")
            break
    if seq and seq[-1] == 0:
        out.append("last parameter must be nonzero")
    if seq and seq[0] > 1:
        out.append("leading absolute value exceeds 1")
    return out


# --------------------------------------------------------------------------
# Table 2: decomposable families
# --------------------------------------------------------------------------

_register(Family(
    "g2+4R", (),
    lambda P: _diag_eqs([1, None, None, None, None]),
    lambda P: [],
    "table2",
    slots=(("r", 1), ("r", 0), ("r", 0), ("r", 0), ("r", 0)),
))

_register(Family(
    "g3.2+3R", (),
    lambda P: [[(1, 1, 6), (1, 2, 6)], [(1, 2, 6)], [], [], [], []],
    lambda P: [],
    "table2",
    slots=(("j", 1, 2), ("r", 0), ("r", 0), ("r", 0)),
))

_register(Family(
    "g3.3+3R", (),
    lambda P: _diag_eqs([1, 1, None, None, None]),
    lambda P: [],
    "table2",
    slots=(("r", 1), ("r", 1), ("r", 0), ("r", 0), ("r", 0)),
))

_register(Family(
    "g3.4+3R", ("p",),
    lambda P: _diag_eqs([1, P["p"], None, None, None]),
    lambda P: ([] if 0 < abs(P["p"]) <= 1 else ["1 >= |p| > 0"])
    + ([] if P["p"] != 1 else ["p != 1"]),
    "table2",
    lambda P: P["p"] == -1, "p = -1",
    slots=(("r", 1), ("r", "p"), ("r", 0), ("r", 0), ("r", 0)),
))

_register(Family(
    "g3.5+3R", ("p",),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6)], [(-1, 1, 6), (P["p"], 2, 6)],
               [], [], [], []],
    lambda P: [],
    "table2",
    lambda P: P["p"] == 0, "p = 0",
    slots=(("c", "p", 1), ("r", 0), ("r", 0), ("r", 0)),
))

_register(Family(
    "g4.2+2R", ("p",),
    lambda P: [[(P["p"], 1, 6)], [(1, 2, 6), (1, 3, 6)], [(1, 3, 6)],
               [], [], []],
    lambda P: [] if P["p"] != 0 else ["p != 0"],
    "table2",
    lambda P: P["p"] == -2, "p = -2",
    slots=(("r", "p"), ("j", 1, 2), ("r", 0), ("r", 0)),
))

_register(Family(
    "g4.3+2R", (),
    lambda P: [[(1, 1, 6)], [(1, 3, 6)], [], [], [], []],
    lambda P: [],
    "table2",
    slots=(("r", 1), ("j", 0, 2), ("r", 0), ("r", 0)),
))

_register(Family(
    "g4.4+2R", (),
    lambda P: [[(1, 1, 6), (1, 2, 6)], [(1, 2, 6), (1, 3, 6)], [(1, 3, 6)],
               [], [], []],
    lambda P: [],
    "table2",
    slots=(("j", 1, 3), ("r", 0), ("r", 0)),
))

_register(Family(
    "g4.5+2R", ("p", "q"),
    lambda P: _diag_eqs([1, P["p"], P["q"], None, None]),
    lambda P: _chain_abs(1, P["p"], P["q"]),
    "table2",
    lambda P: P["q"] == -1 - P["p"], "q = -1-p",
    slots=(("r", 1), ("r", "p"), ("r", "q"), ("r", 0), ("r", 0)),
))

_register(Family(
    "g4.6+2R", ("p", "q"),
    lambda P: [[(P["p"], 1, 6)], [(P["q"], 2, 6), (1, 3, 6)],
               [(-1, 2, 6), (P["q"], 3, 6)], [], [], []],
    lambda P: [] if P["p"] != 0 else ["p != 0"],
    "table2",
    lambda P: P["q"] == -P["p"] / 2, "q = -p/2",
    slots=(("r", "p"), ("c", "q", 1), ("r", 0), ("r", 0)),
))

_register(Family(
    "g5.7+R", ("p", "q", "r"),
    lambda P: _diag_eqs([1, P["p"], P["q"], P["r"], None]),
    lambda P: _chain_abs(1, P["p"], P["q"], P["r"]),
    "table2",
    lambda P: P["r"] == -1 - P["p"] - P["q"], "r = -1-p-q",
    slots=(("r", 1), ("r", "p"), ("r", "q"), ("r", "r"), ("r", 0)),
))

_register(Family(
    "g5.8+R", ("p",),
    lambda P: [[(1, 1, 6)], [(P["p"], 2, 6)], [(1, 4, 6)], [], [], []],
    lambda P: [] if 0 < abs(P["p"]) <= 1 else ["1 >= |p| > 0"],
    "table2",
    lambda P: P["p"] == -1, "p = -1",
    slots=(("r", 1), ("r", "p"), ("j", 0, 2), ("r", 0)),
))

_register(Family(
    "g5.9+R", ("p", "q"),
    lambda P: [[(P["p"], 1, 6)], [(P["q"], 2, 6)], [(1, 3, 6), (1, 4, 6)],
               [(1, 4, 6)], [], []],
    lambda P: ([] if abs(P["p"]) >= abs(P["q"]) else ["|p| >= |q|"])
    + ([] if P["q"] != 0 else ["q != 0"]),
    "table2",
    lambda P: P["q"] == -2 - P["p"], "q = -2-p",
    slots=(("r", "p"), ("r", "q"), ("j", 1, 2), ("r", 0)),
))

_register(Family(
    "g5.10+R", (),
    lambda P: [[(1, 1, 6)], [(1, 3, 6)], [(1, 4, 6)], [], [], []],
    lambda P: [],
    "table2",
    slots=(("r", 1), ("j", 0, 3), ("r", 0)),
))

_register(Family(
    "g5.11+R", ("p",),
    lambda P: [[(P["p"], 1, 6)], [(1, 2, 6), (1, 3, 6)],
               [(1, 3, 6), (1, 4, 6)], [(1, 4, 6)], [], []],
    lambda P: [] if P["p"] != 0 else ["p != 0"],
    "table2",
    lambda P: P["p"] == -3, "p = -3",
    slots=(("r", "p"), ("j", 1, 3), ("r", 0)),
))

_register(Family(
    "g5.12+R", (),
    lambda P: [[(1, 1, 6), (1, 2, 6)], [(1, 2, 6), (1, 3, 6)],
               [(1, 3, 6), (1, 4, 6)], [(1, 4, 6)], [], []],
    lambda P: [],
    "table2",
    slots=(("j", 1, 4), ("r", 0)),
))

_register(Family(
    "g5.13+R", ("p", "q", "r"),
    lambda P: [[(1, 1, 6)], [(P["p"], 2, 6)],
               [(P["q"], 3, 6), (P["r"], 4, 6)],
               [(-P["r"], 3, 6), (P["q"], 4, 6)], [], []],
    lambda P: ([] if 0 < abs(P["p"]) <= 1 else ["1 >= |p| > 0"])
    + ([] if P["r"] != 0 else ["r != 0"]),
    "table2",
    lambda P: P["q"] == -(1 + P["p"]) / 2, "q = -(1+p)/2",
    slots=(("r", 1), ("r", "p"), ("c", "q", "r"), ("r", 0)),
))

_register(Family(
    "g5.14+R", ("p",),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6)], [(-1, 1, 6), (P["p"], 2, 6)],
               [(1, 4, 6)], [], [], []],
    lambda P: [],
    "table2",
    lambda P: P["p"] == 0, "p = 0",
    slots=(("c", "p", 1), ("j", 0, 2), ("r", 0)),
))

_register(Family(
    "g5.15+R", ("p",),
    lambda P: [[(1, 1, 6), (1, 2, 6)], [(1, 2, 6)],
               [(P["p"], 3, 6), (1, 4, 6)], [(P["p"], 4, 6)], [], []],
    lambda P: [] if abs(P["p"]) <= 1 else ["|p| <= 1"],
    "table2",
    lambda P: P["p"] == -1, "p = -1",
    slots=(("j", 1, 2), ("j", "p", 2), ("r", 0)),
))

_register(Family(
    "g5.16+R", ("p", "q"),
    lambda P: [[(1, 1, 6), (1, 2, 6)], [(1, 2, 6)],
               [(P["p"], 3, 6), (P["q"], 4, 6)],
               [(-P["q"], 3, 6), (P["p"], 4, 6)], [], []],
    lambda P: [] if P["q"] != 0 else ["q != 0"],
    "table2",
    lambda P: P["p"] == -1, "p = -1",
    slots=(("j", 1, 2), ("c", "p", "q"), ("r", 0)),
))

_register(Family(
    "g5.17+R", ("p", "q", "r"),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6)], [(-1, 1, 6), (P["p"], 2, 6)],
               [(P["q"], 3, 6), (P["r"], 4, 6)],
               [(-P["r"], 3, 6), (P["q"], 4, 6)], [], []],
    lambda P: _g517_constraints(P),
    "table2",
    lambda P: P["q"] == -P["p"], "q = -p",
    slots=(("c", "p", 1), ("c", "q", "r"), ("r", 0)),
))

_register(Family(
    "g5.18+R", ("p",),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6), (-1, 3, 6)],
               [(-1, 1, 6), (P["p"], 2, 6), (-1, 4, 6)],
               [(P["p"], 3, 6), (1, 4, 6)],
               [(-1, 3, 6), (P["p"], 4, 6)], [], []],
    lambda P: [],
    "table2",
    lambda P: P["p"] == 0, "p = 0",
    slots=(("cj", "p", 1), ("r", 0)),
))


def _g517_constraints(P) -> list[str]:
    out = []
    if P["r"] == 0:
        out.append("r != 0")
    p, q, r = abs(P["p"]), abs(P["q"]), abs(P["r"])
    if not (p > q or (p == q and r <= 1)):
        out.append("|p| > |q| or (|p| = |q| and |r| <= 1)")
    return out


# --------------------------------------------------------------------------
# Table 3 / the k-list: families admitting complex structures
# --------------------------------------------------------------------------

def _register_k(name, params, equations, constraints, j_pairs, slots,
                alias, scale_free=False):
    _register(Family(name, params, equations, constraints, "table3",
                     complex_structure_pairs=tuple(j_pairs), slots=slots,
                     scale_free=scale_free, alias=alias))


_register_k(
    "k1", ("p", "r"),
    lambda P: _diag_eqs([1, P["p"], P["p"], P["r"], P["r"]]),
    lambda P: _chain_abs(1, P["p"], P["r"]),
    [(1, 6), (2, 3), (4, 5)],
    (("r", 1), ("r", "p"), ("r", "p"), ("r", "r"), ("r", "r")),
    "g6.1^{p,p,r,r}")

_register_k(
    "k2", ("q", "r"),
    lambda P: _diag_eqs([1, 1, P["q"], P["r"], P["r"]]),
    lambda P: _strict_chain(P["q"], P["r"]),
    [(1, 2), (3, 6), (4, 5)],
    (("r", 1), ("r", 1), ("r", "q"), ("r", "r"), ("r", "r")),
    "g6.1^{1,q,r,r}")


def _strict_chain(q, r) -> list[str]:
    # 1 > |q| >= |r| > 0
    out = []
    if not abs(q) < 1:
        out.append("1 > |q|")
    if not abs(q) >= abs(r):
        out.append("|q| >= |r|")
    if r == 0:
        out.append("|r| > 0")
    return out


_register_k(
    "k3", ("q", "s"),
    lambda P: _diag_eqs([1, 1, P["q"], P["q"], P["s"]]),
    lambda P: ([] if 0 < abs(P["q"]) <= 1 else ["1 >= |q| > 0"])
    + ([] if 0 < abs(P["s"]) < abs(P["q"]) else ["|q| > |s| > 0"]),
    [(1, 2), (3, 4), (5, 6)],
    (("r", 1), ("r", 1), ("r", "q"), ("r", "q"), ("r", "s")),
    "g6.1^{1,q,q,s}")

_register_k(
    "k4", ("q",),
    lambda P: [[(1, 1, 6)], [(1, 2, 6), (1, 3, 6)], [(1, 3, 6)],
               [(P["q"], 4, 6)], [(P["q"], 5, 6)], []],
    lambda P: [] if 0 < abs(P["q"]) <= 1 else ["1 >= |q| > 0"],
    [(2, 1), (3, 6), (4, 5)],
    (("r", 1), ("j", 1, 2), ("r", "q"), ("r", "q")),
    "g6.2^{1,q,q}")

_register_k(
    "k5", ("p",),
    lambda P: [[(1, 1, 6)], [(P["p"], 2, 6), (1, 3, 6)], [(P["p"], 3, 6)],
               [(1, 4, 6)], [(P["p"], 5, 6)], []],
    lambda P: [] if 0 < abs(P["p"]) < 1 else ["1 > |p| > 0"],
    [(1, 4), (2, 5), (3, 6)],
    (("r", 1), ("r", 1), ("j", "p", 2), ("r", "p")),
    "g6.2^{p,1,p}")

_register_k(
    "k6", ("p",),
    lambda P: [[(1, 1, 6)], [(P["p"], 2, 6), (1, 3, 6)], [(P["p"], 3, 6)],
               [(P["p"], 4, 6), (1, 5, 6)], [(P["p"], 5, 6)], []],
    lambda P: [],
    [(1, 6), (2, 4), (3, 5)],
    (("r", 1), ("j", "p", 2), ("j", "p", 2)),
    "g6.6^{p,p}")

_register_k(
    "k7", ("p",),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6)], [(P["p"], 2, 6), (1, 3, 6)],
               [(P["p"], 3, 6)], [(P["p"], 4, 6), (1, 5, 6)],
               [(P["p"], 5, 6)], []],
    lambda P: [] if P["p"] != 0 else ["p != 0"],
    [(1, 4), (2, 5), (3, 6)],
    (("j", "p", 3), ("j", "p", 2)),
    "g6.7^{p,p}", scale_free=True)

_register_k(
    "k8", ("p", "q", "s"),
    lambda P: [[(P["p"], 1, 6)], [(P["q"], 2, 6)], [(P["q"], 3, 6)],
               [(P["s"], 4, 6), (1, 5, 6)], [(-1, 4, 6), (P["s"], 5, 6)], []],
    lambda P: [] if abs(P["p"]) >= abs(P["q"]) > 0 else ["|p| >= |q| > 0"],
    [(1, 6), (2, 3), (4, 5)],
    (("r", "p"), ("r", "q"), ("r", "q"), ("c", "s", 1)),
    "g6.8^{p,q,q,s}")

_register_k(
    "k9", ("p", "r", "s"),
    lambda P: [[(P["p"], 1, 6)], [(P["p"], 2, 6)], [(P["r"], 3, 6)],
               [(P["s"], 4, 6), (1, 5, 6)], [(-1, 4, 6), (P["s"], 5, 6)], []],
    lambda P: [] if abs(P["p"]) > abs(P["r"]) > 0 else ["|p| > |r| > 0"],
    [(1, 2), (3, 6), (4, 5)],
    (("r", "p"), ("r", "p"), ("r", "r"), ("c", "s", 1)),
    "g6.8^{p,p,r,s}")

_register_k(
    "k10", ("p", "r"),
    lambda P: [[(P["p"], 1, 6)], [(P["p"], 2, 6), (1, 3, 6)],
               [(P["p"], 3, 6)], [(P["r"], 4, 6), (1, 5, 6)],
               [(-1, 4, 6), (P["r"], 5, 6)], []],
    lambda P: [] if P["p"] != 0 else ["p != 0"],
    [(2, 1), (3, 6), (4, 5)],
    (("r", "p"), ("j", "p", 2), ("c", "r", 1)),
    "g6.9^{p,p,r}")

_register_k(
    "k11", ("p", "q", "r", "s"),
    lambda P: [[(P["p"], 1, 6)], [(P["q"], 2, 6), (1, 3, 6)],
               [(-1, 2, 6), (P["q"], 3, 6)],
               [(P["r"], 4, 6), (P["s"], 5, 6)],
               [(-P["s"], 4, 6), (P["r"], 5, 6)], []],
    _g611_constraints,
    [(1, 6), (2, 3), (4, 5)],
    (("r", "p"), ("c", "q", 1), ("c", "r", "s")),
    "g6.11^{p,q,r,s}")

_register_k(
    "k12", ("p", "q"),
    lambda P: [[(P["p"], 1, 6)],
               [(P["q"], 2, 6), (1, 3, 6), (-1, 4, 6)],
               [(-1, 2, 6), (P["q"], 3, 6), (-1, 5, 6)],
               [(P["q"], 4, 6), (1, 5, 6)],
               [(-1, 4, 6), (P["q"], 5, 6)], []],
    lambda P: [] if P["p"] != 0 else ["p != 0"],
    [(1, 6), (2, 3), (4, 5)],
    (("r", "p"), ("cj", "q", 1)),
    "g6.12^{p,q}")

_register_k(
    "k13", (),
    lambda P: _diag_eqs([1, None, None, None, None]),
    lambda P: [],
    [(1, 6), (2, 3), (4, 5)],
    (("r", 1), ("r", 0), ("r", 0), ("r", 0), ("r", 0)),
    "g2+4R")

_register_k(
    "k14", (),
    lambda P: _diag_eqs([1, 1, None, None, None]),
    lambda P: [],
    [(1, 2), (3, 4), (5, 6)],
    (("r", 1), ("r", 1), ("r", 0), ("r", 0), ("r", 0)),
    "g3.3+3R")

_register_k(
    "k15", ("p",),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6)], [(-1, 1, 6), (P["p"], 2, 6)],
               [], [], [], []],
    lambda P: [],
    [(1, 2), (3, 4), (5, 6)],
    (("c", "p", 1), ("r", 0), ("r", 0), ("r", 0)),
    "g3.5+3R")

_register_k(
    "k16", (),
    lambda P: [[(1, 1, 6)], [(1, 2, 6), (1, 3, 6)], [(1, 3, 6)],
               [], [], []],
    lambda P: [],
    [(2, 1), (3, 6), (4, 5)],
    (("r", 1), ("j", 1, 2), ("r", 0), ("r", 0)),
    "g4.2^{1}+2R")

_register_k(
    "k17", ("p",),
    lambda P: _diag_eqs([1, P["p"], P["p"], None, None]),
    lambda P: [] if 0 < abs(P["p"]) <= 1 else ["1 >= |p| > 0"],
    [(1, 6), (2, 3), (4, 5)],
    (("r", 1), ("r", "p"), ("r", "p"), ("r", 0), ("r", 0)),
    "g4.5^{p,p}+2R")

_register_k(
    "k18", ("q",),
    lambda P: _diag_eqs([1, 1, P["q"], None, None]),
    lambda P: [] if 0 < abs(P["q"]) < 1 else ["1 > |q| > 0"],
    [(1, 2), (3, 6), (4, 5)],
    (("r", 1), ("r", 1), ("r", "q"), ("r", 0), ("r", 0)),
    "g4.5^{1,q}+2R")

_register_k(
    "k19", ("p", "q"),
    lambda P: [[(P["p"], 1, 6)], [(P["q"], 2, 6), (1, 3, 6)],
               [(-1, 2, 6), (P["q"], 3, 6)], [], [], []],
    lambda P: [] if P["p"] != 0 else ["p != 0"],
    [(1, 6), (2, 3), (4, 5)],
    (("r", "p"), ("c", "q", 1), ("r", 0), ("r", 0)),
    "g4.6^{p,q}+2R")

_register_k(
    "k20", ("q",),
    lambda P: _diag_eqs([1, 1, P["q"], P["q"], None]),
    lambda P: [] if 0 < abs(P["q"]) <= 1 else ["1 >= |q| > 0"],
    [(1, 2), (3, 4), (5, 6)],
    (("r", 1), ("r", 1), ("r", "q"), ("r", "q"), ("r", 0)),
    "g5.7^{1,q,q}+R")

_register_k(
    "k21", (),
    lambda P: [[(1, 1, 6)], [(1, 2, 6)], [(1, 4, 6)], [], [], []],
    lambda P: [],
    [(1, 2), (3, 5), (4, 6)],
    (("r", 1), ("r", 1), ("j", 0, 2), ("r", 0)),
    "g5.8^{1}+R")

_register_k(
    "k22", ("q", "r"),
    lambda P: [[(1, 1, 6)], [(1, 2, 6)],
               [(P["q"], 3, 6), (P["r"], 4, 6)],
               [(-P["r"], 3, 6), (P["q"], 4, 6)], [], []],
    lambda P: [] if P["r"] != 0 else ["r != 0"],
    [(1, 2), (3, 4), (5, 6)],
    (("r", 1), ("r", 1), ("c", "q", "r"), ("r", 0)),
    "g5.13^{1,q,r}+R")

_register_k(
    "k23", ("p",),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6)], [(-1, 1, 6), (P["p"], 2, 6)],
               [(1, 4, 6)], [], [], []],
    lambda P: [],
    [(1, 2), (3, 5), (4, 6)],
    (("c", "p", 1), ("j", 0, 2), ("r", 0)),
    "g5.14^{p}+R")

_register_k(
    "k24", (),
    lambda P: [[(1, 1, 6), (1, 2, 6)], [(1, 2, 6)],
               [(1, 3, 6), (1, 4, 6)], [(1, 4, 6)], [], []],
    lambda P: [],
    [(1, 3), (2, 4), (5, 6)],
    (("j", 1, 2), ("j", 1, 2), ("r", 0)),
    "g5.15^{1}+R")

_register_k(
    "k25", ("p", "q", "r"),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6)], [(-1, 1, 6), (P["p"], 2, 6)],
               [(P["q"], 3, 6), (P["r"], 4, 6)],
               [(-P["r"], 3, 6), (P["q"], 4, 6)], [], []],
    _g517_constraints,
    [(1, 2), (3, 4), (5, 6)],
    (("c", "p", 1), ("c", "q", "r"), ("r", 0)),
    "g5.17^{p,q,r}+R")

_register_k(
    "k26", ("p",),
    lambda P: [[(P["p"], 1, 6), (1, 2, 6), (-1, 3, 6)],
               [(-1, 1, 6), (P["p"], 2, 6), (-1, 4, 6)],
               [(P["p"], 3, 6), (1, 4, 6)],
               [(-1, 3, 6), (P["p"], 4, 6)], [], []],
    lambda P: [],
    [(1, 2), (3, 4), (5, 6)],
    (("cj", "p", 1), ("r", 0)),
    "g5.18^{p}+R")


# --------------------------------------------------------------------------
# the nilpotent almost abelian algebras with complex structures
# --------------------------------------------------------------------------

_register(Family(
    "nilp1", (),
    lambda P: [[], [], [], [], [], [(1, 1, 2)]],
    lambda P: [],
    "nilpotent",
    description="(0,0,0,0,0,f12) = h3 + 3R",
))

_register(Family(
    "nilp2", (),
    lambda P: [[], [], [], [], [(1, 1, 2)], [(1, 1, 3)]],
    lambda P: [],
    "nilpotent",
    description="(0,0,0,0,f12,f13)",
))

_register(Family(
    "nilp3", (),
    lambda P: [[], [], [], [(1, 1, 2)], [(1, 1, 3)], [(1, 1, 4)]],
    lambda P: [],
    "nilpotent",
    description="(0,0,0,f12,f13,f14)",
))


# --------------------------------------------------------------------------
# building and printed example structures
# --------------------------------------------------------------------------

def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise UnknownAlgebraError(
            f"unknown algebra {name!r}; known: {sorted(FAMILIES)}") from None


def build(name: str, params: dict | None = None) -> LieAlgebra:
    """Construct a catalog algebra with exactly the printed equations."""
    fam = get_family(name)
    p = _norm_params(params or {})
    violations = fam.admissible(p)
    if violations:
        raise ParameterError(name, violations)
    return algebra_from_structure_equations(fam.equations(p))


def table3_complex_structure(name: str) -> Matrix:
    """The printed integrable J for a row of the complex-structure list."""
    fam = get_family(name)
    if fam.complex_structure_pairs is None:
        raise UnknownAlgebraError(f"{name} has no tabulated complex structure")
    return j_from_pairs(fam.complex_structure_pairs)


J_EXAMPLE_KAHLER = j_from_pairs([(1, 6), (2, 3), (4, 5)])
J_EXAMPLE_KAHLER_SPLIT = j_from_pairs([(1, 2), (3, 4), (5, 6)])
J_K23_SKT = j_from_pairs([(1, 2), (3, 5), (4, 6)])
J_GK_PLUS = j_from_pairs([(1, 6), (2, 3), (4, 5)])
J_GK_MINUS = j_from_pairs([(1, 6), (3, 2), (5, 4)])
G_STANDARD = Matrix.identity(6)


@dataclass(frozen=True)
class KnownStructure:
    role: str  # kahler | skt | gk_split
    j_plus: Matrix
    g: Matrix
    j_minus: Matrix | None = None


def _match(params: dict, **fixed) -> bool:
    return all(params.get(k) == Q(v) for k, v in fixed.items())


def known_structures(name: str, params: dict | None = None) -> list[KnownStructure]:
    """Printed structures (with their roles) valid for these parameters."""
    fam = get_family(name)
    p = _norm_params(params or {})
    violations = fam.admissible(p)
    if violations:
        raise ParameterError(name, violations)
    out: list[KnownStructure] = []
    half = Fraction(-1, 2)

    def add(role, j=J_EXAMPLE_KAHLER, jm=None, g=G_STANDARD):
        out.append(KnownStructure(role, j, g, jm))

    def add_gk():
        add("gk_split", J_GK_PLUS, jm=J_GK_MINUS)

    if name == "k11" and _match(p, q=0, r=0):
        add("kahler")
    if name == "k13":
        add("kahler")
    if name == "k19" and _match(p, q=0):
        add("kahler")
    if name == "k15" and _match(p, p=0):
        add("kahler", J_EXAMPLE_KAHLER_SPLIT)
    if name == "k25" and _match(p, p=0, q=0):
        add("kahler", J_EXAMPLE_KAHLER_SPLIT)

    skt = False
    if name == "k1" and _match(p, p=half, r=half):
        skt = True
    if name == "k8" and p.get("q") == -p.get("p") / 2 and p.get("s") in (0, -p.get("p") / 2):
        skt = True
    if name == "k11" and p.get("q") == -p.get("p") / 2 and p.get("r") in (0, -p.get("p") / 2):
        skt = True
    if name == "k17" and _match(p, p=half):
        skt = True
    if name == "k19" and p.get("q") == -p.get("p") / 2:
        skt = True
    if skt:
        add("skt")
        add_gk()
    if name == "k23" and _match(p, p=0):
        add("skt", J_K23_SKT)
    return out


def manifest() -> list[dict]:
    """JSON-ready export of all catalog rows."""
    rows = []
    for name in sorted(FAMILIES):
        fam = FAMILIES[name]
        rows.append({
            "name": name,
            "params": list(fam.params),
            "table": fam.table,
            "alias": fam.alias,
            "unimodular": fam.unimodular_desc,
            "has_complex_structure": fam.complex_structure_pairs is not None,
            "description": fam.description,
        })
    return rows
