"""Best-effort recognition of a Lie algebra against the catalog.

The similarity class of ad_x restricted to the codimension-one abelian
ideal, taken up to a nonzero rescaling of x, is a complete isomorphism
invariant for almost abelian algebras whose abelian hyperplane ideal is
unique (every non-nilpotent case; for the nilpotent trio the Jordan type
is choice-independent).  Recognition therefore proposes parameters and a
rescaling from the exact spectrum and then verifies each proposal with an
exact similarity test, so false positives are impossible; multiple
candidate names are expected (different rows can describe isomorphic
algebras) and an empty list simply means "not recognized".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalog import FAMILIES, Family, build, get_family
from .liealg import LieAlgebra, find_codim1_abelian_ideal, is_unimodular
from .linalg import Matrix, mat_from_vectors, solve_particular
from .scalars import Q
from .spectra import SpectrumReport, are_similar, char_poly_spectrum


@dataclass(frozen=True)
class RecognitionInvariants:
    almost_abelian: bool
    dim_derived: int
    nilpotent: bool
    unimodular: bool
    abelian: bool
    spectrum: SpectrumReport | None
    jordan_type: tuple  # ((value-kind, size) ...) coarse partition data


@dataclass(frozen=True)
class Candidate:
    name: str
    params: dict
    scale: Fraction
    scale_free: bool = False

    def __repr__(self):
        ps = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        tag = ", free scale" if self.scale_free else ""
        return f"Candidate({self.name}[{ps}], t={self.scale}{tag})"


def ideal_frame_operator(alg: LieAlgebra) -> Matrix | None:
    """ad_x on a codim-1 abelian ideal h, for a deterministic x not in h."""
    h = find_codim1_abelian_ideal(alg)
    if h is None:
        return None
    n = alg.dim
    hrank = h.rank()
    x = None
    for i in range(n):
        e = tuple(Fraction(int(k == i)) for k in range(n))
        aug = mat_from_vectors(h.cols() + [e])
        if aug.rank() > hrank:
            x = e
            break
    assert x is not None
    cols = []
    for u in h.cols():
        w = alg.bracket_vec(x, u)
        sol = solve_particular(h.rows, w)
        assert sol is not None
        cols.append(sol)
    return mat_from_vectors(cols)


def family_b_matrix(fam: Family, params: dict) -> Matrix:
    """ad_{f6} on span(f1..f5) read off the printed structure equations."""
    eqs = fam.equations({k: Q(v) for k, v in params.items()})
    b = [[Fraction(0)] * 5 for _ in range(5)]
    for k, terms in enumerate(eqs[:5]):
        for coeff, i, j in terms:
            if j == 6:
                b[k][i - 1] = Q(coeff)
            else:
                raise ValueError("family has non-almost-abelian equations")
    return Matrix(b)


def _atoms(report: SpectrumReport):
    """Per-block eigen atoms: reals (value, size), complex (u, w, size)."""
    reals = []
    for e in report.rational_eigenvalues:
        for size in e.partition:
            reals.append((e.value, size))
    cpx = []
    for qf in report.quadratic_factors:
        w = qf.w
        if w is None:
            return None, None  # irrational rotation: outside the catalog
        for size in qf.partition:
            cpx.append((qf.u, w, size))
    return reals, cpx


def recognize(alg: LieAlgebra) -> tuple[list[Candidate], RecognitionInvariants]:
    """Catalog candidates compatible with the algebra, plus its invariants."""
    m = ideal_frame_operator(alg)
    nilpotent = alg.is_nilpotent()
    unimodular = is_unimodular(alg)
    abelian = alg.is_abelian()
    if m is None:
        inv = RecognitionInvariants(False, alg.derived_dim(), nilpotent,
                                    unimodular, abelian, None, ())
        return [], inv
    report = char_poly_spectrum(m)
    reals, cpx = _atoms(report)
    jordan = tuple(sorted(
        [("r", str(v), s) for v, s in (reals or [])]
        + [("c", str(u), str(w), s) for u, w, s in (cpx or [])]))
    inv = RecognitionInvariants(True, alg.derived_dim(), nilpotent,
                                unimodular, abelian, report, jordan)
    if abelian:
        return [], inv
    candidates: list[Candidate] = []
    if nilpotent:
        for name in ("nilp1", "nilp2", "nilp3"):
            ref = ideal_frame_operator(build(name))
            if are_similar(m, ref):
                candidates.append(Candidate(name, {}, Fraction(1)))
        return candidates, inv
    if reals is None:
        return [], inv
    seen = set()
    for name, fam in FAMILIES.items():
        if not fam.slots:
            continue
        if len(fam.slots) != len(reals) + len(cpx):
            continue
        for t in _scale_candidates(fam, reals, cpx):
            for params in _assign(fam.slots, reals, cpx, t):
                if fam.admissible(params):
                    continue
                key = (name, tuple(sorted(params.items())))
                if key in seen:
                    continue
                ref = family_b_matrix(fam, params) * t
                if are_similar(ref, m):
                    seen.add(key)
                    candidates.append(Candidate(name, params, t,
                                                fam.scale_free))
    candidates.sort(key=lambda c: c.name)
    return candidates, inv


def _scale_candidates(fam: Family, reals, cpx) -> list[Fraction]:
    out = []
    for slot in fam.slots:
        kind = slot[0]
        if kind in ("r", "j"):
            c = slot[1]
            size = 1 if kind == "r" else slot[2]
            if isinstance(c, str) or c == 0:
                continue
            c = Q(c)
            for val, s in reals:
                if s == size and val != 0:
                    out.append(val / c)
        else:  # c / cj
            u0, w0 = slot[1], slot[2]
            size = 2 if kind == "cj" else 1
            for u, w, s in cpx:
                if s != size:
                    continue
                if not isinstance(w0, str) and w0 != 0:
                    out.extend([w / Q(w0), -w / Q(w0)])
                if not isinstance(u0, str) and u0 != 0 and u != 0:
                    out.append(u / Q(u0))
    if fam.scale_free:
        for val, _ in reals:
            if val != 0:
                out.append(val)
                break
        else:
            for u, w, _ in cpx:
                if w != 0:
                    out.append(w)
                    break
    uniq = []
    for t in out:
        if t != 0 and t not in uniq:
            uniq.append(t)
    return uniq


def _assign(slots, reals, cpx, t) -> list[dict]:
    """All parameter bindings matching slots to eigen atoms at scale t."""
    results: list[dict] = []
    reals = list(reals)
    cpx = list(cpx)

    def match_expr(expr, value, binding):
        if isinstance(expr, str):
            if expr in binding:
                return binding[expr] == value
            binding[expr] = value
            return True
        return Q(expr) == value

    def rec(i, used_r, used_c, binding):
        if i == len(slots):
            results.append(dict(binding))
            return
        slot = slots[i]
        kind = slot[0]
        if kind in ("r", "j"):
            size = 1 if kind == "r" else slot[2]
            expr = slot[1]
            seen_vals = set()
            for a, (val, s) in enumerate(reals):
                if a in used_r or s != size:
                    continue
                scaled = val / t
                if scaled in seen_vals:
                    continue
                seen_vals.add(scaled)
                b2 = dict(binding)
                if match_expr(expr, scaled, b2):
                    rec(i + 1, used_r | {a}, used_c, b2)
        else:
            size = 2 if kind == "cj" else 1
            u_expr, w_expr = slot[1], slot[2]
            seen_vals = set()
            for a, (u, w, s) in enumerate(cpx):
                if a in used_c or s != size:
                    continue
                for w_signed in (w, -w):
                    key = (u / t, w_signed / t)
                    if key in seen_vals:
                        continue
                    seen_vals.add(key)
                    b2 = dict(binding)
                    if match_expr(u_expr, u / t, b2) and \
                            match_expr(w_expr, w_signed / t, b2):
                        rec(i + 1, used_r, used_c | {a}, b2)
        return

    rec(0, frozenset(), frozenset(), {})
    # deduplicate
    uniq = []
    for r in results:
        if r not in uniq:
            uniq.append(r)
    return uniq


def candidates_contain(candidates: list[Candidate], name: str,
                       params: dict | None = None) -> bool:
    """True when some candidate denotes build(name, params).

    Exact parameter equality for anchored families; for scale-free
    families (where only the parameter ray is determined) the check
    verifies exact similarity of the two parameterizations up to the
    derivable rescaling.
    """
    params = {k: Q(v) for k, v in (params or {}).items()}
    fam = get_family(name)
    for c in candidates:
        if c.name != name:
            continue
        if c.params == params:
            return True
        if c.scale_free:
            b1 = family_b_matrix(fam, params)
            b2 = family_b_matrix(fam, c.params)
            lam = _scale_ratio(b1, b2)
            if lam is not None and are_similar(b1, b2 * lam):
                return True
    return False


def _scale_ratio(b1: Matrix, b2: Matrix) -> Fraction | None:
    """lambda with charpoly(b1) = charpoly(lambda b2), if one exists."""
    c1 = b1.charpoly()
    c2 = b2.charpoly()
    n = len(c1) - 1
    for k in range(1, n + 1):
        a1 = c1[n - k]
        a2 = c2[n - k]
        if a2 != 0:
            if a1 == 0:
                return None
            return _rational_kth_root(a1 / a2, k)
        if a1 != 0:
            return None
    return Fraction(1)


def _rational_kth_root(x: Fraction, k: int) -> Fraction | None:
    if k == 1:
        return x
    neg = x < 0
    if neg and k % 2 == 0:
        return None
    y = abs(x)
    num = round(y.numerator ** (1 / k))
    den = round(y.denominator ** (1 / k))
    for dn in (num - 1, num, num + 1):
        for dd in (den - 1, den, den + 1):
            if dn > 0 and dd > 0 and Fraction(dn ** k, dd ** k) == y:
                r = Fraction(dn, dd)
                return -r if neg else r
    return None
