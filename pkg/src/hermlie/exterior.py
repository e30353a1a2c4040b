"""Chevalley-Eilenberg exterior calculus with exact complex coefficients.

KForm stores a degree-k alternating form on the dual of a fixed
n-dimensional space as coefficients over sorted index tuples; the
differential is the usual left-invariant formula

    d phi(X0..Xk) = sum_{i<j} (-1)^{i+j} phi([Xi, Xj], X0..^i..^j..Xk),

so d^2 = 0 exactly on every algebra passing the Jacobi check.
Coefficients are CScalar throughout; real forms simply have zero
imaginary parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import LinearSolution, Matrix, solve_linear
from .scalars import CScalar, CZERO, as_cscalar

from .liealg import LieAlgebra


def _sort_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort a tuple of distinct indices, returning the permutation sign."""
    idx = list(indices)
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
            elif idx[j] == idx[j + 1]:
                return tuple(idx), 0
    return tuple(idx), sign


class KForm:
    """Degree-k form with CScalar coefficients on sorted basis tuples."""

    __slots__ = ("n", "k", "coeffs")

    def __init__(self, n: int, k: int, coeffs: dict | None = None):
        # degrees above n are allowed and necessarily zero
        if k < 0:
            raise ValueError(f"negative degree {k}")
        clean: dict[tuple[int, ...], CScalar] = {}
        for idx, c in (coeffs or {}).items():
            c = as_cscalar(c)
            if c.is_zero():
                continue
            sidx, sign = _sort_sign(tuple(idx))
            if sign == 0:
                continue
            if len(sidx) != k:
                raise ValueError(f"index tuple {idx} has wrong length for degree {k}")
            if any(not (0 <= i < n) for i in sidx):
                raise ValueError(f"index out of range in {idx}")
            prev = clean.get(sidx, CZERO)
            val = prev + (c if sign > 0 else -c)
            if val.is_zero():
                clean.pop(sidx, None)
            else:
                clean[sidx] = val
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("KForm is immutable")

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero(n: int, k: int) -> "KForm":
        return KForm(n, k)

    @staticmethod
    def basis(n: int, indices: Sequence[int], coeff=1) -> "KForm":
        """coeff * e^{i1} ^ ... ^ e^{ik} with 0-based indices."""
        return KForm(n, len(indices), {tuple(indices): coeff})

    @staticmethod
    def from_terms(n: int, k: int, terms: Iterable[tuple]) -> "KForm":
        d: dict[tuple[int, ...], CScalar] = {}
        for idx, c in terms:
            sidx, sign = _sort_sign(tuple(idx))
            if sign == 0:
                continue
            d[sidx] = d.get(sidx, CZERO) + (as_cscalar(c) if sign > 0
                                            else -as_cscalar(c))
        return KForm(n, k, d)

    # -- linear structure --------------------------------------------------------

    def __add__(self, other: "KForm") -> "KForm":
        self._compat(other)
        d = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            d[idx] = d.get(idx, CZERO) + c
        return KForm(self.n, self.k, d)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __neg__(self) -> "KForm":
        return KForm(self.n, self.k, {i: -c for i, c in self.coeffs.items()})

    def __mul__(self, s) -> "KForm":
        s = as_cscalar(s)
        return KForm(self.n, self.k, {i: c * s for i, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.k, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs.values())

    def conjugate(self) -> "KForm":
        return KForm(self.n, self.k,
                     {i: c.conjugate() for i, c in self.coeffs.items()})

    def real_part(self) -> "KForm":
        return KForm(self.n, self.k,
                     {i: CScalar(c.re) for i, c in self.coeffs.items()})

    def imag_part(self) -> "KForm":
        return KForm(self.n, self.k,
                     {i: CScalar(c.im) for i, c in self.coeffs.items()})

    # -- multiplicative structure ---------------------------------------------

    def wedge(self, other: "KForm") -> "KForm":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        k = self.k + other.k
        d: dict[tuple[int, ...], CScalar] = {}
        for i1, c1 in self.coeffs.items():
            for i2, c2 in other.coeffs.items():
                merged, sign = _sort_sign(i1 + i2)
                if sign == 0:
                    continue
                c = c1 * c2
                d[merged] = d.get(merged, CZERO) + (c if sign > 0 else -c)
        return KForm(self.n, k, d)

    def evaluate(self, vectors: Sequence[Sequence]) -> CScalar:
        """Evaluate on k coefficient vectors (exact scalars)."""
        if len(vectors) != self.k:
            raise ValueError("wrong number of arguments")
        if self.k == 0:
            return self.coeffs.get((), CZERO)
        out = CZERO
        cols = [tuple(as_cscalar(x) for x in v) for v in vectors]
        for idx, c in self.coeffs.items():
            out = out + c * _det_small([[cols[j][i] for j in range(self.k)]
                                        for i in idx])
        return out

    def transform(self, p: Matrix) -> "KForm":
        """Pullback: (result)(x1..xk) = self(P x1, .., P xk)."""
        if p.nrows != self.n or p.ncols != self.n:
            raise ValueError("transform matrix has wrong shape")
        if self.k == 0:
            return self
        d: dict[tuple[int, ...], CScalar] = {}
        for out_idx in combinations(range(self.n), self.k):
            total = CZERO
            for in_idx, c in self.coeffs.items():
                minor = [[as_cscalar(p[i, j]) for j in out_idx] for i in in_idx]
                total = total + c * _det_small(minor)
            if not total.is_zero():
                d[out_idx] = total
        return KForm(self.n, self.k, d)

    def contract(self, vector: Sequence) -> "KForm":
        """Interior product with a coefficient vector."""
        if self.k == 0:
            raise ValueError("cannot contract a 0-form")
        v = [as_cscalar(x) for x in vector]
        d: dict[tuple[int, ...], CScalar] = {}
        for idx, c in self.coeffs.items():
            for pos, i in enumerate(idx):
                if v[i].is_zero():
                    continue
                rest = idx[:pos] + idx[pos + 1:]
                contrib = c * v[i]
                if pos % 2:
                    contrib = -contrib
                d[rest] = d.get(rest, CZERO) + contrib
        return KForm(self.n, self.k - 1, d)

    # -- io -----------------------------------------------------------------------

    def to_json_obj(self) -> dict:
        terms = []
        for idx in sorted(self.coeffs):
            c = self.coeffs[idx]
            terms.append({
                "indices": [i + 1 for i in idx],
                "re": {"num": c.re.numerator, "den": c.re.denominator},
                "im": {"num": c.im.numerator, "den": c.im.denominator},
            })
        return {"degree": self.k, "terms": terms}

    @staticmethod
    def from_json_obj(doc: dict, n: int) -> "KForm":
        terms = {}
        for t in doc["terms"]:
            idx = tuple(i - 1 for i in t["indices"])
            terms[idx] = CScalar(Fraction(t["re"]["num"], t["re"]["den"]),
                                 Fraction(t["im"]["num"], t["im"]["den"]))
        return KForm(n, doc["degree"], terms)

    def __repr__(self):
        if not self.coeffs:
            return f"KForm(0; deg {self.k})"
        parts = []
        for idx in sorted(self.coeffs):
            label = "e" + "".join(str(i + 1) for i in idx) if idx else "1"
            parts.append(f"({self.coeffs[idx]})*{label}")
        return " + ".join(parts)

    def _compat(self, other: "KForm"):
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError(
                f"form mismatch: ({self.n},{self.k}) vs ({other.n},{other.k})")


class MixedForm:
    """Sum of forms of distinct degrees (an inhomogeneous form)."""

    __slots__ = ("n", "parts")

    def __init__(self, n: int, parts: Iterable[KForm] = ()):
        d: dict[int, KForm] = {}
        for f in parts:
            if f.n != n:
                raise ValueError("dimension mismatch")
            if f.is_zero():
                continue
            if f.k in d:
                d[f.k] = d[f.k] + f
                if d[f.k].is_zero():
                    del d[f.k]
            else:
                d[f.k] = f
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "parts", dict(sorted(d.items())))

    def __setattr__(self, name, value):
        raise AttributeError("MixedForm is immutable")

    def degree_part(self, k: int) -> KForm:
        return self.parts.get(k, KForm.zero(self.n, k))

    def degrees(self) -> list[int]:
        return list(self.parts)

    def __add__(self, other: "MixedForm") -> "MixedForm":
        return MixedForm(self.n, list(self.parts.values())
                         + list(other.parts.values()))

    def __sub__(self, other: "MixedForm") -> "MixedForm":
        return self + other.scale(-1)

    def scale(self, s) -> "MixedForm":
        return MixedForm(self.n, [f * s for f in self.parts.values()])

    def wedge(self, other) -> "MixedForm":
        if isinstance(other, KForm):
            other = MixedForm(self.n, [other])
        out = []
        for f in self.parts.values():
            for h in other.parts.values():
                out.append(f.wedge(h))
        return MixedForm(self.n, out)

    def is_zero(self) -> bool:
        return not self.parts

    def __eq__(self, other):
        if not isinstance(other, MixedForm):
            return NotImplemented
        return self.n == other.n and self.parts == other.parts

    def __repr__(self):
        if not self.parts:
            return "MixedForm(0)"
        return " (+) ".join(repr(f) for f in self.parts.values())


def d(alg: LieAlgebra, phi: KForm) -> KForm:
    """Chevalley-Eilenberg differential."""
    n = alg.dim
    if phi.n != n:
        raise ValueError("form dimension does not match the algebra")
    if phi.k >= n:
        return KForm.zero(n, phi.k + 1)
    out: dict[tuple[int, ...], CScalar] = {}
    for big in combinations(range(n), phi.k + 1):
        total = CZERO
        for a in range(len(big)):
            for b in range(a + 1, len(big)):
                bracket = alg.bracket_basis(big[a], big[b])
                rest = big[:a] + big[a + 1:b] + big[b + 1:]
                # phi([e_a, e_b], rest): expand the bracket in the first slot
                for m in range(n):
                    cm = bracket[m]
                    if cm == 0:
                        continue
                    sidx, sign = _sort_sign((m,) + rest)
                    if sign == 0:
                        continue
                    c = phi.coeffs.get(sidx)
                    if c is None:
                        continue
                    term = c * cm
                    if sign < 0:
                        term = -term
                    if (a + b) % 2:
                        term = -term
                    total = total + term
        if not total.is_zero():
            out[big] = total
    return KForm(n, phi.k + 1, out)


def d_mixed(alg: LieAlgebra, rho: MixedForm) -> MixedForm:
    return MixedForm(rho.n, [d(alg, f) for f in rho.parts.values()])


class NotClosedError(ValueError):
    def __init__(self, message: str, defect: KForm):
        super().__init__(message)
        self.defect = defect


def twisted_d(alg: LieAlgebra, h: KForm, rho: MixedForm) -> MixedForm:
    """The twisted differential (d - H ^) applied to a mixed form.

    H must be a closed 3-form; a non-closed H is rejected with dH attached.
    """
    if h.k != 3:
        raise ValueError("twist must be a 3-form")
    dh = d(alg, h)
    if not dh.is_zero():
        raise NotClosedError("twist H is not closed", dh)
    return d_mixed(alg, rho) - MixedForm(rho.n, [h]).wedge(rho)


def d_matrix(alg: LieAlgebra, k: int) -> tuple[Matrix, list, list]:
    """Matrix of d: Lambda^k -> Lambda^{k+1} on lexicographic bases."""
    n = alg.dim
    rows_idx = list(combinations(range(n), k + 1))
    cols_idx = list(combinations(range(n), k))
    cols = []
    for cidx in cols_idx:
        img = d(alg, KForm.basis(n, cidx))
        cols.append([img.coeffs.get(r, CZERO) for r in rows_idx])
    mat = Matrix([[cols[j][i] for j in range(len(cols_idx))]
                  for i in range(len(rows_idx))]) if cols_idx else Matrix.zero(len(rows_idx), 1)
    return mat, rows_idx, cols_idx


@dataclass(frozen=True)
class ExactnessResult:
    """Witness eta with d eta = phi, or an infeasibility certificate.

    The certificate is a linear functional on Lambda^k (paired with the
    listed index tuples) that annihilates the image of d but not phi.
    """

    witness: KForm | None
    certificate: tuple | None
    certificate_indices: list | None

    @property
    def exact(self) -> bool:
        return self.witness is not None


def is_exact(alg: LieAlgebra, phi: KForm) -> ExactnessResult:
    """Decide exactly whether phi = d eta has a solution."""
    dphi = d(alg, phi)
    if not dphi.is_zero():
        raise NotClosedError("form is not closed, exactness is undefined", dphi)
    if phi.k == 0:
        if phi.is_zero():
            return ExactnessResult(KForm.zero(alg.dim, 0), None, None)
        return ExactnessResult(None, (as_cscalar(1),), [()])
    mat, rows_idx, cols_idx = d_matrix(alg, phi.k - 1)
    b = tuple(phi.coeffs.get(r, CZERO) for r in rows_idx)
    sol: LinearSolution = solve_linear(mat, b)
    if sol.feasible:
        eta = KForm(alg.dim, phi.k - 1,
                    {cols_idx[j]: sol.solution[j] for j in range(len(cols_idx))})
        return ExactnessResult(eta, None, None)
    return ExactnessResult(None, sol.certificate, rows_idx)


def _det_small(rows: list[list[CScalar]]) -> CScalar:
    n = len(rows)
    if n == 0:
        return as_cscalar(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    out = CZERO
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det_small(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out
