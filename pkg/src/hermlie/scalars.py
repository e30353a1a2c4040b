"""Exact scalars: rationals (stdlib Fraction) and complex rationals.

All core geometry in this package is computed over these types so that
every criterion can be asserted as an exact equality.  Floats appear only
in explicitly tagged numeric fallbacks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rat = Fraction

RatLike = Union[int, str, Fraction]


def Q(x: RatLike) -> Fraction:
    """Coerce an int, "num/den" string or Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        raise ValueError("square root of a negative rational")
    if x == 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    rn = math.isqrt(n)
    rd = math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class CScalar:
    """A complex number with exact rational real and imaginary parts.

    Immutable; supports field arithmetic with CScalar, Fraction and int
    operands.  Conjugation is an involution and all operations are exact.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RatLike = 0, im: RatLike = 0):
        object.__setattr__(self, "re", Q(re))
        object.__setattr__(self, "im", Q(im))

    def __setattr__(self, name, value):
        raise AttributeError("CScalar is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(x) -> "CScalar":
        if isinstance(x, CScalar):
            return x
        return CScalar(Q(x))

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = CScalar.of(other)
        return CScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return CScalar(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-CScalar.of(other))

    def __rsub__(self, other):
        return CScalar.of(other) + (-self)

    def __mul__(self, other):
        o = CScalar.of(other)
        return CScalar(self.re * o.re - self.im * o.im,
                       self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = CScalar.of(other)
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero CScalar")
        return CScalar((self.re * o.re + self.im * o.im) / den,
                       (self.im * o.re - self.re * o.im) / den)

    def __rtruediv__(self, other):
        return CScalar.of(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = CONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "CScalar":
        return CScalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    # -- conversions / comparison ------------------------------------------

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CScalar)):
            o = CScalar.of(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"CScalar({self.re})"
        return f"CScalar({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


CZERO = CScalar(0)
CONE = CScalar(1)
I = CScalar(0, 1)

Scalar = Union[Fraction, CScalar]


def conj(x: Scalar) -> Scalar:
    """Complex conjugate; identity on rationals."""
    if isinstance(x, CScalar):
        return x.conjugate()
    return x


def as_cscalar(x) -> CScalar:
    return CScalar.of(x)


def scalar_is_zero(x: Scalar) -> bool:
    if isinstance(x, CScalar):
        return x.is_zero()
    return x == 0


def scalar_to_float(x: Scalar) -> complex:
    if isinstance(x, CScalar):
        return complex(x)
    return float(x)
