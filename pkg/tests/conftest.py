"""Shared constructors for structures used across the test suite."""

import random
from fractions import Fraction as F

import pytest

from hermlie.liealg import AlmostAbelianData
from hermlie.linalg import Matrix


def j_from_pairs(pairs, dim=6):
    """Complex structure sending f_i -> f_j for each 1-based (i, j) pair."""
    m = [[F(0)] * dim for _ in range(dim)]
    for i, j in pairs:
        m[j - 1][i - 1] = F(1)
        m[i - 1][j - 1] = F(-1)
    return Matrix(m)


# the Kaehler/SKT structure printed for most algebras:
# J f1 = f6, J f2 = f3, J f4 = f5, g the standard inner product
J_EXAMPLE1 = j_from_pairs([(1, 6), (2, 3), (4, 5)])
G_STANDARD = Matrix.identity(6)

# the split generalized Kaehler pair on the adapted frame
J_GK_PLUS = J_EXAMPLE1
J_GK_MINUS = j_from_pairs([(1, 6), (3, 2), (5, 4)])


def random_fraction(rng, den_max=4, num_max=4):
    return F(rng.randint(-num_max, num_max), rng.randint(1, den_max))


def random_hermitian_data(rng, a=None):
    """Random (a, v, A) with [A, J1] = 0 (the 8-parameter pattern)."""
    q = lambda: random_fraction(rng)
    a11, a12, a13, a14 = q(), q(), q(), q()
    a21, a22, a23, a24 = q(), q(), q(), q()
    amat = Matrix([[a11, a12, a13, a14],
                   [a21, a22, a23, a24],
                   [-a24, -a23, a22, a21],
                   [-a14, -a13, a12, a11]])
    return AlmostAbelianData(a if a is not None else q(),
                             (q(), q(), q(), q()), amat)


@pytest.fixture
def rng():
    return random.Random(20240817)
