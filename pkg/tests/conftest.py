import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from rickart import Matrix, QI, GaussianRational
from rickart.scalars import PrimeField
from rickart.star_ring import RingDescriptor

F2, F3, F5, F7 = (PrimeField(p) for p in (2, 3, 5, 7))
M2F3 = RingDescriptor(F3, 2)


def qi(rows, shape=None):
    return Matrix(rows, QI, shape)


def f3(rows):
    return Matrix(rows, F3)


def ints(m):
    """Entries of an F_p matrix as plain ints (for the reference arithmetic)."""
    return [[x.value for x in row] for row in m.row_tuples()]


def all_f3_2x2():
    return [f3([[a, b], [c, d]]) for a, b, c, d in itertools.product(range(3), repeat=4)]


# reference arithmetic on nested int lists mod p, independent of Matrix


def mm(a, b, p):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) % p for j in range(len(b[0]))] for i in range(len(a))]


def tr(a):
    return [list(r) for r in zip(*a)]


def span(cols_of, p):
    """All vectors in the column span of an int matrix over F_p, as a set of tuples."""
    rows = len(cols_of)
    cols = len(cols_of[0]) if rows else 0
    out = set()
    for coeffs in itertools.product(range(p), repeat=cols):
        out.add(tuple(sum(cols_of[i][j] * coeffs[j] for j in range(cols)) % p for i in range(rows)))
    return out


# sympy bridge for Q(i)


def to_sympy(m):
    import sympy as sp

    return sp.Matrix(m.rows, m.cols, [sp.Rational(x.re.numerator, x.re.denominator)
                                      + sp.I * sp.Rational(x.im.numerator, x.im.denominator)
                                      for row in m.row_tuples() for x in row])


def from_sympy(s):
    import sympy as sp

    rows = []
    for i in range(s.rows):
        row = []
        for j in range(s.cols):
            re, im = sp.nsimplify(sp.expand(s[i, j])).as_real_imag()
            row.append(GaussianRational(Fraction(str(re)), Fraction(str(im))))
        rows.append(row)
    return Matrix(rows, QI, (s.rows, s.cols))


# hypothesis strategies

small_fraction = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 4))
gaussian = st.builds(GaussianRational, small_fraction, small_fraction)
sparse_gaussian = st.one_of(st.just(GaussianRational(0)), gaussian,
                            st.builds(GaussianRational, small_fraction))


@st.composite
def qi_matrices(draw, n=None, rows=None, cols=None):
    if n is None:
        n = draw(st.integers(1, 3))
    r = rows or n
    c = cols or n
    return qi([[draw(sparse_gaussian) for _ in range(c)] for _ in range(r)], (r, c))


@pytest.fixture(scope="session")
def ring_f3():
    return all_f3_2x2()
