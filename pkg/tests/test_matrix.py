import itertools
import json
import pickle

import pytest
from hypothesis import given, settings, strategies as st

from rickart.errors import FieldMismatch, ParseError, ShapeMismatch, SingularMatrix
from rickart.matrix import (
    Matrix,
    column_space_basis,
    inverse,
    nullspace,
    rank,
    rref,
    same_column_space,
    solve,
)
from rickart.scalars import QI, PrimeField

from conftest import F3, F5, f3, from_sympy, ints, mm, qi, qi_matrices, span, to_sympy


def test_basic_shape_and_access():
    a = qi([[1, 2, 3], [4, 5, 6]])
    assert a.shape == (2, 3) and a.rows == 2 and a.cols == 3
    assert a[1, 2] == 6
    assert a.transpose().shape == (3, 2)
    assert a.column(1) == (2, 5)
    assert not a.is_square


def test_zero_dimensions():
    e = Matrix([], QI, (0, 3))
    assert e.shape == (0, 3) and e.is_zero()
    z = Matrix([[], []], QI, (2, 0))
    assert (z @ e) == Matrix.zeros(2, 3, QI)
    assert rank(e) == 0
    with pytest.raises(ShapeMismatch):
        Matrix([], QI)


def test_ragged_rows_rejected():
    with pytest.raises(ShapeMismatch):
        qi([[1, 2], [3]])


def test_immutable_and_hashable():
    a = qi([[1, 0], [0, 1]])
    with pytest.raises(AttributeError):
        a.shape = (3, 3)
    assert hash(a) == hash(Matrix.identity(2, QI))
    assert len({a, Matrix.identity(2, QI), qi([[0, 0], [0, 0]])}) == 2
    assert pickle.loads(pickle.dumps(a)) == a


def test_fields_do_not_mix():
    with pytest.raises(FieldMismatch):
        qi([[1]]) + f3([[1]])
    with pytest.raises(FieldMismatch):
        qi([[1]]) @ f3([[1]])
    with pytest.raises(ShapeMismatch):
        qi([[1, 2]]) @ qi([[1, 2]])


def test_star_is_conjugate_transpose():
    a = qi([["1+1i", 0], [2, "0+3i"]])
    assert a.star() == qi([["1-1i", 2], [0, "0-3i"]])


@given(qi_matrices(), qi_matrices())
def test_star_anti_multiplicative(a, b):
    if a.cols != b.rows:
        return
    assert (a @ b).star() == b.star() @ a.star()
    assert a.star().star() == a


def test_str_canonical():
    assert str(qi([[1, 0], [0, 0]])) == "[[1,0],[0,0]]"
    assert str(qi([["1/2", "0-1i"]])) == "[[1/2,0-1i]]"


def test_sort_key_is_lexicographic_on_f3():
    els = [f3([[a, b], [c, d]]) for a, b, c, d in itertools.product(range(3), repeat=4)]
    assert sorted(els, key=Matrix.sort_key) == els


# -- elimination against sympy (Q(i)) and brute force (F_p) --------------------


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: qi_matrices(rows=r, cols=c))))
def test_rref_and_rank_match_sympy(a):
    s = to_sympy(a)
    ref, piv = s.rref()
    r, pivots = rref(a)
    assert list(pivots) == list(piv)
    assert r == from_sympy(ref)
    assert rank(a) == s.rank()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: qi_matrices(rows=r, cols=c))))
def test_nullspace_is_a_basis_of_the_kernel(a):
    z = nullspace(a)
    assert z.cols == a.cols - rank(a)
    assert (a @ z).is_zero()
    assert rank(z) == z.cols


@pytest.mark.parametrize("p", [2, 3])
def test_rank_equals_log_of_span_size_exhaustive(p):
    F = PrimeField(p)
    for flat in itertools.product(range(p), repeat=6):
        rows = [list(flat[0:3]), list(flat[3:6])]
        a = Matrix(rows, F)
        assert p ** rank(a) == len(span(rows, p))
        basis = column_space_basis(a)
        assert span(ints(basis), p) == span(rows, p)


def test_solve_exhaustive_against_search_f3():
    # b x = a solvable iff some x among all 81 candidates works
    mats = [f3([[a, b], [c, d]]) for a, b, c, d in itertools.product(range(3), repeat=4)]
    sample = mats[::7]
    for b in sample:
        for a in sample:
            found = any(mm(ints(b), ints(x), 3) == ints(a) for x in mats)
            x = solve(b, a)
            assert (x is not None) == found
            if x is not None:
                assert b @ x == a


def test_solve_shapes():
    b = qi([[1, 0], [0, 0], [0, 1]])
    a = qi([[2], [0], [3]])
    assert solve(b, a) == qi([[2], [3]])
    assert solve(b, qi([[0], [1], [0]])) is None
    with pytest.raises(ShapeMismatch):
        solve(b, qi([[1]]))


@settings(max_examples=60, deadline=None)
@given(qi_matrices())
def test_inverse(a):
    if rank(a) < a.rows:
        with pytest.raises(SingularMatrix):
            inverse(a)
    else:
        assert a @ inverse(a) == Matrix.identity(a.rows, QI)
        assert from_sympy(to_sympy(a).inv()) == inverse(a)


def test_inverse_f5():
    a = Matrix([[2, 1], [1, 1]], F5)
    assert a @ inverse(a) == Matrix.identity(2, F5)


def test_same_column_space():
    assert same_column_space(qi([[1], [1]]), qi([[2, 3], [2, 3]]))
    assert not same_column_space(qi([[1], [1]]), qi([[1], [0]]))


# -- JSON ----------------------------------------------------------------------


def test_json_format():
    a = qi([["1/2", "0-1i"], [0, 3]])
    obj = a.to_json()
    assert obj == {"field": {"kind": "Qi"}, "rows": 2, "cols": 2, "entries": [["1/2", "0-1i"], ["0", "3"]]}
    assert Matrix.from_json(json.loads(json.dumps(obj))) == a
    b = f3([[2, 1]])
    assert b.to_json() == {"field": {"kind": "Fp", "p": 3}, "rows": 1, "cols": 2, "entries": [["2", "1"]]}


@settings(max_examples=40)
@given(qi_matrices())
def test_json_roundtrip(a):
    assert Matrix.from_json(json.loads(json.dumps(a.to_json()))) == a


@pytest.mark.parametrize("obj", [
    {"field": {"kind": "Fp", "p": 3}, "rows": 1, "cols": 1, "entries": [["3"]]},
    {"field": {"kind": "Fp", "p": 3}, "rows": 1, "cols": 1, "entries": [["-1"]]},
    {"field": {"kind": "Qi"}, "rows": 1, "cols": 1, "entries": [["1/0"]]},
    {"field": {"kind": "Qi"}, "rows": 2, "cols": 1, "entries": [["1"]]},
    {"field": {"kind": "Qi"}, "rows": 1, "cols": 2, "entries": [["1"]]},
    {"field": {"kind": "Qi"}, "rows": 1, "cols": 1, "entries": [[1]]},
    {"field": {"kind": "Qi"}, "rows": 1, "cols": 1},
    {"rows": 1, "cols": 1, "entries": [["1"]]},
    [],
])
def test_json_rejects(obj):
    with pytest.raises(ParseError):
        Matrix.from_json(obj)
