from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfeq.errors import FieldMismatch, ShapeError
from hopfeq.exactlin import (
    Field, Fp, Matrix, kernel, rref, smith_normal_form, solve, span, int_matmul,
)
from oracles import smith_invariants, sympy_rank

Q = Field.Q()
F5 = Field.Fp(5)
F7 = Field.Fp(7)

small = st.integers(-6, 6)


def int_matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_field_coercion():
    assert Q("-1/2") == Fraction(-1, 2)
    assert F5(Fraction(1, 2)) == F5(3)
    assert F5(7) == 2
    with pytest.raises(FieldMismatch):
        F5(Fraction(1, 5))
    with pytest.raises(FieldMismatch):
        Q(F5(1))
    with pytest.raises(FieldMismatch):
        F5(F7(1))


def test_fp_arithmetic():
    a = Fp(3, 5)
    assert a * a == 4
    assert a / a == 1
    assert -a == 2
    assert (a ** 4) == 1
    with pytest.raises(FieldMismatch):
        Fp(1, 5) + Fp(1, 7)


def test_field_parse_and_json():
    assert Field.parse("Fp:5") == F5
    assert Field.parse("F7") == F7
    assert Field.parse("Q") == Q
    assert Field.from_json(F5.to_json()) == F5
    with pytest.raises(ValueError):
        Field.parse("R")


def test_rref_small():
    m = Matrix(Q, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, rank, piv = rref(m)
    assert rank == 2
    assert tuple(piv) == (0, 1)
    assert r.row(0) == (1, 0, 1)


def test_inverse_over_f5():
    m = Matrix(F5, [[1, 2], [3, 4]])
    inv = m.inverse()
    assert m @ inv == Matrix.identity(F5, 2)
    assert Matrix(F5, [[1, 2], [2, 4]]).inverse() is None


def test_shape_errors():
    with pytest.raises(ShapeError):
        Matrix(Q, [[1, 2], [3]])
    with pytest.raises(ShapeError):
        Matrix(Q, [[1, 2]]) @ Matrix(Q, [[1, 2]])


def test_snf_known():
    snf = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert list(snf.diagonal) == [2, 6, 12]
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)


def test_snf_invariants_free_part():
    # relations of Z^2 / <(2, 0)>: Z/2 + Z
    assert smith_normal_form([[2, 0]]).invariants(2) == [2, 0]


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_rank_matches_sympy(rows):
    assert Matrix(Q, rows).rank() == sympy_rank(rows)
    assert Matrix(F5, rows).rank() == sympy_rank(rows, 5)


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_rank_transpose(rows):
    m = Matrix(Q, rows)
    assert m.rank() == m.T.rank()


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_rref_idempotent(rows):
    r, rank, _ = rref(Matrix(Q, rows))
    r2, rank2, _ = rref(r)
    assert r == r2 and rank == rank2


@settings(max_examples=60, deadline=None)
@given(int_matrices(), st.sampled_from([Q, F7]))
def test_kernel(rows, field):
    m = Matrix(field, rows)
    k = kernel(m)
    assert k.dim == m.shape[1] - m.rank()
    for v in k.basis:
        assert all(x == 0 for x in m @ v)


@settings(max_examples=60, deadline=None)
@given(int_matrices(4, 4), st.lists(small, min_size=4, max_size=4))
def test_solve_consistent(rows, x):
    m = Matrix(Q, rows)
    x = tuple(Q(v) for v in x[:m.shape[1]])
    b = m @ x
    y = solve(m, b)
    assert y is not None and m @ y == b


@settings(max_examples=40, deadline=None)
@given(int_matrices(4, 4))
def test_snf_matches_determinantal_divisors(rows):
    snf = smith_normal_form(rows)
    nonzero = [d for d in snf.diagonal if d]
    assert nonzero == smith_invariants(rows)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    # U A V = D
    D = int_matmul(int_matmul(snf.U, rows), snf.V)
    for i, r in enumerate(D):
        for j, x in enumerate(r):
            assert x == (snf.diagonal[i] if i == j and i < len(snf.diagonal) else 0)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=0, max_size=4),
       st.lists(st.lists(small, min_size=3, max_size=3), min_size=0, max_size=4))
def test_subspace_lattice(us, ws):
    U = span(Q, us, 3)
    W = span(Q, ws, 3)
    assert (U + W).dim + U.intersection(W).dim == U.dim + W.dim
    assert U <= U + W
    assert U.intersection(W) <= U
    for v in us:
        assert v in U
