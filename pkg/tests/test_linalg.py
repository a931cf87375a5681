"""Exact linear algebra: kernels, inverses, tensor leg operations."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leibalg.linalg import (Matrix, TwoTensor, ThreeTensor, Perm3, IDENTITY3,
                            SIGMA13, CYCLE_LEFT, Singular, ShapeMismatch)
from oracles import solve_kernel_oracle, inverse_oracle

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def small_matrix(rows, cols):
    return st.lists(st.lists(rationals, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(Matrix.from_rows)


matrices = st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(
    lambda rc: small_matrix(*rc))
square_matrices = st.integers(1, 4).flatmap(lambda n: small_matrix(n, n))


@given(matrices)
def test_kernel_vectors_are_annihilated(m):
    ker = m.kernel()
    for v in ker:
        assert all(x == 0 for x in m.apply(v))
    assert m.rank() + len(ker) == m.cols  # rank-nullity


def in_span(basis, v):
    if not basis:
        return all(x == 0 for x in v)
    stacked = Matrix.from_rows(list(basis))
    return stacked.transpose().rank() == Matrix.from_rows(
        list(basis) + [list(v)]).transpose().rank()


@given(matrices)
def test_kernel_matches_independent_elimination(m):
    ker = m.kernel()
    oracle = solve_kernel_oracle([list(r) for r in m.entries])
    assert len(ker) == len(oracle)
    for v in oracle:
        assert in_span(ker, v)


@given(square_matrices)
def test_inverse_matches_independent_elimination(m):
    oracle = inverse_oracle([list(r) for r in m.entries])
    if oracle is None:
        with pytest.raises(Singular):
            m.inverse()
    else:
        inv = m.inverse()
        assert inv @ m == Matrix.identity(m.rows)
        assert m @ inv == Matrix.identity(m.rows)
        assert inv == Matrix.from_rows(oracle)


def test_kernel_and_inverse_small_cases():
    assert Matrix.identity(2).kernel() == []
    assert len(Matrix.zero(1, 2).kernel()) == 2
    d = Matrix.from_rows([[2, 0], [0, 3]])
    assert d.inverse() == Matrix.from_rows(
        [[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    with pytest.raises(Singular):
        Matrix.zero(2).inverse()
    with pytest.raises(ShapeMismatch):
        Matrix.zero(2, 3).inverse()


def test_det_and_block_diag():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[5]])
    assert a.det() == -2
    bd = Matrix.block_diag(a, b)
    assert bd.rows == bd.cols == 3
    assert bd.det() == -10
    assert bd.entries[2][2] == 5 and bd.entries[0][2] == 0


tensors2 = st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(rationals, min_size=n, max_size=n),
    min_size=n, max_size=n).map(TwoTensor.from_grid))


@given(tensors2)
def test_swap_is_an_involution(t):
    assert t.swap().swap() == t
    assert (t - t.swap()).is_skew()
    assert (t + t.swap()).is_symmetric()


def test_tensor2_vec_roundtrip():
    t = TwoTensor.basis(3, 0, 2) + TwoTensor.basis(3, 1, 1).scale(-2)
    assert TwoTensor.from_vec(3, t.vec()) == t


PERMS = [Perm3(p) for p in
         [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]]

tensors3 = st.lists(rationals, min_size=27, max_size=27).map(
    lambda v: ThreeTensor.build(3, lambda i, j, k: v[9 * i + 3 * j + k]))


@given(tensors3, st.sampled_from(PERMS), st.sampled_from(PERMS))
def test_permute_is_a_group_action(t, p, q):
    assert t.permute(IDENTITY3) == t
    assert t.permute(p).permute(q) == t.permute(q.compose(p))
    assert t.permute(p).permute(p.inverse()) == t


def test_permute_basis_examples():
    t = ThreeTensor.build(3, lambda i, j, k: 1 if (i, j, k) == (0, 1, 2) else 0)
    s13 = t.permute(SIGMA13)
    assert s13.coeff[2][1][0] == 1  # e1(x)e2(x)e3 -> e3(x)e2(x)e1
    cyc = t.permute(CYCLE_LEFT)
    assert cyc.coeff[1][2][0] == 1  # e1(x)e2(x)e3 -> e2(x)e3(x)e1


@given(tensors3, st.sampled_from(PERMS))
def test_act_commutes_with_permute(t, p):
    m = Matrix.from_rows([[1, 2, 0], [0, 1, 0], [3, 0, 1]])
    # applying m on leg p.img[0] then permuting equals permuting then acting on leg 0
    assert t.act(p.img[0], m).permute(p) == t.permute(p).act(0, m)
