import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qforge.exactla import (
    RatMatrix,
    as_rational,
    cokernel_reps,
    format_rational,
    inertia,
    kernel_basis,
    rank,
    residues_independent,
    rref,
    solve,
)

from oracles import sympy_rank


def M(rows, cols=None):
    return RatMatrix.from_rows(rows, cols=cols)


def test_rank_trivial_cases():
    assert rank(RatMatrix.identity(3)) == 3
    assert rank(RatMatrix.zeros(2, 3)) == 0
    assert rank(RatMatrix(0, 4, ())) == 0
    assert rank(RatMatrix(4, 0, ())) == 0


def test_rank_of_zwara_a():
    # hand elimination: rows (1,0,0) and (0,1,0) are the only nonzero rows
    assert rank(M([[0, 0, 0], [1, 0, 0], [0, 1, 0]])) == 2
    assert rank(M([[1, 0, 0], [0, 0, 0], [0, 0, 1]])) == 2


def test_kernel_examples():
    assert kernel_basis(RatMatrix.identity(3)) == []
    (k,) = kernel_basis(M([[1, 1]]))
    assert k[0] == -k[1] != 0
    # empty codomain: every vector is in the kernel
    assert kernel_basis(RatMatrix(0, 2, ())) == [[1, 0], [0, 1]]


def test_kernel_of_random_rank3_matrix():
    rng = random.Random(4)
    A = M([[rng.randint(-5, 5) for _ in range(3)] for _ in range(4)])
    B = M([[rng.randint(-5, 5) for _ in range(6)] for _ in range(3)])
    P = A @ B
    assert rank(P) == 3
    ks = kernel_basis(P)
    assert len(ks) == 3
    for k in ks:
        assert all(x == 0 for x in P.apply(k))


def test_cokernel_examples():
    assert cokernel_reps(RatMatrix.identity(2)) == []
    assert cokernel_reps(RatMatrix.zeros(3, 1)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    reps = cokernel_reps(RatMatrix.column([1, 0, 0]))
    assert reps == [[0, 1, 0], [0, 0, 1]]
    assert residues_independent(RatMatrix.column([1, 0, 0]), reps)


def test_solve_examples():
    b = [Fraction(3), Fraction(-1, 2)]
    assert solve(RatMatrix.identity(2), b) == b
    assert solve(RatMatrix.zeros(2, 2), [1, 0]) is None
    rng = random.Random(9)
    A = M([[rng.randint(-4, 4) for _ in range(5)] for _ in range(3)])
    x0 = [rng.randint(-3, 3) for _ in range(5)]
    x = solve(A, A.apply(x0))
    assert A.apply(x) == A.apply(x0)


def test_rational_serialization():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-5)) == "-5"
    assert as_rational("-3/6") == Fraction(-1, 2)
    assert Fraction(0) == as_rational("0/7") and as_rational("0/7").denominator == 1


def test_shape_rules():
    with pytest.raises(ValueError):
        RatMatrix(2, 2, (Fraction(1),))
    with pytest.raises(ValueError):
        M([[1, 2]]) @ M([[1, 2]])
    assert (RatMatrix(0, 3, ()) @ RatMatrix.zeros(3, 2)).shape == (0, 2)
    assert (RatMatrix.zeros(2, 0) @ RatMatrix(0, 3, ())).is_zero()


def test_kron_ordering():
    A = M([[1, 2]])
    B = M([[0, 1], [1, 0]])
    assert A.kron(B).to_rows() == [[0, 1, 0, 2], [1, 0, 2, 0]]


def test_inertia():
    assert inertia(M([[2, -2], [-2, 2]])) == (1, 0, 1)
    assert inertia(M([[2, -3], [-3, 2]])) == (1, 1, 0)
    assert inertia(M([[0, 1], [1, 0]])) == (1, 1, 0)
    assert inertia(RatMatrix.zeros(3, 3)) == (0, 0, 3)


matrices = st.integers(0, 5).flatmap(
    lambda r: st.integers(0, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
        .map(lambda rows, c=c: RatMatrix.from_rows(rows, cols=c))))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_nullity_and_corank(A):
    r = rank(A)
    ks = kernel_basis(A)
    cs = cokernel_reps(A)
    assert r + len(ks) == A.cols
    assert r + len(cs) == A.rows
    for k in ks:
        assert all(x == 0 for x in A.apply(k))
    assert residues_independent(A, cs)
    assert r == sympy_rank(A)


@settings(max_examples=100, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_rank_invariant_under_row_permutation(A, rnd):
    rows = A.to_rows()
    rnd.shuffle(rows)
    assert rank(RatMatrix.from_rows(rows, cols=A.cols)) == rank(A)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rref_is_reduced(A):
    R, piv = rref(A)
    assert rank(A) == len(piv)
    for r, c in enumerate(piv):
        assert R[r, c] == 1
        assert all(R[i, c] == 0 for i in range(R.rows) if i != r)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inertia_matches_eigenvalue_signs(rows):
    n = len(rows)
    sym = [[rows[i][j] + rows[j][i] for j in range(n)] for i in range(n)]
    S = RatMatrix.from_rows(sym)
    pos, neg, zero = inertia(S)
    assert zero == n - sympy_rank(S)
    eig = np.linalg.eigvalsh(np.array(sym, dtype=float))
    assert pos == int((eig > 1e-8).sum())
    assert neg == int((eig < -1e-8).sum())
    # Gram matrices A^T A are semidefinite
    A = RatMatrix.from_rows(rows)
    assert inertia(A.transpose() @ A)[1] == 0
