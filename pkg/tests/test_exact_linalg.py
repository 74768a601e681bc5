import itertools
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors

from sisinv import exact_linalg as el


def small_matrices(max_dim=4, bound=5):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                               min_size=m, max_size=m)))


def test_is_unimodular_examples():
    assert el.is_unimodular(el.identity(3))
    assert el.is_unimodular([[1, 3], [1, 2]])
    assert not el.is_unimodular([[2, 0], [0, 1]])
    with pytest.raises(ValueError):
        el.is_unimodular([[1, 0, 0], [0, 1, 0]])


def test_rational_inverse_examples():
    assert el.rational_inverse(el.identity(3)) == el.as_rat_matrix(el.identity(3))
    A = el.transpose([[1, 3, 0], [1, 2, 0], [0, 0, 1]])
    inv = el.rational_inverse(A)
    assert inv == el.as_rat_matrix([[-2, 1, 0], [3, -1, 0], [0, 0, 1]])
    assert el.matmul(A, inv) == el.as_rat_matrix(el.identity(3))
    with pytest.raises(el.SingularMatrixError):
        el.rational_inverse([[1, 1], [1, 1]])


def test_rational_inverse_of_fractions():
    A = [[F(1, 2), F(1, 3)], [F(1, 4), 1]]
    assert el.matmul(A, el.rational_inverse(A)) == el.as_rat_matrix(el.identity(2))


def test_dual_basis_examples():
    assert el.dual_basis(el.identity(2)) == el.identity(2)
    V = el.from_columns([(1, 1, 0), (3, 2, 0), (0, 0, 1)])
    W = el.dual_basis(V)
    assert el.columns(W) == [(-2, 3, 0), (1, -1, 0), (0, 0, 1)]
    V = el.from_columns([(1, 0), (-1, 1)])
    assert el.columns(el.dual_basis(V)) == [(1, 1), (0, 1)]
    with pytest.raises(ValueError):
        el.dual_basis([[2, 0], [0, 1]])


def test_dual_basis_pairing_and_involution():
    V = el.from_columns([(1, 1, 0), (3, 2, 0), (0, 0, 1)])
    W = el.dual_basis(V)
    assert el.matmul(el.transpose(V), W) == el.identity(3)
    assert el.dual_basis(W) == V


def test_snf_small_golden():
    U, D, V = el.snf([[2, 0], [0, 3]])
    assert D == ((1, 0), (0, 6))
    assert el.matmul(el.matmul(U, [[2, 0], [0, 3]]), V) == D


def test_snf_rejects_empty():
    with pytest.raises(ValueError):
        el.snf([])


def _check_snf(A):
    U, D, V = el.snf(A)
    m, n = len(A), len(A[0])
    assert el.matmul(el.matmul(U, A), V) == D
    assert abs(el.det(U)) == 1 and abs(el.det(V)) == 1
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[:len(nz)] == nz  # zeros trail
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return diag


@settings(max_examples=200, deadline=None)
@given(small_matrices())
def test_snf_contract(A):
    _check_snf(A)


@settings(max_examples=100, deadline=None)
@given(small_matrices())
def test_snf_matches_sympy_invariant_factors(A):
    diag = _check_snf(A)
    ours = [x for x in diag if x]
    theirs = [abs(int(x)) for x in invariant_factors(sympy.Matrix(A), domain=sympy.ZZ) if x]
    assert ours == theirs


def test_det_bareiss():
    assert el.det([[2, 1], [7, 4]]) == 1
    assert el.det([[0, 1, 2], [1, 0, 3], [4, -3, 8]]) == -2
    assert el.det([[F(1, 2), 0], [0, 4]]) == 2


def test_constraint_lattice_examples():
    assert el.constraint_lattice([], [], 3) == el.identity(3)
    B = el.constraint_lattice([(F(1, 2), 0, 0), (0, F(1, 3), 0)], [(0, 0, 1)], 3)
    assert el.columns(B) == [(2, 0, 0), (0, 3, 0)]
    B = el.constraint_lattice([(F(1, 3), 0)], [(-1, 1)], 2)
    assert el.columns(B) == [(3, 3)]


def _in_lattice(cols, x):
    """Exact membership of integer x in the Z-span of independent cols."""
    if not cols:
        return not any(x)
    A = el.from_columns(cols)
    # least-squares normal equations solved exactly, then integrality and fit
    At = el.transpose(A)
    G = el.matmul(At, A)
    c = el.matvec(el.rational_inverse(G), el.matvec(At, x))
    return all(t.denominator == 1 for t in c) and tuple(el.matvec(A, c)) == tuple(F(t) for t in x)


rationals = st.builds(F, st.integers(-3, 3), st.sampled_from([1, 2, 3, 4, 6]))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.tuples(
    st.just(d),
    st.lists(st.lists(rationals, min_size=d, max_size=d), max_size=2),
    st.lists(st.lists(st.integers(-2, 2), min_size=d, max_size=d), max_size=1))))
def test_constraint_lattice_against_enumeration(data):
    d, P, N = data
    B = el.constraint_lattice(P, N, d)
    cols = el.columns(B) if B and B[0] else []

    def ok(x):
        return all(sum(F(p) * t for p, t in zip(row, x)).denominator == 1 for row in P) and \
            all(sum(n * t for n, t in zip(row, x)) == 0 for row in N)

    for c in cols:
        assert ok(c)
    box = 4
    for x in itertools.product(range(-box, box + 1), repeat=d):
        assert ok(x) == _in_lattice(cols, x), x


def test_integer_kernel():
    ker = el.integer_kernel([[1, 2, 3]], 3)
    assert len(ker) == 2
    for v in ker:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0
    assert el.integer_kernel([], 2) == [(1, 0), (0, 1)]


def test_hermite_basis_is_canonical():
    a = el.hermite_basis([(2, 4), (0, 6)], 2)
    b = el.hermite_basis([(2, 10), (2, 4), (4, 2)], 2)
    assert a == ((2, 4), (0, 6))
    assert el.hermite_basis([(2, 4), (2, 10)], 2) == a
    assert b == a  # (2,10) = 3(2,4) - (4,2), same lattice as a
