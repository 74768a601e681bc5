"""Exact integer and rational matrix algebra.

Matrices are plain tuples of row tuples holding Python ``int`` or
``fractions.Fraction`` entries, so arithmetic never overflows and no
floating point enters the subgroup computations.  Lattice bases are
always stored as matrix *columns*.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence, Union

Number = Union[int, Fraction]
IntMatrix = tuple[tuple[int, ...], ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]


class SingularMatrixError(ValueError):
    pass


class LatticeSNF(NamedTuple):
    """Smith decomposition ``U @ A @ V == D`` with unimodular ``U``, ``V``."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))


# -- small helpers -----------------------------------------------------------

def as_int_matrix(rows: Sequence[Sequence[Number]]) -> IntMatrix:
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"non-integer entry {x}")
                x = x.numerator
            r.append(int(x))
        out.append(tuple(r))
    _check_rectangular(out)
    return tuple(out)


def as_rat_matrix(rows: Sequence[Sequence[Number]]) -> RatMatrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    _check_rectangular(out)
    return out


def _check_rectangular(rows) -> None:
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")


def shape(A) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A):
    return tuple(zip(*A))


def matmul(A, B):
    if A and B and len(A[0]) != len(B):
        raise ValueError(f"shape mismatch {shape(A)} @ {shape(B)}")
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A, x):
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def columns(A) -> list[tuple]:
    return list(transpose(A))


def from_columns(cols: Sequence[Sequence[Number]], nrows: int | None = None):
    cols = [tuple(c) for c in cols]
    if not cols:
        return tuple(() for _ in range(nrows or 0))
    return transpose(cols)


def det(A: Sequence[Sequence[Number]]) -> Number:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num / prev if isinstance(num, Fraction) else _exact_div(num, prev)
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        assert r == 0
        return q
    return Fraction(a) / b


# -- public operations -------------------------------------------------------

def is_unimodular(A: Sequence[Sequence[int]]) -> bool:
    rows, cols = shape(A)
    if rows != cols:
        raise ValueError(f"unimodularity needs a square matrix, got {rows}x{cols}")
    return det(A) in (1, -1)


def rational_inverse(A: Sequence[Sequence[Number]]) -> RatMatrix:
    """Gauss-Jordan inverse over the rationals."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("inverse of a non-square matrix")
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return tuple(tuple(row[n:]) for row in M)


def dual_basis(V: Sequence[Sequence[int]]) -> IntMatrix:
    """Columns ``w_j`` with ``<v_i, w_j> = delta_ij``, i.e. ``(V^T)^-1``."""
    V = as_int_matrix(V)
    if not is_unimodular(V):
        raise ValueError("dual_basis needs a unimodular basis of Z^d")
    return as_int_matrix(rational_inverse(transpose(V)))


def snf(A: Sequence[Sequence[int]]) -> LatticeSNF:
    """Smith normal form by repeated gcd reduction of rows and columns.

    The pivot at each stage is the entry of least absolute value in the
    trailing block; a pivot that fails to divide the rest of the block is
    fixed by folding the offending row into the pivot row.
    """
    A = as_int_matrix(A)
    m, n = shape(A)
    if m == 0 or n == 0:
        raise ValueError("snf of an empty matrix")
    D = [list(r) for r in A]
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        for M in (D, U):
            M[dst] = [a + f * b for a, b in zip(M[dst], M[src])]

    def add_col(dst, src, f):  # col_dst += f * col_src
        for M in (D, V):
            for row in M:
                row[dst] += f * row[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not nz:
                break
            _, pi, pj = min(nz)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            U[t] = [-x for x in U[t]]
            D[t] = [-x for x in D[t]]
    return LatticeSNF(as_int_matrix(U), as_int_matrix(D), as_int_matrix(V))


def hermite_basis(vectors: Sequence[Sequence[int]], dim: int) -> IntMatrix:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Returns the nonzero HNF rows: echelon form with positive pivots and the
    entries above each pivot reduced into ``[0, pivot)``.
    """
    M = [list(v) for v in vectors if any(v)]
    row = 0
    for col in range(dim):
        if row >= len(M):
            break
        while True:
            nz = [i for i in range(row, len(M)) if M[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(M[i][col]))
            M[row], M[piv] = M[piv], M[row]
            done = True
            for i in range(row + 1, len(M)):
                if M[i][col]:
                    q = M[i][col] // M[row][col]
                    M[i] = [a - q * b for a, b in zip(M[i], M[row])]
                    done = done and M[i][col] == 0
            if done:
                break
        if row < len(M) and M[row][col]:
            if M[row][col] < 0:
                M[row] = [-a for a in M[row]]
            for i in range(row):
                q = M[i][col] // M[row][col]
                M[i] = [a - q * b for a, b in zip(M[i], M[row])]
            row += 1
    return tuple(tuple(r) for r in M[:row])


def integer_kernel(A: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """A Z-basis of ``{x in Z^n : A x = 0}``."""
    if not A:
        return [tuple(r) for r in identity(ncols)]
    U, D, V = snf(A)
    rank = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    return columns(V)[rank:]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def constraint_lattice(pairings: Sequence[Sequence[Number]],
                       annihilated: Sequence[Sequence[Number]], d: int) -> IntMatrix:
    """Basis (columns, Hermite form) of the integer vectors x with
    ``pairings @ x`` integral and ``annihilated @ x == 0``.

    Each pairing row ``p`` with common denominator ``L`` becomes the integer
    relation ``(L p) . x - L y = 0`` with a slack integer ``y``; the kernel of
    the combined system projects injectively onto the ``x`` coordinates.
    """
    P = [tuple(Fraction(x) for x in row) for row in pairings]
    N = [tuple(Fraction(x) for x in row) for row in annihilated]
    if any(len(r) != d for r in P + N):
        raise ValueError(f"constraint rows must have length {d}")
    r = len(P)
    system = []
    for i, row in enumerate(P):
        L = 1
        for x in row:
            L = _lcm(L, x.denominator)
        system.append(tuple(int(x * L) for x in row) + tuple(-L if j == i else 0 for j in range(r)))
    for row in N:
        L = 1
        for x in row:
            L = _lcm(L, x.denominator)
        system.append(tuple(int(x * L) for x in row) + (0,) * r)
    kernel = integer_kernel(system, d + r)
    basis = hermite_basis([k[:d] for k in kernel], d)
    return from_columns(basis, d)
