"""Closed subgroups Z^d <= M <= R^d with rational data.

A subgroup is described by generators adjoined to Z^d (``discrete``) and a
rational subspace (``continuous``).  :func:`canonicalize` turns that into
the normal form

    M = { sum_{i<=q} (k_i / a_i) v_i + sum_{j>q} t_j v_j : k_i in Z, t_j in R }

with ``v_1..v_d`` a basis of Z^d, ``a_1 | a_2 | ... | a_q`` the invariant
factors, and dual basis ``w_1..w_d`` so that ``{a_i w_i}`` is a basis of the
dual lattice M*.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import exact_linalg as el

RatVector = tuple[Fraction, ...]
IntVector = tuple[int, ...]


def _rat_vector(v: Iterable, d: int) -> RatVector:
    out = tuple(Fraction(x) for x in v)
    if len(out) != d:
        raise ValueError(f"expected a vector of length {d}, got {len(out)}")
    return out


@dataclass(frozen=True)
class SubgroupSpec:
    d: int
    discrete: tuple[RatVector, ...] = ()
    continuous: tuple[RatVector, ...] = ()

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "discrete", tuple(_rat_vector(v, self.d) for v in self.discrete))
        object.__setattr__(self, "continuous", tuple(_rat_vector(v, self.d) for v in self.continuous))


@dataclass(frozen=True)
class ClosedSubgroup:
    """Canonical data of M.  ``V`` and ``W`` hold basis vectors as columns."""

    d: int
    q: int
    a: tuple[int, ...]
    V: el.IntMatrix
    W: el.IntMatrix
    spec: SubgroupSpec | None = field(default=None, compare=False)

    @property
    def continuous_rank(self) -> int:
        return self.d - self.q

    @property
    def is_discrete(self) -> bool:
        return self.q == self.d

    def v(self, i: int) -> IntVector:
        return tuple(row[i] for row in self.V)

    def w(self, i: int) -> IntVector:
        return tuple(row[i] for row in self.W)

    def generators(self) -> list[RatVector]:
        """The lattice generators ``v_i / a_i`` for ``i < q``."""
        return [tuple(Fraction(x, self.a[i]) for x in self.v(i)) for i in range(self.q)]

    def continuous_directions(self) -> list[IntVector]:
        return [self.v(j) for j in range(self.q, self.d)]

    def v_coordinates(self, x: Sequence) -> RatVector:
        # V^-1 = W^T
        return el.matvec(el.transpose(self.W), tuple(Fraction(t) for t in x))

    def w_coordinates(self, k: Sequence[int]) -> IntVector:
        # W^-1 = V^T
        return el.matvec(el.transpose(self.V), tuple(k))

    def to_spec(self) -> SubgroupSpec:
        return SubgroupSpec(self.d, tuple(self.generators()), tuple(self.continuous_directions()))


@dataclass(frozen=True)
class TileResidue:
    sigma: IntVector
    mstar: IntVector


def integer_lattice(d: int) -> ClosedSubgroup:
    return canonicalize(SubgroupSpec(d))


def canonicalize(spec: SubgroupSpec) -> ClosedSubgroup:
    """Invariant factors and adapted bases of the closed group generated by
    Z^d, the discrete generators and the continuous span."""
    d = spec.d
    # Pairings with the unit vectors are integral for any integer x, so only
    # the adjoined generators constrain M*.
    dual_cols = el.constraint_lattice(spec.discrete, spec.continuous, d)
    q = len(dual_cols[0]) if dual_cols and dual_cols[0] else 0
    if q == 0:
        W = el.identity(d)
        a: tuple[int, ...] = ()
    else:
        U, D, _ = el.snf(dual_cols)
        a = tuple(D[i][i] for i in range(q))
        W = el.as_int_matrix(el.rational_inverse(U))
    V, W = _normalize_signs(el.dual_basis(W), W)
    return ClosedSubgroup(d=d, q=q, a=a, V=V, W=W, spec=spec)


def _normalize_signs(V: el.IntMatrix, W: el.IntMatrix) -> tuple[el.IntMatrix, el.IntMatrix]:
    # Flipping v_i together with w_i keeps both the pairing and the basis
    # {a_i w_i} of M*; make the last nonzero entry of every v_i positive
    # so reports are reproducible.
    vs, ws = [], []
    for v, w in zip(el.columns(V), el.columns(W)):
        if next(x for x in reversed(v) if x) < 0:
            v, w = tuple(-x for x in v), tuple(-x for x in w)
        vs.append(v)
        ws.append(w)
    return el.from_columns(vs), el.from_columns(ws)


def dual(M: ClosedSubgroup) -> el.IntMatrix:
    """Columns ``a_i w_i``: a Z-basis of M* (a d x q matrix)."""
    cols = [tuple(M.a[i] * x for x in M.w(i)) for i in range(M.q)]
    return el.from_columns(cols, M.d)


def contains(M: ClosedSubgroup, x: Sequence) -> bool:
    if len(x) != M.d:
        raise ValueError(f"expected a vector of length {M.d}")
    u = M.v_coordinates(x)
    return all((u[i] * M.a[i]).denominator == 1 for i in range(M.q))


def in_dual(M: ClosedSubgroup, k: Sequence[int]) -> bool:
    c = M.w_coordinates(k)
    return (all(c[i] % M.a[i] == 0 for i in range(M.q))
            and all(c[j] == 0 for j in range(M.q, M.d)))


def reduce_tile(M: ClosedSubgroup, k: Sequence[int]) -> TileResidue:
    """Split ``k = sigma + mstar`` with sigma in the section N of Z^d/M*."""
    k = tuple(int(x) for x in k)
    if len(k) != M.d:
        raise ValueError(f"expected a vector of length {M.d}")
    c = M.w_coordinates(k)
    r = list(c)
    t = [0] * M.d
    for i in range(M.q):
        t[i], r[i] = divmod(c[i], M.a[i])
        t[i] *= M.a[i]
    sigma = el.matvec(M.W, r)
    mstar = el.matvec(M.W, t)
    return TileResidue(sigma, mstar)


def partition_tiles(M: ClosedSubgroup, K: Iterable[Sequence[int]]) -> dict[IntVector, list[IntVector]]:
    """Group tiles by residue class; keys are the canonical sigmas, sorted."""
    classes: dict[IntVector, list[IntVector]] = {}
    for k in K:
        k = tuple(int(x) for x in k)
        classes.setdefault(reduce_tile(M, k).sigma, []).append(k)
    return {s: sorted(set(ks)) for s, ks in sorted(classes.items())}


def in_continuous_span(M: ClosedSubgroup, x: Sequence) -> bool:
    # span{v_j : j > q} is the annihilator of w_1..w_q
    u = M.v_coordinates(x)
    return all(u[i] == 0 for i in range(M.q))


def is_subgroup_of(M: ClosedSubgroup, M2: ClosedSubgroup) -> bool:
    if M.d != M2.d:
        raise ValueError("subgroups live in different dimensions")
    return (all(contains(M2, g) for g in M.generators())
            and all(in_continuous_span(M2, v) for v in M.continuous_directions()))


def same_subgroup(M: ClosedSubgroup, M2: ClosedSubgroup) -> bool:
    return is_subgroup_of(M, M2) and is_subgroup_of(M2, M)


def dual_as_subgroup(basis: el.IntMatrix, d: int) -> ClosedSubgroup:
    """The closed group ``{x : <x, b> in Z for every column b}``.

    With B the basis matrix, ``x`` qualifies iff ``B^T x`` is integral: the
    columns of ``B (B^T B)^-1`` realise every integer pairing vector and the
    kernel of ``B^T`` is free.
    """
    cols = el.columns(basis) if basis and basis[0] else []
    if not cols:
        return canonicalize(SubgroupSpec(d, (), tuple(el.columns(el.identity(d)))))
    B = el.from_columns(cols)
    Bt = el.transpose(B)
    pinv = el.matmul(B, el.rational_inverse(el.matmul(Bt, B)))
    kernel = el.integer_kernel(Bt, d)
    return canonicalize(SubgroupSpec(d, tuple(el.columns(pinv)), tuple(kernel)))
