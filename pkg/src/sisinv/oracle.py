"""Brute-force cross-checks for the lattice and fiber machinery.

Nothing here touches Smith forms, canonical bases or SVDs: membership and
duals are found by exhaustive search over a bounded box, and span distances
by classical Gram-Schmidt.  Results are sound but only complete within the
budget.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .subgroup import SubgroupSpec


@dataclass(frozen=True)
class BruteForceBudget:
    bound: int = 6
    denominator: int = 12
    max_dim: int = 3
    max_window: int = 12

    def __post_init__(self):
        if min(self.bound, self.denominator, self.max_dim, self.max_window) < 1:
            raise ValueError("budget entries must be positive")


def _common_scale(vectors: Sequence[Sequence[Fraction]]) -> int:
    L = 1
    for v in vectors:
        for x in v:
            L = math.lcm(L, Fraction(x).denominator)
    return L


def brute_membership(spec: SubgroupSpec, x: Sequence, budget: BruteForceBudget = BruteForceBudget()) -> bool:
    """Search ``x = sum c_g g + sum t_c c + z`` over the budgeted grid.

    Integer ``c_g`` and ``z`` range over ``[-B, B]``; continuous coefficients
    over multiples of ``1/den`` in ``[-B, B]``.
    """
    d = spec.d
    if d > budget.max_dim:
        raise ValueError(f"dimension {d} exceeds the brute-force budget")
    x = [Fraction(t) for t in x]
    B, den = budget.bound, budget.denominator
    # scale everything to integers: multiply by L (generator denominators) and den
    L = _common_scale([x, *spec.discrete, *spec.continuous])
    S = L * den
    target = np.array([int(t * S) for t in x], dtype=np.int64)
    disc = [np.array([int(t * S) for t in g], dtype=np.int64) for g in spec.discrete]
    cont = [np.array([int(t * L) for t in c], dtype=np.int64) for c in spec.continuous]

    grids = [np.arange(-B, B + 1)] * len(disc) + [np.arange(-B * den, B * den + 1)] * len(cont)
    gens = disc + cont
    if not gens:
        residual = target[None, :]
    else:
        mesh = np.stack(np.meshgrid(*grids, indexing="ij"), axis=-1).reshape(-1, len(gens))
        residual = target[None, :] - mesh @ np.stack(gens)
    integral = np.all(residual % S == 0, axis=1)
    boxed = np.all(np.abs(residual) <= B * S, axis=1)
    return bool(np.any(integral & boxed))


def brute_dual(spec: SubgroupSpec, budget: BruteForceBudget = BruteForceBudget()) -> set[tuple[int, ...]]:
    """Integer points of ``[-B, B]^d`` pairing integrally with the discrete
    generators and orthogonal to the continuous directions."""
    d = spec.d
    if d > budget.max_dim:
        raise ValueError(f"dimension {d} exceeds the brute-force budget")
    B = budget.bound
    out = set()
    for x in itertools.product(range(-B, B + 1), repeat=d):
        if all(sum(xi * gi for xi, gi in zip(x, g)).denominator == 1 for g in spec.discrete) and \
                all(sum(xi * ci for xi, ci in zip(x, c)) == 0 for c in spec.continuous):
            out.add(x)
    return out


def brute_span_membership(vector: Sequence[complex], spanning: Sequence[Sequence[complex]],
                          tol: float = 1e-12) -> float:
    """Euclidean distance from ``vector`` to the span of ``spanning``.

    Modified Gram-Schmidt with one re-orthogonalisation pass; directions whose
    remaining norm falls below ``tol`` times their original norm are dropped.
    """
    x = np.array(vector, dtype=complex)
    basis: list[np.ndarray] = []
    for s in spanning:
        u = np.array(s, dtype=complex)
        n0 = np.linalg.norm(u)
        if n0 == 0:
            continue
        for _ in range(2):
            for q in basis:
                u = u - np.vdot(q, u) * q
        n = np.linalg.norm(u)
        if n > tol * n0:
            basis.append(u / n)
    r = x.copy()
    for _ in range(2):
        for q in basis:
            r = r - np.vdot(q, r) * q
    return float(np.linalg.norm(r))
