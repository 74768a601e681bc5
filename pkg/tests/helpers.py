"""Fixture subgroups and random instance generators shared by the tests."""
from __future__ import annotations

import itertools
import time
from contextlib import contextmanager
from fractions import Fraction as F

import numpy as np

from sisinv import fibered as fb
from sisinv import subgroup as sg


def group(d, discrete=(), continuous=()):
    return sg.canonicalize(sg.SubgroupSpec(d, tuple(discrete), tuple(continuous)))


def one_over(n):
    return group(1, [(F(1, n),)])


EX_2_12 = dict(d=3, discrete=[(F(1, 2), 0, 0), (0, F(1, 3), 0)], continuous=[(0, 0, 1)])
EX_4_3_3 = dict(d=2, discrete=[(F(1, 3), 0)], continuous=[(-1, 1)])


def family(d):
    """Named subgroups used for sweeps; several chains under inclusion."""
    if d == 1:
        return {
            "Z": group(1),
            "Z/2": one_over(2),
            "Z/3": one_over(3),
            "Z/4": one_over(4),
            "Z/6": one_over(6),
            "R": group(1, continuous=[(1,)]),
        }
    return {
        "Z2": group(2),
        "Z/2 x Z": group(2, [(F(1, 2), 0)]),
        "Z x Z/2": group(2, [(0, F(1, 2))]),
        "Z/2 x Z/2": group(2, [(F(1, 2), 0), (0, F(1, 2))]),
        "diag/2": group(2, [(F(1, 2), F(1, 2))]),
        "Z/4 x Z/2": group(2, [(F(1, 4), 0), (0, F(1, 2))]),
        "Z/2 x R": group(2, [(F(1, 2), 0)], [(0, 1)]),
        "Z x R": group(2, [], [(0, 1)]),
        "ex433": group(**EX_4_3_3),
        "R2": group(2, [], [(1, 0), (0, 1)]),
    }


def random_window(rng, d, max_tiles=12):
    if d == 1:
        lo = int(rng.integers(-4, 1))
        n = int(rng.integers(2, max_tiles + 1))
        return [(lo + i,) for i in range(n)]
    box = list(itertools.product(range(-2, 3), range(-2, 2)))
    n = int(rng.integers(2, max_tiles + 1))
    idx = rng.choice(len(box), size=n, replace=False)
    return sorted(box[i] for i in idx)


def random_grid(rng, d):
    top = 8 if d == 1 else 4
    return tuple(int(rng.integers(1, top + 1)) for _ in range(d))


def exact_values(rng, shape):
    return rng.choice(np.array([0, 1, -1, 1j, -1j]), size=shape)


def gaussian_values(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_generator(rng, d, window, grid, exact=True, density=0.8):
    n = int(np.prod(grid))
    vals = exact_values if exact else gaussian_values
    tiles = {}
    for k in window:
        if rng.random() < density:
            tiles[k] = vals(rng, n)
    if not tiles:
        tiles[window[0]] = vals(rng, n)
    return fb.FiberedGenerator(d, grid, tiles)


def invariant_generators(rng, M, d, window, grid, ell, exact=True):
    """Generators of an M-invariant space: mixtures of cutoffs of one
    function supported on at most ``ell`` residue classes."""
    classes = list(sg.partition_tiles(M, window).values())
    pick = rng.choice(len(classes), size=min(ell, len(classes)), replace=False)
    support = [k for i in pick for k in classes[i]]
    base = random_generator(rng, d, support, grid, exact, density=1.0)
    pieces = list(fb.cutoffs(base, M).values())
    if exact or len(pieces) == 1:
        return pieces
    n = int(np.prod(grid))
    mix = gaussian_values(rng, (n, len(pieces), len(pieces)))  # Z^d-periodic per cell
    gens = []
    for i in range(len(pieces)):
        tiles = {}
        for k in base.window:
            tiles[k] = sum(mix[:, i, j] * pieces[j].values(k) for j in range(len(pieces)))
        gens.append(base.with_tiles(tiles))
    return gens


def random_instance(rng):
    """A random windowed generator set plus the family of its dimension.

    Roughly half the instances are invariant under a random family member
    by construction; the rest are unstructured.
    """
    d = int(rng.integers(1, 3))
    fam = family(d)
    window = random_window(rng, d)
    grid = random_grid(rng, d)
    ell = int(rng.integers(1, 4))
    exact = bool(rng.random() < 0.5)
    if rng.random() < 0.5:
        M0 = list(fam.values())[int(rng.integers(len(fam)))]
        gens = invariant_generators(rng, M0, d, window, grid, ell, exact)
    else:
        gens = [random_generator(rng, d, window, grid, exact) for _ in range(ell)]
    return fb.GeneratorSet(tuple(gens)), fam


def random_spec(rng, max_d=3):
    """Rational subgroup data inside the oracle's completeness budget:
    denominators in {1,2,3,4,6}, entries of size <= 1/2, at most two
    discrete generators and one continuous direction with a +-1 entry."""
    d = int(rng.integers(1, max_d + 1))
    discrete = []
    for _ in range(int(rng.integers(0, 3))):
        den = int(rng.choice([1, 2, 3, 4, 6]))
        discrete.append(tuple(F(int(rng.integers(-(den // 2), den // 2 + 1)), den) for _ in range(d)))
    continuous = []
    if d > 1 and rng.random() < 0.5:
        c = [int(x) for x in rng.integers(-1, 2, size=d)]
        c[int(rng.integers(d))] = int(rng.choice([-1, 1]))
        continuous.append(tuple(c))
    return sg.SubgroupSpec(d, tuple(discrete), tuple(continuous))


def random_unimodular(rng, n, steps=6):
    U = np.eye(n, dtype=object)
    for _ in range(steps):
        i, j = rng.choice(n, size=2, replace=False) if n > 1 else (0, 0)
        if n == 1:
            U[0, 0] *= -1
            continue
        op = rng.integers(3)
        if op == 0:
            U[i, :] += int(rng.integers(-2, 3)) * U[j, :]
        elif op == 1:
            U[[i, j]] = U[[j, i]]
        else:
            U[i, :] *= -1
    return [[int(x) for x in row] for row in U]


CRITERIA: dict[int, str] = {}


@contextmanager
def criterion(n: int, title: str, limit: float):
    """Record one PASS/FAIL line for an acceptance criterion, time limit included."""
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        passed = ok and elapsed < limit
        line = f"criterion {n}: {'PASS' if passed else 'FAIL'}  {title}  ({elapsed:.2f}s, limit {limit:g}s)"
        CRITERIA[n] = line
        print(line)
    assert elapsed < limit, f"criterion {n} took {elapsed:.2f}s, limit {limit:g}s"
