"""Windowed Fourier-domain model of finitely generated shift-invariant spaces.

A generator is stored through its fibers: for every integer tile ``k`` of a
finite window, a complex array with one value per cell of a uniform grid
over the fundamental domain ``Omega = frame @ [0, 1)^d``.  The function is
piecewise constant on the cells and vanishes off the window, so every
verdict below is exact for the modelled space (up to the rank tolerance).

Arrays are laid out ``(cells, generators, tiles)`` so that per-cell linear
algebra runs as one batched numpy call.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from . import exact_linalg as el
from .subgroup import (ClosedSubgroup, IntVector, contains, in_dual,
                       is_subgroup_of, partition_tiles, same_subgroup)

DEFAULT_TOL = 1e-8

_num_threads = 1


def set_num_threads(n: int) -> None:
    """Spread per-cell decompositions over ``n`` worker threads."""
    global _num_threads
    if n < 1:
        raise ValueError("thread count must be positive")
    _num_threads = n


def _chunked(fn, arr: np.ndarray):
    if _num_threads == 1 or arr.shape[0] < 2 * _num_threads:
        return fn(arr)
    parts = np.array_split(arr, _num_threads)
    with ThreadPoolExecutor(_num_threads) as pool:
        results = list(pool.map(fn, parts))
    if isinstance(results[0], tuple):
        return tuple(np.concatenate(r) for r in zip(*results))
    return np.concatenate(results)


class IncompatibleGeneratorsError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiberedGenerator:
    d: int
    grid: tuple[int, ...]
    tiles: Mapping[IntVector, np.ndarray]
    frame: el.IntMatrix = None  # type: ignore[assignment]

    def __post_init__(self):
        grid = tuple(int(n) for n in self.grid)
        if len(grid) != self.d or any(n < 1 for n in grid):
            raise ValueError(f"grid {self.grid} does not fit dimension {self.d}")
        tiles = {}
        for k, vals in self.tiles.items():
            k = tuple(int(x) for x in k)
            if len(k) != self.d:
                raise ValueError(f"tile index {k} has wrong length")
            arr = np.array(vals, dtype=complex).reshape(grid)
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"tile {k} holds non-finite values")
            arr.setflags(write=False)
            tiles[k] = arr
        frame = el.identity(self.d) if self.frame is None else el.as_int_matrix(self.frame)
        if el.shape(frame) != (self.d, self.d) or not el.is_unimodular(frame):
            raise ValueError("frame must be a unimodular d x d integer matrix")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "tiles", dict(sorted(tiles.items())))
        object.__setattr__(self, "frame", frame)

    @property
    def window(self) -> list[IntVector]:
        return list(self.tiles)

    @property
    def ncells(self) -> int:
        return math.prod(self.grid)

    @property
    def cellvol(self) -> Fraction:
        # |Omega| = |det frame| = 1
        return Fraction(1, self.ncells)

    def values(self, k: Sequence[int]) -> np.ndarray:
        """Flat (row-major) cell values on tile ``k``; zero off the window."""
        arr = self.tiles.get(tuple(k))
        return np.zeros(self.ncells, complex) if arr is None else arr.reshape(-1)

    def matrix(self, window: Sequence[IntVector]) -> np.ndarray:
        """``(cells, tiles)`` array of fiber values over ``window``."""
        if not window:
            return np.zeros((self.ncells, 0), complex)
        return np.stack([self.values(k) for k in window], axis=1)

    def with_tiles(self, tiles: Mapping[IntVector, np.ndarray]) -> "FiberedGenerator":
        return FiberedGenerator(self.d, self.grid, tiles, self.frame)


def compatible(f: FiberedGenerator, g: FiberedGenerator) -> bool:
    return f.d == g.d and f.grid == g.grid and f.frame == g.frame


def _check_compatible(gens: Sequence[FiberedGenerator]) -> None:
    for g in gens[1:]:
        if not compatible(gens[0], g):
            raise IncompatibleGeneratorsError("generators differ in dimension, grid or frame")


def norm2(f: FiberedGenerator) -> float:
    return float(sum(np.sum(np.abs(v) ** 2) for v in f.tiles.values()) / f.ncells)


def inner(f: FiberedGenerator, g: FiberedGenerator) -> complex:
    _check_compatible([f, g])
    total = sum(np.vdot(g.values(k), v) for k, v in f.tiles.items())
    return complex(total) / f.ncells


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    generators: tuple[FiberedGenerator, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("a generator set needs at least one generator")
        _check_compatible(gens)
        object.__setattr__(self, "generators", gens)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def d(self) -> int:
        return self.generators[0].d

    @property
    def grid(self) -> tuple[int, ...]:
        return self.generators[0].grid

    @property
    def frame(self) -> el.IntMatrix:
        return self.generators[0].frame

    @property
    def ncells(self) -> int:
        return self.generators[0].ncells

    @property
    def cellvol(self) -> Fraction:
        return self.generators[0].cellvol

    @property
    def window(self) -> list[IntVector]:
        return sorted({k for g in self.generators for k in g.tiles})

    def fibers(self, window: Sequence[IntVector] | None = None) -> np.ndarray:
        """``(cells, generators, tiles)`` array of fiber values."""
        window = self.window if window is None else window
        return np.stack([g.matrix(window) for g in self.generators], axis=1)

    def cell_index(self, c: int) -> tuple[int, ...]:
        return tuple(int(i) for i in np.unravel_index(c, self.grid))


def as_generator_set(Phi) -> GeneratorSet:
    if isinstance(Phi, GeneratorSet):
        return Phi
    if isinstance(Phi, FiberedGenerator):
        return GeneratorSet((Phi,))
    return GeneratorSet(tuple(Phi))


# -- ranks and Gramians ------------------------------------------------------

def _top(sv: np.ndarray) -> np.ndarray:
    return sv.max(axis=-1) if sv.shape[-1] else np.zeros(sv.shape[:-1])


def _rank_counts(sv: np.ndarray, tol_rel: float, scale: np.ndarray | None = None) -> np.ndarray:
    """Count singular values above ``tol_rel * scale`` (default: the largest)."""
    smax = (_top(sv) if scale is None else scale)[..., None]
    return np.sum((sv > tol_rel * smax) & (smax > 0), axis=-1)


def numerical_rank(H, tol_rel: float = DEFAULT_TOL) -> int:
    """Singular values above ``tol_rel`` times the largest one."""
    H = np.asarray(H, dtype=complex)
    if H.size == 0:
        return 0
    sv = np.linalg.svd(H, compute_uv=False)
    return int(_rank_counts(sv, tol_rel))


@dataclass(frozen=True, eq=False)
class GramianField:
    matrices: np.ndarray        # (cells, l, l)
    singular_values: np.ndarray  # (cells, l), descending
    ranks: np.ndarray           # (cells,)
    tol: float


def _gram(F: np.ndarray) -> np.ndarray:
    return np.einsum("cik,cjk->cij", F, F.conj())


def _svdvals(G: np.ndarray) -> np.ndarray:
    if G.shape[-1] == 0:
        return np.zeros(G.shape[:-1])
    return _chunked(lambda x: np.linalg.svd(x, compute_uv=False), G)


def _gram_ranks(F: np.ndarray, tol_rel: float) -> np.ndarray:
    return _rank_counts(_svdvals(_gram(F)), tol_rel)


def gramian(Phi, tol_rel: float = DEFAULT_TOL) -> GramianField:
    Phi = as_generator_set(Phi)
    G = _gram(Phi.fibers())
    sv = _svdvals(G)
    return GramianField(G, sv, _rank_counts(sv, tol_rel), tol_rel)


def dimension_function(Phi, tol_rel: float = DEFAULT_TOL) -> np.ndarray:
    """Per-cell ``dim J_S(omega)``, shaped like the grid."""
    Phi = as_generator_set(Phi)
    return gramian(Phi, tol_rel).ranks.reshape(Phi.grid)


# -- residue classes, cutoffs ------------------------------------------------

def residue_classes(M: ClosedSubgroup, window: Sequence[IntVector]) -> dict[IntVector, list[int]]:
    """Canonical sigma -> positions in ``window`` of the tiles in its class."""
    pos = {k: i for i, k in enumerate(window)}
    return {s: [pos[k] for k in ks] for s, ks in partition_tiles(M, window).items()}


def cutoff(phi: FiberedGenerator, tile_class: Sequence[Sequence[int]]) -> FiberedGenerator:
    """Keep the tiles of one residue class and zero the rest."""
    keep = {tuple(k) for k in tile_class}
    return phi.with_tiles({k: v for k, v in phi.tiles.items() if k in keep})


def cutoffs(phi: FiberedGenerator, M: ClosedSubgroup) -> dict[IntVector, FiberedGenerator]:
    return {s: cutoff(phi, ks) for s, ks in partition_tiles(M, phi.window).items()}


def translate(phi: FiberedGenerator, m: Sequence) -> FiberedGenerator:
    """Fourier model of ``t_m phi``: multiply by ``exp(-2 pi i <x, m>)``.

    The exponential is evaluated at cell midpoints of ``Omega + k``.
    """
    phase_cells = _midpoint_phase(phi, m)
    tiles = {k: v.reshape(-1) * phase_cells * _tile_phase(k, m) for k, v in phi.tiles.items()}
    return phi.with_tiles(tiles)


def cell_midpoints(phi: FiberedGenerator) -> np.ndarray:
    """``(cells, d)`` midpoints ``frame @ ((j + 1/2) / n)``."""
    axes = [(np.arange(n) + 0.5) / n for n in phi.grid]
    mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, phi.d)
    return mesh @ np.array(phi.frame, dtype=float).T


def _midpoint_phase(phi: FiberedGenerator, m: Sequence) -> np.ndarray:
    mf = np.array([float(Fraction(x)) for x in m])
    return np.exp(-2j * np.pi * (cell_midpoints(phi) @ mf))


def _tile_phase(k: Sequence[int], m: Sequence) -> complex:
    # reduce <k, m> mod 1 exactly before going to floating point
    s = sum(Fraction(x) * ki for x, ki in zip(m, k)) % 1
    return complex(np.exp(-2j * np.pi * float(s)))


# -- invariance tests --------------------------------------------------------

@dataclass(eq=False)
class InvarianceReport:
    method: str
    verdict: bool
    tol: float
    grid: tuple[int, ...]
    classes: list[IntVector]
    rank_total: np.ndarray        # (cells,)
    ranks_by_class: np.ndarray    # (cells, classes)
    residual: np.ndarray | None = None  # (cells,) worst relative residual
    notes: list[str] = field(default_factory=list)

    @property
    def defect(self) -> np.ndarray:
        return self.ranks_by_class.sum(axis=1) - self.rank_total

    @property
    def worst_residual(self) -> float | None:
        if self.residual is None or self.residual.size == 0:
            return None
        return float(self.residual.max())

    def to_dict(self) -> dict:
        defect = self.defect
        cells = []
        for c in range(self.rank_total.shape[0]):
            cells.append({
                "index": [int(i) for i in np.unravel_index(c, self.grid)],
                "rank_total": int(self.rank_total[c]),
                "ranks_by_class": [int(r) for r in self.ranks_by_class[c]],
                "defect": int(defect[c]),
                "residual": None if self.residual is None else float(self.residual[c]),
            })
        return {
            "method": self.method,
            "verdict": bool(self.verdict),
            "tol": self.tol,
            "classes": [list(s) for s in self.classes],
            "worst_residual": self.worst_residual,
            "notes": list(self.notes),
            "cells": cells,
        }


def _rank_ledger(F: np.ndarray, classes: dict[IntVector, list[int]], tol_rel: float):
    # one scale per cell: the cutoff Gramians are measured against the
    # largest singular value of the full Gramian, as the fiber residuals are
    sv = _svdvals(_gram(F))
    scale = _top(sv)
    total = _rank_counts(sv, tol_rel, scale)
    by_class = np.zeros((F.shape[0], len(classes)), dtype=int)
    for j, idx in enumerate(classes.values()):
        by_class[:, j] = _rank_counts(_svdvals(_gram(F[:, :, idx])), tol_rel, scale)
    return total, by_class


def _span_basis(F: np.ndarray, tol_rel: float):
    """Orthonormal rows spanning each cell's generator fibers.

    Returns ``(Vh, mask, scale2)``; row ``r`` of ``Vh[c]`` belongs to the span
    iff ``mask[c, r]``.  The cutoff matches the Gramian rank: squared
    singular values above ``tol_rel`` times the largest.
    """
    if F.shape[1] == 0 or F.shape[2] == 0:
        n = F.shape[0]
        return np.zeros((n, 0, F.shape[2]), complex), np.zeros((n, 0), bool), np.zeros(n)
    _, s, Vh = _chunked(lambda x: np.linalg.svd(x, full_matrices=False), F)
    s2 = s ** 2
    scale2 = s2.max(axis=1)
    mask = (s2 > tol_rel * scale2[:, None]) & (scale2[:, None] > 0)
    return Vh, mask, scale2


def _relative_residuals(X: np.ndarray, Vh, mask, scale2, tol_rel: float) -> np.ndarray:
    """Distance from each ``X[c]`` to the span, relative to ``|X[c]|``."""
    coeff = np.einsum("crk,ck->cr", Vh.conj(), X) * mask
    resid = np.linalg.norm(X - np.einsum("cr,crk->ck", coeff, Vh), axis=1)
    xnorm = np.linalg.norm(X, axis=1)
    negligible = xnorm ** 2 <= tol_rel * scale2
    out = np.zeros(X.shape[0])
    live = ~negligible
    out[live] = resid[live] / xnorm[live]
    return out


def test_invariance_rank(Phi, M: ClosedSubgroup, tol_rel: float = DEFAULT_TOL) -> InvarianceReport:
    """Compare ``rank G_Phi`` with the sum of the cutoff Gramian ranks."""
    Phi = as_generator_set(Phi)
    _check_dim(Phi, M)
    window = Phi.window
    classes = residue_classes(M, window)
    total, by_class = _rank_ledger(Phi.fibers(window), classes, tol_rel)
    verdict = bool(np.all(by_class.sum(axis=1) == total))
    return InvarianceReport("rank", verdict, tol_rel, Phi.grid, list(classes), total, by_class)


def test_invariance_fiber(Phi, M: ClosedSubgroup, tol_rel: float = DEFAULT_TOL) -> InvarianceReport:
    """Check that every cutoff fiber lies in the span of the generator fibers."""
    Phi = as_generator_set(Phi)
    _check_dim(Phi, M)
    window = Phi.window
    classes = residue_classes(M, window)
    F = Phi.fibers(window)
    total, by_class = _rank_ledger(F, classes, tol_rel)
    Vh, mask, scale2 = _span_basis(F, tol_rel)
    worst = np.zeros(F.shape[0])
    if len(classes) > 1:
        for idx in classes.values():
            sel = np.zeros(len(window), bool)
            sel[idx] = True
            for h in range(len(Phi)):
                X = np.where(sel, F[:, h, :], 0)
                worst = np.maximum(worst, _relative_residuals(X, Vh, mask, scale2, tol_rel))
    verdict = bool(np.all(worst <= tol_rel))
    return InvarianceReport("fiber", verdict, tol_rel, Phi.grid, list(classes), total, by_class, worst)


def default_samples(M: ClosedSubgroup, rng: np.random.Generator | None = None,
                    per_direction: int = 2, denominator: int = 1009) -> list[tuple[Fraction, ...]]:
    """Members of M that generate it, for the modulation test.

    The lattice part is covered by ``v_i / a_i``.  Each continuous direction
    gets ``p / denominator`` multiples with random ``p``; with a prime
    denominator larger than the spread of ``<k, v>`` over the window, one such
    shift already separates every level set, so invariance under it implies
    invariance under the whole line.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    samples = list(M.generators())
    for v in M.continuous_directions():
        for _ in range(per_direction):
            t = Fraction(int(rng.integers(1, denominator)), denominator)
            samples.append(tuple(t * x for x in v))
    return samples


def test_invariance_modulation(Phi, M: ClosedSubgroup, samples: Sequence[Sequence] | None = None,
                               tol_rel: float = DEFAULT_TOL) -> InvarianceReport:
    """Check ``t_m phi in S`` directly, fiber by fiber, for sampled ``m in M``."""
    Phi = as_generator_set(Phi)
    _check_dim(Phi, M)
    if samples is None:
        samples = default_samples(M)
    samples = [tuple(Fraction(x) for x in m) for m in samples]
    for m in samples:
        if not contains(M, m):
            raise ValueError(f"sample {m} is not a member of the subgroup")
    window = Phi.window
    classes = residue_classes(M, window)
    F = Phi.fibers(window)
    total, by_class = _rank_ledger(F, classes, tol_rel)
    Vh, mask, scale2 = _span_basis(F, tol_rel)
    worst = np.zeros(F.shape[0])
    probe = Phi.generators[0]
    for m in samples:
        phase = _midpoint_phase(probe, m)[:, None] * np.array([_tile_phase(k, m) for k in window])[None, :]
        for h in range(len(Phi)):
            worst = np.maximum(worst, _relative_residuals(phase * F[:, h, :], Vh, mask, scale2, tol_rel))
    verdict = bool(np.all(worst <= tol_rel))
    notes = [f"samples: {len(samples)}"]
    return InvarianceReport("modulation", verdict, tol_rel, Phi.grid, list(classes), total,
                            by_class, worst, notes)


for _fn in (test_invariance_rank, test_invariance_fiber, test_invariance_modulation):
    _fn.__test__ = False  # keep pytest from collecting these by name

METHODS = {
    "rank": test_invariance_rank,
    "fiber": test_invariance_fiber,
    "modulation": test_invariance_modulation,
}


def run_test(method: str, Phi, M: ClosedSubgroup, tol_rel: float = DEFAULT_TOL,
             samples=None) -> InvarianceReport:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "modulation":
        return test_invariance_modulation(Phi, M, samples, tol_rel)
    return METHODS[method](Phi, M, tol_rel)


def _check_dim(Phi: GeneratorSet, M: ClosedSubgroup) -> None:
    if Phi.d != M.d:
        raise ValueError(f"generators live in dimension {Phi.d}, subgroup in {M.d}")


# -- principal M-invariant spaces -------------------------------------------

def bracket(f: FiberedGenerator, g: FiberedGenerator, M: ClosedSubgroup) -> dict[IntVector, np.ndarray]:
    """``[f, g]`` per residue class: sum over the class of ``f * conj(g)``."""
    _check_compatible([f, g])
    window = sorted(set(f.tiles) | set(g.tiles))
    Ff, Fg = f.matrix(window), g.matrix(window)
    prod = Ff * Fg.conj()
    return {s: prod[:, idx].sum(axis=1) for s, idx in residue_classes(M, window).items()}


def principal_symbol(f: FiberedGenerator, g: FiberedGenerator, M: ClosedSubgroup,
                     tol_rel: float = DEFAULT_TOL) -> dict[IntVector, np.ndarray]:
    """The M*-periodic multiplier of the projection of g onto S_M(f)."""
    ff = bracket(f, f, M)
    gf = bracket(g, f, M)
    top = max((float(v.real.max()) for v in ff.values()), default=0.0)
    eta = {}
    for s, v in ff.items():
        on = v.real > tol_rel * top
        e = np.zeros_like(v)
        e[on] = gf[s][on] / v[on]
        eta[s] = e
    return eta


def project_principal(f: FiberedGenerator, g: FiberedGenerator, M: ClosedSubgroup,
                      tol_rel: float = DEFAULT_TOL) -> FiberedGenerator:
    """Orthogonal projection of g onto the principal M-invariant space S_M(f)."""
    eta = principal_symbol(f, g, M, tol_rel)
    classes = partition_tiles(M, f.window)
    tiles = {}
    for s, ks in classes.items():
        for k in ks:
            tiles[k] = eta[s] * f.values(k)
    return f.with_tiles(tiles)


# -- constructions and reports ----------------------------------------------

def exact_invariant_generator(M: ClosedSubgroup, window: Sequence[Sequence[int]],
                              grid: Sequence[int]) -> FiberedGenerator:
    """Indicator of ``B_0 = Omega + M*`` restricted to the window."""
    grid = tuple(grid)
    ones = np.ones(math.prod(grid), complex)
    tiles = {tuple(k): ones for k in window if in_dual(M, k)}
    if not tiles:
        raise ValueError("the window meets no tile of the class of 0")
    return FiberedGenerator(M.d, grid, tiles, M.W)


@dataclass(eq=False)
class SupportReport:
    ell: int
    cellvol: Fraction
    support_counts: list[int]      # nonzero (class, cell) pairs per generator
    level_counts: list[int]        # cells with dim_S == j, j = 0..ell

    @property
    def support_measures(self) -> list[Fraction]:
        return [c * self.cellvol for c in self.support_counts]

    @property
    def level_measures(self) -> list[Fraction]:
        return [c * self.cellvol for c in self.level_counts]

    @property
    def weighted_dimension(self) -> Fraction:
        return sum((j * m for j, m in enumerate(self.level_measures)), Fraction(0))

    @property
    def violations(self) -> list[str]:
        out = []
        w = self.weighted_dimension
        for h, s in enumerate(self.support_measures):
            if s > w:
                out.append(f"generator {h}: support {s} exceeds sum j|E_j| = {w}")
        if w > self.ell:
            out.append(f"sum j|E_j| = {w} exceeds the number of generators {self.ell}")
        return out

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "support": [str(x) for x in self.support_measures],
            "level_sets": [str(x) for x in self.level_measures],
            "weighted_dimension": str(self.weighted_dimension),
            "violations": self.violations,
        }


def support_report(Phi, M: ClosedSubgroup, tol_rel: float = DEFAULT_TOL) -> SupportReport:
    """Windowed support measure on a section of R^d/M* against sum j|E_j|.

    A (class, cell) pair counts as support when any tile of the class is
    nonzero there, i.e. the section is chosen to hit the support whenever
    possible.  Values below ``tol_rel`` times the generator's peak are zero.
    """
    Phi = as_generator_set(Phi)
    _check_dim(Phi, M)
    window = Phi.window
    classes = residue_classes(M, window)
    F = Phi.fibers(window)
    counts = []
    for h in range(len(Phi)):
        A = np.abs(F[:, h, :])
        peak = A.max() if A.size else 0.0
        nz = A > tol_rel * peak if peak > 0 else np.zeros_like(A, bool)
        counts.append(int(sum(np.count_nonzero(nz[:, idx].any(axis=1)) for idx in classes.values())))
    ranks = _gram_ranks(F, tol_rel)
    levels = [int(np.count_nonzero(ranks == j)) for j in range(len(Phi) + 1)]
    return SupportReport(len(Phi), Phi.cellvol, counts, levels)


class MonotonicityError(RuntimeError):
    """A subgroup passed while one of its subgroups failed."""


@dataclass(eq=False)
class SweepEntry:
    subgroup: ClosedSubgroup
    verdict: bool
    report: InvarianceReport


def find_extra_invariance(Phi, candidates: Sequence[ClosedSubgroup],
                          tol_rel: float = DEFAULT_TOL) -> list[SweepEntry]:
    Phi = as_generator_set(Phi)
    entries = []
    for M in candidates:
        rep = test_invariance_rank(Phi, M, tol_rel)
        entries.append(SweepEntry(M, rep.verdict, rep))
    for a in entries:
        for b in entries:
            if b.verdict and not a.verdict and is_subgroup_of(a.subgroup, b.subgroup):
                raise MonotonicityError(
                    f"subgroup with factors {a.subgroup.a} fails while its supergroup "
                    f"with factors {b.subgroup.a} passes")
    return entries


def window_distinguishes(M: ClosedSubgroup, M_prime: ClosedSubgroup,
                         window: Sequence[Sequence[int]]) -> bool:
    """Whether some M-class of the window splits into several M'-classes.

    Without such a split every M'-cutoff equals an M-cutoff and the window
    cannot tell the two groups apart.
    """
    if same_subgroup(M, M_prime):
        return False
    window = [tuple(k) for k in window]
    for ks in partition_tiles(M, window).values():
        if len(partition_tiles(M_prime, ks)) >= 2:
            return True
    return False
