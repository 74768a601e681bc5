import itertools
import math
from fractions import Fraction as F

import numpy as np
import pytest

from helpers import EX_2_12, EX_4_3_3
from sisinv import fibered as fb
from sisinv import oracle
from sisinv.subgroup import SubgroupSpec


def test_budget_validation():
    with pytest.raises(ValueError):
        oracle.BruteForceBudget(bound=0)
    b = oracle.BruteForceBudget()
    assert (b.bound, b.denominator, b.max_dim, b.max_window) == (6, 12, 3, 12)


def test_brute_membership_examples():
    spec = SubgroupSpec(**EX_4_3_3)
    assert oracle.brute_membership(spec, (F(1, 3), 0))
    assert oracle.brute_membership(spec, (0, 0))
    assert not oracle.brute_membership(spec, (F(1, 2), 0))
    # a continuous shift on the rational grid
    assert oracle.brute_membership(spec, (F(1, 3) - F(5, 12), F(5, 12)))


def test_brute_membership_rejects_large_dimension():
    with pytest.raises(ValueError):
        oracle.brute_membership(SubgroupSpec(4), (0, 0, 0, 0))


def test_brute_dual_examples():
    assert len(oracle.brute_dual(SubgroupSpec(2), oracle.BruteForceBudget(bound=2))) == 25
    box = oracle.brute_dual(SubgroupSpec(**EX_2_12))
    expect = {(x, y, 0) for x in range(-6, 7, 2) for y in range(-6, 7, 3)}
    assert box == expect
    assert oracle.brute_dual(SubgroupSpec(**EX_4_3_3)) == {(-6, -6), (-3, -3), (0, 0), (3, 3), (6, 6)}


def test_span_residual_examples():
    assert oracle.brute_span_membership([1, 2], [[1, 2], [0, 0]]) == pytest.approx(0, abs=1e-15)
    assert oracle.brute_span_membership([1, 0], [[1, 1]]) == pytest.approx(1 / math.sqrt(2), rel=1e-14)
    assert oracle.brute_span_membership([3, 4j], []) == pytest.approx(5)


def test_span_residual_tracks_rank_increment():
    rng = np.random.default_rng(3)
    for _ in range(100):
        n, r = int(rng.integers(2, 6)), int(rng.integers(1, 4))
        S = rng.standard_normal((r, n)) + 1j * rng.standard_normal((r, n))
        inside = rng.random() < 0.5
        x = (rng.standard_normal(r) @ S) if inside else rng.standard_normal(n) + 0j
        res = oracle.brute_span_membership(x, S)
        grew = fb.numerical_rank(np.vstack([S, x]) @ np.vstack([S, x]).conj().T) > \
            fb.numerical_rank(S @ S.conj().T)
        assert (res > 1e-6 * np.linalg.norm(x)) == grew


def test_membership_grid_is_exhaustive_for_lattices():
    # (1/4)Z: exactly the quarter points of [0, 1)
    spec = SubgroupSpec(1, ((F(1, 4),),))
    hits = [F(n, 12) for n in range(12) if oracle.brute_membership(spec, (F(n, 12),))]
    assert hits == [F(0), F(1, 4), F(1, 2), F(3, 4)]


def test_dual_is_box_intersection_of_lattice():
    spec = SubgroupSpec(2, ((F(1, 2), F(1, 2)),))
    box = oracle.brute_dual(spec, oracle.BruteForceBudget(bound=3))
    expect = {x for x in itertools.product(range(-3, 4), repeat=2) if (x[0] + x[1]) % 2 == 0}
    assert box == expect
