"""Extra invariance of finitely generated shift-invariant spaces.

Exact canonical forms for closed subgroups Z^d <= M <= R^d, and fiber /
Gramian tests deciding whether a windowed shift-invariant space is
M-invariant.
"""
from .exact_linalg import LatticeSNF, snf
from .fibered import (FiberedGenerator, GeneratorSet, InvarianceReport,
                      exact_invariant_generator, find_extra_invariance,
                      project_principal, support_report)
from .subgroup import (ClosedSubgroup, SubgroupSpec, canonicalize, contains,
                       dual, partition_tiles, reduce_tile)

__version__ = "0.1.0"

__all__ = [
    "ClosedSubgroup", "FiberedGenerator", "GeneratorSet", "InvarianceReport",
    "LatticeSNF", "SubgroupSpec", "canonicalize", "contains", "dual",
    "exact_invariant_generator", "find_extra_invariance", "partition_tiles",
    "project_principal", "reduce_tile", "snf", "support_report",
]
