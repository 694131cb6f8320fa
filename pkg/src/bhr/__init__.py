"""Growable cyclic realizations of edge-length multisets.

Tools for building Hamiltonian paths in K_v whose cyclic edge-length
multiset equals a prescribed multiset, together with a growth calculus
that extends small hand-built realizations to whole parameter families.
"""

from .core import (
    Admissibility,
    Certificate,
    GrowPoint,
    HamPath,
    LengthMultiset,
    MultisetError,
    NotGrowableError,
    PathError,
    certificate,
    cyclic_lengths,
    edge_length,
    growth_points,
    is_admissible,
    is_growable_at,
    linear_diffs,
    verify_realization,
)
from .growth import (
    GrowthSchedule,
    even_grow,
    grow,
    multi_grow,
    perf_grow,
    splice_perfect,
    x2x_swap,
)
from .search import (
    SearchConfig,
    brute_force,
    enumerate_admissible,
    local_search,
    sweep,
)
from .solvers import SolveOutcome, hr_bound, solve

__all__ = [
    "Admissibility",
    "Certificate",
    "GrowPoint",
    "GrowthSchedule",
    "HamPath",
    "LengthMultiset",
    "MultisetError",
    "NotGrowableError",
    "PathError",
    "certificate",
    "cyclic_lengths",
    "edge_length",
    "even_grow",
    "grow",
    "growth_points",
    "is_admissible",
    "is_growable_at",
    "linear_diffs",
    "multi_grow",
    "perf_grow",
    "SearchConfig",
    "SolveOutcome",
    "brute_force",
    "enumerate_admissible",
    "hr_bound",
    "local_search",
    "solve",
    "splice_perfect",
    "sweep",
    "verify_realization",
    "x2x_swap",
]
