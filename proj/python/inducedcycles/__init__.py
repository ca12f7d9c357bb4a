"""Induced cycle and path counting, braid recognition and the typical game."""

from ._core import (
    Graph,
    InputError,
    UnsupportedError,
    atypical_set,
    build_braid,
    construct,
    count_cycles_through,
    count_induced_cycles,
    count_induced_paths,
    discover_cyclic_braid,
    exhaustive_max,
    f2,
    f2_even,
    f2_odd,
    local_structure,
    m_lower,
    matching_families,
    maximal_3braids,
    p2_max,
    path_tree_stats,
    short_cycle_mass,
    slow_census,
    solve_typical_game,
    verify_braid,
    vertex_cycle_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
