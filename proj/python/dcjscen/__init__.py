"""DCJ sorting scenarios: distances, exact counts, uniform sampling and the
parking-function and labeled-tree encodings of single-cycle scenarios."""

from ._core import (
    DomainError,
    GuardError,
    ParseError,
    count_parking,
    count_scenarios,
    distance,
    enumerate_scenarios,
    is_valid_scenario,
    normalize_genome,
    oracle_count,
    parking_to_scenario,
    prufer_decode,
    prufer_encode,
    run_cli,
    run_scenario,
    sample_scenarios,
    scenario_to_parking,
    scenario_to_tree,
    sup,
    tree_to_scenario,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
