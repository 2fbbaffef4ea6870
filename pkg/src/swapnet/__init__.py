"""Swap-based network creation games: equilibrium checks, structural checkers and dynamics."""
from .errors import BadSpec, Disconnected, InvalidSwap, MinDegreeTooLow, MixedConfig, ParseError
from .graph import (
    INFINITE,
    UNREACHABLE,
    Graph,
    SwapMove,
    all_pairs_distances,
    apply_swap,
    diameter,
    is_connected,
    k_vicinity,
    robust_degree,
    robust_neighbors,
    sum_of_distances,
)
from .edgelist import format_edgelist, parse_edgelist, read_edgelist, write_edgelist
from .sumgame import EquilibriumReport, check_sse, enumerate_swaps, find_improving_swap, swap_cost_delta
from .structure import (
    analyze,
    check_degree2_diameter,
    check_distance_difference_bound,
    check_first_edge_redundancy,
    check_mean_distance_difference,
    density_diameter_bound,
    difference_histogram,
    vicinity_diameter_bound,
)
from .localgame import (
    check_local_equilibrium,
    find_profitable_swap,
    has_spanning_star,
    potential,
    profit,
    profit_delta,
)
from .dynamics import (
    DynamicsConfig,
    DynamicsTrace,
    absorption_statistics,
    run_better_response,
    run_limited_query,
    silence_stopping_rule,
)
from .generators import GeneratorSpec, generate
from .experiments import run_experiment

__version__ = "0.1.0"
