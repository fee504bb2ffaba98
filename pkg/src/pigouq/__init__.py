"""Congestion games on the two-edge Pigou network, classical and entangled.

The library builds the network's cost matrices in exact rational
arithmetic, runs the two-qubit entangling protocol for quantum strategy
sets, finds pure and mixed equilibria, computes Price of Stability /
Price of Anarchy, and sweeps the pinned-player count or the
entanglement angle into figure-ready CSV/JSON. The ``pigouq`` CLI
exposes the same through ``matrix``, ``solve``, ``sweep`` and
``verify`` subcommands.
"""

from .errors import DomainError
from .linalg import apply, dagger, is_unitary, tensor_product
from .strategies import STRATEGY_TAGS, StrategyAngles, resolve, strategy_label, unitary_from_angles
from .ewl import GAMMA_MAX, OutcomeDistribution, entangler, ewl_outcomes
from .games import (
    CostAssignment,
    CostBimatrix,
    GameSpec,
    PigouNetwork,
    bimatrix,
    classical_bimatrix,
    cost_assignment,
    quantum_bimatrix,
    snap_probability,
)
from .equilibria import (
    EquilibriumResult,
    MixedProfile,
    PureProfile,
    dominance_select,
    mixed_nash,
    optimal_outcome,
    pure_nash,
    solve,
)
from .metrics import (
    GLOBAL_OVER_K,
    PER_GAME,
    MetricsReport,
    SocialCostModel,
    analyze,
    classical_cost_ne,
    classical_opt,
    classical_pos_poa,
    report,
    split_cost,
    total_cost,
)
from .sweeps import CSV_HEADER, SweepSeries, series_to_csv, series_to_json_obj, sweep_gamma, sweep_k

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "CostAssignment",
    "CostBimatrix",
    "DomainError",
    "EquilibriumResult",
    "GAMMA_MAX",
    "GLOBAL_OVER_K",
    "GameSpec",
    "MetricsReport",
    "MixedProfile",
    "OutcomeDistribution",
    "PER_GAME",
    "PigouNetwork",
    "PureProfile",
    "STRATEGY_TAGS",
    "SocialCostModel",
    "StrategyAngles",
    "SweepSeries",
    "analyze",
    "apply",
    "bimatrix",
    "classical_bimatrix",
    "classical_cost_ne",
    "classical_opt",
    "classical_pos_poa",
    "cost_assignment",
    "dagger",
    "dominance_select",
    "entangler",
    "ewl_outcomes",
    "is_unitary",
    "mixed_nash",
    "optimal_outcome",
    "pure_nash",
    "quantum_bimatrix",
    "report",
    "resolve",
    "series_to_csv",
    "series_to_json_obj",
    "snap_probability",
    "solve",
    "split_cost",
    "strategy_label",
    "sweep_gamma",
    "sweep_k",
    "tensor_product",
    "total_cost",
    "unitary_from_angles",
]
