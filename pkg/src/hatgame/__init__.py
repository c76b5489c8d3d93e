"""Exact solver and analysis toolkit for the N-player two-color hat
guessing game.

Players see everyone's hat but their own and simultaneously guess their
own color or pass; the team wins when at least one guess is right and none
is wrong.  The deterministic optimal strategies are characterized by their
loss sets, which are exactly the radius-1 covering codes of the hat cube;
this package enumerates them, optimizes them exactly for biased coins,
synthesizes the corresponding decision matrices, and verifies everything
against independent brute-force oracles.
"""

from .core import (
    FREE,
    GUESS_BLACK,
    GUESS_WHITE,
    MAX_PLAYERS,
    PASS,
    DecisionMatrix,
    GameParams,
    HatGameError,
    ResourceLimitError,
    bits,
    config_probability,
    evaluate_matrix,
    flip,
    losing_configs,
    score,
    score_vector,
    wins,
)
from .adequate import (
    AdequateSet,
    NoAdequateSetError,
    Signature,
    ball_mask,
    enumerate_adequate,
    is_adequate,
    is_adequate_hamming,
    min_cover_optimize,
    min_cover_size,
    optimal_sets,
    set_probability,
    signature,
    size_sweep,
)
from .strategy import (
    all_matrices_for_set,
    brute_force_optimal,
    dedupe_player_permutation,
    free_invariance_check,
    matrix_from_set,
)
from .analysis import (
    COVERING_CODE_SIZE,
    complexity_table,
    count_optimal_sets,
    covering_check,
    dominance,
    dominance_graph,
    psi_closed_form,
    psi_curve,
    psi_solver,
    signature_poly,
)
from .polys import Poly, SQRT2_MINUS_1, Sqrt2Num, TWO_MINUS_SQRT2

__version__ = "0.1.0"

__all__ = [
    "AdequateSet",
    "COVERING_CODE_SIZE",
    "DecisionMatrix",
    "FREE",
    "GUESS_BLACK",
    "GUESS_WHITE",
    "GameParams",
    "HatGameError",
    "MAX_PLAYERS",
    "NoAdequateSetError",
    "PASS",
    "Poly",
    "ResourceLimitError",
    "SQRT2_MINUS_1",
    "Signature",
    "Sqrt2Num",
    "TWO_MINUS_SQRT2",
    "all_matrices_for_set",
    "ball_mask",
    "bits",
    "brute_force_optimal",
    "complexity_table",
    "config_probability",
    "count_optimal_sets",
    "covering_check",
    "dedupe_player_permutation",
    "dominance",
    "dominance_graph",
    "enumerate_adequate",
    "evaluate_matrix",
    "flip",
    "free_invariance_check",
    "is_adequate",
    "is_adequate_hamming",
    "losing_configs",
    "matrix_from_set",
    "min_cover_optimize",
    "min_cover_size",
    "optimal_sets",
    "psi_closed_form",
    "psi_curve",
    "psi_solver",
    "score",
    "score_vector",
    "set_probability",
    "signature",
    "signature_poly",
    "size_sweep",
    "wins",
]
