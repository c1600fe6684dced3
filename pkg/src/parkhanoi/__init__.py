"""Parking functions, many-peg Tower of Hanoi ideal states, and the
explicit bijection between the displacement-one parking functions and
the ideal states, with exhaustive verification against the closed-form
count n!(n-1)/2 (OEIS A001286)."""

from .bijection import (
    BijectionRecord,
    BijectionReport,
    make_record,
    pf_to_th,
    th_to_pf,
    verify_bijection,
)
from .enumeration import (
    DEFAULT_SCAN_MAX_N,
    CountReport,
    brute_force_counts,
    cayley_count,
    enumerate_pf,
    enumerate_pf_displacement,
    generate_displacement_one,
    lah_count,
)
from .errors import BudgetExceededError, DomainError, IllegalMoveError, ValidationError
from .hanoi import (
    DEFAULT_STATE_BUDGET,
    HanoiMove,
    HanoiState,
    IdealLayerReport,
    IdealStateWitness,
    Strategy,
    apply_move,
    as_state,
    ending_state,
    enumerate_ideal_states,
    ideal_witness,
    is_ideal_state,
    legal_moves,
    optimal_strategies_through_ideal,
    shortest_strategy,
    shortest_win_length,
    starting_state,
)
from .parking import (
    ParkingOutcome,
    PreferenceVector,
    as_preference_vector,
    displacement,
    displacement_one_violation,
    doubled_preference,
    is_displacement_one_characterized,
    is_parking_function,
    park,
)

__version__ = "0.1.0"

__all__ = [
    "BijectionRecord",
    "BijectionReport",
    "BudgetExceededError",
    "CountReport",
    "DEFAULT_SCAN_MAX_N",
    "DEFAULT_STATE_BUDGET",
    "DomainError",
    "HanoiMove",
    "HanoiState",
    "IdealLayerReport",
    "IdealStateWitness",
    "IllegalMoveError",
    "ParkingOutcome",
    "PreferenceVector",
    "Strategy",
    "ValidationError",
    "apply_move",
    "as_preference_vector",
    "as_state",
    "brute_force_counts",
    "cayley_count",
    "displacement",
    "displacement_one_violation",
    "doubled_preference",
    "ending_state",
    "enumerate_ideal_states",
    "enumerate_pf",
    "enumerate_pf_displacement",
    "generate_displacement_one",
    "ideal_witness",
    "is_displacement_one_characterized",
    "is_ideal_state",
    "is_parking_function",
    "lah_count",
    "legal_moves",
    "make_record",
    "optimal_strategies_through_ideal",
    "park",
    "pf_to_th",
    "shortest_strategy",
    "shortest_win_length",
    "starting_state",
    "th_to_pf",
    "verify_bijection",
]
