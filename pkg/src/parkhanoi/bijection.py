"""The explicit one-to-one map between ideal tower states and
displacement-one parking functions.

An ideal state (x_0, ..., x_{n-1}, 0) with doubled peg j maps to the
preference vector whose (i+1)-th entry is x_i, shifted up by one when
x_i > j.  The doubled peg becomes the doubled preference, so j is
preserved.  The inverse undoes the shift: entries above j+1 drop by one
(no entry ever equals j+1, since the single preferences skip it).

``verify_bijection`` checks injectivity, the image, both round trips
and the common count exhaustively for a given size.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from .enumeration import (
    enumerate_pf_displacement,
    generate_displacement_one,
    lah_count,
)
from .errors import BudgetExceededError, ValidationError
from .hanoi import HanoiState, as_state, enumerate_ideal_states, ideal_witness
from .parking import PreferenceVector, as_preference_vector, doubled_preference

DEFAULT_SCAN_MAX_N = 7


def th_to_pf(state: HanoiState | Sequence[int]) -> PreferenceVector:
    """Map an ideal state to its displacement-one parking function.

    Raises DomainError naming the first broken ideal-state condition
    when the input is not ideal.
    """
    state = as_state(state)
    j = ideal_witness(state).doubled_peg
    prefs = tuple(p + 1 if p > j else p for p in state.pegs[:-1])
    return PreferenceVector(prefs)


def pf_to_th(alpha: PreferenceVector | Sequence[int]) -> HanoiState:
    """Inverse map: rebuild the ideal state from a displacement-one
    parking function.

    Raises DomainError naming the first broken shape condition when the
    input does not have the displacement-one shape.
    """
    alpha = as_preference_vector(alpha)
    j = doubled_preference(alpha)
    pegs = tuple(a - 1 if a > j + 1 else a for a in alpha.prefs) + (0,)
    return HanoiState(pegs)


@dataclass(frozen=True)
class BijectionRecord:
    """One matched pair: an ideal state, its parking function, and the
    doubled value they share."""

    n: int
    ideal: HanoiState
    pf: PreferenceVector
    doubled_value: int

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "ideal": list(self.ideal.pegs),
            "pf": list(self.pf.prefs),
            "j": self.doubled_value,
        }


def make_record(state: HanoiState | Sequence[int]) -> BijectionRecord:
    """Map an ideal state and bundle both sides with the shared value."""
    state = as_state(state)
    witness = ideal_witness(state)
    return BijectionRecord(
        n=state.n,
        ideal=state,
        pf=th_to_pf(state),
        doubled_value=witness.doubled_peg,
    )


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of the exhaustive bijection check at one size.

    ``brute_image_matches`` is None when the scan-based image check was
    skipped; every other field is always computed.
    """

    n: int
    ideal_count: int
    pf_count: int
    expected_count: int
    injective: bool
    structural_image_matches: bool
    brute_image_matches: bool | None
    round_trip_states_ok: bool
    round_trip_prefs_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.injective
            and self.structural_image_matches
            and self.brute_image_matches is not False
            and self.round_trip_states_ok
            and self.round_trip_prefs_ok
            and self.ideal_count == self.expected_count
            and self.pf_count == self.expected_count
        )

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "ideal_count": self.ideal_count,
            "pf_count": self.pf_count,
            "expected_count": self.expected_count,
            "injective": self.injective,
            "structural_image_matches": self.structural_image_matches,
            "brute_image_matches": self.brute_image_matches,
            "round_trip_states_ok": self.round_trip_states_ok,
            "round_trip_prefs_ok": self.round_trip_prefs_ok,
            "ok": self.ok,
        }


def verify_bijection(
    n: int, *, budget_n: int = DEFAULT_SCAN_MAX_N, check_image: bool = True
) -> BijectionReport:
    """Exhaustively verify the bijection at size n.

    Enumerates the ideal states, maps them, and checks: the map is
    injective; its image equals the constructively generated
    displacement-one set and (when ``check_image``) the brute-force
    scan of [n]^n; both round trips are the identity; and both sides
    have n!(n-1)/2 elements.  n = 1 passes vacuously on empty sets.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    if check_image and n > budget_n:
        raise BudgetExceededError(
            f"the image check scans {n}^{n} vectors, over the budget n <= {budget_n}; "
            f"raise the budget or pass check_image=False"
        )
    ideals = [] if n == 1 else list(enumerate_ideal_states(n))
    structural_pf = list(generate_displacement_one(n))
    mapped = [th_to_pf(x) for x in ideals]
    image = set(mapped)
    injective = len(image) == len(mapped)
    structural_match = image == set(structural_pf)
    brute_match: bool | None = None
    if check_image:
        brute_match = image == set(enumerate_pf_displacement(n, 1, budget_n=budget_n))
    round_states = all(pf_to_th(th_to_pf(x)) == x for x in ideals)
    round_prefs = all(th_to_pf(pf_to_th(a)) == a for a in structural_pf)
    return BijectionReport(
        n=n,
        ideal_count=len(ideals),
        pf_count=len(structural_pf),
        expected_count=lah_count(n),
        injective=injective,
        structural_image_matches=structural_match,
        brute_image_matches=brute_match,
        round_trip_states_ok=round_states,
        round_trip_prefs_ok=round_prefs,
    )
