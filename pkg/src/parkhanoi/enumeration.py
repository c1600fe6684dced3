"""Exhaustive enumerators and closed-form counters.

The closed forms and the brute-force scans stay deliberately
independent so each can certify the other: (n+1)^(n-1) preference
vectors park successfully, n!(n-1)/2 of them with total displacement
one, and the same count of ideal tower states (OEIS A001286).

Enumerators are streamed iterators with deterministic lexicographic
order; budgets are checked eagerly, before any scanning starts.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Any

from .errors import BudgetExceededError, ValidationError
from .hanoi import enumerate_ideal_states, is_ideal_state
from .parking import PreferenceVector, displacement, is_parking_function

#: Default cap on brute-force scans of [n]^n: n <= 7 (7^7 vectors).
DEFAULT_SCAN_MAX_N = 7


def cayley_count(n: int) -> int:
    """(n+1)^(n-1), the number of parking functions of length n.  Exact."""
    _check_positive(n)
    return (n + 1) ** (n - 1)


def lah_count(n: int) -> int:
    """n!(n-1)/2, the shared count of displacement-one parking functions
    of length n and of ideal states of the game on n+1 pegs.  Exact."""
    _check_positive(n)
    return math.factorial(n) * (n - 1) // 2


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")


def _check_scan_budget(n: int, budget_n: int) -> None:
    _check_positive(n)
    if n > budget_n:
        raise BudgetExceededError(
            f"scanning all {n}^{n} preference vectors for n={n} exceeds the "
            f"budget n <= {budget_n}; raise the budget to scan anyway"
        )


def enumerate_pf(n: int, *, budget_n: int = DEFAULT_SCAN_MAX_N) -> Iterator[PreferenceVector]:
    """All parking functions of length n, lexicographically, by scanning [n]^n."""
    _check_scan_budget(n, budget_n)
    return _scan_pf(n)


def _scan_pf(n: int) -> Iterator[PreferenceVector]:
    for prefs in product(range(1, n + 1), repeat=n):
        pv = PreferenceVector(prefs)
        if is_parking_function(pv):
            yield pv


def enumerate_pf_displacement(
    n: int, d: int, *, budget_n: int = DEFAULT_SCAN_MAX_N
) -> Iterator[PreferenceVector]:
    """Parking functions of length n with total displacement exactly d,
    lexicographically (a filtered scan).

    Any d >= 0 is accepted; beyond the maximum n(n-1)/2 the stream is
    simply empty.
    """
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ValidationError(f"displacement must be a non-negative integer, got {d!r}")
    _check_scan_budget(n, budget_n)
    return (pv for pv in _scan_pf(n) if displacement(pv) == d)


def generate_displacement_one(n: int) -> Iterator[PreferenceVector]:
    """Displacement-one parking functions built constructively, not by filtering.

    Choose the doubled value j, the two cars sharing it, and an
    arrangement of the remaining spots over the remaining cars; yields
    n!(n-1)/2 vectors in lexicographic order.
    """
    _check_positive(n)
    vectors: list[tuple[int, ...]] = []
    for j in range(1, n):
        rest_values = [v for v in range(1, n + 1) if v != j and v != j + 1]
        for k, kp in combinations(range(n), 2):
            rest_positions = [i for i in range(n) if i != k and i != kp]
            for arrangement in permutations(rest_values):
                vec = [0] * n
                vec[k] = vec[kp] = j
                for i, v in zip(rest_positions, arrangement):
                    vec[i] = v
                vectors.append(tuple(vec))
    vectors.sort()
    return (PreferenceVector(v) for v in vectors)


@dataclass(frozen=True)
class CountReport:
    """A closed-form count next to the matching exhaustive count.

    ``brute_force`` is None when the scan was skipped for budget, in
    which case ``match`` is indeterminate (None) rather than False.
    """

    n: int
    statistic: str
    closed_form: int
    brute_force: int | None

    @property
    def match(self) -> bool | None:
        if self.brute_force is None:
            return None
        return self.closed_form == self.brute_force

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "statistic": self.statistic,
            "closed_form": self.closed_form,
            "brute_force": self.brute_force,
            "match": self.match,
        }


#: Largest n whose ideal states get counted by filtering the whole cube.
IDEAL_FILTER_MAX_N = 4


def brute_force_counts(n: int, *, budget_n: int = DEFAULT_SCAN_MAX_N) -> list[CountReport]:
    """Count reports for all_pf, pf_by_displacement(1) and ideal_states.

    Scans are skipped (brute_force None) when n is over budget, leaving a
    partial report.  The ideal-state count filters the full (n+1)^(n+1)
    cube up to n = 4 and uses the constructive enumerator beyond; for
    n = 1 the game does not exist and the ideal set is empty by
    convention.
    """
    _check_positive(n)
    within = n <= budget_n
    pf_count = sum(1 for _ in enumerate_pf(n)) if within else None
    pf1_count = sum(1 for _ in enumerate_pf_displacement(n, 1)) if within else None
    if n == 1:
        ideal_count: int | None = 0
    elif n <= IDEAL_FILTER_MAX_N:
        ideal_count = sum(
            1 for vec in product(range(n + 1), repeat=n + 1) if is_ideal_state(vec)
        )
    elif within:
        ideal_count = sum(1 for _ in enumerate_ideal_states(n))
    else:
        ideal_count = None
    return [
        CountReport(n, "all_pf", cayley_count(n), pf_count),
        CountReport(n, "pf_by_displacement(1)", lah_count(n), pf1_count),
        CountReport(n, "ideal_states", lah_count(n), ideal_count),
    ]
