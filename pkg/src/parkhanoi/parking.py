"""One-way-street parking and the displacement statistic.

Cars 1..n enter a street of spots 1..n one at a time.  Car i drives to
its preferred spot and parks there if it is free; otherwise it rolls
forward and takes the first free spot, failing if it runs off the end.
A preference vector under which every car parks is a parking function.

Displacement measures how far the cars get pushed: car i is bumped
``assigned - preferred`` spots, and the displacement of the whole vector
is the sum over all cars.  A car bumped zero spots is lucky.

Everything here is an immutable value, and every function is pure.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any

from .errors import DomainError, ValidationError


@dataclass(frozen=True)
class PreferenceVector:
    """1-indexed spot preferences for cars 1..n on a street of n spots."""

    prefs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefs", tuple(self.prefs))
        n = len(self.prefs)
        if n == 0:
            raise ValidationError("a preference vector needs at least one car")
        for i, a in enumerate(self.prefs, start=1):
            if not isinstance(a, int) or isinstance(a, bool):
                raise ValidationError(f"preference of car {i} is not an integer: {a!r}")
            if not 1 <= a <= n:
                raise ValidationError(f"preference of car {i} is {a}, outside spots 1..{n}")

    @property
    def n(self) -> int:
        """Number of cars (equal to the number of spots)."""
        return len(self.prefs)

    def __len__(self) -> int:
        return len(self.prefs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.prefs)

    @classmethod
    def from_text(cls, text: str) -> "PreferenceVector":
        """Parse a comma-separated vector such as ``"3,1,1,3,2"``."""
        try:
            entries = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValidationError(f"cannot parse preference vector from {text!r}") from exc
        return cls(entries)

    def to_text(self) -> str:
        return ",".join(str(a) for a in self.prefs)


def as_preference_vector(value: PreferenceVector | Sequence[int]) -> PreferenceVector:
    """Coerce a raw sequence of spot preferences, validating it."""
    if isinstance(value, PreferenceVector):
        return value
    return PreferenceVector(tuple(value))


@dataclass(frozen=True)
class ParkingOutcome:
    """Where each car parked, or the first car that could not.

    On success ``assignment`` is a permutation of 1..n and ``failed_car``
    is None.  On failure only ``failed_car`` is set; the statistics are
    undefined and stay None.
    """

    assignment: tuple[int, ...] | None
    displacements: tuple[int, ...] | None
    total_displacement: int | None
    lucky_count: int | None
    failed_car: int | None

    @property
    def succeeded(self) -> bool:
        return self.failed_car is None

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "assignment": list(self.assignment) if self.assignment is not None else None,
            "displacements": list(self.displacements) if self.displacements is not None else None,
            "total_displacement": self.total_displacement,
            "lucky_count": self.lucky_count,
            "failed_car": self.failed_car,
        }


def park(alpha: PreferenceVector | Sequence[int]) -> ParkingOutcome:
    """Run the parking process, car by car in order of entry."""
    alpha = as_preference_vector(alpha)
    n = alpha.n
    occupied = bytearray(n + 1)  # spots 1..n
    assignment: list[int] = []
    for car, preferred in enumerate(alpha.prefs, start=1):
        spot = preferred
        while spot <= n and occupied[spot]:
            spot += 1
        if spot > n:
            return ParkingOutcome(None, None, None, None, car)
        occupied[spot] = 1
        assignment.append(spot)
    displacements = tuple(s - a for s, a in zip(assignment, alpha.prefs))
    return ParkingOutcome(
        assignment=tuple(assignment),
        displacements=displacements,
        total_displacement=sum(displacements),
        lucky_count=displacements.count(0),
        failed_car=None,
    )


def _sorted_criterion(prefs: Sequence[int]) -> bool:
    # classical test: the i-th smallest preference must not exceed i
    return all(a <= i for i, a in enumerate(sorted(prefs), start=1))


def is_parking_function(alpha: PreferenceVector | Sequence[int]) -> bool:
    """True iff every car manages to park under the given preferences."""
    alpha = as_preference_vector(alpha)
    simulated = park(alpha).failed_car is None
    assert simulated == _sorted_criterion(alpha.prefs), (
        f"simulation and sorted criterion disagree on {alpha.to_text()}"
    )
    return simulated


def displacement(alpha: PreferenceVector | Sequence[int]) -> int:
    """Total bumping under alpha.  Defined only for parking functions."""
    outcome = park(alpha)
    if outcome.failed_car is not None:
        raise DomainError(
            f"displacement is undefined: car {outcome.failed_car} cannot park"
        )
    assert outcome.total_displacement is not None
    return outcome.total_displacement


def displacement_one_violation(alpha: PreferenceVector | Sequence[int]) -> str | None:
    """Why alpha fails the displacement-one shape, or None if it has it.

    The shape: exactly one value j <= n-1 appears exactly twice, and the
    remaining n-2 entries are exactly the spots 1..n other than j and
    j+1, each once.  Vectors of this shape are precisely the parking
    functions of total displacement one; the check is purely structural
    and never simulates any parking.
    """
    alpha = as_preference_vector(alpha)
    n = alpha.n
    counts = Counter(alpha.prefs)
    repeated = sorted(v for v, c in counts.items() if c >= 2)
    if len(repeated) != 1 or counts[repeated[0]] != 2:
        return "exactly one preference value must appear exactly twice"
    j = repeated[0]
    if j > n - 1:
        return f"the doubled preference is {j}; it must be at most {n - 1}"
    rest = set(counts) - {j}
    expected = set(range(1, n + 1)) - {j, j + 1}
    if rest != expected:
        return (
            f"the single preferences are {sorted(rest)}; they must be exactly "
            f"{sorted(expected)} (every spot except {j} and {j + 1})"
        )
    return None


def is_displacement_one_characterized(alpha: PreferenceVector | Sequence[int]) -> bool:
    """Structural displacement-one test; no parking simulation involved."""
    return displacement_one_violation(alpha) is None


def doubled_preference(alpha: PreferenceVector | Sequence[int]) -> int:
    """The unique spot preferred by exactly two cars.

    Only defined for displacement-one parking functions; raises
    DomainError naming the first violated shape condition otherwise.
    """
    alpha = as_preference_vector(alpha)
    violation = displacement_one_violation(alpha)
    if violation is not None:
        raise DomainError(f"not a displacement-one parking function: {violation}")
    counts = Counter(alpha.prefs)
    return next(v for v, c in counts.items() if c == 2)
