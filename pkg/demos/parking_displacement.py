#!/usr/bin/env python3
"""A tour of the parking process and the displacement statistic.

Five cars, five spots, one-way traffic: every car first drives to the
spot it wants, then rolls forward to the next free one.  Displacement
totals how far everyone got pushed.
"""

from parkhanoi import (
    displacement,
    displacement_one_violation,
    is_displacement_one_characterized,
    is_parking_function,
    park,
)


def walk_through(prefs):
    print(f"preferences {prefs}")
    outcome = park(prefs)
    if not outcome.succeeded:
        print(f"  car {outcome.failed_car} runs off the end -> not a parking function\n")
        return
    for i, (a, s, k) in enumerate(
        zip(prefs, outcome.assignment, outcome.displacements), start=1
    ):
        note = "lucky" if k == 0 else f"bumped {k}"
        print(f"  car {i}: wants {a}, parks {s}  ({note})")
    print(
        f"  total displacement {outcome.total_displacement}, "
        f"{outcome.lucky_count} lucky cars\n"
    )


def main():
    print("= the classic walkthrough =\n")
    walk_through((3, 1, 1, 3, 2))
    walk_through((3, 4, 2, 3))  # nobody wants spot 1

    print("= extremes =\n")
    print(f"a permutation parks everyone happily: d{(1, 4, 2, 3)} =",
          displacement((1, 4, 2, 3)))
    n = 6
    ones = (1,) * n
    print(f"all ones is maximal chaos: d{ones} = {displacement(ones)} "
          f"(that is n(n-1)/2 = {n * (n - 1) // 2})\n")

    print("= displacement one, without simulating =\n")
    print("a displacement-one vector has a telltale shape: one value doubled,")
    print("the rest covering every other spot except the one after the double.\n")
    for prefs in ((2, 2, 1), (1, 3, 1), (1, 2, 1), (1, 2, 3)):
        structural = is_displacement_one_characterized(prefs)
        if is_parking_function(prefs):
            simulated = displacement(prefs)
            print(f"  {prefs}: shape test {structural}, simulated d = {simulated}")
        else:
            print(f"  {prefs}: shape test {structural}, not a parking function")
        if not structural:
            print(f"      why not: {displacement_one_violation(prefs)}")


if __name__ == "__main__":
    main()
