#!/usr/bin/env python3
"""Matching ideal tower states with displacement-one parking functions.

Both families have n!(n-1)/2 members (OEIS A001286), and the match is
structural: drop the big disk's entry, then close the gap left by the
unused peg value.  The doubled peg becomes the doubled preference.
"""

from parkhanoi import (
    brute_force_counts,
    displacement,
    enumerate_ideal_states,
    lah_count,
    pf_to_th,
    th_to_pf,
    verify_bijection,
)


def main():
    n = 3
    print(f"the {lah_count(n)} matched pairs at n={n}:\n")
    print("  ideal state   parking function   simulated d   round trip")
    for state in enumerate_ideal_states(n):
        alpha = th_to_pf(state)
        back = pf_to_th(alpha)
        print(
            f"  {state.to_text():>11}   {alpha.to_text():>16}   "
            f"{displacement(alpha):>11}   {'ok' if back == state else 'BROKEN'}"
        )

    print("\nexhaustive verification, n = 1..6:")
    for size in range(1, 7):
        report = verify_bijection(size)
        print(
            f"  n={size}: {report.ideal_count} states <-> {report.pf_count} "
            f"vectors (expected {report.expected_count}), "
            f"{'all checks pass' if report.ok else 'FAILED'}"
        )

    print("\nclosed forms against brute force, n = 1..6:")
    for size in range(1, 7):
        row = ", ".join(
            f"{r.statistic}={r.closed_form}{'' if r.match else '!?'}"
            for r in brute_force_counts(size)
        )
        print(f"  n={size}: {row}")

    print("\nthe shared count sequence n!(n-1)/2 for n = 1..10:")
    print(" ", [lah_count(size) for size in range(1, 11)])


if __name__ == "__main__":
    main()
