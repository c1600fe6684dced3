"""Hand-rolled reference implementations the suite checks the library against.

Deliberately simple and slow: these re-derive answers from the rules
without touching the package internals, so agreement means something.
"""

from itertools import product


def park_naive(prefs):
    """(assignment, failed_car), scanning a list street front to back per car."""
    n = len(prefs)
    street = [None] * (n + 1)  # spots 1..n
    assignment = []
    for car, preferred in enumerate(prefs, start=1):
        for spot in range(preferred, n + 1):
            if street[spot] is None:
                street[spot] = car
                assignment.append(spot)
                break
        else:
            return None, car
    return assignment, None


def is_pf_naive(prefs):
    return park_naive(prefs)[1] is None


def displacement_naive(prefs):
    """Total bumping, or None when some car cannot park."""
    assignment, failed = park_naive(prefs)
    if failed is not None:
        return None
    return sum(s - a for s, a in zip(assignment, prefs))


def pf_with_displacement(n, d):
    """All vectors in [n]^n that park fully with total displacement d."""
    return {
        prefs
        for prefs in product(range(1, n + 1), repeat=n)
        if displacement_naive(prefs) == d
    }


def ideal_by_definition(vec):
    """Positional ideal-state test, straight from the description.

    Largest disk alone on the source peg, destination peg empty, and the
    interior pegs each covered with exactly one of them holding two disks.
    """
    n = len(vec) - 1
    if vec[n] != 0:
        return False
    if any(vec[d] == 0 for d in range(n)):
        return False
    if any(p == n for p in vec):
        return False
    sizes = [sum(1 for d in range(n + 1) if vec[d] == p) for p in range(1, n)]
    return sorted(sizes) == [1] * (n - 2) + [2]


def ideal_set_brute(n):
    """All ideal states of the n+1 peg game, by filtering the whole cube."""
    return {
        vec
        for vec in product(range(n + 1), repeat=n + 1)
        if ideal_by_definition(vec)
    }
