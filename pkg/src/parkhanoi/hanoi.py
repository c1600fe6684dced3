"""Tower of Hanoi on n+1 pegs with n+1 disks.

Disks are labeled 0..n by increasing size and pegs 0..n left to right;
peg 0 is the source, peg n the destination, pegs 1..n-1 the interior.
A state records the peg of every disk.  Stacking order on a peg is
implicit: smaller disks always sit above larger ones, so the vector
alone identifies the position.  The game starts with every disk on
peg 0 and is won when every disk reaches peg n.

A state is *ideal* when disk n is alone on the source peg, the
destination peg is the only empty peg, and the remaining n disks cover
the interior pegs with exactly one interior peg holding two disks.  Any
two distinct disks among 0..n-1 may form that doubled pair, disk 0
included.  Ideal states are the doorway of every minimum-length win:
the search helpers below verify exhaustively, within a state budget,
that the minimum win takes 2n+3 moves and that every minimum win sits
in an ideal state right after move n+1.

States, moves and strategies are immutable values; all functions are
pure, and the searches are deterministic.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Any

from .errors import BudgetExceededError, DomainError, IllegalMoveError, ValidationError

#: Default cap on exhaustive state-graph searches: the whole space for n = 6.
DEFAULT_STATE_BUDGET = 7**7


@dataclass(frozen=True)
class HanoiState:
    """Peg of each disk: ``pegs[i]`` holds disk i.  n+1 disks on n+1 pegs, n >= 2."""

    pegs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pegs", tuple(self.pegs))
        if len(self.pegs) < 3:
            raise ValidationError(
                f"a state needs at least 3 disks (n >= 2), got {len(self.pegs)}"
            )
        n = len(self.pegs) - 1
        for disk, peg in enumerate(self.pegs):
            if not isinstance(peg, int) or isinstance(peg, bool):
                raise ValidationError(f"peg of disk {disk} is not an integer: {peg!r}")
            if not 0 <= peg <= n:
                raise ValidationError(f"disk {disk} sits on peg {peg}, outside 0..{n}")

    @property
    def n(self) -> int:
        """Largest disk label; there are n+1 disks and n+1 pegs."""
        return len(self.pegs) - 1

    def top_disks(self) -> dict[int, int]:
        """Topmost (smallest) disk on each occupied peg."""
        tops: dict[int, int] = {}
        for disk, peg in enumerate(self.pegs):
            if peg not in tops:
                tops[peg] = disk
        return tops

    @classmethod
    def from_text(cls, text: str) -> "HanoiState":
        """Parse a comma-separated state such as ``"2,2,1,0"``."""
        try:
            entries = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValidationError(f"cannot parse state from {text!r}") from exc
        return cls(entries)

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.pegs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.pegs)

    def __len__(self) -> int:
        return len(self.pegs)


def as_state(value: HanoiState | Sequence[int]) -> HanoiState:
    """Coerce a raw peg vector, validating it."""
    if isinstance(value, HanoiState):
        return value
    return HanoiState(tuple(value))


@dataclass(frozen=True, order=True)
class HanoiMove:
    """Move one disk from one peg to another.

    Moves order lexicographically by (disk, from_peg, to_peg), which the
    deterministic solver relies on.
    """

    disk: int
    from_peg: int
    to_peg: int

    def __post_init__(self) -> None:
        for name in ("disk", "from_peg", "to_peg"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValidationError(f"{name} must be a non-negative integer, got {v!r}")
        if self.from_peg == self.to_peg:
            raise ValidationError("a move must change pegs")

    def reversed(self) -> "HanoiMove":
        return HanoiMove(self.disk, self.to_peg, self.from_peg)

    def to_json_obj(self) -> dict[str, int]:
        return {"disk": self.disk, "from": self.from_peg, "to": self.to_peg}


def starting_state(n: int) -> HanoiState:
    """All n+1 disks stacked on the source peg."""
    _check_n(n)
    return HanoiState((0,) * (n + 1))


def ending_state(n: int) -> HanoiState:
    """All n+1 disks stacked on the destination peg; reaching it wins."""
    _check_n(n)
    return HanoiState((n,) * (n + 1))


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValidationError(f"n must be an integer >= 2, got {n!r}")


def legal_moves(state: HanoiState | Sequence[int]) -> set[HanoiMove]:
    """All single-disk moves allowed from the state.

    Only a peg's top disk may move, and only onto an empty peg or a peg
    whose top disk is larger.
    """
    state = as_state(state)
    tops = state.top_disks()
    moves: set[HanoiMove] = set()
    for from_peg, disk in tops.items():
        for to_peg in range(state.n + 1):
            if to_peg == from_peg:
                continue
            target = tops.get(to_peg)
            if target is None or target > disk:
                moves.add(HanoiMove(disk, from_peg, to_peg))
    return moves


def apply_move(state: HanoiState | Sequence[int], move: HanoiMove) -> HanoiState:
    """The state after one move; raises IllegalMoveError if it breaks the rules."""
    state = as_state(state)
    n = state.n
    if move.disk > n or move.from_peg > n or move.to_peg > n:
        raise ValidationError(f"move {move} does not fit a game with disks/pegs 0..{n}")
    tops = state.top_disks()
    if tops.get(move.from_peg) != move.disk:
        raise IllegalMoveError(f"disk {move.disk} is not the top of peg {move.from_peg}")
    target = tops.get(move.to_peg)
    if target is not None and target < move.disk:
        raise IllegalMoveError(
            f"peg {move.to_peg} is topped by disk {target}, smaller than disk {move.disk}"
        )
    pegs = list(state.pegs)
    pegs[move.disk] = move.to_peg
    return HanoiState(tuple(pegs))


@dataclass(frozen=True)
class Strategy:
    """A playthrough: the move list plus every state it visits.

    ``states[0]`` is the all-on-source starting position and each later
    state results from applying the corresponding move; the constructor
    replays the moves to enforce this.
    """

    moves: tuple[HanoiMove, ...]
    states: tuple[HanoiState, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))
        object.__setattr__(self, "states", tuple(self.states))
        if len(self.states) != len(self.moves) + 1:
            raise ValidationError("a strategy needs exactly one more state than moves")
        if self.states[0] != starting_state(self.states[0].n):
            raise ValidationError("a strategy must start with every disk on the source peg")
        for i, move in enumerate(self.moves):
            if apply_move(self.states[i], move) != self.states[i + 1]:
                raise ValidationError(f"state after move {i + 1} does not match the move")

    @property
    def n(self) -> int:
        return self.states[0].n

    def to_json_obj(self) -> list[dict[str, int]]:
        return [m.to_json_obj() for m in self.moves]


# --- ideal states -----------------------------------------------------------


def _ideal_violation(state: HanoiState) -> str | None:
    """First broken ideal-state condition, or None when the state is ideal."""
    x = state.pegs
    n = state.n
    if x[n] != 0:
        return f"the largest disk sits on peg {x[n]}, not alone on the source peg 0"
    counts = Counter(x[:n])
    repeated = sorted(p for p, c in counts.items() if c >= 2)
    if len(repeated) != 1 or counts[repeated[0]] != 2:
        return "exactly one peg must hold exactly two of the disks 0..n-1"
    j = repeated[0]
    if not 1 <= j <= n - 1:
        return f"the doubled peg is {j}; it must be an interior peg (1..{n - 1})"
    rest = set(counts) - {j}
    expected = set(range(1, n)) - {j}
    if rest != expected:
        return (
            f"the singly covered pegs are {sorted(rest)}; they must be exactly the "
            f"other interior pegs {sorted(expected)}"
        )
    return None


def is_ideal_state(state: HanoiState | Sequence[int]) -> bool:
    """Vector test for ideal states.

    Equivalent to the positional description: disk n alone on the source
    peg, destination peg empty, every interior peg covered and exactly
    one interior peg holding two disks.
    """
    return _ideal_violation(as_state(state)) is None


@dataclass(frozen=True)
class IdealStateWitness:
    """Canonical decomposition of an ideal state.

    ``doubled_peg`` is the interior peg holding two disks,
    ``doubled_disks`` the pair stacked there (any two distinct disks
    among 0..n-1, disk 0 included), and ``singleton_assignment`` places
    the remaining n-2 disks one-to-one onto the other interior pegs.
    """

    doubled_peg: int
    doubled_disks: tuple[int, int]
    singleton_assignment: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "doubled_disks", tuple(sorted(self.doubled_disks)))
        object.__setattr__(
            self, "singleton_assignment", tuple(sorted(self.singleton_assignment))
        )
        n = len(self.singleton_assignment) + 2
        if n < 2:
            raise ValidationError("a witness needs at least the doubled pair")
        k, kp = self.doubled_disks
        if k == kp:
            raise ValidationError("the doubled disks must be distinct")
        if not 1 <= self.doubled_peg <= n - 1:
            raise ValidationError(f"doubled peg {self.doubled_peg} is not interior (1..{n - 1})")
        disks = {k, kp} | {d for d, _ in self.singleton_assignment}
        if disks != set(range(n)):
            raise ValidationError("witness disks must be exactly 0..n-1, each once")
        pegs = [p for _, p in self.singleton_assignment]
        if sorted(pegs) != sorted(set(range(1, n)) - {self.doubled_peg}):
            raise ValidationError(
                "singleton pegs must cover the other interior pegs exactly once"
            )

    @property
    def n(self) -> int:
        return len(self.singleton_assignment) + 2

    def to_state(self) -> HanoiState:
        pegs = [0] * (self.n + 1)
        for d in self.doubled_disks:
            pegs[d] = self.doubled_peg
        for d, p in self.singleton_assignment:
            pegs[d] = p
        return HanoiState(tuple(pegs))


def ideal_witness(state: HanoiState | Sequence[int]) -> IdealStateWitness:
    """Decompose an ideal state; raises DomainError naming the first broken condition."""
    state = as_state(state)
    violation = _ideal_violation(state)
    if violation is not None:
        raise DomainError(f"not an ideal state: {violation}")
    counts = Counter(state.pegs[:-1])
    j = next(p for p, c in counts.items() if c == 2)
    k, kp = (d for d, p in enumerate(state.pegs[:-1]) if p == j)
    singles = tuple((d, p) for d, p in enumerate(state.pegs[:-1]) if p != j)
    return IdealStateWitness(j, (k, kp), singles)


def enumerate_ideal_states(n: int) -> Iterator[HanoiState]:
    """Every ideal state exactly once, in lexicographic order of the vector.

    Built directly from the witness decomposition (doubled peg, doubled
    pair, placement of the rest) rather than by filtering all
    (n+1)^(n+1) vectors; yields n!(n-1)/2 states.
    """
    _check_n(n)
    return iter(_ideal_states_sorted(n))


def _ideal_states_sorted(n: int) -> list[HanoiState]:
    vectors: list[tuple[int, ...]] = []
    interior = range(1, n)
    for j in interior:
        other_pegs = [p for p in interior if p != j]
        for k, kp in combinations(range(n), 2):
            rest_disks = [d for d in range(n) if d != k and d != kp]
            for placement in permutations(other_pegs):
                vec = [0] * (n + 1)
                vec[k] = vec[kp] = j
                for d, p in zip(rest_disks, placement):
                    vec[d] = p
                vectors.append(tuple(vec))
    vectors.sort()
    return [HanoiState(v) for v in vectors]


# --- state-graph search ------------------------------------------------------
#
# The whole cube {0..n}^(n+1) is the state space: every vector is a valid
# position because stacking order is implicit.  States pack into integers
# (base n+1, disk 0 least significant) so breadth-first search can use
# flat arrays instead of hashing tuples.


def _pack(vec: Sequence[int], base: int) -> int:
    idx = 0
    for p in reversed(vec):
        idx = idx * base + p
    return idx


def _unpack(idx: int, base: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        idx, p = divmod(idx, base)
        out.append(p)
    return tuple(out)


def _neighbor_vectors(vec: tuple[int, ...], base: int) -> list[tuple[int, ...]]:
    tops: dict[int, int] = {}
    for disk, peg in enumerate(vec):
        if peg not in tops:
            tops[peg] = disk
    out = []
    for peg, disk in tops.items():
        for to_peg in range(base):
            if to_peg != peg:
                target = tops.get(to_peg)
                if target is None or target > disk:
                    w = list(vec)
                    w[disk] = to_peg
                    out.append(tuple(w))
    return out


def _space_size(n: int, budget_states: int) -> int:
    size = (n + 1) ** (n + 1)
    if size > budget_states:
        raise BudgetExceededError(
            f"the state space for n={n} has {size} states, over the budget of "
            f"{budget_states}; raise the budget to search it"
        )
    return size


def _bfs(
    n: int, source: tuple[int, ...], budget_states: int, with_counts: bool = False
) -> tuple[list[int], list[int] | None]:
    """Distances (and optionally shortest-path counts) from the source.

    Layered search: counts[v] accumulates over all predecessors of v in
    the previous layer, so each layer's counts are final before the next
    one reads them.
    """
    size = _space_size(n, budget_states)
    base = n + 1
    dist = [-1] * size
    counts: list[int] | None = [0] * size if with_counts else None
    src = _pack(source, base)
    dist[src] = 0
    if counts is not None:
        counts[src] = 1
    frontier: list[tuple[tuple[int, ...], int]] = [(source, src)]
    level = 0
    while frontier:
        level += 1
        nxt: list[tuple[tuple[int, ...], int]] = []
        for vec, u in frontier:
            for w in _neighbor_vectors(vec, base):
                v = _pack(w, base)
                if dist[v] < 0:
                    dist[v] = level
                    nxt.append((w, v))
                if counts is not None and dist[v] == level:
                    counts[v] += counts[u]
        frontier = nxt
    return dist, counts


def shortest_win_length(n: int, *, budget_states: int = DEFAULT_STATE_BUDGET) -> int:
    """Minimum number of moves to win, by breadth-first search."""
    _check_n(n)
    base = n + 1
    dist, _ = _bfs(n, (0,) * base, budget_states)
    length = dist[_pack((n,) * base, base)]
    assert length >= 0, "the state graph is connected; the ending state is reachable"
    return length


def shortest_strategy(n: int, *, budget_states: int = DEFAULT_STATE_BUDGET) -> Strategy:
    """One minimum-length winning strategy.

    Deterministic: walks from the start always taking the lexicographically
    smallest (disk, from, to) move that stays on a shortest path to the end.
    """
    _check_n(n)
    base = n + 1
    dist_to_end, _ = _bfs(n, (n,) * base, budget_states)
    state = starting_state(n)
    states = [state]
    moves: list[HanoiMove] = []
    remaining = dist_to_end[_pack(state.pegs, base)]
    while remaining > 0:
        step = min(
            m
            for m in legal_moves(state)
            if dist_to_end[_pack(_moved(state.pegs, m), base)] == remaining - 1
        )
        state = apply_move(state, step)
        moves.append(step)
        states.append(state)
        remaining -= 1
    return Strategy(tuple(moves), tuple(states))


def _moved(vec: tuple[int, ...], move: HanoiMove) -> tuple[int, ...]:
    w = list(vec)
    w[move.disk] = move.to_peg
    return tuple(w)


@dataclass(frozen=True)
class IdealLayerReport:
    """Exhaustive shortest-path analysis of the ideal layer.

    Flags: (a) every ideal state is exactly n+1 moves from the start,
    (b) exactly n+2 moves from the end, and (c) every minimum-length win
    passes through exactly one ideal state, right after move n+1.
    """

    n: int
    ideal_count: int
    min_win_moves: int
    ideal_at_level: int
    shortest_path_count: int
    flag_a: bool
    flag_b: bool
    flag_c: bool

    @property
    def ok(self) -> bool:
        return (
            self.flag_a
            and self.flag_b
            and self.flag_c
            and self.min_win_moves == 2 * self.n + 3
        )

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "ideal_count": self.ideal_count,
            "min_win_moves": self.min_win_moves,
            "ideal_at_level": self.ideal_at_level,
            "shortest_paths": self.shortest_path_count,
            "flags": {"a": self.flag_a, "b": self.flag_b, "c": self.flag_c},
        }


def optimal_strategies_through_ideal(
    n: int, *, budget_states: int = DEFAULT_STATE_BUDGET
) -> IdealLayerReport:
    """Verify, not assume, how minimum-length wins relate to ideal states.

    Runs breadth-first search with shortest-path counting from both the
    start and the end.  On a shortest win the state after k moves has
    distance k from the start and L-k from the end, so flag (c) reduces
    to: given (a), (b) and L = 2n+3, the on-path layer at k = n+1 equals
    the ideal set exactly.
    """
    _check_n(n)
    base = n + 1
    dist_s, cnt_s = _bfs(n, (0,) * base, budget_states, with_counts=True)
    dist_e, cnt_e = _bfs(n, (n,) * base, budget_states, with_counts=True)
    assert cnt_s is not None and cnt_e is not None
    min_win = dist_s[_pack((n,) * base, base)]
    ideal_idx = {_pack(s.pegs, base) for s in enumerate_ideal_states(n)}
    flag_a = all(dist_s[v] == n + 1 for v in ideal_idx)
    flag_b = all(dist_e[v] == n + 2 for v in ideal_idx)
    mid_layer = {
        v
        for v in range(len(dist_s))
        if dist_s[v] == n + 1 and dist_e[v] == min_win - (n + 1)
    }
    path_count = sum(cnt_s[v] * cnt_e[v] for v in mid_layer)
    flag_c = flag_a and flag_b and min_win == 2 * n + 3 and mid_layer == ideal_idx
    return IdealLayerReport(
        n=n,
        ideal_count=len(ideal_idx),
        min_win_moves=min_win,
        ideal_at_level=n + 1,
        shortest_path_count=path_count,
        flag_a=flag_a,
        flag_b=flag_b,
        flag_c=flag_c,
    )
