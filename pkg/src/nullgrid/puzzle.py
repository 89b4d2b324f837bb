"""Extremal search for multiplication/addition table agreements.

Fix row keys a_1 < ... < a_s and column keys b_1 < ... < b_s (distinct
integers).  The multiplication table holds a_i * b_j; an addition table
holds u_i + v_j for free sequences u, v.  A cell (i, j) agrees when
a_i * b_j = u_i + v_j, i.e. exactly when the polynomial
f(x, y) = -x*y + P(x) + Q(y) vanishes at (a_i, b_j) for interpolating P
and Q.  Agreement patterns therefore avoid 2x2 all-agree rectangles
(a K_{2,2}), since (a_i - a_k)(b_j - b_l) = 0 is impossible for distinct
keys; the Zarankiewicz bound caps the count at s(1 + sqrt(4s - 3))/2.

Two searches look for large patterns: an exhaustive scan of a canonical
space (small s only) and a seeded hill climb with restarts.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb, isqrt

from .errors import SearchBudgetError


@dataclass(frozen=True)
class PuzzleInstance:
    """Row/column keys and the addition-table offsets.  Row keys and
    column keys must each be distinct; u and v are unconstrained."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        s = len(self.a)
        if not (len(self.b) == len(self.u) == len(self.v) == s) or s == 0:
            raise ValueError("a, b, u, v must be nonempty and of equal length")
        if len(set(self.a)) != s:
            raise ValueError(f"row keys must be distinct, got {self.a}")
        if len(set(self.b)) != s:
            raise ValueError(f"column keys must be distinct, got {self.b}")

    @property
    def s(self) -> int:
        return len(self.a)

    def multiplication_table(self) -> list[list[int]]:
        return [[ai * bj for bj in self.b] for ai in self.a]

    def addition_table(self) -> list[list[int]]:
        return [[ui + vj for vj in self.v] for ui in self.u]


@dataclass(frozen=True)
class AgreementPattern:
    """The agreeing cells of an instance, as 0-based (row, column) pairs."""

    cells: frozenset[tuple[int, int]]
    count: int


def agreement_count(inst: PuzzleInstance) -> AgreementPattern:
    cells = frozenset(
        (i, j)
        for i, (ai, ui) in enumerate(zip(inst.a, inst.u))
        for j, (bj, vj) in enumerate(zip(inst.b, inst.v))
        if ai * bj == ui + vj
    )
    return AgreementPattern(cells, len(cells))


def from_polynomial(a: tuple[int, ...], p_at_a: tuple[int, ...],
                    b: tuple[int, ...], q_at_b: tuple[int, ...]) -> PuzzleInstance:
    """Instance whose agreements are the zeros of -x*y + P(x) + Q(y) on
    the grid a x b, given the values of P on a and Q on b: the cell
    (i, j) agrees iff a_i b_j = P(a_i) + Q(b_j), so u = P(a), v = Q(b)."""
    return PuzzleInstance(tuple(a), tuple(b), tuple(p_at_a), tuple(q_at_b))


def k22_check(pattern: AgreementPattern) -> bool:
    """True when no two rows agree in two common columns (no K_{2,2})."""
    columns: dict[int, set[int]] = {}
    for i, j in pattern.cells:
        columns.setdefault(i, set()).add(j)
    rows = sorted(columns)
    for x, r1 in enumerate(rows):
        for r2 in rows[x + 1:]:
            if len(columns[r1] & columns[r2]) >= 2:
                return False
    return True


def zarankiewicz_k22_bound(s: int) -> int:
    """floor(s(1 + sqrt(4s - 3))/2): the largest K_{2,2}-free cell count
    in an s x s table, computed exactly with integer square roots."""
    if s < 1:
        raise ValueError("s must be positive")
    return (s + isqrt(s * s * (4 * s - 3))) // 2


@dataclass(frozen=True)
class SearchResult:
    instance: PuzzleInstance
    pattern: AgreementPattern
    examined: int


def exhaustive_search(s: int, value_range: int, budget: int = 100_000_000) -> SearchResult:
    """Best canonical instance with keys and offsets within [-R, R].

    Canonical form: a and b strictly increasing, u_1 = 0 (translation
    invariance: shifting u by c and v by -c preserves agreements).  For
    each (a, b, u) the optimal v is chosen column by column, since column
    j's agreement count depends on v_j alone; candidates outside [-R, R]
    are discarded.  Note the u_1 = 0 normalization of an instance can push
    v entries past R, so the canonical space is a mild restriction of the
    raw one at the same R.
    """
    if s < 1:
        raise ValueError("s must be positive")
    R = value_range
    m = 2 * R + 1
    if m < s:
        raise ValueError(f"range [-{R}, {R}] cannot seat {s} distinct keys")
    examined = comb(m, s) ** 2 * m ** (s - 1)
    if examined > budget:
        raise SearchBudgetError(
            f"{examined} candidate (a, b, u) tuples exceed the budget {budget}; use local_search")

    keys = range(-R, R + 1)
    offsets = range(-R, R + 1)
    best: tuple[int, PuzzleInstance] | None = None
    for a in itertools.combinations(keys, s):
        for b in itertools.combinations(keys, s):
            products = [[ai * bj for ai in a] for bj in b]  # column-major
            for u_tail in itertools.product(offsets, repeat=s - 1):
                u = (0,) + u_tail
                count = 0
                v = []
                for col in products:
                    tally: dict[int, int] = {}
                    for pi, ui in zip(col, u):
                        cand = pi - ui
                        if -R <= cand <= R:
                            tally[cand] = tally.get(cand, 0) + 1
                    if tally:
                        vj = max(tally, key=lambda c: (tally[c], -c))
                        count += tally[vj]
                        v.append(vj)
                    else:
                        v.append(0)
                if best is None or count > best[0]:
                    best = (count, PuzzleInstance(a, b, u, tuple(v)))
    inst = best[1]
    return SearchResult(inst, agreement_count(inst), examined)


@dataclass(frozen=True)
class LocalSearchResult:
    instance: PuzzleInstance
    pattern: AgreementPattern
    steps: int
    restarts: int
    history: tuple[tuple[int, int, int], ...]  # (restart, step, best count so far)


def local_search(s: int, *, budget: int = 100_000, seed: int = 0,
                 value_range: int = 8, stall_limit: int = 1_000) -> LocalSearchResult:
    """Hill climb over instances with entries in [-R, R].

    Moves: nudge one entry by +-1, resample one entry, or swap two entries
    within one sequence.  Moves that break key distinctness are rejected.
    Sideways moves (equal count) are accepted to walk plateaus; after
    ``stall_limit`` steps without strict improvement the state restarts
    from a fresh random instance.  Deterministic for a fixed seed: one
    generator drives everything, and the best instance ever seen is
    returned with its re-verified pattern.
    """
    if s < 1:
        raise ValueError("s must be positive")
    R = value_range
    if 2 * R + 1 < s:
        raise ValueError(f"range [-{R}, {R}] cannot seat {s} distinct keys")
    rng = random.Random(seed)

    def fresh() -> list[list[int]]:
        a = rng.sample(range(-R, R + 1), s)
        b = rng.sample(range(-R, R + 1), s)
        u = [rng.randint(-R, R) for _ in range(s)]
        v = [rng.randint(-R, R) for _ in range(s)]
        return [a, b, u, v]

    def count_of(state: list[list[int]]) -> int:
        a, b, u, v = state
        return sum(1 for i in range(s) for j in range(s) if a[i] * b[j] == u[i] + v[j])

    state = fresh()
    current = count_of(state)
    best_state = [list(seq) for seq in state]
    best_count = current
    history = [(0, 0, best_count)]
    restarts = 0
    stall = 0

    for step in range(1, budget + 1):
        seq = rng.randrange(4)
        arr = state[seq]
        move = rng.randrange(3)
        if move == 0:  # nudge
            i = rng.randrange(s)
            old = arr[i]
            cand = old + (1 if rng.randrange(2) else -1)
            if cand < -R or cand > R:
                continue
            arr[i] = cand
            if seq < 2 and len(set(arr)) != s:
                arr[i] = old
                continue
            undo = (seq, i, old)
        elif move == 1:  # resample
            i = rng.randrange(s)
            old = arr[i]
            cand = rng.randint(-R, R)
            arr[i] = cand
            if seq < 2 and len(set(arr)) != s:
                arr[i] = old
                continue
            undo = (seq, i, old)
        else:  # swap
            if s == 1:
                continue
            i, j = rng.sample(range(s), 2)
            arr[i], arr[j] = arr[j], arr[i]
            undo = (seq, i, j, "swap")

        cand_count = count_of(state)
        if cand_count >= current:
            improved = cand_count > current
            current = cand_count
            if cand_count > best_count:
                best_count = cand_count
                best_state = [list(x) for x in state]
                history.append((restarts, step, best_count))
            stall = 0 if improved else stall + 1
        else:
            if len(undo) == 4:
                _, i, j, _ = undo
                arr[i], arr[j] = arr[j], arr[i]
            else:
                _, i, old = undo
                arr[i] = old
            stall += 1
        if stall >= stall_limit:
            state = fresh()
            current = count_of(state)
            restarts += 1
            stall = 0

    a, b, u, v = best_state
    inst = PuzzleInstance(tuple(a), tuple(b), tuple(u), tuple(v))
    return LocalSearchResult(inst, agreement_count(inst), budget, restarts, tuple(history))
