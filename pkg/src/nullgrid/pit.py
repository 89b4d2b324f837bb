"""Randomized polynomial identity testing over expression DAGs.

The test treats both expressions as black boxes: it never expands them,
only evaluates the hash-consed DAG of their difference at random points.
A structural degree bound (variables count 1, products add, powers
multiply) controls the per-trial failure probability d/s, so t independent
trials that all return zero leave a failure probability of at most
(d/s)^t, reported exactly as a fraction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientSampleSpaceError, UnsupportedRingError
from .parser import ADD, CONST, MUL, NEG, POW, SUB, VAR, DagBuilder, ExprDag
from .ring import RingElem


def eval_dag(dag: ExprDag, point) -> RingElem:
    """Evaluate a DAG at a point, visiting each node exactly once."""
    if len(point) != dag.arity:
        raise ValueError(f"point of length {len(point)} for arity {dag.arity}")
    ring = dag.ring
    values = [int(v) if isinstance(v, RingElem) else ring.canon(int(v)) for v in point]
    memo: list[int] = []
    for node in dag.nodes:
        tag = node[0]
        if tag == VAR:
            v = values[node[1]]
        elif tag == CONST:
            v = node[1]
        elif tag == ADD:
            v = ring.add(memo[node[1]], memo[node[2]])
        elif tag == SUB:
            v = ring.sub(memo[node[1]], memo[node[2]])
        elif tag == MUL:
            v = ring.mul(memo[node[1]], memo[node[2]])
        elif tag == NEG:
            v = ring.neg(memo[node[1]])
        else:  # POW
            v = ring.pow(memo[node[1]], node[2])
        memo.append(v)
    return RingElem(ring, memo[dag.root])


def degree_upper_bound(dag: ExprDag) -> int:
    """Structural total-degree bound: exact for expanded forms, an upper
    bound in general (cancellation can only lower the true degree)."""
    memo: list[int] = []
    for node in dag.nodes:
        tag = node[0]
        if tag == VAR:
            d = 1
        elif tag == CONST:
            d = 0
        elif tag in (ADD, SUB):
            d = max(memo[node[1]], memo[node[2]])
        elif tag == MUL:
            d = memo[node[1]] + memo[node[2]]
        elif tag == NEG:
            d = memo[node[1]]
        else:  # POW
            d = memo[node[1]] * node[2]
        memo.append(d)
    return memo[dag.root]


def dag_difference(g1: ExprDag, g2: ExprDag) -> ExprDag:
    """The DAG computing g1 - g2, with shared subtrees interned once."""
    builder = DagBuilder(g1.arity, g1.ring)
    r1 = builder.graft(g1)
    r2 = builder.graft(g2)
    return builder.build(builder.sub(r1, r2))


@dataclass(frozen=True)
class PitVerdict:
    """Outcome of a randomized identity test.

    status is "nonzero-witnessed" (with the witnessing point, its value,
    and the 0-based trial index) or "all-zero" (with the exact failure
    bound (d/s)^t).  Identical verdicts for identical seeds: the t sample
    points are drawn up front from the seeded generator.
    """

    status: str
    trials: int
    degree_bound: int
    samples_per_var: int
    seed: int
    point: tuple[int, ...] | None = None
    value: int | None = None
    trial_index: int | None = None
    failure_bound: Fraction | None = None

    @property
    def distinguishable(self) -> bool:
        return self.status == "nonzero-witnessed"


def identity_test(g1: ExprDag, g2: ExprDag, *, samples_per_var: int,
                  trials: int = 20, seed: int = 0) -> PitVerdict:
    """Test g1 == g2 as polynomials by evaluating g1 - g2 at ``trials``
    uniform points of {0, ..., s-1}^n over a prime field.

    Requires s strictly above the structural degree bound of the
    difference; otherwise the d/s guarantee is vacuous and the test
    refuses to run.  A nonzero value is a proof of difference; all zeros
    leaves failure probability at most (d/s)^trials, exact.
    """
    if g1.ring != g2.ring or g1.arity != g2.arity:
        raise ValueError("identity test needs DAGs over one ring and arity")
    ring = g1.ring
    if not ring.is_field:
        raise UnsupportedRingError("identity testing needs a prime field")
    s = samples_per_var
    if not 1 <= s <= ring.modulus:
        raise ValueError(f"samples per variable must be in [1, {ring.modulus}], got {s}")
    if trials < 1:
        raise ValueError("need at least one trial")
    diff = dag_difference(g1, g2)
    d = degree_upper_bound(diff)
    if d >= s:
        raise InsufficientSampleSpaceError(
            f"degree bound {d} needs more than {s} samples per variable")

    rng = random.Random(seed)
    points = [tuple(rng.randrange(s) for _ in range(diff.arity)) for _ in range(trials)]
    for i, pt in enumerate(points):
        v = eval_dag(diff, pt)
        if v.value:
            return PitVerdict("nonzero-witnessed", trials, d, s, seed,
                              point=pt, value=v.value, trial_index=i)
    bound = Fraction(d, s) ** trials
    return PitVerdict("all-zero", trials, d, s, seed, failure_bound=bound)
