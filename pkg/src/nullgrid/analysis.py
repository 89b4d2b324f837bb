"""Detection of monomial hypotheses that license nonzero-count conclusions.

For a nonzero sparse polynomial f, several related hypotheses about a
degree vector d (sometimes together with a seed monomial e) are known to
force f to be nonzero somewhere on a grid with |S_i| > d_i, and the
stronger ones force a guaranteed number of nonzeros:

    total-degree          x^d is a monomial of f of largest total degree
    maximal-monomial      x^d is a monomial of f and no other monomial
                          dominates it componentwise
    lex-largest           x^d is the lexicographically largest monomial
                          of f under a variable order
    successively-largest  d_j is the largest exponent of x_j among the
                          monomials agreeing with the seed e on all
                          earlier variables (under a variable order)
    d-leading             e is a monomial of f, e <= d, and no other
                          monomial e' satisfies, for every i, e'_i = e_i
                          or e'_i > d_i
    partial-degrees       d_i is the degree of f in x_i

Each hypothesis carves out a forbidden region of exponent vectors that
must not meet the support of f; ``forbidden_set`` materializes those
regions, and the definitional membership predicate is shared between the
detectors and the region enumeration so they cannot drift apart.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ZeroPolynomialError
from .poly import Polynomial

MAXIMAL_MONOMIAL = "maximal-monomial"
LEX_LARGEST = "lex-largest"
SUCCESSIVELY_LARGEST = "successively-largest"
D_LEADING = "d-leading"
PARTIAL_DEGREES = "partial-degrees"
TOTAL_DEGREE = "total-degree"

CONDITIONS = (MAXIMAL_MONOMIAL, LEX_LARGEST, SUCCESSIVELY_LARGEST, D_LEADING, PARTIAL_DEGREES, TOTAL_DEGREE)


@dataclass(frozen=True)
class HypothesisReport:
    """One detected hypothesis: the condition, its witnesses, and whether
    the definitional re-check passed.

    witness_d is the degree vector; witness_e is the seed monomial for the
    seeded conditions; order is the variable order (a permutation of
    variable indices) for the order-sensitive conditions.
    """

    condition: str
    holds: bool
    witness_d: tuple[int, ...]
    witness_e: tuple[int, ...] | None = None
    order: tuple[int, ...] | None = None


def _require_nonzero(f: Polynomial):
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial admits no monomial hypothesis")


def _dominates(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x >= y for x, y in zip(a, b))


def maximal_monomials(f: Polynomial) -> set[tuple[int, ...]]:
    """Support elements not strictly dominated by another support element."""
    _require_nonzero(f)
    supp = list(f.terms)
    out = set()
    for a in supp:
        if not any(b != a and _dominates(b, a) for b in supp):
            out.add(a)
    return out


def lex_largest(f: Polynomial, order: tuple[int, ...] | None = None) -> tuple[int, ...]:
    """The lexicographically largest monomial under a variable order.

    The order is a permutation of variable indices; comparison reads the
    exponents in that order.  Defaults to the identity order.
    """
    _require_nonzero(f)
    order = _check_order(f.arity, order)
    return max(f.terms, key=lambda e: tuple(e[i] for i in order))


def successively_largest(f: Polynomial, seed: tuple[int, ...], order: tuple[int, ...] | None = None) -> tuple[int, ...]:
    """The successively largest degree sequence for a seed monomial.

    Following the variable order, d_j is the largest exponent of variable
    j among the monomials of f that agree with the seed on all earlier
    variables.  The result need not itself be a monomial of f, but always
    dominates the seed.
    """
    _require_nonzero(f)
    order = _check_order(f.arity, order)
    seed = tuple(seed)
    if seed not in f.terms:
        raise ValueError(f"seed {seed} is not a monomial of f")
    d = [0] * f.arity
    candidates = list(f.terms)
    for var in order:
        d[var] = max(e[var] for e in candidates)
        candidates = [e for e in candidates if e[var] == seed[var]]
    return tuple(d)


def is_d_leading(f: Polynomial, e: tuple[int, ...], d: tuple[int, ...]) -> bool:
    """Whether the monomial e of f is d-leading: every other monomial e'
    must fail the pattern (e'_i = e_i or e'_i > d_i for all i)."""
    _require_nonzero(f)
    e, d = tuple(e), tuple(d)
    if e not in f.terms:
        raise ValueError(f"e = {e} is not a monomial of f")
    if not _dominates(d, e):
        raise ValueError(f"need e <= d componentwise, got e={e}, d={d}")
    return not any(other != e and _forbidden(D_LEADING, other, d, e, None) for other in f.terms)


def _check_order(arity: int, order) -> tuple[int, ...]:
    if order is None:
        return tuple(range(arity))
    order = tuple(order)
    if sorted(order) != list(range(arity)):
        raise ValueError(f"order {order} is not a permutation of 0..{arity - 1}")
    return order


def _forbidden(condition: str, v: tuple[int, ...], d: tuple[int, ...],
               e: tuple[int, ...] | None, order: tuple[int, ...] | None) -> bool:
    """Membership predicate of the forbidden region for a condition.

    A hypothesis with witnesses (d, e) holds for f exactly when no
    monomial of f lies in the forbidden region (plus, for most
    conditions, a witness-in-support requirement handled by callers).
    """
    n = len(v)
    if condition == MAXIMAL_MONOMIAL:
        return v != d and _dominates(v, d)
    if condition == PARTIAL_DEGREES:
        return any(v[i] > d[i] for i in range(n))
    if condition == TOTAL_DEGREE:
        return sum(v) > sum(d)
    if condition == LEX_LARGEST:
        order = order or tuple(range(n))
        key = tuple(v[i] for i in order)
        ref = tuple(d[i] for i in order)
        return key > ref
    if condition == SUCCESSIVELY_LARGEST:
        if e is None:
            raise ValueError("successively-largest needs the seed e")
        order = order or tuple(range(n))
        for j, var in enumerate(order):
            if v[var] > d[var] and all(v[order[i]] == e[order[i]] for i in range(j)):
                return True
        return False
    if condition == D_LEADING:
        if e is None:
            raise ValueError("d-leading needs the seed e")
        return v != e and all(v[i] == e[i] or v[i] > d[i] for i in range(n))
    raise ValueError(f"unknown condition {condition!r}")


def forbidden_set(condition: str, d: tuple[int, ...], cap: tuple[int, ...],
                  e: tuple[int, ...] | None = None,
                  order: tuple[int, ...] | None = None) -> set[tuple[int, ...]]:
    """All exponent vectors in the box [0, cap] forbidden by a condition.

    The box is inclusive: cap_i is the largest exponent enumerated for
    variable i.  For the order-sensitive conditions the identity order is
    the default.
    """
    d, cap = tuple(d), tuple(cap)
    if len(cap) != len(d):
        raise ValueError("cap and d have different lengths")
    out = set()
    for v in itertools.product(*(range(c + 1) for c in cap)):
        if _forbidden(condition, v, d, e, order):
            out.add(v)
    return out


def hypothesis_holds(f: Polynomial, condition: str, d: tuple[int, ...],
                     e: tuple[int, ...] | None = None,
                     order: tuple[int, ...] | None = None) -> bool:
    """Definitional re-check of a hypothesis for given witnesses.

    Verifies the witness-in-support requirement of the condition and that
    no monomial of f is forbidden.  This is the ground truth the
    detectors are tested against.
    """
    _require_nonzero(f)
    d = tuple(d)
    e = None if e is None else tuple(e)
    if condition in (MAXIMAL_MONOMIAL, LEX_LARGEST, TOTAL_DEGREE):
        if d not in f.terms:
            return False
    if condition in (SUCCESSIVELY_LARGEST, D_LEADING):
        if e is None or e not in f.terms or not _dominates(d, e):
            return False
    if condition == PARTIAL_DEGREES:
        partial, _ = f.degrees()
        if d != partial:
            return False
    return not any(_forbidden(condition, v, d, e, order) for v in f.terms)


def classify(f: Polynomial, max_orders_arity: int = 4) -> list[HypothesisReport]:
    """Detect every supported hypothesis of f with concrete witnesses.

    Emits, in deterministic order:
      * one maximal-monomial report per maximal monomial,
      * one lex-largest report per variable order,
      * one successively-largest report per (order, seed monomial) pair,
      * one d-leading report per distinct (seed, derived degree vector),
      * one partial-degrees report and one total-degree report.

    All variable orders are enumerated while arity <= max_orders_arity;
    beyond that only the identity order is used.  Every report's ``holds``
    is computed by the definitional re-check, not assumed.
    """
    _require_nonzero(f)
    n = f.arity
    if n <= max_orders_arity:
        orders = [tuple(p) for p in itertools.permutations(range(n))]
    else:
        orders = [tuple(range(n))]
    by_graded = lambda exps: (sum(exps), exps)
    reports: list[HypothesisReport] = []

    for m in sorted(maximal_monomials(f), key=by_graded, reverse=True):
        reports.append(HypothesisReport(MAXIMAL_MONOMIAL, hypothesis_holds(f, MAXIMAL_MONOMIAL, m), m))

    for order in orders:
        d = lex_largest(f, order)
        reports.append(HypothesisReport(LEX_LARGEST, hypothesis_holds(f, LEX_LARGEST, d, order=order), d, order=order))

    seeds = sorted(f.terms, key=by_graded, reverse=True)
    d_leading_pairs: dict[tuple, tuple] = {}
    for order in orders:
        for seed in seeds:
            d = successively_largest(f, seed, order)
            holds = hypothesis_holds(f, SUCCESSIVELY_LARGEST, d, e=seed, order=order)
            reports.append(HypothesisReport(SUCCESSIVELY_LARGEST, holds, d, witness_e=seed, order=order))
            d_leading_pairs.setdefault((seed, d), None)

    for seed, d in sorted(d_leading_pairs):
        reports.append(HypothesisReport(D_LEADING, is_d_leading(f, seed, d), d, witness_e=seed))

    partial, total = f.degrees()
    reports.append(HypothesisReport(PARTIAL_DEGREES, hypothesis_holds(f, PARTIAL_DEGREES, partial), partial))

    top = max((e for e in f.terms if sum(e) == total), key=by_graded)
    reports.append(HypothesisReport(TOTAL_DEGREE, hypothesis_holds(f, TOTAL_DEGREE, top), top))
    return reports
