"""Brute-force ground truth: exhaustive counting and verification.

Everything else in the package makes claims; this module checks them by
enumerating grids outright.  The enumeration core substitutes one variable
at a time, so shared prefixes are evaluated once rather than per point,
and it works on raw canonical integers for speed.

Counting refuses grids above a configurable point limit instead of
running forever.  Partitioned counting (``workers`` > 1) splits the first
variable's values into chunks whose results are combined in chunk order,
so the outcome is bit-identical regardless of the worker count.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bounds as bounds_mod
from .errors import (
    GridTooLargeError,
    HypothesisViolationError,
    UnsupportedRingError,
)
from .poly import GridSpec, Polynomial, check_compatible
from .ring import RingSpec, grid_condition_check

DEFAULT_POINT_LIMIT = 100_000_000
DEFAULT_ZERO_SET_CAP = 1_000_000


@dataclass(frozen=True)
class GridCount:
    """Exhaustive count of a polynomial over a grid.  zero_set lists the
    zero points in odometer order when collected, else None."""

    nonzeros: int
    zeros: int
    zero_set: tuple[tuple[int, ...], ...] | None = None

    @property
    def grid_size(self) -> int:
        return self.nonzeros + self.zeros


@dataclass(frozen=True)
class BoundCheck:
    """One bound held against brute-force truth.  slack is how far the
    claim is from tight: nonzeros minus the claimed count (or, for
    zero-probability claims, allowed zeros minus actual zeros)."""

    report: bounds_mod.BoundReport
    sound: bool
    slack: int


@dataclass(frozen=True)
class VerificationReport:
    nonzero_count: int
    zero_count: int
    grid_size: int
    checks: tuple[BoundCheck, ...]

    @property
    def all_guaranteed_sound(self) -> bool:
        return all(c.sound for c in self.checks if c.report.guaranteed)


def _substitute_first(terms: dict, value: int, modulus: int | None) -> dict:
    """Plug value into the first variable; keys lose their first entry."""
    out: dict[tuple[int, ...], int] = {}
    for exps, c in terms.items():
        e = exps[0]
        if e:
            c = c * pow(value, e, modulus) if modulus else c * value**e
        key = exps[1:]
        acc = out.get(key, 0) + c
        if modulus:
            acc %= modulus
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return out


def _count_rec(terms: dict, sets: tuple, modulus: int | None,
               prefix: tuple, zeros: list | None) -> int:
    """Nonzero count of the (partially substituted) terms over the
    remaining sets; appends zero points to ``zeros`` when given."""
    if not sets:
        value = terms.get((), 0)
        if value:
            return 1
        if zeros is not None:
            zeros.append(prefix)
        return 0
    if not terms:
        # identically zero on the remaining subgrid
        if zeros is not None:
            for tail in itertools.product(*sets):
                zeros.append(prefix + tail)
        return 0
    nonzeros = 0
    rest = sets[1:]
    for a in sets[0]:
        sub = _substitute_first(terms, a, modulus)
        nonzeros += _count_rec(sub, rest, modulus, prefix + (a,), zeros)
    return nonzeros


def count_nonzeros(f: Polynomial, grid: GridSpec, *,
                   collect_zeros: bool = True,
                   zero_set_cap: int = DEFAULT_ZERO_SET_CAP,
                   point_limit: int = DEFAULT_POINT_LIMIT,
                   workers: int = 1) -> GridCount:
    """Count the grid points where f is nonzero, by full enumeration.

    The zero set is collected only when the grid has at most
    ``zero_set_cap`` points and ``collect_zeros`` is set.  Grids larger
    than ``point_limit`` raise GridTooLargeError.  The grid must pass the
    zero-divisor difference condition; otherwise zero counts over Z_m
    would not mean what callers assume.
    """
    check_compatible(f, grid)
    condition = grid_condition_check(f.ring, grid)
    if not condition.ok:
        raise HypothesisViolationError(
            f"grid fails the zero-divisor difference condition: {condition.describe()}")
    size = grid.size()
    if size > point_limit:
        raise GridTooLargeError(f"grid has {size} points, limit is {point_limit}")
    want_zeros = collect_zeros and size <= zero_set_cap
    modulus = f.ring.modulus

    if workers > 1 and len(grid.sets[0]) > 1:
        first = grid.sets[0]
        chunk = (len(first) + workers - 1) // workers
        pieces = [first[i:i + chunk] for i in range(0, len(first), chunk)]

        def run(piece):
            zs: list | None = [] if want_zeros else None
            nz = 0
            for a in piece:
                nz += _count_rec(_substitute_first(f.terms, a, modulus),
                                 grid.sets[1:], modulus, (a,), zs)
            return nz, zs

        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, pieces))
        nonzeros = sum(nz for nz, _ in results)
        zero_set = tuple(itertools.chain.from_iterable(zs for _, zs in results)) if want_zeros else None
    else:
        zs = [] if want_zeros else None
        nonzeros = _count_rec(f.terms, grid.sets, modulus, (), zs)
        zero_set = tuple(zs) if want_zeros else None
    return GridCount(nonzeros, size - nonzeros, zero_set)


def verify_bounds(f: Polynomial, grid: GridSpec, *,
                  reports=None, workers: int = 1,
                  point_limit: int = DEFAULT_POINT_LIMIT) -> VerificationReport:
    """Hold every collected bound against the brute-force count.

    Asymptotic entries are skipped (no finite grid can falsify them), and
    the classical total-degree bound that presumes a nonzero value on the
    grid is skipped when that presumption fails.
    """
    count = count_nonzeros(f, grid, collect_zeros=False,
                           point_limit=point_limit, workers=workers)
    size = count.grid_size
    checks: list[BoundCheck] = []
    for rep in bounds_mod.collect_bounds(f, grid, reports):
        if rep.asymptotic:
            continue
        if rep.requires_nonzero_on_grid and count.nonzeros == 0:
            continue
        if rep.kind == "zero-probability":
            allowed = (rep.value * size).__floor__() if hasattr(rep.value, "__floor__") else int(rep.value * size)
            slack = allowed - count.zeros
        else:
            slack = count.nonzeros - rep.value
        checks.append(BoundCheck(rep, slack >= 0, slack))
    return VerificationReport(count.nonzeros, count.zeros, size, tuple(checks))


def tightness_family(grid: GridSpec, d: tuple[int, ...],
                     subsets: tuple[tuple[int, ...], ...] | None = None) -> Polynomial:
    """The product polynomial prod_i prod_{a in A_i} (x_i - a) with
    |A_i| = d_i, which attains the product bound with slack zero.

    A_i defaults to the first d_i elements of S_i in stored order; pass
    explicit subsets to override.  Its nonzeros on the grid are exactly
    the points avoiding every A_i, and there are prod (|S_i| - d_i) of
    them.
    """
    d = tuple(d)
    if len(d) != grid.arity:
        raise ValueError(f"degree vector {d} does not match grid arity {grid.arity}")
    ring = grid.ring
    if subsets is None:
        subsets = tuple(grid.sets[i][:d[i]] for i in range(grid.arity))
    for i, (di, s, sub) in enumerate(zip(d, grid.sets, subsets)):
        if not 0 <= di <= len(s):
            raise HypothesisViolationError(f"need 0 <= d_{i + 1} <= |S_{i + 1}|, got {di}")
        if len(sub) != di or any(v not in s for v in sub):
            raise ValueError(f"subset {sub} is not a {di}-element subset of set {i + 1}")
    out = Polynomial.constant(grid.arity, ring, 1)
    for i, sub in enumerate(subsets):
        x = Polynomial.variable(grid.arity, ring, i)
        for a in sub:
            out = out * (x - a)
    return out


@dataclass(frozen=True)
class MinNonzeroResult:
    """Outcome of the minimum-nonzero-count search over a coefficient
    space.  exhaustive is False when only a sampled subset was tried."""

    min_count: int
    witness: Polynomial
    exhaustive: bool
    tried: int


def min_nonzero_search(support: tuple[tuple[int, ...], ...], required: tuple[int, ...],
                       grid: GridSpec, *, exhaustive_limit: int = 10_000_000,
                       sample_budget: int = 200_000, seed: int = 0) -> MinNonzeroResult:
    """Minimum nonzero count over all polynomials with the given support
    whose ``required`` coefficient is nonzero, over a prime field.

    The required monomial must be maximal within the support, so the
    existence guarantee applies to every candidate and the reported
    minimum is meaningful.  The space has (p-1) * p^(k-1) candidate
    coefficient vectors; when that exceeds ``exhaustive_limit`` a seeded
    random sample of ``sample_budget`` candidates is scored instead and
    the result is flagged non-exhaustive.
    """
    ring = grid.ring
    if not ring.is_field:
        raise UnsupportedRingError("minimum search needs a prime field")
    p = ring.modulus
    support = tuple(sorted({tuple(m) for m in support}, key=lambda e: (sum(e), e), reverse=True))
    required = tuple(required)
    if required not in support:
        raise ValueError(f"required monomial {required} not in support")
    for m in support:
        if len(m) != grid.arity:
            raise ValueError(f"support monomial {m} does not match grid arity {grid.arity}")
        if m != required and all(a >= b for a, b in zip(m, required)):
            raise HypothesisViolationError(
                f"required monomial {required} is dominated by {m}; it must be maximal in the support")

    points = list(grid.points())
    k = len(support)
    req_idx = support.index(required)
    space = (p - 1) * p ** (k - 1)

    # value matrix: one column per grid point, one row per support monomial
    matrix = [[_mono_value(m, pt, p) for pt in points] for m in support]

    if space <= exhaustive_limit:
        ranges = [range(1, p) if i == req_idx else range(p) for i in range(k)]
        candidates = itertools.product(*ranges)
        exhaustive, tried = True, space
    else:
        rng = random.Random(seed)
        candidates = (tuple(rng.randrange(1, p) if i == req_idx else rng.randrange(p)
                            for i in range(k))
                      for _ in range(sample_budget))
        exhaustive, tried = False, sample_budget

    best_count, best_coeffs = _best_assignment(candidates, matrix, p)
    witness = Polynomial(grid.arity, ring, dict(zip(support, best_coeffs)))
    return MinNonzeroResult(best_count, witness, exhaustive, tried)


_SCORE_CHUNK = 1 << 15


def _best_assignment(candidates, matrix: list[list[int]], p: int) -> tuple[int, tuple[int, ...]]:
    """Scan coefficient vectors for the fewest nonzero grid values.

    Scores chunks of candidates with one integer matrix product each; the
    first candidate attaining the global minimum wins, independent of the
    chunk size.  Falls back to pure Python when p is large enough to
    overflow 64-bit accumulation.
    """
    k = len(matrix)
    use_numpy = p * p * k < 2**62
    mat = np.array(matrix, dtype=np.int64) if use_numpy else None
    best_count: int | None = None
    best_coeffs: tuple[int, ...] | None = None
    while True:
        chunk = list(itertools.islice(candidates, _SCORE_CHUNK))
        if not chunk:
            break
        if use_numpy:
            values = (np.array(chunk, dtype=np.int64) @ mat) % p
            counts = np.count_nonzero(values, axis=1)
            i = int(np.argmin(counts))
            if best_count is None or counts[i] < best_count:
                best_count = int(counts[i])
                best_coeffs = tuple(chunk[i])
        else:
            for coeffs in chunk:
                nz = 0
                for col in range(len(matrix[0])):
                    acc = 0
                    for c, row in zip(coeffs, matrix):
                        if c:
                            acc += c * row[col]
                    if acc % p:
                        nz += 1
                if best_count is None or nz < best_count:
                    best_count = nz
                    best_coeffs = tuple(coeffs)
    if best_coeffs is None:
        raise ValueError("no candidate coefficient vectors")
    return best_count, best_coeffs


def _mono_value(exps: tuple[int, ...], point: tuple[int, ...], modulus: int) -> int:
    v = 1
    for x, e in zip(point, exps):
        if e:
            v = v * pow(x, e, modulus) % modulus
    return v


def random_polynomial(arity: int, caps: tuple[int, ...], density: float,
                      ring: RingSpec, seed: int) -> Polynomial:
    """A random polynomial with exponents in the box [0, caps].

    Every box monomial is included independently with probability
    ``density`` and a uniform nonzero coefficient (from [-9, 9] over Z).
    Deterministic per seed; redraws until at least one term appears, so
    the result is never the zero polynomial.
    """
    caps = tuple(caps)
    if len(caps) != arity or any(c < 0 for c in caps):
        raise ValueError(f"bad caps {caps} for arity {arity}")
    if not 0 < density <= 1:
        raise ValueError("density must be in (0, 1]")
    rng = random.Random(seed)
    box = list(itertools.product(*(range(c + 1) for c in caps)))

    def coefficient() -> int:
        if ring.modulus:
            return rng.randrange(1, ring.modulus)
        c = rng.randrange(1, 10)
        return -c if rng.random() < 0.5 else c

    while True:
        terms = {exps: coefficient() for exps in box if rng.random() < density}
        if terms:
            return Polynomial(arity, ring, terms)
