"""Lower bounds on the number of grid points where a polynomial is nonzero.

Every bound here is a closed formula or a small optimization problem over
the grid sizes and a degree vector; none of them look at grid values.  The
catalog builder ``collect_bounds`` pairs each formula with the detected
hypothesis that licenses it, so a downstream verifier can hold every
guaranteed claim against brute-force truth.

Conventions: ``sizes`` are the per-variable grid sizes |S_i|; ``d`` is a
per-variable degree vector unless a formula takes the total degree, and
preconditions such as |S_i| > d_i are enforced eagerly with
HypothesisViolationError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, prod

from . import analysis
from .errors import HypothesisViolationError
from .poly import GridSpec, Polynomial, check_compatible


@dataclass(frozen=True)
class BoundReport:
    """A single bound claim.

    value is an exact count (int), an exact probability or exponent
    (Fraction), or a float for the one asymptotic density formula without
    an exact rational value.  ``guaranteed`` distinguishes claims whose
    hypothesis provably implies them from diagnostic entries recorded to
    be checked against truth (and expected to fail sometimes);
    ``asymptotic`` marks order-of-growth statements that no finite grid
    can falsify, which verifiers must skip.
    """

    name: str
    value: object
    assumptions: str
    witness_d: tuple[int, ...] | None = None
    witness_e: tuple[int, ...] | None = None
    order: tuple[int, ...] | None = None
    kind: str = "count"  # "count" | "zero-probability" | "exponent" | "density"
    guaranteed: bool = True
    asymptotic: bool = False
    argmin: tuple[int, ...] | None = None
    requires_nonzero_on_grid: bool = False


@dataclass(frozen=True)
class AFInstance:
    """Inputs of the generalized Alon-Furedi bound: grid sizes, degree
    caps d_i < |S_i| per variable, and a total degree 0 <= d <= sum d_i."""

    sizes: tuple[int, ...]
    caps: tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.sizes) != len(self.caps) or not self.sizes:
            raise ValueError("sizes and caps must be nonempty and of equal length")
        for s, c in zip(self.sizes, self.caps):
            if c < 0 or s < 1:
                raise ValueError(f"bad instance entry: size {s}, cap {c}")
            if c >= s:
                raise HypothesisViolationError(f"need cap {c} < size {s}")
        if not 0 <= self.total <= sum(self.caps):
            raise HypothesisViolationError(
                f"total degree {self.total} outside [0, {sum(self.caps)}]")


def product_bound(sizes: tuple[int, ...], d: tuple[int, ...]) -> int:
    """prod (|S_i| - d_i): the guaranteed nonzero count under any of the
    quantitative hypotheses (lex-largest, successively-largest, or exact
    partial degrees)."""
    _check_sizes_exceed(sizes, d)
    return prod(s - di for s, di in zip(sizes, d))


def schwartz_additive_bound(sizes: tuple[int, ...], d: tuple[int, ...]) -> int:
    """ceil(prod |S_i| * (1 - sum d_i / |S_i|)), clamped at zero.

    An additive weakening of the product bound; exact rational arithmetic
    throughout, so the ceiling never sees floating point.
    """
    _check_sizes_exceed(sizes, d)
    total = prod(sizes) * (1 - sum(Fraction(di, s) for di, s in zip(d, sizes)))
    return max(0, ceil(total))


def sz_probability(total_degree: int, size: int) -> Fraction:
    """Upper bound d/s on the probability that a nonzero polynomial of
    total degree d vanishes at a uniform point of S^n with |S| = s."""
    if total_degree < 0:
        raise ValueError("negative total degree")
    if size <= total_degree:
        raise HypothesisViolationError(f"need sample size {size} > total degree {total_degree}")
    return Fraction(total_degree, size)


def schwartz_zippel_count(size: int, total_degree: int, arity: int) -> int:
    """Count form of the d/s vanishing bound: s^n - d * s^(n-1)."""
    if arity < 1:
        raise ValueError("arity must be positive")
    if size <= total_degree or total_degree < 0:
        raise HypothesisViolationError(f"need size {size} > total degree {total_degree} >= 0")
    return size**arity - total_degree * size ** (arity - 1)


def zippel_bound(size: int, degree: int, arity: int) -> int:
    """(s - d)^n when every variable has degree at most d."""
    if arity < 1:
        raise ValueError("arity must be positive")
    if size <= degree or degree < 0:
        raise HypothesisViolationError(f"need size {size} > per-variable degree {degree} >= 0")
    return (size - degree) ** arity


def demillo_lipton_bound(size: int, total_degree: int, arity: int) -> int:
    """(s - d)^n under the total-degree reading of d; numerically the same
    expression as zippel_bound but with a different hypothesis."""
    if arity < 1:
        raise ValueError("arity must be positive")
    if size <= total_degree or total_degree < 0:
        raise HypothesisViolationError(f"need size {size} > total degree {total_degree} >= 0")
    return (size - total_degree) ** arity


def min_products_by_total(lows: tuple[int, ...], highs: tuple[int, ...]) -> dict[int, tuple[int, tuple[int, ...]]]:
    """For each achievable sum T of integers y_i in [lows_i, highs_i],
    the minimum of prod y_i subject to sum y_i = T, with an argmin.

    Dynamic program over (variable index, running sum).  Ties keep the
    first argmin in ascending y order, which makes output deterministic.
    """
    if len(lows) != len(highs) or not lows:
        raise ValueError("lows and highs must be nonempty and of equal length")
    table: dict[int, tuple[int, tuple[int, ...]]] = {0: (1, ())}
    for lo, hi in zip(lows, highs):
        if not 1 <= lo <= hi:
            raise ValueError(f"need 1 <= low <= high, got [{lo}, {hi}]")
        nxt: dict[int, tuple[int, tuple[int, ...]]] = {}
        for s in sorted(table):
            p, ys = table[s]
            for y in range(lo, hi + 1):
                key = s + y
                cand = p * y
                cur = nxt.get(key)
                if cur is None or cand < cur[0]:
                    nxt[key] = (cand, ys + (y,))
        table = nxt
    return table


def gen_alon_furedi_bound(inst: AFInstance) -> tuple[int, tuple[int, ...]]:
    """Minimum of prod y_i over |S_i| - d_i <= y_i <= |S_i| with
    sum y_i = sum |S_i| - d: the guaranteed nonzero count for a polynomial
    with partial degrees at most d_i and total degree at most d.

    Returns (value, argmin).  Increasing the total degree never increases
    the value, and at d = sum d_i it collapses to the product bound.
    """
    target = sum(inst.sizes) - inst.total
    lows = tuple(s - c for s, c in zip(inst.sizes, inst.caps))
    table = min_products_by_total(lows, inst.sizes)
    return table[target]


def alon_furedi_original_bound(sizes: tuple[int, ...], total_degree: int) -> int:
    """Minimum of prod y_i over 1 <= y_i <= |S_i|, sum y_i >= sum |S_i| - d,
    for a polynomial of total degree d not vanishing identically on the grid.

    Computed greedily: visit variables by decreasing size and raise each
    y_i from 1 to its cap until the sum constraint is met.  The greedy
    optimum matches the dynamic program (a tested property).
    """
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("sizes must be positive")
    if not 0 <= total_degree <= sum(s - 1 for s in sizes):
        raise HypothesisViolationError(
            f"total degree {total_degree} outside [0, {sum(s - 1 for s in sizes)}]")
    need = sum(sizes) - total_degree - len(sizes)  # amount to add over the all-ones point
    result = 1
    for s in sorted(sizes, reverse=True):
        if need <= 0:
            break
        take = min(s - 1, need)
        result *= 1 + take
        need -= take
    return result


def additive_existence_bound(sizes: tuple[int, ...], d: tuple[int, ...]) -> int:
    """1 + sum (|S_i| - (d_i + 1)): nonzeros guaranteed by a maximal
    monomial d, obtained by shrinking the grid to sizes d_i + 1 in all
    ways and taking one nonzero from each shrunken grid."""
    _check_sizes_exceed(sizes, d)
    return 1 + sum(s - (di + 1) for s, di in zip(sizes, d))


def erdos_density_bound(arity: int, l: int, size: int):
    """(3n)^n / s^(1 / l^(n-1)): the density threshold above which an
    n-uniform hypergraph argument applies, asymptotic in s.

    Returns an exact Fraction when s is a perfect l^(n-1)-th power and a
    float (documented tolerance 1e-12) otherwise.
    """
    if arity < 1 or l < 1 or size < 1:
        raise ValueError("need arity >= 1, l >= 1, size >= 1")
    L = l ** (arity - 1)
    numerator = (3 * arity) ** arity
    root = round(size ** (1.0 / L))
    for k in (root - 1, root, root + 1):
        if k >= 1 and k**L == size:
            return Fraction(numerator, k)
    return numerator / size ** (1.0 / L)


def kst_exponent(d1: int, d2: int) -> Fraction:
    """2 - 1/(min(d1, d2) + 1): the exponent of the zero-set growth
    O(s^(2 - 1/l)) for bivariate f with a maximal monomial x1^d1 x2^d2."""
    if d1 < 0 or d2 < 0:
        raise ValueError("degrees must be nonnegative")
    return Fraction(2) - Fraction(1, min(d1, d2) + 1)


def _check_sizes_exceed(sizes: tuple[int, ...], d: tuple[int, ...]):
    if len(sizes) != len(d) or not sizes:
        raise ValueError("sizes and d must be nonempty and of equal length")
    for s, di in zip(sizes, d):
        if di < 0:
            raise ValueError(f"negative degree {di}")
        if s <= di:
            raise HypothesisViolationError(f"need size {s} > degree {di}")


def _fits(sizes: tuple[int, ...], d: tuple[int, ...]) -> bool:
    return all(s > di for s, di in zip(sizes, d))


def collect_bounds(f: Polynomial, grid: GridSpec,
                   reports: list[analysis.HypothesisReport] | None = None) -> list[BoundReport]:
    """Every bound whose hypothesis is certified by the classifier, plus
    diagnostic and asymptotic entries.

    One entry per (bound name, witness degree vector); when several
    hypotheses certify the same entry, the first in classifier order is
    recorded in the assumptions.  Bounds whose size preconditions fail for
    a witness are silently skipped: the hypothesis does not hold on this
    grid, so there is nothing to claim.
    """
    check_compatible(f, grid)
    if f.is_zero:
        return []
    if reports is None:
        reports = analysis.classify(f)
    sizes = grid.sizes
    n = grid.arity
    partial, total = f.degrees()

    out: list[BoundReport] = []
    seen: set[tuple] = set()

    def emit(report: BoundReport):
        key = (report.name, report.witness_d, report.witness_e)
        if key not in seen:
            seen.add(key)
            out.append(report)

    for rep in reports:
        if not rep.holds:
            continue
        d = rep.witness_d
        if rep.condition == analysis.MAXIMAL_MONOMIAL:
            if not _fits(sizes, d):
                continue
            emit(BoundReport("existence", 1, f"maximal monomial {d} and every |S_i| > d_i", d))
            emit(BoundReport("additive-existence", additive_existence_bound(sizes, d),
                             f"maximal monomial {d}; shrink-and-translate argument", d))
            emit(BoundReport("product-if-maximal", prod(s - di for s, di in zip(sizes, d)),
                             f"DIAGNOSTIC: maximality of {d} alone does not imply the product bound", d,
                             guaranteed=False))
            if max(d) >= 1:
                l = max(d) + 1
                emit(BoundReport("erdos-density", erdos_density_bound(n, l, min(sizes)),
                                 f"asymptotic zero-density threshold, l = 1 + max d_i = {l}", d,
                                 kind="density", guaranteed=False, asymptotic=True))
            if n == 2:
                emit(BoundReport("kst-exponent", kst_exponent(d[0], d[1]),
                                 f"asymptotic zero-set exponent for maximal monomial {d}", d,
                                 kind="exponent", guaranteed=False, asymptotic=True))
        elif rep.condition == analysis.LEX_LARGEST:
            if not _fits(sizes, d):
                continue
            emit(BoundReport("product", product_bound(sizes, d),
                             f"lex-largest monomial {d} under order {rep.order}", d, order=rep.order))
            emit(BoundReport("schwartz-additive", schwartz_additive_bound(sizes, d),
                             f"lex-largest monomial {d} under order {rep.order}", d, order=rep.order))
        elif rep.condition == analysis.SUCCESSIVELY_LARGEST:
            if not _fits(sizes, d):
                continue
            emit(BoundReport("product", product_bound(sizes, d),
                             f"successively largest sequence {d} for seed {rep.witness_e} under order {rep.order}",
                             d, witness_e=rep.witness_e, order=rep.order))
        elif rep.condition == analysis.D_LEADING:
            if not _fits(sizes, d):
                continue
            emit(BoundReport("existence", 1,
                             f"{rep.witness_e} is {d}-leading and every |S_i| > d_i", d,
                             witness_e=rep.witness_e))
            emit(BoundReport("additive-existence", additive_existence_bound(sizes, d),
                             f"{rep.witness_e} is {d}-leading; shrink-and-translate argument", d,
                             witness_e=rep.witness_e))
        elif rep.condition == analysis.PARTIAL_DEGREES:
            if not _fits(sizes, d):
                continue
            emit(BoundReport("product", product_bound(sizes, d),
                             f"exact partial degrees {d}", d))
            emit(BoundReport("schwartz-additive", schwartz_additive_bound(sizes, d),
                             f"exact partial degrees {d}", d))
            value, argmin = gen_alon_furedi_bound(AFInstance(sizes, d, total))
            emit(BoundReport("gen-alon-furedi", value,
                             f"partial degrees {d} and total degree {total}", d, argmin=argmin))

    # bounds keyed to the total degree alone
    if len(set(sizes)) == 1:
        s = sizes[0]
        if s > total:
            emit(BoundReport("schwartz-zippel", schwartz_zippel_count(s, total, n),
                             f"total degree {total}, common size {s}", None))
            emit(BoundReport("schwartz-zippel-probability", sz_probability(total, s),
                             f"vanishing probability at most d/s with d = {total}, s = {s}", None,
                             kind="zero-probability"))
            emit(BoundReport("demillo-lipton", demillo_lipton_bound(s, total, n),
                             f"total degree {total}, common size {s}", None))
        if s > max(partial):
            emit(BoundReport("zippel", zippel_bound(s, max(partial), n),
                             f"per-variable degree at most {max(partial)}, common size {s}", None))
    if 0 <= total <= sum(s - 1 for s in sizes):
        emit(BoundReport("alon-furedi", alon_furedi_original_bound(sizes, total),
                         f"total degree {total}; assumes f is not identically zero on the grid", None,
                         requires_nonzero_on_grid=True))
    return out
