"""End-to-end acceptance criteria.

One test per criterion; each prints a single PASS/FAIL line with its key
numbers even under pytest capture.  Criteria with stated time limits
measure wall-clock time and fail when exceeded.
"""

import itertools
import random
import time
from fractions import Fraction

import numpy as np

import nullgrid as ng

F5 = ng.RingSpec.prime_field(5)
F7 = ng.RingSpec.prime_field(7)
F11 = ng.RingSpec.prime_field(11)
F101 = ng.RingSpec.prime_field(101)
Z = ng.RingSpec.integers()


def _line(capsys, ok: bool, text: str):
    with capsys.disabled():
        print(f"[{'PASS' if ok else 'FAIL'}] {text}")
    assert ok, text


def test_criterion_01_ellipse_pipeline(capsys):
    """Full pipeline on x^2 - 4xy + y^2 over {0..4}^2 in under 1 second."""
    t0 = time.perf_counter()
    f = ng.parse_poly("x^2 - 4*x*y + y^2", ["x", "y"], Z)
    grid = ng.GridSpec(Z, [range(5), range(5)])
    count = ng.count_nonzeros(f, grid)
    report = ng.verify_bounds(f, grid)
    elapsed = time.perf_counter() - t0

    values = {}
    for c in report.checks:
        values.setdefault(c.report.name, c.report.value)
    ok = (
        count.nonzeros == 24
        and count.zero_set == ((0, 0),)
        and report.all_guaranteed_sound
        and all(c.sound for c in report.checks)
        and values["gen-alon-furedi"] == 15
        and values["schwartz-zippel"] == 15
        and values["alon-furedi"] == 15
        and values["additive-existence"] == 7
        and values["schwartz-zippel-probability"] == Fraction(2, 5)
        and elapsed < 1.0
    )
    _line(capsys, ok, f"criterion 1: ellipse pipeline, 24 nonzeros, "
                      f"{len(report.checks)} bounds sound, {elapsed:.3f}s (limit 1s)")


def test_criterion_02_capped_product_dp_vs_brute_force(capsys):
    """The capped-product table matches numpy brute force for every
    n <= 3, sizes up to 8, every cap vector, every total, in under 10 s."""
    t0 = time.perf_counter()
    combos = 0
    mismatches = 0
    for n in (1, 2, 3):
        for sizes in itertools.product(range(2, 9), repeat=n):
            ys = np.array(list(itertools.product(*(range(1, s + 1) for s in sizes))),
                          dtype=np.int64)
            sums = ys.sum(axis=1)
            prods = ys.prod(axis=1)
            for lows in itertools.product(*(range(1, s + 1) for s in sizes)):
                mask = (ys >= np.array(lows, dtype=np.int64)).all(axis=1)
                table = ng.min_products_by_total(lows, sizes)
                combos += 1
                msums = sums[mask]
                mprods = prods[mask]
                want: dict[int, int] = {}
                for t, p in zip(msums.tolist(), mprods.tolist()):
                    if t not in want or p < want[t]:
                        want[t] = p
                got = {t: v for t, (v, _) in table.items()}
                if got != want:
                    mismatches += 1
                for t, (v, arg) in table.items():
                    prod = 1
                    for y in arg:
                        prod *= y
                    if sum(arg) != t or prod != v:
                        mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 10.0
    _line(capsys, ok, f"criterion 2: capped-product DP equals brute force on "
                      f"{combos} instances, {mismatches} mismatches, {elapsed:.2f}s (limit 10s)")


def test_criterion_03_product_bound_tight_families(capsys):
    """Explicit subset-product polynomials meet the product bound with
    slack zero for every degree vector on 50 random grids."""
    rng = random.Random(303)
    grids = 0
    checked = 0
    failures = 0
    while grids < 50:
        ring = rng.choice((Z, F7, F11))
        n = rng.randrange(1, 4)
        universe = range(-8, 9) if ring.kind == "int" else range(ring.modulus)
        try:
            sets = [tuple(rng.sample(universe, rng.randrange(1, 5))) for _ in range(n)]
            grid = ng.GridSpec(ring, sets)
        except ValueError:
            continue
        grids += 1
        for d in itertools.product(*(range(len(s) + 1) for s in sets)):
            f = ng.tightness_family(grid, d)
            expected = 1
            for s, di in zip(grid.sizes, d):
                expected *= s - di
            got = ng.count_nonzeros(f, grid, collect_zeros=False).nonzeros
            checked += 1
            if got != expected:
                failures += 1
    ok = failures == 0
    _line(capsys, ok, f"criterion 3: product bound tight with slack 0 on "
                      f"{checked} (grid, d) pairs across {grids} grids, {failures} failures")


def test_criterion_04_guaranteed_bounds_never_overshoot(capsys):
    """1000 random polynomials across rings and grids: every guaranteed
    bound stays at or below the true nonzero count."""
    rng = random.Random(404)
    polys = 0
    bound_checks = 0
    violations = 0
    diagnostic_misses = 0
    while polys < 1000:
        ring = rng.choice((F5, F7, F101, Z))
        n = rng.randrange(1, 3)
        caps = tuple(rng.randrange(1, 5) for _ in range(n))
        f = ng.random_polynomial(n, caps, rng.uniform(0.2, 0.7), ring,
                                 seed=rng.randrange(10**9))
        if ring.kind == "fp" and ring.modulus <= 7 and rng.random() < 0.5:
            sets = [tuple(range(ring.modulus)) for _ in range(n)]
        else:
            universe = range(-9, 10) if ring.kind == "int" else range(ring.modulus)
            size = rng.randrange(1, min(9, len(universe) + 1))
            sets = [tuple(rng.sample(universe, size)) for _ in range(n)]
        grid = ng.GridSpec(ring, sets)
        report = ng.verify_bounds(f, grid)
        polys += 1
        for c in report.checks:
            bound_checks += 1
            if c.report.guaranteed and not c.sound:
                violations += 1
            if not c.report.guaranteed and not c.sound:
                diagnostic_misses += 1
    ok = violations == 0 and polys == 1000
    _line(capsys, ok, f"criterion 4: {polys} random polynomials, {bound_checks} bound checks, "
                      f"{violations} guaranteed violations, {diagnostic_misses} diagnostic misses (allowed)")


def test_criterion_05_trim_preserves_grid_behavior(capsys):
    """Trimming: grid values unchanged, degrees under set sizes,
    idempotent, zero exactly for polynomials vanishing on the grid."""
    rng = random.Random(505)
    Z9 = ng.RingSpec.integers_mod(9)
    cases = 0
    failures = 0
    for _ in range(200):
        ring = rng.choice((Z, F5, Z9))
        n = rng.randrange(1, 3)
        if ring.kind == "zmod":
            # pairwise differences 1 and 2 are units mod 9
            universe = (0, 1, 2)
        elif ring.kind == "fp":
            universe = tuple(range(5))
        else:
            universe = tuple(range(-6, 7))
        try:
            sets = [tuple(rng.sample(universe, rng.randrange(1, 4))) for _ in range(n)]
            grid = ng.GridSpec(ring, sets)
        except ValueError:
            continue
        f = ng.random_polynomial(n, tuple(rng.randrange(1, 7) for _ in range(n)),
                                 0.4, ring, seed=rng.randrange(10**9))
        g = ng.trim(f, grid)
        cases += 1
        if not g.is_zero:
            partial, _ = g.degrees()
            if not all(p < s for p, s in zip(partial, grid.sizes)):
                failures += 1
        if ng.trim(g, grid) != g:
            failures += 1
        if any(f.eval_raw(pt) != g.eval_raw(pt) for pt in grid.points()):
            failures += 1
        vanishing = ng.vanishing_poly(grid, rng.randrange(n)) * f
        if not ng.trim(vanishing, grid).is_zero:
            failures += 1
    ok = failures == 0 and cases >= 190
    _line(capsys, ok, f"criterion 5: trimming invariants on {cases} random cases, "
                      f"{failures} failures")


def test_criterion_06_coefficient_extraction_from_values(capsys):
    """500 coefficient recoveries from grid values agree with stored
    coefficients at maximal monomials; multiplier identities hold."""
    rng = random.Random(606)
    recovered = 0
    failures = 0
    while recovered < 500:
        p = rng.choice((7, 11, 13))
        ring = ng.RingSpec.prime_field(p)
        n = rng.randrange(1, 3)
        caps = tuple(rng.randrange(1, 4) for _ in range(n))
        f = ng.random_polynomial(n, caps, 0.5, ring, seed=rng.randrange(10**9))
        for d in ng.maximal_monomials(f):
            sets = [tuple(rng.sample(range(p), min(p, di + 1 + rng.randrange(0, 2))))
                    for di in d]
            grid = ng.GridSpec(ring, sets)
            got = ng.coefficient_via_grid(ng.grid_values(f, grid), grid, d)
            recovered += 1
            if got.value != f.coefficient(d).value:
                failures += 1
    identity_failures = 0
    for _ in range(100):
        p = rng.choice((7, 11, 13))
        ring = ng.RingSpec.prime_field(p)
        size = rng.randrange(1, 6)
        elements = tuple(rng.sample(range(p), size))
        d = rng.randrange(size)
        m = ng.vandermonde_multipliers(ring, elements, d)
        for k in range(d + 1):
            total = sum(g * pow(a, k, p) for a, g in zip(m.elements, m.values)) % p
            if total != (1 if k == d else 0):
                identity_failures += 1
    ok = failures == 0 and identity_failures == 0
    _line(capsys, ok, f"criterion 6: {recovered} coefficient recoveries "
                      f"({failures} wrong), multiplier identities ({identity_failures} broken)")


def test_criterion_07_successively_largest_detection_and_soundness(capsys):
    """Frozen seeded-chain degree vectors, plus product bounds from every
    (seed, order) pair held against brute force on random polynomials."""
    f = ng.parse_poly("x^7*y^2 + x^5*y^6 + x^2*y^4", ["x", "y"], F11)
    frozen_ok = (
        ng.successively_largest(f, (7, 2), (0, 1)) == (7, 2)
        and ng.successively_largest(f, (5, 6), (0, 1)) == (7, 6)
        and ng.successively_largest(f, (5, 6), (1, 0)) == (5, 6)
        and ng.successively_largest(f, (7, 2), (1, 0)) == (7, 6)
    )
    grid = ng.GridSpec(F11, [range(11), range(11)])
    count = ng.count_nonzeros(f, grid, collect_zeros=False).nonzeros
    frozen_sound = count >= 4 * 9 and count >= 4 * 5  # (11-7)(11-2), (11-7)(11-6)

    rng = random.Random(707)
    checked = 0
    violations = 0
    for _ in range(100):
        ring = rng.choice((F7, F11))
        g = ng.random_polynomial(2, (rng.randrange(1, 5), rng.randrange(1, 5)),
                                 0.5, ring, seed=rng.randrange(10**9))
        sets = [tuple(range(ring.modulus))] * 2
        gr = ng.GridSpec(ring, sets)
        true_count = ng.count_nonzeros(g, gr, collect_zeros=False).nonzeros
        for order in ((0, 1), (1, 0)):
            for seed_mono in g.terms:
                d = ng.successively_largest(g, seed_mono, order)
                if all(s > di for s, di in zip(gr.sizes, d)):
                    claim = 1
                    for s, di in zip(gr.sizes, d):
                        claim *= s - di
                    checked += 1
                    if true_count < claim:
                        violations += 1
    ok = frozen_ok and frozen_sound and violations == 0 and checked > 100
    _line(capsys, ok, f"criterion 7: seeded chains (7,2)/(7,6) detected, "
                      f"{checked} product bounds sound, {violations} violations")


def test_criterion_08_d_leading_existence_at_minimal_grids(capsys):
    """The d-leading existence guarantee on the smallest admissible
    grids: 200 random instances, each with at least one nonzero point."""
    accept = ng.is_d_leading(
        ng.parse_poly("x*y + x^4 + y^2", ["x", "y"], Z), (1, 1), (4, 2))
    rng = random.Random(808)
    found = 0
    failures = 0
    while found < 200:
        p = rng.choice((7, 11, 13))
        ring = ng.RingSpec.prime_field(p)
        n = rng.randrange(1, 3)
        f = ng.random_polynomial(n, tuple(rng.randrange(1, 4) for _ in range(n)),
                                 0.5, ring, seed=rng.randrange(10**9))
        seed_mono = rng.choice(sorted(f.terms))
        order = tuple(rng.sample(range(n), n))
        d = ng.successively_largest(f, seed_mono, order)
        if not ng.is_d_leading(f, seed_mono, d):
            continue
        if any(di + 1 > p for di in d):
            continue
        sets = [tuple(rng.sample(range(p), di + 1)) for di in d]
        grid = ng.GridSpec(ring, sets)
        found += 1
        if ng.count_nonzeros(f, grid, collect_zeros=False).nonzeros < 1:
            failures += 1
    ok = accept and failures == 0
    _line(capsys, ok, f"criterion 8: d-leading accepted on the frozen pair, "
                      f"existence held on {found} minimal grids, {failures} failures")


def test_criterion_09_forbidden_region_lattice_identities(capsys):
    """Dominance = intersection of lex regions over all orders, and
    d-leading = intersection of seeded-chain regions, exhaustively."""
    mismatches = 0
    pairs = 0
    for cap in ((6, 6), (4, 4, 4)):
        n = len(cap)
        orders = list(itertools.permutations(range(n)))
        for d in itertools.product(*(range(c + 1) for c in cap)):
            regions = [ng.forbidden_set(ng.LEX_LARGEST, d, cap, order=o) for o in orders]
            inter = set.intersection(*regions)
            if inter != ng.forbidden_set(ng.MAXIMAL_MONOMIAL, d, cap):
                mismatches += 1
            for e in itertools.product(*(range(di + 1) for di in d)):
                pairs += 1
                regions = [ng.forbidden_set(ng.SUCCESSIVELY_LARGEST, d, cap, e=e, order=o)
                           for o in orders]
                inter = set.intersection(*regions)
                if inter != ng.forbidden_set(ng.D_LEADING, d, cap, e=e):
                    mismatches += 1
    ok = mismatches == 0
    _line(capsys, ok, f"criterion 9: region lattice identities on {pairs} (d, e) pairs "
                      f"over caps (6,6) and (4,4,4), {mismatches} mismatches")


def test_criterion_10_identity_test_error_bound(capsys):
    """Randomized identity testing: empirical zero fraction of unequal
    DAG pairs never beats degree/samples; frozen failure bound exact."""
    g1 = ng.parse_dag("(x + y)^19", ["x", "y"], F101)
    g2 = ng.parse_dag("(y + x)^19", ["x", "y"], F101)
    verdict = ng.identity_test(g1, g2, samples_per_var=100, trials=5, seed=0)
    frozen_ok = (verdict.status == "all-zero"
                 and verdict.failure_bound == Fraction(19, 100) ** 5)

    rng = random.Random(1010)
    pairs = 0
    breaches = 0
    while pairs < 200:
        d1 = _random_dag(rng)
        d2 = _random_dag(rng)
        diff = ng.expand_dag(ng.dag_difference(d1, d2))
        if diff.is_zero:
            continue
        bound = ng.degree_upper_bound(ng.dag_difference(d1, d2))
        s = bound + 1 + rng.randrange(5, 30)
        if s > 101:
            continue
        grid = ng.GridSpec(F101, [range(s), range(s)])
        zeros = ng.count_nonzeros(diff, grid, collect_zeros=False).zeros
        pairs += 1
        if zeros > bound * s:
            breaches += 1
    ok = frozen_ok and breaches == 0
    _line(capsys, ok, f"criterion 10: frozen bound (19/100)^5 exact, zero fraction "
                      f"within degree/samples on {pairs} random DAG pairs, {breaches} breaches")


def _random_dag(rng):
    b = ng.DagBuilder(2, F101)

    def grow(depth):
        if depth == 0:
            return rng.choice((b.var(0), b.var(1), b.const(rng.randrange(101))))
        op = rng.randrange(5)
        if op == 0:
            return b.add(grow(depth - 1), grow(depth - 1))
        if op == 1:
            return b.sub(grow(depth - 1), grow(depth - 1))
        if op == 2:
            return b.mul(grow(depth - 1), grow(depth - 1))
        if op == 3:
            return b.neg(grow(depth - 1))
        return b.pow(grow(depth - 1), rng.randrange(1, 4))

    return b.build(grow(3))


def test_criterion_11_table_puzzle(capsys):
    """The table puzzle: a six-agreement pair at s = 3, the hill climb
    reaching the cap, and agreement patterns always K22-free."""
    inst = ng.PuzzleInstance((0, 1, 2), (0, 1, 2), (0, 2, 2), (-2, 0, 0))
    pattern = ng.agreement_count(inst)
    frozen_ok = (pattern.count == 6 == ng.zarankiewicz_k22_bound(3)
                 and ng.k22_check(pattern))

    search = ng.local_search(3, budget=100_000, seed=0)
    search_ok = search.pattern.count >= 6

    rng = random.Random(1111)
    k22_failures = 0
    for _ in range(10_000):
        s = rng.randrange(1, 5)
        a = tuple(rng.sample(range(-12, 13), s))
        b = tuple(rng.sample(range(-12, 13), s))
        u = tuple(rng.randint(-12, 12) for _ in range(s))
        v = tuple(rng.randint(-12, 12) for _ in range(s))
        if not ng.k22_check(ng.agreement_count(ng.PuzzleInstance(a, b, u, v))):
            k22_failures += 1
    ok = frozen_ok and search_ok and k22_failures == 0
    _line(capsys, ok, f"criterion 11: six agreements frozen and found by search "
                      f"(best {search.pattern.count}), {10_000} random patterns K22-free, "
                      f"{k22_failures} failures")
