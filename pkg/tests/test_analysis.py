import itertools
import random

import pytest

from nullgrid.analysis import (
    CONDITIONS,
    D_LEADING,
    LEX_LARGEST,
    MAXIMAL_MONOMIAL,
    PARTIAL_DEGREES,
    SUCCESSIVELY_LARGEST,
    TOTAL_DEGREE,
    classify,
    forbidden_set,
    hypothesis_holds,
    is_d_leading,
    lex_largest,
    maximal_monomials,
    successively_largest,
)
from nullgrid.oracle import random_polynomial
from nullgrid.parser import parse_poly
from nullgrid.poly import Polynomial
from nullgrid.ring import RingSpec

Z = RingSpec.integers()

ELLIPSE = parse_poly("x^2 - 4*x*y + y^2", ["x", "y"], Z)


def test_maximal_monomials_ellipse():
    assert maximal_monomials(ELLIPSE) == {(2, 0), (1, 1), (0, 2)}


def test_maximal_monomials_dominated_point_excluded():
    f = parse_poly("x^2*y + x*y + y", ["x", "y"], Z)
    assert maximal_monomials(f) == {(2, 1)}


def test_lex_largest_orders():
    assert lex_largest(ELLIPSE, (0, 1)) == (2, 0)
    assert lex_largest(ELLIPSE, (1, 0)) == (0, 2)
    f = parse_poly("x^3*y + x^2*y^5", ["x", "y"], Z)
    assert lex_largest(f, (0, 1)) == (3, 1)
    assert lex_largest(f, (1, 0)) == (2, 5)
    with pytest.raises(ValueError):
        lex_largest(f, (0, 0))


def test_successively_largest_frozen():
    f = parse_poly("x^7*y^2 + x^5*y^6 + x^2*y^4", ["x", "y"], Z)
    # x first: global x-degree 7, then the y-max among monomials agreeing
    # with the seed in x
    assert successively_largest(f, (7, 2), (0, 1)) == (7, 2)
    assert successively_largest(f, (5, 6), (0, 1)) == (7, 6)
    assert successively_largest(f, (2, 4), (0, 1)) == (7, 4)
    # y first
    assert successively_largest(f, (5, 6), (1, 0)) == (5, 6)
    assert successively_largest(f, (7, 2), (1, 0)) == (7, 6)
    with pytest.raises(ValueError):
        successively_largest(f, (1, 1), (0, 1))


def test_successively_largest_dominates_seed():
    rng = random.Random(21)
    for _ in range(50):
        f = random_polynomial(3, (4, 4, 4), 0.4, Z, seed=rng.randrange(10**9))
        for seed in f.terms:
            for order in itertools.permutations(range(3)):
                d = successively_largest(f, seed, order)
                assert all(di >= si for di, si in zip(d, seed))
                assert hypothesis_holds(f, SUCCESSIVELY_LARGEST, d, e=seed, order=order)


def test_is_d_leading_frozen():
    f = parse_poly("x*y + x^4 + y^2", ["x", "y"], Z)
    # competitors of (1,1) at d=(4,2) need every slot equal or above the cap
    assert is_d_leading(f, (1, 1), (4, 2))
    # at d=(3,1), (4,0) is not excluded: x-slot 4 > 3 and y-slot... 0 != 1
    # and 0 <= 1, so (4,0) fails the pattern and (1,1) is still leading
    assert is_d_leading(f, (1, 1), (3, 1))
    # seed must lie under d
    with pytest.raises(ValueError):
        is_d_leading(f, (1, 1), (0, 2))
    with pytest.raises(ValueError):
        is_d_leading(f, (2, 2), (4, 2))


def test_is_d_leading_rejects():
    f = parse_poly("x*y + x^4*y^2", ["x", "y"], Z)
    # (4,2) exceeds d=(3,1) in every slot, so it beats (1,1)
    assert not is_d_leading(f, (1, 1), (3, 1))
    assert is_d_leading(f, (4, 2), (4, 2))


def test_forbidden_set_maximal_frozen():
    got = forbidden_set(MAXIMAL_MONOMIAL, (1, 1), (2, 2))
    assert got == {(1, 2), (2, 1), (2, 2)}


def test_forbidden_set_total_frozen():
    got = forbidden_set(TOTAL_DEGREE, (1, 1), (2, 2))
    assert got == {(1, 2), (2, 1), (2, 2)}


def test_forbidden_set_partial_frozen():
    got = forbidden_set(PARTIAL_DEGREES, (1, 1), (2, 2))
    assert got == {(0, 2), (1, 2), (2, 0), (2, 1), (2, 2)}


def test_forbidden_set_lex_frozen():
    got = forbidden_set(LEX_LARGEST, (1, 1), (2, 2), order=(0, 1))
    assert got == {(1, 2), (2, 0), (2, 1), (2, 2)}
    got = forbidden_set(LEX_LARGEST, (1, 1), (2, 2), order=(1, 0))
    assert got == {(2, 1), (0, 2), (1, 2), (2, 2)}


def test_forbidden_set_succ_frozen():
    # seed (1,1), d=(2,1), x first: forbidden when x-exp exceeds 2, or
    # x-exp equals the seed and y-exp exceeds 1
    got = forbidden_set(SUCCESSIVELY_LARGEST, (2, 1), (3, 3), e=(1, 1), order=(0, 1))
    assert got == {(3, 0), (3, 1), (3, 2), (3, 3), (1, 2), (1, 3)}


def test_forbidden_set_d_leading_frozen():
    got = forbidden_set(D_LEADING, (2, 1), (3, 3), e=(1, 1))
    assert got == {(1, 2), (1, 3), (3, 1), (3, 2), (3, 3)}


def test_region_identity_maximal_is_lex_intersection():
    # the dominance region equals the intersection of the lex regions
    # over all variable orders
    for n, cap in ((2, (5, 5)), (3, (3, 3, 3))):
        rng = random.Random(n)
        for _ in range(10):
            d = tuple(rng.randrange(c + 1) for c in cap)
            lex = None
            for order in itertools.permutations(range(n)):
                region = forbidden_set(LEX_LARGEST, d, cap, order=order)
                lex = region if lex is None else lex & region
            assert lex == forbidden_set(MAXIMAL_MONOMIAL, d, cap)


def test_region_identity_d_leading_is_succ_intersection():
    for n, cap in ((2, (5, 5)), (3, (3, 3, 3))):
        rng = random.Random(10 + n)
        for _ in range(10):
            d = tuple(rng.randrange(c + 1) for c in cap)
            e = tuple(rng.randrange(di + 1) for di in d)
            succ = None
            for order in itertools.permutations(range(n)):
                region = forbidden_set(SUCCESSIVELY_LARGEST, d, cap, e=e, order=order)
                succ = region if succ is None else succ & region
            assert succ == forbidden_set(D_LEADING, d, cap, e=e)


def test_hypothesis_holds_requires_witness_in_support():
    assert not hypothesis_holds(ELLIPSE, MAXIMAL_MONOMIAL, (2, 1))
    assert not hypothesis_holds(ELLIPSE, LEX_LARGEST, (1, 1), order=(0, 1))
    assert hypothesis_holds(ELLIPSE, LEX_LARGEST, (2, 0), order=(0, 1))
    assert not hypothesis_holds(ELLIPSE, PARTIAL_DEGREES, (2, 1))
    assert hypothesis_holds(ELLIPSE, PARTIAL_DEGREES, (2, 2))
    assert hypothesis_holds(ELLIPSE, TOTAL_DEGREE, (2, 0))
    assert hypothesis_holds(ELLIPSE, TOTAL_DEGREE, (1, 1))
    assert not hypothesis_holds(ELLIPSE, TOTAL_DEGREE, (1, 0))


def test_classify_ellipse_frozen():
    rows = {(r.condition, r.witness_d, r.witness_e, r.order, r.holds) for r in classify(ELLIPSE)}
    assert rows == {
        (MAXIMAL_MONOMIAL, (2, 0), None, None, True),
        (MAXIMAL_MONOMIAL, (1, 1), None, None, True),
        (MAXIMAL_MONOMIAL, (0, 2), None, None, True),
        (LEX_LARGEST, (2, 0), None, (0, 1), True),
        (LEX_LARGEST, (0, 2), None, (1, 0), True),
        (SUCCESSIVELY_LARGEST, (2, 0), (2, 0), (0, 1), True),
        (SUCCESSIVELY_LARGEST, (2, 1), (1, 1), (0, 1), True),
        (SUCCESSIVELY_LARGEST, (2, 2), (0, 2), (0, 1), True),
        (SUCCESSIVELY_LARGEST, (2, 2), (2, 0), (1, 0), True),
        (SUCCESSIVELY_LARGEST, (1, 2), (1, 1), (1, 0), True),
        (SUCCESSIVELY_LARGEST, (0, 2), (0, 2), (1, 0), True),
        (D_LEADING, (0, 2), (0, 2), None, True),
        (D_LEADING, (2, 2), (0, 2), None, True),
        (D_LEADING, (1, 2), (1, 1), None, True),
        (D_LEADING, (2, 1), (1, 1), None, True),
        (D_LEADING, (2, 0), (2, 0), None, True),
        (D_LEADING, (2, 2), (2, 0), None, True),
        (PARTIAL_DEGREES, (2, 2), None, None, True),
        (TOTAL_DEGREE, (2, 0), None, None, True),
    }


def test_classify_deterministic():
    f = parse_poly("x^3*y + y^2 + x*y^2 + 2", ["x", "y"], Z)
    assert classify(f) == classify(f)


def test_classify_holds_flags_true_by_construction():
    # detectors only emit witnesses that pass the definitional re-check
    rng = random.Random(77)
    for _ in range(60):
        f = random_polynomial(2, (5, 5), 0.4, Z, seed=rng.randrange(10**9))
        for rep in classify(f):
            assert rep.holds, rep
            assert rep.condition in CONDITIONS


def test_classify_constant_poly():
    f = Polynomial.constant(2, Z, 3)
    rows = classify(f)
    conds = [r.condition for r in rows]
    assert MAXIMAL_MONOMIAL in conds and TOTAL_DEGREE in conds
    for r in rows:
        assert r.holds
        assert r.witness_d == (0, 0)
