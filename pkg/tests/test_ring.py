import random

import pytest

from nullgrid.errors import RingMismatchError, UnsupportedRingError
from nullgrid.ring import RingSpec, grid_condition_check, is_prime


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-3, 50):
        assert is_prime(n) == (n in primes)


def test_is_prime_large():
    assert is_prime(2**31 - 1)
    assert not is_prime(2**31)
    assert is_prime(1_000_000_007)
    # Carmichael numbers must not fool the test
    for n in (561, 1105, 1729, 41041, 825265):
        assert not is_prime(n)


def test_is_prime_against_sieve():
    limit = 2000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    for n in range(limit):
        assert is_prime(n) == sieve[n], n


def test_ringspec_constructors():
    fp = RingSpec.prime_field(7)
    assert fp.kind == "fp" and fp.modulus == 7 and fp.is_field
    z = RingSpec.integers()
    assert z.kind == "int" and z.modulus is None and not z.is_field
    zm = RingSpec.integers_mod(6)
    assert zm.kind == "zmod" and zm.modulus == 6 and not zm.is_field

    with pytest.raises(ValueError):
        RingSpec.prime_field(6)
    with pytest.raises(ValueError):
        RingSpec.integers_mod(1)
    # prime moduli are fine for zmod too, they just stay kind zmod
    assert not RingSpec.integers_mod(7).is_field


def test_ringspec_from_string_roundtrip():
    for text in ("fp:7", "int", "zmod:6", "fp:101"):
        assert str(RingSpec.from_string(text)) == text
    for bad in ("fp:6", "zmod:0", "gf:7", "fp:", "fp:x", ""):
        with pytest.raises(ValueError):
            RingSpec.from_string(bad)


def test_canon_and_arithmetic_fp():
    fp = RingSpec.prime_field(5)
    assert fp.canon(-1) == 4
    assert fp.canon(12) == 2
    assert fp.add(3, 4) == 2
    assert fp.mul(3, 4) == 2
    assert fp.sub(1, 3) == 3
    assert fp.neg(2) == 3
    assert fp.pow(2, 10) == 4
    assert fp.invert(3) == 2  # 3*2 = 6 = 1 mod 5
    with pytest.raises(ZeroDivisionError):
        fp.invert(0)


def test_canon_and_arithmetic_int():
    z = RingSpec.integers()
    assert z.canon(-7) == -7
    assert z.add(3, 4) == 7
    assert z.mul(-3, 4) == -12
    with pytest.raises(UnsupportedRingError):
        z.invert(2)


def test_zmod_zero_divisors():
    zm = RingSpec.integers_mod(6)
    for v, expected in ((0, True), (1, False), (2, True), (3, True), (4, True), (5, False)):
        assert zm.is_zero_divisor(v) == expected
    fp = RingSpec.prime_field(7)
    assert fp.is_zero_divisor(0)
    assert not fp.is_zero_divisor(3)
    z = RingSpec.integers()
    assert z.is_zero_divisor(0)
    assert not z.is_zero_divisor(5)


def test_elem_operators():
    fp = RingSpec.prime_field(11)
    a = fp.element(4)
    b = fp.element(9)
    assert (a + b).value == 2
    assert (a - b).value == 6
    assert (a * b).value == 3
    assert (-a).value == 7
    assert (a ** 5).value == pow(4, 5, 11)
    assert a == 4 and a == fp.element(15)
    assert int(a) == 4
    assert bool(fp.element(0)) is False

    other = RingSpec.prime_field(13).element(4)
    with pytest.raises(RingMismatchError):
        _ = a + other


def test_elem_int_mixing():
    z = RingSpec.integers()
    a = z.element(5)
    assert (a + 2).value == 7
    assert (2 + a).value == 7
    assert (a * -1).value == -5
    assert a == 5


def test_field_inverse_random():
    rng = random.Random(7)
    for p in (5, 13, 101):
        fp = RingSpec.prime_field(p)
        for _ in range(50):
            a = rng.randrange(1, p)
            assert fp.mul(a, fp.invert(a)) == 1


def test_grid_condition_check():
    z = RingSpec.integers()
    assert grid_condition_check(z, [[0, 1, 2], [-5, 7]]).ok

    fp = RingSpec.prime_field(5)
    assert grid_condition_check(fp, [[0, 1, 2, 3, 4]]).ok
    # 0 and 5 collide after canonicalization: difference is zero
    res = grid_condition_check(fp, [[0, 5]])
    assert not res.ok
    assert res.failures[0][0] == 0

    zm = RingSpec.integers_mod(6)
    assert grid_condition_check(zm, [[0, 1]]).ok
    res = grid_condition_check(zm, [[0, 2, 4]])
    assert not res.ok
    # every pairwise difference is even, so all three pairs fail
    assert len(res.failures) == 3
    assert "zero-divisor difference" in res.describe()
