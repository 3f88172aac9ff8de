import random
from fractions import Fraction as F

import pytest

from vforge import INFINITY, Value, value_max, value_min


def test_lexicographic_order():
    assert Value(F(3, 4), F(1, 2)) < Value(F(3, 2), 0)
    assert Value(F(3, 2), 0) < Value(F(3, 2), 1)
    assert INFINITY > Value(10**6, 0)


def test_infinity_absorbs_addition():
    assert (INFINITY + Value(1)).infinite
    assert (Value(2, 3) + INFINITY).infinite


def test_componentwise_arithmetic():
    assert Value(F(3, 2), 0) + Value(0, 1) == Value(F(3, 2), 1)
    assert Value(F(3, 2), 1).scale(F(1, 2)) == Value(F(3, 4), F(1, 2))
    assert value_min(Value(1, 0), Value(0, 1)) == Value(0, 1)


def test_scaling_infinity_by_zero_rejected():
    with pytest.raises(ArithmeticError):
        INFINITY.scale(0)


def test_parse_print_roundtrip():
    for text in ["3/2", "3/2 + 1/2t", "0", "-1", "-1 - 2t", "inf", "3/2 + 1 t", "5 + t"]:
        v = Value.parse(text)
        again = Value.parse(str(v))
        assert v == again


def test_rationality_detection():
    assert Value(F(1, 2)).is_rational
    assert not Value(F(1, 2), F(1, 3)).is_rational
    assert not INFINITY.is_rational


def test_total_order_and_min_membership():
    rng = random.Random(42)
    vals = [Value(F(rng.randint(-9, 9), rng.randint(1, 9)), F(rng.randint(-9, 9), rng.randint(1, 9)))
            for _ in range(60)] + [INFINITY]
    for _ in range(300):
        a, b, c = rng.choice(vals), rng.choice(vals), rng.choice(vals)
        # totality and antisymmetry
        assert (a < b) + (b < a) + (a == b) == 1
        # transitivity
        if a < b and b < c:
            assert a < c
        assert value_min(a, b) in (a, b)
        assert value_max(a, b) in (a, b)


def test_addition_laws():
    rng = random.Random(7)
    for _ in range(200):
        a = Value(F(rng.randint(-9, 9), rng.randint(1, 4)), F(rng.randint(-9, 9), rng.randint(1, 4)))
        b = Value(F(rng.randint(-9, 9), rng.randint(1, 4)), F(rng.randint(-9, 9), rng.randint(1, 4)))
        c = Value(F(rng.randint(-9, 9), rng.randint(1, 4)), F(rng.randint(-9, 9), rng.randint(1, 4)))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a + b - b == a
