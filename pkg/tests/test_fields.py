import random
from fractions import Fraction
from math import gcd

import pytest

from pgshell import Field, QQ, field_self_check
from pgshell.fields import is_prime


def test_field_kinds():
    assert QQ.kind == "exact-rationals"
    assert Field(32003).kind == "prime-field"
    assert QQ.characteristic == 0


@pytest.mark.parametrize("bad", [4, 2, 9, 15, 2**31 + 11, 32004])
def test_bad_characteristics_rejected(bad):
    with pytest.raises(ValueError):
        Field(bad)


def test_primality():
    assert is_prime(2) and is_prime(3) and is_prime(32003)
    assert not is_prime(1) and not is_prime(0) and not is_prime(32001)


def test_field_axioms_rationals():
    field_self_check(QQ, samples=1000, seed=20240811)


def test_field_axioms_prime():
    field_self_check(Field(32003), samples=1000, seed=20240811)


def test_rationals_stay_reduced():
    rng = random.Random(3)
    for _ in range(200):
        a = QQ.of(rng.randint(-40, 40), rng.randint(1, 30))
        b = QQ.of(rng.randint(-40, 40), rng.randint(1, 30))
        for value in (QQ.add(a, b), QQ.mul(a, b), QQ.sub(a, b)):
            assert isinstance(value, Fraction)
            assert value.denominator > 0
            assert gcd(value.numerator, value.denominator) == 1


def test_prime_field_representatives():
    f = Field(5)
    assert f.of(7) == 2
    assert f.of(-1) == 4
    assert f.of(1, 2) == 3  # 1/2 = 3 mod 5
    assert f.inv(3) == 2
    with pytest.raises(ZeroDivisionError):
        f.of(1, 5)
