"""Exact coefficient fields: the rationals and odd prime fields.

Field elements are plain Python values -- ``Fraction`` for the rationals
(always stored reduced with positive denominator, which Fraction
guarantees), ``int`` in ``[0, p)`` for GF(p) -- so the polynomial layer
stays allocation-light.  A ``Field`` instance is the arithmetic context.
"""

from __future__ import annotations

from fractions import Fraction

MAX_CHARACTERISTIC = 2**31
DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (enough below 2^31)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Arithmetic context for an exact field, selected by characteristic.

    characteristic 0 is the rationals ("exact-rationals"); an odd prime
    p < 2^31 gives GF(p) ("prime-field", labeled probabilistic by report
    layers since Betti numbers may drop under reduction mod p).
    """

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0:
            p = characteristic
            if p == 2 or p >= MAX_CHARACTERISTIC or not is_prime(p):
                raise ValueError(
                    f"characteristic must be 0 or an odd prime < 2^31, got {p}"
                )
        self.characteristic = characteristic

    @property
    def kind(self) -> str:
        return "exact-rationals" if self.characteristic == 0 else "prime-field"

    # -- element constructors ------------------------------------------------

    def of(self, numerator, denominator=1):
        """Build a field element from an integer (or Fraction) ratio."""
        p = self.characteristic
        if p == 0:
            return Fraction(numerator, denominator)
        num = numerator % p
        if denominator == 1:
            return num
        den = denominator % p
        if den == 0:
            raise ZeroDivisionError("denominator divisible by the characteristic")
        return (num * pow(den, -1, p)) % p

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        if self.characteristic == 0:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.characteristic == 0:
            return a - b
        return (a - b) % self.characteristic

    def neg(self, a):
        if self.characteristic == 0:
            return -a
        return (-a) % self.characteristic

    def mul(self, a, b):
        if self.characteristic == 0:
            return a * b
        return (a * b) % self.characteristic

    def inv(self, a):
        if self.characteristic == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / a
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        if self.characteristic == 0:
            if b == 0:
                raise ZeroDivisionError("division by zero")
            return a / b
        return (a * pow(b, -1, self.characteristic)) % self.characteristic

    # -- misc ----------------------------------------------------------------

    def coeff_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def field_self_check(field: Field, samples: int = 1000, seed: int = 0) -> None:
    """Spot-check the field axioms on pseudo-random triples.

    Raises InternalCheckError on any violation; used by the CLI
    --field-check flag and by the test suite.
    """
    import random

    from .errors import InternalCheckError

    rng = random.Random(seed)
    p = field.characteristic

    def rand_elt():
        if p == 0:
            return Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        return rng.randrange(p)

    zero, one = field.zero, field.one
    for _ in range(samples):
        a, b, c = rand_elt(), rand_elt(), rand_elt()
        checks = [
            field.add(field.add(a, b), c) == field.add(a, field.add(b, c)),
            field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c)),
            field.add(a, b) == field.add(b, a),
            field.mul(a, b) == field.mul(b, a),
            field.mul(a, field.add(b, c))
            == field.add(field.mul(a, b), field.mul(a, c)),
            field.add(a, field.neg(a)) == zero,
            field.mul(a, one) == a,
        ]
        if a != zero:
            checks.append(field.mul(a, field.inv(a)) == one)
        if p == 0:
            # reduced fraction with positive denominator
            f = field.mul(a, b)
            from math import gcd

            checks.append(f.denominator > 0)
            checks.append(gcd(f.numerator, f.denominator) == 1)
        if not all(checks):
            raise InternalCheckError(f"field axiom violation for {field} on {(a, b, c)}")
