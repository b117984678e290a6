"""Graded polynomial rings: variables, weights, and monomial orders.

Monomials are plain exponent tuples.  The ring object owns every
monomial-level operation (degree, order key, divisibility) so the
polynomial layer never needs to know about weights or order tags.

Orders:

* ``grevlex`` -- (weighted-)degree first, ties by reverse lexicographic
  with the first variable largest.  The default everywhere.
* ``elim_last`` -- eliminates the last variable: any monomial containing
  it beats any monomial free of it, with grevlex inside each block.
  Used internally for colon/saturation computations.
"""

from __future__ import annotations

import itertools
from math import comb

from .errors import EngineError
from .fields import Field

Monomial = tuple  # exponent tuple, length == num_vars

ORDERS = ("grevlex", "elim_last")


class PolyRing:
    """Descriptor of k[z_0..z_N] with positive integer weights and an order."""

    __slots__ = (
        "field", "names", "weights", "order", "num_vars", "standard_graded",
        "_key_cache",
    )

    def __init__(self, field: Field, names, weights=None, order: str = "grevlex"):
        names = tuple(names)
        if len(names) < 1:
            raise EngineError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise EngineError(f"duplicate variable names: {names}")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise EngineError("one weight per variable required")
        if any(w < 1 for w in weights):
            raise EngineError(f"weights must be positive, got {weights}")
        if order not in ORDERS:
            raise EngineError(f"unknown monomial order {order!r}")
        self.field = field
        self.names = names
        self.weights = weights
        self.order = order
        self.num_vars = len(names)
        self.standard_graded = all(w == 1 for w in weights)
        self._key_cache = {}

    # -- identity ------------------------------------------------------------

    def _sig(self):
        return (self.field, self.names, self.weights, self.order)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other._sig() == self._sig()

    def __hash__(self):
        return hash(self._sig())

    def __repr__(self):
        base = repr(self.field)
        vars_ = ",".join(
            n if w == 1 else f"{n}:{w}" for n, w in zip(self.names, self.weights)
        )
        return f"{base}[{vars_}]"

    # -- monomials -----------------------------------------------------------

    @property
    def one_mono(self) -> Monomial:
        return (0,) * self.num_vars

    def variable_mono(self, i: int) -> Monomial:
        e = [0] * self.num_vars
        e[i] = 1
        return tuple(e)

    def mono_degree(self, mono: Monomial) -> int:
        if self.standard_graded:
            return sum(mono)
        return sum(w * e for w, e in zip(self.weights, mono))

    def sort_key(self, mono: Monomial):
        """Key with bigger monomial (in the ring order) == bigger key.

        Memoized per ring: the same monomials recur constantly in
        division loops, and building the key tuples dominates there.
        """
        k = self._key_cache.get(mono)
        if k is not None:
            return k
        if self.order == "grevlex":
            k = (self.mono_degree(mono), tuple(-e for e in reversed(mono)))
        else:
            # elim_last: last-variable exponent dominates, grevlex on the rest
            head = mono[:-1]
            hdeg = sum(w * e for w, e in zip(self.weights[:-1], head))
            k = (mono[-1], hdeg, tuple(-e for e in reversed(head)))
        self._key_cache[mono] = k
        return k

    @staticmethod
    def mono_mul(a: Monomial, b: Monomial) -> Monomial:
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def mono_divides(a: Monomial, b: Monomial) -> bool:
        """a | b componentwise."""
        return all(x <= y for x, y in zip(a, b))

    @staticmethod
    def mono_div(a: Monomial, b: Monomial):
        """a / b, or None if b does not divide a."""
        q = []
        for x, y in zip(a, b):
            if y > x:
                return None
            q.append(x - y)
        return tuple(q)

    @staticmethod
    def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
        return tuple(max(x, y) for x, y in zip(a, b))

    def monomials_of_degree(self, m: int) -> list:
        """All monomials of weighted degree exactly m, largest first.

        Standard-graded count is C(m+N, N); asserted cheap to catch
        enumeration bugs.
        """
        if m < 0:
            return []
        out = []
        n = self.num_vars
        weights = self.weights

        def rec(i, remaining, prefix):
            if i == n - 1:
                if remaining % weights[i] == 0:
                    out.append(prefix + (remaining // weights[i],))
                return
            w = weights[i]
            for e in range(remaining // w, -1, -1):
                rec(i + 1, remaining - e * w, prefix + (e,))

        rec(0, m, ())
        if self.standard_graded:
            assert len(out) == comb(m + n - 1, n - 1)
        out.sort(key=self.sort_key, reverse=True)
        return out

    def dim_degree(self, m: int) -> int:
        """dim_k S_m."""
        if m < 0:
            return 0
        if self.standard_graded:
            return comb(m + self.num_vars - 1, self.num_vars - 1)
        return len(self.monomials_of_degree(m))

    def mono_str(self, mono: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    # -- derived rings -------------------------------------------------------

    def extended_elimination_ring(self, extra_name: str = "_t") -> "PolyRing":
        """Adjoin one auxiliary variable, eliminated by the order."""
        name = extra_name
        while name in self.names:
            name += "_"
        return PolyRing(
            self.field,
            self.names + (name,),
            self.weights + (1,),
            order="elim_last",
        )


def standard_ring(num_vars: int, field: Field | None = None, prefix: str = "z") -> PolyRing:
    """k[z0..z_{num_vars-1}], standard graded, grevlex."""
    if field is None:
        field = Field(0)
    return PolyRing(field, tuple(f"{prefix}{i}" for i in range(num_vars)))


def all_monomials_up_to(ring: PolyRing, m: int):
    """(degree, monomial) pairs for every degree <= m, by degree then order."""
    return itertools.chain.from_iterable(
        ((d, mono) for mono in ring.monomials_of_degree(d)) for d in range(m + 1)
    )
