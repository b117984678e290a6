import random

import pytest

from pgshell import (
    Ideal,
    Polynomial,
    complete_intersection,
    points_on_rational_normal_curve,
    rational_normal_curve,
    scroll_surface,
    standard_ring,
    twisted_cubic_cone_p5,
    veronese_surface,
)
from pgshell.linalg import determinant


@pytest.fixture(scope="session")
def R4():
    return standard_ring(4)


@pytest.fixture(scope="session")
def zvars(R4):
    return [Polynomial.variable(R4, i) for i in range(4)]


@pytest.fixture(scope="session")
def tc_quadrics(R4, zvars):
    z = zvars
    return (
        z[0] * z[2] - z[1] * z[1],
        z[1] * z[3] - z[2] * z[2],
        z[0] * z[3] - z[1] * z[2],
    )


@pytest.fixture(scope="session")
def twisted_cubic(R4, tc_quadrics):
    return Ideal(R4, list(tc_quadrics))


@pytest.fixture(scope="session")
def ci23():
    return complete_intersection([2, 3], seed=1)


@pytest.fixture(scope="session")
def rnc4_entry():
    return rational_normal_curve(4)


@pytest.fixture(scope="session")
def veronese_entry():
    return veronese_surface()


@pytest.fixture(scope="session")
def scroll_entry():
    return scroll_surface()


@pytest.fixture(scope="session")
def points5_entry():
    return points_on_rational_normal_curve(3, 5)


@pytest.fixture(scope="session")
def tensor_pair():
    """(Y, Z) in P^5: the twisted-cubic cone and a codim-2 linear space."""
    y = twisted_cubic_cone_p5()
    ring = y.ring
    z4 = Polynomial.variable(ring, 4)
    z5 = Polynomial.variable(ring, 5)
    return y.ideal, Ideal(ring, [z4, z5])


@pytest.fixture(scope="session")
def catalog_items(twisted_cubic, ci23, rnc4_entry, veronese_entry, scroll_entry, points5_entry):
    return {
        "twisted-cubic": twisted_cubic,
        "ci23": ci23.ideal,
        "rnc4": rnc4_entry.ideal,
        "veronese": veronese_entry.ideal,
        "scroll12": scroll_entry.ideal,
        "points5": points5_entry.ideal,
    }


def random_invertible(rng: random.Random, n: int, field):
    """Deterministic small-entry invertible matrix over the field."""
    while True:
        m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        rows = [[field.of(x) for x in row] for row in m]
        if determinant(rows, field) != field.zero:
            return m


def recombine_generators(I: Ideal, rng: random.Random) -> Ideal:
    """Replace generators by random invertible combinations, degree by degree."""
    ring = I.ring
    by_degree = {}
    for g in I.generators:
        by_degree.setdefault(g.homogeneous_degree(), []).append(g)
    new_gens = []
    for d in sorted(by_degree):
        gens = by_degree[d]
        k = len(gens)
        m = random_invertible(rng, k, ring.field)
        for i in range(k):
            acc = Polynomial.zero(ring)
            for j in range(k):
                if m[i][j]:
                    acc = acc + gens[j].scale(ring.field.of(m[i][j]))
            new_gens.append(acc)
    return Ideal(ring, new_gens)
