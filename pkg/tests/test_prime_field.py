"""Prime-field (probabilistic) mode exercised across the whole stack.

At desk scale the corpus has no bad primes, so GF(32003) must reproduce
the rational Betti tables and shell verdicts exactly; the CLI labels
the arithmetic as probabilistic.
"""

import io

import pytest

from pgshell import (
    Field,
    Ideal,
    Polynomial,
    betti,
    groebner_basis,
    hilbert_function,
    invariants,
    minimal_resolution,
    pgshell_check,
    pgshell_check_oracle,
    rational_normal_curve,
    standard_ring,
)
from pgshell.cli import run_command
from pgshell.shell import NOT_PG_SHELL, PG_SHELL

GF = Field(32003)


@pytest.fixture(scope="module")
def tc_mod_p():
    ring = standard_ring(4, GF)
    z = [Polynomial.variable(ring, i) for i in range(4)]
    gens = [
        z[0] * z[2] - z[1] * z[1],
        z[1] * z[3] - z[2] * z[2],
        z[0] * z[3] - z[1] * z[2],
    ]
    return ring, z, Ideal(ring, gens)


def test_groebner_mod_p(tc_mod_p):
    _, _, tc = tc_mod_p
    gb = groebner_basis(tc)
    assert len(gb.elements) == 3
    for g in gb.elements:
        assert g.lead_coeff() == 1


def test_betti_and_invariants_mod_p(tc_mod_p):
    _, _, tc = tc_mod_p
    assert betti(minimal_resolution(tc)).entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    inv = invariants(tc)
    assert (inv.dim, inv.degree, inv.depth, inv.reg_R) == (1, 3, 2, 1)
    h = hilbert_function(tc, 10)
    assert [h.values[m] for m in range(5)] == [1, 4, 7, 10, 13]


def test_rnc4_mod_p():
    entry = rational_normal_curve(4, GF)
    assert betti(minimal_resolution(entry.ideal)).entries == {
        (0, 0): 1,
        (1, 2): 6,
        (2, 3): 8,
        (3, 4): 3,
    }


def test_shell_verdicts_mod_p(tc_mod_p):
    ring, z, tc = tc_mod_p
    q1 = tc.generators[0]
    pos_chain = pgshell_check(tc, Ideal(ring, [q1]), oracle_spot=False)
    pos_oracle = pgshell_check_oracle(tc, Ideal(ring, [q1]))
    assert pos_chain.verdict == PG_SHELL == pos_oracle.verdict
    assert pos_chain.table == pos_oracle.table
    neg = pgshell_check(tc, Ideal(ring, [z[3] * q1]), oracle_spot=True)
    assert neg.verdict == NOT_PG_SHELL
    assert neg.witness is not None


def test_cli_labels_probabilistic(tmp_path):
    src = (
        "ring S = ZZ/32003[z0,z1,z2,z3];\n"
        "ideal V = z0*z2 - z1^2, z1*z3 - z2^2, z0*z3 - z1*z2;\n"
        "ideal W = z0*z2 - z1^2;\n"
    )
    path = tmp_path / "modp.ideal"
    path.write_text(src)
    buf = io.StringIO()
    code = run_command(["pgshell", str(path), "V", "W"], out=buf)
    assert code == 0
    assert "probabilistic (prime field 32003)" in buf.getvalue()
    buf = io.StringIO()
    run_command(["invariants", str(path), "V"], out=buf)
    assert "probabilistic" in buf.getvalue()
