from pgshell import Ideal, betti, koszul_tor, minimal_resolution, regularity_and_depth
from pgshell.koszul import koszul_context, taylor_degree_bound, tor_comparison


def test_tor_examples(twisted_cubic):
    assert koszul_tor(twisted_cubic, 1, 2).dimension == 3
    assert koszul_tor(twisted_cubic, 0, 0).dimension == 1
    assert koszul_tor(twisted_cubic, 2, 4).dimension == 0


def test_tor_zero_in_degree_zero_everywhere(twisted_cubic, ci23):
    for ideal in (twisted_cubic, ci23.ideal):
        assert koszul_tor(ideal, 0, 0).dimension == 1
        for m in range(1, 4):
            assert koszul_tor(ideal, 0, m).dimension == 0


def test_cycle_basis_sizes(twisted_cubic):
    piece = koszul_tor(twisted_cubic, 2, 3)
    assert piece.dimension == 2
    assert len(piece.cycle_basis) == 2
    # representatives are cycles: d_q kills them
    ctx = koszul_context(twisted_cubic)
    rows = ctx.differential(2, 3)
    for z in piece.cycle_basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, z)) == 0


def test_oracle_matches_resolution_on_corpus(catalog_items):
    for name, ideal in catalog_items.items():
        bt = betti(minimal_resolution(ideal))
        reg = regularity_and_depth(bt, ideal.ring)[0]
        pd = bt.max_q()
        for q in range(pd + 1):
            support = bt.row_support(q)
            top = max(support) if support else q
            for m in range(0, min(top, reg + q) + 2):
                assert koszul_tor(ideal, q, m).dimension == bt.get(q, m), (
                    name,
                    q,
                    m,
                )
        # one homological step beyond the projective dimension
        assert koszul_tor(ideal, pd + 1, reg + pd + 1).dimension == 0


def test_taylor_bound_covers_support(catalog_items):
    for name, ideal in catalog_items.items():
        bt = betti(minimal_resolution(ideal))
        for (q, m), v in bt.entries.items():
            if q >= 1 and v:
                assert taylor_degree_bound(ideal, q) >= m, (name, q, m)


def test_tor_comparison_positive(twisted_cubic, tc_quadrics):
    w = Ideal(twisted_cubic.ring, [tc_quadrics[0]])
    comp = tor_comparison(twisted_cubic, w, 1, 2)
    assert comp.dim_source == 1 and comp.dim_target == 3
    assert comp.injective and comp.witness is None


def test_tor_comparison_negative_with_verified_witness(R4, zvars, twisted_cubic, tc_quadrics):
    z = zvars
    w = Ideal(R4, [z[3] * tc_quadrics[0]])
    comp = tor_comparison(twisted_cubic, w, 1, 3)
    assert not comp.injective
    assert comp.witness is not None
    assert comp.witness["q"] == 1 and comp.witness["m"] == 3
    assert any(c != 0 for c in comp.witness["cycle"])
