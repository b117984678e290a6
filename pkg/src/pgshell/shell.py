"""The shell predicate and its criteria suite.

W is a pregeometric shell of V (for ideals I_W <= I_V, i.e. V inside W)
when every comparison map on Tor against the residue field,

    mu_q : Tor_q(S/I_W, k) -> Tor_q(S/I_V, k),   q >= 1,

is injective.  Two independent routes are implemented:

* chain-map: lift the quotient surjection to a degree-0 chain map of
  minimal free resolutions and reduce mod S_+ (minimality makes the
  reduction canonical, not just rank-canonical);
* koszul-oracle: realize mu_q on Koszul homology of the variable
  sequence, resolution-free.

Negative verdicts always carry an oracle-verified witness: a nonzero
source Tor class mapped to zero.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .errors import (
    ContainmentError,
    EngineError,
    InternalCheckError,
    PreconditionError,
    RingMismatchError,
    WeightedRingError,
)
from .groebner import (
    block_key,
    graded_piece_dim,
    groebner_basis,
    is_minimal_generator,
    membership,
    module_groebner,
    reduce_vector,
    same_ideal,
    vector_lead,
)
from .hilbert import dimension_degree, hilbert_function
from .koszul import koszul_tor, taylor_degree_bound, tor_comparison
from .linalg import RowSpace, rank
from .modules import GradedFreeModule, GradedMatrix
from .poly import Ideal, Polynomial
from .resolution import (
    BettiTable,
    FreeResolution,
    betti,
    minimal_generators,
    minimal_resolution,
    regularity_and_depth,
    verify_complex,
)

PG_SHELL = "pg-shell"
NOT_PG_SHELL = "not-pg-shell"


# ---------------------------------------------------------------------------
# containment and chain maps


def check_containment(I_V: Ideal, I_W: Ideal) -> bool:
    """True iff I_W <= I_V as ideals (the schemes satisfy V inside W)."""
    if I_V.ring != I_W.ring:
        raise RingMismatchError("ideals live in different rings")
    gb_v = groebner_basis(I_V)
    return all(membership(g, gb_v) for g in I_W.generators)


class ChainMap:
    """Degree-0 lift phi of the surjection S/I_W ->> S/I_V.

    maps[q] : F_q (resolution of S/I_W) -> G_q (resolution of S/I_V);
    commutation with the differentials is verified exactly on
    construction.
    """

    __slots__ = ("source", "target", "maps")

    def __init__(self, source: FreeResolution, target: FreeResolution, maps):
        self.source = source
        self.target = target
        self.maps = tuple(maps)
        self._verify()

    def map(self, q: int) -> GradedMatrix:
        if q < len(self.maps):
            return self.maps[q]
        ring = self.source.ring
        src = self.source.module(q)
        tgt = self.target.module(q)
        zero = Polynomial.zero(ring)
        return GradedMatrix(ring, src, tgt, [[zero] * src.rank for _ in range(tgt.rank)])

    def _verify(self):
        for q in range(1, self.source.length + 1):
            lhs = self.target.differential(q).compose(self.map(q))
            rhs = self.map(q - 1).compose(self.source.differential(q))
            if lhs.entries != rhs.entries:
                raise InternalCheckError(f"chain map fails to commute at q={q}")


def _extended_column_basis(M: GradedMatrix):
    """Groebner data for membership-with-quotients in the column module."""
    ring = M.ring
    r = M.target.rank
    s = M.source.rank
    extended = []
    for j in range(s):
        v = {}
        for i, p in enumerate(M.column(j)):
            for m, c in p.terms.items():
                v[(m, i)] = c
        v[(ring.one_mono, r + j)] = ring.field.one
        extended.append(v)
    key = block_key(ring, r)
    gb = module_groebner(extended, ring, rank=r + s, key=key)
    leads = [(vector_lead(v, key), v[vector_lead(v, key)]) for v in gb]
    return gb, leads, key


def _solve_in_image(M: GradedMatrix, target_vec, ext):
    """x with M x = target_vec, or None; target_vec is a list of polys."""
    ring = M.ring
    gb, leads, key = ext
    r = M.target.rank
    s = M.source.rank
    u = {}
    for i, p in enumerate(target_vec):
        for m, c in p.terms.items():
            u[(m, i)] = c
    if not u:
        return [Polynomial.zero(ring)] * s
    rem = reduce_vector(u, gb, leads, key, ring)
    if any(p < r for (_, p) in rem):
        return None
    neg = ring.field.neg
    cols = []
    for j in range(s):
        terms = {m: neg(c) for (m, p), c in rem.items() if p == r + j}
        cols.append(Polynomial(ring, terms))
    return cols


def lift_chain_map(res_W: FreeResolution, res_V: FreeResolution) -> ChainMap:
    """Inductive degree-0 lift of S/I_W ->> S/I_V over minimal resolutions."""
    if res_W.ring != res_V.ring:
        raise RingMismatchError("resolutions over different rings")
    if not check_containment(res_V.resolved, res_W.resolved):
        raise ContainmentError("the resolved ideals do not satisfy I_W <= I_V")
    ring = res_W.ring
    one = Polynomial.constant(ring, 1)
    maps = [GradedMatrix(ring, res_W.module(0), res_V.module(0), [[one]])]
    for q in range(1, res_W.length + 1):
        f_q = res_W.module(q)
        g_q = res_V.module(q)
        u = maps[q - 1].compose(res_W.differential(q))
        if g_q.rank == 0:
            if not u.is_zero():
                raise InternalCheckError(
                    f"no lift possible at q={q}: target module vanished early"
                )
            maps.append(GradedMatrix(ring, f_q, g_q, []))
            continue
        d_g = res_V.differential(q)
        ext = _extended_column_basis(d_g)
        columns = []
        for j in range(f_q.rank):
            col = _solve_in_image(d_g, u.column(j), ext)
            if col is None:
                raise InternalCheckError(
                    f"lift infeasible at q={q}, column {j} (should never happen)"
                )
            columns.append(col)
        phi = GradedMatrix.from_columns(ring, f_q, g_q, columns)
        phi.validate_degrees()
        maps.append(phi)
    return ChainMap(res_W, res_V, maps)


class TorMap:
    """mu_q as per-degree scalar blocks of a chain map reduced mod S_+."""

    __slots__ = ("q", "blocks")

    def __init__(self, q: int, blocks: dict):
        self.q = q
        self.blocks = blocks  # m -> (rows, source_dim, target_dim)

    @classmethod
    def from_chain_map(cls, cm: ChainMap, q: int) -> "TorMap":
        phi = cm.map(q)
        field = cm.source.ring.field
        src_tw = phi.source.twists
        tgt_tw = phi.target.twists
        blocks = {}
        for m in sorted(set(src_tw)):
            src_idx = [j for j, t in enumerate(src_tw) if t == m]
            tgt_idx = [i for i, t in enumerate(tgt_tw) if t == m]
            rows = [
                [phi.entries[i][j].constant_coeff() for j in src_idx]
                for i in tgt_idx
            ]
            blocks[m] = (rows, len(src_idx), len(tgt_idx))
        return cls(q, blocks)

    def injective_at(self, m: int, field) -> bool:
        rows, src_dim, _ = self.blocks[m]
        return rank(rows, field) == src_dim


class ShellReport:
    """Outcome of a shell check: verdict, per-(q, m) table, witness."""

    __slots__ = ("verdict", "method", "table", "witness", "warnings")

    def __init__(self, verdict, method, table, witness=None, warnings=None):
        self.verdict = verdict
        self.method = method
        self.table = table
        self.witness = witness
        self.warnings = list(warnings or [])

    @property
    def is_shell(self) -> bool:
        return self.verdict == PG_SHELL

    def table_json(self):
        out = []
        for (q, m) in sorted(self.table):
            cell = self.table[(q, m)]
            out.append(
                {
                    "q": q,
                    "m": m,
                    "tor_W": cell["source_dim"],
                    "tor_V": cell["target_dim"],
                    "injective": cell["injective"],
                }
            )
        return out

    def __repr__(self):
        return f"ShellReport({self.verdict}, method={self.method})"


def _witness_payload(witness, ring) -> dict:
    """Human-readable rendering of an oracle witness cycle."""
    labels = witness["labels"]
    cycle = witness["cycle"]
    parts = []
    for idx, c in enumerate(cycle):
        if c == 0:
            continue
        T, mono = labels[idx]
        wedge = "^".join(f"e[{ring.names[t]}]" for t in T) or "1"
        parts.append(f"({c})*{wedge}(x){ring.mono_str(mono)}")
    return {
        "q": witness["q"],
        "m": witness["m"],
        "cycle": " + ".join(parts),
    }


def _require_proper(I: Ideal, name: str):
    if I.contains_unit() or groebner_basis(I).is_unit_ideal():
        raise PreconditionError(f"ideal {name} is the unit ideal (empty scheme)")


def pgshell_check(I_V: Ideal, I_W: Ideal, oracle_spot: bool = True) -> ShellReport:
    """Shell verdict via the chain-map route.

    When `oracle_spot` is set, the q = 1 blocks (and any failing block)
    are cross-checked against the Koszul oracle; disagreement raises
    InternalCheckError.
    """
    if not check_containment(I_V, I_W):
        raise ContainmentError("I_W is not contained in I_V")
    _require_proper(I_V, "V")
    _require_proper(I_W, "W")
    res_w = minimal_resolution(I_W)
    res_v = minimal_resolution(I_V)
    cm = lift_chain_map(res_w, res_v)
    field = I_V.ring.field
    table = {}
    failing = None
    for q in range(1, res_w.length + 1):
        tor = TorMap.from_chain_map(cm, q)
        for m in sorted(tor.blocks):
            rows, src_dim, tgt_dim = tor.blocks[m]
            inj = rank(rows, field) == src_dim
            table[(q, m)] = {
                "source_dim": src_dim,
                "target_dim": tgt_dim,
                "injective": inj,
            }
            if not inj and failing is None:
                failing = (q, m)
    witness = None
    if failing is not None:
        comp = tor_comparison(I_V, I_W, *failing)
        if comp.injective:
            raise InternalCheckError(
                f"chain-map found a kernel at {failing} but the oracle disagrees"
            )
        witness = _witness_payload(comp.witness, I_V.ring)
    if oracle_spot:
        for (q, m) in sorted(table):
            if q != 1:
                continue
            comp = tor_comparison(I_V, I_W, q, m)
            cell = table[(q, m)]
            if comp.dim_source != cell["source_dim"] or comp.injective != cell["injective"]:
                raise InternalCheckError(
                    f"oracle spot-check disagrees with the chain map at (q={q}, m={m})"
                )
    verdict = NOT_PG_SHELL if failing else PG_SHELL
    return ShellReport(verdict, "chain-map", table, witness)


def pgshell_check_oracle(I_V: Ideal, I_W: Ideal) -> ShellReport:
    """Shell verdict via Koszul homology only (no resolutions).

    The sweep range comes from the lead-term (Taylor) bound on the
    source Betti support, which is independent of any resolution.
    """
    if not check_containment(I_V, I_W):
        raise ContainmentError("I_W is not contained in I_V")
    _require_proper(I_V, "V")
    _require_proper(I_W, "W")
    ring = I_W.ring
    gb_w = groebner_basis(I_W)
    table = {}
    failing = None
    witness = None
    max_q = min(ring.num_vars, len(gb_w.elements))
    for q in range(1, max_q + 1):
        bound = taylor_degree_bound(I_W, q)
        for m in range(0, bound + 1):
            if koszul_tor(I_W, q, m).dimension == 0:
                continue
            comp = tor_comparison(I_V, I_W, q, m)
            table[(q, m)] = {
                "source_dim": comp.dim_source,
                "target_dim": comp.dim_target,
                "injective": comp.injective,
            }
            if not comp.injective and failing is None:
                failing = (q, m)
                witness = _witness_payload(comp.witness, I_V.ring)
    verdict = NOT_PG_SHELL if failing else PG_SHELL
    return ShellReport(verdict, "koszul-oracle", table, witness)


def pgshell_report(I_V: Ideal, I_W: Ideal, method: str = "chain") -> ShellReport:
    """Dispatch on method: chain (with q=1 oracle spot-check), oracle, both."""
    if method == "chain":
        return pgshell_check(I_V, I_W, oracle_spot=True)
    if method == "oracle":
        return pgshell_check_oracle(I_V, I_W)
    if method == "both":
        chain = pgshell_check(I_V, I_W, oracle_spot=False)
        oracle = pgshell_check_oracle(I_V, I_W)
        if chain.verdict != oracle.verdict:
            raise InternalCheckError(
                f"methods disagree: chain={chain.verdict} oracle={oracle.verdict}"
            )
        if chain.table != oracle.table:
            raise InternalCheckError("methods disagree on the per-(q,m) table")
        return ShellReport(chain.verdict, "both", chain.table, oracle.witness)
    raise EngineError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# invariants


class InvariantRecord:
    __slots__ = (
        "dim",
        "codim",
        "degree",
        "depth",
        "pd",
        "reg_R",
        "reg_I",
        "delta_genus",
        "num_min_gens",
        "is_complete_intersection",
        "is_2linear",
        "is_ACM",
        "nondegenerate",
        "delta_lower_bound_only",
    )

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])

    def to_json(self):
        out = {k: getattr(self, k) for k in self.__slots__}
        out["num_min_gens"] = {str(m): v for m, v in sorted(self.num_min_gens.items())}
        return out

    def __repr__(self):
        return f"InvariantRecord({self.to_json()})"


_INV_CACHE: dict = {}


def invariants(I: Ideal) -> InvariantRecord:
    """Dimension, degree, depth, regularity and the derived flags.

    The Delta-genus uses h^0(O(1)) = N+1, which is only the true value
    for nondegenerate arithmetically normal embeddings; when V is
    degenerate the record flags delta as a lower bound only.
    """
    cached = _INV_CACHE.get(I)
    if cached is not None:
        return cached
    ring = I.ring
    if not ring.standard_graded:
        raise WeightedRingError("invariants need a standard-graded ring")
    _require_proper(I, "I")
    res = minimal_resolution(I)
    bt = betti(res)
    reg_r, reg_i, pd, depth = regularity_and_depth(bt, ring)
    h = hilbert_function(I, reg_r + ring.num_vars + 5)
    dim, degree = dimension_degree(h)
    n_proj = ring.num_vars - 1
    codim = n_proj - dim
    num_min_gens = {m: bt.get(1, m) for m in bt.row_support(1)}
    is_ci = bt.total(1) == codim
    is_2lin = all(m == q + 1 for (q, m) in bt.entries if q >= 1)
    is_acm = depth == dim + 1
    nondeg = graded_piece_dim(groebner_basis(I), 1) == 0
    delta = dim + degree - ring.num_vars
    rec = InvariantRecord(
        dim=dim,
        codim=codim,
        degree=degree,
        depth=depth,
        pd=pd,
        reg_R=reg_r,
        reg_I=reg_i,
        delta_genus=delta,
        num_min_gens=num_min_gens,
        is_complete_intersection=is_ci,
        is_2linear=is_2lin,
        is_ACM=is_acm,
        nondegenerate=nondeg,
        delta_lower_bound_only=not nondeg,
    )
    _INV_CACHE[I] = rec
    return rec


def ci_chain_report(I: Ideal) -> dict:
    """Degree sequence and length-1 composition datum for a detected CI.

    For a complete intersection cut by forms of degrees (m_1..m_r) the
    resolution is the Koszul complex on those degrees; the report
    certifies the Betti shape and emits the twist sequence of the
    single splitting bundle (+)_s O(m_s).
    """
    inv = invariants(I)
    if not inv.is_complete_intersection:
        raise PreconditionError("not a complete intersection")
    bt = betti(minimal_resolution(I))
    degrees = sorted(bt.degrees_of(1))
    expected: dict = {}
    for q in range(len(degrees) + 1):
        for T in combinations(range(len(degrees)), q):
            key = (q, sum(degrees[t] for t in T))
            expected[key] = expected.get(key, 0) + 1
    certified = BettiTable(expected) == bt
    if not certified:
        raise InternalCheckError("CI flag set but the Betti table is not Koszul-shaped")
    return {
        "degrees": degrees,
        "series_length": 1,
        "bundle_twists": degrees,
        "koszul_certified": True,
    }


# ---------------------------------------------------------------------------
# criteria suite


def ideal_power_plus(I_V: Ideal, power: int, I_W: Ideal) -> Ideal:
    """I_V^power + I_W with explicit product expansion of the generators."""
    ring = I_V.ring
    gens = []
    for combo in combinations_with_replacement(I_V.generators, power):
        p = combo[0]
        for g in combo[1:]:
            p = p * g
        gens.append(p)
    gens.extend(I_W.generators)
    return Ideal(ring, gens)


def part_of_minimal_generators(I_W: Ideal, I_V: Ideal) -> bool:
    """Do the minimal generators of I_W extend to minimal generators of I_V?

    True iff their images in (I_V / S_+ I_V) are linearly independent,
    tested degree by degree with exact linear algebra.
    """
    ring = I_V.ring
    gb_v = groebner_basis(I_V)
    w_gens = minimal_generators(I_W)
    by_degree: dict = {}
    for g in w_gens:
        by_degree.setdefault(g.homogeneous_degree(), []).append(g)
    field = ring.field
    zero = field.zero
    for d, gens in sorted(by_degree.items()):
        monos = ring.monomials_of_degree(d)
        index = {m: i for i, m in enumerate(monos)}
        span = RowSpace(len(monos), field)
        for g in gb_v.elements:
            dg = g.homogeneous_degree()
            if dg is None or dg >= d:
                continue
            for mono in ring.monomials_of_degree(d - dg):
                prod = g.mul_term(mono, field.one)
                vec = [zero] * len(monos)
                for mm, c in prod.terms.items():
                    vec[index[mm]] = c
                span.add(vec)
        for g in gens:
            vec = [zero] * len(monos)
            for mm, c in g.terms.items():
                vec[index[mm]] = c
            if not span.add(vec):
                return False
    return True


def criteria_suite(I_V: Ideal, I_W: Ideal, neighborhood_orders=(1, 2)) -> dict:
    """Run every applicable consistency criterion against the direct verdict.

    Each record carries: applicable?, the predicted verdict or
    inequality, the observation, and a consistency flag.  Inapplicable
    criteria are skipped with a reason.  An inconsistency can only come
    from an engine bug, so the caller may escalate on consistent=False.
    """
    if not check_containment(I_V, I_W):
        raise ContainmentError("I_W is not contained in I_V")
    direct = pgshell_check(I_V, I_W, oracle_spot=True)
    observed = direct.verdict
    inv_v = invariants(I_V)
    inv_w = invariants(I_W)
    records = []

    def record(criterion, applicable, reason="", predicted=None, detail="", consistent=None):
        records.append(
            {
                "criterion": criterion,
                "applicable": applicable,
                "reason": reason,
                "predicted": predicted,
                "detail": detail,
                "consistent": consistent,
            }
        )

    # hypersurface case: W cut by one equation
    if inv_w.pd == 0:
        record("hypersurface-minimal-generator", False, reason="W is the whole space")
    elif sum(inv_w.num_min_gens.values()) == 1:
        f = minimal_generators(I_W)[0]
        pred = PG_SHELL if is_minimal_generator(f, I_V) else NOT_PG_SHELL
        record(
            "hypersurface-minimal-generator",
            True,
            predicted=pred,
            detail=f"single equation of degree {f.homogeneous_degree()}",
            consistent=pred == observed,
        )
    else:
        record("hypersurface-minimal-generator", False, reason="W is not a hypersurface")

    # complete-intersection case: exact criterion when V is a CI
    if inv_v.is_complete_intersection:
        part = part_of_minimal_generators(I_W, I_V)
        pred = PG_SHELL if part else NOT_PG_SHELL
        record(
            "complete-intersection-subset",
            True,
            predicted=pred,
            detail="W generators independent in I_V/S_+I_V" if part else
                   "W generators dependent in I_V/S_+I_V",
            consistent=pred == observed,
        )
    else:
        record("complete-intersection-subset", False, reason="V is not a complete intersection")

    # transitivity to infinitesimal neighborhoods of V in W
    if observed == PG_SHELL:
        for order in neighborhood_orders:
            i_y = ideal_power_plus(I_V, order + 1, I_W)
            sub = pgshell_check(i_y, I_W, oracle_spot=False)
            record(
                f"infinitesimal-neighborhood-m{order}",
                True,
                predicted=PG_SHELL,
                detail=f"W against I_V^{order + 1} + I_W",
                consistent=sub.verdict == PG_SHELL,
            )
    else:
        record(
            "infinitesimal-neighborhood",
            False,
            reason="only predicted for positive verdicts",
        )

    # arithmetic depth inequality (necessary for a positive verdict)
    ok_depth = inv_v.depth <= inv_w.depth
    record(
        "depth-inequality",
        True,
        predicted=f"depth(V)={inv_v.depth} <= depth(W)={inv_w.depth}",
        detail="necessary condition",
        consistent=(observed == NOT_PG_SHELL) or ok_depth,
    )

    # regularity inequality, needs depth(V) >= 2
    if inv_v.depth >= 2:
        ok_reg = inv_v.reg_R >= inv_w.reg_R
        record(
            "regularity-inequality",
            True,
            predicted=f"reg(V)={inv_v.reg_R} >= reg(W)={inv_w.reg_R}",
            detail="necessary condition given depth(V) >= 2",
            consistent=(observed == NOT_PG_SHELL) or ok_reg,
        )
    else:
        record("regularity-inequality", False, reason="depth(V) < 2")

    # V cut out of an ACM W by a regular sequence of hypersurfaces
    if inv_v.depth >= 2 and inv_w.is_ACM:
        extras = [g for g in minimal_generators(I_V) if not membership(g, I_W)]
        gens_match = same_ideal(Ideal(I_V.ring, I_W.generators + tuple(extras)), I_V)
        codim_drop = inv_v.dim == inv_w.dim - len(extras)
        if gens_match and codim_drop and extras:
            record(
                "regular-section-of-acm",
                True,
                predicted=PG_SHELL,
                detail=f"{len(extras)} extra hypersurfaces, codimension additive",
                consistent=observed == PG_SHELL,
            )
        else:
            record(
                "regular-section-of-acm",
                False,
                reason="I_V is not I_W plus a codimension-additive hypersurface sequence",
            )
    else:
        record(
            "regular-section-of-acm",
            False,
            reason="needs depth(V) >= 2 and W arithmetically Cohen-Macaulay",
        )

    # 2-linear W over nondegenerate V
    if inv_v.nondegenerate and inv_w.is_2linear:
        record(
            "two-linear-shell",
            True,
            predicted=PG_SHELL,
            detail="W has a 2-linear resolution and V is nondegenerate",
            consistent=observed == PG_SHELL,
        )
    else:
        reason = "V is degenerate" if not inv_v.nondegenerate else "W is not 2-linear"
        record("two-linear-shell", False, reason=reason)

    return {
        "direct": direct,
        "observed": observed,
        "criteria": records,
        "all_consistent": all(r["consistent"] is not False for r in records),
    }


# ---------------------------------------------------------------------------
# tensor resolutions of ACM intersections


def tensor_resolution(I_Y: Ideal, I_Z: Ideal):
    """Tensor complex of the two minimal resolutions, certified.

    Preconditions (checked): both quotients arithmetically
    Cohen-Macaulay and codim(I_Y + I_Z) = codim I_Y + codim I_Z.  The
    differential uses the sign d(x (x) y) = dx (x) y + (-1)^p x (x) dy
    on the bidegree-(p, *) block.  The certified complex is returned
    together with a report; both factors are confirmed as shells of the
    intersection.
    """
    if I_Y.ring != I_Z.ring:
        raise RingMismatchError("ideals live in different rings")
    ring = I_Y.ring
    inv_y = invariants(I_Y)
    inv_z = invariants(I_Z)
    if not inv_y.is_ACM:
        raise PreconditionError("first ideal is not arithmetically Cohen-Macaulay")
    if not inv_z.is_ACM:
        raise PreconditionError("second ideal is not arithmetically Cohen-Macaulay")
    I_X = Ideal(ring, I_Y.generators + I_Z.generators)
    _require_proper(I_X, "Y+Z")
    res_y = minimal_resolution(I_Y)
    res_z = minimal_resolution(I_Z)
    # codimension additivity via Hilbert polynomial of the sum
    gb_x = groebner_basis(I_X)
    reg_bound = 0
    for q in range(0, min(ring.num_vars, len(gb_x.elements)) + 1):
        b = taylor_degree_bound(I_X, q)
        if b >= 0:
            reg_bound = max(reg_bound, b - q)
    h = hilbert_function(I_X, reg_bound + ring.num_vars + 5)
    dim_x, _deg_x = dimension_degree(h)
    codim_x = (ring.num_vars - 1) - dim_x
    if codim_x != inv_y.codim + inv_z.codim:
        raise PreconditionError(
            f"codimension not additive: codim(Y+Z)={codim_x}, "
            f"codim(Y)+codim(Z)={inv_y.codim + inv_z.codim}"
        )

    a, b = res_y.length, res_z.length
    zero = Polynomial.zero(ring)

    def block_range(q):
        return [(p, q - p) for p in range(max(0, q - b), min(a, q) + 1)]

    # basis layout per homological degree
    layouts = []
    modules = []
    for q in range(a + b + 1):
        layout = {}
        twists = []
        offset = 0
        for (p, r) in block_range(q):
            fp = res_y.module(p)
            gr = res_z.module(r)
            layout[(p, r)] = offset
            for i in range(fp.rank):
                for j in range(gr.rank):
                    twists.append(fp.twists[i] + gr.twists[j])
            offset += fp.rank * gr.rank
        layouts.append(layout)
        modules.append(GradedFreeModule(twists))

    differentials = []
    for q in range(1, a + b + 1):
        src = modules[q]
        tgt = modules[q - 1]
        entries = [[zero] * src.rank for _ in range(tgt.rank)]
        for (p, r) in block_range(q):
            fp = res_y.module(p)
            gr = res_z.module(r)
            base = layouts[q][(p, r)]
            for i in range(fp.rank):
                for j in range(gr.rank):
                    col = base + i * gr.rank + j
                    if p >= 1:
                        d_f = res_y.differential(p)
                        tgt_base = layouts[q - 1][(p - 1, r)]
                        for i2 in range(res_y.module(p - 1).rank):
                            e = d_f.entries[i2][i]
                            if not e.is_zero():
                                row = tgt_base + i2 * gr.rank + j
                                entries[row][col] = entries[row][col] + e
                    if r >= 1:
                        d_g = res_z.differential(r)
                        tgt_base = layouts[q - 1][(p, r - 1)]
                        sign = -1 if p % 2 else 1
                        for j2 in range(res_z.module(r - 1).rank):
                            e = d_g.entries[j2][j]
                            if not e.is_zero():
                                row = tgt_base + i * res_z.module(r - 1).rank + j2
                                term = e if sign == 1 else -e
                                entries[row][col] = entries[row][col] + term
        differentials.append(GradedMatrix(ring, src, tgt, entries))

    res_x = FreeResolution(ring, modules, differentials, I_X, minimal=True)
    report_checks = verify_complex(res_x)
    if not report_checks.ok:
        raise InternalCheckError(
            f"tensor complex failed verification: {report_checks.failed()}"
        )
    bt_tensor = betti(res_x)
    conv = betti(res_y).convolve(betti(res_z))
    if bt_tensor != conv:
        raise InternalCheckError("tensor Betti table is not the convolution")
    shell_y = pgshell_check(I_X, I_Y, oracle_spot=False)
    shell_z = pgshell_check(I_X, I_Z, oracle_spot=False)
    if not (shell_y.is_shell and shell_z.is_shell):
        raise InternalCheckError("a tensor factor failed its shell verdict")
    report = {
        "sum_ideal": I_X,
        "codim_additive": True,
        "betti": bt_tensor,
        "convolution_matches": True,
        "verify": report_checks,
        "shell_Y": shell_y,
        "shell_Z": shell_z,
    }
    return res_x, report
