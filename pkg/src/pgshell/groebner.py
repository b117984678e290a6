"""Buchberger engine for ideals and submodules of graded free modules.

Everything is built on one representation: a *vector* is a dict mapping
(monomial, position) -> nonzero coefficient.  An ideal element is a
vector of rank 1 (position always 0).  The same division and Buchberger
code then powers normal forms, ideal membership, syzygy computation
(via an elimination block order on an extended module) and chain-map
lifting.

Determinism: input order is preserved, pair selection uses the normal
strategy (lowest lcm degree, ties by the monomial order on the lcm,
then by generator index), and the final interreduction yields the
reduced Groebner basis, which is unique -- so the output is independent
of generator permutation.
"""

from __future__ import annotations

from .errors import NotHomogeneousError, RingMismatchError
from .poly import Ideal, Polynomial
from .rings import PolyRing

# ---------------------------------------------------------------------------
# module term orders


def top_key(ring: PolyRing, rank: int):
    """Term-over-position order: ring order on monomials, e_0 > e_1 > ...

    The returned key function memoizes per term; reuse one key function
    per computation so division loops share the cache.
    """
    sk = ring.sort_key
    cache: dict = {}

    def key(term):
        k = cache.get(term)
        if k is None:
            mono, pos = term
            k = (sk(mono), -pos)
            cache[term] = k
        return k

    return key


def block_key(ring: PolyRing, block: int):
    """Elimination order: the first `block` positions dominate the rest."""
    sk = ring.sort_key
    cache: dict = {}

    def key(term):
        k = cache.get(term)
        if k is None:
            mono, pos = term
            k = (1 if pos < block else 0, sk(mono), -pos)
            cache[term] = k
        return k

    return key


# ---------------------------------------------------------------------------
# vector helpers


def poly_to_vector(p: Polynomial, pos: int = 0) -> dict:
    return {(m, pos): c for m, c in p.terms.items()}


def vector_component(v: dict, pos: int, ring: PolyRing) -> Polynomial:
    return Polynomial(ring, {m: c for (m, p), c in v.items() if p == pos})


def vector_lead(v: dict, key):
    return max(v, key=key)


def vector_monic(v: dict, key, field) -> dict:
    lt = vector_lead(v, key)
    lc = v[lt]
    if lc == field.one:
        return v
    inv = field.inv(lc)
    return {t: field.mul(inv, c) for t, c in v.items()}


def vector_degree(v: dict, ring: PolyRing, twists) -> int | None:
    """Common twisted degree of a homogeneous vector, else None."""
    if not v:
        return 0
    degs = {ring.mono_degree(m) + twists[p] for (m, p) in v}
    if len(degs) == 1:
        return degs.pop()
    return None


def reduce_vector(v, basis, lead_terms, key, ring: PolyRing, quotients=None) -> dict:
    """Full normal form of v against basis (first matching divisor wins).

    If `quotients` is a list of dicts (one per basis element) the
    division coefficients are accumulated into it, so that
    v = sum_i quotients[i] * basis[i] + remainder.
    """
    field = ring.field
    zero = field.zero
    mono_div = ring.mono_div
    work = dict(v)
    remainder = {}
    nbasis = len(basis)
    while work:
        t = max(work, key=key)
        tm, tp = t
        c = work[t]
        for idx in range(nbasis):
            (gm, gp), gc = lead_terms[idx]
            if gp != tp:
                continue
            q = mono_div(tm, gm)
            if q is None:
                continue
            factor = field.div(c, gc)
            for (m2, p2), c2 in basis[idx].items():
                k2 = (tuple(a + b for a, b in zip(q, m2)), p2)
                s = field.sub(work.get(k2, zero), field.mul(factor, c2))
                if s == zero:
                    work.pop(k2, None)
                else:
                    work[k2] = s
            if quotients is not None:
                qd = quotients[idx]
                qd[q] = field.add(qd.get(q, zero), factor)
            break
        else:
            remainder[t] = c
            del work[t]
    return remainder


def _spoly(f, g, ltf, ltg, ring: PolyRing):
    field = ring.field
    (fm, fp), fc = ltf
    (gm, gp), gc = ltg
    lcm = ring.mono_lcm(fm, gm)
    qf = ring.mono_div(lcm, fm)
    qg = ring.mono_div(lcm, gm)
    inv_f = field.inv(fc)
    inv_g = field.inv(gc)
    out: dict = {}
    zero = field.zero
    for (m, p), c in f.items():
        k = (tuple(a + b for a, b in zip(qf, m)), p)
        out[k] = field.mul(inv_f, c)
    for (m, p), c in g.items():
        k = (tuple(a + b for a, b in zip(qg, m)), p)
        s = field.sub(out.get(k, zero), field.mul(inv_g, c))
        if s == zero:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def module_groebner(vectors, ring: PolyRing, rank: int, key=None, reduced: bool = True):
    """Reduced Groebner basis of the submodule generated by `vectors`.

    The coprime-lead-term shortcut is only valid for ideals, so it is
    applied only when rank == 1; the chain criterion is applied always.
    """
    if key is None:
        key = top_key(ring, rank)
    field = ring.field
    mono_lcm = ring.mono_lcm
    mono_divides = ring.mono_divides

    basis = []
    leads = []
    seen = set()
    for v in vectors:
        if not v:
            continue
        v = vector_monic(v, key, field)
        marker = tuple(sorted(v.items(), key=lambda t: key(t[0])))
        if marker in seen:
            continue
        seen.add(marker)
        basis.append(v)
        leads.append((vector_lead(v, key), None))
    leads = [(lt, basis[i][lt]) for i, (lt, _) in enumerate(leads)]

    def lcm_info(i, j):
        (mi, pi), _ = leads[i]
        (mj, pj), _ = leads[j]
        if pi != pj:
            return None
        lcm = mono_lcm(mi, mj)
        return lcm

    pending = {}
    for j in range(len(basis)):
        for i in range(j):
            lcm = lcm_info(i, j)
            if lcm is not None:
                pending[(i, j)] = lcm

    def pair_sort_key(item):
        (i, j), lcm = item
        return (ring.mono_degree(lcm), ring.sort_key(lcm), i, j)

    while pending:
        (i, j), lcm = min(pending.items(), key=pair_sort_key)
        del pending[(i, j)]
        (mi, pi), _ = leads[i]
        (mj, _), _ = leads[j]
        # product criterion (ideals only: invalid for modules)
        if rank == 1 and tuple(a + b for a, b in zip(mi, mj)) == lcm:
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            (mk, pk), _ = leads[k]
            if pk != pi or not mono_divides(mk, lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                skip = True
                break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], leads[i], leads[j], ring)
        r = reduce_vector(s, basis, leads, key, ring)
        if r:
            r = vector_monic(r, key, field)
            new = len(basis)
            basis.append(r)
            lt = vector_lead(r, key)
            leads.append((lt, r[lt]))
            for t in range(new):
                lcm2 = lcm_info(t, new)
                if lcm2 is not None:
                    pending[(t, new)] = lcm2

    if not reduced:
        return basis
    return _interreduce(basis, leads, key, ring)


def _interreduce(basis, leads, key, ring: PolyRing):
    field = ring.field
    order = sorted(range(len(basis)), key=lambda i: key(leads[i][0]))
    kept_idx = []
    kept_leads = []
    for i in order:
        (m, p), _ = leads[i]
        if any(
            kp == p and ring.mono_divides(km, m) for (km, kp) in kept_leads
        ):
            continue
        kept_idx.append(i)
        kept_leads.append((m, p))
    out = []
    for n, i in enumerate(kept_idx):
        others = [basis[kept_idx[t]] for t in range(len(kept_idx)) if t != n]
        other_leads = [
            (kept_leads[t], basis[kept_idx[t]][kept_leads[t]])
            for t in range(len(kept_idx))
            if t != n
        ]
        r = reduce_vector(basis[i], others, other_leads, key, ring)
        out.append(vector_monic(r, key, field))
    out.sort(key=lambda v: key(vector_lead(v, key)))
    return out


# ---------------------------------------------------------------------------
# ideal-level interface


class GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal (monic elements)."""

    __slots__ = ("ring", "elements", "order", "reduced", "_leads")

    def __init__(self, ring: PolyRing, elements, order=None, reduced=True):
        self.ring = ring
        self.elements = tuple(elements)
        self.order = order if order is not None else ring.order
        self.reduced = reduced
        self._leads = None

    @property
    def lead_monomials(self):
        if self._leads is None:
            self._leads = tuple(g.lead_monomial() for g in self.elements)
        return self._leads

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        return f"GroebnerBasis[{', '.join(str(g) for g in self.elements)}]"

    def is_unit_ideal(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].degree() == 0


def buchberger_list(polys, ring: PolyRing):
    """Reduced Groebner basis of arbitrary (possibly inhomogeneous) input."""
    vectors = [poly_to_vector(p) for p in polys if not p.is_zero()]
    gb = module_groebner(vectors, ring, rank=1)
    return [vector_component(v, 0, ring) for v in gb]


_GB_CACHE: dict = {}


def groebner_basis(I: Ideal) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal, cached by value."""
    cached = _GB_CACHE.get(I)
    if cached is not None:
        return cached
    gb = GroebnerBasis(I.ring, buchberger_list(I.generators, I.ring))
    _GB_CACHE[I] = gb
    return gb


def clear_caches():
    _GB_CACHE.clear()


def _as_gb(ideal_or_gb) -> GroebnerBasis:
    if isinstance(ideal_or_gb, GroebnerBasis):
        return ideal_or_gb
    return groebner_basis(ideal_or_gb)


def normal_form(p: Polynomial, G) -> Polynomial:
    """Remainder of full division of p by the (reduced) basis G."""
    gb = _as_gb(G)
    if p.ring != gb.ring:
        raise RingMismatchError("polynomial and basis in different rings")
    basis = [poly_to_vector(g) for g in gb.elements]
    key = top_key(gb.ring, 1)
    leads = [(vector_lead(v, key), v[vector_lead(v, key)]) for v in basis]
    r = reduce_vector(poly_to_vector(p), basis, leads, key, gb.ring)
    return vector_component(r, 0, gb.ring)


def normal_form_with_quotients(p: Polynomial, G):
    """(quotients, remainder) with p = sum q_i * G_i + remainder."""
    gb = _as_gb(G)
    basis = [poly_to_vector(g) for g in gb.elements]
    key = top_key(gb.ring, 1)
    leads = [(vector_lead(v, key), v[vector_lead(v, key)]) for v in basis]
    quots = [dict() for _ in basis]
    r = reduce_vector(poly_to_vector(p), basis, leads, key, gb.ring, quotients=quots)
    qpolys = [Polynomial(gb.ring, q) for q in quots]
    return qpolys, vector_component(r, 0, gb.ring)


def membership(p: Polynomial, I) -> bool:
    """p in I, decided by normal form against the reduced basis."""
    return normal_form(p, I).is_zero()


def same_ideal(I: Ideal, J: Ideal) -> bool:
    return groebner_basis(I).elements == groebner_basis(J).elements


def graded_piece_dim(gb: GroebnerBasis, m: int) -> int:
    """dim_k I_m from the lead-term ideal (standard monomial complement)."""
    ring = gb.ring
    leads = gb.lead_monomials
    total = 0
    for mono in ring.monomials_of_degree(m):
        if any(ring.mono_divides(lt, mono) for lt in leads):
            total += 1
    return total


def is_minimal_generator(F: Polynomial, I: Ideal) -> bool:
    """Is F part of a minimal generating system of I?

    Decided by exact linear algebra on the degree-m graded piece:
    F is a minimal generator iff its image in (I / S_+ I)_m is nonzero.
    """
    if F.is_zero():
        raise ValueError("zero polynomial cannot be a generator")
    m = F.homogeneous_degree()
    if m is None:
        raise NotHomogeneousError(f"inhomogeneous polynomial: {F}")
    gb = groebner_basis(I)
    if not membership(F, gb):
        raise ValueError("polynomial does not lie in the ideal")
    ring = I.ring
    monos = ring.monomials_of_degree(m)
    index = {mono: i for i, mono in enumerate(monos)}
    from .linalg import RowSpace

    span = RowSpace(len(monos), ring.field)
    zero = ring.field.zero
    for g in gb.elements:
        dg = g.homogeneous_degree()
        if dg is None or dg >= m:
            continue  # mono must have positive degree
        for mono in ring.monomials_of_degree(m - dg):
            prod = g.mul_term(mono, ring.field.one)
            vec = [zero] * len(monos)
            for mm, c in prod.terms.items():
                vec[index[mm]] = c
            span.add(vec)
    fvec = [zero] * len(monos)
    for mm, c in F.terms.items():
        fvec[index[mm]] = c
    return not span.contains(fvec)
