"""Ideal quotients by powers, intersections, and saturation at S_+.

(I : f^inf) uses the classical trick: adjoin t, compute a Groebner
basis of I + (t*f - 1) under an order eliminating t, keep the t-free
elements.  I cap J uses t*I + (1-t)*J with the same elimination.  The
saturation at the irrelevant ideal is the intersection over all
variables, cap_i (I : z_i^inf), iterated to a fixpoint -- composing the
single-variable saturations instead would wrongly delete components
lying inside coordinate hyperplanes.
"""

from __future__ import annotations

from .errors import EngineError
from .groebner import (
    buchberger_list,
    groebner_basis,
    module_groebner,
    poly_to_vector,
    top_key,
    vector_component,
)
from .poly import Ideal, Polynomial
from .rings import PolyRing


def _lift(p: Polynomial, ext: PolyRing) -> Polynomial:
    return Polynomial(ext, {m + (0,): c for m, c in p.terms.items()})


def _drop(p: Polynomial, ring: PolyRing) -> Polynomial:
    return Polynomial(ring, {m[:-1]: c for m, c in p.terms.items()})


def _homogeneous_components(p: Polynomial):
    ring = p.ring
    by_degree: dict = {}
    for m, c in p.terms.items():
        by_degree.setdefault(ring.mono_degree(m), {})[m] = c
    return [Polynomial(ring, terms) for _, terms in sorted(by_degree.items())]


def _eliminate_and_normalize(gens_ext, ext: PolyRing, ring: PolyRing) -> Ideal:
    """Groebner-eliminate the last variable and return a canonical ideal.

    The t-free part of the basis generates the contraction to S; its
    homogeneous components are re-normalized through a graded reduced
    basis so the output does not depend on the elimination path.
    """
    vectors = [poly_to_vector(g) for g in gens_ext if not g.is_zero()]
    gb = module_groebner(vectors, ext, rank=1, key=top_key(ext, 1))
    pieces = []
    for v in gb:
        p = vector_component(v, 0, ext)
        if all(m[-1] == 0 for m in p.terms):
            pieces.extend(_homogeneous_components(_drop(p, ring)))
    reduced = buchberger_list(pieces, ring)
    return Ideal(ring, reduced)


def ideal_quotient_saturation(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^inf), generated by the t-free basis of I + (t*f - 1)."""
    if f.is_zero():
        raise EngineError("cannot saturate by the zero polynomial")
    ring = I.ring
    if f.ring != ring:
        raise EngineError("polynomial from a different ring")
    ext = ring.extended_elimination_ring()
    t = Polynomial.variable(ext, ext.num_vars - 1)
    gens = [_lift(g, ext) for g in I.generators]
    gens.append(t * _lift(f, ext) - Polynomial.constant(ext, 1))
    return _eliminate_and_normalize(gens, ext, ring)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I cap J via elimination on t*I + (1-t)*J."""
    ring = I.ring
    if J.ring != ring:
        raise EngineError("ideals live in different rings")
    ext = ring.extended_elimination_ring()
    t = Polynomial.variable(ext, ext.num_vars - 1)
    one_minus_t = Polynomial.constant(ext, 1) - t
    gens = [t * _lift(g, ext) for g in I.generators]
    gens += [one_minus_t * _lift(h, ext) for h in J.generators]
    if not I.generators or not J.generators:
        return Ideal(ring, [])
    return _eliminate_and_normalize(gens, ext, ring)


def saturate_irrelevant(I: Ideal):
    """(saturation of I at (z_0..z_N), changed_flag).

    Computes cap_i (J : z_i^inf) and repeats until a full sweep is a
    fixpoint; the fixpoint is saturated with respect to every variable
    and hence with respect to S_+.
    """
    ring = I.ring
    current = I
    current_gb = groebner_basis(current).elements
    while True:
        parts = [
            ideal_quotient_saturation(current, Polynomial.variable(ring, i))
            for i in range(ring.num_vars)
        ]
        nxt = parts[0]
        for p in parts[1:]:
            nxt = ideal_intersection(nxt, p)
        nxt_gb = groebner_basis(nxt).elements
        if nxt_gb == current_gb:
            break
        current, current_gb = nxt, nxt_gb
    changed = current_gb != groebner_basis(I).elements
    return current, changed
