"""Groebner bases over exact scalars via Buchberger's algorithm.

Small by design: the ideals this package meets are generated by a handful
of binomials plus a few short polynomials, so a classic Buchberger loop
with the product and chain criteria plus full interreduction is both fast
and easy to audit. A hard S-pair budget guards against runaway inputs;
exceeding it raises instead of silently truncating.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import List, Optional, Sequence, Tuple

from .poly import Exps, Poly, exp_div, exp_divides, exp_lcm, exp_mul
from .scalars import scalar_inverse

DEFAULT_MAX_SPAIRS = 1_000_000


class GroebnerBudgetExceeded(RuntimeError):
    def __init__(self, limit: int):
        super().__init__(
            f"S-pair budget of {limit} exceeded; raise the limit to continue")
        self.limit = limit


def normal_form(f: Poly, basis: Sequence[Poly], order) -> Poly:
    """Fully reduce f modulo basis: every term of the result is divisible
    by no basis leading term."""
    basis = [g for g in basis if not g.is_zero()]
    lts = [g.leading_term(order) for g in basis]
    rem = Poly.zero(f.names)
    p = f
    while not p.is_zero():
        e, c = p.leading_term(order)
        for g, (ge, gc) in zip(basis, lts):
            q = exp_div(e, ge)
            if q is not None:
                p = p - Poly.monomial(p.names, q, c * scalar_inverse(gc)) * g
                break
        else:
            t = Poly.monomial(p.names, e, c)
            rem = rem + t
            p = p - t
    return rem


def s_polynomial(f: Poly, g: Poly, order) -> Poly:
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    l = exp_lcm(ef, eg)
    mf = Poly.monomial(f.names, exp_div(l, ef), scalar_inverse(cf))
    mg = Poly.monomial(g.names, exp_div(l, eg), scalar_inverse(cg))
    return mf * f - mg * g


def interreduce(basis: Sequence[Poly], order) -> List[Poly]:
    """Autoreduce to the reduced monic basis (unique for a Groebner basis)."""
    G = [g for g in basis if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        out: List[Poly] = []
        for i, g in enumerate(G):
            others = out + G[i + 1:]
            h = normal_form(g, others, order) if others else g
            if h.is_zero():
                changed = True
                continue
            if h != g:
                changed = True
            out.append(h)
        G = out
    G = [g * scalar_inverse(g.leading_term(order)[1]) for g in G]
    G.sort(key=lambda p: order.key(p.leading_term(order)[0]))
    return G


def groebner_basis(gens: Sequence[Poly], order,
                   max_spairs: int = DEFAULT_MAX_SPAIRS) -> List[Poly]:
    """Reduced monic Groebner basis of <gens> for the given order."""
    G = [g for g in gens if not g.is_zero()]
    if not G:
        return []
    lts: List[Exps] = [g.leading_term(order)[0] for g in G]
    pending = {(i, j) for i in range(len(G)) for j in range(i)}
    processed = 0
    while pending:
        # normal strategy: smallest lcm first
        pair = min(pending, key=lambda ij: order.key(exp_lcm(lts[ij[0]],
                                                             lts[ij[1]])))
        pending.discard(pair)
        processed += 1
        if processed > max_spairs:
            raise GroebnerBudgetExceeded(max_spairs)
        i, j = pair
        l = exp_lcm(lts[i], lts[j])
        if l == exp_mul(lts[i], lts[j]):
            continue  # product criterion: coprime leading terms
        chained = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if exp_divides(lts[k], l):
                a = (max(i, k), min(i, k))
                b = (max(j, k), min(j, k))
                if a not in pending and b not in pending:
                    chained = True
                    break
        if chained:
            continue
        h = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if h.is_zero():
            continue
        t = len(G)
        G.append(h)
        lts.append(h.leading_term(order)[0])
        pending.update((t, m) for m in range(t))
    return interreduce(G, order)


def ideal_contains(f: Poly, groebner: Sequence[Poly], order) -> bool:
    return normal_form(f, groebner, order).is_zero()


def _pure_power_bounds(lts: Sequence[Exps], nvars: int) -> Optional[List[int]]:
    bounds: List[Optional[int]] = [None] * nvars
    for e in lts:
        nz = [i for i, x in enumerate(e) if x]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
    if any(b is None for b in bounds):
        return None
    return bounds  # type: ignore[return-value]


def standard_monomials(groebner: Sequence[Poly], order) -> Optional[List[Exps]]:
    """Monomials outside the leading-term ideal, or None if infinitely many.

    Expects a Groebner basis; finiteness is detected by the presence of a
    pure power of every variable among the leading terms.
    """
    G = [g for g in groebner if not g.is_zero()]
    if not G:
        return None
    lts = [g.leading_term(order)[0] for g in G]
    n = len(G[0].names)
    bounds = _pure_power_bounds(lts, n)
    if bounds is None:
        return None
    out = []
    for exps in iproduct(*(range(b) for b in bounds)):
        if not any(exp_divides(l, exps) for l in lts):
            out.append(exps)
    out.sort(key=order.key)
    return out


def colength(groebner: Sequence[Poly], order) -> Optional[int]:
    """Dimension of the quotient by the ideal, or None if infinite."""
    sm = standard_monomials(groebner, order)
    return None if sm is None else len(sm)
