"""Buchberger's algorithm with pair criteria and block elimination orders.

The kernel works on integer-cleared polynomials (rationals are cleared at
the boundary and restored as primitive parts), uses the Gebauer-Moeller
criteria to discard unnecessary S-pairs, and selects pairs by smallest lcm
(normal strategy).  Hard caps on intermediate total degree and basis size
turn runaway eliminations into a :class:`ResourceCapError` instead of
unbounded growth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .context import same_context
from .errors import ArgumentError, ResourceCapError
from .orders import Block, GrevLex, MonomialOrder
from .poly import (Poly, content_primitive, mono_degree, mono_div,
                   mono_divides, mono_lcm, mono_mul)


@dataclass
class GBConfig:
    """Resource caps for one Groebner computation."""

    max_degree: int = 60       # max total degree of any intermediate polynomial
    max_basis: int = 5000      # max number of basis elements plus queued pairs


@dataclass
class IdealBasis:
    """A (reduced) Groebner basis; generators are primitive with positive lead."""

    generators: list
    order: MonomialOrder
    reduced: bool = False


def _to_int_terms(p: Poly) -> dict:
    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    terms = {m: c.numerator * (den // c.denominator) for m, c in p.terms.items()}
    g = 0
    for c in terms.values():
        g = gcd(g, abs(c))
    return {m: c // g for m, c in terms.items()}


class _Kernel:
    def __init__(self, order: MonomialOrder, config: GBConfig):
        self.order = order
        self.config = config
        self._keys: dict = {}

    def key(self, mono):
        k = self._keys.get(mono)
        if k is None:
            k = self._keys[mono] = self.order.key(mono)
        return k

    def lm(self, terms):
        return max(terms, key=self.key)

    @staticmethod
    def strip(terms):
        g = 0
        for c in terms.values():
            g = gcd(g, abs(c))
        if g <= 1:
            return dict(terms)
        return {m: c // g for m, c in terms.items()}

    def check_caps(self, terms, n_items):
        if n_items > self.config.max_basis:
            raise ResourceCapError(
                f"basis/pair count exceeded cap {self.config.max_basis}"
            )
        if terms and max(mono_degree(m) for m in terms) > self.config.max_degree:
            raise ResourceCapError(
                f"intermediate degree exceeded cap {self.config.max_degree}"
            )

    @staticmethod
    def shift(terms, mono, scale=1):
        return {mono_mul(m, mono): c * scale for m, c in terms.items()}

    def spoly(self, f, g):
        lmf, lmg = self.lm(f), self.lm(g)
        l = mono_lcm(lmf, lmg)
        cf, cg = f[lmf], g[lmg]
        d = gcd(cf, cg)
        a = self.shift(f, mono_div(l, lmf), cg // d)
        b = self.shift(g, mono_div(l, lmg), cf // d)
        for m, c in b.items():
            a[m] = a.get(m, 0) - c
            if a[m] == 0:
                del a[m]
        return a

    def normal_form(self, terms, basis, lms):
        """Full fraction-free normal form of terms by the basis."""
        out: dict = {}
        work = dict(terms)
        while work:
            m = self.lm(work)
            c = work.pop(m)
            reducer = None
            for i, lmg in enumerate(lms):
                if mono_divides(lmg, m):
                    reducer = i
                    break
            if reducer is None:
                out[m] = c
                continue
            g = basis[reducer]
            lcg = g[lms[reducer]]
            d = gcd(c, lcg)
            scale, cmul = abs(lcg // d), c // d
            if lcg < 0:
                cmul = -cmul
            if scale != 1:
                out = {mm: cc * scale for mm, cc in out.items()}
                work = {mm: cc * scale for mm, cc in work.items()}
            shift_mono = mono_div(m, lms[reducer])
            for mm, cc in g.items():
                if mm == lms[reducer]:
                    continue
                # injected monomials are all below the current maximum, and
                # every monomial already in `out` is above it
                key = mono_mul(mm, shift_mono)
                work[key] = work.get(key, 0) - cc * cmul
                if work[key] == 0:
                    del work[key]
        if out:
            out = self.strip(out)
        return out


def buchberger(gens, order: MonomialOrder, config: GBConfig | None = None) -> IdealBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Deterministic for fixed inputs and order.  The unit ideal yields the
    basis {1}.
    """
    if not gens:
        raise ArgumentError("empty generator list")
    ctx = same_context(*gens)
    config = config or GBConfig()
    K = _Kernel(order, config)

    G: list = []
    lms: list = []
    pairs: set = set()

    def update(f):
        """Gebauer-Moeller update of the pair set with the new element f."""
        lmf = K.lm(f)
        kept = set()
        for (i, j) in pairs:
            lij = mono_lcm(lms[i], lms[j])
            if (not mono_divides(lmf, lij)
                    or lij == mono_lcm(lms[i], lmf)
                    or lij == mono_lcm(lms[j], lmf)):
                kept.add((i, j))
        t = len(G)
        by_lcm: dict = {}
        for i in range(t):
            by_lcm.setdefault(mono_lcm(lms[i], lmf), []).append(i)
        minimal = []
        for L in sorted(by_lcm, key=K.key):
            if all(not mono_divides(M, L) for M in minimal):
                minimal.append(L)
        new_pairs = set()
        for L in minimal:
            if not any(mono_lcm(lms[i], lmf) == mono_mul(lms[i], lmf)
                       for i in by_lcm[L]):
                new_pairs.add((min(by_lcm[L]), t))
        G.append(f)
        lms.append(lmf)
        return kept | new_pairs

    for p in sorted(gens, key=lambda p: K.key(K.lm(_to_int_terms(p))) if not p.is_zero() else ()):
        if p.is_zero():
            continue
        terms = K.normal_form(_to_int_terms(p), G, lms)
        if terms:
            K.check_caps(terms, len(G) + len(pairs))
            pairs = update(terms)
    if not G:
        raise ArgumentError("all generators are zero")

    while pairs:
        K.check_caps({}, len(G) + len(pairs))
        i, j = min(pairs, key=lambda p: (
            mono_degree(mono_lcm(lms[p[0]], lms[p[1]])),
            K.key(mono_lcm(lms[p[0]], lms[p[1]])),
            p,
        ))
        pairs.discard((i, j))
        s = K.spoly(G[i], G[j])
        s = K.normal_form(s, G, lms)
        if s:
            K.check_caps(s, len(G))
            pairs = update(s)

    # minimalize
    order_idx = sorted(range(len(G)), key=lambda i: K.key(lms[i]))
    minimal_idx = []
    for i in order_idx:
        if all(not mono_divides(lms[j], lms[i]) for j in minimal_idx):
            minimal_idx.append(i)
    Gmin = [G[i] for i in minimal_idx]
    lmin = [lms[i] for i in minimal_idx]

    # interreduce
    reduced = []
    for i, g in enumerate(Gmin):
        others = Gmin[:i] + Gmin[i + 1:]
        lothers = lmin[:i] + lmin[i + 1:]
        r = K.normal_form(g, others, lothers)
        if r:
            reduced.append(r)
    reduced.sort(key=lambda t: K.key(K.lm(t)))

    out = []
    for terms in reduced:
        p = Poly(ctx, {m: Fraction(c) for m, c in terms.items()})
        out.append(content_primitive(p, order)[1])
    return IdealBasis(out, order, reduced=True)


def reduce(f: Poly, basis: IdealBasis) -> Poly:
    """Normal form of f modulo the basis: no term divisible by any leading
    monomial remains, and f minus the result lies in the ideal."""
    if not basis.generators:
        return f
    same_context(f, *basis.generators)
    order = basis.order
    leads = [g.leading(order) for g in basis.generators]
    out = Poly(f.ctx)
    work = f
    while not work.is_zero():
        m, c = work.leading(order)
        hit = None
        for g, (lmg, lcg) in zip(basis.generators, leads):
            q = mono_div(m, lmg)
            if q is not None:
                hit = (g, q, lcg)
                break
        if hit is None:
            t = Poly(f.ctx, {m: c})
            out = out + t
            work = work - t
            continue
        g, q, lcg = hit
        work = work - Poly(f.ctx, {q: c / lcg}) * g
    return out


def elimination_order(ctx, elim_vars, keep_vars) -> Block:
    """Block order with the eliminated variables dominating; GrevLex inside."""
    high = sorted(elim_vars, key=ctx.rank_key)
    low = sorted(keep_vars, key=ctx.rank_key)
    return Block(GrevLex(high), GrevLex(low))


def eliminate(gens, elim_vars, keep_vars, config: GBConfig | None = None):
    """Keep-only generators of the reduced Groebner basis under a block order.

    Returns every reduced-basis element whose variables lie in keep_vars;
    the list may be empty, which signals the caller's prolongation retry.
    """
    ctx = same_context(*gens)
    elim_vars, keep_vars = set(elim_vars), set(keep_vars)
    if elim_vars & keep_vars:
        raise ArgumentError("eliminate and keep variable sets overlap")
    seen = set().union(*(g.variables() for g in gens))
    if not seen <= elim_vars | keep_vars:
        missing = seen - elim_vars - keep_vars
        raise ArgumentError(f"variables not covered by the partition: {missing}")
    order = elimination_order(ctx, elim_vars, keep_vars)
    basis = buchberger(gens, order, config)
    return [g for g in basis.generators if g.variables() <= keep_vars]


def buchberger_with_certificates(gens, order: MonomialOrder):
    """Plain rational-arithmetic Buchberger that tracks each basis element as
    an explicit polynomial combination of the inputs.

    Intended for small instances only (test-suite ideal-membership checks).
    Returns (basis_polys, certificates) where certificates[i] is the list of
    cofactors c_j with basis[i] == sum_j c_j * gens[j].
    """
    ctx = same_context(*gens)
    one = Poly.const(ctx, 1)
    zero = Poly(ctx)
    G = []
    certs = []
    for i, g in enumerate(gens):
        if not g.is_zero():
            G.append(g)
            certs.append([one if j == i else zero for j in range(len(gens))])

    def reduce_tracked(f, cert):
        changed = True
        while changed and not f.is_zero():
            changed = False
            m, c = f.leading(order)
            for g, gc in zip(G, certs):
                lmg, lcg = g.leading(order)
                q = mono_div(m, lmg)
                if q is not None:
                    mult = Poly(ctx, {q: c / lcg})
                    f = f - mult * g
                    cert = [a - mult * b for a, b in zip(cert, gc)]
                    changed = True
                    break
        return f, cert

    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    while pairs:
        i, j = pairs.pop(0)
        fi, fj = G[i], G[j]
        (lmi, lci), (lmj, lcj) = fi.leading(order), fj.leading(order)
        L = mono_lcm(lmi, lmj)
        mi = Poly(ctx, {mono_div(L, lmi): Fraction(1) / lci})
        mj = Poly(ctx, {mono_div(L, lmj): Fraction(1) / lcj})
        s = mi * fi - mj * fj
        cert = [mi * a - mj * b for a, b in zip(certs[i], certs[j])]
        s, cert = reduce_tracked(s, cert)
        if not s.is_zero():
            pairs += [(k, len(G)) for k in range(len(G))]
            G.append(s)
            certs.append(cert)
    return G, certs
