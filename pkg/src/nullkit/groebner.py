"""Buchberger's algorithm and ideal arithmetic under the package lex order.

`groebner_basis` returns the unique reduced basis: monic elements, no term
of any element divisible by another's leading term, sorted ascending by
leading term.  Pair selection is by smallest lcm (then oldest indices), and
both classical discard criteria are applied: pairs with coprime leading
terms, and pairs subsumed by an already-processed chain through a third
element.  Over the rationals, intermediate elements are scaled to primitive
integer form to keep coefficient growth in check; the final basis is monic.

`staircase_dimension` counts monomials outside the leading-term staircase,
which is the quotient's vector-space dimension; `INFINITE` is returned when
some variable has no pure power among the leading terms.
"""

import heapq
import itertools
from fractions import Fraction
from math import gcd, lcm

from .errors import BudgetExceeded, ImproperIdeal, MixedRings
from .field import RationalField
from .poly import MultiPoly, exp_add, exp_divides, exp_lcm, exp_sub, lex_key


class _Infinite:
    """Sentinel for an infinite staircase; compares unequal to every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


class Ideal:
    """A finitely generated ideal.  Zero generators are pruned; the reduced
    Groebner basis is computed once and cached."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring, generators):
        gens = []
        for g in generators:
            g = ring(g)
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None

    def groebner_basis(self):
        if self._gb is None:
            self._gb = _buchberger(self.ring, self.generators)
        return self._gb

    def __add__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.ring != self.ring:
            raise MixedRings(f"cannot add ideals over {self.ring} and {other.ring}")
        return Ideal(self.ring, self.generators + other.generators)

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and other.ring == self.ring
            and other.generators == self.generators
        )

    def __hash__(self):
        return hash((Ideal, self.ring, self.generators))

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"<{inside}>"


def reduce(f, basis, max_terms=None):
    """Full normal form of `f` modulo an ordered list of nonzero
    polynomials: no term of the result is divisible by any leading term.

    `max_terms` bounds how many terms the partially rewritten polynomial
    may hold at once; crossing it raises `BudgetExceeded` instead of
    letting a swelling reduction run away.
    """
    basis = [g for g in basis if g]
    for g in basis:
        if g.ring != f.ring:
            raise MixedRings(f"cannot reduce across {f.ring} and {g.ring}")
    lts = [(g.lead_exps, g.lead_coeff, list(g.terms.items())) for g in basis]
    work = dict(f.terms)
    # Heap of candidate terms, largest first; stale entries for exponents no
    # longer in `work` are skipped on extraction.  New terms always sit below
    # the term being rewritten, so emitted terms are never regenerated.
    heap = [(tuple(-v for v in e[::-1]), e) for e in work]
    heapq.heapify(heap)
    out = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = work.pop(e, None)
        if c is None:
            continue
        for le, lc, gterms in lts:
            fits = True
            for a, b in zip(le, e):
                if a > b:
                    fits = False
                    break
            if fits:
                ratio = c / lc
                shift = exp_sub(e, le)
                for ge, gc in gterms:
                    if ge == le:
                        continue
                    te = exp_add(ge, shift)
                    s = work.get(te)
                    if s is None:
                        work[te] = -(ratio * gc)
                        heapq.heappush(heap, (tuple(-v for v in te[::-1]), te))
                    else:
                        s = s - ratio * gc
                        if s:
                            work[te] = s
                        else:
                            del work[te]
                if max_terms is not None and len(work) > max_terms:
                    raise BudgetExceeded(f"reduction passed {max_terms} live terms")
                break
        else:
            out[e] = c
    return MultiPoly(f.ring, out)


def s_polynomial(f, g):
    """The classical S-polynomial, with both leading terms scaled away."""
    lf, cf = f.leading_term()
    lg, cg = g.leading_term()
    both = exp_lcm(lf, lg)
    mf = f.ring.monomial(exp_sub(both, lf), cf.inverse())
    mg = g.ring.monomial(exp_sub(both, lg), cg.inverse())
    return mf * f - mg * g


def _normalize(f):
    """Monic over a finite field; primitive integer coefficients with a
    positive leading one over the rationals."""
    if isinstance(f.ring.field, RationalField):
        dens = lcm(*(c.value.denominator for c in f.terms.values()))
        nums = gcd(*(c.value.numerator * (dens // c.value.denominator) for c in f.terms.values()))
        scale = Fraction(dens, nums)
        if f.lead_coeff.value < 0:
            scale = -scale
        return f * scale
    return f.monic()


def _buchberger(ring, generators, max_terms=None, max_steps=None):
    G = [_normalize(g) for g in generators if g]
    G.sort(key=lambda g: lex_key(g.lead_exps))
    if not G:
        return ()

    def pair_entry(i, j):
        both = exp_lcm(G[i].lead_exps, G[j].lead_exps)
        return (lex_key(both), i, j)

    heap = [pair_entry(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    heapq.heapify(heap)
    done = set()
    steps = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        done.add((i, j))
        li, lj = G[i].lead_exps, G[j].lead_exps
        both = exp_lcm(li, lj)
        if both == exp_add(li, lj):
            continue  # coprime leading terms reduce to zero
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not exp_divides(G[k].lead_exps, both):
                continue
            ik = (i, k) if i < k else (k, i)
            jk = (j, k) if j < k else (k, j)
            if ik in done and jk in done:
                skip = True
                break
        if skip:
            continue
        if max_steps is not None and steps >= max_steps:
            raise BudgetExceeded(f"basis computation passed {max_steps} reduction steps")
        steps += 1
        r = reduce(s_polynomial(G[i], G[j]), G, max_terms=max_terms)
        if r:
            G.append(_normalize(r))
            m = len(G) - 1
            for k in range(m):
                heapq.heappush(heap, pair_entry(k, m))
    return _interreduce(G)


def _interreduce(G):
    G = sorted(G, key=lambda g: lex_key(g.lead_exps))
    keep = []
    for g in G:
        if any(exp_divides(h.lead_exps, g.lead_exps) for h in keep):
            continue
        keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        out.append(reduce(g, others).monic())
    out.sort(key=lambda g: lex_key(g.lead_exps))
    return tuple(out)


def groebner_basis(ideal):
    """The reduced Groebner basis of an `Ideal` as a sorted tuple."""
    return ideal.groebner_basis()


def is_proper(ideal):
    """Whether the ideal omits 1, read off the reduced basis."""
    return not any(g.is_constant() for g in ideal.groebner_basis())


def member(f, ideal):
    """Ideal membership by normal form."""
    if f.ring != ideal.ring:
        raise MixedRings(f"{f.ring} differs from the ideal's {ideal.ring}")
    return not reduce(f, ideal.groebner_basis())


def elimination_ideal(ideal, k, max_terms=None, max_steps=None):
    """The ideal of consequences in the first `k` variables.

    Under the package order a reduced basis restricted to basis elements
    free of the trailing variables is a reduced basis of the intersection,
    so the result comes with its basis precomputed.  The optional work
    budget bounds the underlying basis computation as in `reduce` and
    raises `BudgetExceeded` once crossed; a budgeted run that finishes
    still caches the exact basis.
    """
    n = ideal.ring.nvars
    if k == n:
        return ideal
    if ideal._gb is None:
        ideal._gb = _buchberger(
            ideal.ring, ideal.generators, max_terms=max_terms, max_steps=max_steps
        )
    sub = ideal.ring.subring(k)
    kept = [
        g.restrict_to(k)
        for g in ideal._gb
        if not any(any(e[k:]) for e in g.terms)
    ]
    out = Ideal(sub, kept)
    out._gb = tuple(kept)
    return out


def staircase_dimension(ideal):
    """Dimension of the quotient as a vector space, or `INFINITE`.

    Counts monomials under the staircase of leading terms; raises
    `ImproperIdeal` when the ideal is the whole ring.
    """
    gb = ideal.groebner_basis()
    if any(g.is_constant() for g in gb):
        raise ImproperIdeal("the quotient by the whole ring has no dimension")
    n = ideal.ring.nvars
    leads = [g.lead_exps for g in gb]
    bounds = [None] * n
    for le in leads:
        live = [i for i, e in enumerate(le) if e]
        if len(live) == 1:
            bounds[live[0]] = le[live[0]]
    if any(b is None for b in bounds):
        return INFINITE
    count = 0
    for e in itertools.product(*(range(b) for b in bounds)):
        if not any(exp_divides(le, e) for le in leads):
            count += 1
    return count
