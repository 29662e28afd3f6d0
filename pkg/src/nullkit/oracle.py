"""Brute-force ground truth at desk scale.

Everything here works by exhaustive enumeration: a variety slice lists every
tuple over the degree-k enumeration field at which all generators vanish, and
the membership oracles reduce radical questions to vanishing on slices or to
one explicit power.  Nothing is clever, which is the point: these answers are
independent of the constructive machinery they check.

Enumeration fields are the canonical extensions, so point coordinates are
reproducible across runs, and slices of compatible degrees compare through
`embed`.  Explicit budgets guard every enumeration; an oracle that silently
truncates would certify nothing.
"""

import itertools
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    HypothesisViolation,
    ImproperIdeal,
    InfiniteDimension,
    MixedRings,
    UnsupportedField,
)
from .field import PrimeField, Tower
from .groebner import INFINITE, reduce, staircase_dimension
from .poly import PolyRing
from .unifactor import canonical_extension, factor


@dataclass(frozen=True)
class VarietySlice:
    """All common zeros of an ideal with coordinates in the degree-k
    enumeration field, in canonical coordinate order."""

    k: int
    field: object
    points: tuple


def _value_at(g, point, F, cache):
    total = F.zero
    for exps, c in g.terms.items():
        val = F.element(c.value)
        for coord, e in zip(point, exps):
            if e:
                key = (coord, e)
                if key not in cache:
                    cache[key] = coord**e
                val = val * cache[key]
        total = total + val
    return total


def variety_slice(I, k, max_tuples=1 << 24):
    """The complete solution set of `I` over the field with p^k elements,
    found by scanning all p^(k*n) tuples; `BudgetExceeded` past the scan
    budget."""
    ring = I.ring
    if not isinstance(ring.field, PrimeField):
        raise UnsupportedField("point enumeration runs over prime fields")
    p = ring.field.p
    n = ring.nvars
    if p ** (k * n) > max_tuples:
        raise BudgetExceeded(f"scanning {p}^{k * n} tuples exceeds the budget")
    F = canonical_extension(p, k)
    elements = list(F.iter_elements())
    cache = {}
    points = [
        pt
        for pt in itertools.product(elements, repeat=n)
        if all(not _value_at(g, pt, F, cache) for g in I.generators)
    ]
    points.sort(key=lambda pt: tuple(c.canonical_key() for c in pt))
    return VarietySlice(k=k, field=F, points=tuple(points))


def _checked_dimension(I, D):
    try:
        dim = staircase_dimension(I)
    except ImproperIdeal:
        # no points and nothing outside the ideal: every question below is
        # vacuously true, so the bound cannot be violated
        return 0
    if dim is INFINITE:
        raise InfiniteDimension("the zero set is positive dimensional")
    if dim > D:
        raise HypothesisViolation(f"quotient dimension {dim} exceeds the stated bound {D}")
    return dim


def radical_member_oracle(f, I, D, max_tuples=1 << 24):
    """Whether `f` vanishes at every zero of `I` in every enumeration field
    of degree 1 through `D`.  Residue degrees of maximal ideals above a
    quotient of dimension at most `D` are bounded by `D`, so these slices
    witness all of them."""
    ring = I.ring
    if f.ring != ring:
        raise MixedRings(f"{f.ring} differs from {ring}")
    if not isinstance(ring.field, PrimeField):
        raise UnsupportedField("point enumeration runs over prime fields")
    _checked_dimension(I, D)
    for k in range(1, D + 1):
        piece = variety_slice(I, k, max_tuples=max_tuples)
        cache = {}
        for pt in piece.points:
            if _value_at(f, pt, piece.field, cache):
                return False
    return True


def power_member_oracle(f, I, D):
    """Whether the `D`-th power of `f` lies in `I`.  In a quotient of
    dimension at most `D` every nilpotent dies by the `D`-th power, so this
    decides radical membership without any enumeration."""
    if f.ring != I.ring:
        raise MixedRings(f"{f.ring} differs from {I.ring}")
    _checked_dimension(I, D)
    return not reduce(f**D, I.groebner_basis())


_embedded_gens = {}


def embed(a, target):
    """The canonical image of `a` in the enumeration field `target`: prime
    values map by value, and a source generator maps to the least root of
    its defining polynomial, making repeated embeddings agree."""
    src = a.field
    if src == target:
        return a
    if isinstance(src, PrimeField):
        if src.p != target.characteristic:
            raise UnsupportedField("no embedding across characteristics")
        return target.element(a.value)
    if not isinstance(src, Tower) or src.height != 1:
        raise UnsupportedField("embedding starts from a prime or single-level field")
    if (
        src.characteristic != target.characteristic
        or target.total_degree % src.total_degree
    ):
        raise UnsupportedField(
            f"degree {src.total_degree} does not divide {target.total_degree}"
        )
    key = (src, target)
    if key not in _embedded_gens:
        uring = PolyRing(target, ("y",))
        minpoly = uring.from_dict(
            {(i,): target.element(c) for i, c in enumerate(src.chain[0])}
        )
        roots = [
            -q.dense_coefficients()[0]
            for q, _ in factor(minpoly, seed=0).factors
            if q.total_degree() == 1
        ]
        _embedded_gens[key] = min(roots, key=lambda r: r.canonical_key())
    root = _embedded_gens[key]
    out = target.zero
    for c in reversed(src.coordinates(a)):
        out = out * root + target.element(c)
    return out
