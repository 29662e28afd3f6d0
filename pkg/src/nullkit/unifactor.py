"""Univariate factorization over finite fields and towers.

The pipeline is squarefree decomposition (with p-th root extraction for
inseparable parts, valid because every field here is perfect), then
distinct-degree splitting by powers of the field's size, then equal-degree
splitting with random polynomials: quadratic-residue tests in odd
characteristic, trace sums in characteristic two.  Randomness comes only
from an explicit seed, so every result is reproducible; the factor list is
returned in a canonical order (degree, then coefficient key, ascending).

Polynomials cross the public boundary as univariate `MultiPoly` values;
internally everything is little-endian `FieldElement` lists.
"""

import random
from dataclasses import dataclass

from .errors import BadVariableCount, InternalInvariantError, UnsupportedField, ZeroPolynomial
from .field import pth_root
from .poly import MultiPoly, PolyRing


# -- dense little-endian helpers ---------------------------------------------

def _trim(v):
    while v and not v[-1]:
        v.pop()
    return v


def _to_vec(f):
    if f.ring.nvars != 1:
        raise BadVariableCount(f"{f.ring} is not univariate")
    return f.dense_coefficients()


def _to_poly(ring, v):
    return ring.from_dict({(i,): c for i, c in enumerate(v) if c})


def _vadd(v, w):
    out = list(v) + list(w[len(v) :]) if len(w) > len(v) else list(v)
    for i, c in enumerate(w[: len(v)] if len(w) > len(v) else w):
        out[i] = out[i] + c
    return _trim(out)


def _vsub(field, v, w):
    out = list(v) + [field.zero] * (len(w) - len(v))
    for i, c in enumerate(w):
        out[i] = out[i] - c
    return _trim(out)


def _vmul(field, v, w):
    if not v or not w:
        return []
    out = [field.zero] * (len(v) + len(w) - 1)
    for i, a in enumerate(v):
        if not a:
            continue
        for j, b in enumerate(w):
            if b:
                out[i + j] = out[i + j] + a * b
    return _trim(out)


def _vscale(v, c):
    return _trim([a * c for a in v])


def _vdivmod(field, num, den):
    if not den:
        raise ZeroPolynomial("division by the zero polynomial")
    lead_inv = den[-1].inverse()
    dd = len(den) - 1
    rem = list(num)
    if len(rem) - 1 < dd:
        return [], _trim(rem)
    quo = [field.zero] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if not c:
            continue
        q = c * lead_inv
        quo[i - dd] = q
        for j in range(dd):
            if den[j]:
                rem[i - dd + j] = rem[i - dd + j] - q * den[j]
        rem[i] = field.zero
    return _trim(quo), _trim(rem)


def _vmod(field, num, den):
    return _vdivmod(field, num, den)[1]


def _vmonic(v):
    if not v or v[-1] == 1:
        return list(v)
    return _vscale(v, v[-1].inverse())


def _vgcd(field, v, w):
    a, b = list(v), list(w)
    while b:
        a, b = b, _vmod(field, a, b)
    return _vmonic(a)


def _vpowmod(field, base, e, mod):
    result = [field.one]
    base = _vmod(field, base, mod)
    while e:
        if e & 1:
            result = _vmod(field, _vmul(field, result, base), mod)
        base = _vmod(field, _vmul(field, base, base), mod)
        e >>= 1
    return result


def _vderiv(field, v):
    p = field.characteristic
    return _trim([c * (i % p if p else i) for i, c in enumerate(v)][1:])


def _vrand(field, rng, degree_below):
    """A uniformly random polynomial of degree < `degree_below`."""
    return _trim([field.random_element(rng) for _ in range(degree_below)])


# -- canonical ordering ------------------------------------------------------

def _vec_key(v):
    """Sort key for monic vectors: degree, then coefficients from the
    constant up in the field's canonical order."""
    return (len(v), tuple(c.canonical_key() for c in v))


# -- squarefree decomposition ------------------------------------------------

def squarefree_decompose(f):
    """Pairwise-coprime monic squarefree parts with multiplicities.

    The product of part^multiplicity recovers `f` up to its leading
    coefficient.  Constants decompose into an empty list.
    """
    field = f.ring.field
    if field.characteristic == 0 or field.order is None:
        raise UnsupportedField("squarefree splitting here expects a finite field")
    v = _to_vec(f)
    if not v:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    v = _vmonic(v)
    p = field.characteristic
    parts = {}

    def record(vec, mult):
        key = tuple(vec)
        parts[key] = parts.get(key, 0) + mult

    n = 1
    while len(v) > 1:
        d = _vderiv(field, v)
        if d:
            g = _vgcd(field, v, d)
            h = _vdivmod(field, v, g)[0]
            i = 1
            while len(h) > 1:
                gg = _vgcd(field, g, h)
                part = _vdivmod(field, h, gg)[0]
                if len(part) > 1:
                    record(part, i * n)
                g = _vdivmod(field, g, gg)[0]
                h = gg
                i += 1
            v = g
            if len(v) <= 1:
                break
        # v is now a polynomial in x^p; take the coefficientwise p-th root
        root = [field.zero] * ((len(v) - 1) // p + 1)
        for i, c in enumerate(v):
            if c:
                if i % p:
                    raise InternalInvariantError("derivative zero but not a p-th power")
                root[i // p] = pth_root(c)
        v = _trim(root)
        n *= p
    ring = f.ring
    out = [(_to_poly(ring, list(vec)), m) for vec, m in parts.items()]
    out.sort(key=lambda pair: _vec_key(_to_vec(pair[0])))
    return out


# -- distinct- and equal-degree splitting ------------------------------------

def _ddf(field, v):
    """Distinct-degree split of a monic squarefree vector: list of
    (product-of-irreducibles, degree) pairs, ascending in degree."""
    q = field.order
    out = []
    h = [field.zero, field.one]  # x
    rest = list(v)
    d = 0
    while len(rest) - 1 > 2 * d:
        d += 1
        h = _vpowmod(field, h, q, rest)
        g = _vgcd(field, rest, _vsub(field, h, [field.zero, field.one]))
        if len(g) > 1:
            out.append((g, d))
            rest = _vdivmod(field, rest, g)[0]
            h = _vmod(field, h, rest)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _edf(field, v, d, rng):
    """Split a monic squarefree product of degree-`d` irreducibles."""
    n = len(v) - 1
    if n == d:
        return [list(v)]
    q = field.order
    p = field.characteristic
    while True:
        r = _vrand(field, rng, n)
        if len(r) <= 1:
            continue
        g = _vgcd(field, v, r)
        if 1 < len(g) < len(v):
            pieces = g
        elif p == 2:
            # trace map over GF(2^k): sum of conjugates of r modulo v
            k = field.order.bit_length() - 1
            t = _vmod(field, r, v)
            acc = list(t)
            for _ in range(k * d - 1):
                t = _vmod(field, _vmul(field, t, t), v)
                acc = _vadd(acc, t)
            pieces = _vgcd(field, v, acc)
        else:
            h = _vpowmod(field, r, (q**d - 1) // 2, v)
            pieces = _vgcd(field, v, _vsub(field, h, [field.one]))
        if 1 < len(pieces) < len(v):
            rest = _vdivmod(field, v, pieces)[0]
            return _edf(field, pieces, d, rng) + _edf(field, rest, d, rng)


@dataclass(frozen=True)
class Factorization:
    """`unit * product(factor^multiplicity)` with monic factors in
    canonical order."""

    ring: object
    unit: object
    factors: tuple

    def expand(self):
        out = self.ring.constant(self.unit)
        for f, m in self.factors:
            out = out * f**m
        return out


def factor(f, seed=0):
    """Full factorization of a nonzero univariate polynomial over a finite
    field or tower into monic irreducibles.  Deterministic for a fixed
    seed."""
    field = f.ring.field
    if field.order is None:
        raise UnsupportedField("factorization here expects a finite field")
    v = _to_vec(f)
    if not v:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit = v[-1]
    rng = random.Random(seed)
    found = []
    if len(v) > 1:
        for part, mult in squarefree_decompose(f):
            pv = _to_vec(part)
            for prod, d in _ddf(field, pv):
                for piece in _edf(field, prod, d, rng):
                    found.append((piece, mult))
    found.sort(key=lambda pair: (_vec_key(pair[0]), pair[1]))
    factors = tuple((_to_poly(f.ring, vec), m) for vec, m in found)
    return Factorization(ring=f.ring, unit=unit, factors=factors)


def is_irreducible(f):
    """Deterministic irreducibility test by the distinct-degree sieve:
    `f` is irreducible iff it shares no root with any `x^(q^i) - x` for
    `i` up to half its degree."""
    field = f.ring.field
    if field.order is None:
        raise UnsupportedField("irreducibility here expects a finite field")
    v = _to_vec(f)
    if len(v) <= 1:
        return False
    n = len(v) - 1
    if n == 1:
        return True
    q = field.order
    x = [field.zero, field.one]
    h = list(x)
    for _ in range(n // 2):
        h = _vpowmod(field, h, q, v)
        if len(_vgcd(field, v, _vsub(field, h, x))) > 1:
            return False
    return True


def canonical_extension(p, k, name="t"):
    """The field with p^k elements, presented by the first monic degree-k
    polynomial over GF(p), in ascending coefficient order, that is
    irreducible.  k = 1 gives the prime field itself."""
    from itertools import product

    from .field import PrimeField, tower_extend

    base = PrimeField(p)
    if k < 1:
        raise ZeroPolynomial("extension degree must be at least 1")
    if k == 1:
        return base
    ring = PolyRing(base, (name,))
    top = ring.gen(0) ** k
    for lower in product(range(p), repeat=k):
        candidate = top + ring.from_dict({(i,): base.element(c) for i, c in enumerate(lower) if c})
        if is_irreducible(candidate):
            return tower_extend(base, candidate, verify=False, max_total_degree=k)
    raise InternalInvariantError("no irreducible polynomial of the requested degree")
