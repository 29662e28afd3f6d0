"""Maximal ideals over prime fields, quotient algebra decisions, and
radical membership.

`maximal_ideal_containing` runs the constructive recursion: make some
generator monic in the top variable by a shear substitution when none is,
eliminate that variable, recurse, then view the remaining generators as
univariate polynomials over the residue tower of the smaller solution,
take their gcd, and append its canonical irreducible factor to the chain.
The result is a triangular chain in working coordinates, the record of the
substitutions applied, and a pulled-back generating set in the original
coordinates, re-verified after construction.

Quotient decisions are exact linear algebra on the staircase basis of a
zero-dimensional quotient: `quotient_inverse` finds the first linear
dependence among reduced powers (surfacing a zero-divisor witness when the
constant term vanishes), and `is_field` tests reducedness through the
trace bilinear form, then connectedness through the fixed space of the
p-power map.  `radical_member` decides membership in the radical by one
properness test after adjoining an inverse for the candidate.

Points live in the canonical field with p^D elements: the chain is solved
level by level, each partial point specializing the next chain polynomial,
and the full point set forms a single orbit under coordinatewise p-th
powers.
"""

import itertools
import random
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    ImproperIdeal,
    InfiniteDimension,
    InternalInvariantError,
    MixedRings,
    UnsupportedField,
    ZeroClass,
    ZeroDivisor,
)
from .field import FieldElement, PrimeField, frobenius, tower_extend
from .groebner import (
    INFINITE,
    Ideal,
    elimination_ideal,
    groebner_basis,
    is_proper,
    reduce,
    staircase_dimension,
)
from .noether import MonicizingMap
from .poly import PolyRing, exp_divides, lex_key
from .resultant import resultant
from .unifactor import _vgcd, canonical_extension, factor


@dataclass(frozen=True)
class TriangularChain:
    """A triangular system m_1(x_1), m_2(x_1,x_2), ..., each monic in its
    top variable and irreducible over the tower below it; the generated
    ideal is maximal with residue degree the product of the top degrees."""

    ring: object
    polys: tuple
    residue_field: object

    @property
    def degrees(self):
        return tuple(m.degree_in(k) for k, m in enumerate(self.polys))

    @property
    def residue_degree(self):
        out = 1
        for d in self.degrees:
            out *= d
        return out

    def ideal(self):
        return Ideal(self.ring, self.polys)


@dataclass(frozen=True)
class MaximalIdealResult:
    """A constructed maximal ideal containing `source`.

    `chain` lives in working coordinates; `automorphisms` records the shear
    substitutions in application order (outermost level first); `generators`
    is the reduced basis of the pulled-back ideal in original coordinates."""

    chain: TriangularChain
    automorphisms: tuple
    generators: tuple
    residue_degree: int
    source: object

    def ideal(self):
        out = Ideal(self.chain.ring, self.generators)
        out._gb = list(self.generators)
        return out


@dataclass(frozen=True)
class PointSet:
    """The common zeros of a maximal ideal over the canonical extension of
    degree `extension_degree`, partitioned into orbits of the coordinatewise
    p-th power map."""

    extension_degree: int
    field: object
    points: tuple
    orbits: tuple


# Largest last-variable degree any sheared generator may be given before
# the construction abandons the base-m digit table for a smaller one; past
# this, elimination cost escalates steeply.
_SHEAR_DEGREE_BUDGET = 5

# Work budget for the exact elimination attempt inside the descent: live
# terms in one reduction, and reduction steps overall.  Both are counts,
# so which descent a given input takes is machine independent.
_ELIM_TERM_BUDGET = 300
_ELIM_STEP_BUDGET = 120


def _shear_map(f, targets):
    """A shear making `f` monic in the last variable, sized to `targets`.

    A weight table w sends x_i to x_i + x_n^(w_i), leaving zero-weight
    variables untouched.  The image of `f` is monic in x_n as soon as
    exactly one term attains the maximal weighted degree and that term
    avoids every zero-weight variable: its constant coefficient then leads.

    The classical base-m digit table (weights m^(n-1), ..., m, 1) is used
    whenever it keeps every substituted generator's last-variable degree
    within the budget.  Beyond that it multiplies degrees so badly that
    eliminating the last variable becomes intractable, so the smallest
    admissible table is chosen instead: candidates are scanned in a fixed
    order (largest entry, then entry sum, then the table itself) and the
    first admissible one wins, keeping the choice deterministic.  The
    digit table restricted to the occurring variables is always admissible
    and bounds that scan."""
    ring = f.ring
    n = ring.nvars
    m = 1 + max(max(exps) for exps in f.terms)
    terms = list(f.terms)

    def image_degree(g, full):
        return max(sum(e * wi for e, wi in zip(exps, full)) for exps in g.terms)

    paper = tuple(m ** (n - 1 - i) for i in range(n - 1))
    if max(image_degree(g, paper + (1,)) for g in targets) <= _SHEAR_DEGREE_BUDGET:
        return MonicizingMap(ring=ring, base=m, weights=paper + (1,))

    def admissible(w):
        best = None
        tie = False
        for exps in terms:
            v = sum(e * wi for e, wi in zip(exps, w)) + exps[n - 1]
            if best is None or v > best[0]:
                best = (v, exps)
                tie = False
            elif v == best[0]:
                tie = True
        if tie:
            return False
        return all(e == 0 or wi > 0 for e, wi in zip(best[1], w))

    occurring = sorted({i for exps in terms for i, e in enumerate(exps) if e} - {n - 1})
    fallback = [0] * (n - 1)
    for rank, i in enumerate(reversed(occurring)):
        fallback[i] = m ** (rank + 1)
    cap = max(fallback) if fallback else 0
    for bound in range(cap + 1):
        if (bound + 1) ** (n - 1) > 20000:
            break
        layer = [w for w in itertools.product(range(bound + 1), repeat=n - 1) if max(w, default=0) == bound]
        layer.sort(key=lambda w: (sum(w), w))
        hit = next((w for w in layer if admissible(w)), None)
        if hit is not None:
            return MonicizingMap(ring=ring, base=m, weights=hit + (1,))
    return MonicizingMap(ring=ring, base=m, weights=tuple(fallback) + (1,))


def _monic_index(gens, var):
    for idx, g in enumerate(gens):
        d = g.degree_in(var)
        if d >= 1 and g.coefficients_in(var)[d].is_constant():
            return idx
    return None


def _descent_ideal(J, keep):
    """A subideal of the elimination ideal of `J`, generated by the
    generators already free of the last variable together with the
    resultant of each remaining generator against the monic one.

    With at most one generator involving the eliminated variable beyond
    the monic one, these resultants vanish exactly on the projection of
    the zero set, so every maximal ideal above them contains the whole
    elimination ideal (a maximal ideal is radical) and descending through
    this subideal is as good as descending through the elimination ideal
    itself.  With more, the pairwise projections can be strictly larger
    than the joint one; the caller detects that through a unit gcd and
    repeats the descent with the full elimination ideal.
    """
    ring = J.ring
    involving = [g for g in J.generators if g.degree_in(keep) > 0]
    gens = [g.restrict_to(keep) for g in J.generators if g.degree_in(keep) == 0]
    if len(involving) >= 2:
        midx = next(
            (i for i, g in enumerate(involving)
             if g.coefficients_in(keep)[g.degree_in(keep)].is_constant()),
            None,
        )
        if midx is None:
            raise InternalInvariantError("descent without a generator monic in the last variable")
        monic = involving[midx].monic()
        for i, other in enumerate(involving):
            if i == midx:
                continue
            R = resultant(other, monic, keep)
            if R.is_constant():
                if R:
                    raise InternalInvariantError("a proper ideal produced a unit resultant")
            else:
                gens.append(R.restrict_to(keep))
    return Ideal(ring.subring(keep), gens)


def _descent_fold(J, keep):
    """A descent ideal that is always sufficient, whatever the number of
    generators involving the eliminated variable.

    The non-monic generators are folded into one polynomial with powers of
    a fresh indeterminate as tags, and the resultant of the fold against
    the monic generator is expanded into coefficients of the tag.  Each
    coefficient lies in `J`, and a point where every coefficient vanishes
    makes the resultant vanish for every tag value; with only finitely
    many candidate roots of the monic generator, some single root must
    then kill every folded generator at once.  The coefficients therefore
    cut out exactly the projection of the zero set, and every maximal
    ideal above them contains the whole elimination ideal.
    """
    ring = J.ring
    involving = [g for g in J.generators if g.degree_in(keep) > 0]
    gens = [g.restrict_to(keep) for g in J.generators if g.degree_in(keep) == 0]
    if len(involving) >= 2:
        midx = next(
            (i for i, g in enumerate(involving)
             if g.coefficients_in(keep)[g.degree_in(keep)].is_constant()),
            None,
        )
        if midx is None:
            raise InternalInvariantError("descent without a generator monic in the last variable")
        tag = "u"
        while tag in ring.names:
            tag += "u"
        ext = PolyRing(ring.field, ring.names + (tag,))

        def lifted(g):
            return ext.from_dict({e + (0,): c for e, c in g.terms.items()})

        comb = ext.zero
        power = 0
        for i, g in enumerate(involving):
            if i == midx:
                continue
            comb = comb + lifted(g) * ext.gen(ring.nvars) ** power
            power += 1
        R = resultant(comb, lifted(involving[midx].monic()), keep)
        for coeff in R.coefficients_in(ring.nvars):
            if coeff.is_constant():
                if coeff:
                    raise InternalInvariantError("a proper ideal produced a unit resultant")
            else:
                gens.append(coeff.restrict_to(keep))
    return Ideal(ring.subring(keep), gens)


def _payload_poly(ring, level, payload):
    # decode a tower payload into the polynomial ring, t_j standing for x_j
    if level == 0:
        return ring.constant(payload)
    out = ring.zero
    xj = ring.gen(level - 1)
    for i, sub in enumerate(payload):
        part = _payload_poly(ring, level - 1, sub)
        if part:
            out = out + part * xj**i
    return out


def _lift_chain_poly(ring, k, m_top):
    out = ring.zero
    xk = ring.gen(k - 1)
    for i, c in enumerate(m_top.dense_coefficients()):
        if c:
            out = out + _payload_poly(ring, k - 1, c.value) * xk**i
    return out


def _tower_lift(K_new, a):
    v = (a.value,) if a.value else ()
    return FieldElement(K_new, v)


def _down_poly(g, var, classes, K, uring, cache):
    # the image of g under x_i -> classes[i] for i < var, kept univariate
    out = {}
    for exps, c in g.terms.items():
        val = K.element(c.value)
        for i in range(var):
            e = exps[i]
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = classes[i] ** e
                val = val * cache[key]
        if not val:
            continue
        key = (exps[var],)
        out[key] = out[key] + val if key in out else val
    return uring.from_dict({e: v for e, v in out.items() if v})


def _construct(ideal, rng, budget):
    ring = ideal.ring
    field = ring.field
    k = ring.nvars

    if k == 1:
        h = []
        for g in ideal.generators:
            h = _vgcd(field, h, g.dense_coefficients())
        if len(h) == 1:
            raise InternalInvariantError("a unit survived into the recursion")
        if not h:
            m_top = ring.gen(0)
        else:
            parts = factor(ring.from_dict({(i,): c for i, c in enumerate(h) if c}),
                           seed=rng.randrange(1 << 32))
            m_top = parts.factors[0][0]
        K = tower_extend(field, m_top, name="t1", verify=False, max_total_degree=budget)
        return [m_top], [], K, (K.gen(0),)

    work = list(ideal.generators)
    autos_here = []
    if any(g.is_constant() and g for g in work):
        raise InternalInvariantError("a unit survived into the recursion")
    if _monic_index(work, k - 1) is None:
        f0 = next((g for g in work if not g.is_constant()), None)
        if f0 is not None:
            mp = _shear_map(f0, work)
            fwd = mp.substitution_images(1)
            work = [g.substitute(fwd) for g in work]
            autos_here = [mp]
            if _monic_index(work, k - 1) is None:
                raise InternalInvariantError("the shear failed to produce a monic generator")

    J = Ideal(ring, work)
    # Descend through the exact elimination ideal while its basis stays
    # small; past the work budget, fall back to resultant descents, whose
    # cost is bounded in advance by matrix size.  The pairwise descent is
    # sufficient on its own with at most two generators involving the last
    # variable; otherwise a unit gcd below reveals a shortfall and the
    # tagged fold, always sufficient, settles it.
    guaranteed = sum(1 for g in work if g.degree_in(k - 1) > 0) <= 2
    plans = [
        (True, lambda: elimination_ideal(
            J, k - 1, max_terms=_ELIM_TERM_BUDGET, max_steps=_ELIM_STEP_BUDGET)),
        (guaranteed, lambda: _descent_ideal(J, k - 1)),
    ]
    if not guaranteed:
        plans.append((True, lambda: _descent_fold(J, k - 1)))
    for attempt, (sufficient, plan) in enumerate(plans):
        try:
            Iprime = plan()
        except BudgetExceeded:
            if attempt == len(plans) - 1:
                raise
            continue
        sub_polys, sub_autos, K, classes_sub = _construct(Iprime, rng, budget)
        uring = PolyRing(K, (ring.names[k - 1],))
        cache = {}
        h = []
        for g in work:
            image = _down_poly(g, k - 1, classes_sub, K, uring, cache)
            if image:
                h = _vgcd(K, h, image.dense_coefficients())
        if len(h) != 1:
            break
        if sufficient:
            raise InternalInvariantError("the tower image became the unit ideal")
    if not h:
        m_top = uring.gen(0)
    else:
        parts = factor(uring.from_dict({(i,): c for i, c in enumerate(h) if c}),
                       seed=rng.randrange(1 << 32))
        m_top = parts.factors[0][0]
    K_new = tower_extend(K, m_top, name=f"t{k}", verify=False, max_total_degree=budget)

    m_k = _lift_chain_poly(ring, k, m_top)
    classes_work = tuple(_tower_lift(K_new, c) for c in classes_sub) + (K_new.gen(k - 1),)
    classes = autos_here[0].point_image(classes_work) if autos_here else classes_work
    return [*sub_polys, m_k], autos_here + sub_autos, K_new, classes


def _inverse_images(ring, mp):
    j = mp.ring.nvars
    images = [
        ring.gen(i) if mp.weights[i] == 0 else ring.gen(i) - ring.gen(j - 1) ** mp.weights[i]
        for i in range(j - 1)
    ]
    images.append(ring.gen(j - 1))
    images.extend(ring.gen(t) for t in range(j, ring.nvars))
    return images


def _pullback_poly(ring, image_lists, h):
    out = h
    for images in image_lists:
        out = out.substitute(images)
    return out


def _point_pullback(autos, point):
    out = tuple(point)
    for mp in reversed(autos):
        j = mp.ring.nvars
        out = mp.point_image(out[:j]) + out[j:]
    return out


def _verify_result(result):
    ring = result.chain.ring
    M = result.ideal()
    if not is_proper(M):
        raise InternalInvariantError("the pulled-back ideal is improper")
    for g in result.source.generators:
        if reduce(g, result.generators):
            raise InternalInvariantError("an input generator escapes the pulled-back ideal")
    if staircase_dimension(M) != result.residue_degree:
        raise InternalInvariantError("the quotient dimension disagrees with the chain degree")
    if result.chain.residue_field.total_degree != result.residue_degree:
        raise InternalInvariantError("the tower degree disagrees with the chain degree")


def maximal_ideal_containing(I, seed=0, max_residue_degree=64):
    """A maximal ideal containing the proper ideal `I`, as a triangular
    chain in working coordinates plus the substitution record and the
    pulled-back generators.  Deterministic for a fixed seed."""
    ring = I.ring
    if not isinstance(ring.field, PrimeField):
        raise UnsupportedField("maximal ideals are constructed over prime fields")
    if not is_proper(I):
        raise ImproperIdeal("an improper ideal lies in no maximal ideal")
    rng = random.Random(seed)
    polys, autos, K, _ = _construct(I, rng, max_residue_degree)
    chain = TriangularChain(
        ring=ring,
        polys=tuple(m.lift_to(ring) for m in polys),
        residue_field=K,
    )
    image_lists = [_inverse_images(ring, mp) for mp in reversed(autos)]
    pulled = [_pullback_poly(ring, image_lists, m) for m in chain.polys]
    generators = tuple(groebner_basis(Ideal(ring, pulled)))
    result = MaximalIdealResult(
        chain=chain,
        automorphisms=tuple(autos),
        generators=generators,
        residue_degree=chain.residue_degree,
        source=I,
    )
    _verify_result(result)
    return result


def quotient_dimension(I):
    """Dimension of the quotient as a vector space over the coefficient
    field, or `INFINITE`."""
    return staircase_dimension(I)


def _staircase_monomials(I):
    gb = I.groebner_basis()
    if any(g.is_constant() for g in gb):
        raise ImproperIdeal("the quotient by the whole ring has no basis")
    n = I.ring.nvars
    leads = [g.lead_exps for g in gb]
    bounds = [None] * n
    for le in leads:
        live = [i for i, e in enumerate(le) if e]
        if len(live) == 1:
            bounds[live[0]] = le[live[0]]
    if any(b is None for b in bounds):
        raise InfiniteDimension("the quotient has no finite monomial basis")
    monos = [
        e
        for e in itertools.product(*(range(b) for b in bounds))
        if not any(exp_divides(le, e) for le in leads)
    ]
    monos.sort(key=lex_key)
    return gb, monos


def quotient_inverse(f, I):
    """The inverse of the class of `f` in the quotient by `I`, found
    through the first linear dependence among reduced powers of `f`;
    `ZeroDivisor` carries a nonzero cofactor witness when the dependence
    has no constant term."""
    ring = I.ring
    if f.ring != ring:
        raise MixedRings(f"{f.ring} differs from {ring}")
    field = ring.field
    gb, basis = _staircase_monomials(I)
    r = reduce(f, gb)
    if not r:
        raise ZeroClass("the zero class has no inverse")
    one = field.one
    powers = [ring.one]
    echelon = [((0,) * ring.nvars, {(0,) * ring.nvars: one}, {0: one})]
    current = ring.one
    for k in range(1, len(basis) + 1):
        current = reduce(current * r, gb)
        powers.append(current)
        v = dict(current.terms)
        combo = {k: one}
        for piv, row, rcombo in echelon:
            c = v.get(piv)
            if c:
                scale = c / row[piv]
                for e, rc in row.items():
                    nxt = v.get(e, field.zero) - scale * rc
                    if nxt:
                        v[e] = nxt
                    elif e in v:
                        del v[e]
                for i, rc in rcombo.items():
                    nxt = combo.get(i, field.zero) - scale * rc
                    if nxt:
                        combo[i] = nxt
                    elif i in combo:
                        del combo[i]
        if not v:
            cofactor = ring.zero
            for i, lam in combo.items():
                if i >= 1:
                    cofactor = cofactor + powers[i - 1] * lam
            lam0 = combo.get(0)
            if not lam0:
                raise ZeroDivisor(
                    "the class divides zero and has no inverse", witness=cofactor
                )
            return cofactor * (-lam0.inverse())
        pivot = max(v, key=lex_key)
        echelon.append((pivot, v, combo))
    raise InternalInvariantError("no dependence within the quotient dimension")


def _rank(rows):
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def field_obstruction(I):
    """Why the quotient by `I` fails to be a field: "degenerate trace form"
    (nilpotents), "disconnected" (idempotents), or None when it is one."""
    ring = I.ring
    field = ring.field
    if not isinstance(field, PrimeField):
        raise UnsupportedField("the field criterion runs over prime fields")
    gb, basis = _staircase_monomials(I)
    D = len(basis)
    index = {e: i for i, e in enumerate(basis)}
    nf_cache = {}

    def nf_coords(exps):
        if exps not in nf_cache:
            vec = [field.zero] * D
            for e, c in reduce(ring.monomial(exps), gb).terms.items():
                vec[index[e]] = c
            nf_cache[exps] = vec
        return nf_cache[exps]

    def esum(a, b):
        return tuple(x + y for x, y in zip(a, b))

    # trace of multiplication by each basis monomial
    tau = []
    for bm in basis:
        t = field.zero
        for kk, bk in enumerate(basis):
            t = t + nf_coords(esum(bm, bk))[kk]
        tau.append(t)
    gram = []
    for bi in basis:
        row = []
        for bj in basis:
            coords = nf_coords(esum(bi, bj))
            s = field.zero
            for m in range(D):
                if coords[m]:
                    s = s + coords[m] * tau[m]
            row.append(s)
        gram.append(row)
    if _rank(gram) < D:
        return "degenerate trace form"

    p = field.p
    fixed = []
    for j, bj in enumerate(basis):
        col = nf_coords(tuple(p * e for e in bj))
        fixed.append([c - (field.one if i == j else field.zero) for i, c in enumerate(col)])
    # columns to rows: rank is transpose-invariant, rows suffice
    if D - _rank(fixed) != 1:
        return "disconnected"
    return None


def is_field(I):
    """Whether the quotient by `I` is a field: reduced (nondegenerate trace
    form) and connected (one-dimensional fixed space of the p-power map)."""
    return field_obstruction(I) is None


def is_maximal(I):
    """Whether `I` is maximal: proper, finite-dimensional quotient, and the
    quotient is a field."""
    if not isinstance(I.ring.field, PrimeField):
        raise UnsupportedField("maximality is decided over prime fields")
    if not is_proper(I):
        return False
    if staircase_dimension(I) is INFINITE:
        return False
    return is_field(I)


def radical_member(f, I):
    """Whether `f` lies in the radical of `I`: adjoin a fresh greatest
    variable y and test that I together with y*f - 1 generates everything."""
    ring = I.ring
    if f.ring != ring:
        raise MixedRings(f"{f.ring} differs from {ring}")
    fresh = "y"
    count = 0
    while fresh in ring.names:
        count += 1
        fresh = f"y{count}"
    ext = PolyRing(ring.field, ring.names + (fresh,))
    lifted = [g.lift_to(ext) for g in I.generators]
    lifted.append(ext.gen(ring.nvars) * f.lift_to(ext) - 1)
    return not is_proper(Ideal(ext, lifted))


def _eval_ext(g, point, F, cache):
    total = F.zero
    for exps, c in g.terms.items():
        val = F.element(c.value)
        for i, e in enumerate(exps):
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = point[i] ** e
                val = val * cache[key]
        total = total + val
    return total


def points_of_maximal_ideal(M, max_degree=12, max_order=1 << 20):
    """The common zeros of the constructed maximal ideal over the canonical
    field with p^D elements: exactly D points, one orbit under the
    coordinatewise p-th power map, at which every source generator
    vanishes."""
    ring = M.chain.ring
    p = ring.field.p
    D = M.residue_degree
    if D > max_degree or p**D > max_order:
        raise BudgetExceeded(f"enumerating {p}^{D} elements exceeds the budget")
    F = canonical_extension(p, D)

    partials = [()]
    for j, m in enumerate(M.chain.polys):
        uring = PolyRing(F, (ring.names[j],))
        nxt = []
        for pt in partials:
            cache = {}
            out = {}
            for exps, c in m.terms.items():
                val = F.element(c.value)
                for i in range(j):
                    e = exps[i]
                    if e:
                        key = (i, e)
                        if key not in cache:
                            cache[key] = pt[i] ** e
                        val = val * cache[key]
                if not val:
                    continue
                key = (exps[j],)
                out[key] = out[key] + val if key in out else val
            upoly = uring.from_dict({e: v for e, v in out.items() if v})
            for q, mult in factor(upoly, seed=0).factors:
                if q.total_degree() != 1 or mult != 1:
                    raise InternalInvariantError("a chain polynomial failed to split simply")
                nxt.append(pt + (-q.dense_coefficients()[0],))
        partials = nxt
    if len(partials) != D:
        raise InternalInvariantError("the chain has the wrong number of zeros")

    points = [_point_pullback(M.automorphisms, pt) for pt in partials]
    points = tuple(sorted(points, key=lambda pt: tuple(c.canonical_key() for c in pt)))

    orbit = set()
    current = points[0]
    for _ in range(D):
        orbit.add(current)
        current = tuple(frobenius(c) for c in current)
    if current != points[0] or orbit != set(points) or len(orbit) != D:
        raise InternalInvariantError("the zeros do not form a single conjugation orbit")

    for pt in points:
        cache = {}
        for g in M.source.generators:
            if _eval_ext(g, pt, F, cache):
                raise InternalInvariantError("a source generator fails to vanish at a zero")
    return PointSet(extension_degree=D, field=F, points=points, orbits=(points,))
