"""Exact multivariate polynomials under a fixed lexicographic order.

A `PolyRing` fixes a coefficient field and an ordered tuple of variable
names.  The monomial order is lexicographic with the *last* listed variable
greatest and the first least, so eliminating the greatest variables keeps a
prefix of the listing.  A `MultiPoly` maps exponent tuples (one entry per
variable, listing order) to nonzero coefficients; zero coefficients are
never stored, so equality is structural.

Canonical text form: terms in decreasing order, `^` for powers, an explicit
`*` between every pair of factors, variables inside a term in listing order.
Prime-field coefficients print as residues in `[0, p)`; rational ones carry
an explicit sign; tower coefficients with more than one term print inside
parentheses.
"""

from fractions import Fraction

from .errors import (
    ArityMismatch,
    BadVariableCount,
    BadVariableIndex,
    InternalInvariantError,
    MixedFields,
    MixedRings,
    ZeroPolynomial,
)
from .field import FieldElement, RationalField


def lex_key(exps):
    """Sort key realizing the ring order: compare exponents from the last
    variable down."""
    return exps[::-1]


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def exp_divides(a, b):
    """Whether the monomial with exponents `a` divides the one with `b`."""
    return all(x <= y for x, y in zip(a, b))


class PolyRing:
    """A polynomial ring `field[names]` with the package's lex order."""

    def __init__(self, field, names):
        names = tuple(names)
        if not names:
            raise BadVariableCount("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not name.isidentifier():
                raise ValueError(f"bad variable name {name!r}")
        self.field = field
        self.names = names
        self.nvars = len(names)

    @property
    def zero(self):
        return MultiPoly(self, {})

    @property
    def one(self):
        return self.constant(self.field.one)

    def constant(self, c):
        c = self.field.element(c)
        if not c:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.nvars: c})

    def gen(self, i):
        if not 0 <= i < self.nvars:
            raise BadVariableIndex(f"no variable {i} in {self}")
        exps = [0] * self.nvars
        exps[i] = 1
        return MultiPoly(self, {tuple(exps): self.field.one})

    @property
    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise BadVariableIndex(f"bad exponent tuple {exps} for {self}")
        coeff = self.field.element(coeff)
        if not coeff:
            return MultiPoly(self, {})
        return MultiPoly(self, {exps: coeff})

    def from_dict(self, d):
        terms = {}
        for exps, c in d.items():
            c = self.field.element(c)
            if c:
                terms[tuple(exps)] = c
        return MultiPoly(self, terms)

    def subring(self, k):
        """The ring on the first `k` variables (the ones kept by
        elimination)."""
        if not 1 <= k <= self.nvars:
            raise BadVariableCount(f"cannot keep {k} of {self.nvars} variables")
        return PolyRing(self.field, self.names[:k])

    def __call__(self, x):
        if isinstance(x, MultiPoly):
            if x.ring != self:
                raise MixedRings(f"{x} lives in {x.ring}, not {self}")
            return x
        return self.constant(x)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
        )

    def __hash__(self):
        return hash((PolyRing, self.field, self.names))

    def __repr__(self):
        return f"{self.field}[{', '.join(self.names)}]"


class MultiPoly:
    """An element of a `PolyRing`.  Immutable by convention; the term dict
    is never mutated after construction."""

    __slots__ = ("ring", "_terms", "_lead", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self._terms = terms
        self._lead = None
        self._hash = None

    @property
    def terms(self):
        """The internal exponent-to-coefficient dict; treat as read-only."""
        return self._terms

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return len(self._terms) <= 1 and all(not any(e) for e in self._terms)

    def constant_value(self):
        """The coefficient of the constant monomial."""
        zero_exps = (0,) * self.ring.nvars
        return self._terms.get(zero_exps, self.ring.field.zero)

    # -- ordering-dependent views -------------------------------------------

    def leading_term(self):
        """The greatest term as `(exponents, coefficient)`."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        if self._lead is None:
            self._lead = max(self._terms, key=lex_key)
        return self._lead, self._terms[self._lead]

    @property
    def lead_exps(self):
        return self.leading_term()[0]

    @property
    def lead_coeff(self):
        return self.leading_term()[1]

    def sorted_terms(self):
        """Terms in decreasing order of the ring's lex order."""
        return [(e, self._terms[e]) for e in sorted(self._terms, key=lex_key, reverse=True)]

    def degree_in(self, i):
        """Degree in variable `i`; -1 for the zero polynomial."""
        if not 0 <= i < self.ring.nvars:
            raise BadVariableIndex(f"no variable {i} in {self.ring}")
        if not self._terms:
            return -1
        return max(e[i] for e in self._terms)

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def coefficients_in(self, i):
        """Coefficients of powers of variable `i`, lowest first, as
        polynomials of the same ring free of that variable.  Empty for the
        zero polynomial."""
        d = self.degree_in(i)
        if d < 0:
            return []
        buckets = [dict() for _ in range(d + 1)]
        for exps, c in self._terms.items():
            reduced = list(exps)
            power = reduced[i]
            reduced[i] = 0
            buckets[power][tuple(reduced)] = c
        return [MultiPoly(self.ring, b) for b in buckets]

    def dense_coefficients(self):
        """Little-endian coefficient list of a univariate polynomial."""
        if self.ring.nvars != 1:
            raise BadVariableCount(f"{self.ring} is not univariate")
        if not self._terms:
            return []
        d = self.degree_in(0)
        zero = self.ring.field.zero
        out = [zero] * (d + 1)
        for exps, c in self._terms.items():
            out[exps[0]] = c
        return out

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if other.ring is not self.ring and other.ring != self.ring:
            raise MixedRings(f"cannot mix {self.ring} and {other.ring}")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps)
            if s is None:
                out[exps] = c
            else:
                s = s + c
                if s:
                    out[exps] = s
                else:
                    del out[exps]
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self.ring.field.element(other)
            if not c:
                return MultiPoly(self.ring, {})
            return MultiPoly(self.ring, {e: v * c for e, v in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                s = out.get(e)
                if s is None:
                    if prod:
                        out[e] = prod
                else:
                    s = s + prod
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            if e > 1:
                base = base * base
            e >>= 1
        return result

    def monic(self):
        """Scale so the leading coefficient is one."""
        _, c = self.leading_term()
        if c == 1:
            return self
        return self * c.inverse()

    def exact_divide(self, g):
        """Exact quotient `self / g`; an inexact division is a bug in the
        caller, reported as `InternalInvariantError`."""
        self._check(g)
        if not g:
            raise InternalInvariantError("exact division by zero")
        if not self:
            return self
        glead_e, glead_c = g.leading_term()
        ginv = glead_c.inverse()
        rem = dict(self._terms)
        quo = {}
        while rem:
            e = max(rem, key=lex_key)
            c = rem.pop(e)
            if not exp_divides(glead_e, e):
                raise InternalInvariantError(f"inexact division of {self} by {g}")
            qe = exp_sub(e, glead_e)
            qc = c * ginv
            quo[qe] = qc
            for ge, gc in g._terms.items():
                if ge == glead_e:
                    continue
                te = exp_add(qe, ge)
                s = rem.get(te, None)
                prod = qc * gc
                if s is None:
                    rem[te] = -prod
                else:
                    s = s - prod
                    if s:
                        rem[te] = s
                    else:
                        del rem[te]
        return MultiPoly(self.ring, quo)

    # -- substitution and ring moves ----------------------------------------

    def substitute(self, images):
        """Replace variable `i` by polynomial `images[i]` everywhere.  The
        images fix the target ring; coefficients carry over unchanged."""
        if len(images) != self.ring.nvars:
            raise ArityMismatch(f"{self.ring.nvars} images required, got {len(images)}")
        target = None
        for g in images:
            if not isinstance(g, MultiPoly):
                raise ArityMismatch("substitution images must be polynomials")
            if target is None:
                target = g.ring
            elif g.ring != target:
                raise MixedRings("substitution images live in different rings")
        if target.field != self.ring.field:
            raise MixedFields(f"cannot substitute across {self.ring.field} and {target.field}")
        out = target.zero
        cache = {}

        def power(i, e):
            got = cache.get((i, e))
            if got is None:
                got = images[i] ** e
                cache[(i, e)] = got
            return got

        for exps, c in self._terms.items():
            term = target.constant(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def evaluate(self, point):
        """Value at a point given as one field element per variable."""
        if len(point) != self.ring.nvars:
            raise ArityMismatch(f"{self.ring.nvars} coordinates required, got {len(point)}")
        F = self.ring.field
        point = [F.element(v) for v in point]
        acc = F.zero
        for exps, c in self._terms.items():
            v = c
            for i, e in enumerate(exps):
                if e:
                    v = v * point[i] ** e
            acc = acc + v
        return acc

    def lift_to(self, ring):
        """Reinterpret in a ring whose variables extend this one's by new
        trailing (greater) variables."""
        own = self.ring
        if ring.field != own.field or ring.names[: own.nvars] != own.names:
            raise MixedRings(f"{ring} does not extend {own}")
        pad = (0,) * (ring.nvars - own.nvars)
        return MultiPoly(ring, {e + pad: c for e, c in self._terms.items()})

    def restrict_to(self, k):
        """Reinterpret in the subring on the first `k` variables; every term
        must already be free of the dropped ones."""
        sub = self.ring.subring(k)
        out = {}
        for exps, c in self._terms.items():
            if any(exps[k:]):
                raise BadVariableIndex(f"{self} involves a variable past the first {k}")
            out[exps[:k]] = c
        return MultiPoly(sub, out)

    # -- comparison and text -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        field = self.ring.field
        rational = isinstance(field, RationalField)
        names = self.ring.names
        pieces = []
        for exps, c in self.sorted_terms():
            negative = False
            if rational and c.value < 0:
                negative = True
                c = -c
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e
            )
            if not mono:
                piece = field.render_value(c.value)
            elif c == 1:
                piece = mono
            else:
                cs = field.render_value(c.value)
                if " " in cs:
                    cs = f"({cs})"
                piece = f"{cs}*{mono}"
            pieces.append((negative, piece))
        neg, first = pieces[0]
        text = ("-" + first) if neg else first
        for neg, piece in pieces[1:]:
            text += (" - " if neg else " + ") + piece
        return text

    __repr__ = __str__
