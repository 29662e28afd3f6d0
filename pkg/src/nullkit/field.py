"""Exact coefficient arithmetic: rationals, prime fields, and towers.

Field values are immutable `FieldElement` wrappers around a canonical
payload owned by a field descriptor:

* `RationalField` -- a `fractions.Fraction`, always in lowest terms;
* `PrimeField(p)` -- an `int` in `[0, p)`;
* `Tower` -- nested tuples.  A tower of height r over GF(p) is built by r
  successive quotients by monic defining polynomials; a level-k payload is a
  trimmed tuple of level-(k-1) payloads (the coefficients with respect to
  powers of the level-k generator) and a level-0 payload is an int in
  `[0, p)`.  Trailing zeros are always stripped, so zero is `0` or `()` at
  every level and equal values are equal objects under `==`.

Arithmetic is exact and eagerly canonicalized.  Equality is structural;
elements of different fields compare unequal, and arithmetic between them
raises `MixedFields`.  Division by zero raises `DivisionByZero`.
"""

from fractions import Fraction

from .errors import (
    BadField,
    BudgetExceeded,
    DivisionByZero,
    InternalInvariantError,
    MixedFields,
    NotMonic,
    ReducibleMinPoly,
    UnsupportedField,
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n):
    """Deterministic Miller-Rabin, exact for all 64-bit inputs and beyond
    practical moduli."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldElement:
    """A value of some field, supporting +, -, *, /, ** and equality.

    Integers coerce automatically on either side of an operator.
    """

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other.value
            raise MixedFields(f"cannot mix {self.field} and {other.field}")
        if isinstance(other, int):
            return self.field.payload_from_int(other)
        if isinstance(other, Fraction):
            return self.field.element(other).value
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, self.field._neg(v)))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(v, self.field._neg(self.value)))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, self.field._inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(v, self.field._inv(self.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.field, self.field._pow(self.value, e))

    def inverse(self):
        """Multiplicative inverse; raises `DivisionByZero` on zero."""
        return FieldElement(self.field, self.field._inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.payload_from_int(other)
        if isinstance(other, Fraction):
            try:
                return self.value == self.field.element(other).value
            except TypeError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        # zero payloads are falsy in every representation
        return bool(self.value)

    def canonical_key(self):
        """A total-order key among elements of the same field, used for
        deterministic tie-breaking."""
        return self.field.sort_key(self.value)

    def __repr__(self):
        return self.field.render_value(self.value)


class Field:
    """Common interface of field descriptors.  Payload-level operations
    (`_add`, `_mul`, ...) assume canonical payloads of this field."""

    def element(self, x):
        """Coerce `x` (int, payload-compatible value, or same-field
        element) into a `FieldElement` of this field."""
        if isinstance(x, FieldElement):
            if x.field == self:
                return x
            raise MixedFields(f"cannot reinterpret {x.field} value in {self}")
        if isinstance(x, int):
            return FieldElement(self, self.payload_from_int(x))
        raise TypeError(f"cannot build a {self} element from {x!r}")

    @property
    def zero(self):
        return FieldElement(self, self._zero_payload())

    @property
    def one(self):
        return FieldElement(self, self._one_payload())

    def payload_from_int(self, n):
        raise NotImplementedError

    def sort_key(self, value):
        raise NotImplementedError

    def render_value(self, value):
        raise NotImplementedError

    def _pow(self, a, e):
        result = self._one_payload()
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result


class RationalField(Field):
    """The rational numbers.  Payloads are `fractions.Fraction`."""

    characteristic = 0
    order = None

    def payload_from_int(self, n):
        return Fraction(n)

    def element(self, x):
        if isinstance(x, Fraction):
            return FieldElement(self, x)
        return super().element(x)

    def _zero_payload(self):
        return Fraction(0)

    def _one_payload(self):
        return Fraction(1)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def _pow(self, a, e):
        return a**e

    def random_element(self, rng, bound=9):
        return FieldElement(self, Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))

    def sort_key(self, value):
        return value

    def render_value(self, value):
        return str(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(RationalField)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField(Field):
    """GF(p) for prime p.  Payloads are ints in `[0, p)`."""

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise BadField(f"modulus {p!r} is not prime")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    @property
    def order(self):
        return self.p

    def payload_from_int(self, n):
        return n % self.p

    def _zero_payload(self):
        return 0

    def _one_payload(self):
        return 1

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def _pow(self, a, e):
        return pow(a, e, self.p)

    def random_element(self, rng):
        return FieldElement(self, rng.randrange(self.p))

    def iter_elements(self):
        for a in range(self.p):
            yield FieldElement(self, a)

    def sort_key(self, value):
        return (value,)

    def render_value(self, value):
        return str(value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash((PrimeField, self.p))

    def __repr__(self):
        return f"GF({self.p})"


class Tower(Field):
    """An iterated extension GF(p)[t_1]/(m_1)...[t_r]/(m_r).

    `chain[k-1]` is the defining polynomial of level k as a trimmed tuple of
    level-(k-1) payloads, little-endian, monic of degree >= 1.  Construct
    towers through `tower_extend`, which validates (and optionally certifies
    irreducible) each new defining polynomial.
    """

    def __init__(self, p, chain, names):
        self.p = p
        self.chain = tuple(tuple(m) for m in chain)
        self.names = tuple(names)
        self.height = len(self.chain)
        self.degrees = tuple(len(m) - 1 for m in self.chain)
        # block sizes for flattening: _span[k] = dimension of a level-k value
        span = [1]
        for d in self.degrees:
            span.append(span[-1] * d)
        self._span = tuple(span)

    @property
    def characteristic(self):
        return self.p

    @property
    def total_degree(self):
        return self._span[self.height]

    @property
    def order(self):
        return self.p ** self.total_degree

    # -- payload arithmetic, parameterized by level --------------------------

    def _pzero(self, level):
        return 0 if level == 0 else ()

    def _pone(self, level):
        one = 1
        for _ in range(level):
            one = (one,)
        return one

    def _const(self, level, n):
        c = n % self.p
        if not c:
            return self._pzero(level)
        for _ in range(level):
            c = (c,)
        return c

    def _padd(self, level, a, b):
        if level == 0:
            return (a + b) % self.p
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = self._padd(level - 1, out[i], c)
        while out and not out[-1]:
            out.pop()
        return tuple(out)

    def _pneg(self, level, a):
        if level == 0:
            return -a % self.p
        return tuple(self._pneg(level - 1, c) for c in a)

    def _psub(self, level, a, b):
        return self._padd(level, a, self._pneg(level, b))

    def _pmul(self, level, a, b):
        if level == 0:
            return a * b % self.p
        if not a or not b:
            return ()
        prod = [self._pzero(level - 1)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = self._padd(level - 1, prod[i + j], self._pmul(level - 1, ai, bj))
        return self._preduce(level, prod)

    def _preduce(self, level, vec):
        """Reduce a coefficient list modulo the level's defining polynomial
        and trim; returns a canonical payload."""
        m = self.chain[level - 1]
        d = len(m) - 1
        for i in range(len(vec) - 1, d - 1, -1):
            c = vec[i]
            if c:
                for j in range(d):
                    if m[j]:
                        vec[i - d + j] = self._psub(level - 1, vec[i - d + j], self._pmul(level - 1, c, m[j]))
                vec[i] = self._pzero(level - 1)
        del vec[d:]
        while vec and not vec[-1]:
            vec.pop()
        return tuple(vec)

    def _pinv(self, level, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        if level == 0:
            return pow(a, -1, self.p)
        # extended Euclid against the defining polynomial, over the subtower
        child = level - 1
        r0, u0 = list(self.chain[level - 1]), []
        r1, u1 = list(a), [self._pone(child)]
        while len(r1) > 1:
            q, r = self._vdivmod(child, r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, self._vsub(child, u0, self._vconv(child, q, u1))
        if not r1:
            raise InternalInvariantError("zero divisor in a certified tower; defining polynomial is reducible")
        cinv = self._pinv(child, r1[0])
        inv = [self._pmul(child, cinv, c) for c in u1]
        return self._preduce(level, inv)

    # dense univariate helpers over level-`level` payloads (used by _pinv)

    def _vconv(self, level, a, b):
        if not a or not b:
            return []
        out = [self._pzero(level)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = self._padd(level, out[i + j], self._pmul(level, ai, bj))
        return out

    def _vsub(self, level, a, b):
        out = list(a) + [self._pzero(level)] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = self._psub(level, out[i], c)
        while out and not out[-1]:
            out.pop()
        return out

    def _vdivmod(self, level, num, den):
        dd = len(den) - 1
        lead_inv = self._pinv(level, den[-1])
        rem = list(num)
        if len(rem) - 1 < dd:
            return [], rem
        quo = [self._pzero(level)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = self._pmul(level, c, lead_inv)
            quo[i - dd] = q
            for j in range(dd):
                if den[j]:
                    rem[i - dd + j] = self._psub(level, rem[i - dd + j], self._pmul(level, q, den[j]))
            rem[i] = self._pzero(level)
        while rem and not rem[-1]:
            rem.pop()
        return quo, rem

    # -- Field interface at the top level ------------------------------------

    def payload_from_int(self, n):
        return self._const(self.height, n)

    def _zero_payload(self):
        return self._pzero(self.height)

    def _one_payload(self):
        return self._pone(self.height)

    def _add(self, a, b):
        return self._padd(self.height, a, b)

    def _neg(self, a):
        return self._pneg(self.height, a)

    def _mul(self, a, b):
        return self._pmul(self.height, a, b)

    def _inv(self, a):
        return self._pinv(self.height, a)

    def gen(self, k):
        """The level-(k+1) generator t_{k+1} as a top-level element."""
        if not 0 <= k < self.height:
            raise BadField(f"tower has no level {k + 1}")
        # reduce x modulo its own defining polynomial: a no-op above degree 1
        v = self._preduce(k + 1, [self._pzero(k), self._pone(k)])
        for _ in range(k + 1, self.height):
            v = (v,) if v else ()
        return FieldElement(self, v)

    @property
    def gens(self):
        return tuple(self.gen(k) for k in range(self.height))

    # -- enumeration and canonical keys --------------------------------------

    def _flatten(self, level, a):
        if level == 0:
            return (a,)
        block = self._span[level - 1]
        out = []
        for c in a:
            out.extend(self._flatten(level - 1, c))
        out.extend([0] * (block * self.degrees[level - 1] - len(out)))
        return tuple(out)

    def _unflatten(self, level, flat):
        if level == 0:
            return flat[0]
        block = self._span[level - 1]
        out = [self._unflatten(level - 1, flat[i : i + block]) for i in range(0, len(flat), block)]
        while out and not out[-1]:
            out.pop()
        return tuple(out)

    def sort_key(self, value):
        return tuple(reversed(self._flatten(self.height, value)))

    def coordinates(self, x):
        """Dense GF(p) coordinates of `x`, little-endian over the full
        tower basis."""
        return self._flatten(self.height, self.element(x).value)

    def from_coordinates(self, coords):
        coords = [c % self.p for c in coords]
        d = self.total_degree
        if len(coords) != d:
            raise BadField(f"expected {d} coordinates, got {len(coords)}")
        return FieldElement(self, self._unflatten(self.height, tuple(coords)))

    def iter_elements(self):
        """All elements, ascending in the canonical order.  Exponential in
        the total degree; callers enforce their own budgets."""
        d = self.total_degree
        for idx in range(self.p**d):
            digits = []
            v = idx
            for _ in range(d):
                digits.append(v % self.p)
                v //= self.p
            yield FieldElement(self, self._unflatten(self.height, tuple(digits)))

    def random_element(self, rng):
        coords = [rng.randrange(self.p) for _ in range(self.total_degree)]
        return self.from_coordinates(coords)

    # -- rendering -----------------------------------------------------------

    def _terms(self, level, a, prefix, out):
        if level == 0:
            if a:
                out[prefix] = a
            return
        for i, c in enumerate(a):
            if c:
                self._terms(level - 1, c, (i,) + prefix, out)

    def render_value(self, value):
        terms = {}
        self._terms(self.height, value, (), terms)
        if not terms:
            return "0"
        pieces = []
        for exps in sorted(terms, key=lambda e: tuple(reversed(e)), reverse=True):
            c = terms[exps]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.names, exps)
                if e
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces)

    def __eq__(self, other):
        return isinstance(other, Tower) and other.p == self.p and other.chain == self.chain

    def __hash__(self):
        return hash((Tower, self.p, self.chain))

    def __repr__(self):
        mods = ", ".join(
            f"{name}: {self._render_minpoly(k)}" for k, name in enumerate(self.names)
        )
        return f"GF({self.p})[{mods}]"

    def _render_minpoly(self, k):
        m = self.chain[k]
        name = self.names[k]
        lower = Tower(self.p, self.chain[:k], self.names[:k]) if k else PrimeField(self.p)
        pieces = []
        for i in range(len(m) - 1, -1, -1):
            c = m[i]
            if not c:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = name
            else:
                mono = f"{name}^{i}"
            cs = lower.render_value(c)
            if any(ch in cs for ch in " +-") and mono:
                cs = f"({cs})"
            if not mono:
                pieces.append(cs)
            elif cs == "1":
                pieces.append(mono)
            else:
                pieces.append(f"{cs}*{mono}")
        return " + ".join(pieces)


def frobenius(a):
    """The p-th power map on an element of a characteristic-p field."""
    p = a.field.characteristic
    if p == 0:
        raise UnsupportedField("the p-th power map needs positive characteristic")
    return a**p


def pth_root(a):
    """The unique p-th root in a finite field (inverse of `frobenius`)."""
    f = a.field
    p = f.characteristic
    if p == 0:
        raise UnsupportedField("p-th roots need positive characteristic")
    if f.order is None:
        raise UnsupportedField("p-th roots need a finite field")
    # x -> x^p permutes a finite field; its inverse is x -> x^(q/p)
    return a ** (f.order // p)


def tower_extend(base, minpoly, name=None, verify=True, max_total_degree=64):
    """Extend `base` (a `PrimeField` or `Tower`) by a new generator with
    monic defining polynomial `minpoly`.

    `minpoly` is a little-endian sequence of coefficients over `base` (ints
    or `FieldElement`s), or a univariate polynomial over `base`.  With
    `verify`, the polynomial is certified irreducible and `ReducibleMinPoly`
    is raised otherwise; internal callers that construct already-certified
    chains pass `verify=False`.  The resulting total degree is capped by
    `max_total_degree`.
    """
    from .poly import MultiPoly  # runtime import; poly depends on this module

    if isinstance(minpoly, MultiPoly):
        ring = minpoly.ring
        if ring.nvars != 1:
            raise BadField("a defining polynomial must be univariate")
        if ring.field != base:
            raise MixedFields(f"defining polynomial lives over {ring.field}, not {base}")
        if name is None:
            name = ring.names[0]
        vec = minpoly.dense_coefficients()
    else:
        vec = [base.element(c) for c in minpoly]
    coeffs = [c.value for c in (base.element(x) for x in vec)]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    d = len(coeffs) - 1
    if d < 1 or coeffs[-1] != base._one_payload():
        raise NotMonic("defining polynomial must be monic of degree >= 1")

    if isinstance(base, PrimeField):
        p, chain, names, total = base.p, (), (), 1
    elif isinstance(base, Tower):
        p, chain, names, total = base.p, base.chain, base.names, base.total_degree
    else:
        raise UnsupportedField("towers extend GF(p) or another tower")
    if total * d > max_total_degree:
        raise BudgetExceeded(
            f"tower degree {total * d} exceeds the bound {max_total_degree}"
        )
    if name is None:
        name = f"t{len(chain) + 1}"
    if name in names:
        raise BadField(f"generator name {name!r} already used in {base}")

    if verify:
        from .poly import PolyRing
        from .unifactor import is_irreducible

        ring = PolyRing(base, (name,))
        f = ring.zero
        x = ring.gen(0)
        for i, c in enumerate(coeffs):
            f = f + ring.constant(FieldElement(base, c)) * x**i
        if not is_irreducible(f):
            raise ReducibleMinPoly(f"{f} factors over {base}")

    return Tower(p, chain + (tuple(coeffs),), names + (name,))
