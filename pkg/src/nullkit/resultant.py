"""Sylvester matrices, exact determinants, and elimination certificates.

The matrix for (f, g) in a chosen variable stacks e shifted copies of f's
coefficient vector over d shifted copies of g's, where d and e are the two
degrees and g is monic; its determinant is the resultant, a polynomial free
of the eliminated variable lying in <f, g>.  A constant f is allowed and
yields f^e.  Determinants are computed by fraction-free elimination: every
division is exact over the polynomial ring, so no fractions ever appear.

`properness_certificate` packages the elimination argument: when a proper
ideal in the remaining variables contains every eliminant of I, and I
contains a polynomial monic in the eliminated variable, the two ideals
together stay proper.  The certificate re-checks each hypothesis (raising
`HypothesisViolation` with the failed one named) and, when handed a witness
congruent to 1 modulo the small ideal, exhibits the resultant that the
contradiction argument rides on.
"""

from dataclasses import dataclass

from .errors import (
    BadVariableIndex,
    BothConstant,
    HypothesisViolation,
    InternalInvariantError,
    MixedRings,
    NotMonicInVariable,
    NotSquare,
    ZeroPolynomial,
)
from .groebner import Ideal, elimination_ideal, is_proper, member, reduce


@dataclass(frozen=True)
class SylvesterMatrix:
    """The stacked coefficient matrix of two polynomials in one variable."""

    ring: object
    var: int
    f_degree: int
    g_degree: int
    entries: tuple

    @property
    def size(self):
        return len(self.entries)


def sylvester(f, g, var):
    """The (d+e) x (d+e) coefficient matrix of `f` and `g` with respect to
    variable `var`; `g` must be monic in that variable."""
    if f.ring != g.ring:
        raise MixedRings(f"{f.ring} differs from {g.ring}")
    ring = f.ring
    if not 0 <= var < ring.nvars:
        raise BadVariableIndex(f"no variable {var} in {ring}")
    if not f:
        raise ZeroPolynomial("the first argument must be nonzero")
    d = f.degree_in(var)
    e = g.degree_in(var)
    if e < 1:
        if d == 0:
            raise BothConstant(f"both arguments are free of {ring.names[var]}")
        raise NotMonicInVariable(f"second argument has no positive degree in {ring.names[var]}")
    gc = g.coefficients_in(var)
    if gc[e] != ring.one:
        raise NotMonicInVariable(f"second argument is not monic in {ring.names[var]}")
    fc = f.coefficients_in(var)
    zero = ring.zero
    size = d + e
    rows = []
    for r in range(e):
        rows.append(tuple([zero] * r + fc + [zero] * (e - 1 - r)))
    for r in range(d):
        rows.append(tuple([zero] * r + gc + [zero] * (d - 1 - r)))
    return SylvesterMatrix(ring=ring, var=var, f_degree=d, g_degree=e, entries=tuple(rows))


def det_fraction_free(matrix):
    """Exact determinant of a square array of polynomials by fraction-free
    elimination; inexact interior divisions would be a bug, not bad input."""
    if isinstance(matrix, SylvesterMatrix):
        rows = [list(r) for r in matrix.entries]
    else:
        rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquare("determinant of a non-square array")
    if n == 0:
        raise NotSquare("determinant of an empty array")
    ring = None
    for row in rows:
        for entry in row:
            if ring is None:
                ring = entry.ring
            elif entry.ring != ring:
                raise MixedRings("matrix entries live in different rings")
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not rows[k][k]:
            for r in range(k + 1, n):
                if rows[r][k]:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]).exact_divide(prev)
            rows[i][k] = ring.zero
        prev = pivot
    out = rows[n - 1][n - 1]
    return -out if sign < 0 else out


def resultant(f, g, var):
    """The determinant of `sylvester(f, g, var)`: a polynomial free of the
    eliminated variable lying in `<f, g>`."""
    R = det_fraction_free(sylvester(f, g, var))
    if R.degree_in(var) > 0:
        raise InternalInvariantError(f"resultant still involves {f.ring.names[var]}")
    return R


@dataclass(frozen=True)
class PropernessReport:
    """Outcome of the elimination-properness argument.

    `witness_in_ideal`, `resultant`, `resultant_in_eliminants`, and
    `residue` are filled only when a congruent-to-1 witness was supplied;
    `combined_proper` is the certified conclusion."""

    var: int
    witness: object
    witness_in_ideal: object
    resultant: object
    resultant_in_eliminants: object
    residue: object
    combined_proper: bool


def properness_certificate(I, g, small, var, witness=None):
    """Certify that `I + small` is proper.

    Hypotheses (each re-checked, with `HypothesisViolation` naming the
    first failure): `var` is the ring's greatest variable; `g` lies in `I`
    and is monic in it; `small` is a proper ideal of the remaining-variable
    subring containing every eliminant of `I`.  An optional `witness` must
    have constant coefficient congruent to 1 and higher coefficients
    congruent to 0 modulo `small`; its resultant against `g` then reduces
    to 1 modulo `small` (the triangular-determinant step, asserted as a
    theorem), and when the witness additionally lies in `I` the resultant
    is an eliminant of `I`, the engine of the contradiction argument.
    Membership of the witness in `I` is recorded, not required: an in-ideal
    witness is incompatible with the hypotheses (it would force 1 into
    `small`), so supplying one exhibits the contradiction machinery on its
    way to a hypothesis failure.  With the hypotheses verified, an improper
    combination would contradict the theory, so it is reported as an
    internal error rather than a result.
    """
    ring = I.ring
    n = ring.nvars
    if var != n - 1:
        raise HypothesisViolation("the eliminated variable must be the ring's greatest")
    if n < 2:
        raise HypothesisViolation("elimination needs at least two variables")
    if g.ring != ring:
        raise HypothesisViolation("the monic polynomial lives in a different ring")
    if g.degree_in(var) < 1 or g.coefficients_in(var)[g.degree_in(var)] != ring.one:
        raise HypothesisViolation("the supplied polynomial is not monic in the eliminated variable")
    if not member(g, I):
        raise HypothesisViolation("the monic polynomial is not a member of the ideal")
    sub = ring.subring(n - 1)
    if small.ring != sub:
        raise HypothesisViolation("the small ideal must live in the remaining-variable subring")
    if not is_proper(small):
        raise HypothesisViolation("the small ideal is improper")
    eliminants = elimination_ideal(I, n - 1)
    for h in eliminants.generators:
        if not member(h, small):
            raise HypothesisViolation("the small ideal misses an eliminant of the ideal")

    witness_in_ideal = None
    res = None
    res_in_elim = None
    residue = None
    if witness is not None:
        if witness.ring != ring:
            raise HypothesisViolation("the witness lives in a different ring")
        if not witness:
            raise HypothesisViolation("the witness is zero")
        coeffs = [c.restrict_to(n - 1) for c in witness.coefficients_in(var)]
        basis = small.groebner_basis()
        if reduce(coeffs[0] - sub.one, basis):
            raise HypothesisViolation("the witness constant coefficient is not 1 modulo the small ideal")
        for c in coeffs[1:]:
            if reduce(c, basis):
                raise HypothesisViolation("a higher witness coefficient is nonzero modulo the small ideal")
        witness_in_ideal = member(witness, I)
        res = resultant(witness, g, var).restrict_to(n - 1)
        res_in_elim = member(res, eliminants)
        residue = reduce(res, basis)
        if residue != sub.one:
            raise InternalInvariantError("a congruent-to-1 witness must have resultant reducing to 1")
        if witness_in_ideal and not res_in_elim:
            raise InternalInvariantError("an in-ideal witness must have an eliminant resultant")

    lifted = Ideal(ring, [h.lift_to(ring) for h in small.generators])
    combined = is_proper(I + lifted)
    if not combined:
        raise InternalInvariantError(
            "hypotheses verified yet the combined ideal is improper; this contradicts the theory"
        )
    return PropernessReport(
        var=var,
        witness=witness,
        witness_in_ideal=witness_in_ideal,
        resultant=res,
        resultant_in_eliminants=res_in_elim,
        residue=residue,
        combined_proper=combined,
    )
