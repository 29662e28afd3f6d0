"""Coordinate changes making a polynomial monic in the last variable.

Given a nonconstant f in n >= 2 variables, pick a base m exceeding every
exponent in f and shift x_i by x_n^(m^(n-i)) for i < n, fixing x_n.  Each
term's image has x_n-degree equal to the base-m evaluation of its exponent
tuple; those evaluations are distinct across distinct tuples (base-m digits
below m), so exactly one term dominates.  The image's x_n-leading
coefficient is therefore that term's coefficient, a nonzero constant, and
the image becomes monic after dividing by it.  The map is an automorphism:
shifting by the negated powers undoes it exactly.
"""

from dataclasses import dataclass

from .errors import BaseTooSmall, ConstantPolynomial, MixedRings, UnivariateRing


@dataclass(frozen=True)
class MonicizingMap:
    """The shift `x_i -> x_i + x_n^weights[i]` (last variable fixed).

    `build_monicizer` fills `weights[i] = base**(n-1-i)`, so `weights[-1]
    == 1` serves only in the degree formula; no shift is applied to the
    last variable itself.  A weight of 0 marks a variable the map leaves
    untouched: the distinct-weighted-degree argument only needs nonzero
    weights on the variables actually occurring in the polynomial being
    monicized, and sparing the others keeps images of unrelated
    polynomials small.
    """

    ring: object
    base: int
    weights: tuple

    def _check(self, f):
        if f.ring != self.ring:
            raise MixedRings(f"map built over {self.ring}, applied to {f.ring}")
        for exps in f.terms:
            if any(e >= self.base for e in exps):
                raise BaseTooSmall(
                    f"exponent {max(max(e) for e in f.terms)} reaches the base {self.base}"
                )

    def substitution_images(self, sign=1):
        """The forward (sign 1) or inverse (sign -1) image list, without
        the exponent check; substituting the forward images realizes the map
        on any polynomial of the ring."""
        ring = self.ring
        n = ring.nvars
        xn = ring.gen(n - 1)
        images = []
        for i in range(n - 1):
            if self.weights[i] == 0:
                images.append(ring.gen(i))
                continue
            shift = xn ** self.weights[i]
            images.append(ring.gen(i) + shift if sign > 0 else ring.gen(i) - shift)
        images.append(xn)
        return images

    def apply(self, f):
        """The forward substitution.  Monic in the last variable up to the
        dominating term's constant coefficient; `BaseTooSmall` if some
        exponent of `f` reaches the base."""
        self._check(f)
        return f.substitute(self.substitution_images(+1))

    def apply_inverse(self, f):
        """The inverse substitution; composes with `apply` to the
        identity."""
        return f.substitute(self.substitution_images(-1))

    def predicted_degree(self, f):
        """The last-variable degree of `apply(f)`: the largest base-m value
        of an exponent tuple of `f`."""
        if not f:
            return -1
        return max(sum(e * w for e, w in zip(exps, self.weights)) for exps in f.terms)

    def dominating_coefficient(self, f):
        """The coefficient that ends up leading in the last variable."""
        best = max(f.terms, key=lambda exps: sum(e * w for e, w in zip(exps, self.weights)))
        return f.terms[best]

    def point_image(self, point):
        """Where the substitution sends a point: the polynomial identity
        `(apply f)(b) = f(point_image b)` holds coordinatewise."""
        n = self.ring.nvars
        last = point[n - 1]
        out = [b if w == 0 else b + last**w for b, w in zip(point[: n - 1], self.weights)]
        out.append(last)
        return tuple(out)


def build_monicizer(f):
    """A `MonicizingMap` for the nonconstant polynomial `f` (n >= 2
    variables), with base one more than the largest exponent in `f`."""
    ring = f.ring
    if ring.nvars < 2:
        raise UnivariateRing("monicizing needs at least two variables")
    if f.is_constant():
        raise ConstantPolynomial("cannot monicize a constant")
    m = 1 + max(max(exps) for exps in f.terms)
    n = ring.nvars
    weights = tuple(m ** (n - 1 - i) for i in range(n))
    return MonicizingMap(ring=ring, base=m, weights=weights)
