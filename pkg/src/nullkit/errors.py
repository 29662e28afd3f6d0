"""Exception types shared across the package.

Every anticipated failure raises a subclass of `NullkitError` so callers can
catch one base type.  `InternalInvariantError` is different in kind: it marks
a broken internal invariant (a bug), never bad user input.
"""


class NullkitError(Exception):
    """Base class for all errors raised by this package."""


class InternalInvariantError(NullkitError):
    """An internal consistency check failed; this indicates a bug."""


# -- field construction and arithmetic ---------------------------------------

class BadField(NullkitError):
    """A field description is invalid, e.g. a composite modulus."""


class MixedFields(NullkitError):
    """Two operands belong to different fields."""


class DivisionByZero(NullkitError):
    """Multiplicative inverse of zero was requested."""


class NotMonic(NullkitError):
    """A defining polynomial for a tower level is not monic of degree >= 1."""


class ReducibleMinPoly(NullkitError):
    """A defining polynomial for a tower level factors, so the quotient is
    not a field."""


class UnsupportedField(NullkitError):
    """The operation is defined only over a different kind of field."""


class BudgetExceeded(NullkitError):
    """An explicit size bound (tower degree, enumeration count) was hit."""


# -- polynomial rings --------------------------------------------------------

class MixedRings(NullkitError):
    """Two polynomial operands belong to different rings."""


class ZeroPolynomial(NullkitError):
    """The zero polynomial was passed where a nonzero one is required."""


class BadVariableIndex(NullkitError):
    """A variable index is outside the ring's range."""


class ArityMismatch(NullkitError):
    """A substitution supplied the wrong number of images."""


class BadVariableCount(NullkitError):
    """A ring was declared with no variables or a bad count for the task."""


class UnivariateRing(NullkitError):
    """At least two variables are required for this operation."""


class ConstantPolynomial(NullkitError):
    """A nonconstant polynomial is required."""


class BaseTooSmall(NullkitError):
    """A monicizing map was applied to a polynomial with exponents at or
    above the map's base."""


# -- ideals ------------------------------------------------------------------

class ImproperIdeal(NullkitError):
    """The ideal is the whole ring, so the requested object does not exist."""


class InfiniteDimension(NullkitError):
    """The quotient ring is not finite-dimensional over the base field."""


class ZeroClass(NullkitError):
    """The residue class of zero has no inverse and no zero-divisor witness."""


class ZeroDivisor(NullkitError):
    """The residue class is a zero divisor.

    `witness` is a polynomial outside the ideal whose product with the
    offending element lies inside it.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# -- resultants --------------------------------------------------------------

class NotSquare(NullkitError):
    """A square matrix is required."""


class NotMonicInVariable(NullkitError):
    """The second resultant argument must be monic of positive degree in the
    chosen variable."""


class BothConstant(NullkitError):
    """Both resultant arguments have degree zero in the chosen variable."""


class HypothesisViolation(NullkitError):
    """A stated hypothesis of a certified construction does not hold."""


# -- parsing -----------------------------------------------------------------

class ParseError(NullkitError):
    """Malformed ideal-file text.  Carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class UnknownVariable(ParseError):
    """An expression uses an identifier not declared on the vars line."""
