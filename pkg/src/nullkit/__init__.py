"""nullkit: exact commutative algebra over QQ, GF(p), and tower extensions.

The package provides multivariate polynomials with lexicographic Groebner
bases, Sylvester resultants with fraction-free determinants, univariate
factorization over finite fields and towers, monicizing coordinate changes,
and constructive maximal-ideal and radical-membership machinery, together
with brute-force oracles and a command line front end.
"""

from .cli import main, parse_ideal, parse_poly, render_ideal
from .errors import NullkitError
from .field import QQ, FieldElement, PrimeField, Tower, frobenius, pth_root, tower_extend
from .groebner import (
    INFINITE,
    Ideal,
    elimination_ideal,
    groebner_basis,
    is_proper,
    member,
    reduce,
    s_polynomial,
    staircase_dimension,
)
from .noether import MonicizingMap, build_monicizer
from .nullsatz import (
    MaximalIdealResult,
    PointSet,
    TriangularChain,
    field_obstruction,
    is_field,
    is_maximal,
    maximal_ideal_containing,
    points_of_maximal_ideal,
    quotient_dimension,
    quotient_inverse,
    radical_member,
)
from .oracle import (
    VarietySlice,
    embed,
    power_member_oracle,
    radical_member_oracle,
    variety_slice,
)
from .poly import MultiPoly, PolyRing
from .resultant import (
    PropernessReport,
    SylvesterMatrix,
    det_fraction_free,
    properness_certificate,
    resultant,
    sylvester,
)
from .unifactor import (
    Factorization,
    canonical_extension,
    factor,
    is_irreducible,
    squarefree_decompose,
)

__all__ = [
    "NullkitError",
    "QQ",
    "FieldElement",
    "PrimeField",
    "Tower",
    "frobenius",
    "pth_root",
    "tower_extend",
    "MultiPoly",
    "PolyRing",
    "INFINITE",
    "Ideal",
    "elimination_ideal",
    "groebner_basis",
    "is_proper",
    "member",
    "reduce",
    "s_polynomial",
    "staircase_dimension",
    "SylvesterMatrix",
    "sylvester",
    "det_fraction_free",
    "resultant",
    "PropernessReport",
    "properness_certificate",
    "MonicizingMap",
    "build_monicizer",
    "Factorization",
    "factor",
    "is_irreducible",
    "squarefree_decompose",
    "canonical_extension",
    "TriangularChain",
    "MaximalIdealResult",
    "PointSet",
    "maximal_ideal_containing",
    "quotient_dimension",
    "quotient_inverse",
    "field_obstruction",
    "is_field",
    "is_maximal",
    "radical_member",
    "points_of_maximal_ideal",
    "VarietySlice",
    "variety_slice",
    "radical_member_oracle",
    "power_member_oracle",
    "embed",
    "main",
    "parse_ideal",
    "parse_poly",
    "render_ideal",
]
