"""Exact digit expansions of 1/P in a polynomial base over F_q[T], and the
divisor class numbers of cyclotomic function field subfields they encode.

The core objects: FieldSpec/FieldElement for F_q, Poly for F_q[T], CycloInt
for Z[zeta_n], ResidueCtx for the unit group mod P presented by a primitive
base G, and the class number routes in carlitzdigits.classnum.
"""

from .carlitz import AdditivePoly, carlitz_poly
from .chars import (
    DirichletChar,
    ResidueCtx,
    SubfieldDescriptor,
    build_context,
    restriction,
    subfield,
)
from .classnum import (
    ClassNumberReport,
    DigitPolynomials,
    canonical_primitive_lift,
    compute_report,
    digit_degree_sum,
    digit_polynomials,
    full_degree_identity,
    full_twist_identity,
    h_from_char_sums,
    h_minus_from_digits,
    h_plus_from_digits,
    point_count_class_number,
    quadratic_class_number,
    window_degree_identity,
    window_twist_identity,
)
from .cycint import CycloInt, cyclotomic_poly, exponent_sum, int_poly_resultant, root_of_unity
from .digits import (
    DigitExpansion,
    digit_closed_form,
    digit_expand,
    digit_period,
    twisted_digit_sum,
)
from .errors import (
    ExactnessError,
    HypothesisError,
    ParseError,
    PrimitivityError,
    ResourceLimitError,
)
from .ffq import (
    FieldElement,
    FieldSpec,
    UnitCharacter,
    canonical_generator,
    quadratic_character,
    unit_character,
)
from .polyring import (
    NEG_INF,
    Poly,
    format_poly,
    gen,
    is_irreducible,
    mod_pow,
    monic_polys,
    monic_polys_below,
    parse_poly,
    poly,
    poly_gcd,
    valuation_inf,
)

__version__ = "0.1.0"

__all__ = [
    "AdditivePoly",
    "carlitz_poly",
    "DirichletChar",
    "ResidueCtx",
    "SubfieldDescriptor",
    "build_context",
    "restriction",
    "subfield",
    "ClassNumberReport",
    "DigitPolynomials",
    "canonical_primitive_lift",
    "compute_report",
    "digit_degree_sum",
    "digit_polynomials",
    "full_degree_identity",
    "full_twist_identity",
    "h_from_char_sums",
    "h_minus_from_digits",
    "h_plus_from_digits",
    "point_count_class_number",
    "quadratic_class_number",
    "window_degree_identity",
    "window_twist_identity",
    "CycloInt",
    "cyclotomic_poly",
    "exponent_sum",
    "int_poly_resultant",
    "root_of_unity",
    "DigitExpansion",
    "digit_closed_form",
    "digit_expand",
    "digit_period",
    "twisted_digit_sum",
    "ExactnessError",
    "HypothesisError",
    "ParseError",
    "PrimitivityError",
    "ResourceLimitError",
    "FieldElement",
    "FieldSpec",
    "UnitCharacter",
    "canonical_generator",
    "quadratic_character",
    "unit_character",
    "NEG_INF",
    "Poly",
    "format_poly",
    "gen",
    "is_irreducible",
    "mod_pow",
    "monic_polys",
    "monic_polys_below",
    "parse_poly",
    "poly",
    "poly_gcd",
    "valuation_inf",
    "__version__",
]
