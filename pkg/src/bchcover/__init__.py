"""Binary BCH codes, exact covering radii, Johnson/Wu bounds, and decoding."""

from .bch import (
    BchSpec,
    CyclotomicCoset,
    build_bch,
    cyclotomic_cosets,
    generator_polynomial,
    minimal_polynomial,
    multiplicative_order_of_two,
)
from .bounds import (
    CoverageReport,
    WuRadius,
    classify,
    johnson_binary_floor,
    johnson_curve,
    johnson_general_floor,
    tau_wu,
)
from .decode import DecodeResult, bounded_decode, list_decode, ml_decode
from .gf2m import BinaryPolynomial, FieldContext, PRIMITIVE_POLYS, make_field
from .linear_code import LinearCode, Word, codeword_table, from_generator_poly
from .manifest import TABLE1, TableRow
from .radius import (
    RadiusResult,
    WeightCapExceeded,
    covering_radius,
    covering_radius_oracle,
    is_perfect,
    revolving_door,
)

__version__ = "0.1.0"

__all__ = [
    "BchSpec",
    "BinaryPolynomial",
    "CoverageReport",
    "CyclotomicCoset",
    "DecodeResult",
    "FieldContext",
    "LinearCode",
    "PRIMITIVE_POLYS",
    "RadiusResult",
    "TABLE1",
    "TableRow",
    "Word",
    "WeightCapExceeded",
    "WuRadius",
    "bounded_decode",
    "build_bch",
    "classify",
    "codeword_table",
    "covering_radius",
    "covering_radius_oracle",
    "cyclotomic_cosets",
    "from_generator_poly",
    "generator_polynomial",
    "is_perfect",
    "johnson_binary_floor",
    "johnson_curve",
    "johnson_general_floor",
    "list_decode",
    "make_field",
    "minimal_polynomial",
    "ml_decode",
    "multiplicative_order_of_two",
    "revolving_door",
    "tau_wu",
]
