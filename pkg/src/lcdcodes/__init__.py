"""Exact analysis and construction of Hermitian and trace-Hermitian LCD codes over F_{r^2}."""

from lcdcodes.codes import (
    EUCLIDEAN,
    HERMITIAN,
    TRACE_HERMITIAN,
    InnerProductKind,
    LinearCode,
    SubfieldLinearCode,
    dual,
    enumerate_codewords,
    hamming_distance,
    hamming_weight,
    hull_brute_force,
    hull_oracle,
    inner_product,
    min_distance,
)
from lcdcodes.constructions import (
    construct,
    construct_hermitian_even,
    construct_hermitian_odd,
    construct_trace_hermitian_even,
    construct_trace_hermitian_odd,
    standard_form_linear,
    standard_form_subfield,
)
from lcdcodes.field import (
    FieldElement,
    FieldSpec,
    conj,
    default_field,
    field_new,
    find_alpha,
    is_in_subfield,
    sqrt_minus_one,
    trace,
)
from lcdcodes.lcd import (
    TraceHermitianProjection,
    hermitian_lcd_check,
    hermitian_projection,
    is_hermitian_lcd,
    is_trace_hermitian_lcd,
    trace_hermitian_lcd_check,
    trace_hermitian_projection,
    verify_projection,
)
from lcdcodes.matrix import MatrixFq, expand_to_base

__version__ = "0.1.0"
