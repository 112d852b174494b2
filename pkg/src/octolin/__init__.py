"""Octonionic para-linear operators on O^n: arithmetic, weak associative
frames, and isometry classification."""

from .classify import (
    ClassificationReport,
    Iso2Decomposition,
    StiefelReport,
    classify,
    is_isometry,
    is_partial_isometry,
    is_stiefel_frame,
    iso2_decompose,
    loop_inverse,
    loop_mul,
    stiefel_OOy_dim,
)
from .config import DEFAULT_TOL, Tolerances
from .errors import DimensionError, DomainError, OctolinError, ParseError
from .frames import (
    Frame,
    FrameReport,
    bessel_residual,
    frame_report,
    gram,
    is_associative_frame,
    is_orthonormal,
    is_weak_associative,
    parseval_check,
    parseval_witness,
)
from .octonion import Octonion, basis_mul, e, mult_table
from .omodule import OVector, inner, second_associator_vec
from .paralinear import (
    OMatrix,
    apply,
    conj_transpose,
    dual,
    kernel,
    matmul,
    rank,
    real_matrix,
    regular_compose,
)

__version__ = "0.1.0"

__all__ = [
    "apply",
    "basis_mul",
    "bessel_residual",
    "ClassificationReport",
    "classify",
    "conj_transpose",
    "DEFAULT_TOL",
    "DimensionError",
    "DomainError",
    "dual",
    "e",
    "Frame",
    "frame_report",
    "FrameReport",
    "gram",
    "inner",
    "is_associative_frame",
    "is_isometry",
    "is_orthonormal",
    "is_partial_isometry",
    "is_stiefel_frame",
    "is_weak_associative",
    "iso2_decompose",
    "Iso2Decomposition",
    "kernel",
    "loop_inverse",
    "loop_mul",
    "matmul",
    "mult_table",
    "OctolinError",
    "Octonion",
    "OMatrix",
    "OVector",
    "ParseError",
    "parseval_check",
    "parseval_witness",
    "rank",
    "real_matrix",
    "regular_compose",
    "second_associator_vec",
    "stiefel_OOy_dim",
    "StiefelReport",
    "Tolerances",
]
