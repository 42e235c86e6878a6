"""Exact-rational toolkit for finite-dimensional Leibniz algebras."""

__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    Identity,
    LeibnizAlgebra,
    center,
    classify,
    derived_series,
    ideal_closure,
    is_ideal,
    leibniz_kernel,
    lower_central_series,
    quotient,
    verify_leibniz,
)
from .derivations import central_derivation_space, derivation_space, extend_by_central_derivation, extract_theta  # noqa: E402
from .families import build_example_4_9, build_truncated_4_10  # noqa: E402
from .io import emit_algebra, parse_algebra  # noqa: E402
from .simple import Verdict, is_simple  # noqa: E402

__all__ = [
    "Identity",
    "LeibnizAlgebra",
    "Verdict",
    "build_example_4_9",
    "build_truncated_4_10",
    "center",
    "central_derivation_space",
    "classify",
    "derivation_space",
    "derived_series",
    "emit_algebra",
    "extend_by_central_derivation",
    "extract_theta",
    "ideal_closure",
    "is_ideal",
    "is_simple",
    "leibniz_kernel",
    "lower_central_series",
    "parse_algebra",
    "quotient",
    "verify_leibniz",
]
