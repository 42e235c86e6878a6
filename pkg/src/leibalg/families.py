"""Generators for the named algebras used throughout the package."""

from __future__ import annotations

from .algebra import LeibnizAlgebra
from .errors import BadDimension


def build_example_4_9() -> LeibnizAlgebra:
    """Six-dimensional algebra with I = <e1, e2> simple and g/I nilpotent."""
    return LeibnizAlgebra.from_brackets(
        6,
        {
            (2, 2): {1: 1},
            (3, 3): {5: 1},
            (3, 4): {6: 1},
            (4, 3): {5: 1},
            (5, 3): {6: 1},
        },
        name="example_4_9",
    )


def build_truncated_4_10(d: int) -> LeibnizAlgebra:
    """First ``d`` basis vectors of ``[e2,e2] = e1``, ``[e_i,e3] = e_{i+1}`` (i >= 4).

    ``[e_d, e3]`` would leave the span, so it is set to zero.  This is the
    quotient of the infinite algebra by the ideal spanned by ``e_{d+1}, ...``.
    """
    if d < 6:
        raise BadDimension(f"truncation needs d >= 6, got {d}")
    brackets = {(2, 2): {1: 1}}
    for i in range(4, d):
        brackets[(i, 3)] = {i + 1: 1}
    return LeibnizAlgebra.from_brackets(d, brackets, name=f"example_4_10_d{d}")


def i2() -> LeibnizAlgebra:
    """``[e2, e2] = e1``: the smallest non-Lie Leibniz algebra."""
    return LeibnizAlgebra.from_brackets(2, {(2, 2): {1: 1}}, name="I2")


def n3() -> LeibnizAlgebra:
    """``[e1, e1] = e2``, ``[e1, e2] = e3``: nilpotent, cyclic, left Leibniz."""
    return LeibnizAlgebra.from_brackets(3, {(1, 1): {2: 1}, (1, 2): {3: 1}}, name="N3")


def heisenberg() -> LeibnizAlgebra:
    return LeibnizAlgebra.from_brackets(3, {(1, 2): {3: 1}, (2, 1): {3: -1}}, name="heisenberg")


def sl2() -> LeibnizAlgebra:
    """Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return LeibnizAlgebra.from_brackets(
        3,
        {
            (1, 2): {3: 1},
            (2, 1): {3: -1},
            (3, 1): {1: 2},
            (1, 3): {1: -2},
            (3, 2): {2: -2},
            (2, 3): {2: 2},
        },
        name="sl2",
    )


FAMILIES = {
    "4.9": build_example_4_9,
    "4.10": build_truncated_4_10,
}
