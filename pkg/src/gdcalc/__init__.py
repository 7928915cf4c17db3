"""Gauss-diagram state sums: Conway polynomial coefficients and their two-boundary refinements."""

from .gauss import (
    GaussCodeError,
    GaussDiagram,
    PreconditionError,
    diagram,
    move_base_point,
    parse_gauss_code,
    serialize,
)
from .polynomial import IntPolynomial
from .statesums import (
    AD_coeff,
    C_coeff,
    I_coeff,
    conway,
    knot_I_coeff,
    nabla_AD,
    one_boundary_coeff,
    p_coeff,
    two_boundary_coeff,
)

__all__ = [
    "AD_coeff",
    "C_coeff",
    "GaussCodeError",
    "GaussDiagram",
    "I_coeff",
    "IntPolynomial",
    "PreconditionError",
    "conway",
    "diagram",
    "knot_I_coeff",
    "move_base_point",
    "nabla_AD",
    "one_boundary_coeff",
    "p_coeff",
    "parse_gauss_code",
    "serialize",
    "two_boundary_coeff",
]
