"""Ultraspherical polynomials, their real zeros, and bounds for the zero above 1."""

from .core import (
    Basis,
    Params,
    RationalPoly,
    coeffs_t,
    coeffs_x,
    eval_exact,
    eval_recurrence,
    parse_rational,
    prefactor,
)
from .errors import (
    BracketFailure,
    DegenerateParameters,
    DomainError,
    GegenbauerError,
    LengthMismatch,
    PreconditionViolated,
    SingularHypergeometricParameter,
    TrivialParameter,
)
from .zeros import ZeroSet, largest_zero, zeros, zeros_orthogonal, zeros_quasi

__version__ = "0.1.0"
