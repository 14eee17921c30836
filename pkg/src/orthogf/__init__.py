"""Orthogonal polynomial families generated by F(xz - alpha z^2), in exact arithmetic."""
from .classify import (
    ChebyshevT,
    Hermite,
    Rejected,
    Ultraspherical,
    classify,
    fit_linear_dn,
    identify_from_recursion,
    omega_formula,
)
from .exact import PolyX, SeriesZ, format_rational, parse_rational, substitute_quadratic
from .families import FamilyId, moment_oracle, polys_from_recursion, recursion_of
from .favard import NotThreeTerm, Recursion, check_positive, fit, rescale
from .genfun import (
    AbcRule,
    ExplicitRule,
    GFSpec,
    MonicFamily,
    NamedRule,
    ZeroCoefficient,
    closed_form_coeffs,
    coeffs_from_rule,
    expand,
    shift_rule,
)
from .orthocheck import MomentSeq, gram, moments_from_recursion, verify_orthogonality

__version__ = "0.1.0"
