"""Convolutions and exhaustive axiom checks for finite promonoidal
structures enriched over tropical and counting semirings."""

from .carriers import Carrier, DEFAULT_TOL, INF, NEG_INF, Value, exp_iso, log_iso
from .convolution import (
    ConvMode,
    Verdict,
    convolve,
    convolve_lower,
    convolve_upper,
    dualize,
    is_convex,
    is_monoid,
)
from .errors import (
    CarrierMismatchError,
    InvalidAlgebraError,
    InvalidStructureError,
    NotAPosetError,
    NotHeytingError,
    ParseError,
    StarconvError,
    UnknownFixtureError,
    UnsupportedOperationError,
)
from .posets import FinitePoset, make_poset
from .structures import (
    CheckReport,
    Functor,
    PromonoidalStructure,
    Witness,
    check_associativity,
    check_cyclic,
    check_dual_compat,
    check_unit,
    check_variance,
    unit_functor,
)

__version__ = "0.1.0"

__all__ = [
    "Carrier",
    "CheckReport",
    "ConvMode",
    "DEFAULT_TOL",
    "FinitePoset",
    "Functor",
    "INF",
    "NEG_INF",
    "PromonoidalStructure",
    "Value",
    "Verdict",
    "Witness",
    "check_associativity",
    "check_cyclic",
    "check_dual_compat",
    "check_unit",
    "check_variance",
    "convolve",
    "convolve_lower",
    "convolve_upper",
    "dualize",
    "exp_iso",
    "is_convex",
    "is_monoid",
    "log_iso",
    "make_poset",
    "unit_functor",
    "CarrierMismatchError",
    "InvalidAlgebraError",
    "InvalidStructureError",
    "NotAPosetError",
    "NotHeytingError",
    "ParseError",
    "StarconvError",
    "UnknownFixtureError",
    "UnsupportedOperationError",
    "__version__",
]
