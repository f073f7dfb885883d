"""Sparse polynomials over F_2 and the identity verification suite."""

from .identities import (
    IdentityRecord,
    numeric_shadow,
    verify_all,
    verify_appendix,
    verify_section3,
    verify_section4,
)
from .mpoly import MPoly, InexactDivisionError, parse, var
from .transcribed import appendix_constants

__all__ = [
    "IdentityRecord",
    "MPoly",
    "InexactDivisionError",
    "appendix_constants",
    "numeric_shadow",
    "parse",
    "var",
    "verify_all",
    "verify_appendix",
    "verify_section3",
    "verify_section4",
]
