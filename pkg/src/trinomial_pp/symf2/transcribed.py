"""Closed-form polynomials of the classification argument, kept as TeX text.

Each string is the printed right-hand side, so a transcription slip shows up
as a failing identity rather than being silently absorbed.  ``GENERAL_*``
entries treat a = a1*z with a1 in F_q (variables a1, b, k, z, X, Y);
``BASEFIELD_*`` entries treat a in F_q (variables a, b, k, z, X, Y).
"""

from __future__ import annotations

from functools import lru_cache

from .mpoly import MPoly, parse

# -- a outside the base field --------------------------------------------------

GENERAL = {
    "A": r"""X^3 (1+a_1+b+a_1 z)+X^2 (a_1+a_1 k+z+a_1z+b z)
        +X (1+a_1+k+b k+z+a_1 z+b z+a_1 k z)
        +a_1+k+a_1 k+b k+a_1 k^2+a_1 z+b z+k z+b k z""",
    "B": r"""X^3 (1+b+a_1 z)+X^2 (1+b+a_1 k+z+a_1 z+b z)
        +X (b+k+a_1 k+b k+z+a_1 z+b z+a_1 k z)
        +b+a_1 k+a_1 k^2+a_1 z+b z+k z+b k z""",
    "C3": r"1+a_1+a_1 b+b^2+a_1^2 k",
    "C2": r"1+a_1+a_1 b+b^2+(1+b^2+a_1^2 k )Y",
    "C1": r"b+a_1 b+b^2+k+a_1 k+a_1 b k+b^2 k+a_1^2 k^2+(1+a_1+b^2+a_1^2 k)Y",
    "C0": r"b+a_1 b+b^2+a_1 k+a_1^2 k^2+(a_1+b+b^2+k +a_1^2 k +b^2 k +a_1^2 k^2 )Y",
    "E2": r"1+a_1+a_1 b^2+b^4+a_1^3 k+a_1^4 k^2",
    "E1": r"1+a_1+a_1 b+a_1 b^2+a_1 b^3+b^4+a_1^3 k+a_1^3 b k+a_1^4 k^2",
    "E0": r"k+a_1 k+a_1^3 b k+a_1 b^2 k+b^4 k+a_1^3 k^2+a_1^4 k^3",
    # constant factor pulled out of both elimination resultants
    "C3_factor": r"1+a_1+a_1b+b^2+a_1^2k",
    "reduced_k_linear": r"""a_1^4(1+a_1^2+b+b^2+b^3)^2k
        +a_1^2(1+a_1^4+a_1^4b^2+a_1^2b^3+a_1^2b^7+b^8)""",
    "reduced_k_linear_multiplier": r"a_1^2k^2+a_1^2bk+b+b^3",
    "reduced_k_free": r"a_1^8b^3(1+b)^4(1+a_1^2+a_1b+a_1b^2+b^4)^4",
    "R": r"1+a_1^2+a_1b+a_1b^2+b^4",
}

APPENDIX = {
    "F4": r"""a_1+b+b^2+a_1 b^2+b^3+b^4+a_1 b^4+b^5+b^6+a_1 b^6+b^7+b^8\\
        &+(a_1^3 +a_1^2 b+a_1^3 b^4 +a_1^2 b^5)k+(a_1^4+a_1^5+a_1^4 b+a_1^4 b^2+a_1^5 b^2+a_1^4 b^3)k^2\cr
        &+(a_1^7 +a_1^6 b)k^3+a_1^8 k^4""",
    "F3": r"""1+a_1^2+a_1^3+a_1^4+b+a_1 b+a_1^4 b+b^2+a_1 b^2+a_1^3 b^2+b^3+b^4+a_1^2b^4\\
        &+b^5+a_1 b^5+b^6+a_1 b^6+b^7+(a_1^2 +a_1^4 +a_1^5 +a_1^2 b +a_1^4 b^2 +a_1^2 b^4+a_1^2b^5)k\cr
        &+(a_1^4 +a_1^4 b +a_1^5 b +a_1^4 b^2 +a_1^5 b^2 +a_1^4 b^3)k^2+(a_1^6 +a_1^6 b)k^3""",
    "F2": r"""b+a_1 b+a_1^3 b+a_1^4 b+b^2+a_1 b^2+a_1^3 b^2+a_1^4 b^2+b^3+a_1^2 b^3+a_1^3b^3+b^4\\
        &+a_1^2 b^4+a_1^3 b^4+b^5+a_1 b^5+a_1^2 b^5+b^6+a_1 b^6+a_1^2 b^6+b^7+b^8\cr
        &+(a_1^3 +a_1^4 +a_1^3b +a_1^3 b^2 +a_1^5 b^2 +a_1^3 b^3 +a_1^4 b^3)k\cr
        &+(a_1^4 +a_1^4 b +a_1^4 b^2 +a_1^6 b^2+a_1^4 b^3)k^2+a_1^7 k^3+a_1^8 k^4""",
    "F1": r"""a_1+a_1^2+a_1^3+a_1^4+b+a_1 b+a_1^3 b+a_1^4 b+a_1 b^2+a_1^2
        b^2+b^3\\
        &+a_1^2 b^3+a_1^3 b^3+a_1 b^4+a_1^3 b^4+b^5+a_1 b^5+a_1^2 b^5+a_1 b^6+b^7\cr
        &+(1+a_1^3 +a_1^4 +a_1^5 +b +a_1b +a_1^3 b +a_1^4 b +b^2 +a_1 b^2 +a_1^4 b^2\cr
        & +b^3 +a_1^3 b^3 +a_1^4 b^3 +b^4 +a_1^3 b^4 +b^5
        +a_1 b^5 +b^6 +a_1 b^6 +b^7)k\cr
        &+(a_1^2 +a_1^4 +a_1^2 b +a_1^4 b +a_1^4 b^2 +a_1^4
        b^3 +a_1^2 b^4 +a_1^2 b^5)k^2\cr
        &+(a_1^4 +a_1^6 +a_1^4 b +a_1^5 b +a_1^4 b^2 +a_1^5
        b^2 +a_1^4 b^3)k^3+(a_1^6 +a_1^6 b)k^4""",
    "F0": r"""b+a_1^4 b+b^2+a_1^4 b^2+b^5+b^6+(a_1 +a_1^2 +a_1^3 +a_1^4 +b +a_1b +a_1^3 b +a_1^4 b\\
        & +a_1^2 b^2 +a_1^5 b^2 +b^3 +a_1^2 b^3 +a_1^3 b^3 +a_1 b^4 +a_1^3 b^4 +b^5 +a_1b^5 +a_1^2 b^5 +b^7)k\cr
        &+(a_1 +a_1^2 +a_1^4 +a_1^5 +b +a_1^3 b +a_1^4 b +a_1^5b +b^2 +a_1 b^2 +a_1^3 b^2 +a_1^4 b^2 +a_1^6 b^2\cr
        & +b^3 +a_1^3 b^3 +a_1^4 b^3 +b^4 +a_1
        b^4 +a_1^2 b^4 +a_1^3 b^4 +b^5 +b^6 +a_1 b^6 +b^7 +b^8)k^2\cr
        &+(a_1^3 +a_1^5 +a_1^2 b +a_1^4 b +a_1^5 b^2 +a_1^4 b^3 +a_1^3 b^4 +a_1^2 b^5)k^3\cr
        &+(a_1^4 +a_1^5 +a_1^6+a_1^4 b +a_1^4 b^2 +a_1^5 b^2 +a_1^4 b^3 )k^4+(a_1^7 +a_1^6 b )k^5+a_1^8 k^6""",
    "h1": r"""1+a_1^4+a_1^2 b+a_1^4 b^2+a_1^2 b^5+b^8+(a_1^2 +a_1^6 +a_1^2 b^2 +a_1^2b^4 +a_1^2 b^6 )k\\
        &+(a_1^4 +a_1^6 b +a_1^4 b^4 )k^2+(a_1^6 +a_1^6 b^2 )k^3""",
    "h2": r"""a_1^2+a_1^6+b+a_1^4 b+a_1^2 b^2+a_1^6 b^2+b^3+a_1^4 b^3+a_1^2 b^4+a_1^4b^5+a_1^2 b^6+a_1^4 b^7+b^9\\
        &+b^{11}+(a_1^4 +a_1^8 +a_1^4 b^4 )k+(a_1^2 +a_1^6 +a_1^4 b +a_1^8 b +a_1^6 b^4+a_1^4 b^5 +a_1^2 b^8 )k^2\cr
        &+(a_1^4 +a_1^8 +a_1^4 b^2 +a_1^8 b^2 +a_1^4 b^4 +a_1^4 b^6 )k^3+(a_1^6
        +a_1^8 b^3 +a_1^6 b^4 )k^4+(a_1^8 +a_1^8 b^2 )k^5""",
    "d1": r"""a_1^2+a_1^6+a_1^{10}+a_1^{14}+b+a_1^4 b+a_1^8 b+a_1^{12} b+a_1^4
        b^3+a_1^{12} b^3+a_1^2 b^4+a_1^{10} b^4+b^5+a_1^8 b^5\\
        &+a_1^6 b^6+a_1^8 b^7+a_1^6 b^8+a_1^8 b^{11}+a_1^6 b^{14}+a_1^2 b^{16}+b^{17}+a_1^4b^{17}+a_1^4 b^{19}+a_1^2 b^{20}+b^{21}\cr
        &+(a_1^2 b +a_1^6 b +a_1^{10} b +a_1^{14} b +a_1^2 b^3 +a_1^{10} b^3 +a_1^{10}b^7 +a_1^{10} b^9 +a_1^2 b^{17} +a_1^6 b^{17} +a_1^2 b^{19} )k\cr
        &+(a_1^2 +a_1^6 +a_1^{10} +a_1^{14}+a_1^2 b^2 +a_1^6 b^2 +a_1^{10} b^2 +a_1^{14} b^2 +a_1^8 b^3 +a_1^{12} b^3 +a_1^6 b^4 +a_1^{10}b^4 \cr
        &+a_1^{12} b^5 +a_1^6 b^6 +a_1^6 b^8 +a_1^6 b^{10} +a_1^{10} b^{10} +a_1^8 b^{11} +a_1^6 b^{12} +a_1^6b^{14} +a_1^2 b^{16} +a_1^2 b^{18} )k^2\cr
        &+(a_1^{10} b^3 +a_1^{14} b^3 +a_1^{10} b^5 +a_1^{10} b^7 +a_1^{10} b^9 )k^3\cr
        &+(a_1^6+a_1^{14} +a_1^6 b^2 +a_1^{14} b^2 +a_1^6 b^4 +a_1^6 b^6 +a_1^6 b^8 +a_1^6 b^{10} +a_1^6
        b^{12} +a_1^6 b^{14} )k^4""",
    "d2": r"""1+a_1^4+a_1^8+a_1^{12}+a_1^2 b+a_1^{10} b+b^2+a_1^8 b^2+a_1^6 b^3+a_1^{10}b^3\\
        &+a_1^8 b^6+a_1^8 b^8+a_1^6 b^{11}+b^{16}+a_1^4 b^{16}+a_1^2 b^{17}+b^{18}\cr
        &+(a_1^4 b +a_1^{12} b +a_1^4 b^3 +a_1^8 b^3
        +a_1^4 b^5 +a_1^8 b^5 +a_1^4 b^7\cr
        &+a_1^8 b^7 +a_1^4 b^9 +a_1^8 b^9 +a_1^4 b^{11} +a_1^4 b^{13} +a_1^4
        b^{15} )k\cr
        &+(a_1^4 +a_1^{12} +a_1^4 b^2 +a_1^{12} b^2 +a_1^4 b^4 +a_1^4 b^6 +a_1^4 b^8 +a_1^4
        b^{10} +a_1^4 b^{12} +a_1^4 b^{14} )k^2""",
}

# -- a inside the base field ---------------------------------------------------

BASEFIELD = {
    "A": r"""(1+a+b) X^3+(a+z+a z+b z)X^2 +(1+a+k+a k+b k+z+a z+b z)X
        +a+k+b k+a z+b z+k z+a k z+b k z""",
    "B": r"""(1+a+b) X^3+ (1+b+z+a z+b z)X^2+ (b+k+a k+b k+z+a z+b z)X
        +b+a k+a z+b z+k z+a k z+b k z""",
    "C3": r"1+a+b",
    "C2": r"1+b+(1+a+b)Y",
    "C1": r"b+(1+a+b)k+(1+a+b)Y",
    "C0": r"b+ak+(a+b+k+ak+bk)Y",
    "E2": r"1+a^2+b^2",
    "E1": r"1+a^2+b^2",
    "E0": r"ab+k+a^2k+b^2k",
    "F4": r"a+a^2+a^3+a^4+b+a^2 b+b^2+a b^2+b^3+b^4",
    "F3": r"1+a^2+b+a^2 b+b^2+b^3",
    "F2": r"a^3+a^4+b+b^2+b^3+b^4",
    "F1": r"a+b+a b+b^3+k+a^2 k+b k+a^2 b k+b^2 k+b^3 k",
    "F0": r"""b+b^2+a b^2+a^2 b^2+a k+b k+a b^2 k+b^3 k+a k^2+a^2 k^2
        &+a^3 k^2+a^4 k^2+b k^2+a^2 b k^2+b^2 k^2+a b^2 k^2+b^3 k^2+b^4 k^2""",
    "locus": r"(1+b)^3(1+a+b)(a^2+b+b^2)",
    "delta_closed_form": r"ab+(1+a^2+b^2)(Y^2+Y+k)",
    "companion_closed_form": r"1+b+ab+(1+a^2+b^2)(Y^2+Y+k)",
}


@lru_cache(maxsize=None)
def general(name: str) -> MPoly:
    return parse(GENERAL[name])


@lru_cache(maxsize=None)
def appendix(name: str) -> MPoly:
    return parse(APPENDIX[name])


@lru_cache(maxsize=None)
def basefield(name: str) -> MPoly:
    return parse(BASEFIELD[name])


def appendix_constants() -> dict[str, MPoly]:
    """F4..F0, h1, h2, d1, d2 as polynomials in a1, b, k."""
    return {name: appendix(name) for name in APPENDIX}
