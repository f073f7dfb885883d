"""Machine verification of the polynomial identities behind the classification.

Every identity is an ``IdentityRecord``: a builder returning (lhs, rhs) as
MPolys, optionally compared modulo z^2 + z + k.  Records live in four
sections:

``general``    a = a1*z lies outside the base field
``basefield``  a lies in the base field
``appendix``   the long closed forms, checked against their derivations
``printed``    two relations exactly as typeset; these are expected to fail,
               and their corrected companions live in ``general``
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from ..fields import GF2n, Tower
from .mpoly import ONE, ZERO, MPoly, var
from .transcribed import appendix, appendix_constants, basefield, general

__all__ = [
    "IdentityRecord",
    "SECTIONS",
    "build_records",
    "verify_section3",
    "verify_section4",
    "verify_appendix",
    "verify_printed",
    "verify_all",
    "numeric_shadow",
    "basefield_resultant_factorization",
]

SECTIONS = ("general", "basefield", "appendix", "printed")

Builder = Callable[[], "tuple[MPoly, MPoly]"]


@dataclass
class IdentityRecord:
    name: str
    anchor: str
    section: str
    build: Builder = field(repr=False)
    modulo_z: bool = False
    expected: bool = True
    lhs: MPoly | None = field(default=None, repr=False)
    rhs: MPoly | None = field(default=None, repr=False)
    diff: MPoly | None = field(default=None, repr=False)

    def run(self) -> "IdentityRecord":
        self.lhs, self.rhs = self.build()
        diff = self.lhs + self.rhs
        self.diff = diff.reduce_z() if self.modulo_z else diff
        return self

    @property
    def passed(self) -> bool:
        if self.diff is None:
            self.run()
        return not self.diff

    @property
    def ok(self) -> bool:
        """Outcome matches expectation (printed-form records must fail)."""
        return self.passed == self.expected

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "section": self.section,
            "verdict": "pass" if self.passed else "fail",
            "expected": "pass" if self.expected else "fail",
            "diff_monomial_count": len(self.diff) if self.diff is not None else None,
        }


# -- shared building blocks --------------------------------------------------

a1, a, b, k, z, X, Y = (var(n) for n in ("a1", "a", "b", "k", "z", "X", "Y"))
c0, c1, c2, c3 = (var(n) for n in ("c0", "c1", "c2", "c3"))
D, D0, D1, D2 = (var(n) for n in ("D", "D0", "D1", "D2"))
E0, E1, E2 = (var(n) for n in ("E0", "E1", "E2"))
F0, F1, F2, F3, F4 = (var(n) for n in ("F0", "F1", "F2", "F3", "F4"))
N, S = var("N"), var("S")


def _g_composed(a_val: MPoly, a_conj: MPoly, b_val: MPoly):
    """Numerator and denominator of g((X+z+1)/(X+z)) after clearing (X+z)^3."""
    u, w = X + z + 1, X + z
    num = a_conj * u**3 + u**2 * w + b_val * w**3
    den = b_val * u**3 + u * w**2 + a_val * w**3
    return num, den


def _cubic(C3, C2, C1, C0, x=X):
    return C3 * x**3 + C2 * x**2 + C1 * x + C0


def _delta(C):
    C3, C2, C1, C0 = C
    return C1 * C2 + C0 * C3


def _quartic(C):
    C3, C2, C1, C0 = C
    return (k + 1) * _delta(C) ** 2 + (C1**2 + C0 * C2) * (C2**2 + C1 * C3)


def _resultants(E, Fc):
    """Eliminants of D1 from the three quadratic relations, as E, F polynomials."""
    e2, e1, e0 = E
    f4, f3, f2, f1, f0 = Fc
    mid = e0 * f3 + e2 * f1 + e1 * f2
    top = e1 * (f3**2 + e1 * e2 * f3 + e1**2 * f4) + e2**2 * mid
    bottom = e1 * (f1**2 + e0 * e1 * f1 + e1**2 * f0) + e0**2 * mid
    return top, bottom


def _general_C():
    return tuple(general(n) for n in ("C3", "C2", "C1", "C0"))


def _general_E():
    return tuple(general(n) for n in ("E2", "E1", "E0"))


def _basefield_C():
    return tuple(basefield(n) for n in ("C3", "C2", "C1", "C0"))


def _basefield_E():
    return tuple(basefield(n) for n in ("E2", "E1", "E0"))


def _basefield_F():
    return tuple(basefield(f"F{i}") for i in (4, 3, 2, 1, 0))


def _quartic_coefficients_generic():
    """D(D + S) + sum F_i Y^i with D, S quadratic in Y and symbolic coefficients."""
    Dy = D2 * Y**2 + D1 * Y + D0
    Sy = E2 * Y**2 + E1 * Y + E0
    rhs = F4 * Y**4 + F3 * Y**3 + F2 * Y**2 + F1 * Y + F0
    return (Dy * (Dy + Sy) + rhs).coefficients("Y")


# D2 and D0 expressed through D1, both scaled by E1
_D2_SCALED = E2 * D1 + F3
_D0_SCALED = E0 * D1 + F1
_TOP = E2**2 * D1**2 + E1 * E2**2 * D1 + F3**2 + E1 * E2 * F3 + E1**2 * F4
_MIDDLE = E1 * D1**2 + E1**2 * D1 + E0 * F3 + E2 * F1 + E1 * F2
_BOTTOM = E0**2 * D1**2 + E0**2 * E1 * D1 + F1**2 + E0 * E1 * F1 + E1**2 * F0


# -- record tables -------------------------------------------------------------

def _general_records(consts: dict[str, MPoly]) -> list[IdentityRecord]:
    h1, h2, d1, d2 = (consts[n] for n in ("h1", "h2", "d1", "d2"))
    Fc = tuple(consts[f"F{i}"] for i in (4, 3, 2, 1, 0))
    C = _general_C()
    E = _general_E()
    a_val, a_conj = a1 * z, a1 * (z + 1)
    R = general("R")

    def ab_cross():
        num, den = _g_composed(a_val, a_conj, b)
        return num * general("B"), general("A") * den

    def cubic_from_cross():
        A_, B_ = general("A").substitute("X", X), general("B")
        lhs = A_ * (1 + b + a1 * z) * (Y + z) + B_ * (1 + a1 + b + a1 * z) * (Y + z + 1)
        return lhs, _cubic(*C)

    def top_eliminant():
        top, _ = _resultants(E, Fc)
        return top, a1**2 * general("C3_factor") ** 3 * h1

    def bottom_eliminant():
        _, bottom = _resultants(E, Fc)
        return bottom, general("C3_factor") ** 3 * h2

    coeffs = _quartic_coefficients_generic()
    stated = {
        4: D2**2 + E2 * D2 + F4,
        3: E1 * D2 + E2 * D1 + F3,
        2: E0 * D2 + D1**2 + E1 * D1 + E2 * D0 + F2,
        1: E0 * D1 + E1 * D0 + F1,
        0: D0**2 + E0 * D0 + F0,
    }

    recs = [
        IdentityRecord("numerator-A", "A(X) as numerator of g((X+z+1)/(X+z)), a=a1*z",
                       "general", lambda: (_g_composed(a_val, a_conj, b)[0], general("A")), True),
        IdentityRecord("denominator-B", "B(X) as denominator of g((X+z+1)/(X+z)), a=a1*z",
                       "general", lambda: (_g_composed(a_val, a_conj, b)[1], general("B")), True),
        IdentityRecord("A-over-B-cross", "A/B equals g((X+z+1)/(X+z)) cross-multiplied",
                       "general", ab_cross, True),
        IdentityRecord("cubic-coefficients", "C3 x^3 + C2(y) x^2 + C1(y) x + C0(y)",
                       "general", cubic_from_cross, True),
        IdentityRecord("leading-coefficient", "C3 = a1^2 (((1+b)/a1)^2 + (1+b)/a1 + k)",
                       "general", lambda: ((1 + b) ** 2 + a1 * (1 + b) + a1**2 * k, C[0])),
        IdentityRecord(
            "depressed-cubic", "x' = x + c2/c3 removes the quadratic term",
            "general",
            lambda: (
                (c3 * X + c2) ** 3 + c2 * (c3 * X + c2) ** 2 + c1 * c3 * (c3 * X + c2) + c0 * c3**2,
                c3**3 * X**3 + c3 * (c2**2 + c1 * c3) * X + c3 * (c1 * c2 + c0 * c3),
            ),
        ),
        IdentityRecord(
            "trace-reduction", "(c1^2+c0c2)(c2^2+c1c3) emerges from the trace chain",
            "general",
            lambda: (
                (c2**2 + c1 * c3) ** 3 + (c1**2 + c0 * c2) * (c2**2 + c1 * c3) * c3**2,
                (c2**3 + c1 * c2 * c3) ** 2 + (c2**3 + c1 * c2 * c3) * c3 * (c1 * c2 + c0 * c3),
            ),
        ),
        IdentityRecord("delta-coefficients", "C1C2 + C0C3 = E2 Y^2 + E1 Y + E0",
                       "general", lambda: (_delta(C), E[0] * Y**2 + E[1] * Y + E[2])),
        IdentityRecord(
            "quartic-coefficients", "(k+1)(C1C2+C0C3)^2 + (C1^2+C0C2)(C2^2+C1C3) = F4 Y^4 + ... + F0",
            "general",
            lambda: (_quartic(C), sum((f * Y**i for f, i in zip(Fc, (4, 3, 2, 1, 0))), ZERO)),
        ),
        IdentityRecord(
            "split-quadratic", "X^2+X+k+1+N/S^2 = (X + D/S)(X + 1 + D/S) iff D(D+S) = (k+1)S^2 + N",
            "general",
            lambda: (
                (S * X + D) * (S * X + S + D) + S**2 * (X**2 + X + k + 1) + N,
                D * (D + S) + (k + 1) * S**2 + N,
            ),
        ),
    ]
    for i, anchor in [(4, "D2^2 + E2 D2 = F4"), (3, "E1 D2 + E2 D1 = F3"),
                      (2, "E0 D2 + D1^2 + E1 D1 + E2 D0 = F2"), (1, "E0 D1 + E1 D0 = F1"),
                      (0, "D0^2 + E0 D0 = F0")]:
        recs.append(IdentityRecord(
            f"coefficient-Y{i}", f"Y^{i} coefficient of D(D+C1C2+C0C3): {anchor}", "general",
            lambda i=i: (coeffs.get(i, ZERO), stated[i]),
        ))
    recs += [
        IdentityRecord(
            "eliminate-top", "D2 = (E2 D1 + F3)/E1 turns the Y^4 relation into a quadratic in D1",
            "general",
            lambda: (_D2_SCALED**2 + E2 * E1 * _D2_SCALED + E1**2 * F4, _TOP),
        ),
        IdentityRecord(
            "eliminate-middle", "middle relation becomes E1 D1^2 + E1^2 D1 + E0F3 + E2F1 + E1F2",
            "general",
            lambda: (E0 * _D2_SCALED + E1 * D1**2 + E1**2 * D1 + E2 * _D0_SCALED + E1 * F2, _MIDDLE),
        ),
        IdentityRecord(
            "eliminate-bottom", "D0 = (E0 D1 + F1)/E1 turns the Y^0 relation into a quadratic in D1",
            "general",
            lambda: (_D0_SCALED**2 + E0 * E1 * _D0_SCALED + E1**2 * F0, _BOTTOM),
        ),
        IdentityRecord(
            "resultant-top", "E1(F3^2+E1E2F3+E1^2F4) + E2^2(E0F3+E2F1+E1F2)", "general",
            lambda: (E1 * _TOP + E2**2 * _MIDDLE, _resultants((E2, E1, E0), (F4, F3, F2, F1, F0))[0]),
        ),
        IdentityRecord(
            "resultant-bottom", "E1(F1^2+E0E1F1+E1^2F0) + E0^2(E0F3+E2F1+E1F2)", "general",
            lambda: (E1 * _BOTTOM + E0**2 * _MIDDLE, _resultants((E2, E1, E0), (F4, F3, F2, F1, F0))[1]),
        ),
        IdentityRecord("top-eliminant-h1", "a1^2(1+a1+a1b+b^2+a1^2k)^3 h1",
                       "general", top_eliminant),
        IdentityRecord("bottom-eliminant-h2", "(1+a1+a1b+b^2+a1^2k)^3 h2",
                       "general", bottom_eliminant),
        IdentityRecord(
            "k-linear-combination", "(a1^2k^2+a1^2bk+b+b^3)h1 + h2", "general",
            lambda: (general("reduced_k_linear_multiplier") * h1 + h2, general("reduced_k_linear")),
        ),
        IdentityRecord(
            "k-free-combination", "d1 h1 + d2 h2 = a1^8 b^3 (1+b)^4 (1+a1^2+a1b+a1b^2+b^4)^4",
            "general", lambda: (d1 * h1 + d2 * h2, general("reduced_k_free")),
        ),
        IdentityRecord(
            "cube-relation", "a1^2 + (1+b)^3 = b(1+b)(1+b^2+a1) when 1+a1^2+a1b+a1b^2+b^4 = 0",
            "general", lambda: (a1**2 + (1 + b) ** 3 + b * (1 + b) * (1 + b**2 + a1), R),
        ),
        IdentityRecord(
            "square-relation", "(1+b^2+a1)^2 = a1 b (1+b) when 1+a1^2+a1b+a1b^2+b^4 = 0",
            "general", lambda: _divisibility((1 + b**2 + a1) ** 2 + a1 * b * (1 + b), R),
        ),
        IdentityRecord(
            "numerator-rewrite", "1+a1^4+a1^4b^2+a1^2b^3+a1^2b^7+b^8 regrouped in powers of 1+b",
            "general",
            lambda: (
                1 + a1**4 + a1**4 * b**2 + a1**2 * b**3 + a1**2 * b**7 + b**8,
                (1 + b) ** 8 + a1**4 * (1 + b) ** 2 + a1**2 * b**3 * (1 + b) ** 4,
            ),
        ),
        IdentityRecord(
            "denominator-rewrite", "1+a1^2+b+b^2+b^3 = a1^2 + (1+b)^3",
            "general", lambda: (1 + a1**2 + b + b**2 + b**3, a1**2 + (1 + b) ** 3),
        ),
    ]
    return recs


def _divisibility(p: MPoly, d: MPoly):
    """(p, q*d) where q is the division quotient; equal iff d divides p."""
    quot, _ = p.divide(d)
    return p, quot * d


def basefield_resultant_factorization() -> dict[str, int]:
    """Exponents of (1+b), (1+a+b), (a^2+b+b^2) in the base-field bottom
    eliminant, plus the leftover cofactor as text."""
    _, bottom = _resultants(_basefield_E(), _basefield_F())
    out: dict[str, int] = {}
    for label, f in (("1+b", 1 + b), ("1+a+b", 1 + a + b), ("a^2+b+b^2", a**2 + b + b**2)):
        e = 0
        while True:
            quot, rem = bottom.divide(f)
            if rem:
                break
            bottom, e = quot, e + 1
        out[label] = e
    out["cofactor"] = str(bottom)
    return out


def _basefield_records() -> list[IdentityRecord]:
    C = _basefield_C()
    E = _basefield_E()
    Fc = _basefield_F()
    C3, C2, C1, C0 = C

    def cubic_from_cross():
        lhs = basefield("A") * (Y + z) + basefield("B") * (Y + z + 1)
        return lhs, _cubic(*C)

    def ab_cross():
        num, den = _g_composed(a, a, b)
        return num * basefield("B"), basefield("A") * den

    def top_vanishes():
        return _resultants(E, Fc)[0], ZERO

    def bottom_on_locus():
        bottom = _resultants(E, Fc)[1]
        return _divisibility(bottom, (1 + b) * (1 + a + b) * (a**2 + b + b**2))

    def bottom_factorization():
        bottom = _resultants(E, Fc)[1]
        return bottom, (1 + a + b) * basefield("locus")

    return [
        IdentityRecord("numerator-A", "A(X) for a in the base field",
                       "basefield", lambda: (_g_composed(a, a, b)[0], basefield("A")), True),
        IdentityRecord("denominator-B", "B(X) for a in the base field",
                       "basefield", lambda: (_g_composed(a, a, b)[1], basefield("B")), True),
        IdentityRecord("A-over-B-cross", "A/B equals g((X+z+1)/(X+z)) cross-multiplied",
                       "basefield", ab_cross, True),
        IdentityRecord("cubic-coefficients", "C3 = 1+a+b, C2 = 1+b+(1+a+b)Y, ...",
                       "basefield", cubic_from_cross, True),
        IdentityRecord("delta-coefficients", "E2 = E1 = 1+a^2+b^2, E0 = ab+k+a^2k+b^2k",
                       "basefield", lambda: (_delta(C), E[0] * Y**2 + E[1] * Y + E[2])),
        IdentityRecord(
            "quartic-coefficients", "F4..F0 for a in the base field", "basefield",
            lambda: (_quartic(C), sum((f * Y**i for f, i in zip(Fc, (4, 3, 2, 1, 0))), ZERO)),
        ),
        IdentityRecord("resultant-top-vanishes", "top eliminant becomes 0 = 0",
                       "basefield", top_vanishes),
        IdentityRecord("resultant-bottom-locus", "bottom eliminant vanishes on (1+b)(1+a+b)(a^2+b+b^2)",
                       "basefield", bottom_on_locus),
        IdentityRecord(
            "resultant-bottom-factorization",
            "bottom eliminant = (1+a+b) * (1+b)^3 (1+a+b)(a^2+b+b^2)",
            "basefield", bottom_factorization,
        ),
        IdentityRecord("E2-square", "E2 = (1+a+b)^2", "basefield", lambda: (E[0], (1 + a + b) ** 2)),
        IdentityRecord("F4-over-E2-squared", "F4/E2^2 = 1 + 1/(1+a+b), cleared",
                       "basefield", lambda: (Fc[0] * (1 + a + b), E[0] ** 2 * (a + b))),
        IdentityRecord("delta-closed-form", "C1C2 + C0C3 = ab + (1+a^2+b^2)(Y^2+Y+k)",
                       "basefield", lambda: (_delta(C), basefield("delta_closed_form"))),
        IdentityRecord("companion-closed-form", "C2^2 + C1C3 = 1+b+ab + (1+a^2+b^2)(Y^2+Y+k)",
                       "basefield", lambda: (C2**2 + C1 * C3, basefield("companion_closed_form"))),
        IdentityRecord(
            "no-root-elimination", "a(bx^3+x+a) + b(ax^3+x^2+b) = bx^2+ax+a^2+b^2",
            "basefield",
            lambda: (a * (b * X**3 + X + a) + b * (a * X**3 + X**2 + b),
                     b * X**2 + a * X + a**2 + b**2),
        ),
        IdentityRecord(
            "no-root-artin-schreier", "(bx/a)^2 + bx/a + b(a^2+b^2)/a^2, cleared by a^2",
            "basefield",
            lambda: ((b * X) ** 2 + a * b * X + b * (a**2 + b**2),
                     b * (b * X**2 + a * X + a**2 + b**2)),
        ),
        IdentityRecord(
            "branch-ii-denominator", "1+a^2+b^2 = 1+b when a^2 = b(b+1)",
            "basefield", lambda: _divisibility((1 + a**2 + b**2) + (1 + b), a**2 + b + b**2),
        ),
        IdentityRecord(
            "branch-ii-square", "a^2/(1+b)^2 = b/(1+b) when a^2 = b(b+1), cleared",
            "basefield", lambda: _divisibility(a**2 * (1 + b) + b * (1 + b) ** 2, a**2 + b + b**2),
        ),
        IdentityRecord(
            "branch-ii-split", "ab/(1+b) = a + a/(1+b), cleared",
            "basefield", lambda: (a * b, a * (1 + b) + a),
        ),
    ]


def _appendix_records(consts: dict[str, MPoly]) -> list[IdentityRecord]:
    C = _general_C()
    E = _general_E()
    recs = []
    for i in (4, 3, 2, 1, 0):
        recs.append(IdentityRecord(
            f"F{i}-transcription", f"closed form of F{i} against the Y^{i} coefficient",
            "appendix", lambda i=i: (_quartic(C).coeff("Y", i), consts[f"F{i}"]),
        ))
    derived_F = tuple(_quartic(C).coeff("Y", i) for i in (4, 3, 2, 1, 0))

    def h_from(which):
        top, bottom = _resultants(E, derived_F)
        cube = general("C3_factor") ** 3
        if which == "h1":
            return top.exact_divide(a1**2 * cube)
        return bottom.exact_divide(cube)

    for name in ("h1", "h2"):
        recs.append(IdentityRecord(
            f"{name}-transcription", f"closed form of {name} against the exact eliminant quotient",
            "appendix", lambda name=name: (h_from(name), consts[name]),
        ))
    recs.append(IdentityRecord(
        "d1-d2-transcription", "closed forms of d1, d2 combine the eliminants to a k-free product",
        "appendix",
        lambda: (consts["d1"] * h_from("h1") + consts["d2"] * h_from("h2"), general("reduced_k_free")),
    ))
    return recs


def _printed_records() -> list[IdentityRecord]:
    coeffs = _quartic_coefficients_generic()
    return [
        IdentityRecord(
            "coefficient-Y3-as-printed", "E1 D2 + E2 D1 = F2 (typeset right-hand side)",
            "printed", lambda: (coeffs.get(3, ZERO), E1 * D2 + E2 * D1 + F2), expected=False,
        ),
        IdentityRecord(
            "eliminate-middle-as-printed", "E1 D1^2 + E1^2 D1^2 + E0F3 + E2F1 + E1F2 (typeset)",
            "printed",
            lambda: (E0 * _D2_SCALED + E1 * D1**2 + E1**2 * D1 + E2 * _D0_SCALED + E1 * F2,
                     E1 * D1**2 + E1**2 * D1**2 + E0 * F3 + E2 * F1 + E1 * F2),
            expected=False,
        ),
    ]


def build_records(consts: dict[str, MPoly] | None = None) -> list[IdentityRecord]:
    consts = consts if consts is not None else appendix_constants()
    return (_general_records(consts) + _basefield_records()
            + _appendix_records(consts) + _printed_records())


def _run(records):
    return [r.run() for r in records]


def verify_section3(consts: dict[str, MPoly] | None = None) -> list[IdentityRecord]:
    consts = consts if consts is not None else appendix_constants()
    return _run(_general_records(consts))


def verify_section4() -> list[IdentityRecord]:
    return _run(_basefield_records())


def verify_appendix(consts: dict[str, MPoly] | None = None) -> list[IdentityRecord]:
    consts = consts if consts is not None else appendix_constants()
    return _run(_appendix_records(consts))


def verify_printed() -> list[IdentityRecord]:
    return _run(_printed_records())


def _flip_one(p: MPoly) -> MPoly:
    """Toggle a monomial absent from p (or the constant term)."""
    extra = var("b") ** 63 * var("k") ** 63
    return p + extra


def verify_all(sections=SECTIONS, mutate: str | None = None,
               consts: dict[str, MPoly] | None = None) -> dict:
    """Run the requested sections; ``mutate`` names one record whose
    right-hand side gets a stray monomial (fault injection)."""
    records = [r for r in build_records(consts) if r.section in sections]
    if mutate is not None:
        targets = [r for r in records if f"{r.section}:{r.name}" == mutate or r.name == mutate]
        if len(targets) != 1:
            raise KeyError(f"mutation target {mutate!r} matches {len(targets)} records")
        target = targets[0]
        inner = target.build
        target.build = lambda inner=inner: (lambda lr: (lr[0], _flip_one(lr[1])))(inner())
    _run(records)
    return {
        "records": records,
        "all_ok": all(r.ok for r in records),
        "failures": [f"{r.section}:{r.name}" for r in records if not r.passed],
        "unexpected": [f"{r.section}:{r.name}" for r in records if not r.ok],
    }


# -- numeric shadow --------------------------------------------------------------

def _z_root(tower: Tower, kval: int) -> int:
    for w in tower.elements():
        if tower.mul(w, w) ^ w == kval:
            return w
    raise AssertionError("z^2 + z = k is always solvable in the quadratic extension")


def numeric_shadow(record: IdentityRecord, n: int, trials: int = 100,
                   seed: int = 0) -> bool:
    """Evaluate both sides at random base-field points (with z a root of
    z^2+z+k in GF(q^2)) and check they agree every time."""
    if record.lhs is None:
        record.run()
    tower = Tower(GF2n(n))
    names = sorted(record.lhs.variables() | record.rhs.variables())
    rng = random.Random(seed)
    for _ in range(trials):
        values = {nm: rng.randrange(tower.q) for nm in names}
        if "z" in values:
            values["z"] = _z_root(tower, values.setdefault("k", rng.randrange(tower.q)))
        if record.lhs.evaluate(tower, values) != record.rhs.evaluate(tower, values):
            return False
    return True
