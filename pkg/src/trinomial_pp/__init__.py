"""Permutation trinomials X + aX^{q(q-1)+1} + bX^{2(q-1)+1} over GF(q^2), q even."""

__version__ = "0.1.0"

from .fields import GF2n, Tower, make_field, make_tower  # noqa: E402
from .poly1 import Poly1  # noqa: E402
from .trinomial import (  # noqa: E402
    Classification,
    TrinomialParams,
    Verdict,
    criterion_thm11,
    criterion_tzlh,
    is_pp_bruteforce,
    normalize_b,
)

__all__ = [
    "GF2n",
    "Tower",
    "make_field",
    "make_tower",
    "Poly1",
    "Classification",
    "TrinomialParams",
    "Verdict",
    "criterion_thm11",
    "criterion_tzlh",
    "is_pp_bruteforce",
    "normalize_b",
]
