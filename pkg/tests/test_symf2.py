import time

import pytest
from hypothesis import given, settings, strategies as st

from trinomial_pp.fields import GF2n
from trinomial_pp.symf2.identities import (
    SECTIONS,
    basefield_resultant_factorization,
    build_records,
    numeric_shadow,
    verify_all,
    verify_appendix,
    verify_printed,
    verify_section3,
    verify_section4,
)
from trinomial_pp.symf2.mpoly import (
    ONE,
    ZERO,
    DegreeOverflowError,
    InexactDivisionError,
    MPoly,
    mono,
    parse,
    var,
)
from trinomial_pp.symf2.transcribed import appendix_constants

a1, b, k, z, Y = (var(n) for n in ("a1", "b", "k", "z", "Y"))

# -- random expressions ------------------------------------------------------------------

NAMES = ("a1", "b", "k", "z", "Y")


@st.composite
def mpolys(draw, max_terms=6, max_exp=4):
    terms = draw(st.lists(
        st.fixed_dictionaries({n: st.integers(0, max_exp) for n in NAMES}),
        max_size=max_terms))
    return MPoly(frozenset(mono(**t) for t in terms)) if terms else ZERO


@given(mpolys(), mpolys(), mpolys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p * ONE == p and p + ZERO == p


@given(mpolys(), mpolys())
def test_characteristic_two(p, q):
    assert p + p == ZERO
    assert (p + q) ** 2 == p ** 2 + q ** 2
    assert p.square() == p * p


@given(mpolys(), mpolys())
def test_reduce_z_idempotent_homomorphism(p, q):
    rp, rq = p.reduce_z(), q.reduce_z()
    assert rp.reduce_z() == rp
    assert rp.degree("z") <= 1
    assert (p + q).reduce_z() == rp + rq
    assert (p * q).reduce_z() == (rp * rq).reduce_z()


def test_reduce_z_defining_relation():
    assert (z ** 2).reduce_z() == z + k
    assert (z ** 3).reduce_z() == (z * (z + k)).reduce_z()


@settings(deadline=None)
@given(mpolys(), mpolys(max_terms=3))
def test_exact_divide_inverts_multiplication(p, d):
    if not d:
        return
    assert (p * d).exact_divide(d) == p


def test_inexact_division_reports_remainder():
    with pytest.raises(InexactDivisionError) as exc:
        (a1 ** 2 + b).exact_divide(a1 + 1)
    assert exc.value.remainder


def test_degree_overflow_guard():
    with pytest.raises(DegreeOverflowError):
        (a1 ** 40) * (a1 ** 30)


def test_substitute_and_evaluate():
    p = a1 * b + k
    assert p.substitute("a1", b + 1) == b * b + b + k
    F = GF2n(4)
    assert p.evaluate(F, {"a1": 3, "b": 5, "k": 7}) == F.mul(3, 5) ^ 7


def test_parser_tex_conventions():
    assert parse("a_1^2b+b^{3}") == a1 ** 2 * b + b ** 3
    assert parse(r"(1+b)^2 \cr & +k\,Y \nonumber") == (1 + b) ** 2 + k * Y
    assert parse("2a_1") == ZERO                     # even integer coefficients vanish


# -- transcribed constants ------------------------------------------------------------------

APPENDIX_COUNTS = {"F4": 25, "F3": 33, "F2": 36, "F1": 58, "F0": 68,
                   "h1": 16, "h2": 35, "d1": 73, "d2": 40}


def test_appendix_monomial_counts_locked():
    consts = appendix_constants()
    assert {n: len(p) for n, p in consts.items()} == APPENDIX_COUNTS


def test_appendix_spot_checks():
    consts = appendix_constants()
    assert mono(a1=2, b=1) in consts["h1"].terms
    assert consts["d2"].degree("k") == 2


# -- identity suite ---------------------------------------------------------------------------

def test_sections_all_pass():
    t0 = time.perf_counter()
    for recs in (verify_section3(), verify_section4(), verify_appendix()):
        assert recs
        for r in recs:
            assert r.passed, (r.section, r.name, len(r.diff))
    assert time.perf_counter() - t0 < 30


def test_basefield_section_has_closed_form_records():
    names = {r.name for r in verify_section4()}
    assert {"E2-square", "F4-over-E2-squared", "delta-closed-form", "companion-closed-form"} <= names


def test_printed_forms_fail_and_corrections_pass():
    printed = {r.name: r for r in verify_printed()}
    assert set(printed) == {"coefficient-Y3-as-printed", "eliminate-middle-as-printed"}
    for r in printed.values():
        assert not r.passed and r.ok and len(r.diff) > 0
    corrected = {r.name: r for r in verify_section3()}
    assert corrected["coefficient-Y3"].passed
    assert corrected["eliminate-middle"].passed


def test_verify_all_summary():
    res = verify_all()
    assert res["all_ok"]
    assert res["unexpected"] == []
    assert sorted(res["failures"]) == ["printed:coefficient-Y3-as-printed",
                                       "printed:eliminate-middle-as-printed"]


def test_h1_mutation_breaks_top_eliminant():
    consts = appendix_constants()
    h1 = consts["h1"]
    consts["h1"] = MPoly(h1.terms - {min(h1.terms)})
    recs = {r.name: r for r in verify_section3(consts)}
    top = recs["top-eliminant-h1"]
    assert not top.passed and len(top.diff) > 0


@pytest.mark.parametrize("target", ["general:trace-reduction", "basefield:delta-closed-form",
                                    "appendix:F2-transcription"])
def test_seeded_mutation_fails_exactly_that_record(target):
    res = verify_all(mutate=target)
    assert res["unexpected"] == [target]


def test_mutation_target_must_exist():
    with pytest.raises(KeyError):
        verify_all(mutate="no-such-record")


def test_basefield_bottom_eliminant_factorization():
    assert basefield_resultant_factorization() == {
        "1+b": 3, "1+a+b": 2, "a^2+b+b^2": 1, "cofactor": "1"}


def test_records_report_anchor_and_section():
    for r in build_records():
        r.run()
        j = r.to_json()
        assert j["section"] in SECTIONS and j["anchor"]
        assert j["diff_monomial_count"] == len(r.diff)


PASSING = [r for r in build_records() if r.expected]


@pytest.mark.parametrize("record", PASSING, ids=lambda r: f"{r.section}:{r.name}")
def test_numeric_shadow(record):
    for n in (3, 4):
        assert numeric_shadow(record, n, trials=100, seed=n)


def test_numeric_shadow_detects_printed_typos():
    for r in verify_printed():
        assert not numeric_shadow(r, 4, trials=100)
