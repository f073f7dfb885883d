import pytest
from hypothesis import given, settings, strategies as st

from trinomial_pp.fields import (
    DomainError,
    GF2n,
    ReducibleModulusError,
    Tower,
    clmul,
    find_factor,
    format_elem,
    format_tower_elem,
    make_field,
    make_tower,
    parse_elem,
    parse_tower_elem,
)

F4 = GF2n(2)
F8 = GF2n(3)
W = 0b10          # omega = t in F4 = F2[t]/(t^2+t+1)
W2 = 0b11         # omega^2 = omega + 1


# -- construction -----------------------------------------------------------------

def test_default_moduli():
    assert make_field(2).modulus == 0b111
    assert make_field(3).modulus == 0b1011
    assert make_field(4).modulus == 0b10011
    assert make_field(8).modulus == 0x11B


def test_reducible_modulus_rejected_with_factor():
    with pytest.raises(ReducibleModulusError) as exc:
        GF2n(4, 0b10101)               # t^4+t^2+1 = (t^2+t+1)^2
    assert exc.value.factor == 0b111
    assert clmul(exc.value.factor, exc.value.factor) == 0b10101


def test_modulus_degree_must_match():
    with pytest.raises(ValueError):
        GF2n(3, 0b111)


@pytest.mark.parametrize("n", range(1, 9))
def test_default_modulus_irreducible(n):
    F = GF2n(n)
    assert find_factor(F.modulus) is None
    assert F.q == 2**n and F.order == 2**n - 1


# -- small examples ------------------------------------------------------------------

def test_f4_examples():
    assert F4.mul(W, W2) == 1
    assert F4.inv(W) == W2
    assert F4.trace(W) == 1
    assert F4.trace(0) == 0


def test_f8_examples():
    g = 0b10
    assert F8.mul(g, g) == 0b100
    assert F8.pow(g, 3) == 0b11        # t^3 = t + 1
    assert F8.trace(g) == 0


def test_artin_schreier_examples():
    assert set(F4.solve_artin_schreier(1)) == {W, W2}
    assert F4.solve_artin_schreier(W) == ()
    for n in range(1, 9):
        assert GF2n(n).solve_artin_schreier(0) == (0, 1)


def test_inverse_of_zero_raises():
    with pytest.raises(DomainError):
        F8.inv(0)
    with pytest.raises(DomainError):
        F8.div(1, 0)


# -- field axioms -----------------------------------------------------------------------

FIELDS = [GF2n(n) for n in range(1, 9)] + [GF2n(8, 0x11D), GF2n(6, 0b1100001)]


@st.composite
def field_and_elems(draw, count=3):
    F = draw(st.sampled_from(FIELDS))
    xs = [draw(st.integers(0, F.q - 1)) for _ in range(count)]
    return (F, *xs)


@given(field_and_elems())
def test_ring_axioms(t):
    F, x, y, w = t
    assert F.mul(x, y) == F.mul(y, x)
    assert F.mul(F.mul(x, y), w) == F.mul(x, F.mul(y, w))
    assert F.mul(x, y ^ w) == F.mul(x, y) ^ F.mul(x, w)
    assert F.mul(x, 1) == x
    assert F.add(x, x) == 0


@given(field_and_elems(2))
def test_table_mul_matches_shift_and_add(t):
    F, x, y = t
    assert F.mul(x, y) == F.mul_slow(x, y)


@given(field_and_elems(1), st.integers(-600, 600))
def test_pow_matches_square_and_multiply(t, e):
    F, x = t
    if x == 0 and e <= 0:
        return
    if e >= 0:
        assert F.pow(x, e) == F.pow_sqm(x, e)
    else:
        assert F.pow(x, e) == F.inv(F.pow_sqm(x, -e))


@given(field_and_elems(1))
def test_inverse_and_sqrt(t):
    F, x = t
    assert F.square(F.sqrt(x)) == x
    if x:
        assert F.mul(x, F.inv(x)) == 1
        assert F.exp(F.log(x)) == x


# -- trace laws ----------------------------------------------------------------------------

@given(field_and_elems(2))
def test_trace_linear_and_frobenius_invariant(t):
    F, x, y = t
    assert F.trace(x ^ y) == F.trace(x) ^ F.trace(y)
    assert F.trace(F.square(x)) == F.trace(x)
    assert F.trace(x) == F._trace_slow(x)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_trace_kernel_is_half(F):
    assert sum(1 for x in F.elements() if F.trace(x) == 0) == F.q // 2


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_artin_schreier_solvable_iff_trace_zero(F):
    for c in F.elements():
        sols = F.solve_artin_schreier(c)
        if F.trace(c):
            assert sols == ()
        else:
            assert len(sols) == 2 and sols[0] ^ sols[1] == 1
            for x in sols:
                assert F.square(x) ^ x == c


# -- tower ---------------------------------------------------------------------------------

def test_tower_k_choice():
    for n in (1, 3, 5, 7):
        assert make_tower(GF2n(n)).k == 1
    assert make_tower(F4).k == W


def test_tower_rejects_k_with_trace_zero():
    with pytest.raises(ValueError):
        Tower(F4, 1)


TOWERS = [Tower(GF2n(n)) for n in range(1, 7)] + [Tower(GF2n(3), 0b111)]


@st.composite
def tower_and_elems(draw, count=2):
    T = draw(st.sampled_from(TOWERS))
    return (T, *(draw(st.integers(0, T.size - 1)) for _ in range(count)))


@given(tower_and_elems())
def test_tower_frobenius_closed_form(t):
    T, x, _ = t
    u, v = T.parts(x)
    assert T.frobenius(x) == T.make(u ^ v, v)
    assert T.pow(x, T.q) == T.frobenius(x)


@given(tower_and_elems())
def test_tower_norm_in_base_and_multiplicative(t):
    T, x, y = t
    F = T.base
    u, v = T.parts(x)
    nx = T.norm(x)
    assert T.in_base(nx)
    assert nx == F.mul(u, u) ^ F.mul(u, v) ^ F.mul(T.k, F.mul(v, v))
    assert nx == T.pow(x, T.q + 1)
    assert T.norm(T.mul(x, y)) == F.mul(nx, T.norm(y))


@given(tower_and_elems())
def test_tower_mul_matches_pair_arithmetic(t):
    T, x, y = t
    assert T.mul(x, y) == T.mul_pair(x, y)
    if x:
        assert T.mul(x, T.inv(x)) == 1


def test_z_satisfies_defining_relation():
    for T in TOWERS:
        assert T.mul(T.z, T.z) ^ T.z == T.k
        assert T.pow(T.z, T.q) == T.z ^ 1


@pytest.mark.parametrize("T", TOWERS, ids=repr)
def test_mu_subgroup_methods_agree(T):
    mu = T.mu_subgroup("filter")
    assert len(mu) == T.q + 1 and 1 in mu
    assert mu == T.mu_subgroup("generator")


def test_mu5_is_cube_powers_of_generator():
    T = Tower(F4)
    g = T._find_generator()
    assert sorted(T.pow(g, 3 * i) for i in range(5)) == T.mu_subgroup()


@pytest.mark.parametrize("T", TOWERS, ids=repr)
def test_phi_maps_projective_line_onto_mu(T):
    assert T.phi(None) == 1
    images = [T.phi(x) for x in T.base.elements()] + [T.phi(None)]
    assert sorted(images) == T.mu_subgroup()
    assert all(T.norm(w) == 1 for w in images)


# -- text formats ----------------------------------------------------------------------------

def test_elem_roundtrip():
    F = GF2n(8)
    for x in (0, 1, 0x53, 0xFF):
        G, y = parse_elem(format_elem(F, x))
        assert G == F and y == x


def test_tower_elem_roundtrip():
    T = Tower(GF2n(3))
    for x in T.elements():
        assert parse_tower_elem(T, format_tower_elem(T, x)) == x
    assert parse_tower_elem(T, "5") == 5
    with pytest.raises(ValueError):
        parse_tower_elem(T, "10")      # outside F_8
    with pytest.raises(ValueError):
        parse_tower_elem(T, "zz")


@settings(max_examples=30)
@given(st.sampled_from(FIELDS))
def test_fields_pickle(F):
    import pickle
    assert pickle.loads(pickle.dumps(F)) == F
