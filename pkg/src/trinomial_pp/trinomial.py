"""The trinomial f(X) = X + a X^{q(q-1)+1} + b X^{2(q-1)+1} over GF(q^2), q even.

Permutation oracles and closed-form criteria, normalization of b, cubic
root counting, the plane curve attached to a outside the base field, and the
explicit factorization witness D for a inside it.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .fields import DomainError, GF2n, Tower
from .poly1 import Poly1
from .symf2.transcribed import basefield, general

__all__ = [
    "PreconditionError",
    "TraceObstruction",
    "InvariantViolation",
    "TrinomialParams",
    "Verdict",
    "Classification",
    "TZLHResult",
    "CurveInstance",
    "DWitness",
    "eval_f",
    "is_pp_bruteforce",
    "criterion_thm11",
    "criterion_tzlh",
    "normalize_b",
    "cubic_no_root_in_mu",
    "h_permutes_mu",
    "prop21_check",
    "prop21_counts",
    "cubic_root_count",
    "williams_predicate",
    "depressed_cubic_solve",
    "build_curve",
    "curve_point_count",
    "construct_D",
]


class PreconditionError(ValueError):
    pass


class TraceObstruction(ArithmeticError):
    """x^2 + x = c has no solution because Tr(c) = 1."""

    def __init__(self, message: str, trace_value: int):
        self.trace_value = trace_value
        super().__init__(message)


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class TrinomialParams:
    tower: Tower
    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError("a and b must be nonzero")
        if self.a >= self.tower.size or self.b >= self.tower.size:
            raise ValueError("a and b must be elements of GF(q^2)")

    @property
    def q(self) -> int:
        return self.tower.q

    @property
    def exponents(self) -> tuple[int, int]:
        q = self.tower.q
        return q * (q - 1) + 1, 2 * (q - 1) + 1


class Verdict(enum.Enum):
    NOT_PP = "NotPP"
    PP_BRANCH_I = "PP_branch_i"
    PP_BRANCH_II = "PP_branch_ii"

    @property
    def is_pp(self) -> bool:
        return self is not Verdict.NOT_PP


@dataclass
class Classification:
    verdict: Verdict
    b_in_base_field: bool
    traces: dict[str, int] = field(default_factory=dict)
    failed: str | None = None

    @property
    def is_pp(self) -> bool:
        return self.verdict.is_pp

    def __bool__(self):
        return self.is_pp


@dataclass
class TZLHResult:
    holds: bool
    norm_relation: bool
    b_norm_is_one: bool
    trace_value: int

    def __bool__(self):
        return self.holds


# -- f itself -------------------------------------------------------------------

def eval_f(params: TrinomialParams, x: int) -> int:
    T = params.tower
    if x == 0:
        return 0
    e1, e2 = params.exponents
    return x ^ T.mul(params.a, T.pow(x, e1)) ^ T.mul(params.b, T.pow(x, e2))


def is_pp_bruteforce(params: TrinomialParams) -> bool:
    """Evaluate f on all of GF(q^2) with an occupancy map; stop at the first
    collision."""
    T = params.tower
    seen = bytearray(T.size)
    seen[0] = 1  # f(0) = 0
    if T._tables:
        N = T.order
        exp = T._exp
        e1, e2 = params.exponents
        m1, m2 = e1 % N, e2 % N
        i1, i2 = T.log(params.a), T.log(params.b)
        for L in range(N):
            y = exp[L] ^ exp[i1] ^ exp[i2]
            if seen[y]:
                return False
            seen[y] = 1
            i1 += m1
            if i1 >= N:
                i1 -= N
            i2 += m2
            if i2 >= N:
                i2 -= N
        return True
    for x in T.nonzero():
        y = eval_f(params, x)
        if seen[y]:
            return False
        seen[y] = 1
    return True


# -- closed-form criteria ---------------------------------------------------------

def criterion_thm11(params: TrinomialParams) -> Classification:
    T, a, b = params.tower, params.a, params.b
    if not T.in_base(b):
        raise PreconditionError("b must lie in the base field; call normalize_b first")
    F = T.base
    traces: dict[str, int] = {}
    if b == 1:
        if not T.in_base(a):
            return Classification(Verdict.NOT_PP, True, traces, "a not in base field")
        t = F.trace(1 ^ F.inv(a))
        traces["Tr(1+1/a)"] = t
        if t:
            return Classification(Verdict.NOT_PP, True, traces, "Tr(1+1/a) = 1")
        return Classification(Verdict.PP_BRANCH_I, True, traces)
    t = F.trace(F.div(b, b ^ 1))
    traces["Tr(b/(b+1))"] = t
    if t:
        return Classification(Verdict.NOT_PP, True, traces, "Tr(b/(b+1)) = 1")
    if T.mul(a, a) != F.mul(b, b ^ 1):
        return Classification(Verdict.NOT_PP, True, traces, "a^2 != b(b+1)")
    return Classification(Verdict.PP_BRANCH_II, True, traces)


def criterion_tzlh(params: TrinomialParams) -> TZLHResult:
    """The pair of conditions stated through norms: a norm relation and a
    trace condition, valid for any nonzero b."""
    T, a, b = params.tower, params.a, params.b
    F = T.base
    na, nb = T.norm(a), T.norm(b)
    a2q = T.frobenius(T.mul(a, a))
    relation = T.mul(b, 1 ^ na ^ nb) ^ a2q == 0
    if nb == 1:
        t = F.trace(1 ^ F.inv(na))
    else:
        t = F.trace(F.div(nb, na))
    return TZLHResult(relation and t == 0, relation, nb == 1, t)


def normalize_b(params: TrinomialParams) -> TrinomialParams:
    """Substitute X -> beta X with beta^4 = b; the new b is beta^{2(q+1)}, in F_q."""
    T = params.tower
    q = T.q
    beta = T.pow(params.b, pow(4, -1, T.order))
    a_new = T.mul(params.a, T.pow(beta, 1 - q))
    b_new = T.pow(beta, 2 * (q + 1))
    assert T.in_base(b_new)
    return TrinomialParams(T, a_new, b_new)


# -- the norm-one subgroup and the reduction through phi -----------------------------

@lru_cache(maxsize=16)
def _mu(tower: Tower) -> tuple[int, ...]:
    return tuple(tower.mu_subgroup())


def cubic_no_root_in_mu(params: TrinomialParams) -> bool:
    T, a, b = params.tower, params.a, params.b
    for x in _mu(T):
        if T.mul(b, T.pow(x, 3)) ^ x ^ a == 0:
            return False
    return True


def _g(T: Tower, a_conj: int, b_num: int, b: int, a: int, x: int) -> int | None:
    x2 = T.mul(x, x)
    x3 = T.mul(x2, x)
    den = T.mul(b, x3) ^ x ^ a
    if den == 0:
        return None
    return T.div(T.mul(a_conj, x3) ^ x2 ^ b_num, den)


def h_permutes_mu(params: TrinomialParams) -> bool:
    """Does h(X) = X(1 + aX^q + bX^2)^{q-1} permute the norm-one subgroup?

    On that subgroup h(x) = (a^q x^3 + x^2 + b^q)/(b x^3 + x + a); b^q equals
    b once b is in the base field.
    """
    T, a, b = params.tower, params.a, params.b
    mu = _mu(T)
    a_conj, b_conj = T.frobenius(a), T.frobenius(b)
    image = set()
    for x in mu:
        y = _g(T, a_conj, b_conj, b, a, x)
        if y is None:
            return False
        image.add(y)
    return image == set(mu)


def prop21_counts(params: TrinomialParams) -> list[int] | None:
    """For each y in F_q, how many x in F_q solve
    g(phi(x)) = (1+a+b)^{q-1} phi(y).  None when bX^3+X+a has a root of norm one.

    b must already lie in the base field.
    """
    T, a, b = params.tower, params.a, params.b
    if not T.in_base(b):
        raise PreconditionError("b must lie in the base field; call normalize_b first")
    if not cubic_no_root_in_mu(params):
        return None
    a_conj = T.frobenius(a)
    scale = T.pow(1 ^ a ^ b, T.q - 1)
    values = Counter(_g(T, a_conj, b, b, a, T.phi(x)) for x in T.base.elements())
    return [values[T.mul(scale, T.phi(y))] for y in T.base.elements()]


def prop21_check(params: TrinomialParams) -> bool:
    """Permutation test through phi: the cubic has no root of norm one and
    every y in F_q has exactly one preimage.  b outside the base field is
    normalized first."""
    if not params.tower.in_base(params.b):
        params = normalize_b(params)
    counts = prop21_counts(params)
    return counts is not None and all(c == 1 for c in counts)


# -- cubics ------------------------------------------------------------------------

def cubic_root_count(field: GF2n, alpha: int, beta: int) -> int:
    """Number of roots of X^3 + alpha X + beta in the field (0, 1 or 3)."""
    if beta == 0:
        raise DomainError("beta must be nonzero")
    return Poly1(field, [beta, alpha, 0, 1]).root_count_in_field()


def williams_predicate(field: GF2n, alpha: int, beta: int) -> int:
    """Tr(1 + alpha^3 / beta^2); equals 1 exactly when the cubic has one root."""
    if beta == 0:
        raise DomainError("beta must be nonzero")
    return field.trace(1 ^ field.div(field.pow(alpha, 3), field.mul(beta, beta)))


def _multiplicity(p: Poly1, root: int) -> int:
    lin = Poly1(p.field, [root, 1])
    m = 0
    while not p.is_zero():
        quot, rem = divmod(p, lin)
        if not rem.is_zero():
            break
        p, m = quot, m + 1
    return m


def depressed_cubic_solve(field: GF2n, c3: int, c2: int, c1: int, c0: int) -> list[int]:
    """Roots in F_q (with multiplicity, sorted) of c3 x^3 + c2 x^2 + c1 x + c0,
    found through the shift x = x' + c2/c3."""
    if c3 == 0:
        raise DomainError("leading coefficient must be nonzero")
    F = field
    shift = F.div(c2, c3)
    c3sq = F.mul(c3, c3)
    lin = F.div(F.mul(c2, c2) ^ F.mul(c1, c3), c3sq)
    const = F.div(F.mul(c1, c2) ^ F.mul(c0, c3), c3sq)
    dep = Poly1(F, [const, lin, 0, 1])
    split = dep.gcd(Poly1(F, [0, 1]).powmod(F.size, dep) + Poly1(F, [0, 1]))
    if split.degree <= 0:
        distinct = []
    elif split.degree == 1:
        distinct = [split.coeff(0)]
    elif split.degree == 2:
        # x^2 + s x + t with s != 0 (squarefree): x = s w, w^2 + w = t/s^2
        s, t = split.coeff(1), split.coeff(0)
        w = F.solve_artin_schreier(F.div(t, F.mul(s, s)))
        distinct = [F.mul(s, wi) for wi in w]
    else:
        distinct = split.roots()
    roots = []
    for r in distinct:
        roots += [r ^ shift] * _multiplicity(dep, r)
    return sorted(roots)


# -- the curve for a outside the base field ---------------------------------------------

@lru_cache(maxsize=None)
def _y_coefficients(table: str, name: str):
    poly = (general if table == "general" else basefield)(name)
    return tuple(sorted(poly.coefficients("Y").items()))


def _eval_in_y(field: GF2n, table: str, name: str, values: dict[str, int]) -> Poly1:
    coeffs = {e: c.evaluate(field, values) for e, c in _y_coefficients(table, name)}
    top = max(coeffs, default=-1)
    return Poly1(field, [coeffs.get(i, 0) for i in range(top + 1)], var="Y")


def _c_polys(field: GF2n, table: str, values: dict[str, int]) -> tuple[Poly1, ...]:
    return tuple(_eval_in_y(field, table, n, values) for n in ("C3", "C2", "C1", "C0"))


@dataclass
class CurveInstance:
    field: GF2n
    a1: int
    b: int
    k: int
    C: tuple[Poly1, Poly1, Poly1, Poly1]
    P: Poly1
    Q: Poly1

    def __call__(self, x: int, y: int) -> int:
        F = self.field
        return F.mul(self.Q(y), F.mul(x, x) ^ x ^ self.k ^ 1) ^ self.P(y)


def build_curve(field: GF2n, a1: int, b: int, k: int) -> CurveInstance:
    """Q(Y)(X^2+X+k+1) + P(Y) with P/Q the reduced form of
    (C1^2+C0C2)(C2^2+C1C3) / (C1C2+C0C3)^2."""
    if field.trace(k) != 1:
        raise PreconditionError("k must have trace 1")
    C3, C2, C1, C0 = C = _c_polys(field, "general", {"a1": a1, "b": b, "k": k})
    if C3.is_zero():
        raise InvariantViolation("C3 vanished although Tr(k) = 1")
    num = (C1 * C1 + C0 * C2) * (C2 * C2 + C1 * C3)
    delta = C1 * C2 + C0 * C3
    if delta.is_zero():
        raise DomainError("C1C2 + C0C3 vanishes identically; the fraction is undefined")
    den = delta * delta
    g = num.gcd(den)
    P, Q = num // g, den // g
    lead_inv = field.inv(Q.lead())
    P, Q = P.scale(lead_inv), Q.scale(lead_inv)
    return CurveInstance(field, a1, b, k, C, P, Q)


def curve_point_count(curve: CurveInstance) -> int:
    """Affine F_q-points of the curve, by double loop.  Every point found has
    Q(y) != 0, so dF/dX = Q(y) is nonzero there and the point is smooth."""
    F = curve.field
    count = 0
    for y in F.elements():
        qy, py = curve.Q(y), curve.P(y)
        for x in F.elements():
            if F.mul(qy, F.mul(x, x) ^ x ^ curve.k ^ 1) ^ py == 0:
                if qy == 0:
                    raise InvariantViolation(f"point ({x:#x}, {y:#x}) with Q(y) = 0")
                count += 1
    return count


# -- the factorization witness for a inside the base field ------------------------------------

@dataclass
class DWitness:
    D2: int
    D1: int
    D0: int
    checks: dict[str, bool]


def _scalar(field: GF2n, name: str, values: dict[str, int]) -> int:
    return basefield(name).evaluate(field, values)


def construct_D(field: GF2n, a: int, b: int, k: int) -> DWitness:
    """Coefficients D2, D1, D0 with D(D + C1C2 + C0C3) = (k+1)(C1C2+C0C3)^2 +
    (C1^2+C0C2)(C2^2+C1C3), for a, b in F_q.

    Raises TraceObstruction when the quadratic for D1 has no F_q root.
    """
    F = field
    if field.trace(k) != 1:
        raise PreconditionError("k must have trace 1")
    vals = {"a": a, "b": b, "k": k}
    E2, E1, E0 = (_scalar(F, n, vals) for n in ("E2", "E1", "E0"))
    F4, F3, F2, F1, F0 = (_scalar(F, f"F{i}", vals) for i in (4, 3, 2, 1, 0))
    if E1 == 0 or E2 == 0:
        raise DomainError("1 + a + b = 0: E1 = E2 = 0")
    e12 = F.mul(E1, E2)
    # E2^2 D1^2 + E1 E2^2 D1 = F3^2 + E1E2F3 + E1^2F4; put w = D1/E1
    rhs = F.mul(F3, F3) ^ F.mul(e12, F3) ^ F.mul(F.mul(E1, E1), F4)
    c = F.div(rhs, F.mul(e12, e12))
    sols = F.solve_artin_schreier(c)
    if not sols:
        t = F.trace(F.div(F4, F.mul(E2, E2)))
        raise TraceObstruction(
            f"no D1 in F_q: Tr(F4/E2^2) = {t} for a={a:#x}, b={b:#x}", t)
    D1 = F.mul(E1, sols[0])
    D2 = F.div(F.mul(E2, D1) ^ F3, E1)
    D0 = F.div(F.mul(E0, D1) ^ F1, E1)

    checks = {
        "Y4": F.mul(D2, D2) ^ F.mul(E2, D2) == F4,
        "Y3": F.mul(E1, D2) ^ F.mul(E2, D1) == F3,
        "Y2": F.mul(E0, D2) ^ F.mul(D1, D1) ^ F.mul(E1, D1) ^ F.mul(E2, D0) == F2,
        "Y1": F.mul(E0, D1) ^ F.mul(E1, D0) == F1,
        "Y0": F.mul(D0, D0) ^ F.mul(E0, D0) == F0,
    }
    C3, C2, C1, C0 = _c_polys(F, "basefield", vals)
    Dpoly = Poly1(F, [D0, D1, D2], var="Y")
    delta = C1 * C2 + C0 * C3
    rhs_poly = (delta * delta).scale(k ^ 1) + (C1 * C1 + C0 * C2) * (C2 * C2 + C1 * C3)
    lhs_poly = Dpoly * (Dpoly + delta)
    checks["factorization"] = all(lhs_poly(y) == rhs_poly(y) for y in F.elements())
    if not all(checks.values()):
        bad = [name for name, ok in checks.items() if not ok]
        raise InvariantViolation(f"D witness fails {bad} for a={a:#x}, b={b:#x}")
    return DWitness(D2, D1, D0, checks)
