"""Binary field arithmetic: GF(2^n), the quadratic tower GF(q^2), traces,
Artin-Schreier solving, the norm-one subgroup and the phi map.

Elements are plain ints.  In GF(2^n) bit i is the coefficient of t^i.  A
tower element u + v*z is packed as ``u | (v << n)``, so the base field sits
inside the tower as the integers below q.
"""

from __future__ import annotations

import re

__all__ = [
    "DomainError",
    "ReducibleModulusError",
    "GF2n",
    "Tower",
    "INFINITY",
    "clmul",
    "clmod",
    "find_factor",
    "default_modulus",
    "make_field",
    "make_tower",
    "format_elem",
    "parse_elem",
    "format_tower_elem",
    "parse_tower_elem",
]

MAX_N = 16
# Tower log tables are built while q^2 fits the same bound as the base field.
MAX_TOWER_TABLE_BITS = 16

INFINITY = None


class DomainError(ArithmeticError):
    """Operation undefined for its input (inverse of zero and friends)."""


class ReducibleModulusError(ValueError):
    def __init__(self, modulus: int, factor: int):
        self.modulus = modulus
        self.factor = factor
        super().__init__(
            f"modulus {modulus:#x} is reducible: divisible by {factor:#x}"
        )


# -- carry-less helpers on F2[t] ------------------------------------------

def clmul(x: int, y: int) -> int:
    r = 0
    while y:
        if y & 1:
            r ^= x
        x <<= 1
        y >>= 1
    return r


def clmod(x: int, m: int) -> int:
    dm = m.bit_length()
    while x.bit_length() >= dm:
        x ^= m << (x.bit_length() - dm)
    return x


def find_factor(poly: int) -> int | None:
    """Smallest nontrivial factor of a binary polynomial, or None if irreducible."""
    deg = poly.bit_length() - 1
    if deg < 1:
        raise ValueError("constant polynomials have no irreducibility")
    for cand in range(2, 1 << (deg // 2 + 1)):
        if clmod(poly, cand) == 0:
            return cand
    return None


def default_modulus(n: int) -> int:
    for m in range(1 << n, 1 << (n + 1)):
        if find_factor(m) is None:
            return m
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _build_log_tables(size: int, mul, candidates):
    """Exp/log tables for a field with ``size`` elements given a slow mul."""
    order = size - 1
    primes = _prime_factors(order) if order > 1 else []

    def slow_pow(x, e):
        r = 1
        while e:
            if e & 1:
                r = mul(r, x)
            x = mul(x, x)
            e >>= 1
        return r

    for g in candidates:
        if g == 0:
            continue
        if order == 1 or all(slow_pow(g, order // p) != 1 for p in primes):
            break
    else:
        raise AssertionError("no generator found")
    exp = [0] * (2 * order)
    log = [0] * size
    x = 1
    for i in range(order):
        exp[i] = x
        log[x] = i
        x = mul(x, g)
    exp[order:] = exp[:order]
    return g, exp, log


class GF2n:
    """The field F_{2^n} = F_2[t]/(modulus)."""

    def __init__(self, n: int, modulus: int | None = None):
        if not 1 <= n <= MAX_N:
            raise ValueError(f"n must satisfy 1 <= n <= {MAX_N}, got {n}")
        if modulus is None:
            modulus = default_modulus(n)
        if modulus.bit_length() - 1 != n:
            raise ValueError(f"modulus {modulus:#x} does not have degree {n}")
        factor = find_factor(modulus)
        if factor is not None:
            raise ReducibleModulusError(modulus, factor)
        self.n = n
        self.modulus = modulus
        self.q = 1 << n
        self.order = self.q - 1
        self.generator, self._exp, self._log = _build_log_tables(
            self.q, lambda x, y: clmod(clmul(x, y), modulus), range(2, self.q) if n > 1 else [1]
        )
        # Tr is F2-linear: Tr(x) = parity(x & mask), mask bit i = Tr(t^i).
        mask = 0
        for i in range(n):
            if self._trace_slow(1 << i):
                mask |= 1 << i
        self.trace_mask = mask
        self._as_pivots = self._build_artin_schreier()

    def __repr__(self):
        return f"GF2n(n={self.n}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, GF2n) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __reduce__(self):
        return (GF2n, (self.n, self.modulus))

    @property
    def size(self) -> int:
        return self.q

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    # -- arithmetic ---------------------------------------------------------

    zero = 0
    one = 1

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    sub = add

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise DomainError("inverse of zero")
        return self._exp[(self.order - self._log[x]) % self.order]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        if x == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[x] * e) % self.order]

    def pow_sqm(self, x: int, e: int) -> int:
        """Square-and-multiply power, independent of the log tables."""
        r = 1
        while e:
            if e & 1:
                r = self.mul_slow(r, x)
            x = self.mul_slow(x, x)
            e >>= 1
        return r

    def mul_slow(self, x: int, y: int) -> int:
        return clmod(clmul(x, y), self.modulus)

    def square(self, x: int) -> int:
        return self.mul(x, x)

    def sqrt(self, x: int) -> int:
        return self.pow(x, 1 << (self.n - 1))

    def log(self, x: int) -> int:
        if x == 0:
            raise DomainError("log of zero")
        return self._log[x]

    def exp(self, i: int) -> int:
        return self._exp[i % self.order]

    # -- trace and Artin-Schreier -------------------------------------------

    def _trace_slow(self, x: int) -> int:
        acc, y = 0, x
        for _ in range(self.n):
            acc ^= y
            y = self.mul_slow(y, y)
        assert acc in (0, 1)
        return acc

    def trace(self, x: int) -> int:
        return (x & self.trace_mask).bit_count() & 1

    def _build_artin_schreier(self):
        # Echelon form of the F2-linear map x -> x^2 + x, tracking preimages.
        pivots: dict[int, tuple[int, int]] = {}
        for i in range(self.n):
            img, pre = self.mul_slow(1 << i, 1 << i) ^ (1 << i), 1 << i
            while img:
                top = img.bit_length() - 1
                if top not in pivots:
                    pivots[top] = (img, pre)
                    break
                pimg, ppre = pivots[top]
                img ^= pimg
                pre ^= ppre
        assert len(pivots) == self.n - 1
        return pivots

    def solve_artin_schreier(self, c: int) -> tuple[int, int] | tuple[()]:
        """Both roots of x^2 + x = c (smaller first), or () when Tr(c) = 1."""
        x, r = 0, c
        while r:
            top = r.bit_length() - 1
            if top not in self._as_pivots:
                return ()
            pimg, ppre = self._as_pivots[top]
            r ^= pimg
            x ^= ppre
        return (x, x ^ 1) if x < x ^ 1 else (x ^ 1, x)


def make_field(n: int, modulus: int | None = None) -> GF2n:
    return GF2n(n, modulus)


class Tower:
    """F_{q^2} = F_q[z]/(z^2 + z + k) with Tr(k) = 1.

    Elements pack as ``u | (v << n)`` for u + v*z.
    """

    def __init__(self, base: GF2n, k: int | None = None):
        if k is None:
            k = next(c for c in base.elements() if base.trace(c) == 1)
        if base.trace(k) != 1:
            raise ValueError(f"tower constant k={k:#x} must have trace 1")
        self.base = base
        self.k = k
        self.n = base.n
        self.q = base.q
        self.size = self.q * self.q
        self.order = self.size - 1
        self._mask = self.q - 1
        self.z = self.q  # 0 + 1*z
        self._tables = 2 * self.n <= MAX_TOWER_TABLE_BITS
        if self._tables:
            self.generator, self._exp, self._log = _build_log_tables(
                self.size, self.mul_pair, range(2, self.size)
            )

    def __repr__(self):
        return f"Tower({self.base!r}, k={self.k:#x})"

    def __eq__(self, other):
        return isinstance(other, Tower) and (self.base, self.k) == (other.base, other.k)

    def __hash__(self):
        return hash((self.base, self.k))

    def __reduce__(self):
        return (Tower, (self.base, self.k))

    # -- packing ------------------------------------------------------------

    def make(self, u: int, v: int = 0) -> int:
        return u | (v << self.n)

    def parts(self, x: int) -> tuple[int, int]:
        return x & self._mask, x >> self.n

    def in_base(self, x: int) -> bool:
        return x < self.q

    def elements(self):
        return range(self.size)

    def nonzero(self):
        return range(1, self.size)

    # -- arithmetic ---------------------------------------------------------

    zero = 0
    one = 1

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    sub = add

    def mul_pair(self, x: int, y: int) -> int:
        """(u1 + v1 z)(u2 + v2 z) with z^2 = z + k, via base-field arithmetic."""
        F = self.base
        u1, v1 = self.parts(x)
        u2, v2 = self.parts(y)
        vv = F.mul(v1, v2)
        u = F.mul(u1, u2) ^ F.mul(self.k, vv)
        v = F.mul(u1, v2) ^ F.mul(u2, v1) ^ vv
        return self.make(u, v)

    def mul(self, x: int, y: int) -> int:
        if not self._tables:
            return self.mul_pair(x, y)
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def frobenius(self, x: int) -> int:
        """x^q; closed form (u+v) + v z since z^q = z + 1."""
        u, v = self.parts(x)
        return self.make(u ^ v, v)

    def norm(self, x: int) -> int:
        """x^{q+1} = u^2 + uv + k v^2, returned as a base-field element."""
        F = self.base
        u, v = self.parts(x)
        return F.mul(u, u) ^ F.mul(u, v) ^ F.mul(self.k, F.mul(v, v))

    def inv(self, x: int) -> int:
        if x == 0:
            raise DomainError("inverse of zero")
        if self._tables:
            return self._exp[(self.order - self._log[x]) % self.order]
        # x^{-1} = x^q / N(x)
        nrm_inv = self.base.inv(self.norm(x))
        return self.mul_pair(self.frobenius(x), nrm_inv)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        if x == 0:
            return 1 if e == 0 else 0
        if self._tables:
            return self._exp[(self._log[x] * e) % self.order]
        e %= self.order
        r = 1
        while e:
            if e & 1:
                r = self.mul_pair(r, x)
            x = self.mul_pair(x, x)
            e >>= 1
        return r

    def log(self, x: int) -> int:
        if not self._tables:
            raise NotImplementedError("tower log tables need 2n <= 16")
        if x == 0:
            raise DomainError("log of zero")
        return self._log[x]

    def exp(self, i: int) -> int:
        return self._exp[i % self.order]

    def trace_base(self, x: int) -> int:
        """Tr_{q/2} of an element that must lie in the base field."""
        if not self.in_base(x):
            raise ValueError("element is not in the base field")
        return self.base.trace(x)

    # -- the norm-one subgroup and phi --------------------------------------

    def mu_subgroup(self, method: str = "filter") -> list[int]:
        """All q+1 elements with norm 1, in increasing integer encoding."""
        if method == "filter":
            return [x for x in self.nonzero() if self.norm(x) == 1]
        if method == "generator":
            w = self.pow(self.generator if self._tables else self._find_generator(), self.q - 1)
            out, x = [], 1
            for _ in range(self.q + 1):
                out.append(x)
                x = self.mul(x, w)
            return sorted(out)
        raise ValueError(f"unknown method {method!r}")

    def _find_generator(self) -> int:
        primes = _prime_factors(self.order)
        for g in range(2, self.size):
            if all(self.pow(g, self.order // p) != 1 for p in primes):
                return g
        raise AssertionError("no generator")

    def phi(self, x: int | None) -> int:
        """phi(x) = (x + z + 1)/(x + z) for x in F_q; phi(infinity) = 1."""
        if x is INFINITY:
            return 1
        if not self.in_base(x):
            raise ValueError("phi is defined on the base field and infinity")
        num = x ^ 1 ^ self.z
        return self.div(num, x ^ self.z)


def make_tower(base: GF2n, k: int | None = None) -> Tower:
    return Tower(base, k)


# -- text formats -----------------------------------------------------------

_ELEM_RE = re.compile(r"^n:(\d+),mod:([0-9a-fA-F]+),val:([0-9a-fA-F]+)$")
_TOWER_RE = re.compile(r"^([0-9a-fA-F]+)\+([0-9a-fA-F]+)\*z$")


def format_elem(field: GF2n, x: int) -> str:
    return f"n:{field.n},mod:{field.modulus:x},val:{x:x}"


def parse_elem(text: str) -> tuple[GF2n, int]:
    m = _ELEM_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad element text {text!r}; expected n:<int>,mod:<hex>,val:<hex>")
    field = GF2n(int(m.group(1)), int(m.group(2), 16))
    val = int(m.group(3), 16)
    if val >= field.q:
        raise ValueError(f"value {val:#x} does not fit in {field!r}")
    return field, val


def format_tower_elem(tower: Tower, x: int) -> str:
    u, v = tower.parts(x)
    return f"{u:x}+{v:x}*z"


def parse_tower_elem(tower: Tower, text: str) -> int:
    """Accept ``<hex>+<hex>*z``, a bare hex base-field value, or the full
    ``n:..,mod:..,val:..`` base-field form."""
    text = text.strip()
    m = _TOWER_RE.match(text)
    if m:
        u, v = int(m.group(1), 16), int(m.group(2), 16)
    elif text.startswith("n:"):
        field, u = parse_elem(text)
        if field != tower.base:
            raise ValueError(f"element field {field!r} differs from {tower.base!r}")
        v = 0
    else:
        try:
            u, v = int(text, 16), 0
        except ValueError:
            raise ValueError(f"bad tower element text {text!r}") from None
    if u >= tower.q or v >= tower.q:
        raise ValueError(f"{text!r} does not fit in the tower over GF(2^{tower.n})")
    return tower.make(u, v)
