"""Dense univariate polynomials over a GF2n or Tower field.

Coefficients are stored low degree first with trailing zeros trimmed; the
zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from .fields import DomainError

__all__ = ["Poly1"]


class Poly1:
    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs=(), var: str = "X"):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def constant(cls, field, c: int, var: str = "X") -> "Poly1":
        return cls(field, [c], var)

    @classmethod
    def x(cls, field, var: str = "X") -> "Poly1":
        return cls(field, [0, 1], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Poly1):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c:
                mon = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
                if c == 1 and mon:
                    terms.append(mon)
                else:
                    terms.append(f"{c:#x}{'*' + mon if mon else ''}")
        return " + ".join(terms)

    def _wrap(self, coeffs) -> "Poly1":
        return Poly1(self.field, coeffs, self.var)

    def _lift(self, other) -> "Poly1":
        if isinstance(other, Poly1):
            return other
        return self._wrap([other])

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return self._wrap(out)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return self._wrap([])
        mul = self.field.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] ^= mul(a, b)
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = self._wrap([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "Poly1":
        mul = self.field.mul
        return self._wrap([mul(c, a) for a in self.coeffs])

    def monic(self) -> "Poly1":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lead()))

    def __divmod__(self, other: "Poly1"):
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        inv_lead = F.inv(other.lead())
        quot = [0] * max(len(rem) - dlen + 1, 0)
        for i in range(len(rem) - dlen, -1, -1):
            c = rem[i + dlen - 1]
            if c:
                c = F.mul(c, inv_lead)
                quot[i] = c
                for j, d in enumerate(other.coeffs):
                    if d:
                        rem[i + j] ^= F.mul(c, d)
        return self._wrap(quot), self._wrap(rem[: dlen - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other: "Poly1") -> "Poly1":
        """Monic gcd; gcd(0, 0) = 0."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, x: int) -> int:
        mul = self.field.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = mul(acc, x) ^ c
        return acc

    def derivative(self) -> "Poly1":
        # char 2: only odd-degree terms survive
        return self._wrap([c if i % 2 == 1 else 0 for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, e: int, modulus: "Poly1") -> "Poly1":
        result, base = self._wrap([1]) % modulus, self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def frobenius_x_mod(self, size: int) -> "Poly1":
        """X^size mod self, by repeated squaring of X."""
        r = self.x(self.field, self.var) % self
        s = 1
        while s < size:
            r = (r * r) % self
            s <<= 1
        return r

    def root_count_in_field(self) -> int:
        """Number of distinct roots in the coefficient field: deg gcd(X^Q - X, p)."""
        if self.is_zero():
            raise DomainError("the zero polynomial vanishes everywhere")
        if self.degree == 0:
            return 0
        xq = self.frobenius_x_mod(self.field.size)
        return self.gcd(xq + self.x(self.field, self.var)).degree

    def roots(self) -> list[int]:
        """Distinct roots in the field, by enumeration."""
        return [x for x in self.field.elements() if self(x) == 0]
