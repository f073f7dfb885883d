"""Sparse multivariate polynomials over F_2.

A polynomial is a frozenset of monomials; a monomial is an exponent vector
packed into one int, 8 bits per variable, with the first variable of
``VARS`` in the most significant slot.  Integer comparison of packed
monomials is therefore lex order, monomial multiplication is integer
addition, and addition of polynomials is symmetric difference.
"""

from __future__ import annotations

import re
from functools import reduce

__all__ = [
    "VARS",
    "MPoly",
    "InexactDivisionError",
    "DegreeOverflowError",
    "parse",
    "var",
    "ZERO",
    "ONE",
]

VARS = (
    "a1", "a", "b", "k", "z", "Y", "X",
    "c3", "c2", "c1", "c0",
    "D2", "D1", "D0",
    "E2", "E1", "E0",
    "F4", "F3", "F2", "F1", "F0",
    "D", "N", "S",
)
_INDEX = {name: i for i, name in enumerate(VARS)}
_NV = len(VARS)
_W = 8
_SLOT = (1 << _W) - 1
# exponents must stay below 64: bits 6 and 7 of every slot are overflow flags
_OVF = sum(0xC0 << (_W * i) for i in range(_NV))
# bit 7 of every slot, used for the borrow-free divisibility test
_HIGH = sum(0x80 << (_W * i) for i in range(_NV))
MAX_DEGREE = 63


class InexactDivisionError(ArithmeticError):
    def __init__(self, remainder: "MPoly"):
        self.remainder = remainder
        super().__init__(f"division leaves a remainder with {len(remainder)} monomials")


class DegreeOverflowError(OverflowError):
    pass


def _shift(name: str) -> int:
    return _W * (_NV - 1 - _INDEX[name])


def mono(**exps: int) -> int:
    m = 0
    for name, e in exps.items():
        if not 0 <= e <= MAX_DEGREE:
            raise DegreeOverflowError(f"{name}^{e}")
        m += e << _shift(name)
    return m


def mono_exps(m: int) -> dict[str, int]:
    out = {}
    for i, name in enumerate(VARS):
        e = (m >> (_W * (_NV - 1 - i))) & _SLOT
        if e:
            out[name] = e
    return out


def _check(terms):
    for m in terms:
        if m & _OVF:
            raise DegreeOverflowError("an exponent reached 64")
    return terms


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = terms if isinstance(terms, frozenset) else frozenset(terms)

    # -- construction -------------------------------------------------------

    @staticmethod
    def var(name: str) -> "MPoly":
        if name not in _INDEX:
            raise KeyError(f"unknown variable {name!r}")
        return MPoly(frozenset([1 << _shift(name)]))

    @staticmethod
    def const(c: int) -> "MPoly":
        return ONE if c & 1 else ZERO

    # -- basic protocol -----------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if isinstance(other, MPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            exps = mono_exps(m)
            if not exps:
                parts.append("1")
            else:
                parts.append("*".join(n if e == 1 else f"{n}^{e}" for n, e in exps.items()))
        return " + ".join(parts)

    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(other)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return MPoly(self.terms ^ other.terms)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        small, big = sorted((self.terms, other.terms), key=len)
        if not small:
            return ZERO
        acc: set[int] = set()
        for t in small:
            acc.symmetric_difference_update({t + u for u in big})
        return MPoly(frozenset(_check(acc)))

    __rmul__ = __mul__

    def square(self) -> "MPoly":
        # Frobenius: cross terms cancel in characteristic 2
        return MPoly(frozenset(_check({m << 1 for m in self.terms})))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    # -- structure ----------------------------------------------------------

    def degree(self, name: str | None = None) -> int:
        """Degree in one variable, or total degree; -1 for zero."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(mono_exps(m).values()) for m in self.terms)
        s = _shift(name)
        return max((m >> s) & _SLOT for m in self.terms)

    def variables(self) -> set[str]:
        found = 0
        for m in self.terms:
            found |= m
        return {n for n in VARS if (found >> _shift(n)) & _SLOT}

    def coefficients(self, name: str) -> dict[int, "MPoly"]:
        """Split as sum_i coeff_i * name^i."""
        s = _shift(name)
        buckets: dict[int, set[int]] = {}
        for m in self.terms:
            e = (m >> s) & _SLOT
            buckets.setdefault(e, set()).add(m - (e << s))
        return {e: MPoly(frozenset(t)) for e, t in sorted(buckets.items())}

    def coeff(self, name: str, e: int) -> "MPoly":
        return self.coefficients(name).get(e, ZERO)

    def leading(self) -> int:
        return max(self.terms)

    def monomials(self) -> list[dict[str, int]]:
        return [mono_exps(m) for m in sorted(self.terms, reverse=True)]

    # -- substitution and reduction -----------------------------------------

    def substitute(self, name: str, value: "MPoly") -> "MPoly":
        powers = [ONE]
        out = ZERO
        for e, c in self.coefficients(name).items():
            while len(powers) <= e:
                powers.append(powers[-1] * value)
            out = out + c * powers[e]
        return out

    def substitute_many(self, mapping: dict[str, "MPoly"]) -> "MPoly":
        out = self
        for name, value in mapping.items():
            out = out.substitute(name, value)
        return out

    def reduce_z(self) -> "MPoly":
        """Canonical form modulo z^2 + z + k (z-degree at most 1)."""
        parts = self.coefficients("z")
        if not parts or max(parts) <= 1:
            return self
        z, k = MPoly.var("z"), MPoly.var("k")
        # z^e = alpha_e z + beta_e; (alpha z + beta) z = (alpha + beta) z + alpha k
        alpha, beta = ZERO, ONE
        table = []
        for e in range(max(parts) + 1):
            table.append((alpha, beta))
            alpha, beta = alpha + beta, alpha * k
        out = ZERO
        for e, c in parts.items():
            al, be = table[e]
            out = out + c * (al * z + be)
        return out

    def divide(self, divisor: "MPoly") -> tuple["MPoly", "MPoly"]:
        """Multivariate division in lex order; returns (quotient, remainder).

        With a single divisor the remainder is zero exactly when the divisor
        divides self.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        lt = divisor.leading()
        rest = list(divisor.terms - {lt})
        p = set(self.terms)
        quot: set[int] = set()
        rem: set[int] = set()
        while p:
            m = max(p)
            diff = (m | _HIGH) - lt
            if diff & _HIGH == _HIGH:
                t = m - lt
                quot ^= {t}
                p.discard(m)
                p.symmetric_difference_update(_check({t + u for u in rest}))
            else:
                rem.add(m)
                p.discard(m)
        return MPoly(frozenset(quot)), MPoly(frozenset(rem))

    def exact_divide(self, divisor: "MPoly") -> "MPoly":
        quot, rem = self.divide(divisor)
        if rem:
            raise InexactDivisionError(rem)
        return quot

    def __floordiv__(self, other):
        return self.exact_divide(self._lift(other))

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, field, values: dict[str, int]) -> int:
        """Evaluate in a field exposing ``mul``/``pow``; xor is addition."""
        present = self.variables()
        missing = present - values.keys()
        if missing:
            raise KeyError(f"no value for {sorted(missing)}")
        cache: dict[tuple[str, int], int] = {}
        acc = 0
        for m in self.terms:
            v = 1
            for name, e in mono_exps(m).items():
                key = (name, e)
                p = cache.get(key)
                if p is None:
                    p = cache[key] = field.pow(values[name], e)
                v = field.mul(v, p)
                if v == 0:
                    break
            acc ^= v
        return acc


ZERO = MPoly(frozenset())
ONE = MPoly(frozenset([0]))


def var(name: str) -> MPoly:
    return MPoly.var(name)


# -- parsing of TeX-style polynomial text ------------------------------------

_NOISE = re.compile(r"\\cr|\\\\|\\,|\\nonumber|&")
_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<ident>[A-Za-z](?:_(?:\{\d+\}|\d))?)"
    r"|(?P<num>\d+)"
    r"|\^(?:\{(?P<bexp>\d+)\}|(?P<exp>\d))"
    r"|(?P<op>[+()*])"
    r")"
)


def _tokens(text: str):
    text = _NOISE.sub(" ", text).strip()
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SyntaxError(f"cannot parse at {text[pos:pos + 20]!r}")
        pos = m.end()
        if m.group("ident"):
            yield ("ident", m.group("ident").replace("_", "").replace("{", "").replace("}", ""))
        elif m.group("num"):
            yield ("num", int(m.group("num")))
        elif m.group("bexp") or m.group("exp"):
            yield ("exp", int(m.group("bexp") or m.group("exp")))
        else:
            yield ("op", m.group("op"))


def parse(text: str, rename: dict[str, str] | None = None) -> MPoly:
    """Parse sums of products such as ``a_1^2 b+(1+b)^3k`` into an MPoly.

    Juxtaposition is multiplication; integer literals are read mod 2.
    """
    toks = list(_tokens(text))
    rename = rename or {}
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok

    def expr():
        terms = [term()]
        while peek() == ("op", "+"):
            take()
            terms.append(term())
        return reduce(MPoly.__add__, terms)

    def term():
        factors = [factor()]
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                factors.append(factor())
            elif kind in ("ident", "num") or (kind, val) == ("op", "("):
                factors.append(factor())
            else:
                break
        return reduce(MPoly.__mul__, factors)

    def factor():
        kind, val = take()
        if kind == "ident":
            base = MPoly.var(rename.get(val, val))
        elif kind == "num":
            base = MPoly.const(val)
        elif (kind, val) == ("op", "("):
            base = expr()
            if take() != ("op", ")"):
                raise SyntaxError("unbalanced parenthesis")
        else:
            raise SyntaxError(f"unexpected token {val!r}")
        if peek()[0] == "exp":
            base = base ** take()[1]
        return base

    result = expr()
    if pos != len(toks):
        raise SyntaxError(f"trailing input at token {toks[pos]!r}")
    return result
