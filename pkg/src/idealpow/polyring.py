"""Dense univariate polynomials over a prime field F_p.

Coefficients are stored as plain ints in [0, p), lowest degree first, with
no trailing zeros. The zero polynomial has an empty coefficient tuple and
degree NEG_INF.
"""
from __future__ import annotations

import numpy as np

from .errors import BothZero, DivisionByZero, ModulusMismatch, ParseError
from .ff_core import FpElement, check_modulus, inv_mod

NEG_INF = float("-inf")

# below this length schoolbook multiplication in Python beats numpy call overhead
_NUMPY_MUL_THRESHOLD = 24


class Poly:
    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs=(), p: int = 2):
        check_modulus(p)
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.p = p

    @classmethod
    def _raw(cls, coeffs: list[int], p: int) -> Poly:
        # coeffs already reduced; strip trailing zeros only
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.p = p
        return obj

    @classmethod
    def const(cls, c: int, p: int) -> Poly:
        return cls((c,), p)

    @classmethod
    def x(cls, p: int) -> Poly:
        return cls((0, 1), p)

    @classmethod
    def zero(cls, p: int) -> Poly:
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> Poly:
        return cls((1,), p)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> FpElement:
        v = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FpElement(v, self.p)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc() == 1

    def monic(self) -> Poly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(inv_mod(self.coeffs[-1], self.p))

    def scale(self, c: int) -> Poly:
        c %= self.p
        return Poly._raw([a * c % self.p for a in self.coeffs], self.p)

    def __call__(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x0 + c) % self.p
        return acc

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.p != self.p:
                raise ModulusMismatch(f"F_{self.p}[x] vs F_{other.p}[x]")
            return other
        if isinstance(other, int):
            return Poly.const(other, self.p)
        if isinstance(other, FpElement):
            if other.modulus != self.p:
                raise ModulusMismatch(f"F_{self.p}[x] vs F_{other.modulus}")
            return Poly.const(other.value, self.p)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other, self.p)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        p = self.p
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Poly._raw(out, p)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Poly._raw([(-c) % p for c in self.coeffs], p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw([], self.p)
        p = self.p
        if min(len(a), len(b)) >= _NUMPY_MUL_THRESHOLD:
            # p < 2^20 keeps every convolution sum below 2^63
            prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
            return Poly._raw((prod % p).tolist(), p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly._raw([c % p for c in out], p)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __repr__(self):
        return f"Poly({poly_format(self)!r}, p={self.p})"

    def __str__(self):
        return poly_format(self)


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def derivative(a: Poly) -> Poly:
    p = a.p
    return Poly._raw([i * c % p for i, c in enumerate(a.coeffs)][1:], p)


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if a.p != b.p:
        raise ModulusMismatch(f"F_{a.p}[x] vs F_{b.p}[x]")
    if not b.coeffs:
        raise DivisionByZero("polynomial division by zero")
    p = a.p
    db = len(b.coeffs) - 1
    if len(a.coeffs) - 1 < db:
        return Poly._raw([], p), a
    rem = list(a.coeffs)
    inv = inv_mod(b.coeffs[-1], p)
    bc = b.coeffs
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] % p
        if c:
            c = c * inv % p
            quot[k] = c
            for j in range(db + 1):
                rem[k + j] -= c * bc[j]
    return Poly._raw(quot, p), Poly._raw([c % p for c in rem[:db]], p)


def exact_div(a: Poly, b: Poly) -> Poly:
    """a / b, raising ArithmeticError if b does not divide a."""
    q, r = poly_divrem(a, b)
    if r:
        raise ArithmeticError(f"{b} does not divide {a}")
    return q


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, u, v) with g monic, g = gcd(a, b) and u*a + v*b = g."""
    if a.p != b.p:
        raise ModulusMismatch(f"F_{a.p}[x] vs F_{b.p}[x]")
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    p = a.p
    old_r, r = a, b
    old_s, s = Poly.one(p), Poly.zero(p)
    old_t, t = Poly.zero(p), Poly.one(p)
    while r:
        q, rem = poly_divrem(old_r, r)
        old_r, r = r, rem
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    inv = inv_mod(old_r.lc(), p)
    return old_r.scale(inv), old_s.scale(inv), old_t.scale(inv)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    return poly_xgcd(a, b)[0]


def poly_format(a: Poly) -> str:
    if not a.coeffs:
        return "0"
    terms = []
    for d in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[d]
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
            continue
        mono = "x" if d == 1 else f"x^{d}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)


class _Parser:
    def __init__(self, text: str, p: int):
        self.text = text
        self.pos = 0
        self.p = p

    def error(self, msg: str):
        raise ParseError(self.pos, msg)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n\f\v":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def term(self) -> tuple[int, int]:
        ch = self.peek()
        coeff = 1
        if ch.isdigit():
            coeff = self.nat()
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                if self.peek() != "x":
                    self.error("expected 'x' after '*'")
            elif ch != "x":
                return coeff, 0
        elif ch != "x":
            self.error("expected a coefficient or 'x'")
        self.pos += 1  # consume 'x'
        exp = 1
        if self.peek() == "^":
            self.pos += 1
            exp = self.nat()
        return coeff, exp

    def parse(self) -> Poly:
        acc: dict[int, int] = {}
        sign = 1
        while True:
            c, e = self.term()
            acc[e] = acc.get(e, 0) + sign * c
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                self.error(f"unexpected character {ch!r}")
            sign = 1 if ch == "+" else -1
            self.pos += 1
        if not acc:
            return Poly.zero(self.p)
        cs = [0] * (max(acc) + 1)
        for e, c in acc.items():
            cs[e] = c
        return Poly(cs, self.p)


def poly_parse(text: str, p: int) -> Poly:
    check_modulus(p)
    if not text.isascii():
        raise ParseError(0, "non-ASCII input")
    return _Parser(text, p).parse()
