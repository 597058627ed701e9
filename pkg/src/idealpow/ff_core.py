"""Prime field arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundExceeded, ModulusMismatch, NonInvertible, NotPrime

MAX_MODULUS = 1 << 20


@lru_cache(maxsize=None)
def check_modulus(p: int) -> int:
    """Return p if it is a prime below MAX_MODULUS, raise otherwise."""
    if p < 2:
        raise NotPrime(f"{p} is not prime")
    if p >= MAX_MODULUS:
        raise BoundExceeded(f"modulus {p} >= 2^20")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise NotPrime(f"{p} is not prime ({d} divides it)")
        d += 1
    return p


def int_xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid on integers: returns (g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise NonInvertible(f"0 has no inverse mod {p}")
    g, s, _ = int_xgcd(a, p)
    if g != 1:
        raise NonInvertible(f"{a} is not invertible mod {p}")
    return s % p


@dataclass(frozen=True, slots=True)
class FpElement:
    value: int
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise ValueError("FpElement value out of canonical range; use fp_new")

    def _other(self, other) -> int:
        if isinstance(other, int):
            return other % self.modulus
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")
        return other.value

    def __add__(self, other):
        return FpElement((self.value + self._other(other)) % self.modulus, self.modulus)

    def __sub__(self, other):
        return FpElement((self.value - self._other(other)) % self.modulus, self.modulus)

    def __mul__(self, other):
        return FpElement(self.value * self._other(other) % self.modulus, self.modulus)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return FpElement((self._other(other) - self.value) % self.modulus, self.modulus)

    def __neg__(self):
        return FpElement(-self.value % self.modulus, self.modulus)

    def inverse(self) -> FpElement:
        return FpElement(inv_mod(self.value, self.modulus), self.modulus)

    def __truediv__(self, other):
        return self * FpElement(self._other(other), self.modulus).inverse()

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


def fp_new(value: int, p: int) -> FpElement:
    check_modulus(p)
    return FpElement(value % p, p)


def fp_arith(a: FpElement, b: FpElement | None, op: str) -> FpElement:
    """Dispatch one of add/sub/mul/neg by name; neg ignores b."""
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def fp_inv(a: FpElement) -> FpElement:
    return a.inverse()
