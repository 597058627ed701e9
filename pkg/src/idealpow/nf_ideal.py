"""Ideals S(Q, P) in imaginary quadratic orders of discriminant delta.

S(Q, P) is the Z-module generated by S*Q and S*(P + sqrt(delta))/2 with
4Q | P^2 - delta. P is only defined mod 2Q; the normalized representative
lies in (-Q, Q]. All arithmetic is on Python ints.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import (
    DiscriminantMismatch,
    ExponentOutOfRange,
    IdealInvariantViolated,
    InternalOracleError,
    InvalidDiscriminant,
    NoIdealFound,
    NonCoprime,
)
from .ff_core import int_xgcd

MAX_EXPONENT = 1000
METHODS = ("recursive", "hnf")


def check_discriminant(delta: int) -> int:
    if delta >= 0 or delta % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{delta} is not a negative discriminant (= 0, 1 mod 4)")
    return delta


def _center(P: int, Q: int) -> int:
    # representative of P mod 2Q in (-Q, Q]
    r = P % (2 * Q)
    return r - 2 * Q if r > Q else r


@dataclass(frozen=True)
class NfIdeal:
    delta: int
    S: int
    Q: int
    P: int

    def __post_init__(self):
        check_discriminant(self.delta)
        if self.S < 1 or self.Q < 1:
            raise IdealInvariantViolated(f"S = {self.S} and Q = {self.Q} must be positive")
        P = _center(self.P, self.Q)
        if (P * P - self.delta) % (4 * self.Q):
            raise IdealInvariantViolated(f"4*{self.Q} does not divide {P}^2 - ({self.delta})")
        object.__setattr__(self, "P", P)

    @property
    def is_primitive(self) -> bool:
        return self.S == 1

    def __str__(self):
        body = f"({self.Q}, {self.P})"
        return body if self.S == 1 else f"{self.S}*{body}"


def nf_ideal_new(delta: int, S: int, Q: int, P: int) -> NfIdeal:
    return NfIdeal(delta, S, Q, P)


def nf_unit_ideal(delta: int) -> NfIdeal:
    return NfIdeal(delta, 1, 1, delta % 2)


def _same_delta(a: NfIdeal, b: NfIdeal):
    if a.delta != b.delta:
        raise DiscriminantMismatch(f"{a.delta} vs {b.delta}")


def nf_ideal_eq(a: NfIdeal, b: NfIdeal) -> bool:
    _same_delta(a, b)
    return (a.S, a.Q, a.P) == (b.S, b.Q, b.P)


# --- integer module-HNF oracle ----------------------------------------------

def _exact(n: int, d: int) -> int:
    q, r = divmod(n, d)
    if r:
        raise InternalOracleError(f"{d} does not divide {n}")
    return q


def _elt_mul(delta: int, e1, e2):
    # elements (u, v) stand for (u + v*sqrt(delta))/2 with u = v*delta mod 2
    u1, v1 = e1
    u2, v2 = e2
    return _exact(u1 * u2 + v1 * v2 * delta, 2), _exact(u1 * v2 + u2 * v1, 2)


def nf_hnf_mul(a: NfIdeal, b: NfIdeal) -> NfIdeal:
    _same_delta(a, b)
    delta = a.delta
    ga = [(2 * a.S * a.Q, 0), (a.S * a.P, a.S)]
    gb = [(2 * b.S * b.Q, 0), (b.S * b.P, b.S)]
    g = 0
    row = None
    for u, v in (_elt_mul(delta, x, y) for x in ga for y in gb):
        if v == 0:
            g = math.gcd(g, u)
            continue
        if row is None:
            row = (u, v)
            continue
        ub, d = row
        e, s, t = int_xgcd(d, v)
        g = math.gcd(g, (v // e) * ub - (d // e) * u)
        row = (s * ub + t * u, e)
    if row is None or g == 0:
        raise InternalOracleError("generators do not span a rank-2 lattice")
    ustar, d = row
    if d < 0:
        ustar, d = -ustar, -d
    Q = _exact(g, 2 * d)
    P = _exact(ustar, d)
    return NfIdeal(delta, d, Q, P)


# --- single-pass power recursion -------------------------------------------

@dataclass(frozen=True)
class NfPowerTrace:
    """u1*Q + v1*P = 1, c = (P^2 - delta)/(4Q), and S_1..S_m (``steps[n - 1]``)."""

    u1: int
    v1: int
    c: int
    steps: tuple[int, ...]
    reduced: bool

    def S(self, n: int) -> int:
        return self.steps[n - 1]


def _check_exponent(m: int):
    if not 1 <= m <= MAX_EXPONENT:
        raise ExponentOutOfRange(f"exponent {m} outside [1, {MAX_EXPONENT}]")


def nf_s_sequence(a: NfIdeal, m: int, reduce: bool = True) -> NfPowerTrace:
    _check_exponent(m)
    if not a.is_primitive:
        raise NonCoprime("recursion needs a primitive ideal (S = 1)")
    Q, P = a.Q, a.P
    g, u1, v1 = int_xgcd(Q, P)
    if g != 1:
        raise NonCoprime(f"gcd(Q, P) = {g}; the recursion does not apply")
    c = (P * P - a.delta) // (4 * Q)
    Sn = 0
    steps = [Sn]
    Qn = Q
    for _ in range(m - 1):
        Sn = c * v1 + Q * u1 * Sn + Q * v1 * Sn * Sn
        if reduce:
            Qn *= Q
            Sn %= Qn
        steps.append(Sn)
    return NfPowerTrace(u1, v1, c, tuple(steps), reduce)


def nf_recursion_applies(a: NfIdeal) -> bool:
    return a.is_primitive and math.gcd(a.Q, a.P) == 1


def nf_ideal_pow(a: NfIdeal, m: int, method: str = "recursive", reduce: bool = True) -> NfIdeal:
    _check_exponent(m)
    if method == "recursive":
        trace = nf_s_sequence(a, m, reduce)
        return NfIdeal(a.delta, 1, a.Q ** m, a.P - 2 * a.Q * trace.S(m))
    if method not in ("hnf", "repeated"):
        raise ValueError(f"unknown method {method!r}")
    acc = a
    for _ in range(m - 1):
        acc = nf_hnf_mul(acc, a)
    return acc


# --- random instances --------------------------------------------------------

def nf_random_ideal(delta: int, seed, coprime: bool = True, qmax: int = 10_000, tries: int = 1000) -> NfIdeal:
    """Random primitive ideal with Q in [1, qmax], optionally with gcd(Q, P) = 1."""
    check_discriminant(delta)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(tries):
        Q = rng.randint(1, qmax)
        four_q = 4 * Q
        start = -Q + 1 if (-Q + 1 - delta) % 2 == 0 else -Q + 2
        # P must share the parity of delta
        cands = [
            P for P in range(start, Q + 1, 2)
            if (P * P - delta) % four_q == 0 and (not coprime or math.gcd(Q, P) == 1)
        ]
        if cands:
            return NfIdeal(delta, 1, Q, rng.choice(cands))
    raise NoIdealFound(f"no ideal found for delta = {delta} in {tries} tries")


def random_discriminant(rng: random.Random, lo: int = -10**6) -> int:
    while True:
        d = rng.randint(lo, -3)
        if d % 4 in (0, 1):
            return d
