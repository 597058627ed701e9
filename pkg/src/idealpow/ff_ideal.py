"""Ideals S(Q, P) of F_p[x, y] for an imaginary hyperelliptic curve.

The ideal S(Q, P) is the F_p[x]-module generated by S*Q and S*(P + y), where
Q divides f + h*P - P^2. Normalized form: S and Q monic, deg P < deg Q.

Three independent ways to raise an ideal to a power are provided:

* ``recursive`` -- the single-pass S_n recursion, valid for primitive ideals
  with gcd(Q, 2P - h) = 1;
* ``repeated`` -- folding the gcd/CRT composition formula;
* ``hnf`` -- folding a formula-free module multiplication that triangularizes
  the generator matrix over F_p[x].
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .curve import Curve
from .errors import (
    CurveMismatch,
    ExponentOutOfRange,
    IdealInvariantViolated,
    InternalOracleError,
    NonCoprime,
    NoPointFound,
    ZeroQ,
)
from .polyring import Poly, exact_div, poly_gcd, poly_xgcd

MAX_EXPONENT = 1000
METHODS = ("recursive", "repeated", "hnf")


def norm_poly(curve: Curve, P: Poly) -> Poly:
    """f + h*P - P^2, which Q must divide."""
    return curve.f + curve.h * P - P * P


@dataclass(frozen=True)
class FfIdeal:
    curve: Curve
    S: Poly
    Q: Poly
    P: Poly

    def __post_init__(self):
        p = self.curve.p
        S, Q, P = (_as_poly(v, p) for v in (self.S, self.Q, self.P))
        if Q.is_zero():
            raise ZeroQ("Q must be nonzero")
        if S.is_zero():
            raise IdealInvariantViolated("S must be nonzero")
        S, Q = S.monic(), Q.monic()
        P = P % Q
        if not (norm_poly(self.curve, P) % Q).is_zero():
            raise IdealInvariantViolated(f"Q = {Q} does not divide f + hP - P^2 for P = {P}")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "P", P)

    @property
    def is_primitive(self) -> bool:
        return self.S.degree == 0

    def primitive_part(self) -> FfIdeal:
        return FfIdeal(self.curve, Poly.one(self.curve.p), self.Q, self.P)

    def __mul__(self, other: FfIdeal) -> FfIdeal:
        return ideal_mul(self, other)

    def __pow__(self, m: int) -> FfIdeal:
        return ideal_pow(self, m)

    def __str__(self):
        return f"{self.S}*({self.Q}, {self.P})" if self.S != 1 else f"({self.Q}, {self.P})"


def _as_poly(v, p: int) -> Poly:
    if isinstance(v, Poly):
        if v.p != p:
            raise CurveMismatch(f"polynomial over F_{v.p}, curve over F_{p}")
        return v
    return Poly.const(int(v), p)


def ideal_new(curve: Curve, S, Q, P) -> FfIdeal:
    return FfIdeal(curve, S, Q, P)


def unit_ideal(curve: Curve) -> FfIdeal:
    p = curve.p
    return FfIdeal(curve, Poly.one(p), Poly.one(p), Poly.zero(p))


def _same_curve(a: FfIdeal, b: FfIdeal):
    if a.curve != b.curve:
        raise CurveMismatch(f"{a.curve} vs {b.curve}")


def ideal_eq(a: FfIdeal, b: FfIdeal) -> bool:
    _same_curve(a, b)
    return (a.S, a.Q, a.P) == (b.S, b.Q, b.P)


@dataclass(frozen=True)
class BezoutTriple:
    """U*Q1 + V*Q2 + W*T = S where S = gcd(Q1, Q2, T)."""

    U: Poly
    V: Poly
    W: Poly
    S: Poly


def bezout_triple(Q1: Poly, Q2: Poly, T: Poly) -> BezoutTriple:
    g1, a1, b1 = poly_xgcd(Q1, Q2)
    S, c, W = poly_xgcd(g1, T)
    return BezoutTriple(c * a1, c * b1, W, S)


def ideal_mul(a: FfIdeal, b: FfIdeal) -> FfIdeal:
    """Composition of two ideals via gcd and CRT.

    Assumes invertible ideals, which holds on nonsingular curves. At a
    singular point use ideal_hnf_mul instead.
    """
    _same_curve(a, b)
    curve = a.curve
    Q1, P1, Q2, P2 = a.Q, a.P, b.Q, b.P
    bt = bezout_triple(Q1, Q2, P1 + P2 - curve.h)
    S = bt.S
    Q3 = exact_div(Q1 * Q2, S * S)
    R2 = exact_div(norm_poly(curve, P2), Q2)
    P3 = P2 + exact_div(Q2, S) * (bt.V * (P1 - P2) + bt.W * R2)
    return FfIdeal(curve, a.S * b.S * S, Q3, P3)


# --- module-HNF oracle ------------------------------------------------------

def _elt_mul(curve: Curve, e1, e2):
    # (u1 + v1 y)(u2 + v2 y) with y^2 = f - h y
    u1, v1 = e1
    u2, v2 = e2
    vv = v1 * v2
    return (u1 * u2 + vv * curve.f, u1 * v2 + u2 * v1 - vv * curve.h)


def _triangularize(gens, p: int):
    """Echelon basis {(a, 0), (b, d)} of the F_p[x]-module spanned by gens."""
    a = Poly.zero(p)
    row = None
    for u, v in gens:
        if v.is_zero():
            if not u.is_zero():
                a = poly_gcd(a, u)
            continue
        if row is None:
            row = (u, v)
            continue
        b, d = row
        g, s, t = poly_xgcd(d, v)
        dg, vg = exact_div(d, g), exact_div(v, g)
        # unimodular: det [[s, t], [-vg, dg]] = (s*d + t*v)/g = 1
        leftover = vg * b - dg * u
        if not leftover.is_zero():
            a = poly_gcd(a, leftover)
        row = (s * b + t * u, g)
    if row is None or a.is_zero():
        raise InternalOracleError("generators do not span a rank-2 module")
    b, d = row
    inv_scale = d.monic()
    if inv_scale != d:
        k = exact_div(inv_scale, d)  # constant polynomial lc(d)^-1
        b, d = b * k, inv_scale
    return a, b % a, d


def ideal_hnf_mul(a: FfIdeal, b: FfIdeal) -> FfIdeal:
    """Product computed by triangularizing the four generator products."""
    _same_curve(a, b)
    curve = a.curve
    ga = [(a.S * a.Q, Poly.zero(curve.p)), (a.S * a.P, a.S)]
    gb = [(b.S * b.Q, Poly.zero(curve.p)), (b.S * b.P, b.S)]
    prods = [_elt_mul(curve, x, y) for x in ga for y in gb]
    g, ustar, d = _triangularize(prods, curve.p)
    try:
        Q = exact_div(g, d)
        P = exact_div(ustar, d)
    except ArithmeticError as exc:
        raise InternalOracleError(str(exc)) from exc
    return FfIdeal(curve, d, Q, P)


# --- single-pass power recursion -------------------------------------------

@dataclass(frozen=True)
class PowerTrace:
    """Bezout pair, R = (f + Ph - P^2)/Q, and the values S_1..S_m.

    ``steps[n - 1]`` holds S_n; when ``reduced`` it is stored mod Q^n.
    """

    u1: Poly
    v1: Poly
    R: Poly
    steps: tuple[Poly, ...]
    reduced: bool

    def S(self, n: int) -> Poly:
        return self.steps[n - 1]


def _check_exponent(m: int):
    if not 1 <= m <= MAX_EXPONENT:
        raise ExponentOutOfRange(f"exponent {m} outside [1, {MAX_EXPONENT}]")


def s_sequence(curve: Curve, Q: Poly, P: Poly, m: int, reduce: bool = True) -> PowerTrace:
    _check_exponent(m)
    base = FfIdeal(curve, Poly.one(curve.p), Q, P)
    Q, P, h = base.Q, base.P, curve.h
    g, u1, v1 = poly_xgcd(Q, P.scale(2) - h)
    if g != 1:
        raise NonCoprime(f"gcd(Q, 2P - h) = {g}; use repeated multiplication")
    R = exact_div(norm_poly(curve, P), Q)
    lin = 1 + v1 * h - P.scale(2) * v1
    quad = v1 * v1 * Q * R
    Sn = Poly.zero(curve.p)
    steps = [Sn]
    Qn = Q
    for _ in range(m - 1):
        Sn = 1 + lin * Sn - quad * Sn * Sn
        if reduce:
            Qn = Qn * Q
            Sn = Sn % Qn
        steps.append(Sn)
    return PowerTrace(u1, v1, R, tuple(steps), reduce)


def recursion_applies(a: FfIdeal) -> bool:
    if not a.is_primitive:
        return False
    return poly_gcd(a.Q, a.P.scale(2) - a.curve.h) == 1


def power_from_trace(a: FfIdeal, trace: PowerTrace, m: int) -> FfIdeal:
    """(Q^m, P + v1*Q*R*S_m)."""
    return FfIdeal(a.curve, Poly.one(a.curve.p), a.Q ** m, a.P + trace.v1 * a.Q * trace.R * trace.S(m))


def ideal_pow(a: FfIdeal, m: int, method: str = "recursive", reduce: bool = True) -> FfIdeal:
    _check_exponent(m)
    if method == "recursive":
        if not a.is_primitive:
            raise NonCoprime("recursion needs a primitive ideal (S = 1)")
        trace = s_sequence(a.curve, a.Q, a.P, m, reduce)
        return power_from_trace(a, trace, m)
    if method == "repeated":
        mul = ideal_mul
    elif method == "hnf":
        mul = ideal_hnf_mul
    else:
        raise ValueError(f"unknown method {method!r}")
    acc = a
    for _ in range(m - 1):
        acc = mul(acc, a)
    return acc


def step_bezout(curve: Curve, Q: Poly, P: Poly, trace: PowerTrace, n: int) -> BezoutTriple:
    """The triple (u1 - v1^2 R S_n, 0, v1) for the product a * a^n.

    It satisfies U*Q + V*Q^n + W*(2P - h + v1*Q*R*S_n) = 1.
    """
    Sn = trace.S(n)
    v1 = trace.v1
    return BezoutTriple(trace.u1 - v1 * v1 * trace.R * Sn, Poly.zero(curve.p), v1, Poly.one(curve.p))


def s3_closed_form(curve: Curve, P: Poly, Q: Poly, trace: PowerTrace) -> Poly:
    """2 + v1*(h - 2P - v1*Q*R), the known cubing value of S_3."""
    v1 = trace.v1
    return 2 + v1 * (curve.h - P.scale(2) - v1 * Q * trace.R)


# --- random instances --------------------------------------------------------

def random_prime_ideal(curve: Curve, seed) -> FfIdeal:
    """Degree-one prime ideal (x - x0, y0) for a random affine point (x0, y0)."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    p = curve.p
    xs = list(range(p))
    rng.shuffle(xs)
    for x0 in xs:
        roots = [y for y in range(p) if curve.is_point(x0, y)]
        if roots:
            y0 = rng.choice(roots)
            return FfIdeal(curve, Poly.one(p), Poly((-x0, 1), p), Poly.const(y0, p))
    raise NoPointFound(f"no affine point found on {curve} after {p} trials")


def random_coprime_ideal(curve: Curve, seed, max_points: int | None = None, tries: int = 64) -> FfIdeal:
    """Product of 1..max_points random prime ideals with gcd(Q, 2P - h) = 1.

    max_points defaults to the genus.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    k_max = max_points or curve.genus
    for _ in range(tries):
        k = rng.randint(1, k_max)
        acc = unit_ideal(curve)
        for _ in range(k):
            acc = ideal_mul(acc, random_prime_ideal(curve, rng))
        if recursion_applies(acc):
            return acc
    raise NoPointFound(f"no coprime primitive ideal found on {curve} in {tries} tries")
