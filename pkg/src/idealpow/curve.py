"""Imaginary hyperelliptic curves y^2 + h(x) y = f(x) over F_p."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InvalidCurve, ModulusMismatch
from .ff_core import check_modulus
from .polyring import Poly, derivative, poly_gcd


@dataclass(frozen=True)
class Curve:
    """A validated curve. Nonsingularity is deliberately not checked."""

    p: int
    f: Poly
    h: Poly
    genus: int = field(init=False)

    def __post_init__(self):
        check_modulus(self.p)
        if self.f.p != self.p or self.h.p != self.p:
            raise ModulusMismatch("f and h must be over F_p")
        if self.f.is_zero() or not self.f.is_monic():
            raise InvalidCurve("f must be monic")
        d = self.f.degree
        if d % 2 == 0:
            raise InvalidCurve(f"deg f = {d} is even; an imaginary model needs odd degree")
        g = (d - 1) // 2
        if g < 1:
            raise InvalidCurve(f"genus {g} < 1 (deg f must be at least 3)")
        if self.p != 2:
            if not self.h.is_zero():
                raise InvalidCurve("h must be 0 in odd characteristic")
        else:
            if self.h.is_zero() or not self.h.is_monic():
                raise InvalidCurve("h must be monic in characteristic 2")
            if self.h.degree > g:
                raise InvalidCurve(f"deg h = {self.h.degree} exceeds genus {g}")
        object.__setattr__(self, "genus", g)

    def is_nonsingular(self) -> bool:
        """True iff the affine curve has no singular point over the algebraic closure."""
        fd, hd = derivative(self.f), derivative(self.h)
        if self.p != 2:
            return poly_gcd(self.f, fd) == 1
        # singular points have h(x0) = 0 and h'(x0)^2 f(x0) = f'(x0)^2
        return poly_gcd(self.h, hd * hd * self.f + fd * fd) == 1

    def is_point(self, x0: int, y0: int) -> bool:
        p = self.p
        return (y0 * y0 + self.h(x0) * y0 - self.f(x0)) % p == 0

    def __str__(self):
        return f"y^2 + ({self.h})*y = {self.f} over F_{self.p}"


def curve_new(p: int, f: Poly, h: Poly) -> Curve:
    return Curve(p, f, h)


def random_curve(p: int, genus: int, seed, nonsingular: bool = True) -> Curve:
    """Random monic f of degree 2g+1, plus monic h of degree <= g when p = 2.

    With ``nonsingular`` set, candidates are resampled until the curve is smooth.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        f = Poly([rng.randrange(p) for _ in range(2 * genus + 1)] + [1], p)
        h = Poly.zero(p)
        if p == 2:
            dh = rng.randint(0, genus)
            h = Poly([rng.randrange(2) for _ in range(dh)] + [1], p)
        curve = Curve(p, f, h)
        if not nonsingular or curve.is_nonsingular():
            return curve
