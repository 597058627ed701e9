"""Embedded worked examples, run by ``idealpow selftest``."""
from __future__ import annotations

import random

from . import errors
from .curve import Curve, random_curve
from .ff_core import fp_inv, fp_new
from .ff_ideal import (
    FfIdeal,
    ideal_hnf_mul,
    ideal_mul,
    ideal_pow,
    random_coprime_ideal,
    s3_closed_form,
    s_sequence,
    unit_ideal,
)
from .nf_ideal import NfIdeal, nf_hnf_mul, nf_ideal_pow, nf_s_sequence, nf_unit_ideal
from .polyring import Poly, poly_divrem, poly_format, poly_parse, poly_xgcd
from .verify import FF_GENERA, FF_PRIMES


def _raises(exc, fn, *args):
    try:
        fn(*args)
    except exc:
        return
    raise AssertionError(f"{fn.__name__}{args} did not raise {exc.__name__}")


def example_curve() -> Curve:
    return Curve(5, poly_parse("x^3+1", 5), Poly.zero(5))


def check_prime_field():
    assert fp_new(7, 5).value == 2 and fp_new(-1, 13).value == 12
    _raises(errors.NotPrime, fp_new, 1, 4)
    assert (fp_new(3, 5) + fp_new(4, 5)).value == 2
    assert (fp_new(3, 5) * fp_new(4, 5)).value == 2
    assert fp_inv(fp_new(3, 5)).value == 2 and fp_inv(fp_new(12, 13)).value == 12
    _raises(errors.NonInvertible, fp_inv, fp_new(0, 7))


def check_polynomials():
    P = lambda s: poly_parse(s, 5)
    assert P("x+1") + P("x+4") == P("2*x")
    assert P("x+1") * P("x+4") == P("x^2+4")
    assert poly_divrem(P("x^3+1"), P("x")) == (P("x^2"), P("1"))
    assert poly_divrem(P("x^3+1"), P("x+1")) == (P("x^2+4x+1"), P("0"))
    assert poly_xgcd(P("x"), P("2")) == (P("1"), P("0"), P("3"))
    assert poly_xgcd(P("x^2+4"), P("x+1")) == (P("x+1"), P("0"), P("1"))
    assert poly_xgcd(P("x"), P("x")) == (P("x"), P("0"), P("1"))
    assert P("x^3+1").coeffs == (1, 0, 0, 1) and P("x^2 + 4*x^2").is_zero()
    assert poly_format(Poly([4, 3], 5)) == "3*x+4" and poly_format(Poly.zero(5)) == "0"
    _raises(errors.ParseError, poly_parse, "x^^2", 5)


def check_curves():
    assert example_curve().genus == 1
    c2 = Curve(2, poly_parse("x^5+x^2+1", 2), poly_parse("x^2", 2))
    assert c2.genus == 2
    _raises(errors.InvalidCurve, Curve, 5, poly_parse("x^3+1", 5), poly_parse("x", 5))


def check_ff_constructor():
    C = example_curve()
    x = Poly.x(5)
    assert FfIdeal(C, 1, x, 1).Q == x
    _raises(errors.IdealInvariantViolated, FfIdeal, C, 1, x, 2)
    a = FfIdeal(C, 2, x.scale(3), 1)
    assert (a.S, a.Q, a.P) == (Poly.one(5), x, Poly.one(5))


def check_ff_products():
    C = example_curve()
    x = Poly.x(5)
    a, b = FfIdeal(C, 1, x, 1), FfIdeal(C, 1, x, 4)
    sq = FfIdeal(C, 1, x * x, 1)
    assert ideal_hnf_mul(a, a) == sq and ideal_mul(a, a) == sq
    principal = FfIdeal(C, x, 1, 0)
    assert ideal_hnf_mul(a, b) == principal and ideal_mul(a, b) == principal
    assert ideal_mul(a, unit_ideal(C)) == a and ideal_hnf_mul(a, unit_ideal(C)) == a


def check_worked_example_a():
    C = example_curve()
    x = Poly.x(5)
    a = FfIdeal(C, 1, x, 1)
    for m in (1, 2, 3):
        expected = FfIdeal(C, 1, x ** m, 1)
        assert ideal_pow(a, m, "hnf") == expected, f"hnf a^{m}"
        for method in ("recursive", "repeated"):
            assert ideal_pow(a, m, method) == expected, f"{method} a^{m}"
    t = s_sequence(C, x, Poly.one(5), 3, reduce=False)
    assert t.v1 == 3 and t.R == x * x
    assert t.steps == (Poly.zero(5), Poly.one(5), poly_parse("x^3+1", 5))


def check_worked_example_b():
    a = NfIdeal(-23, 1, 2, 1)
    for m, expected in ((1, NfIdeal(-23, 1, 2, 1)), (2, NfIdeal(-23, 1, 4, -3)), (3, NfIdeal(-23, 1, 8, -3))):
        assert nf_ideal_pow(a, m, "hnf") == expected, f"hnf a^{m}"
        assert nf_ideal_pow(a, m, "recursive") == expected, f"recursive a^{m}"
    t = nf_s_sequence(a, 3, reduce=False)
    assert (t.u1, t.v1, t.c, t.steps) == (0, 1, 3, (0, 3, 21))
    assert nf_s_sequence(a, 3, reduce=True).steps == (0, 3, 5)


def check_nf_products():
    a = NfIdeal(-23, 1, 2, 1)
    assert nf_hnf_mul(a, a) == NfIdeal(-23, 1, 4, -3)
    assert nf_hnf_mul(a, NfIdeal(-23, 1, 2, -1)) == NfIdeal(-23, 2, 1, 1)
    assert nf_hnf_mul(a, nf_unit_ideal(-23)) == a
    _raises(errors.IdealInvariantViolated, NfIdeal, -23, 1, 2, 0)
    assert NfIdeal(-23, 1, 4, -3) == NfIdeal(-23, 1, 4, 5)


def check_s3_closed_form(count: int = 100, seed: int = 2024):
    rng = random.Random(seed)
    done = 0
    while done < count:
        curve = random_curve(rng.choice(FF_PRIMES), rng.choice(FF_GENERA), rng)
        try:
            a = random_coprime_ideal(curve, rng)
        except errors.NoPointFound:
            continue
        for reduce in (True, False):
            t = s_sequence(curve, a.Q, a.P, 3, reduce)
            diff = t.S(3) - s3_closed_form(curve, a.P, a.Q, t)
            assert (diff % a.Q ** 3).is_zero(), f"S3 mismatch on {curve}, Q={a.Q}, P={a.P}"
        done += 1


CHECKS = [
    ("prime-field", check_prime_field),
    ("polynomials", check_polynomials),
    ("curves", check_curves),
    ("ff-constructor", check_ff_constructor),
    ("ff-products", check_ff_products),
    ("worked-example-A", check_worked_example_a),
    ("nf-products", check_nf_products),
    ("worked-example-B", check_worked_example_b),
    ("S3-closed-form", check_s3_closed_form),
]


def run_selftest(checks=None) -> tuple[int, str | None, str | None]:
    """Run checks in order; return (number passed, first failing name, message)."""
    passed = 0
    for name, fn in checks or CHECKS:
        try:
            fn()
        except Exception as exc:  # any exception counts as a failed check
            return passed, name, f"{type(exc).__name__}: {exc}"
        passed += 1
    return passed, None, None
