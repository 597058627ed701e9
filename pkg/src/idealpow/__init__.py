"""Exact powering of ideals in imaginary quadratic function and number fields."""
from .curve import Curve, curve_new, random_curve
from .errors import IdealPowError, NonCoprime
from .ff_core import FpElement, fp_arith, fp_inv, fp_new
from .ff_ideal import (
    BezoutTriple,
    FfIdeal,
    PowerTrace,
    ideal_eq,
    ideal_hnf_mul,
    ideal_mul,
    ideal_new,
    ideal_pow,
    random_prime_ideal,
    s_sequence,
)
from .nf_ideal import (
    NfIdeal,
    NfPowerTrace,
    nf_hnf_mul,
    nf_ideal_eq,
    nf_ideal_new,
    nf_ideal_pow,
    nf_random_ideal,
    nf_s_sequence,
)
from .polyring import NEG_INF, Poly, poly_arith, poly_divrem, poly_format, poly_parse, poly_xgcd

__version__ = "0.1.0"
