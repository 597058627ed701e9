import itertools

import pytest
from hypothesis import given, strategies as st

from idealpow.errors import BothZero, DivisionByZero, ModulusMismatch, ParseError
from idealpow.polyring import NEG_INF, Poly, poly_arith, poly_divrem, poly_format, poly_parse, poly_xgcd


def P5(text):
    return poly_parse(text, 5)


@st.composite
def polys(draw, p=None, max_deg=12):
    p = p or draw(st.sampled_from([2, 3, 5, 7, 13, 65537]))
    cs = draw(st.lists(st.integers(0, p - 1), max_size=max_deg + 1))
    return Poly(cs, p)


@st.composite
def poly_pairs(draw):
    p = draw(st.sampled_from([2, 3, 5, 7, 13, 65537]))
    return draw(polys(p=p)), draw(polys(p=p))


@pytest.mark.parametrize("a,b,op,expected", [
    ("x+1", "x+4", "add", "2*x"),
    ("x+1", "x+4", "mul", "x^2+4"),
    ("0", "x^3+1", "mul", "0"),
    ("x", "x", "sub", "0"),
])
def test_poly_arith(a, b, op, expected):
    assert poly_arith(P5(a), P5(b), op) == P5(expected)


def test_degree_and_zero():
    assert Poly.zero(5).degree == NEG_INF
    assert Poly([1, 0, 0, 0], 5).degree == 0
    assert (P5("x^2") * P5("0")).degree == NEG_INF


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        Poly([1], 5) + Poly([1], 7)


@pytest.mark.parametrize("a,b,q,r", [
    ("x^3+1", "x", "x^2", "1"),
    ("x^3+1", "x+1", "x^2+4*x+1", "0"),
    ("x", "x^2", "0", "x"),
])
def test_divrem_examples(a, b, q, r):
    assert poly_divrem(P5(a), P5(b)) == (P5(q), P5(r))


def test_divrem_by_zero():
    with pytest.raises(DivisionByZero):
        poly_divrem(P5("x"), P5("0"))


@pytest.mark.parametrize("a,b,g,u,v", [
    ("x", "2", "1", "0", "3"),
    ("x^2+4", "x+1", "x+1", "0", "1"),
    ("x", "x", "x", "0", "1"),
    ("3*x", "3*x", "x", "0", "2"),
])
def test_xgcd_examples(a, b, g, u, v):
    assert poly_xgcd(P5(a), P5(b)) == (P5(g), P5(u), P5(v))


def test_xgcd_both_zero():
    with pytest.raises(BothZero):
        poly_xgcd(P5("0"), P5("0"))


@pytest.mark.parametrize("text,coeffs", [
    ("x^3+1", (1, 0, 0, 1)),
    ("x^2 + 4*x^2", ()),
    ("3x^2 - x + 7", (2, 4, 3)),
    ("  12 * x ^ 1 ", (0, 2)),
    ("x^0+x^0", (2,)),
])
def test_parse(text, coeffs):
    assert P5(text).coeffs == coeffs


@pytest.mark.parametrize("text,offset", [("x^^2", 2), ("", 0), ("x+", 2), ("2*3", 2), ("x y", 2), ("-x", 0)])
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as info:
        P5(text)
    assert info.value.offset == offset


@pytest.mark.parametrize("coeffs,text", [((1, 0, 0, 1), "x^3+1"), ((), "0"), ((4, 3), "3*x+4"), ((0, 1), "x")])
def test_format(coeffs, text):
    assert poly_format(Poly(coeffs, 5)) == text


@given(polys())
def test_round_trip(a):
    assert poly_parse(poly_format(a), a.p) == a


@given(poly_pairs())
def test_divrem_contract(pair):
    a, b = pair
    if b.is_zero():
        return
    q, r = poly_divrem(a, b)
    assert a - (q * b + r) == 0
    assert r.degree < b.degree


@given(poly_pairs())
def test_xgcd_contract(pair):
    a, b = pair
    if a.is_zero() and b.is_zero():
        return
    g, u, v = poly_xgcd(a, b)
    assert u * a + v * b - g == 0
    assert g.is_monic()
    assert (a % g).is_zero() and (b % g).is_zero()
    if not (b % a if a else b).is_zero() and not (a % b if b else a).is_zero():
        assert u.degree < b.degree - g.degree


def _monic_polys(p, max_deg):
    for d in range(max_deg + 1):
        for low in itertools.product(range(p), repeat=d):
            yield Poly(list(low) + [1], p)


@pytest.mark.parametrize("p", [2, 3])
def test_gcd_against_enumeration(p, rng):
    # brute force: the gcd is the highest-degree monic common divisor
    divisors = list(_monic_polys(p, 3))
    for _ in range(40):
        a = Poly([rng.randrange(p) for _ in range(5)], p)
        b = Poly([rng.randrange(p) for _ in range(4)], p)
        if a.is_zero() or b.is_zero():
            continue
        common = [d for d in divisors if (a % d).is_zero() and (b % d).is_zero()]
        best = max(common, key=lambda d: d.degree)
        assert poly_xgcd(a, b)[0] == best


def test_large_multiplication_matches_schoolbook():
    p = 1048573
    a = Poly(list(range(1, 80)), p)
    b = Poly([p - 1 - i for i in range(60)], p)
    naive = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            naive[i + j] += x * y
    assert (a * b).coeffs == tuple(c % p for c in naive)
