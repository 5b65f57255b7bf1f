from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fanolines.core.poly import (GREVLEX, LEX, InexactDivisionError, Poly, PolySyntaxError,
                                 UnknownVariableError, block_order, divide, exact_div, parse_poly,
                                 poly_gcd)

VARS = ("x", "y", "z")


def naive_mul(p: Poly, q: Poly) -> Poly:
    """Term-by-term distributive product, used as an oracle."""
    p, q = p._align(q)
    acc = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            acc[e] = acc.get(e, 0) + c1 * c2
    return Poly(acc, p.vars)


def test_second_type_leading_part():
    p = parse_poly("x4*x0^2+x5*x1^2")
    x0, x1, x4, x5 = (Poly.var(v) for v in ("x0", "x1", "x4", "x5"))
    assert p == x4 * x0 ** 2 + x5 * x1 ** 2
    assert len(p.terms) == 2


def test_zero_has_no_terms():
    p = parse_poly("0")
    assert p.terms == {}
    assert p.is_zero()
    assert str(p) == "0"


def test_resultant_expansion_matches_naive_product():
    text = "(x1*y3-x3*y1)^2-(x1*y2-x2*y1)*(x2*y3-x3*y2)"
    p = parse_poly(text)
    a = parse_poly("x1*y3-x3*y1")
    b = parse_poly("x1*y2-x2*y1")
    c = parse_poly("x2*y3-x3*y2")
    oracle = naive_mul(a, a) - naive_mul(b, c)
    assert p == oracle
    # three monomials from the square, four distinct ones from the product
    assert len(p.terms) == 7
    assert p.coefficient({"x1": 1, "x3": 1, "y1": 1, "y3": 1}) == -2


def test_ratio_literal_and_primes():
    p = parse_poly("35/2*H^3 - x1'*y2'")
    assert p.coefficient({"H": 3}) == Fraction(35, 2)
    assert p.coefficient({"x1'": 1, "y2'": 1}) == -1
    assert "35/2*H^3" in str(p)


def test_format_reparses():
    p = parse_poly("-(3*x - 1/4*y)^3 + z^2*x - 7")
    assert parse_poly(str(p)) == p


def test_format_descending_grevlex():
    p = parse_poly("1 + x + y^2 + x*y", ("x", "y"))
    assert str(p) == "x*y + y^2 + x + 1"


@pytest.mark.parametrize("text,pos", [("x + * y", 4), ("(x + y", 6), ("x $ y", 2), ("x^y", 2)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PolySyntaxError) as err:
        parse_poly(text, ("x", "y"))
    assert err.value.pos == pos


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse_poly("x + w", ("x", "y"))


def test_subs_and_evaluate():
    x, y = Poly.gens("x y")
    p = x ** 2 * y + 3
    assert p.subs({"x": y + 1}) == (y + 1) ** 2 * y + 3
    assert p.evaluate({"x": 2, "y": Fraction(1, 2)}) == 5


def test_diff():
    p = parse_poly("x^3*y + 2*y^2")
    assert p.diff("x") == parse_poly("3*x^2*y")
    assert p.diff("z").is_zero()


def test_monomial_orders():
    x, y, z = Poly.gens(VARS)
    p = x * z ** 2 + y ** 3 + x ** 2
    assert p.leading_term(GREVLEX)[0] == (0, 3, 0)
    assert p.leading_term(LEX)[0] == (2, 0, 0)
    assert p.leading_term(block_order(1))[0] == (2, 0, 0)


def test_division_and_exact_div():
    x, y = Poly.gens("x y")
    (q,), r = divide(x ** 2 + y, [x])
    assert q == x and r == y
    assert exact_div(x ** 2 - y ** 2, x - y) == x + y
    with pytest.raises(InexactDivisionError):
        exact_div(x ** 2 + 1, x - 1)


def test_gcd_examples():
    x, y = Poly.gens("x y")
    assert poly_gcd(x ** 2 - y ** 2, x - y) == x - y
    assert poly_gcd(6 * x + 4 * y, Poly.const(0, ("x", "y"))) == 3 * x + 2 * y
    assert poly_gcd(x + 1, y + 1) == 1


small_ints = st.integers(-4, 4)


@st.composite
def small_polys(draw, max_terms=4, max_deg=2):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_deg)) for _ in VARS)
        terms[e] = Fraction(draw(small_ints), draw(st.integers(1, 3)))
    return Poly(terms, VARS)


@settings(max_examples=200, deadline=None)
@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert p * q == naive_mul(p, q)
    assert parse_poly(str(p), VARS) == p


@settings(max_examples=60, deadline=None)
@given(small_polys(3, 2), small_polys(3, 2), small_polys(3, 2))
def test_gcd_recovers_common_factor(f, g, h):
    if f.is_zero() or g.is_zero() or h.is_zero():
        return
    if not poly_gcd(f, g).is_constant():
        return
    d = poly_gcd(f * h, g * h)
    assert d == h.primitive()
    exact_div(f * h, d)
    exact_div(g * h, d)


@settings(max_examples=100, deadline=None)
@given(small_polys(), small_polys())
def test_gcd_divides_inputs(p, q):
    d = poly_gcd(p, q)
    if d.is_zero():
        assert p.is_zero() and q.is_zero()
        return
    exact_div(p, d)
    exact_div(q, d)
