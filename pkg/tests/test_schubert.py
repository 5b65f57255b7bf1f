from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from fanolines.schubert import (AmbientMismatch, SchubertClass, complement, integrate_G, lr_coefficient,
                                normalize_partition, partitions_in_box, pieri, sym_power_chern,
                                taut, taut_to_schubert, whitney_sigma, whitney_sigma2)
from fanolines.core.poly import Poly

PARTS = partitions_in_box(2, 4)
X = ("x1", "x2")


def schur2(lam) -> Poly:
    """Two-variable Schur polynomial s_(a,b) = (x1 x2)^b h_(a-b)."""
    a, b = (tuple(lam) + (0, 0))[:2]
    x1, x2 = Poly.gens(X)
    h = Poly.const(0, X)
    for i in range(a - b + 1):
        h = h + x1 ** i * x2 ** (a - b - i)
    return (x1 * x2) ** b * h


def schur_product_oracle(lam, mu) -> dict:
    """Expand s_lam s_mu in two variables by peeling lex-leading monomials, then cut to the 2x4 box."""
    rest = schur2(lam) * schur2(mu)
    out = {}
    while rest:
        (a, b), c = max(rest.terms.items())
        out[(a, b)] = c
        rest = rest - schur2((a, b)).scale(c)
    return {normalize_partition(nu): c for nu, c in out.items() if nu[0] <= 4}


@pytest.mark.parametrize("lam,mu", list(product(PARTS, repeat=2)))
def test_products_match_two_variable_schur_expansion(lam, mu):
    got = SchubertClass({lam: 1}) * SchubertClass({mu: 1})
    assert got.terms == schur_product_oracle(lam, mu)


def test_examples():
    assert str(SchubertClass.sigma(1) ** 8) == "14*pt"
    s1, s2 = SchubertClass.sigma(1), SchubertClass.sigma(2)
    assert s1 * s1 == SchubertClass.sigma(2) + SchubertClass.sigma(1, 1)
    assert str(s2 * s2) == "s[4] + s[3,1] + s[2,2]"
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


def test_partition_handling():
    assert normalize_partition([3]) == normalize_partition([3, 0])
    assert complement(normalize_partition([3, 1])) == normalize_partition([3, 1])
    assert complement(normalize_partition([4])) == normalize_partition([4])
    assert complement(normalize_partition([])) == normalize_partition([4, 4])
    assert len(PARTS) == 15
    for bad in ([5], [1, 3], [-1], [1, 1, 1]):
        with pytest.raises(ValueError):
            normalize_partition(bad)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        SchubertClass.sigma(1) + SchubertClass.sigma(1, ambient=(2, 5))


def test_pieri_agrees_with_lr():
    for p in range(1, 5):
        for lam in PARTS:
            a = SchubertClass({lam: 1})
            assert pieri(p, a) == a * SchubertClass.sigma(p)


def test_sym_power_chern_small_cases():
    assert sym_power_chern(1)[1] == taut("e1") and sym_power_chern(1)[2] == taut("e2")
    assert sym_power_chern(2)[3] == taut("4*e1*e2")
    assert str(sym_power_chern(3)[4]) == "18*e1^2*e2 + 9*e2^2"


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_sym_power_chern_against_roots(d):
    a, b, e1, e2 = sympy.symbols("a b e1 e2")
    total = sympy.prod([1 + i * a + (d - i) * b for i in range(d + 1)])
    poly = sympy.Poly(sympy.expand(total), a, b)
    for deg, piece in sym_power_chern(d).items():
        ours = sympy.sympify(str(piece).replace("^", "**"), {"e1": e1, "e2": e2})
        in_roots = sympy.expand(ours.subs({e1: a + b, e2: a * b}, simultaneous=True))
        theirs = sum(c * a ** i * b ** j for (i, j), c in poly.terms() if i + j == deg)
        assert sympy.expand(in_roots - theirs) == 0


def test_whitney_identities():
    assert whitney_sigma2() == taut("e1^2 - e2")
    assert whitney_sigma(3) == taut("e1^3 - 2*e1*e2")
    for i in range(1, 5):
        assert taut_to_schubert(whitney_sigma(i)) == SchubertClass.sigma(i)
    # c(U) c(Q) = 1 in every degree
    cu = [taut("1"), taut("-e1"), taut("e2")]
    for n in range(1, 5):
        total = sum((cu[j] * whitney_sigma(n - j) for j in range(3) if n - j >= 0), taut("0"))
        assert total.is_zero()


def test_class_of_F():
    from fanolines.schubert import class_of_F, class_of_F_by_sigmas
    F = class_of_F()
    assert str(F) == "18*s[3,1] + 27*s[2,2]"
    assert F == class_of_F_by_sigmas()
    assert integrate_G(F * SchubertClass.sigma(1) ** 4) == 108


classes = st.sampled_from(PARTS).map(lambda lam: SchubertClass({lam: 1}))


@settings(max_examples=100, deadline=None)
@given(classes, classes, classes)
def test_lr_ring_properties(a, b, c):
    ab = a * b
    assert all(v >= 0 and v.denominator == 1 for v in ab.terms.values())
    assert ab == b * a
    assert ab * c == a * (b * c)
    assert a * SchubertClass.one() == a


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(PARTS), st.sampled_from(PARTS))
def test_duality(lam, mu):
    if sum(lam) + sum(mu) != 8:
        return
    val = integrate_G(SchubertClass({lam: 1}) * SchubertClass({mu: 1}))
    assert val == (1 if mu == complement(lam) else 0)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(PARTS), st.integers(-5, 5)), max_size=4), classes)
def test_products_distribute(items, c):
    a = SchubertClass({lam: Fraction(k) for lam, k in items}) if items else SchubertClass({})
    b = SchubertClass.sigma(1) * 3
    assert (a + b) * c == a * c + b * c
