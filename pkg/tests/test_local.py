import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from fanolines import checks, local
from fanolines.core.groebner import Inconclusive
from fanolines.core.matrix import minors
from fanolines.core.poly import Poly, parse_poly
from fanolines.local import (NormalFormData, NormalFormError, PencilPair, build_cubic, classify_pencil,
                             curve_through_point, dual_map_image, fiber_degree_check, generic_data,
                             minors_certificate, parse_scenario, residual_pencil, span_rank,
                             transversality_at_line)

LM = local.PENCIL_VARS


def _grads(rep):
    return [tuple(str(x) for x in g) for g in rep.gradients]


def test_first_type_gradients():
    rep = transversality_at_line(build_cubic("type1", generic_data("type1")))
    assert _grads(rep) == [("0", "0", "2*a", "1"), ("0", "0", "1", "0")]
    assert (rep.rank, rep.verdict) == (2, "smooth")


def test_second_type_gradients():
    rep = transversality_at_line(build_cubic("type2", generic_data("type2")))
    assert _grads(rep) == [("0", "0", "0", "2*a"), ("0", "0", "0", "1")]
    assert (rep.rank, rep.verdict) == (1, "singular")


@pytest.mark.parametrize("a", [0, 1, -3, Fraction(5, 7)])
def test_transversality_rank_at_numeric_points(a):
    assert transversality_at_line(build_cubic("type1", generic_data("type1")), a).rank == 2
    assert transversality_at_line(build_cubic("type2", generic_data("type2")), a).rank == 1


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=-5, max_value=5, max_denominator=5).filter(bool))
def test_rank_invariant_under_rescaling_the_point(t):
    for kind, expected in (("type1", 2), ("type2", 1)):
        F = build_cubic(kind, generic_data(kind))
        scaled = transversality_at_line(F, parse_poly("a").scale(t))
        assert scaled.rank == expected


def test_curve_equations_shape():
    F = build_cubic("type2", generic_data("type2"))
    eqs = curve_through_point(F, "a")
    assert eqs.T2.vars[:4] == local.SLOPE_VARS
    assert "x4" not in eqs.T2.used_vars() and "x4" not in eqs.T3.used_vars()
    with pytest.raises(NormalFormError):
        curve_through_point(build_cubic("triple", generic_data("triple")), 0)


def test_dual_map_image():
    F = build_cubic("type2", generic_data("type2"))
    img = dual_map_image(F)
    assert tuple(map(str, img)) == ("0", "0", "0", "0", "s^2", "t^2")
    assert span_rank(img) == 2


def test_support_checks():
    with pytest.raises(NormalFormError):
        build_cubic("type1", NormalFormData.build(Q0="x0^2"))
    with pytest.raises(NormalFormError):
        build_cubic("type1", NormalFormData.build(P="x2^2"))
    with pytest.raises(NormalFormError):
        build_cubic("cubic", NormalFormData())


def test_triple_line_restriction():
    data = generic_data("triple")
    F = build_cubic("triple", data)
    plane = F.poly.subs({"x3": 0, "x4": 0, "x5": 0})
    x0, x1, x2 = (Poly.var(v) for v in ("x0", "x1", "x2"))
    line = x0 * data.get("y1") + x1 * data.get("y2") - x2
    line2 = x0 * data.get("y1'") + x1 * data.get("y2'") - x2
    assert plane == data.get("c") * line ** 2 * line2
    # with y = y' = 0 the restriction is -c*x2^3
    assert plane.subs({"y1": 0, "y2": 0, "y1'": 0, "y2'": 0}) == -Poly.var("c") * x2 ** 3


@settings(max_examples=30, deadline=None)
@given(*(st.integers(-4, 4) for _ in range(5)))
def test_triple_line_restriction_numeric(c, y1, y2, z1, z2):
    data = NormalFormData.build(c=c, y1=y1, y2=y2, **{"y1'": z1, "y2'": z2})
    plane = build_cubic("triple", data).poly.subs({"x3": 0, "x4": 0, "x5": 0})
    x0, x1, x2 = (Poly.var(v) for v in ("x0", "x1", "x2"))
    assert plane == c * (y1 * x0 + y2 * x1 - x2) ** 2 * (z1 * x0 + z2 * x1 - x2)


def test_tangent_matrix_matches_printed_matrix():
    m = local.M_kappa_lambda()
    assert (m.rows, m.cols) == (10, 12)
    assert m == local.printed_M()


def test_minors_certificate():
    cert = minors_certificate()
    assert cert.minor_count == 66
    assert cert.nonzero_count == 51
    assert cert.minor_degrees == (9,)
    assert cert.only_origin and cert.verdict == "pass"
    assert (cert.kappa_power, cert.lambda_power) == (9, 9)


def test_minors_certificate_inconclusive_with_small_bound():
    with pytest.raises(Inconclusive):
        minors_certificate(power_bound=5)


def test_minors_stable_under_row_permutation():
    m = local.M_kappa_lambda()
    perm = list(range(10))
    random.Random(3).shuffle(perm)
    a = minors_certificate(m)
    b = minors_certificate(m.permute_rows(perm))
    assert (a.minor_count, a.nonzero_count, a.only_origin, a.kappa_power, a.lambda_power) == \
           (b.minor_count, b.nonzero_count, b.only_origin, b.kappa_power, b.lambda_power)


def test_minors_against_sympy():
    # rename lambda, a Python keyword, before handing expressions to sympy
    k, m = sympy.symbols("k m")
    rename = {"kappa": Poly.var("k"), "lambda": Poly.var("m")}

    def conv(p: Poly):
        return sympy.sympify(str(p.subs(rename)).replace("^", "**"), {"k": k, "m": m})

    M = sympy.Matrix([[conv(e) for e in r] for r in local.M_kappa_lambda().to_rows()])
    ours = minors(local.M_kappa_lambda(), 10)
    count = 0
    for cols, mine in zip(combinations(range(12), 10), ours):
        theirs = sympy.expand(M[:, list(cols)].det(method="berkowitz"))
        assert sympy.expand(theirs - conv(mine)) == 0
        count += theirs != 0
    assert count == 51


def test_resultant_polynomial_has_seven_terms():
    R = local.resultant_poly()
    assert len(R.terms) == 7
    x1, x2, x3, y1, y2, y3 = sympy.symbols("x1 x2 x3 y1 y2 y3")
    oracle = sympy.expand((x1 * y3 - x3 * y1) ** 2 - (x1 * y2 - x2 * y1) * (x2 * y3 - x3 * y2))
    assert len(sympy.Poly(oracle).terms()) == 7


def test_resultant_suite():
    rep = local.resultant_suite(samples=25, seed=0)
    assert rep.elimination_ok
    assert rep.singular_locus_ok
    assert rep.minors_in_jacobian_radical == (2, 2, 2)
    assert all(k == 1 for k in rep.jacobian_in_minors_radical)
    assert rep.branch_check_ok
    assert sum(s.dedicated for s in rep.samples) == 2
    assert len(rep.samples) == 27


def test_resultant_suite_without_samples():
    rep = local.resultant_suite(samples=0)
    assert rep.branch_check_ok is None and rep.samples == ()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_branch_samples_for_any_seed(seed):
    t, x, roots = local.sample_branch_point(random.Random(seed))
    assert local.check_branch_point(t, x, roots).ok


def test_pencil_examples():
    lam, mu = Poly.gens(LM)
    assert classify_pencil(PencilPair(lam ** 2, mu ** 2)).common_roots == 0
    assert classify_pencil(PencilPair(lam * mu, lam ** 2)).common_roots == 1
    two = classify_pencil(PencilPair(lam * mu, -lam * mu))
    assert two.common_roots == 2 and not two.double_root
    with pytest.raises(NormalFormError):
        PencilPair(Poly.const(0, LM), Poly.const(0, LM))


def test_residual_pencil_from_data():
    data = NormalFormData.build(Q0="x2^2 + x4*x5", Q1="x3^2 + x2*x5")
    p = residual_pencil(data)
    assert str(p.Q0) == "lam^2" and str(p.Q1) == "mu^2"


def test_pencil_classification_agrees_with_root_oracle():
    rng = random.Random(0)
    for q0, q1 in checks.random_pencils(rng, 500):
        got = classify_pencil(PencilPair(q0, q1))
        assert (got.common_roots, got.double_root) == checks.root_set_oracle(q0, q1)


def test_fiber_degree():
    lam, mu = Poly.gens(LM)
    p = PencilPair(lam ** 2, mu ** 2)
    assert fiber_degree_check(p, (1, 0)) == (2, "double")
    assert fiber_degree_check(p, (1, 1)) == (2, "simple")
    assert fiber_degree_check(p, (1, -1)) == (2, "simple")


def test_degree_225():
    assert local.degree_225_check() == (225, 75)


SCENARIO = """
# a second-type line with a generic residual pencil
kind = type2full
Q0 = x2^2 + x3*x4
Q1 = x3^2 - x2*x5
P = x4^3 + x5^3
c0 = 1
d1 = 1
a = 2
point = 1:3
"""


def test_parse_scenario():
    kind, data, settings_ = parse_scenario(SCENARIO)
    assert kind == "type2full"
    assert data.Q0 == parse_poly("x2^2 + x3*x4")
    assert data.get("c0") == 1 and data.get("d0") == 0
    assert settings_ == {"a": "2", "point": "1:3"}
    F = build_cubic(kind, data)
    assert F.poly.coefficient({"x4": 1, "x0": 2}) == 1


@pytest.mark.parametrize("text", ["kind = cubic", "Q0 = x2 +", "just words", " = 3"])
def test_parse_scenario_errors(text):
    with pytest.raises(ValueError):
        parse_scenario(text)
