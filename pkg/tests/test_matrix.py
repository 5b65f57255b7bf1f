import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fanolines.core.matrix import (DimensionError, PolyMatrix, cofactor_determinant, determinant,
                                   generic_rank, jacobian, minor_index_sets, minors, nullspace,
                                   rank_at, rank_rational)
from fanolines.core.poly import Poly, parse_poly

KL = ("kappa", "lambda")


def test_identity_determinant():
    one, zero = Poly.const(1), Poly.const(0)
    m = PolyMatrix.from_rows([[one if i == j else zero for j in range(3)] for i in range(3)])
    assert determinant(m) == 1


def test_two_by_two_determinant():
    k, l = Poly.gens(KL)
    m = PolyMatrix.from_rows([[k, l], [l, k]])
    assert determinant(m) == k ** 2 - l ** 2


def test_zero_pivot_needs_row_swap():
    x, y = Poly.gens("x y")
    zero = Poly.const(0, ("x", "y"))
    m = PolyMatrix.from_rows([[zero, x, y], [x, zero, y], [y, x, zero]])
    assert determinant(m) == cofactor_determinant(m)
    assert determinant(m) == x * x * y + x * y * y


def test_nonsquare_determinant_rejected():
    with pytest.raises(DimensionError):
        determinant(PolyMatrix.from_rows([[Poly.const(1), Poly.const(2)]]))


def test_minor_count_and_order():
    assert len(list(minor_index_sets(10, 12, 10))) == 66
    x = Poly.var("x")
    m = PolyMatrix.from_rows([[x, Poly.const(0, ("x",)), Poly.const(1, ("x",))],
                              [Poly.const(1, ("x",)), x, Poly.const(0, ("x",))]])
    assert minors(m, 2) == [x ** 2, Poly.const(-1, ("x",)), -x]


def test_jacobian_and_ranks():
    x, y = Poly.gens("x y")
    J = jacobian([x * x + y, x * y], ("x", "y"))
    assert J.to_rows() == [[2 * x, Poly.const(1, ("x", "y"))], [y, x]]
    assert generic_rank(J) == 2
    assert rank_at(J, {"x": 0, "y": 0}) == 1
    assert rank_at(jacobian([x * x, y * y], ("x", "y")), (0, 0)) == 0


def test_rational_rank_and_nullspace():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank_rational(rows) == 2
    ker = nullspace(rows, 3)
    assert len(ker) == 1
    assert all(sum(Fraction(a) * b for a, b in zip(r, ker[0])) == 0 for r in rows)


def _random_matrix(rng: random.Random, n: int) -> PolyMatrix:
    vars = ("x", "y")
    def entry():
        c0, c1, c2 = (rng.randint(-3, 3) for _ in range(3))
        return parse_poly(f"{c0} + {c1}*x + {c2}*y", vars)
    return PolyMatrix.from_rows([[entry() for _ in range(n)] for _ in range(n)], vars)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_bareiss_matches_cofactor_expansion(n, seed):
    m = _random_matrix(random.Random(seed), n)
    assert determinant(m) == cofactor_determinant(m)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(0, 10 ** 6))
def test_row_swap_flips_sign(n, seed):
    m = _random_matrix(random.Random(seed), n)
    perm = list(range(n))
    perm[0], perm[1] = perm[1], perm[0]
    assert determinant(m.permute_rows(perm)) == -determinant(m)
    assert determinant(m.transpose()) == determinant(m)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6), st.dictionaries(st.sampled_from("xy"), st.integers(-5, 5),
                                                                  min_size=2, max_size=2))
def test_determinant_commutes_with_evaluation(n, seed, point):
    m = _random_matrix(random.Random(seed), n)
    numeric = m.evaluate(point)
    assert determinant(m).evaluate(point) == cofactor_determinant(PolyMatrix.from_rows(
        [[Poly.const(v) for v in row] for row in numeric]))
