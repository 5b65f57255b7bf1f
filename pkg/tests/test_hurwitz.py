from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fanolines import chow, hurwitz
from fanolines.core.poly import Poly
from fanolines.hurwitz import (DivisorAnsatz, HurwitzTable, InconsistentAnsatz, M4Class, mumford_pair,
                               pairing_R, pairing_Rprime, solve_ansatz, to_I_class)


def test_pairings():
    assert pairing_R() == M4Class(96, -10)
    assert pairing_Rprime() == M4Class(456, -52)
    assert str(pairing_R()) == "96*lambda - 10*delta0"
    assert str(pairing_Rprime()) == "456*lambda - 52*delta0"


def test_ansatz_solutions():
    r = solve_ansatz(pairing_R(), hurwitz.FIBER_POINTS)
    rp = solve_ansatz(pairing_Rprime(), hurwitz.FIBER_POINTS)
    assert r.as_tuple() == (4, 8, -1)
    assert rp.as_tuple() == (4, 68, -8)
    assert str(rp) == "(4, 68, -8)"


def test_images_in_I_match_blowup_route():
    assert hurwitz.appendix_R() == chow.class_R()
    assert hurwitz.appendix_Rprime() == chow.class_Rprime()
    assert str(to_I_class(DivisorAnsatz(4, 8, -1))) == "4*H_F + l"


def test_pullback_of_moduli_classes():
    assert M4Class(1, 0).pullback() == chow.XClass(9, 1)
    assert M4Class(0, 1).pullback() == chow.XClass(75, 1)
    # the D3 divisor 2(132 lambda - 15 delta0) pulls back to 126 H_X
    assert (M4Class(132, -15) * 2).pullback() == chow.d3_pullback()


@pytest.mark.parametrize("n0", [1, 3, 24, Fraction(7, 2)])
def test_independent_of_cover_count(n0):
    n = Poly.const(n0, ("N0",))
    assert pairing_R(n0=n) == pairing_R()
    assert pairing_Rprime(n0=n) == pairing_Rprime()


def test_bad_fiber_count_rejected():
    with pytest.raises(InconsistentAnsatz):
        solve_ansatz(pairing_R(), 25)


def test_pairing_tracks_table_entries():
    # the table is an input, so changing an entry changes the pairing
    t = HurwitzTable(push_psi=M4Class(360, -41))
    assert pairing_R(t) != pairing_R()


ansatz = st.builds(DivisorAnsatz, st.integers(-20, 20),
                   st.fractions(min_value=-50, max_value=50, max_denominator=6),
                   st.fractions(min_value=-50, max_value=50, max_denominator=6))


@settings(max_examples=200, deadline=None)
@given(ansatz)
def test_solve_inverts_mumford_pairing(a):
    assert solve_ansatz(mumford_pair(a), 6 * a.a) == a


@settings(max_examples=100, deadline=None)
@given(ansatz, ansatz)
def test_to_I_class_is_linear(a, b):
    s = DivisorAnsatz(a.a + b.a, a.b + b.b, a.c + b.c)
    assert to_I_class(s) == to_I_class(a) + to_I_class(b)


def test_intermediate_combination():
    assert M4Class(9, -1) * 40 - M4Class(132, -15) * 2 == pairing_R()
    half_psi = hurwitz.HURWITZ_TABLE.push_psi * Fraction(1, 2)
    assert half_psi == M4Class(9, -1) * 20
