"""Divisor classes on the genus-4 moduli space from admissible-cover pushforwards.

Only the Hodge class lambda and the irreducible boundary delta_0 are tracked;
the other boundary components pull back to zero on X and are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chow import IClass, XClass, class_W, lambda_class, omega_p
from .core.poly import Poly, Scalar, exact_div

GENUS = 4
FIBER_POINTS = 24  # ramification points of the two g^1_3 on a fiber


class InconsistentAnsatz(ValueError):
    pass


@dataclass(frozen=True)
class M4Class:
    lam: Fraction = Fraction(0)
    del0: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "del0", Fraction(self.del0))

    def __add__(self, other):
        return M4Class(self.lam + other.lam, self.del0 + other.del0)

    def __sub__(self, other):
        return M4Class(self.lam - other.lam, self.del0 - other.del0)

    def __mul__(self, k):
        return M4Class(self.lam * k, self.del0 * k)

    __rmul__ = __mul__

    def pullback(self) -> XClass:
        """Pull back along the moduli map of the family of curves C_x."""
        return lambda_class() * self.lam + class_W() * self.del0

    def __str__(self):
        return _linear_str([(self.lam, "lambda"), (self.del0, "delta0")])


def _linear_str(items) -> str:
    out = ""
    for c, name in items:
        if not c:
            continue
        a = abs(c)
        num = "" if a == 1 else (str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}") + "*"
        body = num + name
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


@dataclass(frozen=True)
class DivisorAnsatz:
    """a*omega + b*pi^*lambda + c*pi^*delta_0 on the universal curve."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for f in ("a", "b", "c"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    def as_tuple(self):
        return (self.a, self.b, self.c)

    def __str__(self):
        return "(" + ", ".join(_frac(x) for x in self.as_tuple()) + ")"


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# pushforward table, with the number of covers N0 kept as a formal symbol

N0 = Poly.var("N0")


class _M4Poly:
    """lambda/delta_0 combination with coefficients polynomial in N0."""

    def __init__(self, lam: Poly, del0: Poly):
        self.lam = lam
        self.del0 = del0

    def __add__(self, other):
        return _M4Poly(self.lam + other.lam, self.del0 + other.del0)

    def __sub__(self, other):
        return _M4Poly(self.lam - other.lam, self.del0 - other.del0)

    def __mul__(self, k):
        return _M4Poly(self.lam * k, self.del0 * k)

    __rmul__ = __mul__

    def divide_by(self, p: Poly) -> "_M4Poly":
        return _M4Poly(exact_div(self.lam, p), exact_div(self.del0, p))

    def to_class(self) -> M4Class:
        if not (self.lam.is_constant() and self.del0.is_constant()):
            raise InconsistentAnsatz(f"N0 does not cancel: {self.lam}, {self.del0}")
        return M4Class(self.lam.constant_value(), self.del0.constant_value())


@dataclass(frozen=True)
class HurwitzTable:
    """Per-cover pushforwards of psi, 2E_3 and E_0 to the moduli space."""

    push_psi: M4Class = M4Class(360, -40)
    push_2E3: M4Class = M4Class(132, -15)
    push_E0: M4Class = M4Class(0, Fraction(1, 2))

    def scaled(self, which: str, n0: Poly = N0) -> _M4Poly:
        c = getattr(self, which)
        return _M4Poly(n0 * c.lam, n0 * c.del0)


HURWITZ_TABLE = HurwitzTable()


def combine(terms, n0: Poly = N0) -> M4Class:
    """(2/N0) * sum(coeff * table entry); N0 must cancel exactly."""
    total = _M4Poly(Poly.const(0, ("N0",)), Poly.const(0, ("N0",)))
    for coeff, entry in terms:
        total = total + entry * coeff
    return (total * 2).divide_by(n0).to_class()


def pairing_R(table: HurwitzTable = HURWITZ_TABLE, n0: Poly = N0) -> M4Class:
    # R restricted to a fiber: half the psi-pushforward minus 2E_3
    return combine([(Fraction(1, 2), table.scaled("push_psi", n0)),
                    (-1, table.scaled("push_2E3", n0))], n0)


def pairing_Rprime(table: HurwitzTable = HURWITZ_TABLE, n0: Poly = N0) -> M4Class:
    return combine([(1, table.scaled("push_psi", n0)),
                    (-2, table.scaled("push_E0", n0)),
                    (-1, table.scaled("push_2E3", n0))], n0)


def mumford_pair(ansatz: DivisorAnsatz, genus: int = GENUS) -> M4Class:
    """Push forward ansatz * omega: kappa = 12 lambda - delta_0, and pi_*omega = 2g - 2."""
    k = 2 * genus - 2
    return M4Class(12 * ansatz.a + k * ansatz.b, -ansatz.a + k * ansatz.c)


def solve_ansatz(target: M4Class, fiber_points: Scalar, genus: int = GENUS) -> DivisorAnsatz:
    k = 2 * genus - 2
    fiber_points = Fraction(fiber_points)
    if fiber_points % k:
        raise InconsistentAnsatz(f"{fiber_points} points on a fiber is not a multiple of 2g-2 = {k}")
    a = fiber_points / k
    b = (target.lam - 12 * a) / k
    c = (target.del0 + a) / k
    sol = DivisorAnsatz(a, b, c)
    if mumford_pair(sol, genus) != target:
        raise InconsistentAnsatz(f"no ansatz reproduces {target}")
    return sol


def to_I_class(ansatz: DivisorAnsatz) -> IClass:
    """a*omega_p + b*p^*lambda + c*p^*[W], with p^*H_X = l."""
    l = IClass.l()
    lam = lambda_class()
    W = class_W()
    if lam.power != 1 or (W.coeff and W.power != 1):
        raise ValueError("lambda and [W] must be divisor classes")
    return omega_p() * ansatz.a + l * (ansatz.b * lam.coeff + ansatz.c * W.coeff)


def appendix_R() -> IClass:
    return to_I_class(solve_ansatz(pairing_R(), FIBER_POINTS))


def appendix_Rprime() -> IClass:
    return to_I_class(solve_ansatz(pairing_Rprime(), FIBER_POINTS))
