"""Chow-ring models for the cubic fourfold X, its Fano variety of lines F, the
universal line I = P(U_F) and the blow-up of F along the second-type surface S.

Classes on F live in the subring generated by the hyperplane class H_F and
c2 = c_2(U_F); they are integrated by transfer to G(2,6) against the class of
F.  Classes on I are reduced to alpha + l*beta via the projective-bundle
relation l^2 = l*H_F - c2.  Classes on X are rational multiples of powers of
H_X.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .core.poly import Poly, Scalar, as_poly
from .schubert import SchubertClass, class_of_F, integrate_G

F_VARS = ("H_F", "c2")
F_WEIGHTS = {"H_F": 1, "c2": 2}
BL_VARS = ("H", "E", "c2")
BL_WEIGHTS = {"H": 1, "E": 1, "c2": 2}
DIM_F = 4
CUBIC_DEGREE = 3  # integral of H_X^4


class DegreeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# F


@lru_cache(maxsize=None)
def _F_schubert() -> SchubertClass:
    return class_of_F()


@lru_cache(maxsize=None)
def _monomial_integral(a: int, b: int) -> Fraction:
    s1 = SchubertClass.sigma(1)
    s11 = SchubertClass.sigma(1, 1)
    return integrate_G(_F_schubert() * s1 ** a * s11 ** b)


def _truncate(p: Poly, weights, top: int) -> Poly:
    w = [weights[v] for v in p.vars]
    return Poly._raw(p.vars, {e: c for e, c in p.terms.items()
                              if sum(x * y for x, y in zip(w, e)) <= top})


class FClass:
    """Element of the H_F, c2 subring of CH(F) with rational coefficients.

    Equality is numerical: in degrees 3 and 4 the model is one-dimensional and
    classes are compared through their pairings with H_F.
    """

    __slots__ = ("poly",)

    def __init__(self, poly: Poly | str | Scalar = 0):
        p = as_poly(poly, F_VARS)
        self.poly = _truncate(p.with_vars(F_VARS), F_WEIGHTS, DIM_F)

    @classmethod
    def g(cls) -> "FClass":
        return cls(Poly.var("H_F", F_VARS))

    @classmethod
    def c(cls) -> "FClass":
        return cls(Poly.var("c2", F_VARS))

    @classmethod
    def point(cls) -> "FClass":
        """Class of a point, expressed as (1/108) H_F^4."""
        return cls.g() ** 4 * Fraction(1, 108)

    def parts(self) -> dict[int, Poly]:
        return self.poly.homogeneous_parts(weights=F_WEIGHTS)

    def degree(self) -> int:
        """Homogeneous degree, -1 for zero; raises on mixed classes."""
        parts = [d for d, p in self.parts().items() if p]
        if not parts:
            return -1
        if len(parts) > 1:
            raise DegreeError(f"{self} is not homogeneous")
        return parts[0]

    def part(self, d: int) -> "FClass":
        return FClass(self.parts().get(d, Poly.const(0, F_VARS)))

    def __add__(self, other):
        return FClass(self.poly + _fpoly(other))

    __radd__ = __add__

    def __neg__(self):
        return FClass(-self.poly)

    def __sub__(self, other):
        return FClass(self.poly - _fpoly(other))

    def __rsub__(self, other):
        return FClass(_fpoly(other) - self.poly)

    def __mul__(self, other):
        if isinstance(other, (IClass, BlClass)):
            return NotImplemented
        return FClass(self.poly * _fpoly(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return FClass(self.poly ** n)

    def normal_form(self) -> Poly:
        out = Poly.const(0, F_VARS)
        g = Poly.var("H_F", F_VARS)
        for d, p in self.parts().items():
            if d <= 2:
                out = out + p
            elif d == 3:
                out = out + (g ** 3).scale(integrate_F(FClass(p) * FClass.g()) / 108)
            elif d == 4:
                out = out + (g ** 4).scale(integrate_F(FClass(p)) / 108)
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly, str)):
            other = FClass(other)
        if not isinstance(other, FClass):
            return NotImplemented
        return self.normal_form() == other.normal_form()

    def __hash__(self):
        return hash(self.normal_form())

    def __str__(self):
        return self.normal_form().format()

    def __repr__(self):
        return f"FClass({self})"


def _fpoly(x) -> Poly:
    if isinstance(x, FClass):
        return x.poly
    return as_poly(x, F_VARS).with_vars(F_VARS)


def integrate_F(a: FClass) -> Fraction:
    """Degree of a degree-4 class, by transfer to G(2,6) against [F]."""
    if not isinstance(a, FClass):
        a = FClass(a)
    d = a.degree()
    if d == -1:
        return Fraction(0)
    if d != DIM_F:
        raise DegreeError(f"integrate_F needs degree 4, got degree {d}")
    return sum((c * _monomial_integral(e[0], e[1]) for e, c in a.poly.terms.items()), Fraction(0))


# ---------------------------------------------------------------------------
# I = P(U_F)


class IClass:
    """alpha + l*beta with alpha, beta in the F model (l = O(1) = p^*H_X)."""

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha=0, beta=0):
        self.alpha = alpha if isinstance(alpha, FClass) else FClass(alpha)
        self.beta = beta if isinstance(beta, FClass) else FClass(beta)

    @classmethod
    def l(cls) -> "IClass":
        return cls(0, 1)

    def __add__(self, other):
        other = _iclass(other)
        return IClass(self.alpha + other.alpha, self.beta + other.beta)

    __radd__ = __add__

    def __neg__(self):
        return IClass(-self.alpha, -self.beta)

    def __sub__(self, other):
        return self + (-_iclass(other))

    def __rsub__(self, other):
        return _iclass(other) - self

    def __mul__(self, other):
        other = _iclass(other)
        a1, b1, a2, b2 = self.alpha, self.beta, other.alpha, other.beta
        bb = b1 * b2
        # l^2 = l*H_F - c2
        return IClass(a1 * a2 - FClass.c() * bb, a1 * b2 + b1 * a2 + FClass.g() * bb)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = IClass(1)
        for _ in range(n):
            out = out * self
        return out

    def degree(self) -> int:
        da = self.alpha.degree()
        db = self.beta.degree()
        if db >= 0:
            db += 1
        degs = {d for d in (da, db) if d >= 0}
        if not degs:
            return -1
        if len(degs) > 1:
            raise DegreeError(f"{self} is not homogeneous")
        return degs.pop()

    def l_coefficient(self) -> FClass:
        return self.beta

    def display_poly(self) -> Poly:
        vars = ("H_F", "c2", "l")
        l = Poly.var("l", vars)
        return self.alpha.normal_form().with_vars(vars) + l * self.beta.normal_form().with_vars(vars)

    def as_l_quadratic(self) -> Poly:
        """Rewrite pulled-back c2 as l*H_F - l^2 (valid on I) for display."""
        vars = ("H_F", "c2", "l")
        g, c, l = Poly.gens(vars)
        return self.display_poly().subs({"c2": l * g - l ** 2}).with_vars(("H_F", "l"))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FClass)):
            other = _iclass(other)
        if not isinstance(other, IClass):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __str__(self):
        return self.display_poly().format()

    def __repr__(self):
        return f"IClass({self})"


def _iclass(x) -> IClass:
    if isinstance(x, IClass):
        return x
    if isinstance(x, FClass):
        return IClass(x, 0)
    return IClass(FClass(x), 0)


def grothendieck_reduce(raw: Mapping[int, FClass | Scalar] | Poly) -> IClass:
    """Reduce a polynomial in l with F-coefficients to alpha + l*beta.

    ``raw`` maps l-exponents to coefficients, or is a Poly in l, H_F, c2.
    """
    if isinstance(raw, Poly):
        coeffs = {e[0]: FClass(c) for e, c in raw.coefficients_in(("l",)).items()}
    else:
        coeffs = {k: v if isinstance(v, FClass) else FClass(v) for k, v in raw.items()}
    out = IClass()
    for k, c in coeffs.items():
        out = out + IClass(c) * IClass.l() ** k
    return out


def q_pull(a: FClass) -> IClass:
    return IClass(a, 0)


def q_push(a: IClass) -> FClass:
    return a.beta


def transfer(d: int) -> FClass:
    """q_* of l^d, i.e. the class swept by lines meeting a codimension-d linear section."""
    return q_push(IClass.l() ** d)


TRANSFER_TABLE = {0: FClass(0), 1: FClass(1), 2: FClass("H_F"), 3: FClass("H_F^2 - c2"),
                  4: FClass("1/6*H_F^3")}


def integrate_I(a: IClass) -> Fraction:
    return integrate_F(q_push(a))


# ---------------------------------------------------------------------------
# X


class XClass:
    """r * H_X^d on the cubic fourfold."""

    __slots__ = ("coeff", "power")

    def __init__(self, coeff: Scalar = 0, power: int = 0):
        if not 0 <= power <= 4:
            raise DegreeError(f"H_X power {power} out of range")
        self.coeff = Fraction(coeff)
        self.power = power

    def __add__(self, other):
        if not isinstance(other, XClass):
            return NotImplemented
        if not self.coeff:
            return other
        if not other.coeff:
            return self
        if self.power != other.power:
            raise DegreeError("adding classes of different degree")
        return XClass(self.coeff + other.coeff, self.power)

    def __neg__(self):
        return XClass(-self.coeff, self.power)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return XClass(self.coeff * other, self.power)
        if isinstance(other, XClass):
            if self.power + other.power > 4:
                return XClass(0, 0)
            return XClass(self.coeff * other.coeff, self.power + other.power)
        return NotImplemented

    __rmul__ = __mul__

    def integrate(self) -> Fraction:
        return self.coeff * CUBIC_DEGREE if self.power == 4 else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, XClass):
            return NotImplemented
        if not self.coeff and not other.coeff:
            return True
        return (self.coeff, self.power) == (other.coeff, other.power)

    def __hash__(self):
        return hash((self.coeff, self.power if self.coeff else 0))

    def __str__(self):
        if not self.coeff:
            return "0"
        c = self.coeff
        num = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        if self.power == 0:
            return num
        mono = "H_X" if self.power == 1 else f"H_X^{self.power}"
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{num}*{mono}"

    __repr__ = __str__


def _p_push_pulled(alpha: FClass) -> XClass:
    """p_* q^* alpha for homogeneous alpha, through the adjoint pairing with H_X."""
    k = alpha.degree()
    if k <= 0:
        return XClass(0, 0)
    m = integrate_F(alpha * transfer(5 - k)) / CUBIC_DEGREE
    return XClass(m, k - 1)


def p_push(a: IClass) -> XClass:
    """Push a homogeneous class from I to X; l-multiples use l = p^*H_X."""
    k = a.degree()
    if k == -1:
        return XClass(0, 0)
    if k > 5:
        raise DegreeError(f"degree {k} exceeds dim I = 5")
    out = _p_push_pulled(a.alpha)
    if a.beta.degree() >= 0:
        out = out + XClass(1, 1) * _p_push_pulled(a.beta)
    return out


# ---------------------------------------------------------------------------
# named classes


def class_S() -> FClass:
    """Surface of second-type lines: 5 c_2(Q_F) = 5 (H_F^2 - c2)."""
    return FClass("5*H_F^2 - 5*c2")


def omega_p() -> IClass:
    """c_1 of the relative dualizing sheaf of p: I -> X."""
    return q_pull(FClass.g()) + IClass.l()


def class_W() -> XClass:
    return p_push(q_pull(class_S()))


def lambda_class() -> XClass:
    """Hodge class of the family of curves C_x, via Mumford: 12 lambda = kappa + delta."""
    w = omega_p()
    return (p_push(w * w) + class_W()) * Fraction(1, 12)


def beta_class() -> FClass:
    """Class of lines meeting a general line, normalised by beta*H_F = 3."""
    return FClass.g() ** 3 * Fraction(3, integrate_F(FClass.g() ** 4))


def class_Cx() -> FClass:
    """q_* of the curve of lines through a point: (1/3) q_* p^* H_X^4."""
    return transfer(4) * Fraction(1, CUBIC_DEGREE)


# ---------------------------------------------------------------------------
# the blow-up of F along S


@dataclass(frozen=True)
class NormalBundleData:
    """Numerical data of the normal bundle of S in F.

    c1N is the multiple of H_S giving c_1(N), c2N the degree of c_2(N), and
    HS2 the degree of H_S^2 = H_F^2 [S].
    """

    c1N: Fraction = Fraction(3)
    c2N: Fraction = Fraction(1125)
    HS2: Fraction = Fraction(315)

    def consistent(self) -> bool:
        return integrate_F(FClass.g() ** 2 * class_S()) == self.HS2


NORMAL_BUNDLE = NormalBundleData()


class BlClass:
    """Polynomial in H = pi^*H_F, E = E_S and c2 = pi^*c_2(U_F), truncated above degree 4."""

    __slots__ = ("poly",)

    def __init__(self, poly: Poly | str | Scalar = 0):
        p = as_poly(poly, BL_VARS).with_vars(BL_VARS)
        self.poly = _truncate(p, BL_WEIGHTS, DIM_F)

    @classmethod
    def H(cls):
        return cls(Poly.var("H", BL_VARS))

    @classmethod
    def E(cls):
        return cls(Poly.var("E", BL_VARS))

    @classmethod
    def c2(cls):
        return cls(Poly.var("c2", BL_VARS))

    @classmethod
    def pull(cls, a: FClass) -> "BlClass":
        return cls(a.poly.subs({"H_F": Poly.var("H", BL_VARS)}).with_vars(BL_VARS))

    def __add__(self, other):
        return BlClass(self.poly + _blpoly(other))

    __radd__ = __add__

    def __neg__(self):
        return BlClass(-self.poly)

    def __sub__(self, other):
        return BlClass(self.poly - _blpoly(other))

    def __rsub__(self, other):
        return BlClass(_blpoly(other) - self.poly)

    def __mul__(self, other):
        return BlClass(self.poly * _blpoly(other))

    __rmul__ = __mul__

    def __pow__(self, n):
        return BlClass(self.poly ** n)

    def subs(self, mapping) -> "BlClass":
        return BlClass(self.poly.subs({k: _blpoly(v) for k, v in mapping.items()}))

    def degree(self) -> int:
        parts = [d for d, p in self.poly.homogeneous_parts(weights=BL_WEIGHTS).items() if p]
        if not parts:
            return -1
        if len(parts) > 1:
            raise DegreeError(f"{self} is not homogeneous")
        return parts[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, str, Poly)):
            other = BlClass(other)
        if not isinstance(other, BlClass):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return self.poly.format()

    def __repr__(self):
        return f"BlClass({self})"


def _blpoly(x) -> Poly:
    if isinstance(x, BlClass):
        return x.poly
    if isinstance(x, FClass):
        return BlClass.pull(x).poly
    return as_poly(x, BL_VARS).with_vars(BL_VARS)


def segre_pushforward(k: int, nb: NormalBundleData = NORMAL_BUNDLE) -> FClass:
    """pi_*(E^k) as a class on F, for k >= 0.

    For k >= 2 this is (-1)^(k-1) i_* s_{k-2}(N), with Segre classes
    s_0 = 1, s_1 = -c_1, s_2 = c_1^2 - c_2 of the normal bundle.
    """
    S = class_S()
    g = FClass.g()
    if k == 0:
        return FClass(1)
    if k == 1:
        return FClass(0)
    sign = -1 if k % 2 == 0 else 1
    if k == 2:
        return S * sign
    if k == 3:
        return g * S * (-nb.c1N) * sign
    if k == 4:
        return (g * g * S * (nb.c1N ** 2) - FClass.point() * nb.c2N) * sign
    return FClass(0)


def bl_push(a: BlClass, nb: NormalBundleData = NORMAL_BUNDLE) -> FClass:
    """pi_* from the blow-up to F."""
    out = FClass(0)
    for (h, e, c), coeff in a.poly.terms.items():
        base = FClass.g() ** h * FClass.c() ** c * coeff
        out = out + base * segre_pushforward(e, nb)
    return out


def blowup_eval(m: BlClass, nb: NormalBundleData = NORMAL_BUNDLE) -> Fraction:
    d = m.degree()
    if d == -1:
        return Fraction(0)
    if d != DIM_F:
        raise DegreeError(f"blowup_eval needs degree 4, got {d}")
    return integrate_F(bl_push(m, nb))


def blowup_table(nb: NormalBundleData = NORMAL_BUNDLE) -> dict[str, Fraction]:
    H, E = BlClass.H(), BlClass.E()
    return {f"H^{4 - k}*E^{k}": blowup_eval(H ** (4 - k) * E ** k, nb) for k in range(5)}


# ---------------------------------------------------------------------------
# the triple-line locus V and the curve C = S cap V


@dataclass(frozen=True)
class VPipeline:
    c2_U3: BlClass
    c1_Q: BlClass
    c1_QG: BlClass
    c2_U2: BlClass
    tildeV: BlClass
    V: FClass


def class_V_pipeline() -> VPipeline:
    """Class of the strict transform of V and of V itself.

    The strict transform is the degeneracy locus c_2 of a twisted rank-2
    bundle on the blow-up.  Inputs are the first Chern classes of the
    tautological bundles pulled back along the three maps to the blow-up.
    """
    H, E, c = BlClass.H(), BlClass.E(), BlClass.c2()
    c1_U3 = -3 * H + E
    c1_U2_second = -7 * H + 3 * E
    c1_U2_first = -H
    c2_U2_first = c

    # 0 -> U2 (first) -> U3 -> Q -> 0
    c1_Q = c1_U3 - c1_U2_first
    c2_U3 = c2_U2_first + c1_U2_first * c1_Q
    # 0 -> U2 (second) -> U3 -> Q_G -> 0
    c1_QG = c1_U3 - c1_U2_second
    c2_U2 = c2_U3 - c1_U2_second * c1_QG
    # c_2(U2^dual (x) Q) = c_2 + c_1(U2^dual) c_1(Q) + c_1(Q)^2
    tildeV = c2_U2 + (-c1_U2_second) * c1_Q + c1_Q * c1_Q
    return VPipeline(c2_U3, c1_Q, c1_QG, c2_U2, tildeV, bl_push(tildeV))


def class_V() -> FClass:
    return class_V_pipeline().V


def restriction_E_on_tildeV() -> BlClass:
    """On the strict transform both pulled-back U2 agree, so -H = -7H + 3E gives E = 2H."""
    H = BlClass.H()
    # -H = -7H + 3E  <=>  3E = 6H
    return H * 2


CANONICAL_TILDE_V = BlClass("3*H")


@dataclass(frozen=True)
class CurveData:
    C_in_S_coeff: Fraction
    C_class: FClass
    C_beta_pairing: Fraction
    adjunction_tildeC: Fraction
    g_tildeC: Fraction
    adjunction_C: Fraction
    g_C: Fraction
    nodes: Fraction


def class_C_and_genera(nb: NormalBundleData = NORMAL_BUNDLE) -> CurveData:
    tv = class_V_pipeline().tildeV
    E = BlClass.E()
    C_class = bl_push(tv * E, nb)
    # C = 6 H_S: read off the multiple of H_F [S]
    gS = FClass.g() * class_S()
    coeff = integrate_F(C_class * FClass.g()) / integrate_F(gS * FClass.g())
    E_res = restriction_E_on_tildeV()
    curve = E_res  # the curve on the strict transform is E restricted
    adj_class = curve * (curve + CANONICAL_TILDE_V)
    adj_tilde = blowup_eval(adj_class * tv, nb)
    g_tilde = adj_tilde / 2 + 1
    # on S: C = coeff * H_S, K_S = c_1(N) = c1N * H_S since K_F = 0
    adj_C = coeff * (coeff + nb.c1N) * nb.HS2
    g_C = adj_C / 2 + 1
    return CurveData(coeff, C_class, integrate_F(C_class * FClass.g()), adj_tilde, g_tilde,
                     adj_C, g_C, g_C - g_tilde)


# ---------------------------------------------------------------------------
# maps and divisors on I


def d3_pullback() -> XClass:
    """j^*[D_3] for the divisor 2(132 lambda - 15 delta_0), with delta_0 -> [W]."""
    return (lambda_class() * 132 - class_W() * 15) * 2


def degree_psi(genus: int = 4, pencil_degree: int = 3, pencils: int = 2) -> int:
    """Ramification points of a g^1_d on a genus-g curve, summed over the pencils."""
    return pencils * (2 * genus - 2 + 2 * pencil_degree)


VOISIN_PUSH_TABLE = {"O1": 16, "H": 28, "E": 60}


def blowup_divisor_to_I(linear: BlClass, o1_image: IClass) -> IClass:
    """Image of c_1(O(1)) + (linear form in H, E) in CH^1(I).

    H maps to q^*H_F; E-terms pair to zero against q-pullbacks and are dropped.
    """
    h = linear.poly.coefficient({"H": 1})
    return o1_image + q_pull(FClass.g()) * h


def class_R() -> IClass:
    H, E = BlClass.H(), BlClass.E()
    return blowup_divisor_to_I(4 * H - 2 * E, IClass.l())


def class_Rprime(table: Mapping[str, int] = VOISIN_PUSH_TABLE) -> IClass:
    H, E = BlClass.H(), BlClass.E()
    lin = -2 * H + E
    image = (IClass.l() * table["O1"]
             + q_pull(FClass.g()) * (lin.poly.coefficient({"H": 1}) * table["H"]
                                     + lin.poly.coefficient({"E": 1}) * table["E"]))
    return image


def class_N() -> IClass:
    return q_pull(class_V())


def class_N_from_expression() -> IClass:
    l = IClass.l()
    return 4 * l * l - 4 * l * q_pull(FClass.g()) + q_pull(FClass.c() * 25)


def degree_phi() -> int:
    """Degree of the Voisin map as the l-coefficient of [R'] from the Hurwitz-space route."""
    from .hurwitz import appendix_Rprime
    beta = appendix_Rprime().beta
    if beta.degree() > 0:
        raise DegreeError("l-coefficient of R' is not a constant")
    return int(beta.normal_form().constant_value())


@dataclass(frozen=True)
class RClasses:
    R: IClass
    Rprime: IClass
    N: IClass
    V_image_degree: XClass


def classes_R_Rprime_N() -> RClasses:
    return RClasses(class_R(), class_Rprime(), class_N(), p_push(class_N()))


CONVENTION_NOTE = ("convention: l^2 = l*H_F - c2, so [N] = 21*(l*H_F - l^2); "
                   "with the opposite sign q^*c2 = l^2 - l*H_F the same class reads 21*(l^2 - l*H_F)")


# ---------------------------------------------------------------------------
# the table of standard identities


@dataclass(frozen=True)
class Identity:
    item: str
    description: str
    expected: str
    computed: str

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def identity_suite() -> list[Identity]:
    g, c = FClass.g(), FClass.c()
    sigma2 = FClass("H_F^2 - c2")
    S = class_S()
    l = IClass.l()
    qg = q_pull(g)
    b = beta_class()
    out = []

    def add(item, desc, expected, computed):
        out.append(Identity(item, desc, str(expected), str(computed)))

    add("1a", "H_F^4", 108, integrate_F(g ** 4))
    add("1b", "H_F^2 c2", 45, integrate_F(g * g * c))
    add("1c", "c2^2", 27, integrate_F(c * c))
    add("2a", "H_F^2 sigma_2", 63, integrate_F(g * g * sigma2))
    add("2b", "sigma_2^2", 45, integrate_F(sigma2 * sigma2))
    add("3a", "beta H_F", 3, integrate_F(b * g))
    add("3b", "beta", FClass("1/36*H_F^3"), b)
    add("3c", "q_*[C_x] = 2 beta", FClass("1/18*H_F^3"), class_Cx())
    add("4a", "q_* l^2", FClass("H_F"), transfer(2))
    add("4b", "q_* l^3", sigma2, transfer(3))
    add("4c", "q_* l^4", FClass("1/6*H_F^3"), transfer(4))
    add("4d", "q_* l^4 paired with H_F equals 3 * (q_*[C_x] paired with H_F)",
        integrate_F(transfer(4) * g), 3 * integrate_F(class_Cx() * g))
    add("5", "c_1(omega_p)", IClass("H_F", 1), omega_p())
    add("6", "q^*c2 in terms of l", q_pull(c), l * qg - l * l)
    add("7a", "p_* q^* H_F^2", XClass(21, 1), p_push(q_pull(g * g)))
    add("7b", "p_* l^2", XClass(0), p_push(l * l))
    add("7c", "p_* (l q^*H_F)", XClass(6, 1), p_push(l * qg))
    add("8", "[W]", XClass(75, 1), class_W())
    add("9", "p_*(c_1(omega_p) q^*[S])", XClass(180, 2), p_push(omega_p() * q_pull(S)))
    add("10", "lambda", XClass(9, 1), lambda_class())
    add("11", "H_S^2 = H_F^2 [S] matches the normal-bundle data", NORMAL_BUNDLE.HS2,
        integrate_F(g * g * S))
    return out
