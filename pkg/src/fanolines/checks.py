"""Catalog of verification checks and the suite runner.

Each check computes a value and renders it as a canonical string; a check
passes exactly when that string equals the expected one.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import chow, hurwitz, local, schubert
from .core.binary import discriminant, quadric_coefficients
from .core.groebner import (DEFAULT_STEP_BUDGET, IdealBasis, Inconclusive, StepBudgetExceeded,
                            eliminate, groebner, is_groebner)
from .core.poly import Poly

SUITES = ("schubert", "chow", "hurwitz", "local")


class Skipped(Exception):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    suites: tuple[str, ...] = ("all",)
    seed: int = 0
    groebner_step_budget: int = DEFAULT_STEP_BUDGET
    power_bound: int = 20
    samples: int = 25
    output: str = "text"
    only: tuple[str, ...] = ()

    def __post_init__(self):
        bad = [s for s in self.suites if s not in SUITES + ("all",)]
        if bad:
            raise ValueError(f"unknown suite(s): {', '.join(bad)}")
        if self.output not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output!r}")
        if self.samples < 0 or self.power_bound < 1 or self.groebner_step_budget < 1:
            raise ValueError("samples must be >= 0, power bound and step budget >= 1")

    def selected_suites(self) -> tuple[str, ...]:
        return SUITES if "all" in self.suites else tuple(s for s in SUITES if s in self.suites)


@dataclass(frozen=True)
class CheckResult:
    id: str
    description: str
    expected: str
    computed: str
    status: str
    runtime_ms: int
    note: str = ""


@dataclass(frozen=True)
class Check:
    id: str
    suite: str
    description: str
    source: str
    expected: str
    run: Callable[[SuiteConfig], str] = field(repr=False)
    note: str = ""


CATALOG: list[Check] = []


def check(id: str, suite: str, description: str, source: str, expected, note: str = ""):
    def deco(fn):
        CATALOG.append(Check(id, suite, description, source, str(expected), fn, note))
        return fn
    return deco


def _join(*items) -> str:
    return "; ".join(str(x) for x in items)


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


# ---------------------------------------------------------------------------
# schubert


@check("class-F", "schubert", "class of F as c_4(Sym^3 U^dual) in the Schubert basis",
       "class of the Fano variety in G(2,6)", "18*s[3,1] + 27*s[2,2]; equals 27*s2^2 - 9*s1*s3 - 18*s4")
def _class_F(cfg):
    F = schubert.class_of_F()
    same = "equals" if F == schubert.class_of_F_by_sigmas() else "differs from"
    return f"{F}; {same} 27*s2^2 - 9*s1*s3 - 18*s4"


@check("sym3-c4", "schubert", "degree-4 Chern class of Sym^3 of a rank-2 bundle",
       "class of the Fano variety in G(2,6)", "18*e1^2*e2 + 9*e2^2")
def _sym3(cfg):
    return str(schubert.sym_power_chern(3)[4])


@check("sigma1-8", "schubert", "sigma_1^8 on G(2,6)", "degree of G(2,6) in the Plucker embedding", "14*pt")
def _s18(cfg):
    return str(schubert.SchubertClass.sigma(1) ** 8)


@check("whitney", "schubert", "e1^2 - e2 and e1^3 - 2 e1 e2 map to sigma_2 and sigma_3",
       "Schubert cycle conventions", "s[2]; s[3]")
def _whitney(cfg):
    e = schubert.whitney_sigma2()
    e3 = schubert.taut("e1^3 - 2*e1*e2")
    return _join(schubert.taut_to_schubert(e), schubert.taut_to_schubert(e3))


@check("schubert-duality", "schubert", "sigma_lam * sigma_mu integrates to 1 iff mu is the complement",
       "Schubert calculus on G(2,6)", "ok")
def _duality(cfg):
    for d in range(9):
        for lam in schubert.partitions_in_box(2, 4, d):
            for mu in schubert.partitions_in_box(2, 4, 8 - d):
                val = schubert.integrate_G(schubert.SchubertClass({lam: 1}) * schubert.SchubertClass({mu: 1}))
                if val != (1 if mu == schubert.complement(lam) else 0):
                    return f"failed at {lam}, {mu}"
    return "ok"


@check("lr-properties", "schubert", "LR products: nonnegative integers, commutative, associative on 100 triples",
       "Schubert calculus on G(2,6)", "ok")
def _lr_props(cfg):
    rng = random.Random(cfg.seed)
    parts = schubert.partitions_in_box(2, 4)
    for _ in range(100):
        a, b, c = (schubert.SchubertClass({rng.choice(parts): 1}) for _ in range(3))
        ab = a * b
        if any(v < 0 or v.denominator != 1 for v in ab.terms.values()):
            return "negative or fractional coefficient"
        if any(sum(nu) != sum(next(iter(a.terms))) + sum(next(iter(b.terms))) for nu in ab.terms):
            return "grading violated"
        if ab != b * a or ab * c != a * (b * c):
            return "not commutative/associative"
    return "ok"


# ---------------------------------------------------------------------------
# chow: intersection table


def _fnum(x):
    return str(x)


g_, c_ = chow.FClass.g, chow.FClass.c


@check("L2.1-HF4", "chow", "H_F^4", "intersection table, first row", 108)
def _hf4(cfg):
    return _fnum(chow.integrate_F(g_() ** 4))


@check("L2.1-HF2c2", "chow", "H_F^2 c2", "intersection table, first row", 45)
def _hf2c2(cfg):
    return _fnum(chow.integrate_F(g_() ** 2 * c_()))


@check("L2.1-c2sq", "chow", "c2^2", "intersection table, first row", 27)
def _c2sq(cfg):
    return _fnum(chow.integrate_F(c_() ** 2))


@check("L2.2-HF2sigma2", "chow", "H_F^2 sigma_2", "intersection table, second row", 63)
def _hf2s2(cfg):
    return _fnum(chow.integrate_F(g_() ** 2 * chow.FClass("H_F^2 - c2")))


@check("L2.2-sigma2sq", "chow", "sigma_2^2 restricted to F", "intersection table, second row", 45)
def _s2sq(cfg):
    return _fnum(chow.integrate_F(chow.FClass("H_F^2 - c2") ** 2))


@check("L2.3-beta", "chow", "beta H_F, beta, and q_*[C_x] = 2 beta", "intersection table, third row",
       "3; 1/36*H_F^3; 1/18*H_F^3")
def _beta(cfg):
    b = chow.beta_class()
    return _join(chow.integrate_F(b * g_()), b, chow.class_Cx())


@check("L2.4-transfer", "chow", "q_* p^* H_X^d for d = 2, 3, 4", "intersection table, fourth row",
       "H_F; H_F^2 - c2; 1/6*H_F^3")
def _transfer(cfg):
    return _join(*(chow.transfer(d) for d in (2, 3, 4)))


@check("L2.4-three-points", "chow", "H_F q_* p^* H_X^4 equals 3 H_F q_*[C_x]", "intersection table, fourth row",
       "18 = 18")
def _three_pts(cfg):
    return f"{chow.integrate_F(chow.transfer(4) * g_())} = {3 * chow.integrate_F(chow.class_Cx() * g_())}"


@check("L2.5-omega", "chow", "c_1(omega_p)", "intersection table, fifth row", "H_F + l")
def _omega(cfg):
    return str(chow.omega_p())


@check("L2.6-relation", "chow",
       "projective-bundle relation l^2 = l H_F - c2: q_* l^2 and q_* l^3 agree with the transfer values; "
       "the opposite sign does not",
       "intersection table, sixth row (sign adopted from the fourth row)",
       "H_F; H_F^2 - c2; opposite sign gives H_F^2 + c2")
def _relation(cfg):
    g, c = g_(), c_()
    # multiply (alpha, beta) = alpha + l*beta by l under l^2 = l*g + c
    alpha, beta = chow.FClass(1), chow.FClass(0)
    for _ in range(3):
        alpha, beta = c * beta, alpha + g * beta
    opposite = beta
    return _join(chow.q_push(chow.IClass.l() ** 2), chow.q_push(chow.IClass.l() ** 3),
                 f"opposite sign gives {opposite}")


@check("L2.7-push", "chow", "p_* q^* H_F^2, p_* l^2, p_*(l q^* H_F)", "intersection table, seventh row",
       "21*H_X; 0; 6*H_X")
def _push(cfg):
    l, qg = chow.IClass.l(), chow.q_pull(g_())
    return _join(chow.p_push(qg * qg), chow.p_push(l * l), chow.p_push(l * qg))


@check("L2.8-W", "chow", "[W] = p_* q^* [S]", "intersection table, eighth row", "75*H_X")
def _W(cfg):
    return str(chow.class_W())


@check("L2.9-omegaS", "chow", "p_*(c_1(omega_p) q^*[S])", "intersection table, ninth row", "180*H_X^2")
def _omegaS(cfg):
    return str(chow.p_push(chow.omega_p() * chow.q_pull(chow.class_S())))


@check("L2.10-lambda", "chow", "Hodge class lambda", "intersection table, tenth row", "9*H_X")
def _lambda(cfg):
    return str(chow.lambda_class())


@check("L2.11-normal-bundle", "chow", "H_S^2 = H_F^2 [S] recomputed against the normal-bundle input",
       "intersection table, eleventh row", "315")
def _nb(cfg):
    return _fnum(chow.integrate_F(g_() ** 2 * chow.class_S()))


@check("deg-225", "chow", "degree of W in P^5 and the induced H_X coefficient", "degree of W", "225; 75")
def _deg225(cfg):
    return _join(*local.degree_225_check())


# ---------------------------------------------------------------------------
# chow: V, C and the divisors


@check("class-S", "chow", "[S] = 5 sigma_2 restricted to F", "class of the second-type surface", "5*H_F^2 - 5*c2")
def _S(cfg):
    return str(chow.class_S())


@check("tildeV", "chow", "strict transform of V in the blow-up", "class of the strict transform of V",
       "20*H^2 - 18*H*E + 4*E^2 + c2")
def _tildeV(cfg):
    return str(chow.class_V_pipeline().tildeV)


@check("thm-class-V", "chow", "[V] as a multiple of c2", "class of the triple-line locus", "21*c2")
def _V(cfg):
    return str(chow.class_V())


@check("S-dot-V", "chow", "[S][V]", "number of points of S cap V counted by degree", 1890)
def _SV(cfg):
    return _fnum(chow.integrate_F(chow.class_S() * chow.class_V()))


@check("deg-V-945", "chow", "degree of V in the Plucker embedding", "class of the triple-line locus", 945)
def _degV(cfg):
    return _fnum(chow.integrate_F(g_() ** 2 * chow.class_V()))


@check("push-pull-V", "chow", "p_* q^* [V]", "surface swept by triple lines", "126*H_X")
def _pqV(cfg):
    return str(chow.p_push(chow.q_pull(chow.class_V())))


@check("blowup-table", "chow", "H^4, H^3 E, H^2 E^2, H E^3, E^4 on the blow-up", "blow-up along S",
       "108; 0; -315; -945; -1710")
def _bltable(cfg):
    return _join(*chow.blowup_table().values())


@check("bl-pull-push", "chow", "pi_* pi^* is the identity on every H-monomial", "blow-up along S", "ok")
def _pullpush(cfg):
    for a in range(5):
        for b in range(3):
            if a + 2 * b > 4:
                continue
            f = g_() ** a * c_() ** b
            if chow.bl_push(chow.BlClass.pull(f)) != f:
                return f"failed on {f}"
            if a + 2 * b == 4 and chow.blowup_eval(chow.BlClass.pull(f)) != chow.integrate_F(f):
                return f"integral differs on {f}"
    return "ok"


@check("class-C", "chow", "[C] = 6 H_S in CH(F), its degree, and H_F [C]", "class of the curve C = S cap V",
       "6; 35/2*H_F^3; 1890")
def _C(cfg):
    d = chow.class_C_and_genera()
    return _join(d.C_in_S_coeff, d.C_class, d.C_beta_pairing)


@check("genus-tildeC", "chow", "C~(C~ + K) = 10 H^2 [V~] and the arithmetic genus of C~",
       "genera of C and its normalization", "9450; 4726")
def _gtc(cfg):
    d = chow.class_C_and_genera()
    return _join(d.adjunction_tildeC, d.g_tildeC)


@check("genus-C", "chow", "C(C + K_S) = 54 H_S^2 and the arithmetic genus of C",
       "genera of C and its normalization", "17010; 8506")
def _gc(cfg):
    d = chow.class_C_and_genera()
    return _join(d.adjunction_C, d.g_C)


@check("nodes-3780", "chow", "nodes of C", "node count of C", 3780)
def _nodes(cfg):
    return str(chow.class_C_and_genera().nodes)


@check("D3-pullback", "chow", "j^*[D_3] with lambda = 9 H_X and delta_0 = [W]", "trigonal divisor pullback",
       "126*H_X")
def _d3(cfg):
    return str(chow.d3_pullback())


@check("deg-psi", "chow", "degree of psi from the ramification of two g^1_3", "degree of psi", 24)
def _psi(cfg):
    return str(chow.degree_psi())


@check("deg-phi", "chow", "degree of the Voisin map as the l-coefficient of [R']", "degree of the Voisin map", 16)
def _phi(cfg):
    return str(chow.degree_phi())


@check("class-R", "chow", "[R] from the blow-up chain", "classes of R, R' and N", "4*H_F + l")
def _R(cfg):
    return str(chow.class_R())


@check("class-Rprime", "chow", "[R'] from the Voisin-map pushforward table", "classes of R, R' and N",
       "4*H_F + 16*l")
def _Rp(cfg):
    return str(chow.class_Rprime())


@check("class-N", "chow", "[N] = q^*[V] = reduction of 4 l^2 - 4 l H_F + 25 c2",
       "classes of R, R' and N", "21*c2; 21*H_F*l - 21*l^2; equal", note=chow.CONVENTION_NOTE)
def _N(cfg):
    N = chow.class_N()
    same = "equal" if N == chow.class_N_from_expression() else "different"
    return _join(N, N.as_l_quadratic(), same)


@check("projection-formula", "chow", "p_*(l^a q^*x q^*y) does not depend on where the product is formed "
       "(100 random pairs)", "projection formula", "ok")
def _projection(cfg):
    rng = random.Random(cfg.seed)
    monos = [(a, b) for a in range(5) for b in range(3) if a + 2 * b <= 4]
    for _ in range(100):
        def rand_class():
            a, b = rng.choice(monos)
            return chow.FClass(Poly({(a, b): Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 3))}, chow.F_VARS))
        x, y = rand_class(), rand_class()
        deg = x.degree() + y.degree()
        if deg > 5:
            continue
        k = rng.randint(0, 5 - deg)
        lk = chow.IClass.l() ** k
        left = chow.p_push(lk * chow.q_pull(x) * chow.q_pull(y))
        right = chow.p_push(lk * chow.q_pull(x * y))
        if left != right:
            return f"mismatch for {x}, {y}, l^{k}"
    return "ok"


# ---------------------------------------------------------------------------
# hurwitz


@check("app-R-pairing", "hurwitz", "(2/N0)((1/2) h_* j^* psi - 2 h_* E_3)", "admissible-cover computation",
       "96*lambda - 10*delta0")
def _aRp(cfg):
    return str(hurwitz.pairing_R())


@check("app-Rprime-pairing", "hurwitz", "(2/N0)(h_* j^* psi - 2 h_* E_0 - 2 h_* E_3)",
       "admissible-cover computation", "456*lambda - 52*delta0")
def _aRpp(cfg):
    return str(hurwitz.pairing_Rprime())


@check("app-N0", "hurwitz", "pairings do not depend on the number of covers N0", "admissible-cover computation",
       "independent")
def _aN0(cfg):
    for n in (1, 2, 7, Fraction(5, 3)):
        n0 = Poly.const(n, ("N0",))
        if (hurwitz.pairing_R(n0=n0) != hurwitz.pairing_R()
                or hurwitz.pairing_Rprime(n0=n0) != hurwitz.pairing_Rprime()):
            return f"depends on N0 at {n}"
    return "independent"


@check("app-R", "hurwitz", "ansatz for R and its image 4 omega_p + 8 p^*lambda - p^*[W]",
       "admissible-cover computation", "(4, 8, -1); 4*H_F + l")
def _aR(cfg):
    a = hurwitz.solve_ansatz(hurwitz.pairing_R(), hurwitz.FIBER_POINTS)
    return _join(a, hurwitz.to_I_class(a))


@check("app-Rprime", "hurwitz", "ansatz for R' and its image in CH^1(I)", "admissible-cover computation",
       "(4, 68, -8); 4*H_F + 16*l")
def _aRprime(cfg):
    a = hurwitz.solve_ansatz(hurwitz.pairing_Rprime(), hurwitz.FIBER_POINTS)
    return _join(a, hurwitz.to_I_class(a))


@check("app-consistency", "hurwitz", "appendix classes agree with the blow-up chain for R and R'",
       "admissible-cover computation vs classes of R, R'", "R agrees; R' agrees")
def _acons(cfg):
    r = "agrees" if hurwitz.appendix_R() == chow.class_R() else "differs"
    rp = "agrees" if hurwitz.appendix_Rprime() == chow.class_Rprime() else "differs"
    return f"R {r}; R' {rp}"


@check("app-roundtrip", "hurwitz", "solve_ansatz inverts mumford_pair on random ansatz values",
       "admissible-cover computation", "ok")
def _around(cfg):
    rng = random.Random(cfg.seed)
    for _ in range(100):
        A = hurwitz.DivisorAnsatz(rng.randint(-20, 20), Fraction(rng.randint(-50, 50), rng.randint(1, 6)),
                                  Fraction(rng.randint(-50, 50), rng.randint(1, 6)))
        if hurwitz.solve_ansatz(hurwitz.mumford_pair(A), 6 * A.a) != A:
            return f"failed for {A}"
    return "ok"


# ---------------------------------------------------------------------------
# local


def _grad_text(rep) -> str:
    return _join(*(_vec(g) for g in rep.gradients), f"rank {rep.rank}", rep.verdict)


@check("sings-type1", "local", "gradients of T2, T3 at a first-type line", "curve of lines through a point",
       "(0, 0, 2*a, 1); (0, 0, 1, 0); rank 2; smooth")
def _t1(cfg):
    return _grad_text(local.transversality_at_line(local.build_cubic("type1", local.generic_data("type1"))))


@check("sings-type2", "local", "gradients of T2, T3 at a second-type line", "curve of lines through a point",
       "(0, 0, 0, 2*a); (0, 0, 0, 1); rank 1; singular")
def _t2(cfg):
    return _grad_text(local.transversality_at_line(local.build_cubic("type2", local.generic_data("type2"))))


@check("dual-map", "local", "gradient of a second-type normal form along the line, and its span",
       "dual map of a second-type line", "(0, 0, 0, 0, s^2, t^2); span 2")
def _dual(cfg):
    img = local.dual_map_image(local.build_cubic("type2", local.NormalFormData()))
    return _join(_vec(img), f"span {local.span_rank(img)}")


@check("tvconn-shape", "local", "shape of M(kappa, lambda), its last entry, and agreement with the printed matrix",
       "tangent map along a triple line", "10x12; 1; matches")
def _shape(cfg):
    m = local.M_kappa_lambda()
    return _join(f"{m.rows}x{m.cols}", m[9, 11], "matches" if m == local.printed_M() else "differs")


@check("tvconn-minors", "local", "the 66 maximal minors of M(kappa, lambda) vanish only at the origin",
       "tangent map along a triple line", "66 minors; only origin")
def _minors(cfg):
    cert = local.minors_certificate(power_bound=cfg.power_bound, step_budget=cfg.groebner_step_budget)
    return f"{cert.minor_count} minors; " + ("only origin" if cert.only_origin else "other common zeros")


@check("pencil-examples", "local", "common roots of (x2^2, x3^2), (x2 x3, x3^2), (x2 x3, 2 x2 x3)",
       "residual pencil along a second-type line", "0; 1; 2")
def _pex(cfg):
    out = []
    for q0, q1 in (("x2^2", "x3^2"), ("x2*x3", "x3^2"), ("x2*x3", "2*x2*x3")):
        p = local.residual_pencil(local.NormalFormData.build(q0, q1))
        out.append(local.classify_pencil(p).common_roots)
    return _join(*out)


def root_set_oracle(q0: Poly, q1: Poly) -> tuple[int, bool]:
    """Common roots with multiplicity, by solving each quadric in Q(sqrt(D)).

    Independent of the resultant: roots are written as x + y*sqrt(D) and the
    other quadric is evaluated on them exactly.
    """
    f = quadric_coefficients(q0, local.PENCIL_VARS)
    g = quadric_coefficients(q1, local.PENCIL_VARS)
    if not any(f):
        f, g = g, f
    if not any(g):
        # every point is a root of the zero quadric
        roots = _roots(f)
        return sum(m for _, m in roots), any(m >= 2 for _, m in roots)
    total = 0
    double = False
    for root, m in _roots(f):
        m2 = _multiplicity(g, root)
        total += min(m, m2)
        double = double or min(m, m2) >= 2
    return total, double


def _roots(q):
    """Roots of a binary quadric as ('inf', None) or (x, y, D) meaning x + y sqrt(D), with multiplicity."""
    a, b, c = q
    if a == 0:
        out = []
        if b == 0:
            return [(("inf",), 2)]
        out.append((("inf",), 1))
        out.append(((-c / b, Fraction(0), Fraction(0)), 1))
        return out
    D = discriminant(q)
    if D == 0:
        return [((-b / (2 * a), Fraction(0), Fraction(0)), 2)]
    half = 1 / (2 * a)
    return [((-b * half, half, D), 1), ((-b * half, -half, D), 1)]


def _is_zero(x, y, D):
    if y == 0 or D == 0:
        return x == 0
    # x + y sqrt(D) = 0 with y != 0 forces sqrt(D) = -x/y rational
    r = -x / y
    return r >= 0 and r * r == D


def _eval(q, root):
    a, b, c = q
    if root[0] == "inf":
        return a == 0
    x, y, D = root
    # (x + y s)^2 = x^2 + D y^2 + 2 x y s
    sq = (x * x + D * y * y, 2 * x * y)
    val = (a * sq[0] + b * x + c, a * sq[1] + b * y)
    return _is_zero(val[0], val[1], D)


def _multiplicity(q, root) -> int:
    if not _eval(q, root):
        return 0
    a, b, c = q
    # derivative test for a double root
    if root[0] == "inf":
        return 2 if b == 0 else 1
    return 2 if discriminant(q) == 0 else 1


def random_pencils(rng: random.Random, n: int) -> list[tuple[Poly, Poly]]:
    lam, mu = Poly.gens(local.PENCIL_VARS)

    def lin():
        return lam.scale(rng.randint(-3, 3)) + mu.scale(rng.randint(-3, 3))

    def quad():
        return sum((m.scale(rng.randint(-3, 3)) for m in (lam * lam, lam * mu, mu * mu)), Poly.const(0, local.PENCIL_VARS))

    out = []
    while len(out) < n:
        mode = len(out) % 4
        if mode == 0:
            q0, q1 = quad(), quad()
        elif mode == 1:
            shared = lin()
            q0, q1 = shared * lin(), shared * lin()
        elif mode == 2:
            q0 = quad()
            q1 = q0.scale(rng.randint(-3, 3))
        else:
            l1 = lin()
            q0, q1 = l1 * l1, l1 * lin()
        if q0.is_zero() and q1.is_zero():
            continue
        out.append((q0.with_vars(local.PENCIL_VARS), q1.with_vars(local.PENCIL_VARS)))
    return out


@check("pencil-oracle", "local", "classify_pencil agrees with the root-set oracle on 500 seeded pencils",
       "residual pencil along a second-type line", "500 agree")
def _poracle(cfg):
    rng = random.Random(cfg.seed)
    agree = 0
    for q0, q1 in random_pencils(rng, 500):
        got = local.classify_pencil(local.PencilPair(q0, q1))
        if (got.common_roots, got.double_root) == root_set_oracle(q0, q1):
            agree += 1
    return f"{agree} agree"


@check("fiber-degree", "local", "x0 Q0 + x1 Q1 has two roots with multiplicity at 100 seeded points",
       "two-to-one map on exceptional fibers", "100 of 100 give 2")
def _fiber(cfg):
    rng = random.Random(cfg.seed + 1)
    ok = 0
    pencils = [p for p in random_pencils(rng, 400) if local.classify_pencil(local.PencilPair(*p)).common_roots == 0]
    for i in range(100):
        pencil = local.PencilPair(*pencils[i % len(pencils)])
        while True:
            pt = (rng.randint(-5, 5), rng.randint(-5, 5))
            if pt != (0, 0):
                break
        count, _ = local.fiber_degree_check(pencil, pt)
        ok += count == 2
    return f"{ok} of 100 give 2"


@lru_cache(maxsize=4)
def _resultant_report(samples: int, seed: int, budget: int):
    return local.resultant_suite(samples, seed, 10, budget)


def _resultant(cfg):
    return _resultant_report(cfg.samples, cfg.seed, cfg.groebner_step_budget)


@check("resultant-elim", "local", "eliminating w, w' from the six normalization generators gives (R)",
       "normalization of the resultant", "principal ideal (R)")
def _relim(cfg):
    rep = _resultant(cfg)
    return "principal ideal (R)" if rep.elimination_ok else "elimination ideal " + _vec(rep.elimination_ideal)


@check("resultant-singular", "local", "singular locus of R equals the rank-one locus (radical membership both ways)",
       "normalization of the resultant", "both inclusions")
def _rsing(cfg):
    rep = _resultant(cfg)
    return "both inclusions" if rep.singular_locus_ok else (
        f"minors {rep.minors_in_jacobian_radical}, jacobian {rep.jacobian_in_minors_radical}")


@check("resultant-branches", "local", "two preimages and non-parallel branch normals at seeded rank-one points",
       "normalization of the resultant", "all samples pass")
def _rbranch(cfg):
    rep = _resultant(cfg)
    if rep.branch_check_ok is None:
        raise Skipped("no samples requested")
    bad = [s for s in rep.samples if not s.ok]
    return "all samples pass" if not bad else f"{len(bad)} of {len(rep.samples)} samples fail"


@check("groebner-spoly", "local", "S-polynomials of every reduced basis used by the certificates reduce to zero",
       "Groebner certificates", "ok")
def _spoly(cfg):
    bases = []
    m = local.M_kappa_lambda()
    from .core.matrix import minors
    nz = [p for p in minors(m, 10) if p]
    bases.append(groebner(IdealBasis.of(nz, vars=("kappa", "lambda")), cfg.groebner_step_budget))
    gens = local.normalization_generators()
    from .core.poly import block_order
    bases.append(groebner(IdealBasis(tuple(gens), block_order(2), False, local.NU_VARS), cfg.groebner_step_budget))
    R = local.resultant_poly()
    bases.append(groebner(IdealBasis.of([R] + [R.diff(v) for v in local.R_VARS], vars=local.R_VARS),
                          cfg.groebner_step_budget))
    bases.append(groebner(IdealBasis.of(local.rank_one_minors(), vars=local.R_VARS), cfg.groebner_step_budget))
    for B in bases:
        if not is_groebner(B, cfg.groebner_step_budget):
            return "a basis fails Buchberger's criterion"
    return "ok"


# ---------------------------------------------------------------------------
# runner


def list_checks() -> list[Check]:
    order = {s: i for i, s in enumerate(SUITES)}
    return sorted(CATALOG, key=lambda c: (order[c.suite], CATALOG.index(c)))


def find_check(id: str) -> Check:
    for c in CATALOG:
        if c.id == id:
            return c
    raise KeyError(f"unknown check id {id!r}")


def run_check(c: Check, cfg: SuiteConfig) -> CheckResult:
    start = time.perf_counter()
    try:
        computed = c.run(cfg)
        status = "pass" if computed == c.expected else "fail"
    except Skipped as e:
        computed, status = f"skipped: {e}", "skipped"
    except (Inconclusive, StepBudgetExceeded) as e:
        computed, status = f"inconclusive: {e}", "inconclusive"
    except Exception as e:  # report, never crash the suite
        computed, status = f"error: {type(e).__name__}: {e}", "fail"
    ms = int((time.perf_counter() - start) * 1000)
    return CheckResult(c.id, c.description, c.expected, computed, status, ms, c.note)


def run(cfg: SuiteConfig) -> list[CheckResult]:
    if cfg.only:
        selected = [find_check(i) for i in cfg.only]
        selected.sort(key=list_checks().index)
    else:
        suites = cfg.selected_suites()
        selected = [c for c in list_checks() if c.suite in suites]
    return [run_check(c, cfg) for c in selected]


def exit_status(results: Sequence[CheckResult]) -> int:
    statuses = {r.status for r in results}
    if "fail" in statuses:
        return 1
    if "inconclusive" in statuses:
        return 3
    return 0


def report_dict(cfg: SuiteConfig, results: Sequence[CheckResult]) -> dict:
    from . import __version__
    conf = asdict(cfg)
    conf["suites"] = list(cfg.suites)
    conf["only"] = list(cfg.only)
    return {"version": __version__, "config": conf, "results": [asdict(r) for r in results]}
