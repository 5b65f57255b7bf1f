"""Explicit-coordinate certificates around special lines of a cubic fourfold.

Covers the normal-form cubics for first-type, second-type and triple lines,
the curve of lines through a point, the residual-line pencil along a
second-type line, the tangent-map matrix for triple lines and the
normalization of the resultant of two binary quadrics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .core.binary import binary_form_tools, quadric_coefficients
from .core.groebner import (DEFAULT_STEP_BUDGET, IdealBasis, eliminate, groebner, in_radical,
                            origin_vanishing_report)
from .core.matrix import PolyMatrix, minors, nullspace, rank_at, rank_rational, generic_rank
from .core.poly import Poly, Scalar, as_poly, parse_poly

X_VARS = ("x0", "x1", "x2", "x3", "x4", "x5")
TAIL_VARS = ("x2", "x3", "x4", "x5")
SLOPE_VARS = ("x1'", "x2", "x3", "x5")
PENCIL_VARS = ("lam", "mu")
KINDS = ("type1", "type2", "type2full", "triple")


class NormalFormError(ValueError):
    pass


def _xs():
    return Poly.gens(X_VARS)


@dataclass(frozen=True)
class NormalFormData:
    Q0: Poly = field(default_factory=lambda: Poly.const(0, X_VARS))
    Q1: Poly = field(default_factory=lambda: Poly.const(0, X_VARS))
    P: Poly = field(default_factory=lambda: Poly.const(0, X_VARS))
    extra: Mapping[str, Poly] = field(default_factory=dict)

    @classmethod
    def build(cls, Q0="0", Q1="0", P="0", **extra) -> "NormalFormData":
        def conv(v):
            p = as_poly(v) if not isinstance(v, (int, Fraction)) else Poly.const(v)
            return p
        return cls(conv(Q0), conv(Q1), conv(P), {k: conv(v) for k, v in extra.items()})

    def get(self, name: str, default: Scalar = 0) -> Poly:
        return self.extra.get(name, Poly.const(default))


@dataclass(frozen=True)
class CubicForm:
    poly: Poly
    kind: str | None = None

    def __post_init__(self):
        parts = {d: p for d, p in self.poly.homogeneous_parts(subset=X_VARS).items() if p}
        if parts and set(parts) != {3}:
            raise NormalFormError(f"cubic form is not homogeneous of degree 3 in x0..x5: {self.poly}")

    def __str__(self):
        return str(self.poly)


def _check_support(name: str, p: Poly, allowed: Sequence[str], degree: int):
    xs_used = [v for v in p.used_vars() if v in X_VARS]
    bad = [v for v in xs_used if v not in allowed]
    if bad:
        raise NormalFormError(f"{name} may only involve {allowed}, found {bad}")
    if p and set(d for d, q in p.homogeneous_parts(subset=X_VARS).items() if q) != {degree}:
        raise NormalFormError(f"{name} must be homogeneous of degree {degree} in the coordinates")


def build_cubic(kind: str, data: NormalFormData) -> CubicForm:
    x0, x1, x2, x3, x4, x5 = _xs()
    if kind not in KINDS:
        raise NormalFormError(f"unknown normal form {kind!r}")
    if kind == "triple":
        Q3 = data.get("Q3")
        Q4 = data.get("Q4")
        Q5 = data.get("Q5")
        _check_support("Q3", Q3, X_VARS[:4], 2)
        _check_support("Q4", Q4, X_VARS[:5], 2)
        _check_support("Q5", Q5, X_VARS, 2)
        c = data.get("c")
        for k in ("c", "y1", "y2", "y1'", "y2'"):
            if any(v in X_VARS for v in data.get(k).used_vars()):
                raise NormalFormError(f"coefficient {k} must not involve coordinates")
        line = x0 * data.get("y1") + x1 * data.get("y2") - x2
        line2 = x0 * data.get("y1'") + x1 * data.get("y2'") - x2
        return CubicForm(x5 * Q5 + x4 * Q4 + x3 * Q3 + c * line * line * line2, kind)
    _check_support("Q0", data.Q0, TAIL_VARS, 2)
    _check_support("Q1", data.Q1, TAIL_VARS, 2)
    _check_support("P", data.P, TAIL_VARS, 3)
    tail = x0 * data.Q0 + x1 * data.Q1 + data.P
    if kind == "type1":
        head = x4 * x0 ** 2 + x5 * x0 * x1 + x3 * x1 ** 2
    elif kind == "type2":
        head = x4 * x0 ** 2 + x5 * x1 ** 2
    else:
        g = data.get
        head = ((g("c0") * x4 + g("d0") * x5) * x0 ** 2
                + (g("c01") * x4 + g("d01") * x5) * x0 * x1
                + (g("c1") * x4 + g("d1") * x5) * x1 ** 2)
    return CubicForm(head + tail, kind)


def generic_data(kind: str, prefix: str = "q") -> NormalFormData:
    """Normal-form data whose quadrics and cubic have independent symbolic coefficients."""
    def generic(name, vars, degree):
        from .core.poly import Poly as P_
        gens = P_.gens(vars)
        monos = [P_.const(1)]
        for _ in range(degree):
            monos = sorted({m * g for m in monos for g in gens}, key=lambda m: m.format())
        out = P_.const(0)
        for i, m in enumerate(monos):
            out = out + m * P_.var(f"{prefix}{name}_{i}")
        return out
    if kind == "triple":
        return NormalFormData(extra={"Q3": generic("3", X_VARS[:4], 2), "Q4": generic("4", X_VARS[:5], 2),
                                     "Q5": generic("5", X_VARS, 2), "c": Poly.var("c"),
                                     "y1": Poly.var("y1"), "y2": Poly.var("y2"),
                                     "y1'": Poly.var("y1'"), "y2'": Poly.var("y2'")})
    return NormalFormData(generic("0", TAIL_VARS, 2), generic("1", TAIL_VARS, 2), generic("P", TAIL_VARS, 3))


# ---------------------------------------------------------------------------
# the curve of lines through a point of a first- or second-type line


@dataclass(frozen=True)
class CurveEquations:
    x4_value: Poly
    T2: Poly
    T3: Poly


def curve_through_point(F: CubicForm, a: Scalar | Poly | str) -> CurveEquations:
    """Equations of the curve of lines through [1:a:0:0:0:0] in slope coordinates.

    The linear part is solved for x4, leaving T2 and T3 in x1', x2, x3, x5.
    """
    if F.kind not in ("type1", "type2"):
        raise NormalFormError(f"curve_through_point supports type1/type2 normal forms, not {F.kind}")
    a = as_poly(a) if not isinstance(a, (int, Fraction)) else Poly.const(a)
    x1p = Poly.var("x1'")
    affine = F.poly.subs({"x0": 1, "x1": a + x1p})
    local = ("x1'",) + TAIL_VARS
    parts = affine.homogeneous_parts(subset=local)
    zero = Poly.const(0)
    if parts.get(0, zero):
        raise NormalFormError("the point does not lie on the cubic")
    linear = parts.get(1, zero)
    coeff = linear.coefficients_in(("x4",))
    lead = coeff.get((1,), zero)
    if not lead.is_constant() or lead.is_zero():
        raise NormalFormError("linear part cannot be solved for x4")
    x4_value = -(linear - Poly.var("x4") * lead).scale(1 / lead.constant_value())
    sub = {"x4": x4_value}

    def tidy(p: Poly) -> Poly:
        rest = tuple(sorted(v for v in p.used_vars() if v not in SLOPE_VARS))
        return p.with_vars(SLOPE_VARS + rest)

    T2 = parts.get(2, zero).subs(sub)
    T3 = parts.get(3, zero).subs(sub)
    return CurveEquations(tidy(x4_value), tidy(T2), tidy(T3))


@dataclass(frozen=True)
class TransversalityReport:
    gradients: tuple[tuple[Poly, ...], tuple[Poly, ...]]
    rank: int
    verdict: str


def transversality_at_line(F: CubicForm, a: Scalar | Poly | str = "a") -> TransversalityReport:
    """Gradients of T2, T3 at the slope [1:0:0:0] of the line itself."""
    eqs = curve_through_point(F, a)
    point = {"x1'": 1, "x2": 0, "x3": 0, "x5": 0}
    grads = tuple(tuple(T.diff(v).subs(point) for v in SLOPE_VARS) for T in (eqs.T2, eqs.T3))
    m = PolyMatrix.from_rows(grads)
    rank = generic_rank(m)
    return TransversalityReport(grads, rank, "smooth" if rank == 2 else "singular")


def dual_map_image(F: CubicForm) -> tuple[Poly, ...]:
    """Gradient of the cubic along the line x2 = ... = x5 = 0, parametrised by [s:t]."""
    s, t = Poly.gens(("s", "t"))
    point = {"x0": s, "x1": t, "x2": 0, "x3": 0, "x4": 0, "x5": 0}
    return tuple(F.poly.diff(v).subs(point) for v in X_VARS)


def span_rank(vectors: Sequence[Poly], vars: Sequence[str] = ("s", "t")) -> int:
    """Dimension of the linear span of the image of a vector of forms."""
    monos = sorted({e for p in vectors for e in p.with_vars(tuple(vars) + tuple(
        v for v in p.vars if v not in vars)).coefficients_in(vars)})
    rows = []
    for p in vectors:
        coeffs = p.coefficients_in(vars)
        row = []
        for m in monos:
            c = coeffs.get(m)
            if c is not None and not c.is_constant():
                raise ValueError("span rank needs numeric coefficients")
            row.append(c.constant_value() if c is not None else Fraction(0))
        rows.append(row)
    return rank_rational(list(map(list, zip(*rows)))) if rows and monos else 0


# ---------------------------------------------------------------------------
# residual pencil along a second-type line


@dataclass(frozen=True)
class PencilPair:
    Q0: Poly
    Q1: Poly

    def __post_init__(self):
        if self.Q0.is_zero() and self.Q1.is_zero():
            raise NormalFormError("both quadrics vanish: the plane lies in the cubic")


@dataclass(frozen=True)
class PencilClass:
    common_roots: int
    double_root: bool


def residual_pencil(data: NormalFormData) -> PencilPair:
    lam, mu = Poly.gens(PENCIL_VARS)
    point = {"x2": lam, "x3": mu, "x4": 0, "x5": 0}
    q0 = data.Q0.subs(point).with_vars(PENCIL_VARS)
    q1 = data.Q1.subs(point).with_vars(PENCIL_VARS)
    return PencilPair(q0, q1)


def classify_pencil(p: PencilPair) -> PencilClass:
    rep = binary_form_tools(p.Q0, p.Q1, PENCIL_VARS)
    return PencilClass(rep.common_root_count, rep.double_root)


def fiber_degree_check(p: PencilPair, point: Sequence[Scalar]) -> tuple[int, str]:
    """Roots of x0*Q0 + x1*Q1 on P^1 counted with multiplicity, and simple/double."""
    x0, x1 = (Fraction(v) for v in point)
    q = p.Q0.scale(x0) + p.Q1.scale(x1)
    a, b, c = quadric_coefficients(q, PENCIL_VARS)
    if not (a or b or c):
        raise NormalFormError("the quadric vanishes identically")
    affine = 2 if a else (1 if b else 0)  # roots with mu != 0
    at_infinity = 2 - affine                # multiplicity of [1:0]
    disc = b * b - 4 * a * c
    return affine + at_infinity, "double" if disc == 0 else "simple"


# ---------------------------------------------------------------------------
# tangent map matrix along a triple line

CUBIC_MONOMIALS = ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
                   (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))
QUADRIC_KEYS = ("200", "110", "101", "020", "011", "002")


def tangent_matrix(A: Mapping[str, Sequence], c) -> PolyMatrix:
    """10 x 12 matrix: rows are cubic monomials in s0, s1, s2; column block j
    multiplies the quadric coefficient vectors by s_j; the last three columns
    carry c at s0*s2^2 and s1*s2^2 and 1 at s2^3."""
    for k in QUADRIC_KEYS:
        if len(A[k]) != 3:
            raise ValueError(f"coefficient vector {k} must have three entries")
    c = as_poly(c) if not isinstance(c, (int, Fraction)) else Poly.const(c)
    zero = Poly.const(0)
    rows = []
    for m in CUBIC_MONOMIALS:
        row = []
        for j in range(3):
            if m[j]:
                q = list(m)
                q[j] -= 1
                row.extend(as_poly(e) if not isinstance(e, (int, Fraction)) else Poly.const(e)
                           for e in A["".join(map(str, q))])
            else:
                row.extend([zero] * 3)
        row.append(c if m == (1, 0, 2) else zero)
        row.append(c if m == (0, 1, 2) else zero)
        row.append(Poly.const(1) if m == (0, 0, 3) else zero)
        rows.append(row)
    return PolyMatrix.from_rows(rows)


def M_kappa_lambda() -> PolyMatrix:
    k, l = Poly.gens(("kappa", "lambda"))
    z = Poly.const(0, ("kappa", "lambda"))
    A = {"200": (k, z, l), "110": (z, z, k), "101": (l, l, k),
         "020": (z, l, k), "011": (l, k, z), "002": (z, z, z)}
    m = tangent_matrix(A, k)
    return PolyMatrix.from_rows(m.to_rows(), ("kappa", "lambda"))


PRINTED_M = """
kappa 0 lambda 0 0 0 0 0 0 0 0 0
0 0 kappa kappa 0 lambda 0 0 0 0 0 0
lambda lambda kappa 0 0 0 kappa 0 lambda 0 0 0
0 lambda kappa 0 0 kappa 0 0 0 0 0 0
lambda kappa 0 lambda lambda kappa 0 0 kappa 0 0 0
0 0 0 0 0 0 lambda lambda kappa kappa 0 0
0 0 0 0 lambda kappa 0 0 0 0 0 0
0 0 0 lambda kappa 0 0 lambda kappa 0 0 0
0 0 0 0 0 0 lambda kappa 0 0 kappa 0
0 0 0 0 0 0 0 0 0 0 0 1
"""


def printed_M() -> PolyMatrix:
    rows = [[parse_poly(tok, ("kappa", "lambda")) for tok in line.split()]
            for line in PRINTED_M.strip().splitlines()]
    return PolyMatrix.from_rows(rows, ("kappa", "lambda"))


@dataclass(frozen=True)
class MinorsCertificate:
    minor_count: int
    nonzero_count: int
    minor_degrees: tuple[int, ...]
    only_origin: bool
    kappa_power: int | None
    lambda_power: int | None

    @property
    def verdict(self) -> str:
        return "pass" if self.only_origin else "fail"


def minors_certificate(matrix: PolyMatrix | None = None, power_bound: int = 20,
                       step_budget: int = DEFAULT_STEP_BUDGET) -> MinorsCertificate:
    """All maximal minors of M(kappa, lambda) and whether they vanish only at the origin.

    Raises :class:`Inconclusive` from the vanishing test when the bound is too small.
    """
    m = matrix if matrix is not None else M_kappa_lambda()
    k = min(m.rows, m.cols)
    ms = minors(m, k)
    nonzero = [p for p in ms if p]
    ideal = IdealBasis.of(nonzero, vars=("kappa", "lambda"))
    rep = origin_vanishing_report(ideal, power_bound, step_budget)
    return MinorsCertificate(len(ms), len(nonzero), tuple(sorted({p.total_degree() for p in nonzero})),
                             rep.only_origin, rep.kappa_power, rep.lambda_power)


# ---------------------------------------------------------------------------
# normalization of the resultant of two binary quadrics

NU_VARS = ("w", "w'", "x1", "x2", "x3", "y1", "y2", "y3")
R_VARS = NU_VARS[2:]
NORMALIZATION_GENERATORS = (
    "w*x3 - w'*y3",
    "w*x2 - w'*y2 + x3*y1 - x1*y3",
    "w*x1 - w'*y1 + x2*y1 - x1*y2",
    "w'^2 - w'*x2 + x1*x3",
    "w*w' - w'*y2 + x3*y1",
    "w^2 - w*y2 + y1*y3",
)
RESULTANT = "(x1*y3 - x3*y1)^2 - (x1*y2 - x2*y1)*(x2*y3 - x3*y2)"


def normalization_generators() -> list[Poly]:
    return [parse_poly(s, NU_VARS) for s in NORMALIZATION_GENERATORS]


def resultant_poly() -> Poly:
    return parse_poly(RESULTANT, R_VARS)


def rank_one_minors() -> list[Poly]:
    return [parse_poly(s, R_VARS) for s in ("x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2")]


def branch_normal(t: Fraction, wp: Fraction, x1: Fraction, x2: Fraction, x3: Fraction) -> list[Fraction]:
    """Expected normal of a branch image at [x : t x] through the preimage with root w'."""
    if wp == 0 and x3 == 0:
        return [-t * x2 ** 2, t * x1 * x2, -t * x1 ** 2, x2 ** 2, -x1 * x2, x1 ** 2]
    return [t * x3 ** 2, -t * x3 * wp, t * wp ** 2, -x3 ** 2, x3 * wp, -wp ** 2]


def _parallel(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return rank_rational([list(u), list(v)]) <= 1


@dataclass(frozen=True)
class BranchSample:
    t: Fraction
    x: tuple[Fraction, Fraction, Fraction]
    roots: tuple[Fraction, Fraction]
    generators_vanish: bool
    resultant_vanishes: bool
    jacobian_ranks: tuple[int, int]
    first_columns_rank: tuple[int, int]
    injective: tuple[bool, bool]
    normals_match: tuple[bool, bool]
    normals_parallel: bool
    dedicated: bool

    @property
    def ok(self) -> bool:
        return (self.generators_vanish and self.resultant_vanishes and self.roots[0] != self.roots[1]
                and self.jacobian_ranks == (3, 3) and self.first_columns_rank == (2, 2)
                and all(self.injective) and all(self.normals_match) and not self.normals_parallel)


def _rand_nonzero(rng: random.Random, bound: int = 9) -> Fraction:
    while True:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
        if v:
            return v


def sample_branch_point(rng: random.Random, max_tries: int = 100):
    """A rank-one point [x : t x] with two distinct preimages, built from chosen roots."""
    for _ in range(max_tries):
        r1 = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        r2 = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if r1 == r2:
            continue
        x1 = _rand_nonzero(rng)
        t = _rand_nonzero(rng)
        x2 = r1 + r2
        x3 = r1 * r2 / x1
        if x2 * x2 - 4 * x1 * x3 == 0:
            continue
        return t, (x1, x2, x3), (r1, r2)
    raise RuntimeError("could not find a nondegenerate sample point")


def check_branch_point(t: Fraction, x: Sequence[Fraction], roots: Sequence[Fraction],
                       dedicated: bool = False) -> BranchSample:
    gens = normalization_generators()
    J = PolyMatrix.from_rows([[g.diff(v) for v in NU_VARS] for g in gens], NU_VARS)
    R = resultant_poly()
    x1, x2, x3 = x
    base = {"x1": x1, "x2": x2, "x3": x3, "y1": t * x1, "y2": t * x2, "y3": t * x3}
    vanish = True
    ranks = []
    first = []
    inj = []
    normals = []
    matches = []
    for wp in roots:
        pt = dict(base, w=t * wp, **{"w'": wp})
        vanish = vanish and all(g.evaluate(pt) == 0 for g in gens)
        Jv = J.evaluate(pt)
        ranks.append(rank_rational(Jv))
        first.append(rank_rational([r[:2] for r in Jv]))
        kernel = nullspace(Jv, len(NU_VARS))
        inj.append(rank_rational([v[2:] for v in kernel]) == len(kernel))
        projected = [v[2:] for v in kernel]
        normal = nullspace(projected, 6)
        normal = normal[0] if len(normal) == 1 else None
        normals.append(normal)
        expected = branch_normal(t, wp, x1, x2, x3)
        matches.append(normal is not None and _parallel(normal, expected))
    parallel = normals[0] is None or normals[1] is None or _parallel(normals[0], normals[1])
    return BranchSample(t, tuple(x), tuple(roots), vanish, R.evaluate(base) == 0, tuple(ranks),
                        tuple(first), tuple(inj), tuple(matches), parallel, dedicated)


def dedicated_samples() -> list[tuple[Fraction, tuple, tuple]]:
    """Points with x3 = 0, where one preimage has w' = 0."""
    out = []
    for t, x1, x2 in ((Fraction(2), Fraction(1), Fraction(3)), (Fraction(-1, 2), Fraction(5), Fraction(-2))):
        out.append((t, (x1, x2, Fraction(0)), (Fraction(0), x2)))
    return out


@dataclass(frozen=True)
class ResultantReport:
    elimination_ok: bool
    elimination_ideal: tuple[Poly, ...]
    singular_locus_ok: bool
    minors_in_jacobian_radical: tuple[int | None, ...]
    jacobian_in_minors_radical: tuple[int | None, ...]
    branch_check_ok: bool | None
    samples: tuple[BranchSample, ...]
    seed: int


def resultant_suite(samples: int = 25, seed: int = 0, power_bound: int = 10,
                    step_budget: int = DEFAULT_STEP_BUDGET) -> ResultantReport:
    gens = normalization_generators()
    elim = eliminate(IdealBasis.of(gens, vars=NU_VARS), ("w", "w'"), step_budget)
    R = resultant_poly()
    elim_ok = len(elim) == 1 and elim.generators[0].with_vars(R_VARS).primitive() == R.primitive()

    jac = IdealBasis.of([R] + [R.diff(v) for v in R_VARS], vars=R_VARS)
    GJ = groebner(jac, step_budget)
    mins = rank_one_minors()
    GM = groebner(IdealBasis.of(mins, vars=R_VARS), step_budget)
    m_in_j = tuple(in_radical(GJ, m, power_bound, step_budget) for m in mins)
    j_in_m = tuple(in_radical(GM, g, power_bound, step_budget) for g in jac.generators if g)
    sing_ok = all(k is not None for k in m_in_j + j_in_m)

    checked = []
    if samples > 0:
        rng = random.Random(seed)
        for t, x, roots in dedicated_samples():
            checked.append(check_branch_point(t, x, roots, dedicated=True))
        for _ in range(samples):
            checked.append(check_branch_point(*sample_branch_point(rng)))
    branch_ok = all(s.ok for s in checked) if checked else None
    return ResultantReport(elim_ok, elim.generators, sing_ok, m_in_j, j_in_m, branch_ok,
                           tuple(checked), seed)


def degree_225_check():
    """Degree of the surface W swept by second-type lines, and its H_X coefficient."""
    from .chow import FClass, class_S, integrate_F, CUBIC_DEGREE
    pairing = integrate_F(class_S() * FClass("H_F^2 - c2"))
    return pairing, pairing / CUBIC_DEGREE


# ---------------------------------------------------------------------------
# scenario files


def parse_scenario(text: str) -> tuple[str, NormalFormData, dict[str, str]]:
    """Read ``key = value`` lines; ``kind`` selects the normal form, other
    known keys are polynomials in the shared grammar.  Returns the kind, the
    data and any remaining settings (for example ``a`` or ``point``)."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise NormalFormError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise NormalFormError(f"line {lineno}: empty key")
        entries[key] = value
    kind = entries.pop("kind", "type2full")
    if kind not in KINDS:
        raise NormalFormError(f"unknown kind {kind!r}")
    known = {"Q0", "Q1", "P", "Q3", "Q4", "Q5", "c", "y1", "y2", "y1'", "y2'",
             "c0", "d0", "c01", "d01", "c1", "d1"}
    polys = {k: parse_poly(v) for k, v in entries.items() if k in known}
    settings = {k: v for k, v in entries.items() if k not in known}
    data = NormalFormData(polys.pop("Q0", Poly.const(0)), polys.pop("Q1", Poly.const(0)),
                          polys.pop("P", Poly.const(0)), polys)
    return kind, data, settings
