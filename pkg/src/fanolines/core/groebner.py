"""Buchberger's algorithm, normal forms, elimination and vanishing-set tests."""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .poly import GREVLEX, MonomialOrder, Poly, block_order, poly_gcd

DEFAULT_STEP_BUDGET = 10_000_000


class StepBudgetExceeded(RuntimeError):
    """The configured number of reduction steps ran out."""


class Inconclusive(RuntimeError):
    """A bounded search ended without deciding the question."""


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple[Poly, ...]
    order: MonomialOrder = GREVLEX
    reduced: bool = False
    vars: tuple[str, ...] = field(default=())

    def __post_init__(self):
        allv = tuple(self.vars)
        for g in self.generators:
            allv = allv + tuple(v for v in g.vars if v not in allv)
        object.__setattr__(self, "vars", allv)
        object.__setattr__(self, "generators", tuple(g.with_vars(allv) for g in self.generators))

    @classmethod
    def of(cls, gens: Sequence[Poly], order: MonomialOrder = GREVLEX,
           vars: Sequence[str] = ()) -> "IdealBasis":
        return cls(tuple(gens), order, False, tuple(vars))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


class _Counter:
    def __init__(self, budget: int):
        self.left = budget

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise StepBudgetExceeded("Groebner step budget exhausted")


# Internally a polynomial is a dict exp -> Fraction plus a cached sorted list of
# exponents; leading terms are found with the order key.


def _lead(p: dict, key):
    return max(p, key=key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce(p: dict, basis: list[tuple[tuple, Fraction, dict]], key, counter, full=True) -> dict:
    """Reduce ``p`` by ``basis`` entries (lead exponent, lead coefficient, poly)."""
    p = dict(p)
    rem = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for le, lc, g in basis:
            if _divides(le, e):
                counter.tick()
                shift = tuple(x - y for x, y in zip(e, le))
                q = c / lc
                for ge, gc in g.items():
                    t = tuple(x + y for x, y in zip(ge, shift))
                    s = p.get(t, 0) - q * gc
                    if s:
                        p[t] = s
                    else:
                        p.pop(t, None)
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[e] = c
            del p[e]
    return rem


def _monic(p: dict, key) -> dict:
    lc = p[max(p, key=key)]
    if lc == 1:
        return p
    return {e: c / lc for e, c in p.items()}


def _spoly(f: dict, g: dict, key) -> dict:
    lf = max(f, key=key)
    lg = max(g, key=key)
    m = _lcm(lf, lg)
    sf = tuple(x - y for x, y in zip(m, lf))
    sg = tuple(x - y for x, y in zip(m, lg))
    cf = f[lf]
    cg = g[lg]
    out = {}
    for e, c in f.items():
        t = tuple(x + y for x, y in zip(e, sf))
        out[t] = c / cf
    for e, c in g.items():
        t = tuple(x + y for x, y in zip(e, sg))
        s = out.get(t, 0) - c / cg
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def _buchberger(polys: list[dict], key, counter) -> list[dict]:
    basis: list[dict] = []
    leads: list[tuple] = []
    pairs: set[tuple[int, int]] = set()

    def add(h):
        h = _monic(h, key)
        idx = len(basis)
        basis.append(h)
        leads.append(max(h, key=key))
        for i in range(idx):
            if basis[i] is not None:
                pairs.add((i, idx))

    for p in polys:
        if p:
            entries = [(leads[i], Fraction(1), basis[i]) for i in range(len(basis)) if basis[i] is not None]
            r = _reduce(p, entries, key, counter)
            if r:
                add(r)

    while pairs:
        # normal selection strategy
        i, j = min(pairs, key=lambda ij: (key(_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        counter.tick()
        li, lj = leads[i], leads[j]
        m = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        chain = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(leads[k], m):
                a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    chain = True
                    break
        if chain:
            continue
        s = _spoly(basis[i], basis[j], key)
        entries = [(leads[k], Fraction(1), basis[k]) for k in range(len(basis))]
        r = _reduce(s, entries, key, counter)
        if r:
            add(r)
    return basis


def _interreduce(basis: list[dict], key, counter) -> list[dict]:
    # drop elements whose lead is divisible by another lead, then tail-reduce
    items = [(max(b, key=key), b) for b in basis if b]
    items.sort(key=lambda t: key(t[0]))
    minimal = []
    for i, (le, b) in enumerate(items):
        if any(_divides(lo, le) and (lo != le or j < i) for j, (lo, _) in enumerate(items) if j != i):
            continue
        minimal.append((le, b))
    out = []
    for idx, (le, b) in enumerate(minimal):
        others = [(lo, Fraction(1), g) for j, (lo, g) in enumerate(minimal) if j != idx]
        lc = b[le]
        tail = {e: c / lc for e, c in b.items() if e != le}
        r = _reduce(tail, others, key, counter)
        r[le] = Fraction(1)
        out.append(r)
    out.sort(key=lambda p: key(max(p, key=key)))
    return out


def groebner(ideal: IdealBasis, step_budget: int = DEFAULT_STEP_BUDGET) -> IdealBasis:
    """Reduced Groebner basis of ``ideal`` with respect to its order."""
    key = ideal.order.key
    counter = _Counter(step_budget)
    raw = _buchberger([dict(g.terms) for g in ideal.generators if g], key, counter)
    red = _interreduce(raw, key, counter)
    gens = tuple(Poly._raw(ideal.vars, p) for p in red)
    out = IdealBasis(gens, ideal.order, True, ideal.vars)
    for rec in _recorders:
        rec.append(out)
    return out


_recorders: list[list[IdealBasis]] = []


@contextmanager
def record_bases():
    """Collect every reduced basis computed by ``groebner`` inside the block."""
    seen: list[IdealBasis] = []
    _recorders.append(seen)
    try:
        yield seen
    finally:
        _recorders[:] = [r for r in _recorders if r is not seen]


def _entries(G: IdealBasis):
    key = G.order.key
    out = []
    for g in G.generators:
        le = g.leading_term(G.order)
        out.append((le[0], le[1], g.terms))
    return key, out


def normal_form(p: Poly, G: IdealBasis, step_budget: int = DEFAULT_STEP_BUDGET) -> Poly:
    """Remainder of ``p`` on division by a reduced basis ``G``."""
    if not G.reduced:
        raise ValueError("normal_form needs a reduced Groebner basis")
    vars = G.vars + tuple(v for v in p.vars if v not in G.vars)
    if vars != G.vars:
        G = IdealBasis(tuple(g.with_vars(vars) for g in G.generators), G.order, True, vars)
    p = p.with_vars(vars)
    key, entries = _entries(G)
    r = _reduce(p.terms, entries, key, _Counter(step_budget))
    return Poly._raw(vars, r)


def contains(G: IdealBasis, p: Poly, step_budget: int = DEFAULT_STEP_BUDGET) -> bool:
    return normal_form(p, G, step_budget).is_zero()


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder = GREVLEX) -> Poly:
    f, g = f._align(g)
    return Poly._raw(f.vars, _spoly(f.terms, g.terms, order.key))


def is_groebner(G: IdealBasis, step_budget: int = DEFAULT_STEP_BUDGET) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    key, entries = _entries(G)
    counter = _Counter(step_budget)
    gens = G.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            s = _spoly(gens[i].terms, gens[j].terms, key)
            if _reduce(s, entries, key, counter):
                return False
    return True


def ideal_equal(a: IdealBasis, b: IdealBasis, step_budget: int = DEFAULT_STEP_BUDGET) -> bool:
    ga = groebner(a, step_budget)
    gb = groebner(IdealBasis(b.generators, a.order, False, b.vars), step_budget)
    return all(contains(ga, g) for g in gb.generators) and all(contains(gb, g) for g in ga.generators)


def eliminate(ideal: IdealBasis, drop_vars: Sequence[str],
              step_budget: int = DEFAULT_STEP_BUDGET) -> IdealBasis:
    """Generators of the elimination ideal in the remaining variables.

    The returned basis is the reduced Groebner basis of the elimination ideal
    for grevlex on the kept variables.
    """
    drop = tuple(drop_vars)
    missing = [v for v in drop if v not in ideal.vars]
    keep = tuple(v for v in ideal.vars if v not in drop)
    vars = tuple(v for v in drop if v not in missing) + keep
    order = block_order(len(vars) - len(keep)) if len(vars) > len(keep) else GREVLEX
    G = groebner(IdealBasis(tuple(g.with_vars(vars) for g in ideal.generators), order, False, vars),
                 step_budget)
    kept = [g for g in G.generators if not any(g.degree_in(v) > 0 for v in drop)]
    return IdealBasis(tuple(g.with_vars(keep) for g in kept), GREVLEX, True, keep)


def in_radical(G: IdealBasis, f: Poly, power_bound: int,
               step_budget: int = DEFAULT_STEP_BUDGET) -> int | None:
    """Smallest k <= power_bound with f^k in the ideal, or None."""
    power = f
    for k in range(1, power_bound + 1):
        if normal_form(power, G, step_budget).is_zero():
            return k
        power = normal_form(power * f, G, step_budget)
        if power.is_zero():
            return k + 1 if k + 1 <= power_bound else None
    return None


def quotient_dimension(G: IdealBasis) -> int | None:
    """Vector-space dimension of the quotient ring, or None if infinite."""
    if not G.reduced:
        raise ValueError("needs a reduced Groebner basis")
    n = len(G.vars)
    leads = [g.leading_term(G.order)[0] for g in G.generators]
    if any(sum(le) == 0 for le in leads):
        return 0
    bounds = []
    for i in range(n):
        pure = [le[i] for le in leads if le[i] and sum(le) == le[i]]
        if not pure:
            return None
        bounds.append(min(pure))
    count = 0

    def walk(i, exp):
        nonlocal count
        if i == n:
            if not any(_divides(le, exp) for le in leads):
                count += 1
            return
        for k in range(bounds[i]):
            walk(i + 1, exp + (k,))

    walk(0, ())
    return count


@dataclass(frozen=True)
class VanishingReport:
    only_origin: bool
    kappa_power: int | None
    lambda_power: int | None
    basis_size: int
    quotient_dim: int | None


def origin_vanishing_report(ideal: IdealBasis, power_bound: int = 20,
                            step_budget: int = DEFAULT_STEP_BUDGET) -> VanishingReport:
    if len(ideal.vars) != 2:
        raise ValueError(f"expected an ideal in exactly two variables, got {ideal.vars}")
    G = groebner(ideal, step_budget)
    dim = quotient_dimension(G)
    u, v = (Poly.var(x, G.vars) for x in G.vars)
    a = in_radical(G, u, power_bound, step_budget)
    b = in_radical(G, v, power_bound, step_budget)
    if a is not None and b is not None:
        return VanishingReport(True, a, b, len(G), dim)
    nonzero = [g for g in ideal.generators if g]
    if not nonzero:
        return VanishingReport(False, a, b, 0, dim)
    common = nonzero[0]
    for g in nonzero[1:]:
        common = poly_gcd(common, g)
    if not common.is_constant():
        return VanishingReport(False, a, b, len(G), dim)
    # zero-dimensional: if only the origin vanished, (u, v)^dim would lie in the ideal
    if dim is not None and dim <= power_bound:
        return VanishingReport(False, a, b, len(G), dim)
    raise Inconclusive(f"no power of either variable up to {power_bound} lies in the ideal")


def only_origin_vanishing(ideal: IdealBasis, power_bound: int = 20,
                          step_budget: int = DEFAULT_STEP_BUDGET) -> bool:
    """True iff the common zeros of a two-variable ideal lie in {(0, 0)}.

    Raises :class:`Inconclusive` when the bounded membership search cannot decide.
    """
    return origin_vanishing_report(ideal, power_bound, step_budget).only_origin
