"""Schubert calculus on G(k, n) and Chern classes of tautological bundles.

Classes are stored in the Schubert basis.  Products use Littlewood-Richardson
coefficients computed by enumerating LR tableaux, with the Pieri rule as a
shortcut when one factor is a special class.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .core.poly import Poly, Scalar

Partition = tuple[int, ...]
G26 = (2, 6)


class AmbientMismatch(ValueError):
    pass


def normalize_partition(parts: Iterable[int], ambient: tuple[int, int] = G26) -> Partition:
    k, n = ambient
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts.pop()
    if len(parts) > k or (parts and parts[0] > n - k):
        raise ValueError(f"{parts} does not fit the {k}x{n - k} box")
    return tuple(parts) + (0,) * (k - len(parts))


def partitions_in_box(k: int, m: int, size: int | None = None) -> list[Partition]:
    """All partitions in the k x m box (optionally of a given size), in a fixed order."""
    out = []

    def rec(prefix, maxpart):
        if len(prefix) == k:
            if size is None or sum(prefix) == size:
                out.append(tuple(prefix))
            return
        for p in range(maxpart, -1, -1):
            rec(prefix + [p], p)

    rec([], m)
    return sorted(out, key=lambda p: (sum(p), tuple(-x for x in p)))


def complement(lam: Partition, ambient: tuple[int, int] = G26) -> Partition:
    k, n = ambient
    return tuple(n - k - lam[k - 1 - i] for i in range(k))


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


def _fits(nu: Partition, lam: Partition) -> bool:
    return all(a >= b for a, b in zip(nu, lam))


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of LR tableaux of skew shape nu/lam and content mu."""
    if sum(nu) != sum(lam) + sum(mu) or not _fits(nu, lam):
        return 0
    mu = tuple(p for p in mu if p)
    if not mu:
        return 1 if nu == lam else 0
    k = len(nu)
    lam = tuple(lam) + (0,) * (k - len(lam))
    cells = [(r, c) for r in range(k) for c in range(nu[r] - 1, lam[r] - 1, -1)]
    # reading order: rows top to bottom, each row right to left
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * len(mu)

    def rec(i):
        if i == len(cells):
            return 1 if counts == list(mu) else 0
        r, c = cells[i]
        total = 0
        for v in range(len(mu)):
            if counts[v] >= mu[v]:
                continue
            # lattice word condition
            if v > 0 and counts[v] + 1 > counts[v - 1]:
                continue
            # rows weakly increase left to right, so reading right to left it weakly decreases
            right = filling.get((r, c + 1))
            if right is not None and v > right:
                continue
            above = filling.get((r - 1, c))
            if above is not None and v <= above:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            total += rec(i + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return rec(0)


def _pieri(p: int, lam: Partition, ambient) -> dict[Partition, int]:
    """sigma_p * sigma_lam: add p boxes, no two in the same column."""
    k, n = ambient
    m = n - k
    out = {}

    def rec(i, left, nu):
        if i == k:
            if left == 0:
                out[tuple(nu)] = 1
            return
        upper = m if i == 0 else lam[i - 1]
        for add in range(min(left, upper - lam[i]), -1, -1):
            rec(i + 1, left - add, nu + [lam[i] + add])

    rec(0, p, [])
    return out


@lru_cache(maxsize=None)
def _product_table(lam: Partition, mu: Partition, ambient: tuple[int, int]) -> tuple:
    k, n = ambient
    size = sum(lam) + sum(mu)
    if size > k * (n - k):
        return ()
    if sum(1 for x in mu if x) <= 1:
        return tuple(sorted(_pieri(mu[0], lam, ambient).items()))
    if sum(1 for x in lam if x) <= 1:
        return tuple(sorted(_pieri(lam[0], mu, ambient).items()))
    out = []
    for nu in partitions_in_box(k, n - k, size):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


# ---------------------------------------------------------------------------
# Schubert classes


class SchubertClass:
    """Formal rational combination of Schubert cycles on G(k, n)."""

    __slots__ = ("ambient", "terms")

    def __init__(self, terms: Mapping[Iterable[int], Scalar] | None = None,
                 ambient: tuple[int, int] = G26):
        self.ambient = tuple(ambient)
        clean: dict[Partition, Fraction] = {}
        for lam, c in (terms or {}).items():
            lam = normalize_partition(lam, self.ambient)
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
                if not clean[lam]:
                    del clean[lam]
        self.terms = clean

    @classmethod
    def sigma(cls, *parts: int, ambient: tuple[int, int] = G26) -> "SchubertClass":
        return cls({parts: 1}, ambient)

    @classmethod
    def one(cls, ambient: tuple[int, int] = G26) -> "SchubertClass":
        return cls({(): 1}, ambient)

    @classmethod
    def point(cls, ambient: tuple[int, int] = G26) -> "SchubertClass":
        k, n = ambient
        return cls({(n - k,) * k: 1}, ambient)

    def _check(self, other):
        if not isinstance(other, SchubertClass):
            raise TypeError(f"cannot combine SchubertClass with {type(other).__name__}")
        if other.ambient != self.ambient:
            raise AmbientMismatch(f"G{self.ambient} vs G{other.ambient}")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, 0) + c
        return SchubertClass(terms, self.ambient)

    def __neg__(self):
        return SchubertClass({lam: -c for lam, c in self.terms.items()}, self.ambient)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SchubertClass({lam: c * other for lam, c in self.terms.items()}, self.ambient)
        if isinstance(other, SchubertClass):
            return lr_multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = SchubertClass.one(self.ambient)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def homogeneous_part(self, d: int) -> "SchubertClass":
        return SchubertClass({l: c for l, c in self.terms.items() if sum(l) == d}, self.ambient)

    def __str__(self):
        if not self.terms:
            return "0"
        top = self.point(self.ambient)
        (top_lam,) = top.terms
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))
        out = ""
        for lam, c in items:
            name = "pt" if lam == top_lam else (
                "1" if not any(lam) else "s[" + ",".join(str(p) for p in lam if p) + "]")
            a = abs(c)
            coeff = "" if a == 1 and name != "1" else (
                str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}")
            body = coeff + ("*" if coeff and name != "1" else "") + ("" if name == "1" and coeff else name)
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    __repr__ = __str__


def lr_multiply(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    a._check(b)
    terms: dict[Partition, Fraction] = {}
    for lam, x in a.terms.items():
        for mu, y in b.terms.items():
            for nu, c in _product_table(lam, mu, a.ambient):
                terms[nu] = terms.get(nu, 0) + x * y * c
    return SchubertClass(terms, a.ambient)


def pieri(p: int, a: SchubertClass) -> SchubertClass:
    terms: dict[Partition, Fraction] = {}
    for lam, x in a.terms.items():
        for nu, c in _pieri(p, lam, a.ambient).items():
            terms[nu] = terms.get(nu, 0) + x * c
    return SchubertClass(terms, a.ambient)


def integrate_G(a: SchubertClass) -> Fraction:
    """Degree of the top-dimensional part (coefficient of the point class)."""
    (top,) = SchubertClass.point(a.ambient).terms
    return a.terms.get(top, Fraction(0))


# ---------------------------------------------------------------------------
# tautological expressions and Chern classes

TAUT_VARS = ("e1", "e2")
TAUT_WEIGHTS = {"e1": 1, "e2": 2}


def taut(text_or_poly) -> Poly:
    from .core.poly import as_poly
    return as_poly(text_or_poly, TAUT_VARS).with_vars(TAUT_VARS)


def _symmetric_to_elementary(p: Poly) -> Poly:
    """Rewrite a symmetric polynomial in roots ra, rb via e1 = ra + rb, e2 = ra*rb."""
    e1, e2 = Poly.gens(TAUT_VARS)
    ra_rb = Poly.gens(("ra", "rb"))
    out = Poly.const(0, TAUT_VARS)
    rest = p.with_vars(("ra", "rb"))
    while rest:
        (i, j), c = max(rest.terms.items(), key=lambda t: t[0])  # lex leading term, i >= j
        if i < j:
            raise ValueError("polynomial is not symmetric")
        out = out + (e1 ** (i - j) * e2 ** j).scale(c)
        sub = ((ra_rb[0] + ra_rb[1]) ** (i - j) * (ra_rb[0] * ra_rb[1]) ** j).scale(c)
        rest = rest - sub.with_vars(("ra", "rb"))
    return out


def sym_power_chern(d: int) -> dict[int, Poly]:
    """Graded pieces of c(Sym^d E) for a rank-2 bundle E with c(E) = 1 + e1 + e2."""
    if d < 1:
        raise ValueError("symmetric power must be at least 1")
    ra, rb = Poly.gens(("ra", "rb"))
    total = Poly.const(1, ("ra", "rb"))
    for i in range(d + 1):
        total = total * (1 + ra.scale(i) + rb.scale(d - i))
    return {deg: _symmetric_to_elementary(part)
            for deg, part in total.homogeneous_parts().items()}


def whitney_sigma2() -> Poly:
    """sigma_2 = c_2(Q) from c(U)c(Q) = 1, with c(U) = 1 - e1 + e2."""
    e1, e2 = Poly.gens(TAUT_VARS)
    return e1 ** 2 - e2


def whitney_sigma(i: int) -> Poly:
    """c_i(Q) as a polynomial in e1, e2 by inverting c(U) = 1 - e1 + e2."""
    e1, e2 = Poly.gens(TAUT_VARS)
    seq = [Poly.const(1, TAUT_VARS)]
    # c(Q) = 1 / (1 - e1 + e2): s_i = e1 s_{i-1} - e2 s_{i-2}
    for k in range(1, i + 1):
        nxt = e1 * seq[k - 1]
        if k >= 2:
            nxt = nxt - e2 * seq[k - 2]
        seq.append(nxt)
    return seq[i]


def taut_to_schubert(t: Poly, ambient: tuple[int, int] = G26) -> SchubertClass:
    """Substitute e1 -> sigma_1, e2 -> sigma_{1,1} and expand in the Schubert basis."""
    t = taut(t)
    s1 = SchubertClass.sigma(1, ambient=ambient)
    s11 = SchubertClass.sigma(1, 1, ambient=ambient)
    out = SchubertClass({}, ambient)
    for (i, j), c in t.terms.items():
        out = out + (s1 ** i) * (s11 ** j) * c
    return out


def class_of_F() -> SchubertClass:
    """Class of the Fano variety of lines: c_4 of Sym^3 of the dual tautological bundle."""
    return taut_to_schubert(sym_power_chern(3)[4])


def class_of_F_by_sigmas() -> SchubertClass:
    s = [SchubertClass.sigma(i) if i else SchubertClass.one() for i in range(5)]
    return s[2] * s[2] * 27 - s[1] * s[3] * 9 - s[4] * 18
