"""Resultants and common roots of binary quadrics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrix import rank_rational
from .poly import Poly

BINARY_VARS = ("lam", "mu")


class BinaryFormError(ValueError):
    pass


def quadric_coefficients(q: Poly, vars: Sequence[str] = BINARY_VARS) -> tuple[Fraction, Fraction, Fraction]:
    """(a, b, c) with q = a*u^2 + b*u*v + c*v^2 for the two named variables."""
    u, v = vars
    extra = [x for x in q.used_vars() if x not in vars]
    if extra:
        raise BinaryFormError(f"binary quadric depends on {extra}")
    if q and not (q.is_homogeneous() and q.total_degree() == 2):
        raise BinaryFormError(f"{q} is not a binary quadric")
    return (q.coefficient({u: 2}), q.coefficient({u: 1, v: 1}), q.coefficient({v: 2}))


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in m]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k]), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return det


def sylvester_resultant(f: Sequence[Fraction], g: Sequence[Fraction]) -> Fraction:
    """Resultant of two binary quadrics given by coefficient triples."""
    a, b, c = f
    d, e, h = g
    return _det([[a, b, c, 0], [0, a, b, c], [d, e, h, 0], [0, d, e, h]])


def discriminant(q: Sequence[Fraction]) -> Fraction:
    a, b, c = q
    return b * b - 4 * a * c


@dataclass(frozen=True)
class BinaryReport:
    resultant: Fraction
    discriminants: tuple[Fraction, Fraction]
    common_root_count: int
    proportional: bool
    double_root: bool


def binary_form_tools(q0: Poly, q1: Poly, vars: Sequence[str] = BINARY_VARS) -> BinaryReport:
    f = quadric_coefficients(q0, vars)
    g = quadric_coefficients(q1, vars)
    if not any(f) and not any(g):
        raise BinaryFormError("both quadrics vanish identically")
    res = sylvester_resultant(f, g)
    discs = (discriminant(f), discriminant(g))
    proportional = rank_rational([f, g]) <= 1
    if proportional:
        count = 2
        nonzero = f if any(f) else g
        double = discriminant(nonzero) == 0
    elif res == 0:
        count = 1
        double = False
    else:
        count = 0
        double = False
    return BinaryReport(res, discs, count, proportional, double)
