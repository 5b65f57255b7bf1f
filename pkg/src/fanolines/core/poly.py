"""Sparse multivariate polynomials over Q.

A :class:`Poly` is an immutable map from exponent tuples to
:class:`fractions.Fraction` coefficients, together with the ordered tuple of
variable names the exponents refer to.  Arithmetic between polynomials over
different variable tuples first embeds both into the union of their variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order; larger key means larger monomial.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``.  The block order
    compares the first ``block`` variables by grevlex and breaks ties with
    grevlex on the remaining ones, so it eliminates the first block.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise ValueError("block order needs a positive block size")

    def key(self, exp: Exponent):
        if self.kind == "grevlex":
            return _grevlex_key(exp)
        if self.kind == "lex":
            return exp
        k = self.block
        return (_grevlex_key(exp[:k]), _grevlex_key(exp[k:]))


def _grevlex_key(exp: Exponent):
    return (sum(exp), tuple(-e for e in reversed(exp)))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(size: int) -> MonomialOrder:
    return MonomialOrder("block", size)


# ---------------------------------------------------------------------------
# the polynomial type


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], Scalar] | None = None,
                 vars: Sequence[str] = ()):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match {n} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exponent, Fraction]) -> "Poly":
        # trusted constructor: no zero coefficients, tuple exponents of right length
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar, vars: Sequence[str] = ()) -> "Poly":
        vars = tuple(vars)
        c = _as_fraction(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, name: str, vars: Sequence[str] | None = None) -> "Poly":
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            raise ValueError(f"{name!r} not among {vars}")
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(vars, {exp: Fraction(1)})

    @classmethod
    def gens(cls, names: Sequence[str] | str) -> tuple["Poly", ...]:
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        names = tuple(names)
        return tuple(cls.var(v, names) for v in names)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def used_vars(self) -> tuple[str, ...]:
        used = set()
        for exp in self.terms:
            used.update(i for i, e in enumerate(exp) if e)
        return tuple(v for i, v in enumerate(self.vars) if i in used)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def weighted_degree(self, weights: Mapping[str, int]) -> int:
        w = [weights.get(v, 1) for v in self.vars]
        return max((sum(a * b for a, b in zip(w, e)) for e in self.terms), default=-1)

    def is_homogeneous(self, weights: Mapping[str, int] | None = None) -> bool:
        w = [(weights or {}).get(v, 1) for v in self.vars]
        degs = {sum(a * b for a, b in zip(w, e)) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        p = self.with_vars(self._union_vars(tuple(monomial)))
        exp = tuple(monomial.get(v, 0) for v in p.vars)
        return p.terms.get(exp, Fraction(0))

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = GREVLEX) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms.items(), key=lambda t: order.key(t[0]))

    # -- variable bookkeeping ----------------------------------------------

    def _union_vars(self, other_vars: tuple[str, ...]) -> tuple[str, ...]:
        if other_vars == self.vars:
            return self.vars
        return self.vars + tuple(v for v in other_vars if v not in self.vars)

    def with_vars(self, vars: Sequence[str]) -> "Poly":
        """Re-embed into the ring over ``vars`` (must contain every used variable)."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        idx = []
        for i, v in enumerate(self.vars):
            if v in pos:
                idx.append((i, pos[v]))
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {v!r} is used but not in {vars}")
        n = len(vars)
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for i, j in idx:
                new[j] = exp[i]
            terms[tuple(new)] = c
        return Poly._raw(vars, terms)

    def _align(self, other) -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            other = Poly.const(other, self.vars)
            return self, other
        if other.vars == self.vars:
            return self, other
        vars = self._union_vars(other.vars)
        return self.with_vars(vars), other.with_vars(vars)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly._raw(a.vars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Poly":
        c = _as_fraction(c)
        if not c:
            return Poly._raw(self.vars, {})
        return Poly._raw(self.vars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._align(other)
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly._raw(a.vars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self.scale(1 / Fraction(other))
        if isinstance(other, Poly):
            return exact_div(self, other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison / hashing -----------------------------------------------

    def _canonical(self):
        items = []
        for e, c in self.terms.items():
            mono = tuple((v, k) for v, k in zip(self.vars, e) if k)
            items.append((tuple(sorted(mono)), c))
        return frozenset(items)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.vars == self.vars:
            return self.terms == other.terms
        return self._canonical() == other._canonical()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._canonical())
        return self._hash

    # -- calculus and substitution -----------------------------------------

    def diff(self, name: str) -> "Poly":
        if name not in self.vars:
            return Poly._raw(self.vars, {})
        i = self.vars.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                terms[ne] = c * e[i]
        return Poly._raw(self.vars, terms)

    def subs(self, mapping: Mapping[str, "Poly | Scalar"]) -> "Poly":
        """Simultaneous substitution of polynomials or rationals for variables."""
        mapping = {k: v for k, v in mapping.items() if k in self.vars}
        if not mapping:
            return self
        keep = tuple(v for v in self.vars if v not in mapping)
        out_vars = keep
        for v in mapping.values():
            if isinstance(v, Poly):
                out_vars = out_vars + tuple(x for x in v.vars if x not in out_vars)
        images = {k: (v.with_vars(out_vars) if isinstance(v, Poly) else Poly.const(v, out_vars))
                  for k, v in mapping.items()}
        keep_pos = [out_vars.index(v) for v in keep]
        power_cache: dict[tuple[str, int], Poly] = {}

        def power(name, k):
            key = (name, k)
            if key not in power_cache:
                power_cache[key] = images[name] ** k
            return power_cache[key]

        result = Poly._raw(out_vars, {})
        n = len(out_vars)
        for e, c in self.terms.items():
            base = [0] * n
            term = None
            for v, k in zip(self.vars, e):
                if v in images:
                    if k:
                        term = power(v, k) if term is None else term * power(v, k)
            for v, j in zip(keep, keep_pos):
                base[j] = e[self.vars.index(v)]
            mono = Poly._raw(out_vars, {tuple(base): c})
            result = result + (mono if term is None else mono * term)
        return result

    def evaluate(self, point: Mapping[str, Scalar] | Sequence[Scalar]) -> Fraction:
        """Evaluate at a rational point (mapping, or sequence in ``vars`` order)."""
        if not isinstance(point, Mapping):
            if len(point) != len(self.vars):
                raise ValueError(f"point has {len(point)} coordinates, expected {len(self.vars)}")
            values = [_as_fraction(x) for x in point]
        else:
            missing = [v for v in self.used_vars() if v not in point]
            if missing:
                raise ValueError(f"no value for {missing}")
            values = [_as_fraction(point.get(v, 0)) for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(values, e):
                if k:
                    t *= x ** k
            total += t
        return total

    def homogeneous_parts(self, subset: Sequence[str] | None = None,
                          weights: Mapping[str, int] | None = None) -> dict[int, "Poly"]:
        """Split by (weighted) degree in the variables of ``subset`` (default: all)."""
        subset = set(self.vars if subset is None else subset)
        w = [(weights or {}).get(v, 1) if v in subset else 0 for v in self.vars]
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = sum(a * b for a, b in zip(w, e))
            parts.setdefault(d, {})[e] = c
        return {d: Poly._raw(self.vars, t) for d, t in sorted(parts.items())}

    def coefficients_in(self, subset: Sequence[str]) -> dict[Exponent, "Poly"]:
        """View as a polynomial in ``subset`` with coefficients in the other variables."""
        idx = [self.vars.index(v) for v in subset]
        rest = tuple(v for v in self.vars if v not in subset)
        ridx = [self.vars.index(v) for v in rest]
        out: dict[Exponent, dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            out.setdefault(key, {})[tuple(e[i] for i in ridx)] = c
        return {k: Poly._raw(rest, t) for k, t in out.items()}

    # -- content ------------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self, order: MonomialOrder = GREVLEX) -> "Poly":
        """Integer primitive part with positive leading coefficient."""
        if not self.terms:
            return self
        p = self.scale(1 / self.content())
        if p.leading_term(order)[1] < 0:
            p = -p
        return p

    def monic(self, order: MonomialOrder = GREVLEX) -> "Poly":
        return self.scale(1 / self.leading_term(order)[1])

    # -- display ------------------------------------------------------------

    def format(self, order: MonomialOrder = GREVLEX) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            a = abs(c)
            if not mono:
                body = _fmt_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_fmt_rational(a)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()!r}, vars={self.vars})"


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def as_poly(x, vars: Sequence[str] = ()) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, str):
        return parse_poly(x, vars or None)
    return Poly.const(x, vars)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_']*)|(?P<op>[-+*^/()]))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnknownVariableError(ValueError):
    pass


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, vars):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = vars

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None):
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            raise PolySyntaxError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] in ("*", "/"):
            op, _, pos = self.take()[1], None, self.tokens[self.i - 1][2]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    raise PolySyntaxError("division only by nonzero constants", pos)
                p = p.scale(1 / q.constant_value())
        return p

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                raise PolySyntaxError("exponent must be a nonnegative integer", tok[2])
            self.take()
            base = base ** int(tok[1])
        return base

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            return Poly.const(int(value), self.vars or ())
        if kind == "name":
            self.take()
            if self.vars is not None and value not in self.vars:
                raise UnknownVariableError(f"unknown variable {value!r} at position {pos}")
            return Poly.var(value, self.vars if self.vars is not None else (value,))
        if value == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        raise PolySyntaxError(f"unexpected {value or 'end of input'!r}", pos)


def parse_poly(text: str, vars: Sequence[str] | None = None) -> Poly:
    """Parse ``text`` in the shared polynomial grammar.

    With ``vars`` given, the result lives over exactly those variables and any
    other identifier is an error; otherwise variables are taken in order of
    first appearance.
    """
    vars = tuple(vars) if vars is not None else None
    p = _Parser(text, vars).parse()
    if vars is not None:
        return p.with_vars(vars)
    names = []
    for tok in _tokenize(text):
        if tok[0] == "name" and tok[1] not in names:
            names.append(tok[1])
    return p.with_vars(tuple(v for v in names if v in p.vars) +
                       tuple(v for v in p.vars if v not in names))


# ---------------------------------------------------------------------------
# division and gcd


def divide(f: Poly, divisors: Sequence[Poly], order: MonomialOrder = GREVLEX):
    """Multivariate division: returns (quotients, remainder)."""
    vars = f.vars
    for g in divisors:
        vars = vars + tuple(v for v in g.vars if v not in vars)
    f = f.with_vars(vars)
    divisors = [g.with_vars(vars) for g in divisors]
    leads = [g.leading_term(order) for g in divisors]
    quotients = [dict() for _ in divisors]
    rem: dict[Exponent, Fraction] = {}
    p = dict(f.terms)
    key = order.key
    while p:
        e, c = max(p.items(), key=lambda t: key(t[0]))
        for i, (le, lc) in enumerate(leads):
            if all(a >= b for a, b in zip(e, le)):
                shift = tuple(a - b for a, b in zip(e, le))
                q = c / lc
                quotients[i][shift] = quotients[i].get(shift, 0) + q
                for ge, gc in divisors[i].terms.items():
                    t = tuple(a + b for a, b in zip(ge, shift))
                    s = p.get(t, 0) - q * gc
                    if s:
                        p[t] = s
                    else:
                        p.pop(t, None)
                break
        else:
            rem[e] = c
            del p[e]
    return [Poly._raw(vars, q) for q in quotients], Poly._raw(vars, rem)


class InexactDivisionError(ArithmeticError):
    pass


def exact_div(f: Poly, g: Poly) -> Poly:
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    (q,), r = divide(f, [g], LEX)
    if r:
        raise InexactDivisionError(f"{g} does not divide {f}")
    return q


def _univariate_view(p: Poly, name: str, rest: tuple[str, ...]) -> dict[int, Poly]:
    i = p.vars.index(name)
    out: dict[int, dict] = {}
    ridx = [p.vars.index(v) for v in rest]
    for e, c in p.terms.items():
        out.setdefault(e[i], {})[tuple(e[j] for j in ridx)] = c
    return {k: Poly._raw(rest, t) for k, t in out.items()}


def _from_univariate(coeffs: Mapping[int, Poly], name: str, rest: tuple[str, ...],
                     vars: tuple[str, ...]) -> Poly:
    pos = vars.index(name)
    ridx = [vars.index(v) for v in rest]
    terms = {}
    n = len(vars)
    for k, c in coeffs.items():
        for e, v in c.terms.items():
            new = [0] * n
            new[pos] = k
            for j, x in zip(ridx, e):
                new[j] = x
            terms[tuple(new)] = v
    return Poly._raw(vars, terms)


def _gcd_rec(p: Poly, q: Poly) -> Poly:
    # p, q over identical vars; result is primitive up to a rational unit
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if p.is_constant() or q.is_constant():
        return Poly.const(1, p.vars)
    used = set(p.used_vars()) | set(q.used_vars())
    name = next(v for v in p.vars if v in used)
    rest = tuple(v for v in p.vars if v != name)
    if p.degree_in(name) == 0 and q.degree_in(name) == 0:
        sub = _gcd_rec(p.with_vars(rest), q.with_vars(rest))
        return sub.with_vars(p.vars)
    pu = _univariate_view(p, name, rest)
    qu = _univariate_view(q, name, rest)
    cont_p = _content_rec(pu.values(), rest)
    cont_q = _content_rec(qu.values(), rest)
    cont = _gcd_rec(cont_p, cont_q)
    pu = {k: exact_div(v, cont_p) for k, v in pu.items()}
    qu = {k: exact_div(v, cont_q) for k, v in qu.items()}
    a, b = pu, qu
    if max(a) < max(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b, rest)
        if not r:
            break
        cr = _content_rec(r.values(), rest)
        r = {k: exact_div(v, cr) for k, v in r.items()}
        a, b = b, r
    g = b
    if max(g) == 0:
        return cont.with_vars(p.vars)
    return _from_univariate(g, name, rest, p.vars) * cont.with_vars(p.vars)


def _content_rec(coeffs: Iterable[Poly], rest: tuple[str, ...]) -> Poly:
    g = Poly._raw(rest, {})
    for c in coeffs:
        g = _gcd_rec(g, c)
        if g.is_constant() and not g.is_zero():
            return Poly.const(1, rest)
    return g.primitive(LEX) if not g.is_zero() else Poly.const(1, rest)


def _pseudo_rem(a: dict[int, Poly], b: dict[int, Poly], rest) -> dict[int, Poly]:
    a = dict(a)
    db = max(b)
    lb = b[db]
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        shift = da - db
        new = {k: v * lb for k, v in a.items()}
        for k, v in b.items():
            t = new.get(k + shift, Poly._raw(rest, {})) - v * la
            new[k + shift] = t
        a = {k: v for k, v in new.items() if v}
    return a


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor, normalised to integer content 1 and positive lead."""
    p, q = p._align(q)
    if p.is_zero() and q.is_zero():
        return p
    g = _gcd_rec(p, q)
    return g.primitive()
