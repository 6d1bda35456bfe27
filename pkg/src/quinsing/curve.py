"""Exact bivariate polynomial arithmetic over Q.

Polynomials are sparse maps (i, j) -> Fraction for the monomial x^i y^j.
Everything here is exact rational arithmetic; there is no floating point
in this module.  Factorization and square-free parts delegate to sympy
(the Maple-`factor` replacement), everything else is implemented directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import sympy

Rat = Fraction
Monomial = Tuple[int, int]

_SX, _SY = sympy.symbols("x y")


class CurveError(ValueError):
    """Domain error from the curve layer (bad input, violated precondition)."""


class ParseError(CurveError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _trimmed(terms: Dict[Monomial, Fraction]) -> Dict[Monomial, Fraction]:
    return {m: c for m, c in terms.items() if c != 0}


class BiPoly:
    """Immutable sparse polynomial in x, y with Fraction coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[Monomial, Fraction] | None = None):
        self.terms: Dict[Monomial, Fraction] = _trimmed(dict(terms or {}))
        self._hash = None

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly({})

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly({(0, 0): Fraction(c)})

    @staticmethod
    def monomial(i: int, j: int, c=1) -> "BiPoly":
        return BiPoly({(i, j): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return BiPoly(out)

    def scale(self, c) -> "BiPoly":
        c = Fraction(c)
        return BiPoly({m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise CurveError("negative polynomial power")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def total_degree(self) -> int:
        if not self.terms:
            raise CurveError("degree of zero polynomial")
        return max(i + j for i, j in self.terms)

    def degree_in(self, var: str) -> int:
        if not self.terms:
            raise CurveError("degree of zero polynomial")
        k = 0 if var == "x" else 1
        return max(m[k] for m in self.terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def eval_at(self, xv, yv) -> Fraction:
        xv, yv = Fraction(xv), Fraction(yv)
        return sum((c * xv**i * yv**j for (i, j), c in self.terms.items()), Fraction(0))

    def partial(self, var: str) -> "BiPoly":
        out: Dict[Monomial, Fraction] = {}
        for (i, j), c in self.terms.items():
            if var == "x" and i > 0:
                out[(i - 1, j)] = out.get((i - 1, j), Fraction(0)) + c * i
            elif var == "y" and j > 0:
                out[(i, j - 1)] = out.get((i, j - 1), Fraction(0)) + c * j
        return BiPoly(out)

    # univariate views, used by resultants and singular-point search
    def coeffs_in(self, var: str) -> List["BiPoly"]:
        """Coefficient list in `var`, ascending, entries polynomials in the other variable."""
        if not self.terms:
            return []
        k = 0 if var == "x" else 1
        deg = max(m[k] for m in self.terms)
        out: List[Dict[Monomial, Fraction]] = [dict() for _ in range(deg + 1)]
        for (i, j), c in self.terms.items():
            if var == "x":
                out[i][(0, j)] = c
            else:
                out[j][(i, 0)] = c
        return [BiPoly(d) for d in out]

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BiPoly({format_poly(self)!r})"


def _term_key(m: Monomial):
    # graded lex with x > y, descending
    i, j = m
    return (-(i + j), -i)


def format_poly(p: BiPoly) -> str:
    """Deterministic printing; re-parsing the output reproduces p."""
    if p.is_zero():
        return "0"
    parts: List[str] = []
    for m in sorted(p.terms, key=_term_key):
        c = p.terms[m]
        i, j = m
        factors = []
        if i == 1:
            factors.append("x")
        elif i > 1:
            factors.append(f"x^{i}")
        if j == 1:
            factors.append("y")
        elif j > 1:
            factors.append(f"y^{j}")
        body = "*".join(factors)
        ac = abs(c)
        if not factors:
            text = str(ac)
        elif ac == 1:
            text = body
        else:
            text = f"{ac}*{body}"
        if not parts:
            parts.append(text if c > 0 else "-" + text)
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# parsing
#
# expr   := ['+'|'-'] term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := base ('^' nat)?
# base   := rational | 'x' | 'y' | '(' expr ')'
#
# No implicit multiplication: "xy" and "2x" are errors.


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def parse(self) -> BiPoly:
        result = self.expr()
        if self.peek():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return result

    def expr(self) -> BiPoly:
        result = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            result = result + (t.scale(-1) if op == "-" else t)
        return result

    def term(self) -> BiPoly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        result = self.factor()
        while self.peek() == "*":
            self.take()
            result = result * self.factor()
        return result.scale(sign)

    def factor(self) -> BiPoly:
        b = self.base()
        if self.peek() == "^":
            self.take()
            n = self.natural()
            b = b**n
        return b

    def natural(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "(":
            # catches y^(1/2) with a useful message
            self.error("exponent must be a nonnegative integer")
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a nonnegative integer exponent")
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.error("fractional exponent")
        return int(self.text[start : self.pos])

    def base(self) -> BiPoly:
        ch = self.peek()
        if ch == "(":
            self.take()
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return inner
        if ch == "x":
            self.take()
            self._reject_identifier_tail()
            return BiPoly.monomial(1, 0)
        if ch == "y":
            self.take()
            self._reject_identifier_tail()
            return BiPoly.monomial(0, 1)
        if ch.isdigit():
            return BiPoly.const(self.rational())
        if ch.isalpha():
            self.error(f"unknown identifier {ch!r}")
        if ch == "":
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")

    def _reject_identifier_tail(self):
        if self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos -= 1
            self.error("implicit multiplication is not allowed")

    def rational(self) -> Fraction:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        num = int(self.text[start : self.pos])
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            save = self.pos
            self.pos += 1
            dstart = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == dstart:
                # "3/x" is division-free grammar: reject
                self.pos = save
                self.error("expected an integer denominator")
            den = int(self.text[dstart : self.pos])
            if den == 0:
                self.pos = save
                self.error("zero denominator")
            self._reject_identifier_tail()
            return Fraction(num, den)
        self._reject_identifier_tail()
        return Fraction(num)


def parse_poly(text: str) -> BiPoly:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# local data at the origin


def multiplicity_at_origin(f: BiPoly) -> int:
    if f.is_zero():
        raise CurveError("zero polynomial")
    m = min(i + j for i, j in f.terms)
    if m == 0:
        raise CurveError("origin is not on the curve (nonzero constant term)")
    return m


def tangent_cone(f: BiPoly) -> BiPoly:
    m = multiplicity_at_origin(f)
    return BiPoly({mono: c for mono, c in f.terms.items() if mono[0] + mono[1] == m})


def translate(f: BiPoly, p: Tuple[Rat, Rat]) -> BiPoly:
    """f(x + p1, y + p2), exact."""
    a, b = Fraction(p[0]), Fraction(p[1])
    xs = BiPoly({(1, 0): Fraction(1), (0, 0): a})
    ys = BiPoly({(0, 1): Fraction(1), (0, 0): b})
    return _substitute(f, xs, ys)


def linear_change(f: BiPoly, m: Sequence[Sequence[Rat]]) -> BiPoly:
    """Substitute (x, y) <- (m11 x + m12 y, m21 x + m22 y); m must be invertible."""
    m11, m12 = Fraction(m[0][0]), Fraction(m[0][1])
    m21, m22 = Fraction(m[1][0]), Fraction(m[1][1])
    if m11 * m22 - m12 * m21 == 0:
        raise CurveError("singular matrix")
    xs = BiPoly({(1, 0): m11, (0, 1): m12})
    ys = BiPoly({(1, 0): m21, (0, 1): m22})
    return _substitute(f, xs, ys)


def _substitute(f: BiPoly, xs: BiPoly, ys: BiPoly) -> BiPoly:
    # Horner in y over Horner in x keeps the power count low.
    xpow: Dict[int, BiPoly] = {0: BiPoly.const(1)}
    ypow: Dict[int, BiPoly] = {0: BiPoly.const(1)}

    def power(table: Dict[int, BiPoly], base: BiPoly, n: int) -> BiPoly:
        if n not in table:
            table[n] = power(table, base, n - 1) * base
        return table[n]

    out = BiPoly.zero()
    for (i, j), c in f.terms.items():
        out = out + (power(xpow, xs, i) * power(ypow, ys, j)).scale(c)
    return out


# ---------------------------------------------------------------------------
# sympy bridge, factorization


def to_sympy(f: BiPoly):
    expr = sympy.Integer(0)
    for (i, j), c in f.terms.items():
        expr += sympy.Rational(c.numerator, c.denominator) * _SX**i * _SY**j
    return expr


def from_sympy(expr) -> BiPoly:
    poly = sympy.Poly(sympy.expand(expr), _SX, _SY)
    out: Dict[Monomial, Fraction] = {}
    for (i, j), c in poly.terms():
        cq = sympy.Rational(c)
        out[(int(i), int(j))] = Fraction(int(cq.p), int(cq.q))
    return BiPoly(out)


@dataclass(frozen=True)
class FactorList:
    unit: Rat
    factors: Tuple[Tuple[BiPoly, int], ...]

    def expand(self) -> BiPoly:
        out = BiPoly.const(self.unit)
        for poly, mult in self.factors:
            out = out * poly**mult
        return out


def _normalize_factor(p: BiPoly) -> Tuple[BiPoly, Fraction]:
    """Scale to content 1 with positive leading (graded-lex) coefficient.

    Returns (normalized factor, removed scalar) with p = scalar * normalized.
    """
    lead = min(p.terms, key=_term_key)
    coeffs = list(p.terms.values())
    from math import gcd

    num_gcd = 0
    den_lcm = 1
    for c in coeffs:
        num_gcd = gcd(num_gcd, abs(c.numerator))
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    content = Fraction(num_gcd, den_lcm)
    if p.terms[lead] < 0:
        content = -content
    return p.scale(1 / content), content


def factor_rational(f: BiPoly) -> FactorList:
    """Complete factorization into Q-irreducible primitive factors."""
    if f.is_zero():
        raise CurveError("cannot factor the zero polynomial")
    if f.total_degree() > 8:
        raise CurveError("degree cap (8) exceeded for factorization")
    unit_sym, raw = sympy.factor_list(to_sympy(f))
    u = sympy.Rational(unit_sym)
    unit = Fraction(int(u.p), int(u.q))
    factors: List[Tuple[BiPoly, int]] = []
    for base, mult in raw:
        poly = from_sympy(base)
        if poly.total_degree() == 0:
            unit *= poly.coeff(0, 0) ** mult
            continue
        norm, scalar = _normalize_factor(poly)
        unit *= scalar**mult
        factors.append((norm, int(mult)))
    factors.sort(key=lambda fm: (sorted(((_term_key(m), c) for m, c in fm[0].terms.items())), fm[1]))
    return FactorList(unit=unit, factors=tuple(factors))


def square_free_part(f: BiPoly) -> Tuple[BiPoly, bool]:
    """Product of the distinct irreducible factors; flag = a repeated factor existed."""
    fl = factor_rational(f)
    had_multiple = any(m > 1 for _, m in fl.factors)
    if not had_multiple:
        return f, False
    out = BiPoly.const(1)
    for poly, _ in fl.factors:
        out = out * poly
    return out, True


# ---------------------------------------------------------------------------
# resultants
#
# Convention: determinant of the Sylvester matrix with rows ordered by the
# descending shifts of f, then of g.  Validated on Res_y(y-x^2, y+x^2) = 2x^2.


def resultant(f: BiPoly, g: BiPoly, var: str) -> BiPoly:
    if f.is_zero() or g.is_zero():
        raise CurveError("resultant of zero polynomial")
    if var not in ("x", "y"):
        raise CurveError("var must be 'x' or 'y'")
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    m, n = len(fc) - 1, len(gc) - 1
    if m == 0 and n == 0:
        return BiPoly.const(1)
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    other = "y" if var == "x" else "x"
    # interpolate the determinant through evaluations at other = t
    deg_bound = m * (max(p.degree_in(other) for p in gc if not p.is_zero())) + n * (
        max(p.degree_in(other) for p in fc if not p.is_zero())
    )
    points: List[Tuple[Fraction, Fraction]] = []
    t = 0
    while len(points) < deg_bound + 1:
        tv = Fraction(t)
        frow = [c.eval_at(tv, tv) for c in fc]
        grow = [c.eval_at(tv, tv) for c in gc]
        points.append((tv, _sylvester_det(frow, grow, m, n)))
        t += 1
    poly1 = _lagrange(points)
    out: Dict[Monomial, Fraction] = {}
    for k, c in enumerate(poly1):
        if c != 0:
            out[(k, 0) if other == "x" else (0, k)] = c
    return BiPoly(out)


def _sylvester_det(fcoeffs: List[Fraction], gcoeffs: List[Fraction], m: int, n: int) -> Fraction:
    size = m + n
    fd = list(reversed(fcoeffs))  # descending
    gd = list(reversed(gcoeffs))
    rows: List[List[Fraction]] = []
    for s in range(n):
        rows.append([Fraction(0)] * s + fd + [Fraction(0)] * (size - s - m - 1))
    for s in range(m):
        rows.append([Fraction(0)] * s + gd + [Fraction(0)] * (size - s - n - 1))
    return _det(rows)


def _det(rows: List[List[Fraction]]) -> Fraction:
    n = len(rows)
    mat = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col] != 0:
                factor = mat[r][col] * inv
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[col])]
    return det


def _lagrange(points: List[Tuple[Fraction, Fraction]]) -> List[Fraction]:
    """Coefficients (ascending) of the interpolating polynomial, by Newton differences."""
    xs = [p[0] for p in points]
    coeffs = [p[1] for p in points]
    n = len(points)
    # divided differences
    for level in range(1, n):
        for k in range(n - 1, level - 1, -1):
            coeffs[k] = (coeffs[k] - coeffs[k - 1]) / (xs[k] - xs[k - level])
    # expand the Newton form
    out = [Fraction(0)] * n
    acc = [Fraction(1)]  # product (t - x0)...(t - x_{k-1})
    for k in range(n):
        for idx, a in enumerate(acc):
            out[idx] += coeffs[k] * a
        if k < n - 1:
            nxt = [Fraction(0)] * (len(acc) + 1)
            for idx, a in enumerate(acc):
                nxt[idx + 1] += a
                nxt[idx] -= xs[k] * a
            acc = nxt
    while out and out[-1] == 0:
        out.pop()
    return out
