"""Exact arithmetic in towers of simple algebraic extensions of Q.

A Tower is a chain of levels; level k adjoins one root of a square-free
monic polynomial whose coefficients live in the tower below.  Elements are
nested dense coefficient vectors (Fraction at depth 0), always reduced.

Every generator carries a Q-witness: a square-free elimination polynomial
in Q[T] (resultant cascade through the defining polynomials) together with
a selected sympy root of it.  Witness boxes refine exactly in Q and steer
the decision procedures; the decisions themselves (zero test, realness,
ordering) are exact.  Defining polynomials are square-free but not
necessarily irreducible; zero tests fall back to a gcd split decided by
locating the selected root (dynamic evaluation).  Towers are never
mutated; refinement state lives in caches.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy

Rat = Fraction

_T = sympy.Symbol("T")
_GENS = [sympy.Symbol(f"Z{k}") for k in range(1, 9)]

_REFINE_CAP = 240


class AlgebraicError(ValueError):
    pass


class DecisionFailure(RuntimeError):
    """A certified decision loop hit its refinement cap (internal bug)."""


# ---------------------------------------------------------------------------
# exact interval arithmetic (closed boxes, Fraction endpoints)

Interval = Tuple[Fraction, Fraction]
Box = Tuple[Interval, Interval]  # (re, im)

_ZERO_IV: Interval = (Fraction(0), Fraction(0))


def _iv_add(a: Interval, b: Interval) -> Interval:
    return (a[0] + b[0], a[1] + b[1])


def _iv_sub(a: Interval, b: Interval) -> Interval:
    return (a[0] - b[1], a[1] - b[0])


def _iv_mul(a: Interval, b: Interval) -> Interval:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def _box_add(a: Box, b: Box) -> Box:
    return (_iv_add(a[0], b[0]), _iv_add(a[1], b[1]))


def _box_mul(a: Box, b: Box) -> Box:
    re = _iv_sub(_iv_mul(a[0], b[0]), _iv_mul(a[1], b[1]))
    im = _iv_add(_iv_mul(a[0], b[1]), _iv_mul(a[1], b[0]))
    return (re, im)


def _box_from_frac(q: Fraction) -> Box:
    return ((q, q), _ZERO_IV)


def _box_excludes_zero(b: Box) -> bool:
    (rlo, rhi), (ilo, ihi) = b
    return rlo > 0 or rhi < 0 or ilo > 0 or ihi < 0


def _box_conj(b: Box) -> Box:
    (re, (ilo, ihi)) = b
    return (re, (-ihi, -ilo))


def _box_intersects(a: Box, b: Box) -> bool:
    return not (
        a[0][1] < b[0][0]
        or b[0][1] < a[0][0]
        or a[1][1] < b[1][0]
        or b[1][1] < a[1][0]
    )


def _box_width(b: Box) -> Fraction:
    return max(b[0][1] - b[0][0], b[1][1] - b[1][0])


def _frac(v) -> Fraction:
    # sympy Rational or gmpy mpq or int
    return Fraction(int(v.numerator), int(v.denominator))


def _iv_round_out(iv: Interval) -> Interval:
    """Round endpoints outward to dyadics so fraction sizes stay bounded."""
    lo, hi = iv
    if lo.denominator.bit_length() <= 64 and hi.denominator.bit_length() <= 64:
        return iv
    width = hi - lo
    if width == 0:
        return iv
    k = max(8, width.denominator.bit_length() - width.numerator.bit_length() + 8)
    scale = 1 << k
    return (Fraction(math.floor(lo * scale), scale), Fraction(math.ceil(hi * scale), scale))


# ---------------------------------------------------------------------------
# witnesses: certified Q-algebraic root handles


_region_registry: Dict[Tuple, Box] = {}


def _split_scaled_rootof(expr):
    """Decompose a CRootOf-valued expression as (CRootOf, rational scale).

    sympy's root preprocessing may hand back `Rational * CRootOf(...)` instead
    of a bare CRootOf; the enumeration index still refers to the original
    polynomial's root set.
    """
    if isinstance(expr, sympy.CRootOf):
        return expr, Fraction(1)
    if expr.is_Mul:
        coeff, rest = expr.as_coeff_Mul()
        if coeff.is_Rational and isinstance(rest, sympy.CRootOf):
            return rest, _frac(sympy.Rational(coeff))
    raise AlgebraicError("unsupported root expression " + str(expr))


class Witness:
    """One root of a square-free Q[T] polynomial, with a refinable exact box."""

    __slots__ = (
        "qpoly", "index", "_root", "_inner", "_scale", "rational", "_iv", "_is_real", "region",
    )

    def __init__(self, qpoly: sympy.Poly, index: int):
        self.qpoly = qpoly
        self.index = index
        root = sympy.CRootOf(qpoly, index, radicals=False)
        if root.is_Number:
            if not root.is_Rational:
                raise AlgebraicError("unexpected non-rational evaluated root")
            self.rational: Optional[Fraction] = _frac(sympy.Rational(root))
            self._root = None
            self._inner = None
            self._scale = Fraction(1)
            self._is_real = True
            self._iv = None
        else:
            self.rational = None
            self._root = root
            self._inner, self._scale = _split_scaled_rootof(root)
            self._is_real = bool(root.is_real)
            self._iv = self._inner._get_interval()
        key = self._key()
        if key not in _region_registry:
            _region_registry[key] = self._canonical_region()
        self.region = _region_registry[key]

    def _key(self) -> Tuple:
        return (tuple(self.qpoly.all_coeffs()), self.index)

    def is_real(self) -> bool:
        return self._is_real

    def box(self) -> Box:
        if self.rational is not None:
            return _box_from_frac(self.rational)
        iv = self._iv
        s = self._scale
        if self._is_real:
            ends = (_frac(iv.a) * s, _frac(iv.b) * s)
            return (_iv_round_out((min(ends), max(ends))), _ZERO_IV)
        xs = (_frac(iv.ax) * s, _frac(iv.bx) * s)
        ys = (_frac(iv.ay) * s, _frac(iv.by) * s)
        return (
            _iv_round_out((min(xs), max(xs))),
            _iv_round_out((min(ys), max(ys))),
        )

    def refine(self):
        if self._inner is not None:
            self._iv = self._iv.refine()

    def _canonical_region(self) -> Box:
        while _box_width(self.box()) > Fraction(1, 64):
            self.refine()
        return self.box()

    def sympy_value(self):
        if self.rational is not None:
            return sympy.Rational(self.rational.numerator, self.rational.denominator)
        return self._root

    def conjugate_index(self) -> int:
        """Index (same qpoly) of the complex conjugate root."""
        if self.is_real():
            return self.index
        # conjugate roots of a real polynomial are adjacent in sympy order,
        # lower half-plane first
        while True:
            _, (ylo, yhi) = self.box()
            if yhi < 0:
                return self.index + 1
            if ylo > 0:
                return self.index - 1
            self.refine()


# ---------------------------------------------------------------------------
# elements: nested dense vectors

Elem = Union[Fraction, Tuple]


def _zero_elem(depth: int, tower: "Tower") -> Elem:
    if depth == 0:
        return Fraction(0)
    inner = _zero_elem(depth - 1, tower)
    return tuple([inner] * tower.levels[depth - 1].degree)


def _from_frac(q: Fraction, depth: int, tower: "Tower") -> Elem:
    if depth == 0:
        return Fraction(q)
    coords = [_from_frac(q, depth - 1, tower)]
    coords += [_zero_elem(depth - 1, tower)] * (tower.levels[depth - 1].degree - 1)
    return tuple(coords)


def _embed(e: Elem, from_depth: int, to_depth: int, tower: "Tower") -> Elem:
    if from_depth == to_depth:
        return e
    out = [_embed(e, from_depth, to_depth - 1, tower)]
    out += [_zero_elem(to_depth - 1, tower)] * (tower.levels[to_depth - 1].degree - 1)
    return tuple(out)


def _e_add(a: Elem, b: Elem) -> Elem:
    if isinstance(a, Fraction):
        return a + b
    return tuple(_e_add(x, y) for x, y in zip(a, b))


def _e_neg(a: Elem) -> Elem:
    if isinstance(a, Fraction):
        return -a
    return tuple(_e_neg(x) for x in a)


def _e_sub(a: Elem, b: Elem) -> Elem:
    return _e_add(a, _e_neg(b))


def _e_scale(a: Elem, q: Fraction) -> Elem:
    if isinstance(a, Fraction):
        return a * q
    return tuple(_e_scale(x, q) for x in a)


def _e_mul(a: Elem, b: Elem, depth: int, tower: "Tower") -> Elem:
    if depth == 0:
        return a * b
    d = tower.levels[depth - 1].degree
    conv: List[Elem] = [_zero_elem(depth - 1, tower) for _ in range(2 * d - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            conv[i + j] = _e_add(conv[i + j], _e_mul(x, y, depth - 1, tower))
    return _reduce_mod_defining(conv, depth, tower)


def _reduce_mod_defining(coords: List[Elem], depth: int, tower: "Tower") -> Elem:
    level = tower.levels[depth - 1]
    d = level.degree
    work = list(coords)
    while len(work) > d:
        top = work.pop()
        # defining is monic: subtract top * defining shifted to the head position
        shift = len(work) - d
        for i in range(d):
            work[shift + i] = _e_sub(
                work[shift + i], _e_mul(top, level.defining[i], depth - 1, tower)
            )
    while len(work) < d:
        work.append(_zero_elem(depth - 1, tower))
    return tuple(work)


def _e_structural_zero(a: Elem) -> bool:
    if isinstance(a, Fraction):
        return a == 0
    return all(_e_structural_zero(x) for x in a)


def _e_box(a: Elem, depth: int, gen_boxes: Sequence[Box]) -> Box:
    if depth == 0:
        return _box_from_frac(a)
    g = gen_boxes[depth - 1]
    acc = _e_box(a[-1], depth - 1, gen_boxes)
    for coeff in reversed(a[:-1]):
        acc = _box_add(_box_mul(acc, g), _e_box(coeff, depth - 1, gen_boxes))
    return acc


def _e_sympy(a: Elem, depth: int) -> sympy.Expr:
    if depth == 0:
        return sympy.Rational(a.numerator, a.denominator)
    g = _GENS[depth - 1]
    expr = sympy.Integer(0)
    for k, coeff in enumerate(a):
        expr += _e_sympy(coeff, depth - 1) * g**k
    return expr


# ---------------------------------------------------------------------------
# towers


class Level:
    __slots__ = ("defining", "witness", "degree", "index")

    def __init__(self, defining: Tuple[Elem, ...], witness: Witness, index: int):
        self.defining = defining  # monic, ascending, length degree+1
        self.witness = witness
        self.degree = len(defining) - 1
        self.index = index  # position among the sorted sibling roots at creation


class Tower:
    __slots__ = ("levels", "_totally_real")

    def __init__(self, levels: Tuple[Level, ...] = ()):  # Q itself is Tower(())
        self.levels = levels
        self._totally_real = all(lv.witness.is_real() for lv in levels)

    @property
    def depth(self) -> int:
        return len(self.levels)

    def totally_real(self) -> bool:
        return self._totally_real

    def extends(self, other: "Tower") -> bool:
        return self.levels[: other.depth] == other.levels

    def gen_boxes(self) -> List[Box]:
        return [lv.witness.box() for lv in self.levels]

    def refine(self):
        for lv in self.levels:
            lv.witness.refine()

    def zero(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self, _zero_elem(self.depth, self))

    def one(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self, _from_frac(Fraction(1), self.depth, self))

    def from_rat(self, q) -> "AlgebraicNumber":
        return AlgebraicNumber(self, _from_frac(Fraction(q), self.depth, self))

    def generator(self, level: Optional[int] = None) -> "AlgebraicNumber":
        k = self.depth - 1 if level is None else level
        d = self.levels[k].degree
        if d == 1:
            # linear defining: generator equals the negated constant term
            val = _e_neg(self.levels[k].defining[0])
            return AlgebraicNumber(self, _embed(val, k, self.depth, self))
        coords = [_from_frac(Fraction(0), k, self), _from_frac(Fraction(1), k, self)]
        coords += [_zero_elem(k, self) for _ in range(d - 2)]
        return AlgebraicNumber(self, _embed(tuple(coords), k + 1, self.depth, self))

    def level_str(self, k: int) -> str:
        lv = self.levels[k]
        terms = []
        for p, coeff in reversed(list(enumerate(lv.defining))):
            if _e_structural_zero(coeff):
                continue
            cs = _coeff_str(coeff, k, self)
            if p == 0:
                terms.append(cs)
            elif p == 1:
                terms.append(f"{cs}*Z" if cs != "1" else "Z")
            else:
                terms.append(f"{cs}*Z^{p}" if cs != "1" else f"Z^{p}")
        poly = terms[0]
        for t in terms[1:]:
            poly += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        (rlo, rhi), (ilo, ihi) = lv.witness.region
        return f"RootOf({poly}, region=[{rlo},{rhi}]x[{ilo},{ihi}], index={lv.index})"


def _coeff_str(e: Elem, depth: int, tower: Tower) -> str:
    if isinstance(e, Fraction):
        return str(e)
    nonzero = [(k, c) for k, c in enumerate(e) if not _e_structural_zero(c)]
    if not nonzero:
        return "0"
    gen = tower.level_str(depth - 1)
    parts = []
    for k, c in nonzero:
        cs = _coeff_str(c, depth - 1, tower)
        if k == 0:
            parts.append(cs)
        else:
            power = gen if k == 1 else f"{gen}^{k}"
            parts.append(power if cs == "1" else f"({cs})*{power}")
    if len(parts) == 1:
        return parts[0]
    return "(" + " + ".join(parts) + ")"


RATIONAL_TOWER = Tower(())


class AlgebraicNumber:
    __slots__ = ("tower", "value", "_cache")

    def __init__(self, tower: Tower, value: Elem):
        self.tower = tower
        self.value = value
        self._cache: Dict[str, object] = {}

    # -- coercion helpers

    def _coerce(self, other) -> "AlgebraicNumber":
        if isinstance(other, AlgebraicNumber):
            if other.tower is self.tower or other.tower.levels == self.tower.levels:
                return other
            if self.tower.extends(other.tower):
                return AlgebraicNumber(
                    self.tower,
                    _embed(other.value, other.tower.depth, self.tower.depth, self.tower),
                )
            raise AlgebraicError("operands live in unrelated towers")
        return self.tower.from_rat(Fraction(other))

    def _lift(self, other) -> Tuple["AlgebraicNumber", "AlgebraicNumber"]:
        if isinstance(other, AlgebraicNumber) and other.tower.depth > self.tower.depth:
            return other._coerce(self), other
        return self, self._coerce(other)

    # -- ring operations

    def __add__(self, other):
        a, b = self._lift(other)
        return AlgebraicNumber(a.tower, _e_add(a.value, b.value))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.tower, _e_neg(self.value))

    def __sub__(self, other):
        a, b = self._lift(other)
        return AlgebraicNumber(a.tower, _e_sub(a.value, b.value))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._lift(other)
        return AlgebraicNumber(
            a.tower, _e_mul(a.value, b.value, a.tower.depth, a.tower)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._lift(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.tower.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "AlgebraicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero algebraic number")
        inv = _inv_elem(self.value, self.tower.depth, self.tower)
        return AlgebraicNumber(self.tower, inv)

    def __eq__(self, other):
        try:
            a, b = self._lift(other)
        except (AlgebraicError, TypeError, ValueError):
            return NotImplemented
        return (a - b).is_zero()

    def __hash__(self):
        raise TypeError("AlgebraicNumber is unhashable (exact equality is semantic)")

    # -- decisions

    def is_zero(self) -> bool:
        if "zero" not in self._cache:
            self._cache["zero"] = _is_zero_elem(self.value, self.tower.depth, self.tower)
        return self._cache["zero"]  # type: ignore[return-value]

    def is_rational(self) -> Optional[Fraction]:
        """The Fraction value if the reduced representation is visibly rational."""
        e = self.value
        depth = self.tower.depth
        while depth > 0:
            if not all(_e_structural_zero(c) for c in e[1:]):
                return None
            e = e[0]
            depth -= 1
        return e

    def box(self) -> Box:
        return _e_box(self.value, self.tower.depth, self.tower.gen_boxes())

    def refine(self):
        self.tower.refine()

    def sympy_value(self) -> sympy.Expr:
        expr = _e_sympy(self.value, self.tower.depth)
        subs = {}
        for k in reversed(range(self.tower.depth)):
            subs[_GENS[k]] = self.tower.levels[k].witness.sympy_value()
        return expr.xreplace(subs)

    def is_real(self) -> bool:
        if "real" not in self._cache:
            self._cache["real"] = _is_real_impl(self)
        return self._cache["real"]  # type: ignore[return-value]

    def sign(self) -> int:
        """Sign of a real element; exact."""
        if not self.is_real():
            raise AlgebraicError("sign of a non-real element")
        if self.is_zero():
            return 0
        for _ in range(_REFINE_CAP):
            (rlo, rhi), _im = self.box()
            if rlo > 0:
                return 1
            if rhi < 0:
                return -1
            self.refine()
        raise DecisionFailure("sign refinement did not converge")

    def __str__(self):
        return _coeff_str(self.value, self.tower.depth, self.tower)

    def __repr__(self):
        return f"<AlgebraicNumber {self}>"


def _is_zero_elem(e: Elem, depth: int, tower: Tower) -> bool:
    if isinstance(e, Fraction):
        return e == 0
    if all(_is_zero_elem(c, depth - 1, tower) for c in e):
        return True
    # P(gen) with P nonzero over the subtower; decide P(alpha) = 0 by gcd split
    sub = Tower(tower.levels[: depth - 1])
    p = _poly_normalize(list(e), sub)
    if len(p) == 1:
        return False
    defining = list(tower.levels[depth - 1].defining)
    g = _poly_gcd(p, defining, sub)
    if len(g) == 1:
        return False
    h = _poly_divexact(defining, g, sub)
    return _witness_root_of(tower, depth - 1, g, h)


def _witness_root_of(tower: Tower, level_idx: int, g: List[Elem], h: List[Elem]) -> bool:
    """True iff the selected root of level level_idx is a root of g (else of h).

    Pre: defining = g*h up to a unit, both nonconstant, so exactly one holds.
    """
    sub_depth = level_idx
    level = tower.levels[level_idx]
    for _ in range(_REFINE_CAP):
        boxes = tower.gen_boxes()
        gen_box = boxes[level_idx]
        gb = _poly_box_eval(g, sub_depth, boxes, gen_box)
        if _box_excludes_zero(gb):
            return False
        hb = _poly_box_eval(h, sub_depth, boxes, gen_box)
        if _box_excludes_zero(hb):
            return True
        level.witness.refine()
        for lv in tower.levels[:level_idx]:
            lv.witness.refine()
    raise DecisionFailure("gcd split decision did not converge")


def _poly_box_eval(
    coeffs: Sequence[Elem], coeff_depth: int, gen_boxes: Sequence[Box], at: Box
) -> Box:
    acc = _e_box(coeffs[-1], coeff_depth, gen_boxes)
    for c in reversed(list(coeffs[:-1])):
        acc = _box_add(_box_mul(acc, at), _e_box(c, coeff_depth, gen_boxes))
    return acc


def _inv_elem(e: Elem, depth: int, tower: Tower) -> Elem:
    if depth == 0:
        return Fraction(1) / e
    sub = Tower(tower.levels[: depth - 1])
    p = _poly_normalize(list(e), sub)
    if len(p) == 1:
        inv0 = _inv_elem(p[0], depth - 1, tower)
        coords = [inv0] + [_zero_elem(depth - 1, tower)] * (
            tower.levels[depth - 1].degree - 1
        )
        return tuple(coords)
    modulus = list(tower.levels[depth - 1].defining)
    while True:
        g, u = _poly_ext_gcd_first(p, modulus, sub)
        if len(g) == 1:
            ginv = _inv_elem(g[0], depth - 1, tower)
            u = [_e_mul(c, ginv, depth - 1, tower) for c in u]
            d = tower.levels[depth - 1].degree
            u = (u + [_zero_elem(depth - 1, tower)] * d)[:d]
            return tuple(u)
        # nonzero element: the selected root lies on the other factor
        modulus = _poly_divexact(modulus, g, sub)


# ---------------------------------------------------------------------------
# polynomials over a tower (dense ascending lists of Elems)


def _poly_normalize(p: List[Elem], tower: Tower) -> List[Elem]:
    q = list(p)
    while len(q) > 1 and _is_zero_elem(q[-1], tower.depth, tower):
        q.pop()
    if len(q) == 0:
        q = [_zero_elem(tower.depth, tower)]
    return q


def _poly_is_zero(p: List[Elem], tower: Tower) -> bool:
    return all(_is_zero_elem(c, tower.depth, tower) for c in p)


def _poly_monic(p: List[Elem], tower: Tower) -> List[Elem]:
    p = _poly_normalize(p, tower)
    lead = p[-1]
    inv = _inv_elem(lead, tower.depth, tower)
    return [_e_mul(c, inv, tower.depth, tower) for c in p]


def _poly_divmod(
    a: List[Elem], b: List[Elem], tower: Tower
) -> Tuple[List[Elem], List[Elem]]:
    depth = tower.depth
    b = _poly_normalize(b, tower)
    if len(b) == 1 and _is_zero_elem(b[0], depth, tower):
        raise ZeroDivisionError("polynomial division by zero")
    binv = _inv_elem(b[-1], depth, tower)
    r = _poly_normalize(list(a), tower)
    q = [_zero_elem(depth, tower)] * max(1, len(r) - len(b) + 1)
    while len(r) >= len(b) and not (len(r) == 1 and _is_zero_elem(r[0], depth, tower)):
        factor = _e_mul(r[-1], binv, depth, tower)
        shift = len(r) - len(b)
        q[shift] = _e_add(q[shift], factor)
        for i, bc in enumerate(b):
            r[shift + i] = _e_sub(r[shift + i], _e_mul(factor, bc, depth, tower))
        r.pop()
        r = _poly_normalize(r, tower)
    return _poly_normalize(q, tower), r


def _poly_divexact(a: List[Elem], b: List[Elem], tower: Tower) -> List[Elem]:
    q, r = _poly_divmod(a, b, tower)
    if not _poly_is_zero(r, tower):
        raise AlgebraicError("inexact polynomial division")
    return q


def _poly_gcd(a: List[Elem], b: List[Elem], tower: Tower) -> List[Elem]:
    """Monic gcd over the tower (field at the selected roots)."""
    a = _poly_normalize(a, tower)
    b = _poly_normalize(b, tower)
    while not _poly_is_zero(b, tower):
        _, r = _poly_divmod(a, b, tower)
        a, b = b, r
    if _poly_is_zero(a, tower):
        return a
    return _poly_monic(a, tower)


def _poly_ext_gcd_first(
    a: List[Elem], b: List[Elem], tower: Tower
) -> Tuple[List[Elem], List[Elem]]:
    """(monic gcd g, u) with u*a = g modulo b."""
    depth = tower.depth
    zero = [_zero_elem(depth, tower)]
    one = [_from_frac(Fraction(1), depth, tower)]
    r0, r1 = _poly_normalize(a, tower), _poly_normalize(b, tower)
    s0, s1 = one, zero
    while not _poly_is_zero(r1, tower):
        q, r = _poly_divmod(r0, r1, tower)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, tower), tower)
    if _poly_is_zero(r0, tower):
        return r0, s0
    lead_inv = _inv_elem(_poly_normalize(r0, tower)[-1], depth, tower)
    g = [_e_mul(c, lead_inv, depth, tower) for c in _poly_normalize(r0, tower)]
    u = [_e_mul(c, lead_inv, depth, tower) for c in s0]
    return g, u


def _poly_mul(a: List[Elem], b: List[Elem], tower: Tower) -> List[Elem]:
    depth = tower.depth
    out = [_zero_elem(depth, tower) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = _e_add(out[i + j], _e_mul(x, y, depth, tower))
    return out


def _poly_sub(a: List[Elem], b: List[Elem], tower: Tower) -> List[Elem]:
    n = max(len(a), len(b))
    depth = tower.depth
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else _zero_elem(depth, tower)
        y = b[k] if k < len(b) else _zero_elem(depth, tower)
        out.append(_e_sub(x, y))
    return out


def _poly_derivative(p: List[Elem], tower: Tower) -> List[Elem]:
    if len(p) <= 1:
        return [_zero_elem(tower.depth, tower)]
    return [_e_scale(c, Fraction(k)) for k, c in enumerate(p) if k > 0]


# ---------------------------------------------------------------------------
# realness / ordering


def _is_real_impl(a: AlgebraicNumber) -> bool:
    if a.is_rational() is not None:
        return True
    if a.tower.totally_real():
        return True
    for _ in range(12):
        _re, (ilo, ihi) = a.box()
        if ilo > 0 or ihi < 0:
            return False
        a.refine()
    m = _minpoly_q(a)
    root = _locate_among_roots(a, m)
    return root.is_real()


def _minpoly_q(a: AlgebraicNumber) -> sympy.Poly:
    if "minpoly" in a._cache:
        return a._cache["minpoly"]  # type: ignore[return-value]
    p = _T - _e_sympy(a.value, a.tower.depth)
    for k in reversed(range(a.tower.depth)):
        level = a.tower.levels[k]
        dexpr = sympy.Integer(0)
        for j, c in enumerate(level.defining):
            dexpr += _e_sympy(c, k) * _GENS[k] ** j
        p = sympy.resultant(p, dexpr, _GENS[k])
    poly = sympy.Poly(sympy.sqf_part(sympy.Poly(p, _T)), _T)
    # pick the irreducible factor vanishing at a (exact tower evaluation)
    _c, factors = sympy.factor_list(poly.as_expr(), _T)
    vanishing = None
    for base, _mult in factors:
        fp = sympy.Poly(base, _T)
        acc = a.tower.zero()
        for coeff in fp.all_coeffs():
            acc = acc * a + Fraction(int(sympy.Rational(coeff).p), int(sympy.Rational(coeff).q))
        if acc.is_zero():
            vanishing = fp.monic()
            break
    if vanishing is None:
        raise DecisionFailure("no minimal polynomial factor vanishes (internal bug)")
    a._cache["minpoly"] = vanishing
    return vanishing


def _locate_among_roots(a: AlgebraicNumber, m: sympy.Poly) -> Witness:
    candidates = [Witness(m, k) for k in range(m.degree())]
    for _ in range(_REFINE_CAP):
        ab = a.box()
        hits = [w for w in candidates if _box_intersects(ab, w.box())]
        if len(hits) == 1:
            return hits[0]
        a.refine()
        for w in hits:
            w.refine()
    raise DecisionFailure("root location did not converge")


def is_real(a: AlgebraicNumber) -> bool:
    return a.is_real()


def compare_real(a: AlgebraicNumber, b: AlgebraicNumber) -> str:
    """'less' | 'equal' | 'greater'; both arguments must be real."""
    if not a.is_real() or not b.is_real():
        raise AlgebraicError("compare_real requires real arguments")
    try:
        a2, b2 = a._lift(b)
    except AlgebraicError:
        return _compare_real_cross(a, b)
    s = (a2 - b2).sign()
    return {1: "greater", 0: "equal", -1: "less"}[s]


def _compare_real_cross(a: AlgebraicNumber, b: AlgebraicNumber) -> str:
    """Order reals from unrelated towers: boxes first, minpoly identity for ties."""
    equal_known = False
    for round_no in range(_REFINE_CAP):
        (alo, ahi), _ = a.box()
        (blo, bhi), _ = b.box()
        if ahi < blo:
            return "less"
        if bhi < alo:
            return "greater"
        if not equal_known and round_no >= 16:
            ma, mb = _minpoly_q(a), _minpoly_q(b)
            if ma == mb:
                wa = _locate_among_roots(a, ma)
                wb = _locate_among_roots(b, mb)
                if wa.index == wb.index:
                    return "equal"
            equal_known = True  # distinct values, boxes must separate
        a.refine()
        b.refine()
    raise DecisionFailure("cross-tower comparison did not converge")


# ---------------------------------------------------------------------------
# roots of polynomials over a tower


class RootHandle:
    """A root returned by roots_over: an AlgebraicNumber plus sort machinery."""

    __slots__ = ("number", "multiplicity", "_witness")

    def __init__(self, number: AlgebraicNumber, multiplicity: int, witness: Optional[Witness]):
        self.number = number
        self.multiplicity = multiplicity
        self._witness = witness

    def box(self) -> Box:
        if self._witness is not None:
            return self._witness.box()
        return self.number.box()

    def refine(self):
        if self._witness is not None:
            self._witness.refine()
        else:
            self.number.refine()

    def qpoly(self) -> sympy.Poly:
        """Some square-free Q[T] polynomial having this root among its roots."""
        if self._witness is not None:
            return self._witness.qpoly
        r = self.number.is_rational()
        if r is not None:
            return sympy.Poly(_T - sympy.Rational(r.numerator, r.denominator), _T)
        return _minpoly_q(self.number)


def _defining_sympy_exprs(tower: Tower) -> List[sympy.Expr]:
    out = []
    for k, level in enumerate(tower.levels):
        dexpr = sympy.Integer(0)
        for j, c in enumerate(level.defining):
            dexpr += _e_sympy(c, k) * _GENS[k] ** j
        out.append(dexpr)
    return out


def _eliminate_to_q(tower: Tower, coeffs: Sequence[Elem]) -> sympy.Poly:
    """Square-free Q[T] polynomial whose roots include every root of the input."""
    p = sympy.Integer(0)
    for j, c in enumerate(coeffs):
        p += _e_sympy(c, tower.depth) * _T**j
    for k, dexpr in reversed(list(enumerate(_defining_sympy_exprs(tower)))):
        p = sympy.resultant(p, dexpr, _GENS[k])
    poly = sympy.Poly(p, _T)
    if poly.degree() < 1:
        raise AlgebraicError("elimination collapsed (internal bug)")
    return sympy.Poly(sympy.sqf_part(poly), _T)


def _survivors(tower: Tower, coeffs: List[Elem], qpoly: sympy.Poly) -> List[Witness]:
    """Identify which roots of qpoly are roots of the tower polynomial.

    Certified by counting: exclusion never removes a true root, and the
    polynomial has exactly deg-many distinct roots (it is square-free).
    """
    target = len(coeffs) - 1
    cands = [Witness(qpoly, k) for k in range(qpoly.degree())]
    for _ in range(_REFINE_CAP):
        if len(cands) == target:
            return cands
        boxes = tower.gen_boxes()
        keep = []
        for w in cands:
            vb = _poly_box_eval(coeffs, tower.depth, boxes, w.box())
            if not _box_excludes_zero(vb):
                keep.append(w)
        cands = keep
        if len(cands) == target:
            return cands
        for w in cands:
            w.refine()
        tower.refine()
    raise DecisionFailure("root identification did not converge")


def _re_equal_exact(a: RootHandle, b: RootHandle) -> bool:
    """Exact equality of real parts, used only when boxes refuse to separate."""
    # same-tower elements: c = a-b is nonzero; purely imaginary iff c^2 < 0
    na, nb = a.number, b.number
    if na.tower.levels == nb.tower.levels or na.tower.extends(nb.tower) or nb.tower.extends(na.tower):
        c = na - nb
        c2 = c * c
        if c2.is_real():
            return c2.sign() < 0
        return False
    wa, wb = a._witness, b._witness
    if (
        wa is not None
        and wb is not None
        and wa.qpoly == wb.qpoly
        and not wa.is_real()
        and wb.index == wa.conjugate_index()
    ):
        return True
    # delta = (a-b)^2 is a root of a resultant-built Q[T] polynomial;
    # Re(a) = Re(b) with a != b exactly when delta is real and negative
    A = a.qpoly()
    B = b.qpoly()
    z, t = sympy.Dummy("z"), sympy.Dummy("t")
    d1 = sympy.resultant(A.as_expr().subs(_T, z), B.as_expr().subs(_T, z - t), z)
    d2 = sympy.resultant(sympy.expand(d1).subs(t, z), z**2 - t, z)
    m = sympy.Poly(sympy.sqf_part(sympy.Poly(d2, t)).as_expr().subs(t, _T), _T)
    shadow = _DiffSquareShadow(a, b)
    w = _locate_shadow(shadow, m)
    if not w.is_real():
        return False
    for _ in range(_REFINE_CAP):
        (rlo, rhi), _im = w.box()
        if rhi < 0:
            return True
        if rlo > 0:
            return False
        w.refine()
    raise DecisionFailure("shadow sign did not converge")


class _DiffSquareShadow:
    """Box provider for (a-b)^2 built from two root handles."""

    def __init__(self, a: RootHandle, b: RootHandle):
        self.a = a
        self.b = b

    def box(self) -> Box:
        ab, bb = self.a.box(), self.b.box()
        diff = (_iv_sub(ab[0], bb[0]), _iv_sub(ab[1], bb[1]))
        return _box_mul(diff, diff)

    def refine(self):
        self.a.refine()
        self.b.refine()


def _locate_shadow(shadow, m: sympy.Poly) -> Witness:
    candidates = [Witness(m, k) for k in range(m.degree())]
    for _ in range(_REFINE_CAP):
        sb = shadow.box()
        hits = [w for w in candidates if _box_intersects(sb, w.box())]
        if len(hits) == 1:
            return hits[0]
        shadow.refine()
        for w in hits:
            w.refine()
    raise DecisionFailure("shadow location did not converge")


def _compare_roots(a: RootHandle, b: RootHandle) -> int:
    """-1/0/+1 in the (Re, Im) order; roots assumed distinct unless identical handles."""
    if a is b:
        return 0
    re_known_equal = False
    re_checked = False
    for round_no in range(_REFINE_CAP):
        ab, bb = a.box(), b.box()
        if not re_known_equal:
            if ab[0][1] < bb[0][0]:
                return -1
            if bb[0][1] < ab[0][0]:
                return 1
        if round_no >= 24 and not re_checked:
            re_checked = True
            re_known_equal = _re_equal_exact(a, b)
        if re_known_equal:
            if ab[1][1] < bb[1][0]:
                return -1
            if bb[1][1] < ab[1][0]:
                return 1
        a.refine()
        b.refine()
    raise DecisionFailure("root comparison did not converge")


def _sort_roots(roots: List[RootHandle]) -> List[RootHandle]:
    return sorted(roots, key=functools.cmp_to_key(_compare_roots))


def _yun_squarefree(p: List[Elem], tower: Tower) -> List[Tuple[List[Elem], int]]:
    """Square-free decomposition over the tower: [(factor, multiplicity)]."""
    p = _poly_monic(p, tower)
    dp = _poly_derivative(p, tower)
    g = _poly_gcd(p, dp, tower)
    if len(g) == 1:
        return [(p, 1)]
    out: List[Tuple[List[Elem], int]] = []
    w = _poly_divexact(p, g, tower)
    y = _poly_divexact(dp, g, tower)
    i = 1
    while len(w) > 1:
        z = _poly_sub(y, _poly_derivative(w, tower), tower)
        h = _poly_gcd(w, z, tower)
        if len(h) > 1:
            out.append((h, i))
        w_next = _poly_divexact(w, h, tower)
        y = _poly_divexact(z, h, tower)
        w = w_next
        i += 1
    return out


def roots_over(
    tower: Tower, coeffs: Sequence[Union[AlgebraicNumber, Fraction, int]]
) -> List[Tuple[AlgebraicNumber, int]]:
    """All complex roots with multiplicities, sorted by (Re, Im).

    Roots outside the tower are returned in freshly extended towers sharing
    the input tower as a prefix.
    """
    elems: List[Elem] = []
    for c in coeffs:
        if isinstance(c, AlgebraicNumber):
            elems.append(tower.zero()._coerce(c).value)
        else:
            elems.append(_from_frac(Fraction(c), tower.depth, tower))
    p = _poly_normalize(elems, tower)
    if len(p) == 1:
        if _is_zero_elem(p[0], tower.depth, tower):
            raise AlgebraicError("roots of the zero polynomial")
        return []
    handles: List[RootHandle] = []
    for factor, mult in _yun_squarefree(p, tower):
        handles.extend(_roots_of_squarefree(tower, factor, mult))
    handles = _sort_roots(handles)
    # stamp per-defining indices in sorted order for the debug format
    counters: Dict[Tuple, int] = {}
    for h in handles:
        t = h.number.tower
        if t.depth == tower.depth + 1:
            key = t.levels[-1].defining
            t.levels[-1].index = counters.get(key, 0)
            counters[key] = t.levels[-1].index + 1
    return [(h.number, h.multiplicity) for h in handles]


def _roots_of_squarefree(tower: Tower, factor: List[Elem], mult: int) -> List[RootHandle]:
    out: List[RootHandle] = []
    if len(factor) == 2:
        root = AlgebraicNumber(tower, _e_neg(factor[0]))
        return [RootHandle(root, mult, None)]
    if tower.depth == 0:
        # factor over Q so rational roots stay rational and definings are irreducible
        expr = sum(
            sympy.Rational(c.numerator, c.denominator) * _T**j
            for j, c in enumerate(factor)
        )
        _u, qfactors = sympy.factor_list(expr, _T)
        for base, _m in qfactors:
            fp = sympy.Poly(base, _T)
            fcoeffs = [
                Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q))
                for c in reversed(fp.all_coeffs())
            ]
            if len(fcoeffs) == 2:
                out.append(RootHandle(tower.from_rat(-fcoeffs[0] / fcoeffs[1]), mult, None))
                continue
            monic = [c / fcoeffs[-1] for c in fcoeffs]
            defining = tuple(monic)
            qpoly = sympy.Poly(
                sum(sympy.Rational(c.numerator, c.denominator) * _T**j for j, c in enumerate(monic)),
                _T,
            )
            for k in range(qpoly.degree()):
                w = Witness(qpoly, k)
                level = Level(defining, w, k)
                new_tower = Tower(tower.levels + (level,))
                out.append(RootHandle(new_tower.generator(), mult, w))
        return out
    monic = _poly_monic(factor, tower)
    defining = tuple(monic)
    qpoly = _eliminate_to_q(tower, monic)
    for w in _survivors(tower, monic, qpoly):
        level = Level(defining, w, 0)
        new_tower = Tower(tower.levels + (level,))
        out.append(RootHandle(new_tower.generator(), mult, w))
    return out


def adjoin_root(tower: Tower, coeffs: Sequence, region: Box) -> Tower:
    """Extend the tower by the unique root of `coeffs` inside `region`.

    Errors if the polynomial is not square-free over the tower or the region
    fails to isolate exactly one root.
    """
    elems: List[Elem] = []
    for c in coeffs:
        if isinstance(c, AlgebraicNumber):
            elems.append(tower.zero()._coerce(c).value)
        else:
            elems.append(_from_frac(Fraction(c), tower.depth, tower))
    p = _poly_normalize(elems, tower)
    if len(p) < 2:
        raise AlgebraicError("cannot adjoin a root of a constant")
    dp = _poly_derivative(p, tower)
    if len(_poly_gcd(p, dp, tower)) > 1:
        raise AlgebraicError("polynomial is not square-free over the tower")
    roots = roots_over(tower, [AlgebraicNumber(tower, e) for e in p])
    chosen = []
    for number, _m in roots:
        side = _region_side(number, region)
        if side == "inside":
            chosen.append(number)
    if len(chosen) != 1:
        raise AlgebraicError(
            f"region isolates {len(chosen)} roots, need exactly 1"
        )
    target = chosen[0]
    if target.tower.depth == tower.depth:
        # the chosen root already lies in the tower; adjoin a linear level
        one = _from_frac(Fraction(1), tower.depth, tower)
        defining = (_e_neg(target.value), one)
        rational = target.is_rational()
        if rational is not None:
            qpoly = sympy.Poly(_T - sympy.Rational(rational.numerator, rational.denominator), _T)
            w = Witness(qpoly, 0)
        else:
            qpoly = _minpoly_q(target)
            w = _locate_among_roots(target, qpoly)
        return Tower(tower.levels + (Level(defining, w, 0),))
    return target.tower


def _region_side(number: AlgebraicNumber, region: Box) -> str:
    (qrlo, qrhi), (qilo, qihi) = region
    for _ in range(_REFINE_CAP):
        (rlo, rhi), (ilo, ihi) = number.box()
        if rlo >= qrlo and rhi <= qrhi and ilo >= qilo and ihi <= qihi:
            return "inside"
        if rhi < qrlo or rlo > qrhi or ihi < qilo or ilo > qihi:
            return "outside"
        number.refine()
    raise AlgebraicError("root lies on the region boundary (region too tight)")


def conjugate_pairs(
    xs: Sequence[AlgebraicNumber],
) -> Tuple[List[Tuple[int, int]], List[int]]:
    """Perfect matching of the non-real entries into conjugate pairs.

    Returns (pairs, fixed) as index lists.  Pre: the multiset of values is
    closed under conjugation and has no repeated values.
    """
    fixed = [k for k, x in enumerate(xs) if x.is_real()]
    open_idx = [k for k in range(len(xs)) if k not in fixed]
    pairs: List[Tuple[int, int]] = []
    while open_idx:
        k = open_idx[0]
        partner = None
        for _ in range(_REFINE_CAP):
            mirror = _box_conj(xs[k].box())
            hits = [j for j in open_idx[1:] if _box_intersects(mirror, xs[j].box())]
            if len(hits) == 1:
                partner = hits[0]
                break
            if len(hits) == 0:
                raise AlgebraicError(
                    "input not closed under conjugation (internal expansion bug)"
                )
            xs[k].refine()
            for j in hits:
                xs[j].refine()
        if partner is None:
            raise DecisionFailure("conjugate matching did not converge")
        pairs.append((k, partner))
        open_idx = [j for j in open_idx if j not in (k, partner)]
    return pairs, fixed
