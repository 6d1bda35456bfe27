"""Newton-Puiseux expansion of a plane curve at the origin.

Branches are expanded just far enough that every pair differs at some
stored exponent; each recursion step substitutes x -> x^q, y -> x^p(c + y')
for a segment inclination p/q and a segment-polynomial root c, dividing by
the minimal weight.  Cumulative bookkeeping keeps all exponents absolute:
a node carries (offset, den) with local inclination mu contributing the
absolute exponent offset + mu/den and multiplying den by q.

Coefficients live in algebraic towers; each root continues in its own
sibling extension, so no arithmetic ever crosses unrelated towers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy

from .curve import BiPoly, CurveError, multiplicity_at_origin, tangent_cone
from .newton import Segment, polygon_of_support, segment_poly_coeffs
from . import algebraic
from .algebraic import RATIONAL_TOWER, AlgebraicNumber, Tower, Witness, roots_over

INFINITE_ORDER = math.inf


class PuiseuxError(CurveError):
    pass


@dataclass(frozen=True)
class PuiseuxTerm:
    exponent: Fraction
    coeff: AlgebraicNumber


TermSeq = Tuple[Tuple[Fraction, AlgebraicNumber], ...]

_run_counter = itertools.count(1)


class ProBranch:
    """One pro-branch, truncated at its separation exponent.

    terms hold the nonzero jet coefficients up to and including
    separated_at; a branch that separated purely by lacking a term may
    have no stored terms at all.
    """

    __slots__ = (
        "terms",
        "ramification",
        "separated_at",
        "real_representable",
        "_run",
        "_path",
        "_state",
        "_tail",
    )

    def __init__(self, terms: Tuple[PuiseuxTerm, ...], separated_at: Fraction,
                 run: int, path: Tuple, state, tail: TermSeq):
        self.terms = terms
        self.ramification = _lcm_denominators(t.exponent for t in terms)
        self.separated_at = separated_at
        self.real_representable = _zeta_representable(
            [(t.exponent, t.coeff) for t in terms]
        )
        self._run = run
        self._path = path
        self._state = state
        self._tail = tail  # emitted past separation, exponent-ascending

    def __repr__(self):
        jet = " + ".join(f"({t.coeff})*x^{t.exponent}" for t in self.terms) or "0"
        return f"<ProBranch {jet} | sep {self.separated_at}>"


def _lcm_denominators(exponents) -> int:
    q = 1
    for e in exponents:
        q = q * e.denominator // math.gcd(q, e.denominator)
    return q


# ---------------------------------------------------------------------------
# the zeta rule: does a jet admit a real parametrization x = +-t^q?


def _zeta_representable(terms: Sequence[Tuple[Fraction, AlgebraicNumber]]) -> bool:
    if not terms:
        return True
    q = _lcm_denominators(e for e, _ in terms)
    ks = [int(e * q) for e, _ in terms]
    ns = []
    for (_e, c) in terms:
        n = _angle_class(c, q)
        if n is None:
            return False
        ns.append(n % q)
    for m in range(q):
        if all((n + m * k) % q == 0 for n, k in zip(ns, ks)):
            return True
    return False


def _angle_class(c: AlgebraicNumber, q: int) -> Optional[int]:
    """n with arg(c) = n*pi/q (n in [0, 2q)), or None if no such n exists."""
    power = c ** (2 * q)
    if not power.is_real() or power.sign() <= 0:
        return None
    if c.is_real():
        return 0 if c.sign() > 0 else q
    dirs = _unit_directions(2 * q)
    candidates = list(range(2 * q))
    for _ in range(algebraic._REFINE_CAP):
        cb = c.box()
        keep = []
        for n in candidates:
            prod = algebraic._box_mul(cb, algebraic._box_conj(dirs[n].box()))
            (rlo, rhi), (ilo, ihi) = prod
            if ilo > 0 or ihi < 0 or rhi < 0:
                continue
            keep.append(n)
        candidates = keep
        if len(candidates) == 1:
            return candidates[0]
        if not candidates:
            raise algebraic.DecisionFailure("angle class eliminated all sectors")
        c.refine()
        for n in candidates:
            dirs[n].refine()
    raise algebraic.DecisionFailure("angle class did not converge")


_dir_cache: Dict[int, List[Witness]] = {}


def _unit_directions(m: int) -> List[Witness]:
    """Witnesses for e^(2*pi*i*n/(2m))... indexed by n: root exp(i*pi*n*2/m)?"""
    if m in _dir_cache:
        return _dir_cache[m]
    t = sympy.Symbol("T")
    poly = sympy.Poly(t**m - 1, t)
    ws = [Witness(poly, k) for k in range(m)]
    # identify which witness sits at angle 2*pi*n/m for each n
    by_angle: List[Optional[Witness]] = [None] * m
    for w in ws:
        for _ in range(algebraic._REFINE_CAP):
            (rlo, rhi), (ilo, ihi) = w.box()
            if max(rhi - rlo, ihi - ilo) < Fraction(1, 16):
                break
            w.refine()
        (rlo, rhi), (ilo, ihi) = w.box()
        cx = (rlo + rhi) / 2
        cy = (ilo + ihi) / 2
        ang = math.atan2(float(cy), float(cx)) % (2 * math.pi)
        n = round(ang * m / (2 * math.pi)) % m
        if by_angle[n] is not None:
            raise algebraic.DecisionFailure("ambiguous unit direction")
        by_angle[n] = w
    _dir_cache[m] = by_angle  # type: ignore[assignment]
    return by_angle  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# the walk

TPoly = Dict[Tuple[int, int], AlgebraicNumber]


def _filter_support(g: TPoly) -> TPoly:
    return {k: c for k, c in g.items() if not c.is_zero()}


def _substitute(g: TPoly, seg: Segment, c: AlgebraicNumber) -> TPoly:
    """g(x^q, x^p(c + v)) / x^m over c's tower, m the minimal segment weight."""
    p, q = seg.p, seg.q
    m = min(q * i + p * j for i, j in g)
    vdeg = max(j for _i, j in g)
    cpow = [c.tower.one()]
    for _ in range(vdeg):
        cpow.append(cpow[-1] * c)
    out: TPoly = {}
    for (i, j), a in g.items():
        w = q * i + p * j - m
        for l in range(j + 1):
            key = (w, l)
            contrib = a * cpow[j - l] * math.comb(j, l)
            if key in out:
                out[key] = out[key] + contrib
            else:
                out[key] = contrib
    return _filter_support(out)


@dataclass
class _LeafState:
    kind: str  # "exact" | "node" | "pending"
    g: Optional[TPoly] = None
    tower: Optional[Tower] = None
    offset: Fraction = Fraction(0)
    den: int = 1
    seg_index: int = 0
    pending_seg: Optional[Segment] = None
    pending_root: Optional[AlgebraicNumber] = None


def _node_shape(g: TPoly, seg_index: int):
    """(segments, min_j, exact, count) of the node's remaining polygon part."""
    support = list(g)
    min_j = min(j for _i, j in support)
    if min_j >= 2:
        raise PuiseuxError("multiple component detected mid-recursion")
    exact = min_j == 1
    j_start = min(j for i, j in support if i == 0)
    if j_start > min_j:
        segments = list(polygon_of_support(support).segments)
    else:
        segments = []
    segments = segments[seg_index:]
    count = sum(s.start[1] - s.end[1] for s in segments) + (1 if exact else 0)
    return segments, exact, count


def _advance(state: _LeafState):
    """One more jet term: ((exponent, coeff) | None if exhausted, new state)."""
    while True:
        if state.kind == "exact":
            return None, state
        if state.kind == "pending":
            g2 = _substitute(state.g, state.pending_seg, state.pending_root)
            mu = state.pending_seg.exponent
            state = _LeafState(
                kind="node",
                g=g2,
                tower=state.pending_root.tower,
                offset=state.offset + mu / state.den,
                den=state.den * state.pending_seg.q,
            )
            continue
        segments, exact, count = _node_shape(state.g, state.seg_index)
        if count != 1:
            raise PuiseuxError("leaf continuation is not unique (internal bug)")
        if not segments:
            return None, _LeafState(kind="exact")
        seg = segments[0]
        psi = segment_poly_coeffs(state.g, seg, state.tower.zero())
        if len(psi) != 2:
            raise PuiseuxError("separated branch produced nonlinear step (internal bug)")
        c = -psi[0] / psi[1]
        exponent = state.offset + seg.exponent / state.den
        nxt = _LeafState(
            kind="pending",
            g=state.g,
            tower=state.tower,
            offset=state.offset,
            den=state.den,
            pending_seg=seg,
            pending_root=c,
        )
        return (exponent, c), nxt


def _make_branch(prefix: TermSeq, path: Tuple, state: _LeafState, run: int) -> ProBranch:
    separated_at = path[-1][0] if path else Fraction(0)
    stored = tuple(
        PuiseuxTerm(e, c) for e, c in prefix if e <= separated_at
    )
    tail = tuple((e, c) for e, c in prefix if e > separated_at)
    return ProBranch(stored, separated_at, run, path, state, tail)


def _walk(
    g: TPoly,
    tower: Tower,
    offset: Fraction,
    den: int,
    seg_index: int,
    prefix: TermSeq,
    path: Tuple,
    cap: Fraction,
    run: int,
    out: List[ProBranch],
):
    segments, exact, count = _node_shape(g, seg_index)
    if count == 1:
        if not segments:
            out.append(_make_branch(prefix, path, _LeafState(kind="exact"), run))
        else:
            state = _LeafState(
                kind="node", g=g, tower=tower, offset=offset, den=den,
                seg_index=seg_index,
            )
            out.append(_make_branch(prefix, path, state, run))
        return
    seg = segments[0]
    exponent = offset + seg.exponent / den
    if exponent > cap:
        raise PuiseuxError(
            f"separation exponent exceeds cap {cap} "
            "(non-square-free input or cap too low)"
        )
    psi = segment_poly_coeffs(g, seg, tower.zero())
    roots = roots_over(tower, psi)
    beyond = count - (seg.start[1] - seg.end[1])
    n_children = len(roots) + (1 if beyond >= 1 else 0)
    split = n_children >= 2

    def child_path(key):
        return path + ((exponent, key),) if split else path

    for ordinal, (c, mult) in enumerate(roots):
        new_prefix = prefix + ((exponent, c),)
        if mult == 1:
            state = _LeafState(
                kind="pending", g=g, tower=tower, offset=offset, den=den,
                pending_seg=seg, pending_root=c,
            )
            out.append(_make_branch(new_prefix, child_path((0, ordinal)), state, run))
        else:
            g2 = _substitute(g, seg, c)
            _walk(
                g2, c.tower, exponent, den * seg.q, 0,
                new_prefix, child_path((0, ordinal)), cap, run, out,
            )
    if beyond >= 1:
        _walk(
            g, tower, offset, den, seg_index + 1,
            prefix, child_path(("z",)), cap, run, out,
        )


def expand_to_separation(f: BiPoly, cap: Fraction = Fraction(8)) -> List[ProBranch]:
    m = multiplicity_at_origin(f)
    cone = tangent_cone(f)
    if all(i > 0 for i, _j in cone.terms):
        raise PuiseuxError("vertical tangent at the origin (pre-shear required)")
    g: TPoly = {k: RATIONAL_TOWER.from_rat(c) for k, c in f.terms.items()}
    run = next(_run_counter)
    out: List[ProBranch] = []
    _walk(g, RATIONAL_TOWER, Fraction(0), 1, 0, (), (), Fraction(cap), run, out)
    if len(out) != m:
        raise PuiseuxError(
            f"branch count {len(out)} != multiplicity {m} (internal bug)"
        )
    return out


# ---------------------------------------------------------------------------
# per-branch operations


def real_representable(b: ProBranch) -> bool:
    return b.real_representable


def contact_exponent(b1: ProBranch, b2: ProBranch) -> Fraction:
    if b1._run != b2._run:
        raise PuiseuxError("contact exponent requires branches from one expansion run")
    for (e1, k1), (e2, k2) in zip(b1._path, b2._path):
        if e1 != e2:
            raise PuiseuxError("inconsistent branch paths (internal bug)")
        if k1 != k2:
            return e1
    raise PuiseuxError("identical branches have no contact exponent (internal bug)")


def branch_jet(b: ProBranch, through: Optional[Fraction] = None):
    """Stored terms plus already-computed tail, optionally filtered."""
    items = [(t.exponent, t.coeff) for t in b.terms] + list(b._tail)
    if through is not None:
        items = [(e, c) for e, c in items if e <= through]
    return items


def extend_jet(b: ProBranch, steps: int) -> List[Tuple[Fraction, AlgebraicNumber]]:
    """Jet terms of b extended by `steps` more expansion steps (nonzero terms)."""
    items = [(t.exponent, t.coeff) for t in b.terms] + list(b._tail)
    state = b._state
    emitted = 0
    while emitted < steps:
        term, state = _advance(state)
        if term is None:
            break
        items.append(term)
        emitted += 1
    return items


def display_jet(b: ProBranch) -> List[Tuple[Fraction, AlgebraicNumber]]:
    """Stored jet, extended to the first nonzero term when none is stored."""
    items = [(t.exponent, t.coeff) for t in b.terms]
    if items:
        return items
    return extend_jet(b, 1)


def residual_valuation(f: BiPoly, b: ProBranch, extra: int) -> Union[Fraction, float]:
    """ord_x f(x, jet(x)) after extending b by `extra` steps; inf when exact."""
    if b._run is None:
        raise PuiseuxError("branch lacks expansion state")
    items = [(t.exponent, t.coeff) for t in b.terms] + list(b._tail)
    state = b._state
    emitted = 0
    exhausted = False
    while emitted < extra:
        term, state = _advance(state)
        if term is None:
            exhausted = True
            break
        items.append(term)
        emitted += 1
    if exhausted:
        return INFINITE_ORDER
    return _jet_order(f, items)


def _jet_order(f: BiPoly, items: Sequence[Tuple[Fraction, AlgebraicNumber]]):
    q = _lcm_denominators(e for e, _ in items) if items else 1
    tower = items[-1][1].tower if items else RATIONAL_TOWER
    # y(t) with x = t^q; exponents t^(e*q)
    ydeg = max((int(e * q) for e, _ in items), default=0)
    jet: Dict[int, AlgebraicNumber] = {}
    for e, c in items:
        k = int(e * q)
        jet[k] = jet.get(k, tower.zero()) + c
    # Horner over y-coefficients of f: result is a dict t-exponent -> coeff
    ycoeffs: List[Dict[int, Fraction]] = []
    maxj = max(j for _i, j in f.terms)
    for j in range(maxj + 1):
        row = {q * i: c for (i, jj), c in f.terms.items() if jj == j}
        ycoeffs.append(row)
    acc: Dict[int, AlgebraicNumber] = {
        k: tower.from_rat(c) for k, c in ycoeffs[maxj].items()
    }
    for j in range(maxj - 1, -1, -1):
        nxt: Dict[int, AlgebraicNumber] = {}
        for ka, ca in acc.items():
            for kb, cb in jet.items():
                key = ka + kb
                term = ca * cb
                nxt[key] = nxt.get(key, tower.zero()) + term
        for kb, cb in ycoeffs[j].items():
            nxt[kb] = nxt.get(kb, tower.zero()) + cb
        acc = {k: c for k, c in nxt.items()}
    orders = sorted(k for k, c in acc.items() if not c.is_zero())
    if not orders:
        return INFINITE_ORDER
    return Fraction(orders[0], q)


def branch_json(b: ProBranch) -> dict:
    return {
        "ramification": b.ramification,
        "terms": [
            {"exponent": str(t.exponent), "coeff": str(t.coeff)} for t in b.terms
        ],
        "real": b.real_representable,
    }
