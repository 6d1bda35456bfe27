"""Locate rational singular points and run the full pipeline at each one.

Orchestration only: translation, the de-verticalizing shear, the square-free
guard, expansion, diagram building, and catalog lookup all delegate to the
other modules.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from .curve import (
    BiPoly,
    CurveError,
    factor_rational,
    format_poly,
    linear_change,
    multiplicity_at_origin,
    resultant,
    square_free_part,
    tangent_cone,
    to_sympy,
    translate,
)
from .newton import polygon_json
from .puiseux import ProBranch, branch_json, expand_to_separation
from .diagram import Diagram, build_diagram, canonical_code
from .catalog import NotInCatalog, SingularityClass, classify_diagram


class ClassifyError(CurveError):
    pass


IRRATIONAL_WARNING = (
    "only rational singular points are located; irrational or complex-conjugate "
    "singular points may exist and are not reported"
)


# ---------------------------------------------------------------------------
# rational singular point location


def _univariate_rational_roots(coeffs: Sequence[Fraction]) -> List[Fraction]:
    """Rational roots of sum(coeffs[k] * t^k); input need not be normalized."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs or len(coeffs) == 1:
        return []
    t = sympy.Symbol("t")
    poly = sympy.Poly(
        sum(sympy.Rational(c.numerator, c.denominator) * t**k for k, c in enumerate(coeffs)),
        t,
    )
    roots = []
    for r, _mult in poly.ground_roots().items():
        q = sympy.Rational(r)
        roots.append(Fraction(int(q.p), int(q.q)))
    return sorted(roots)


def _univariate_in(g: BiPoly, var: str, value: Fraction) -> List[Fraction]:
    """Coefficient list of g with `var` fixed, as a polynomial in the other."""
    out = []
    for c in g.coeffs_in("y" if var == "x" else "x"):
        out.append(c.eval_at(value, value))  # c involves one variable only
    return out


def _points_of_pair(g1: BiPoly, g2: BiPoly) -> set:
    """Rational common zeros of two coprime polynomials."""
    if g1.degree_in("y") == 0 and g2.degree_in("y") == 0:
        return set()  # distinct irreducibles in x alone share no roots
    if g1.degree_in("y") == 0:
        g1, g2 = g2, g1
    pts = set()
    if g2.degree_in("y") == 0:
        for x0 in _univariate_rational_roots([c.eval_at(0, 0) for c in g2.coeffs_in("x")]):
            for y0 in _univariate_rational_roots(_univariate_in(g1, "x", x0)):
                pts.add((x0, y0))
        return pts
    rx = resultant(g1, g2, "y")
    if rx.is_zero():
        raise ClassifyError("common factor between supposedly coprime factors")
    for x0 in _univariate_rational_roots([c.eval_at(0, 0) for c in rx.coeffs_in("x")]):
        for y0 in _univariate_rational_roots(_univariate_in(g1, "x", x0)):
            if g2.eval_at(x0, y0) == 0:
                pts.add((x0, y0))
    return pts


def _singular_points_of_factor(g: BiPoly) -> set:
    if g.total_degree() <= 1:
        return set()
    gx = g.partial("x")
    gy = g.partial("y")
    pts = set()
    if g.degree_in("y") == 0:
        # irreducible in x alone with degree >= 2: no rational zeros at all
        return set()
    rx = resultant(g, gy, "y")
    if rx.is_zero():
        raise ClassifyError("square-free factor shares a root with its y-derivative")
    for x0 in _univariate_rational_roots([c.eval_at(0, 0) for c in rx.coeffs_in("x")]):
        for y0 in _univariate_rational_roots(_univariate_in(g, "x", x0)):
            if gx.eval_at(x0, y0) == 0 and gy.eval_at(x0, y0) == 0:
                pts.add((x0, y0))
    return pts


def _q_factors(f: BiPoly) -> List[Tuple[BiPoly, int]]:
    if f.total_degree() <= 8:
        return list(factor_rational(f).factors)
    _unit, raw = sympy.factor_list(to_sympy(f))
    out = []
    for base, mult in raw:
        from .curve import from_sympy

        poly = from_sympy(base)
        if poly.total_degree() > 0:
            out.append((poly, int(mult)))
    return out


def _ensure_square_free(f: BiPoly):
    factors = _q_factors(f)
    if any(m > 1 for _, m in factors):
        raise ClassifyError("multiple component: curve is not square-free")
    return factors


def rational_singular_points(f: BiPoly) -> List[Tuple[Fraction, Fraction]]:
    """All rational common zeros of (f, df/dx, df/dy), via resultants.

    Points with irrational or non-real coordinates are not searched for; see
    IRRATIONAL_WARNING.
    """
    factors = _ensure_square_free(f)
    gs = [g for g, _ in factors]
    pts = set()
    for g in gs:
        pts |= _singular_points_of_factor(g)
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            pts |= _points_of_pair(gs[i], gs[j])
    return sorted(pts)


# ---------------------------------------------------------------------------
# per-point pipeline


@dataclass
class ClassificationReport:
    input: str
    point: Tuple[Fraction, Fraction]
    shift: Tuple[Fraction, Fraction]
    shear_lambda: int  # 0 when no shear was needed
    multiplicity: int
    tangent_cone: str
    newton_polygon: dict
    branches: Tuple[ProBranch, ...]
    diagram: Diagram
    code: str
    catalog_result: object  # SingularityClass or NotInCatalog
    q_factors: Tuple[Tuple[str, int], ...]
    q_irreducible: bool
    cap: Fraction
    warnings: Tuple[str, ...] = ()

    @property
    def shear_matrix(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return ((1, self.shear_lambda), (0, 1))

    def to_json(self) -> dict:
        if isinstance(self.catalog_result, SingularityClass):
            cat = {
                "matched": True,
                "id": self.catalog_result.id,
                "arnold_label": self.catalog_result.arnold_label,
                "irreducible": self.catalog_result.irreducible,
                "reducible": self.catalog_result.reducible,
            }
        else:
            cat = {
                "matched": False,
                "code": self.catalog_result.code,
                "reason": self.catalog_result.reason,
            }
        return {
            "input": self.input,
            "point": [str(self.point[0]), str(self.point[1])],
            "shift": [str(self.shift[0]), str(self.shift[1])],
            "shear_lambda": self.shear_lambda,
            "shear_matrix": [[1, self.shear_lambda], [0, 1]],
            "multiplicity": self.multiplicity,
            "tangent_cone": self.tangent_cone,
            "newton_polygon": self.newton_polygon,
            "branches": [branch_json(b) for b in self.branches],
            "code": self.code,
            "catalog": cat,
            "q_factors": [[t, m] for t, m in self.q_factors],
            "q_irreducible": self.q_irreducible,
            "cap": str(self.cap),
            "warnings": list(self.warnings),
        }


def classify_point(
    f: BiPoly, p: Tuple[Fraction, Fraction], cap: Fraction = Fraction(8)
) -> ClassificationReport:
    factors = _ensure_square_free(f)
    p = (Fraction(p[0]), Fraction(p[1]))
    g = translate(f, p)
    if g.is_zero() or g.coeff(0, 0) != 0:
        raise ClassifyError(f"point {p} is not on the curve")
    m = multiplicity_at_origin(g)
    if m < 2:
        raise ClassifyError(f"point {p} is a smooth point (multiplicity 1)")
    cone = tangent_cone(g)
    lam = 0
    if cone.coeff(0, m) == 0:
        lam = 1
        while cone.eval_at(Fraction(lam), Fraction(1)) == 0:
            lam += 1
        g = linear_change(g, [[1, lam], [0, 1]])
        cone = tangent_cone(g)
    branches = expand_to_separation(g, cap=cap)
    diagram = build_diagram(branches)
    code = canonical_code(diagram)
    q_irr = len(factors) == 1
    result = classify_diagram(
        diagram, {"curve_degree": f.total_degree(), "q_irreducible": q_irr}
    )
    warnings = []
    if len(branches) != m:
        warnings.append(
            f"branch count {len(branches)} differs from multiplicity {m} (internal)"
        )
    return ClassificationReport(
        input=format_poly(f),
        point=p,
        shift=p,
        shear_lambda=lam,
        multiplicity=m,
        tangent_cone=format_poly(cone),
        newton_polygon=polygon_json(g),
        branches=tuple(branches),
        diagram=diagram,
        code=code,
        catalog_result=result,
        q_factors=tuple((format_poly(q), mult) for q, mult in factors),
        q_irreducible=q_irr,
        cap=Fraction(cap),
        warnings=tuple(warnings),
    )


def classify_all(f: BiPoly, cap: Fraction = Fraction(8)) -> List[ClassificationReport]:
    """classify_point over every rational singular point, in point order."""
    reports = []
    for p in rational_singular_points(f):
        r = classify_point(f, p, cap=cap)
        r.warnings = r.warnings + (IRRATIONAL_WARNING,)
        reports.append(r)
    return reports
