"""Exact classification of real singular points of plane algebraic curves.

The pipeline: parse a curve over Q, move a singular point to the origin,
expand Puiseux branches just far enough to separate them pairwise, build the
splitting diagram with conjugate braces, and look the canonical code up in
the degree <= 5 catalog.
"""

from .curve import (
    BiPoly,
    CurveError,
    FactorList,
    ParseError,
    factor_rational,
    format_poly,
    linear_change,
    multiplicity_at_origin,
    parse_poly,
    square_free_part,
    tangent_cone,
    translate,
)
from .newton import NewtonPolygon, newton_polygon, polygon_json
from .puiseux import (
    ProBranch,
    PuiseuxError,
    branch_json,
    contact_exponent,
    display_jet,
    expand_to_separation,
    real_representable,
    residual_valuation,
)
from .diagram import (
    Diagram,
    DiagramError,
    build_diagram,
    canonical_code,
    render_ascii,
)
from .catalog import NotInCatalog, SingularityClass, all_classes, classify_diagram, self_check
from .classify import (
    ClassificationReport,
    ClassifyError,
    classify_all,
    classify_point,
    rational_singular_points,
)

__all__ = [
    "BiPoly",
    "ClassificationReport",
    "ClassifyError",
    "CurveError",
    "Diagram",
    "DiagramError",
    "FactorList",
    "NewtonPolygon",
    "NotInCatalog",
    "ParseError",
    "ProBranch",
    "PuiseuxError",
    "SingularityClass",
    "all_classes",
    "branch_json",
    "build_diagram",
    "canonical_code",
    "classify_all",
    "classify_diagram",
    "classify_point",
    "contact_exponent",
    "display_jet",
    "expand_to_separation",
    "factor_rational",
    "format_poly",
    "linear_change",
    "multiplicity_at_origin",
    "newton_polygon",
    "parse_poly",
    "polygon_json",
    "rational_singular_points",
    "real_representable",
    "render_ascii",
    "residual_valuation",
    "self_check",
    "square_free_part",
    "tangent_cone",
    "translate",
]

__version__ = "0.1.0"
