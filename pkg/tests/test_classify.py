import json
from fractions import Fraction as F

import pytest

from quinsing.catalog import NotInCatalog, SingularityClass
from quinsing.classify import (
    IRRATIONAL_WARNING,
    ClassifyError,
    classify_all,
    classify_point,
    rational_singular_points,
)
from quinsing.curve import CurveError, linear_change, parse_poly


def test_singular_points_of_cusp():
    assert rational_singular_points(parse_poly("y^2 - x^3")) == [(0, 0)]


def test_no_singular_points_on_smooth_conic():
    assert rational_singular_points(parse_poly("x^2 + y^2 - 1")) == []


def test_translated_cusp_found():
    pts = rational_singular_points(parse_poly("(y-1)^2 - (x-2)^3"))
    assert pts == [(2, 1)]


def test_intersection_points_of_two_smooth_factors():
    pts = rational_singular_points(parse_poly("(y^2 - x)*(x^2 - y)"))
    assert pts == [(0, 0), (1, 1)]


def test_multiple_component_rejected():
    with pytest.raises(CurveError, match="multiple component"):
        classify_point(parse_poly("(y - x^2)^2 * (y + x)"), (0, 0))
    with pytest.raises(CurveError, match="multiple component"):
        rational_singular_points(parse_poly("(y - x^2)^2"))


def test_point_membership_checked():
    with pytest.raises(ClassifyError, match="not on the curve"):
        classify_point(parse_poly("y^2 - x^3"), (1, 3))


def test_smooth_point_rejected():
    with pytest.raises(ClassifyError, match="smooth point"):
        classify_point(parse_poly("y^2 - x^3"), (1, 1))


def test_cusp_report():
    r = classify_point(parse_poly("y^2 - x^3"), (0, 0))
    assert r.multiplicity == 2
    assert r.shear_lambda == 0
    assert r.code == "(3/2:•,•|braces:)"
    assert isinstance(r.catalog_result, SingularityClass)
    assert r.catalog_result.arnold_label == "A_2"
    assert r.q_irreducible is True
    assert len(r.branches) == 2


def test_vertical_cone_triggers_shear():
    # tangent cone x*y is divisible by x, so the smallest usable shear is 1
    r = classify_point(parse_poly("x*y + x^3 + y^3"), (0, 0))
    assert r.shear_lambda == 1
    assert r.shear_matrix == ((1, 1), (0, 1))
    assert r.catalog_result.arnold_label == "A_1"


def test_reducible_context_affects_lookup():
    # conic through a nodal cubic's node, tangent to one nodal branch
    r = classify_point(parse_poly("(y^2 - x*y + x^3)*(y + 2*x^2)"), (0, 0))
    assert r.q_irreducible is False
    assert isinstance(r.catalog_result, SingularityClass)
    assert r.catalog_result.arnold_label == "D_6"
    assert r.catalog_result.reducible is True


def test_classify_all_two_nodes():
    rs = classify_all(parse_poly("(y^2 - x)*(x^2 - y)"))
    assert [r.point for r in rs] == [(F(0), F(0)), (F(1), F(1))]
    assert all(r.catalog_result.arnold_label == "A_1" for r in rs)
    assert all(IRRATIONAL_WARNING in r.warnings for r in rs)


def test_reports_are_bit_for_bit_reproducible():
    a = classify_point(parse_poly("(y^2 - x*y)^2 - x^5"), (0, 0))
    b = classify_point(parse_poly("(y^2 - x*y)^2 - x^5"), (0, 0))
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(
        b.to_json(), sort_keys=True
    )


def test_code_survives_a_linear_change():
    f = parse_poly("(y^2 - x*y)^2 - x^5")
    g = linear_change(f, [[F(1), F(2)], [F(1), F(3)]])
    ra = classify_point(f, (0, 0))
    rb = classify_point(g, (0, 0))
    assert ra.code == rb.code


def test_leaf_count_matches_multiplicity():
    for text in ("y^2 - x^3", "(y^2 - x*y)^2 - x^5", "(x^2 + y^2)^2 + x^5"):
        r = classify_point(parse_poly(text), (0, 0))
        assert len(r.branches) == r.multiplicity
        assert not r.warnings


def test_cap_exceeded_is_a_domain_error():
    # the two branches agree past any depth the default cap allows
    with pytest.raises(CurveError):
        classify_point(parse_poly("y*(y - x^9)"), (0, 0))


def test_json_report_shape():
    r = classify_point(parse_poly("y^2 - x^3"), (0, 0))
    d = r.to_json()
    assert d["catalog"]["matched"] is True
    assert d["point"] == ["0", "0"]
    assert d["multiplicity"] == 2
    assert d["code"] == "(3/2:•,•|braces:)"
    assert isinstance(d["branches"], list) and len(d["branches"]) == 2
    json.dumps(d)  # must be serializable as-is


def test_not_in_catalog_for_high_degree_input():
    r = classify_point(parse_poly("y^2 - x^7"), (0, 0))
    assert isinstance(r.catalog_result, NotInCatalog)
    assert "degree" in r.catalog_result.reason
