import re
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from quinsing.algebraic import (
    RATIONAL_TOWER,
    AlgebraicError,
    AlgebraicNumber,
    Tower,
    adjoin_root,
    compare_real,
    conjugate_pairs,
    roots_over,
)


def test_sqrt2_basics():
    rts = roots_over(RATIONAL_TOWER, [F(-2), F(0), F(1)])
    assert [m for _, m in rts] == [1, 1]
    a, b = rts[0][0], rts[1][0]
    assert a.sign() == -1 and b.sign() == 1  # sorted by real part
    assert a.is_real() and (a * a - 2).is_zero()
    assert (a.inverse() * a - 1).is_zero()
    assert compare_real(a, b) == "less"


def test_rational_roots_stay_rational():
    rts = roots_over(RATIONAL_TOWER, [F(3), F(-5), F(1), F(1)])  # (z-1)^2 (z+3)
    assert [(r.is_rational(), m) for r, m in rts] == [(F(-3), 1), (F(1), 2)]


def test_gaussian_unit():
    rts = roots_over(RATIONAL_TOWER, [F(1), F(0), F(1)])
    lo, hi = rts[0][0], rts[1][0]
    assert not lo.is_real() and not hi.is_real()
    assert (hi * hi + 1).is_zero()
    pairs, fixed = conjugate_pairs([lo, hi])
    assert pairs == [(0, 1)] and fixed == []


def test_all_imaginary_quartic_sorts_by_imaginary_part():
    # roots are -i, -i/2, i/2, i: equal real parts force the exact tie-break
    rts = roots_over(RATIONAL_TOWER, [F(1), F(0), F(5), F(0), F(4)])
    assert len(rts) == 4
    im_signs = []
    for r, _ in rts:
        assert not r.is_real()
        (_, _), (ilo, ihi) = r.box()
        im_signs.append(1 if ilo > 0 else -1)
    assert im_signs == [-1, -1, 1, 1]
    pairs, fixed = conjugate_pairs([r for r, _ in rts])
    assert sorted(tuple(sorted(p)) for p in pairs) == [(0, 3), (1, 2)]
    assert fixed == []


def test_mixed_quintic():
    rts = roots_over(RATIONAL_TOWER, [F(2), F(-3), F(1), F(0), F(0), F(1)])
    flags = [r.is_real() for r, _ in rts]
    assert len(rts) == 5 and flags.count(True) == 1
    pairs, fixed = conjugate_pairs([r for r, _ in rts])
    assert len(pairs) == 2 and len(fixed) == 1


def region(rlo, rhi, ilo=0, ihi=0):
    return ((F(rlo), F(rhi)), (F(ilo), F(ihi)))


def test_adjoin_and_sibling_identification():
    t1 = adjoin_root(RATIONAL_TOWER, [F(-2), F(0), F(1)], region(1, 2))
    s2 = t1.generator()
    assert s2.sign() == 1 and (s2 * s2 - 2).is_zero()
    # same polynomial again over the extension: reducible defining
    rts = roots_over(t1, [t1.from_rat(-2), t1.zero(), t1.one()])
    assert len(rts) == 2
    r_neg, r_pos = rts[0][0], rts[1][0]
    assert (r_pos - s2).is_zero()
    assert (r_neg + s2).is_zero()
    inv = (r_pos + s2).inverse()
    assert (inv - s2 / 4).is_zero()
    with pytest.raises(ZeroDivisionError):
        (r_neg + s2).inverse()


def test_real_element_of_complex_tower():
    i_val = roots_over(RATIONAL_TOWER, [F(1), F(0), F(1)])[1][0]
    ti = i_val.tower
    rts = roots_over(ti, [ti.from_rat(-2), ti.zero(), ti.one()])
    u, w = rts[0][0], rts[1][0]
    assert not w.tower.totally_real()
    assert w.is_real() and w.sign() == 1
    assert u.is_real() and compare_real(u, w) == "less"


def test_complex_over_complex():
    i_val = roots_over(RATIONAL_TOWER, [F(1), F(0), F(1)])[1][0]
    ti = i_val.tower
    rts = roots_over(ti, [-i_val, ti.zero(), ti.one()])  # z^2 = i
    assert len(rts) == 2
    r = rts[0][0]
    assert (r * r - i_val).is_zero()
    assert (r**4 + 1).is_zero()
    # the two square roots of i are not mutual conjugates
    with pytest.raises(AlgebraicError):
        conjugate_pairs([rts[0][0], rts[1][0]])


def test_adjoin_guards():
    with pytest.raises(AlgebraicError):
        adjoin_root(RATIONAL_TOWER, [F(1), F(2), F(1)], region(-2, 0, -1, 1))
    with pytest.raises(AlgebraicError):
        adjoin_root(RATIONAL_TOWER, [F(-2), F(0), F(1)], region(5, 6))
    with pytest.raises(AlgebraicError):
        adjoin_root(RATIONAL_TOWER, [F(-2), F(0), F(1)], region(-2, 2, -1, 1))


def test_adjoin_rational_root_gives_linear_level():
    t = adjoin_root(RATIONAL_TOWER, [F(-6), F(1), F(1)], region(1, 3))
    g = t.generator()
    assert t.depth == 1 and (g - 2).is_zero()


def test_debug_format_shape_and_stability():
    t = adjoin_root(RATIONAL_TOWER, [F(-2), F(0), F(1)], region(1, 2))
    s = t.level_str(0)
    assert re.fullmatch(
        r"RootOf\(Z\^2 - 2, region=\[-?\d+(/\d+)?,-?\d+(/\d+)?\]x\[-?\d+(/\d+)?,-?\d+(/\d+)?\], index=\d+\)",
        s,
    )
    t.refine()
    assert t.level_str(0) == s  # region snapshot is not affected by refinement
    t2 = adjoin_root(RATIONAL_TOWER, [F(-2), F(0), F(1)], region(1, 2))
    assert t2.level_str(0) == s


def test_towers_are_not_mutated_by_arithmetic():
    t = adjoin_root(RATIONAL_TOWER, [F(-2), F(0), F(1)], region(1, 2))
    levels_before = t.levels
    g = t.generator()
    _ = (g + 1) * (g - 1) / (g + 3)
    _ = g.is_real(), g.sign()
    assert t.levels is levels_before


cubic_st = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=3, max_size=3
)


@given(cubic_st)
@settings(max_examples=40, deadline=None)
def test_monic_cubic_root_count_and_membership(cs):
    coeffs = [*map(F, cs), F(1)]
    rts = roots_over(RATIONAL_TOWER, coeffs)
    assert sum(m for _, m in rts) == 3
    for r, _ in rts:
        acc = r.tower.zero()
        for c in reversed(coeffs):
            acc = acc * r + c
        assert acc.is_zero()
    xs = [r for r, m in rts for _ in range(1) if m == 1]
    if len(xs) == len(rts):  # distinct roots: conjugation closure must pair up
        pairs, fixed = conjugate_pairs(xs)
        assert 2 * len(pairs) + len(fixed) == len(xs)
