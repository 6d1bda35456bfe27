"""End-to-end acceptance checks, one numbered test per criterion.

Each test finishes by printing a single PASS line (visible with -s);
on failure the same line, with detail, is the assertion message.
"""

import json
import math
import random
import subprocess
import sys
from fractions import Fraction as F
from pathlib import Path
from time import perf_counter

from quinsing import families as fm
from quinsing.catalog import all_classes, self_check
from quinsing.classify import classify_all, classify_point
from quinsing.curve import (
    CurveError,
    BiPoly,
    factor_rational,
    linear_change,
    multiplicity_at_origin,
    parse_poly,
    square_free_part,
)
from quinsing.diagram import build_diagram, canonical_code, to_json as diagram_json
from quinsing.puiseux import display_jet, expand_to_separation, residual_valuation

B = "•"


def report(tag, ok, detail=""):
    line = f"{tag}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else "")
    print(line)
    assert ok, line


def code_of(poly, cap=F(9)):
    return canonical_code(build_diagram(expand_to_separation(poly, cap=cap)))


def test_a1_cusp_and_worked_three_branch_example():
    t0 = perf_counter()
    rs = classify_all(parse_poly("y^2 + x^3"))
    dt_cusp = perf_counter() - t0
    ok = (len(rs) == 1 and rs[0].point == (0, 0)
          and rs[0].code == f"(3/2:{B},{B}|braces:)"
          and rs[0].catalog_result.arnold_label == "A_2")

    t0 = perf_counter()
    bs = expand_to_separation(parse_poly("x^2*y + x^4 + 2*x*y^2 + y^3"))
    d = build_diagram(bs)
    dt_three = perf_counter() - t0
    jets = sorted(
        tuple((str(e), str(c)) for e, c in display_jet(b)) for b in bs
    )
    ok = ok and jets == [
        (("1", "-1"), ("3/2", "-1")),
        (("1", "-1"), ("3/2", "1")),
        (("2", "-1"),),
    ]
    cols = set(json.loads(diagram_json(d))["exponents"])
    ok = ok and cols == {"1", "3/2"}
    ok = ok and dt_cusp < 1.0 and dt_three < 1.0
    report("acceptance 1", ok, f"cusp {dt_cusp:.2f}s, 3-branch {dt_three:.2f}s")


def test_a2_catalog_counts_and_selfcheck():
    t0 = perf_counter()
    classes = all_classes()
    n_irr = sum(1 for c in classes if c.irreducible)
    n_red = sum(1 for c in classes if c.reducible)
    irr_codes = [c.code for c in classes if c.irreducible]
    red_codes = [c.code for c in classes if c.reducible]
    chk = self_check()
    dt = perf_counter() - t0
    ok = (n_irr == 42 and n_red == 49
          and len(set(irr_codes)) == 42 and len(set(red_codes)) == 49
          and chk["ok"] and dt < 120.0)
    report("acceptance 2", ok, f"42+49 classes, selfcheck in {dt:.1f}s")


def test_a3_two_doubled_conics_get_different_codes():
    ra = classify_point(parse_poly("(y^2 - x*y)^2 - x^5"), (0, 0))
    rb = classify_point(parse_poly("(x^2 + y^2)^2 + x^5"), (0, 0))
    ok = ra.code != rb.code
    report("acceptance 3", ok, f"{ra.code} vs {rb.code}")


def test_a4_sign_sweep_driver():
    script = Path(__file__).resolve().parent.parent / "scripts" / "sweep_sign_splits.py"
    t0 = perf_counter()
    proc = subprocess.run(
        [sys.executable, str(script), "--per-side", "20", "--seed", "2024"],
        capture_output=True, text=True, timeout=280,
    )
    dt = perf_counter() - t0
    ok = (proc.returncode == 0
          and "total mismatches: 0" in proc.stdout
          and dt < 300.0)
    report("acceptance 4", ok, f"6 levels x 20/side in {dt:.1f}s")
    if not ok:
        print(proc.stdout)
        print(proc.stderr)


def _member_on_terminal_stratum(product, c, d, f):
    """Chain-solved member with j read off the product; the linear solve
    for j is singular on this stratum."""
    a = F(0)
    b = fm.dp_case_b(a, c)
    e = fm.dp_case_e(a, c, d, f)
    h = fm.dp_case_h(a, c, d, f)
    g = fm.dp_case_g(a, c, d, f, h)
    j = product.coeff(2, 3)
    k = fm.dp_solve_k(a, c, d, f, h, j)
    l = fm.dp_solve_l(a, c, d, f, h, j)
    m = fm.dp_solve_m(a, c, d, f, h, j)
    return fm.double_parabola(a, b, c, d, e, f, g, h, j, k, l, m)


def test_a5_terminal_product_identities():
    rng = random.Random(11)
    bad = 0
    n = 30
    for _ in range(n):
        c, d, f = (F(rng.randint(-8, 8), rng.choice([1, 2, 3])) for _ in range(3))
        p1 = fm.dp_product_line_conic(F(0), c, d, f)
        if _member_on_terminal_stratum(p1, c, d, f) != p1:
            bad += 1
        p2 = fm.dp_product_deep(F(0), c, d)
        fd = fm.dp_case_f(F(0), c, d)
        if _member_on_terminal_stratum(p2, c, d, fd) != p2:
            bad += 1
    report("acceptance 5", bad == 0, f"2 identities x {n} tuples, {bad} mismatches")


def test_a6_divisibility_strata_are_reducible():
    rng = random.Random(23)
    bad = 0
    n = 20
    for _ in range(n):
        coeffs = [F(rng.randint(-6, 6)) for _ in range(5)]
        if not any(coeffs):
            coeffs[0] = F(1)
        a, b, c, d, e = coeffs
        poly = fm.node_squared(a, b, c, d, e, -(a + b + c + d + e))
        if len(factor_rational(poly).factors) < 2:
            bad += 1
    for _ in range(n):
        a, b, c, f = (F(rng.randint(-6, 6)) for _ in range(4))
        if not any((a, b, c, f)):
            a = F(1)
        poly = fm.circle_squared(a, b, c, b + f, c - a, f)
        if len(factor_rational(poly).factors) < 2:
            bad += 1
    report("acceptance 6", bad == 0, f"2 strata x {n} tails, {bad} irreducible")


def _pair(n):
    return {f"({n}:{B},{B}|braces:)", f"({n}:{B},{B}|braces:{B})"}


def _wrapped_pair(n):
    return {f"(1:{inner},{B}|braces:)" for inner in _pair(n)}


def _rnz(rng):
    v = F(0)
    while v == 0:
        v = F(rng.randint(-6, 6), rng.choice([1, 2]))
    return v


def test_a7_conic_cubic_contact_cascades():
    rng = random.Random(5)
    bad = 0
    per_level = 10

    for level in (1, 2, 3, 4):
        for _ in range(per_level):
            c, d, e, g = (_rnz(rng) for _ in range(4))
            a, b, f = (_rnz(rng) for _ in range(3))
            if level == 1:
                while a == -e:
                    a = _rnz(rng)
            else:
                a = -e
                if level == 2:
                    while f == e - b:
                        f = _rnz(rng)
                else:
                    if level == 3:
                        while b == e - c - g:
                            b = _rnz(rng)
                    else:
                        while g == d:
                            g = _rnz(rng)
                        b = e - c - g
                    f = e - b
            got = code_of(fm.conic_cubic_node(a, b, c, d, e, f, g))
            if got not in _wrapped_pair(level + 1):
                bad += 1

    for level in (1, 2, 3, 4, 5):
        for _ in range(per_level):
            b, c, d, e, f = (_rnz(rng) for _ in range(5))
            a, g, h, j, k = (_rnz(rng) for _ in range(5))
            if level == 1:
                while a == d:
                    a = _rnz(rng)
            else:
                a = d
                if level == 2:
                    while g == d * e - d * b:
                        g = _rnz(rng)
                else:
                    g = d * e - d * b
                    if level == 3:
                        while h == b * e + f * d - d * c - b * b:
                            h = _rnz(rng)
                    else:
                        h = b * e + f * d - d * c - b * b
                        if level == 4:
                            while j == b * f + c * e - 2 * b * c:
                                j = _rnz(rng)
                        else:
                            j = b * f + c * e - 2 * b * c
                            while k == c * f - c * c:
                                k = _rnz(rng)
            got = code_of(fm.conic_cubic_smooth(a, b, c, d, e, f, g, h, j, k))
            if got not in _pair(level + 1):
                bad += 1

    report("acceptance 7", bad == 0,
           f"9 cascade levels x {per_level} samples, {bad} off-shape")


def _random_singular_quintic(rng):
    while True:
        terms = {}
        for i in range(6):
            for j in range(6 - i):
                if i + j < 2:
                    continue
                if rng.random() < 0.45:
                    v = rng.randint(-3, 3)
                    if v:
                        terms[(i, j)] = F(v)
        if not terms:
            continue
        f = BiPoly(terms)
        f, _ = square_free_part(f)
        if multiplicity_at_origin(f) < 2:
            continue
        return f


def test_a8_structural_invariants():
    t0 = perf_counter()
    rng = random.Random(77)

    # linear changes of coordinates never move the code
    checked = 0
    bad_pairs = 0
    while checked < 100:
        f = _random_singular_quintic(rng)
        u, v = rng.randint(-3, 3), rng.randint(-3, 3)
        s1, s2 = rng.choice([1, -1]), rng.choice([1, -1])
        mat = [[s1 * (1 + u * v), s1 * u], [s2 * v, s2]]
        g = linear_change(f, mat)
        try:
            ca = classify_point(f, (0, 0)).code
            cb = classify_point(g, (0, 0)).code
        except CurveError:
            continue
        checked += 1
        if ca != cb:
            bad_pairs += 1
    ok = bad_pairs == 0

    # every stored representative splits into exactly multiplicity branches
    bad_mult = 0
    reps = [c.representative for c in all_classes()]
    for rep in reps:
        bs = expand_to_separation(rep)
        if len(bs) != multiplicity_at_origin(rep):
            bad_mult += 1
    ok = ok and bad_mult == 0

    # complex branches pair up: non-real leaf counts are even and every
    # brace entry is a disjoint pair of siblings
    bad_conj = 0
    for _ in range(30):
        f = _random_singular_quintic(rng)
        try:
            bs = expand_to_separation(f, cap=F(9))
        except CurveError:
            continue
        if sum(1 for b in bs if not b.real_representable) % 2:
            bad_conj += 1
        tree = json.loads(diagram_json(build_diagram(bs)))["tree"]
        stack = [tree]
        while stack:
            node = stack.pop()
            braced = [ix for pair in node["braces"] for ix in pair]
            if len(braced) != len(set(braced)) or len(braced) % 2:
                bad_conj += 1
            stack.extend(node["children"])
    ok = ok and bad_conj == 0

    # pushing a jet further never lowers the residual order
    bad_res = 0
    for rep in reps[:30]:
        for b in expand_to_separation(rep):
            v0 = residual_valuation(rep, b, 0)
            v1 = residual_valuation(rep, b, 1)
            v2 = residual_valuation(rep, b, 2)
            if not (v1 > v0 or v0 == math.inf):
                bad_res += 1
            if not (v2 > v1 or v1 == math.inf):
                bad_res += 1
    ok = ok and bad_res == 0

    dt = perf_counter() - t0
    ok = ok and dt < 600.0
    report(
        "acceptance 8", ok,
        f"100 change-of-coordinate pairs ({bad_pairs} bad), "
        f"{len(reps)} reps branch-count ({bad_mult} bad), "
        f"conjugation ({bad_conj} bad), residuals ({bad_res} bad), {dt:.1f}s",
    )
