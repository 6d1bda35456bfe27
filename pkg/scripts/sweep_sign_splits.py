"""Randomized sweep of the six sign-governed branch splits.

Each deep family carries a chain of discriminant-like quantities; when
one of them is the first to be nonzero, its sign decides whether the
coincident branch pair separates into two real branches or a complex
conjugate pair.  This driver samples random rational parameter tuples on
each chain stratum, runs the full expansion pipeline, and checks that
the diagram code lands on the side the sign predicts.

Levels swept (family, deciding quantity, split exponent):
  (y+x^2)^2 tail    dp_split3   3
  (y+x^2)^2 tail    dp_disc1    4
  (y+x^2)^2 tail    dp_disc3    5    (a = 0 stratum)
  (y+x^2)^2 tail    dp_disc5    6    (a = 0 stratum)
  y^2(y-x) tail     lpd_split3  3
  y^2(y-x) tail     lpd_disc1   4

The two a = 0 restrictions are deliberate: the closed-form solved values
for the letters k, l, m are exact only there, and off that stratum the
stratum itself is different (the pair separates at 9/2 already).
"""

import argparse
import random
import sys
import time
from fractions import Fraction as F

from quinsing import families as fm
from quinsing.diagram import build_diagram, canonical_code
from quinsing.puiseux import expand_to_separation


def pipeline_code(poly):
    return canonical_code(build_diagram(expand_to_separation(poly, cap=F(9))))


def rnd(rng, lo=-4, hi=4):
    return F(rng.randint(lo * 2, hi * 2), rng.choice([1, 2]))


def sample_dp_split3(rng):
    a, c, d, e, f = (rnd(rng) for _ in range(5))
    tail = [rnd(rng) for _ in range(6)]
    s = fm.dp_split3(a, c, d, e, f)
    poly = fm.double_parabola(a, fm.dp_case_b(a, c), c, d, e, f, *tail)
    return s, poly


def sample_dp_disc1(rng):
    a, c, d, f, h, j, k = (rnd(rng) for _ in range(7))
    l, m = rnd(rng), rnd(rng)
    b = fm.dp_case_b(a, c)
    e = fm.dp_case_e(a, c, d, f)
    g = fm.dp_case_g(a, c, d, f, h)
    s = fm.dp_disc1(a, c, d, f, h, j, k)
    return s, fm.double_parabola(a, b, c, d, e, f, g, h, j, k, l, m)


def sample_dp_disc3(rng):
    a = F(0)
    c, d, f, h, j, m = (rnd(rng) for _ in range(6))
    b = fm.dp_case_b(a, c)
    e = fm.dp_case_e(a, c, d, f)
    g = fm.dp_case_g(a, c, d, f, h)
    k = fm.dp_solve_k(a, c, d, f, h, j)
    l = fm.dp_solve_l(a, c, d, f, h, j)
    s = fm.dp_disc3(a, c, d, f, h, j, m)
    return s, fm.double_parabola(a, b, c, d, e, f, g, h, j, k, l, m)


def sample_dp_disc5(rng):
    a = F(0)
    c, d, f, h = (rnd(rng) for _ in range(4))
    b = fm.dp_case_b(a, c)
    e = fm.dp_case_e(a, c, d, f)
    g = fm.dp_case_g(a, c, d, f, h)
    try:
        j = fm.dp_solve_j(a, c, d, f, h)
    except ValueError:
        # h hit dp_case_h, where solving for j is singular
        return None, None
    k = fm.dp_solve_k(a, c, d, f, h, j)
    l = fm.dp_solve_l(a, c, d, f, h, j)
    m = fm.dp_solve_m(a, c, d, f, h, j)
    s = fm.dp_disc5(a, c, d, f, h)
    return s, fm.double_parabola(a, b, c, d, e, f, g, h, j, k, l, m)


def sample_lpd_split3(rng):
    a, c, d = (rnd(rng) for _ in range(3))
    tail = [rnd(rng) for _ in range(4)]
    s = fm.lpd_split3(a, c, d)
    return s, fm.line_plus_double(a, fm.lpd_case_b(a), c, d, *tail)


def sample_lpd_disc1(rng):
    a, c, e, g = (rnd(rng) for _ in range(4))
    h = rnd(rng)
    b = fm.lpd_case_b(a)
    d = fm.lpd_case_d(a, c)
    f = fm.lpd_case_f(a, c, e)
    s = fm.lpd_disc1(a, c, e, g)
    return s, fm.line_plus_double(a, b, c, d, e, f, g, h)


def level_codes(family, n):
    inner_pos = f"({n}:•,•|braces:)"
    inner_neg = f"({n}:•,•|braces:•)"
    if family == "lpd":
        return (f"(1:{inner_pos},•|braces:)",
                f"(1:{inner_neg},•|braces:)")
    return inner_pos, inner_neg


LEVELS = [
    ("dp", 3, sample_dp_split3),
    ("dp", 4, sample_dp_disc1),
    ("dp", 5, sample_dp_disc3),
    ("dp", 6, sample_dp_disc5),
    ("lpd", 3, sample_lpd_split3),
    ("lpd", 4, sample_lpd_disc1),
]


def sweep_level(family, n, sampler, per_side, rng):
    """Returns (#checked positive, #checked negative, #mismatches)."""
    want_pos, want_neg = level_codes(family, n)
    counts = {1: 0, -1: 0}
    bad = 0
    while min(counts.values()) < per_side:
        s, poly = sampler(rng)
        if s is None or s == 0:
            continue
        side = 1 if s > 0 else -1
        if counts[side] >= per_side:
            continue
        got = pipeline_code(poly)
        expect = want_pos if side > 0 else want_neg
        if got != expect:
            bad += 1
            print(f"    MISMATCH sign {'+' if side > 0 else '-'}: "
                  f"got {got}, expected {expect}")
        counts[side] += 1
    return counts[1], counts[-1], bad


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--per-side", type=int, default=20,
                    help="samples per sign per level")
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    total_bad = 0
    t0 = time.time()
    for family, n, sampler in LEVELS:
        npos, nneg, bad = sweep_level(family, n, sampler, args.per_side, rng)
        total_bad += bad
        tag = "ok" if bad == 0 else f"{bad} MISMATCHES"
        print(f"{family} split at {n}: +{npos}/-{nneg} samples, {tag}")
    dt = time.time() - t0
    print(f"total mismatches: {total_bad}  ({dt:.1f}s)")
    return 1 if total_bad else 0


if __name__ == "__main__":
    sys.exit(main())
