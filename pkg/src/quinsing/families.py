"""Parameterized curve families with a prescribed tangent cone.

Each deep family fixes a quasihomogeneous part and leaves every monomial
above it free.  Walking a chain of case splits (freeze one coefficient,
test the next discriminant) sweeps out all the ways the coincident
branches can separate.  The discriminant-like quantities are kept in
expanded integer form; where a square root of one of them enters a jet,
its sign (not just its vanishing) decides whether the split pair is real
or complex conjugate.

Two of the terminal cases collapse to explicit products of a line with a
doubled conic; those products are provided so the collapse can be checked
exactly.
"""

from fractions import Fraction as F

from .curve import BiPoly

X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


def _tail(pairs):
    acc = BiPoly.zero()
    for i, jdeg, coef in pairs:
        acc = acc + BiPoly.monomial(i, jdeg, F(coef))
    return acc


def _linear_root(fun):
    """Root of an affine map, found from two evaluations.

    Every "solved" coefficient below enters its discriminant linearly, so
    this avoids transcribing the rearranged formulas by hand.
    """
    v0 = fun(F(0))
    slope = fun(F(1)) - v0
    if slope == 0:
        raise ValueError("quantity is not linear in the unknown")
    return -v0 / slope


# ---------------------------------------------------------------------------
# tangent cone y^2, deep tangency: (y + x^2)^2 plus a free quintic tail


def double_parabola(a, b, c, d, e, f, g, h, j, k, l, m):
    """(y+x^2)^2 + ax^5 + bx^3y + cxy^2 + dx^4y + ex^2y^2 + fy^3
    + gx^3y^2 + hxy^3 + jx^2y^3 + ky^4 + lxy^4 + my^5."""
    return (Y + X ** 2) ** 2 + _tail([
        (5, 0, a), (3, 1, b), (1, 2, c), (4, 1, d), (2, 2, e), (0, 3, f),
        (3, 2, g), (1, 3, h), (2, 3, j), (0, 4, k), (1, 4, l), (0, 5, m),
    ])


def dp_gate0(a, b, c):
    # nonzero: the two jets separate at 5/2 and the chain stops
    return F(b) - F(a) - F(c)


def dp_case_b(a, c):
    return F(a) + F(c)


def dp_split3(a, c, d, e, f):
    """Discriminant of the quadratic giving the x^3 jet coefficients.

    Positive: two real jets diverging at exponent 3.  Negative: a
    conjugate pair.  Zero: the jets still agree at x^3, go deeper.
    """
    a, c, d, e, f = map(F, (a, c, d, e, f))
    return a ** 2 - 2 * a * c + c ** 2 - 4 * e + 4 * f + 4 * d


def dp_case_e(a, c, d, f):
    a, c, d, f = map(F, (a, c, d, f))
    return (a ** 2 - 2 * a * c + c ** 2 + 4 * f + 4 * d) / 4


def dp_case_g(a, c, d, f, h):
    a, c, d, f, h = map(F, (a, c, d, f, h))
    return (a ** 2 * c / 2 - a * c ** 2 / 4 - a ** 3 / 4 + f * a / 2
            - f * c / 2 - d * a / 2 + d * c / 2 + h)


def dp_disc1(a, c, d, f, h, j, k):
    a, c, d, f, h, j, k = map(F, (a, c, d, f, h, j, k))
    return 256*f**2+256*f*c**2-256*f*a**2-512*d*f+256*c**2*a**2+256*a**4+512*d*a**2+256*d**2-512*d*c*a+1024*j-512*h*c+512*h*a-512*a**3*c-1024*k


def dp_disc2(a, c, d, f, h, j, l):
    a, c, d, f, h, j, l = map(F, (a, c, d, f, h, j, l))
    return -4*a*d*f+8*l+4*d*c**2*a+4*f*c*a**2-4*d*c*a**2-4*j*c-4*h*c*a-f*c**3+2*c*f**2-2*c**3*a**2-2*c*d**2+2*a*f**2+2*c**2*a**3+2*a*d**2+2*h*c**2-4*h*f+4*h*d


def dp_disc3(a, c, d, f, h, j, m):
    a, c, d, f, h, j, m = map(F, (a, c, d, f, h, j, m))
    return 20480*c**2*a**2*d+16384*m-4096*f*c**3*a-8192*f*c**2*a**2+8192*h*c**2*a+4096*f*c**2*d-8192*h*c*d-16384*d**2*c*a-8192*j*c*a+4096*a**2*d**2+4096*c**2*a**4+4096*h**2+4096*a**2*f**2+8192*a*d*h-8192*c*a**2*h-8192*h*a*f+4096*d**3-1024*f**2*c**2+4096*f**2*d+1024*d**2*c**2-8192*d**2*f-8192*j*f+8192*j*d+1024*c**4*a**2-8192*c**3*a**3+16384*f*c*a*d-2048*d*c**3*a-8192*a**3*d*c-8192*a**2*d*f+8192*c*a**3*f


def dp_disc4(a, c, d, f, h, j):
    # quasihomogeneous of weight 7 when the letter of x^i y^j carries
    # weight i + 2j - 4; that grading pins every exponent below
    a, c, d, f, h, j = map(F, (a, c, d, f, h, j))
    return 72*c**2*a**3*d+8*a*f*c**2*d-56*a*h*c*d+24*a*h*c*f+8*a**3*d**2+8*c**2*a**5+8*a*h**2+8*a**3*f**2+14*c**4*a**3-28*c**3*a**4-a**2*c**5-12*c*h**2-3*f**2*c**3-d**2*c**3+72*f*c*a**2*d-8*f*c**3*a**2-40*f*c**2*a**3+40*h*c**2*a**2-60*d**2*c*a**2-12*f**2*c*a**2+16*a**2*d*h-16*c*a**3*h-16*h*a**2*f-36*d*c**3*a**2-16*a**4*d*c-16*a**3*d*f+16*c*a**4*f-4*f*c**3*d+8*h*c**2*d+12*h*c**2*f-14*a*f**2*c**2+4*a*f*c**4+30*a*d**2*c**2-8*a*h*c**3+2*a*d*c**4-32*a*d**2*f+8*d*c*f**2+16*d*a*f**2-16*d*h*f-8*c*d**3+16*a*d**3+16*h*d**2+16*j*h-16*j*a*f+16*j*a*d-16*j*c*a**2-8*j*f*c-8*j*d*c+8*j*a*c**2


def dp_disc5(a, c, d, f, h):
    a, c, d, f, h = map(F, (a, c, d, f, h))
    return 1024*(4*a**2-28*c*a+c**2+24*d-8*f)*(-2*h+2*a*f-2*a*d+2*c*a**2+f*c+d*c-a*c**2)**2


def dp_disc6(a, c, d, h):
    # equals (alpha - 16h)^3 for the weight-3 form
    # alpha = 8a^3 + c^3 + 32ad + 32cd - 36ca^2 - 34ac^2, so it vanishes
    # exactly where h sits at its terminal value alpha/16
    a, c, d, h = map(F, (a, c, d, h))
    return 512*a**9+12288*c**3*a**6-106176*c**4*a**5-122592*c**5*a**4-31936*c**6*a**3+6144*h**2*a**3+768*h**2*c**3+32768*d**3*a**3+32768*d**3*c**3-48*c**6*h+3360*c**7*a**2+96*c**7*d-102*c**8*a+24576*a**5*d**2+24576*c**2*a**7+3072*d**2*c**5+340608*c**4*a**3*d+16896*c**2*a**5*d-301056*c**2*a**3*d**2-316416*c**3*a**2*d**2+97536*c**5*a**2*d+24576*h**2*a*d-27648*h**2*c*a**2+24576*h**2*d*c-26112*h**2*a*c**2+98304*d**3*c*a**2+98304*d**3*a*c**2-36096*h*c**2*a**4-52032*h*c**4*a**2+3264*h*c**5*a-49152*h*c**2*d**2-3072*h*c**4*d-61440*d**2*c*a**4+27648*c*a**5*h-24576*a**4*d*h-49152*a**2*d**2*h-6432*c**6*a*d-49152*a**6*d*c+308736*c**3*a**4*d-4096*h**3+c**9+215040*c**2*a**2*d*h-98304*d**2*c**4*a+101376*h*c**3*a*d+86016*h*c*d*a**3-98304*h*c*d**2*a-118272*c**3*a**3*h+6144*d*a**7-3072*a**6*h-6912*a**8*c


def dp_solve_k(a, c, d, f, h, j):
    return _linear_root(lambda k: dp_disc1(a, c, d, f, h, j, k))


def dp_solve_l(a, c, d, f, h, j):
    return _linear_root(lambda l: dp_disc2(a, c, d, f, h, j, l))


def dp_solve_m(a, c, d, f, h, j):
    return _linear_root(lambda m: dp_disc3(a, c, d, f, h, j, m))


def dp_solve_j(a, c, d, f, h):
    # fails (by design) when h sits at dp_case_h: the j-coefficient of
    # dp_disc4 is -8 times the squared factor of dp_disc5
    return _linear_root(lambda j: dp_disc4(a, c, d, f, h, j))


def dp_case_h(a, c, d, f):
    a, c, d, f = map(F, (a, c, d, f))
    return (2 * a * f - 2 * a * d + 2 * c * a ** 2 + f * c + d * c
            - a * c ** 2) / 2


def dp_case_f(a, c, d):
    a, c, d = map(F, (a, c, d))
    return (4 * a ** 2 - 28 * a * c + c ** 2 + 24 * d) / 8


def dp_chain(a, c, d, f, h):
    """Freeze b, e, g, then solve j, k, l, m in order.

    Returns the full 12-letter coefficient tuple of the deepest generic
    stratum reached before h or f is frozen.
    """
    b = dp_case_b(a, c)
    e = dp_case_e(a, c, d, f)
    g = dp_case_g(a, c, d, f, h)
    j = dp_solve_j(a, c, d, f, h)
    k = dp_solve_k(a, c, d, f, h, j)
    l = dp_solve_l(a, c, d, f, h, j)
    m = dp_solve_m(a, c, d, f, h, j)
    return (F(a), b, F(c), F(d), e, F(f), g, F(h), j, k, l, m)


def dp_product_line_conic(a, c, d, f):
    """(1/4)(dy+1-acy+ax)(acy^2+2x^2+cxy+2y+fy^2-dy^2)^2."""
    a, c, d, f = map(F, (a, c, d, f))
    lin = BiPoly.const(1) + X.scale(a) + Y.scale(d - a * c)
    con = ((X * X).scale(2) + Y.scale(2) + (X * Y).scale(c)
           + (Y * Y).scale(a * c + f - d))
    return (lin * con * con).scale(F(1, 4))


def dp_product_deep(a, c, d):
    """(1/256)(dy+1-acy+ax)(16x^2+16y+4a^2y^2+16dy^2+8cxy-20acy^2+c^2y^2)^2."""
    a, c, d = map(F, (a, c, d))
    lin = BiPoly.const(1) + X.scale(a) + Y.scale(d - a * c)
    con = ((X * X).scale(16) + Y.scale(16) + (X * Y).scale(8 * c)
           + (Y * Y).scale(4 * a ** 2 + 16 * d - 20 * a * c + c ** 2))
    return (lin * con * con).scale(F(1, 256))


# ---------------------------------------------------------------------------
# tangent cone y^2(y-x): a transverse line plus a doubled smooth branch


def line_plus_double(a, b, c, d, e, f, g, h):
    """y^2(y-x) - x^5 + 2x^3y + ax^4y + bx^2y^2 + cx^3y^2 + dxy^3
    + ex^2y^3 + fy^4 + gxy^4 + hy^5."""
    return (Y * Y * (Y - X) - X ** 5 + BiPoly.monomial(3, 1, F(2))
            + _tail([
                (4, 1, a), (2, 2, b), (3, 2, c), (1, 3, d),
                (2, 3, e), (0, 4, f), (1, 4, g), (0, 5, h),
            ]))


def lpd_gate0(a, b):
    return F(a) + F(b) + 1


def lpd_case_b(a):
    return -F(a) - 1


def lpd_split3(a, c, d):
    """Sign splits the doubled branch at exponent 3 (real pair vs
    conjugate pair); zero sends the chain deeper."""
    a, c, d = map(F, (a, c, d))
    return 1 - 2 * a + a ** 2 + 4 * d + 4 * c


def lpd_case_d(a, c):
    a, c = F(a), F(c)
    return -(1 - 2 * a + a ** 2 + 4 * c) / 4


def lpd_gate_72(a, c, e, f):
    # nonzero: separation at 7/2
    a, c, e, f = map(F, (a, c, e, f))
    return (F(1, 8) - a / 8 - a ** 2 / 8 - c / 2 + a * c / 2
            + a ** 3 / 8 + e + f)


def lpd_case_f(a, c, e):
    a, c, e = map(F, (a, c, e))
    return -(F(1, 8) - a / 8 - a ** 2 / 8 - c / 2 + a * c / 2
             + a ** 3 / 8 + e)


def lpd_disc1(a, c, e, g):
    a, c, e, g = map(F, (a, c, e, g))
    return 256*c**2-128*c+384*c*a**2-256*c*a+80-32*a**2-64*a+80*a**4-64*a**3-512*e+1024*g+512*a*e


def lpd_disc2(a, c, e, h):
    a, c, e, h = map(F, (a, c, e, h))
    return (F(3)/F(32)-(7*a)/F(64)-(3*e)/F(8)-(c)/F(8)+h-(a**3)/F(32)
            -(c*a)/F(8)+(c*a**2)/F(8)+(e*a)/F(4)+(a**4)/F(32)+(a**3*c)/F(8)
            +(a**2*e)/F(8)+(c**2*a)/F(4)+(c*e)/F(2)+(a**5)/F(64))


def lpd_solve_g(a, c, e):
    return _linear_root(lambda g: lpd_disc1(a, c, e, g))


def lpd_solve_h(a, c, e):
    return _linear_root(lambda h: lpd_disc2(a, c, e, h))


# ---------------------------------------------------------------------------
# doubled conics with a free quintic tail; reducible exactly when the
# conic divides the tail


def node_squared(a, b, c, d, e, f):
    """(y^2-xy)^2 + ax^5 + bx^4y + cx^3y^2 + dx^2y^3 + exy^4 + fy^5."""
    return (Y * Y - X * Y) ** 2 + _tail([
        (5, 0, a), (4, 1, b), (3, 2, c), (2, 3, d), (1, 4, e), (0, 5, f),
    ])


def circle_squared(a, b, c, d, e, f):
    """(x^2+y^2)^2 + ax^5 + bx^4y + cx^3y^2 + dx^2y^3 + exy^4 + fy^5."""
    return (X * X + Y * Y) ** 2 + _tail([
        (5, 0, a), (4, 1, b), (3, 2, c), (2, 3, d), (1, 4, e), (0, 5, f),
    ])


# ---------------------------------------------------------------------------
# conic times cubic with controlled mutual tangency


def conic_cubic_node(a, b, c, d, e, f, g):
    """(y(y-x)+ax^3+bx^2y+cxy^2+dy^3)(y+ex^2+fxy+gy^2).

    A nodal cubic and a smooth conic meeting at the node; the cases
    a = -e, f = e - b, ... push the conic against one nodal branch.
    """
    cubic = Y * (Y - X) + _tail([(3, 0, a), (2, 1, b), (1, 2, c), (0, 3, d)])
    conic = Y + _tail([(2, 0, e), (1, 1, f), (0, 2, g)])
    return cubic * conic


def conic_cubic_smooth(a, b, c, d, e, f, g, h, j, k):
    """(y+ax^2+bxy+cy^2)(y+dx^2+exy+fy^2+gx^3+hx^2y+jxy^2+ky^3).

    A conic and a cubic sharing a smooth point with common tangent y=0;
    successive cases raise the contact order one step at a time.
    """
    conic = Y + _tail([(2, 0, a), (1, 1, b), (0, 2, c)])
    cubic = Y + _tail([
        (2, 0, d), (1, 1, e), (0, 2, f),
        (3, 0, g), (2, 1, h), (1, 2, j), (0, 3, k),
    ])
    return conic * cubic
