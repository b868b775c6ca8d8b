import random
from fractions import Fraction

import pytest

from wfano import convex as cx


F = Fraction


def test_polygon_basic():
    tri = cx.RationalPolygon.from_points([(0, 0), (1, 0), (0, F(7, 2))])
    assert tri.area() == F(7, 4)
    assert tri.centroid() == (F(1, 3), F(7, 6))

    sq = cx.RationalPolygon.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert sq.centroid() == (F(1, 2), F(1, 2))

    with pytest.raises(ValueError):
        cx.RationalPolygon(((0, 0), (1, 0), (2, 0)))  # collinear
    with pytest.raises(ValueError):
        cx.RationalPolygon(((0, 0), (0, 1), (1, 0)))  # clockwise


def test_sliced_body_validation():
    body = cx.SlicedBody((0, 1), ((F(-1), F(1)),))
    assert body.area() == F(1, 2)
    assert body.centroid() == (F(1, 3), F(1, 3))
    with pytest.raises(ValueError):
        cx.SlicedBody((0, 1, 2), ((F(0), F(1)), (F(1), F(0))))  # convex kink
    with pytest.raises(ValueError):
        cx.SlicedBody((0, 1, 2), ((F(0), F(1)), (F(0), F(2))))  # jump


def test_gravity_input_validation():
    with pytest.raises(ValueError):
        cx.GravityInput(c0=2, c1=1, c2=1, V=10)  # c2 < c0
    with pytest.raises(ValueError):
        cx.GravityInput(c0=0, c1=1, c2=2, V=F(1, 2))  # V below the slice area


def test_gravity_bounds_degenerate_trapezoid():
    # V equal to the trapezoid area: the extremal set is the trapezoid
    gin = cx.GravityInput(c0=1, c1=2, c2=3, V=4)
    gb = cx.gravity_bounds(gin)
    assert set(gb.extremal.vertices) == {(0, 0), (2, 0), (2, 3), (0, 1)}
    c = gb.extremal.centroid()
    assert c[0] == gb.b1_max and c[1] == gb.b2_max


def test_gravity_bounds_extremal_attains_both():
    rng = random.Random(314)
    for _ in range(200):
        c0 = F(rng.randint(0, 4), rng.randint(1, 3))
        c2 = c0 + F(rng.randint(1, 5), rng.randint(1, 3))
        c1 = F(rng.randint(1, 5), rng.randint(1, 3))
        vmin = c1 * (c0 + c2) / 2
        v = vmin + F(rng.randint(0, 9), rng.randint(1, 3))
        gb = cx.gravity_bounds(cx.GravityInput(c0=c0, c1=c1, c2=c2, V=v))
        assert gb.extremal.area() == v
        c = gb.extremal.centroid()
        assert c == (gb.b1_max, gb.b2_max)


def _random_body_with_slice(rng: random.Random, gin: cx.GravityInput):
    """A random convex polygon whose part left of c1 is exactly the
    prescribed trapezoid.  The area is whatever it comes out to be."""
    c0, c1, c2 = gin.c0, gin.c1, gin.c2
    left_slope = (c2 - c0) / c1
    upper = [(F(0), c0), (c1, c2)]
    lower = [(F(0), F(0)), (c1, F(0))]
    x_top, y_top = c1, c2
    slope = left_slope
    for _ in range(rng.randint(0, 3)):
        dx = F(rng.randint(1, 4), rng.randint(1, 3))
        slope = slope - F(rng.randint(1, 6), rng.randint(1, 3))
        x_top, y_top = x_top + dx, y_top + slope * dx
        if y_top <= 0:
            x_top, y_top = upper[-1]
            break
        upper.append((x_top, y_top))
    x_bot, y_bot = c1, F(0)
    bslope = F(0)
    for _ in range(rng.randint(0, 2)):
        dx = F(rng.randint(1, 3), rng.randint(1, 3))
        if x_bot + dx >= x_top:
            break
        bslope = bslope + F(rng.randint(0, 4), rng.randint(1, 3))
        x_bot, y_bot = x_bot + dx, y_bot + bslope * dx
        lower.append((x_bot, y_bot))
    # close with a vertical edge at min(x_top, ...) keeping convexity: clip
    # the lower chain so it stays below the upper chain
    def upper_at(x):
        for (xa, ya), (xb, yb) in zip(upper, upper[1:]):
            if xa <= x <= xb:
                return ya + (yb - ya) * (x - xa) / (xb - xa)
        return None

    while len(lower) > 2 and (upper_at(lower[-1][0]) is None
                              or lower[-1][1] >= upper_at(lower[-1][0])):
        lower.pop()
    end_upper = upper[-1]
    end_lower = lower[-1]
    if end_lower[0] < end_upper[0]:
        ylim = upper_at(end_lower[0])
        pts = upper + [end_lower] + lower[1:]
        if ylim is None or end_lower[1] >= ylim:
            return None
    pts = [p for p in lower] + ([end_upper] if end_upper[0] > end_lower[0] else []) \
        + [p for p in reversed(upper)]
    try:
        return cx.RationalPolygon.from_points(pts)
    except ValueError:
        return None


def test_random_bodies_respect_gravity_bounds():
    rng = random.Random(2024)
    checked = 0
    while checked < 400:
        c0 = F(rng.randint(0, 3), rng.randint(1, 2))
        c2 = c0 + F(rng.randint(1, 4), rng.randint(1, 2))
        c1 = F(rng.randint(1, 3), rng.randint(1, 2))
        gin0 = cx.GravityInput(c0=c0, c1=c1, c2=c2,
                               V=c1 * (c0 + c2) / 2)
        poly = _random_body_with_slice(rng, gin0)
        if poly is None:
            continue
        v = poly.area()
        if v < c1 * (c0 + c2) / 2:
            continue
        gin = cx.GravityInput(c0=c0, c1=c1, c2=c2, V=v)
        gb = cx.gravity_bounds(gin)
        b1, b2 = poly.centroid()
        assert b1 <= gb.b1_max
        assert b2 <= gb.b2_max
        checked += 1


def test_delta_lower_gravity_examples():
    # vertex of P(1,1,a): eps = 1/a, L2 = 1/a, A = 2/a, no boundary
    for a in range(1, 8):
        data = cx.SurfaceLocalData(A=F(2, a), d_list=(), eps=F(1, a), L2=F(1, a))
        res = cx.delta_lower_gravity(data)
        assert res.bound == 3
        assert res.term_point == 3
    # vertex of P(1,a,a+1)
    for a in range(1, 8):
        data = cx.SurfaceLocalData(A=F(2, a), d_list=(),
                                   eps=F(1, a * (a + 1)), L2=F(1, a * (a + 1)))
        res = cx.delta_lower_gravity(data)
        assert res.bound == 3
        assert res.s_upper == F(a + 2, 3 * a * (a + 1))
        assert res.t_value == F(1, a)


def test_delta_lower_gravity_with_boundary():
    data = cx.SurfaceLocalData(A=F(1), d_list=(F(1, 2),), eps=F(1, 3), L2=F(1, 2))
    res = cx.delta_lower_gravity(data)
    term1 = 3 * F(1, 3) * F(3, 2) / (F(1, 9) * F(3, 2) + F(1, 2))
    term2 = 3 * F(1, 3) * F(1, 2) / F(1, 2)
    assert res.term_flag_curve == term1
    assert res.term_point == term2
    assert res.bound == min(term1, term2)


def test_seshadri_vertex_lower():
    assert cx.seshadri_vertex_lower(2, 1) == F(5, 6)
    assert cx.seshadri_vertex_lower(3, 2) == F(10, 21)


def test_delta_surface_bounds():
    first, second = cx.delta_surface_bounds(2, 1, 5)
    assert first.applicable and first.value == 1
    assert not second.applicable

    first, second = cx.delta_surface_bounds(2, 1, 9)
    assert second.applicable and second.value == 1
    assert first.applicable and first.value == F(15, 27)

    # second bound inapplicable when d < (ma+1)^2
    _, second = cx.delta_surface_bounds(3, 2, 13)
    assert not second.applicable


def test_zariski_decompose_examples():
    # three-curve model: E, l, C with the stated intersections
    for (a, b, k) in [(2, 1, 2), (3, 2, 3), (1, 2, 2)]:
        M = [[-a * b, 1, a - 1], [1, -k, k], [a - 1, k, 0]]
        for x in (F(1, 4), F(1, 2), F(3, 4), F(1)):
            cls = [F(1, b), 1 - x, F(1)]
            dec = cx.zariski_decompose(M, cls)
            assert dec.negative == (x / (a * b), 0, 0)

    # nef class: zero negative part
    M = [[-2, 1], [1, 0]]
    dec = cx.zariski_decompose(M, [F(1, 2), F(1)])
    assert dec.negative == (0, 0)

    # vertex-slice model: curves (E, V) for degree ak+1 surfaces
    for (a, k) in [(2, 2), (3, 1), (2, 3)]:
        M = [[-a, 1 + a * k], [1 + a * k, -k * (1 + a * k)]]
        for x in (F(1, a) + F(1, 7), F(1, a) + F(1, 2), Fraction(a * k + 1, a)):
            cls = [k + F(1, a) - x, F(1)]
            dec = cx.zariski_decompose(M, cls)
            assert dec.negative == (0, (x - F(1, a)) / k)


def test_zariski_postconditions_random():
    rng = random.Random(8)
    checked = 0
    while checked < 150:
        n = rng.randint(1, 4)
        M = [[F(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = F(rng.randint(-4, 3))
                M[i][j] = v
                M[j][i] = v
        cls = [F(rng.randint(0, 4), rng.randint(1, 2)) for _ in range(n)]
        try:
            dec = cx.zariski_decompose(M, cls)
        except cx.NotPseudoEffectiveError:
            continue
        # nef against listed curves, orthogonality, nonnegative coefficients
        for j in range(n):
            assert sum(dec.positive[i] * M[i][j] for i in range(n)) >= 0
        assert all(c >= 0 for c in dec.negative)
        pn = sum(dec.positive[i] * M[i][j] * dec.negative[j]
                 for i in range(n) for j in range(n))
        assert pn == 0
        checked += 1


def test_okounkov_hirzebruch():
    for a in range(1, 11):
        case = cx.okounkov_body_surface("hirzebruch", a=a)
        assert case.L2 == F(1, a)
        assert case.eps == F(1, a)
        assert case.t_max == F(1, a)
        assert case.s_value == F(2, 3 * a)
        assert case.area == F(1, 2 * a)


def test_okounkov_hirzebruch2():
    for a in range(1, 11):
        case = cx.okounkov_body_surface("hirzebruch2", a=a)
        assert case.L2 == F(1, a * (a + 1))
        assert case.eps == F(1, a * (a + 1))
        assert case.t_max == F(1, a)
        assert case.s_value == F(a + 2, 3 * a * (a + 1))


def test_okounkov_perhaps_useful():
    # general flag curve: the triangle with vertices (0,0), (1,0), (0,d/b)
    case = cx.okounkov_body_surface("perhaps-useful", a=1, b=2, k=3)
    d = 2 * 3 + 1
    assert case.body.breakpoints == (0, 1)
    assert case.body.upper(F(0)) == F(d, 2)
    assert case.s_value == F(1, 3)
    assert case.second_coordinate == F(d, 3 * 2)
    assert case.area == F(d, 2 * 2)

    # fiber line on the surface: slice over [0,1] is 1/b + (k - 1/(ab)) x
    case2 = cx.okounkov_body_surface("perhaps-useful", a=2, b=1, k=2,
                                     flag_in_surface=True)
    dd = 1 * 2 + 2
    assert case2.body.upper(F(0)) == F(1, 1)
    slope = case2.body.pieces[0][0]
    assert slope == 2 - F(1, 2)
    assert case2.area == F(dd, 2)

    with pytest.raises(ValueError):
        cx.okounkov_body_surface("unknown-case", a=1)


def test_okounkov_area_is_half_selfintersection():
    for a in range(1, 6):
        for name in ("hirzebruch", "hirzebruch2"):
            case = cx.okounkov_body_surface(name, a=a)
            assert 2 * case.area == case.L2
    for (a, b, k) in [(1, 1, 2), (2, 3, 2), (3, 2, 4)]:
        for flag in (False, True):
            case = cx.okounkov_body_surface("perhaps-useful", a=a, b=b, k=k,
                                            flag_in_surface=flag)
            assert 2 * case.area == F(b * k + a, b)


def test_sqrt_fraction():
    assert cx.sqrt_fraction(F(9, 4)) == F(3, 2)
    assert cx.sqrt_fraction(F(2)) is None
    assert cx.sqrt_fraction(F(-1)) is None
