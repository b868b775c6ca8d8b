"""Exact 2D convex computations backing the surface stability bounds.

Contents: rational convex polygons with exact area/centroid, the barycenter
bounds for convex sets with a prescribed trapezoidal left slice (with the
extremal quadrilateral), the induced lower bounds for local stability
thresholds on surfaces, an exact iterative Zariski decomposition for small
curve models, and the Okounkov bodies of the three surface families used by
the certificate engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

Point = tuple[Fraction, Fraction]


def _frac_point(p: Sequence) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def sqrt_fraction(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class RationalPolygon:
    """Convex polygon with exact rational vertices in counterclockwise order.

    The constructor enforces convexity, positive area, and no three
    consecutive collinear vertices; use :meth:`from_points` to build from an
    arbitrary point cloud via an exact convex hull.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(_frac_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise ValueError("a polygon needs at least three vertices")
        for i in range(n):
            c = _cross(verts[i], verts[(i + 1) % n], verts[(i + 2) % n])
            if c <= 0:
                raise ValueError("vertices must be strictly convex counterclockwise")
        if self.area() <= 0:
            raise ValueError("polygon must have positive area")

    @classmethod
    def from_points(cls, points: Sequence[Sequence]) -> "RationalPolygon":
        pts = sorted(set(_frac_point(p) for p in points))
        if len(pts) < 3:
            raise ValueError("need at least three distinct points")
        lower: list[Point] = []
        for p in pts:
            while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
                lower.pop()
            lower.append(p)
        upper: list[Point] = []
        for p in reversed(pts):
            while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
                upper.pop()
            upper.append(p)
        hull = lower[:-1] + upper[:-1]
        return cls(tuple(hull))

    def area(self) -> Fraction:
        v = self.vertices
        tot = Fraction(0)
        for i in range(len(v)):
            x0, y0 = v[i]
            x1, y1 = v[(i + 1) % len(v)]
            tot += x0 * y1 - x1 * y0
        return tot / 2

    def centroid(self) -> Point:
        v = self.vertices
        ax = Fraction(0)
        ay = Fraction(0)
        tot = Fraction(0)
        for i in range(len(v)):
            x0, y0 = v[i]
            x1, y1 = v[(i + 1) % len(v)]
            w = x0 * y1 - x1 * y0
            tot += w
            ax += (x0 + x1) * w
            ay += (y0 + y1) * w
        a = tot / 2
        return (ax / (6 * a), ay / (6 * a))

    def to_json_obj(self) -> list[list[str]]:
        return [[str(x), str(y)] for x, y in self.vertices]


@dataclass(frozen=True)
class SlicedBody:
    """A 2D body {0 <= x <= t_q, 0 <= y <= g(x)} with piecewise-affine g.

    ``breakpoints`` are 0 = t_0 < ... < t_q and ``pieces`` holds one
    (slope, intercept) pair per interval.  g must be nonnegative,
    continuous, and concave across pieces.
    """

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        bp = tuple(Fraction(x) for x in self.breakpoints)
        pc = tuple((Fraction(m), Fraction(c)) for m, c in self.pieces)
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "pieces", pc)
        if len(bp) < 2 or len(pc) != len(bp) - 1:
            raise ValueError("need q+1 breakpoints for q pieces")
        if bp[0] != 0 or any(bp[i] >= bp[i + 1] for i in range(len(bp) - 1)):
            raise ValueError("breakpoints must increase from 0")
        for (m, c), lo, hi in zip(pc, bp, bp[1:]):
            if m * lo + c < 0 or m * hi + c < 0:
                raise ValueError("upper boundary must be nonnegative")
        for i in range(len(pc) - 1):
            m0, c0 = pc[i]
            m1, c1 = pc[i + 1]
            x = bp[i + 1]
            if m0 * x + c0 != m1 * x + c1:
                raise ValueError("upper boundary must be continuous")
            if m1 > m0:
                raise ValueError("upper boundary must be concave")

    def upper(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        if not 0 <= x <= self.breakpoints[-1]:
            raise ValueError("outside the support")
        for (m, c), lo, hi in zip(self.pieces, self.breakpoints, self.breakpoints[1:]):
            if x <= hi:
                return m * x + c
        raise AssertionError

    def area(self) -> Fraction:
        tot = Fraction(0)
        for (m, c), lo, hi in zip(self.pieces, self.breakpoints, self.breakpoints[1:]):
            tot += m * (hi**2 - lo**2) / 2 + c * (hi - lo)
        if tot <= 0:
            raise ValueError("body must have positive area")
        return tot

    def centroid(self) -> Point:
        a = self.area()
        mx = Fraction(0)
        my = Fraction(0)
        for (m, c), lo, hi in zip(self.pieces, self.breakpoints, self.breakpoints[1:]):
            # integral of x*g(x) and of g(x)^2/2
            mx += m * (hi**3 - lo**3) / 3 + c * (hi**2 - lo**2) / 2
            my += (
                m**2 * (hi**3 - lo**3) / 3
                + m * c * (hi**2 - lo**2)
                + c**2 * (hi - lo)
            ) / 2
        return (mx / a, my / a)

    def boundary_samples(self, count: int) -> list[Point]:
        t = self.breakpoints[-1]
        out = []
        for i in range(count + 1):
            x = t * i / count
            out.append((x, self.upper(x)))
        return out

    def to_json_obj(self) -> dict:
        return {
            "breakpoints": [str(x) for x in self.breakpoints],
            "pieces": [[str(m), str(c)] for m, c in self.pieces],
        }


BodyLike = Union[RationalPolygon, SlicedBody]


def barycenter(body: BodyLike) -> tuple[Point, Fraction]:
    """Exact (centroid, area) of a polygon or sliced body."""
    return body.centroid(), body.area()


@dataclass(frozen=True)
class GravityInput:
    """A convex body of area V whose part left of x = c1 is the trapezoid
    0 <= y <= ((c2 - c0)/c1) x + c0."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    V: Fraction

    def __post_init__(self):
        for name in ("c0", "c1", "c2", "V"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.c0 < 0 or self.c1 <= 0 or self.c2 <= 0 or self.V <= 0:
            raise ValueError("need c0 >= 0 and c1, c2, V > 0")
        if self.c2 < self.c0:
            raise ValueError("need c2 >= c0")
        if self.V < self.c1 * (self.c0 + self.c2) / 2:
            raise ValueError("area V smaller than the prescribed left slice")


@dataclass(frozen=True)
class GravityBounds:
    b1_max: Fraction
    b2_max: Fraction
    extremal: RationalPolygon


def gravity_bounds(gin: GravityInput) -> GravityBounds:
    """Sharp upper bounds for both barycenter coordinates.

    The extremal body attaining both bounds is the convex hull of (0,c0),
    (0,0), (c1,0) and ((2V - c0 c1)/c2, (2 c2 V - c0(2V - c0 c1))/(c1 c2)).
    """
    c0, c1, c2, v = gin.c0, gin.c1, gin.c2, gin.V
    b1 = (c0**2 * c1**2 - 4 * c0 * c1 * v + 2 * c1 * c2 * v + 4 * v**2) / (6 * c2 * v)
    b2 = (-(c0**3) * c1**2 + 4 * c0**2 * c1 * v - 4 * c0 * v**2 + 4 * c2 * v**2) / (
        6 * c1 * c2 * v
    )
    t1 = (2 * v - c0 * c1) / c2
    y1 = (2 * c2 * v - c0 * (2 * v - c0 * c1)) / (c1 * c2)
    poly = RationalPolygon.from_points([(0, c0), (0, 0), (c1, 0), (t1, y1)])
    return GravityBounds(b1_max=b1, b2_max=b2, extremal=poly)


@dataclass(frozen=True)
class SurfaceLocalData:
    """Local data of a plt blowup of a klt surface pair at a point.

    A is the log discrepancy of the exceptional curve C, d_list the
    coefficients of the induced boundary on C, eps a certified value not
    exceeding the Seshadri constant of L along C, and L2 = (L^2).
    """

    A: Fraction
    d_list: tuple[Fraction, ...]
    eps: Fraction
    L2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "d_list", tuple(Fraction(d) for d in self.d_list))
        object.__setattr__(self, "eps", Fraction(self.eps))
        object.__setattr__(self, "L2", Fraction(self.L2))
        if self.A <= 0 or self.eps <= 0 or self.L2 <= 0:
            raise ValueError("A, eps and L2 must be positive")
        if any(not 0 < d < 1 for d in self.d_list):
            raise ValueError("boundary coefficients must lie in (0,1)")

    @property
    def dC(self) -> Fraction:
        return sum(self.d_list, Fraction(0))

    @property
    def dmax(self) -> Fraction:
        return max(self.d_list) if self.d_list else Fraction(0)


@dataclass(frozen=True)
class SurfaceDeltaBound:
    bound: Fraction
    term_flag_curve: Fraction
    term_point: Fraction
    s_upper: Fraction
    t_value: Fraction


def delta_lower_gravity(data: SurfaceLocalData) -> SurfaceDeltaBound:
    """Lower bound for the local stability threshold at the centre of C.

    delta >= min( 3 eps (2 - dC) / (eps^2 (2 - dC)/A + L^2),
                  3 eps (1 - dmax) / L^2 ),
    together with the barycenter upper bound for S(L; C) and the value
    T = L^2 A / (eps (2 - dC)) recorded for the trace.
    """
    a, eps, l2 = data.A, data.eps, data.L2
    dc, dm = data.dC, data.dmax
    if dc >= 2:
        raise ValueError("boundary degree must satisfy dC < 2")
    term1 = 3 * eps * (2 - dc) / (eps**2 * (2 - dc) / a + l2)
    term2 = 3 * eps * (1 - dm) / l2
    # cross-check through the generic barycenter bounds
    gb = gravity_bounds(GravityInput(c0=Fraction(0), c1=eps,
                                     c2=eps * (2 - dc) / a, V=l2 / 2))
    if a / gb.b1_max != term1:
        raise AssertionError("flag-curve term disagrees with the barycenter bound")
    if (1 - dm) / gb.b2_max != term2:
        raise AssertionError("point term disagrees with the barycenter bound")
    return SurfaceDeltaBound(
        bound=min(term1, term2),
        term_flag_curve=term1,
        term_point=term2,
        s_upper=gb.b1_max,
        t_value=l2 * a / (eps * (2 - dc)),
    )


def seshadri_vertex_lower(a: int, m: int) -> Fraction:
    """Certified Seshadri lower bound ((m+1)a + 1)/((m a + 1) a) for the
    exceptional curve over the vertex of a degree a*k+1 hypersurface in
    P(1,1,1,a) with escape level m <= k-1."""
    if a < 1 or m < 1:
        raise ValueError("need a >= 1 and m >= 1")
    return Fraction((m + 1) * a + 1, (m * a + 1) * a)


@dataclass(frozen=True)
class ApplicableBound:
    value: Fraction
    applicable: bool


def delta_surface_bounds(a: int, m: int, d: int) -> tuple[ApplicableBound, ApplicableBound]:
    """The two vertex bounds for surfaces S of degree d = a*k + 1 in P(1,1,1,a).

    First: 3((m+1)a + 1)/((ma+1) d), needs escape level m <= k - 1.
    Second: 3(ma+1)/d, needs d >= (ma+1)^2.
    The caller takes the max of the applicable ones.
    """
    if a < 1 or m < 1 or d < 2:
        raise ValueError("need a >= 1, m >= 1, d >= 2")
    k, rem = divmod(d - 1, a)
    first_ok = rem == 0 and k >= m + 1
    first = ApplicableBound(Fraction(3 * ((m + 1) * a + 1), (m * a + 1) * d), first_ok)
    second_ok = rem == 0 and d >= (m * a + 1) ** 2
    second = ApplicableBound(Fraction(3 * (m * a + 1), d), second_ok)
    return first, second


class NotPseudoEffectiveError(ValueError):
    """The class admits no Zariski decomposition in the given curve model."""


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: tuple[Fraction, ...]
    negative: tuple[Fraction, ...]
    support: tuple[int, ...]


def _solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise NotPseudoEffectiveError("singular intersection form on the support")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def _negative_definite(gram: list[list[Fraction]]) -> bool:
    n = len(gram)
    for k in range(1, n + 1):
        minor = [row[:k] for row in gram[:k]]
        det = _det(minor)
        if det * (-1) ** k <= 0:
            return False
    return True


def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    a = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def zariski_decompose(intersection: Sequence[Sequence], cls: Sequence) -> ZariskiDecomposition:
    """Zariski decomposition of a class in the span of listed curves.

    ``intersection`` is the exact Gram matrix of the curves; ``cls`` the
    coefficients of the divisor class in the curve basis.  Classical
    iteration: grow the support by curves meeting the candidate positive
    part negatively (in listed order), solve the orthogonality system, and
    demand a negative-definite support with nonnegative coefficients.
    """
    m = [[Fraction(x) for x in row] for row in intersection]
    n = len(m)
    if any(len(row) != n for row in m) or any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
        raise ValueError("intersection matrix must be square and symmetric")
    d = [Fraction(x) for x in cls]
    if len(d) != n:
        raise ValueError("class vector length mismatch")

    def pair(u: list[Fraction], j: int) -> Fraction:
        return sum(u[i] * m[i][j] for i in range(n))

    support: list[int] = []
    beta = [Fraction(0)] * n
    for _ in range(n + 1):
        pos = [d[i] - beta[i] for i in range(n)]
        bad = [j for j in range(n) if j not in support and pair(pos, j) < 0]
        if not bad:
            decomposition = ZariskiDecomposition(
                positive=tuple(pos), negative=tuple(beta), support=tuple(sorted(support))
            )
            _check_zariski(m, d, decomposition)
            return decomposition
        support.extend(bad)
        gram = [[m[i][j] for j in support] for i in support]
        if not _negative_definite(gram):
            raise NotPseudoEffectiveError(
                "support is not negative definite; class is not pseudo-effective "
                "within this curve model"
            )
        rhs = [sum(d[i] * m[i][j] for i in range(n)) for j in support]
        sol = _solve_linear(gram, rhs)
        if any(x < 0 for x in sol):
            raise NotPseudoEffectiveError("negative part would have a negative coefficient")
        beta = [Fraction(0)] * n
        for idx, j in enumerate(support):
            beta[j] = sol[idx]
    raise AssertionError("Zariski iteration failed to terminate")


def _check_zariski(m, d, dec: ZariskiDecomposition) -> None:
    n = len(m)
    pos, neg = dec.positive, dec.negative
    for j in range(n):
        if sum(pos[i] * m[i][j] for i in range(n)) < 0:
            raise AssertionError("positive part is not nef against the listed curves")
    pn = sum(pos[i] * m[i][j] * neg[j] for i in range(n) for j in range(n))
    if pn != 0:
        raise AssertionError("positive and negative part are not orthogonal")


@dataclass(frozen=True)
class OkounkovCase:
    """An Okounkov body of O_S(1) for one of the supported surface families,
    with the surface invariants read off the construction."""

    body: SlicedBody
    L2: Fraction
    eps: Fraction
    t_max: Fraction
    s_value: Fraction           # first barycenter coordinate
    second_coordinate: Fraction

    @property
    def area(self) -> Fraction:
        return self.body.area()


class _LinFn:
    """c + m*x with Fraction coefficients."""

    __slots__ = ("c", "m")

    def __init__(self, c: Fraction, m: Fraction):
        self.c = Fraction(c)
        self.m = Fraction(m)

    def __call__(self, x: Fraction) -> Fraction:
        return self.c + self.m * x

    def __add__(self, other):
        return _LinFn(self.c + other.c, self.m + other.m)

    def __sub__(self, other):
        return _LinFn(self.c - other.c, self.m - other.m)

    def scale(self, f: Fraction):
        return _LinFn(self.c * f, self.m * f)


def _okounkov_from_curve_model(intersection: Sequence[Sequence], l_coeffs: Sequence,
                               flag_index: int) -> tuple[SlicedBody, Fraction]:
    """Okounkov body of L for the flag (curve, generic point) by walking the
    Zariski chambers of L - x * C_flag.  Returns (body, nef threshold).

    Only models whose chamber walls and pseudo-effective threshold are
    rational are supported (all shipped families are).
    """
    m = [[Fraction(x) for x in row] for row in intersection]
    n = len(m)
    d0 = [Fraction(x) for x in l_coeffs]
    # D(x) = d0 - x * e_flag as linear functions of x
    dvec = [_LinFn(d0[i], Fraction(-1) if i == flag_index else Fraction(0)) for i in range(n)]

    def pair_lin(u: list[_LinFn], j: int) -> _LinFn:
        out = _LinFn(Fraction(0), Fraction(0))
        for i in range(n):
            if m[i][j] != 0:
                out = out + u[i].scale(m[i][j])
        return out

    support: list[int] = []
    x0 = Fraction(0)
    breakpoints = [Fraction(0)]
    pieces: list[tuple[Fraction, Fraction]] = []
    for _ in range(n + 2):
        # solve for the negative part on the current support, linearly in x
        beta: list[_LinFn] = [_LinFn(Fraction(0), Fraction(0)) for _ in range(n)]
        if support:
            gram = [[m[i][j] for j in support] for i in support]
            rhs_c = [pair_lin(dvec, j).c for j in support]
            rhs_m = [pair_lin(dvec, j).m for j in support]
            sol_c = _solve_linear([row[:] for row in gram], rhs_c)
            sol_m = _solve_linear([row[:] for row in gram], rhs_m)
            for idx, j in enumerate(support):
                beta[j] = _LinFn(sol_c[idx], sol_m[idx])
        pvec = [dvec[i] - beta[i] for i in range(n)]
        # volume of the positive part: quadratic in x
        q2 = Fraction(0)
        q1 = Fraction(0)
        q0 = Fraction(0)
        for i in range(n):
            for j in range(n):
                if m[i][j] == 0:
                    continue
                q2 += pvec[i].m * pvec[j].m * m[i][j]
                q1 += (pvec[i].c * pvec[j].m + pvec[i].m * pvec[j].c) * m[i][j]
                q0 += pvec[i].c * pvec[j].c * m[i][j]
        vol_root = _smallest_root_after(q2, q1, q0, x0)
        # next wall: a curve outside the support starts meeting P negatively
        wall = None
        for j in range(n):
            if j in support:
                continue
            ln = pair_lin(pvec, j)
            if ln.m < 0:
                root = -ln.c / ln.m
                if root > x0 and (wall is None or root < wall[0]):
                    wall = (root, j)
        slice_fn = pair_lin(pvec, flag_index)
        if vol_root is None and wall is None:
            raise ValueError("model does not reach the pseudo-effective boundary rationally")
        if vol_root is not None and (wall is None or vol_root <= wall[0]):
            end = vol_root
            pieces.append((slice_fn.m, slice_fn.c))
            breakpoints.append(end)
            body = SlicedBody(tuple(breakpoints), tuple(pieces))
            nef_threshold = breakpoints[1] if support else breakpoints[-1]
            return body, nef_threshold
        end, j = wall
        if end > x0:
            pieces.append((slice_fn.m, slice_fn.c))
            breakpoints.append(end)
        support.append(j)
        gram = [[m[i][jj] for jj in support] for i in support]
        if not _negative_definite(gram):
            raise NotPseudoEffectiveError("chamber support is not negative definite")
        x0 = end
    raise AssertionError("chamber walk failed to terminate")


def _smallest_root_after(q2: Fraction, q1: Fraction, q0: Fraction,
                         x0: Fraction) -> Optional[Fraction]:
    """Smallest rational root > x0 of q2 x^2 + q1 x + q0, if any."""
    roots = []
    if q2 == 0:
        if q1 != 0:
            roots.append(-q0 / q1)
    else:
        disc = q1 * q1 - 4 * q2 * q0
        r = sqrt_fraction(disc)
        if r is None:
            return None
        roots.extend([(-q1 - r) / (2 * q2), (-q1 + r) / (2 * q2)])
    cands = [r for r in roots if r > x0]
    return min(cands) if cands else None


def okounkov_body_surface(case: str, a: int = 0, b: int = 0, k: int = 0,
                          flag_in_surface: bool = False) -> OkounkovCase:
    """Okounkov bodies of O_S(1) for the three supported surface families.

    - "hirzebruch": S = P(1,1,a), flag the exceptional curve of the blowup
      of the 1/a(1,1) vertex.
    - "hirzebruch2": S = P(1,a,a+1), flag the exceptional curve of the
      blowup of the 1/a(1,1) point.
    - "perhaps-useful": S a degree b*k+a surface in P(1,1,1,b) met along a
      fiber line through a smooth point.  When the line lies on the surface
      only the slice up to the nef threshold 1 is forced; the returned body
      is the barycenter-extremal completion of that slice, which is what
      the delta bounds use.  Otherwise the body is the exact triangle for a
      general flag curve in |O_S(1)|.

    Any other case is rejected.
    """
    if case == "hirzebruch":
        if a < 1:
            raise ValueError("need a >= 1")
        fa = Fraction(a)
        inter = [[-fa, Fraction(1)], [Fraction(1), Fraction(0)]]
        l_coeffs = [Fraction(1, a), Fraction(1)]
        body, eps = _okounkov_from_curve_model(inter, l_coeffs, 0)
        return _finish_case(body, eps)
    if case == "hirzebruch2":
        if a < 1:
            raise ValueError("need a >= 1")
        fa = Fraction(a)
        inter = [[-fa, Fraction(1)], [Fraction(1), Fraction(-1, a + 1)]]
        l_coeffs = [Fraction(1, a), Fraction(1)]
        body, eps = _okounkov_from_curve_model(inter, l_coeffs, 0)
        return _finish_case(body, eps)
    if case == "perhaps-useful":
        if a < 1 or b < 1 or k < 2:
            raise ValueError("need a, b >= 1 and k >= 2")
        d = b * k + a
        if not flag_in_surface:
            body = SlicedBody((Fraction(0), Fraction(1)),
                              ((Fraction(-d, b), Fraction(d, b)),))
            return _finish_case(body, Fraction(1))
        c0 = Fraction(1, b)
        c2 = Fraction(1, b) + k - Fraction(1, a * b)
        v = Fraction(d, 2 * b)
        gb = gravity_bounds(GravityInput(c0=c0, c1=Fraction(1), c2=c2, V=v))
        t1 = (2 * v - c0) / c2
        if t1 == 1:
            body = SlicedBody((Fraction(0), Fraction(1)), ((c2 - c0, c0),))
        else:
            slope2 = -c2 / (t1 - 1)
            body = SlicedBody(
                (Fraction(0), Fraction(1), t1),
                ((c2 - c0, c0), (slope2, -slope2 * t1)),
            )
        if body.area() != v:
            raise AssertionError("extremal completion must have the full area")
        if body.centroid()[0] != gb.b1_max:
            raise AssertionError("extremal completion must attain the first bound")
        return _finish_case(body, Fraction(1))
    raise ValueError(f"unknown Okounkov case {case!r}")


def _finish_case(body: SlicedBody, eps: Fraction) -> OkounkovCase:
    c = body.centroid()
    return OkounkovCase(
        body=body,
        L2=2 * body.area(),
        eps=eps,
        t_max=body.breakpoints[-1],
        s_value=c[0],
        second_coordinate=c[1],
    )
