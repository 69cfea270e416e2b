"""Newton polygons, conjugate differences and the Krasner constant.

Slope convention: a segment from ``(i1, v1)`` to ``(i2, v2)`` is reported
with slope ``(v1 - v2)/(i2 - i1)``, which is exactly the value of the
``i2 - i1`` roots it accounts for.  Segments are listed by increasing slope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeOne, Inseparable, NotARoot, ZeroPolynomial
from .valgroup import INF, GroupValue, cmp, sort_values


def _cross_ok(p1, p2, p3, spec) -> bool:
    """True when p2 lies strictly below the chord p1--p3."""
    (i1, v1), (i2, v2), (i3, v3) = p1, p2, p3
    # v2 < v1 + (v3 - v1)*(i2 - i1)/(i3 - i1), scaled by (i3 - i1)
    lhs = (v2 - v1) * (i3 - i1)
    rhs = (v3 - v1) * (i2 - i1)
    return cmp(lhs, rhs, spec) < 0


def hull_vertices(points, spec=None) -> list:
    """Lower convex hull of ``(i, value)`` points with finite values."""
    pts = sorted(points, key=lambda p: p[0])
    hull = []
    for p in pts:
        while len(hull) >= 2 and not _cross_ok(hull[-2], hull[-1], p, spec):
            hull.pop()
        hull.append(p)
    return hull


def hull_segments(points, spec=None) -> list:
    """[(slope, multiplicity)] of the lower hull, slopes increasing."""
    hull = hull_vertices(points, spec)
    segs = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        segs.append(((v1 - v2).divide(i2 - i1), i2 - i1))
    segs.reverse()
    return segs


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple
    vertices: tuple
    segments: tuple  # ((slope, multiplicity), ...) increasing slope
    ord0: int

    def root_values(self) -> list:
        out = []
        for s, m in self.segments:
            out.extend([s] * m)
        return out

    def max_slope(self):
        return self.segments[-1][0] if self.segments else None


def newton_polygon(g, spec=None) -> NewtonPolygon:
    """Newton polygon of a nonzero :class:`~valx.polynomial.Poly`."""
    if g.is_zero():
        raise ZeroPolynomial("Newton polygon of the zero polynomial")
    L = g.L
    pts = [(i, L.value(c)) for i, c in enumerate(g.c) if not L.is_zero(c)]
    ord0 = pts[0][0]
    verts = hull_vertices(pts, spec)
    segs = hull_segments(pts, spec)
    return NewtonPolygon(tuple(pts), tuple(verts), tuple(segs), ord0)


def points_polygon(values, spec=None) -> NewtonPolygon:
    """Newton polygon from a list of coefficient values (``INF`` for zero)."""
    pts = [(i, v) for i, v in enumerate(values) if v is not INF]
    if not pts:
        raise ZeroPolynomial("Newton polygon of the zero polynomial")
    return NewtonPolygon(tuple(pts), tuple(hull_vertices(pts, spec)),
                         tuple(hull_segments(pts, spec)), pts[0][0])


@dataclass(frozen=True)
class ConjDiffs:
    """The values nu(a - a_i) over the conjugates a_i != a, sorted increasing."""

    values: tuple
    infinite: int = 0

    def __len__(self):
        return len(self.values) + self.infinite

    def max(self):
        return self.values[-1] if self.values else None


def _element_minpoly(a, over):
    from .polynomial import Poly

    return Poly.from_coeffs(a.tower, a.tower.minimal_polynomial(a, over), level=over)


def conjugate_differences(a, over: int = 0, minpoly=None) -> ConjDiffs:
    """Values of ``a - a_i`` for the conjugates of ``a`` over level ``over``."""
    from .polynomial import is_separable, taylor_expand

    f = minpoly if minpoly is not None else _element_minpoly(a, over)
    if not is_separable(f):
        raise Inseparable("element is not separable over the base")
    cs = taylor_expand(f, a)
    if not cs[0].is_zero():
        raise NotARoot("the element is not a root of its polynomial")
    vals = [c.value() for c in cs[1:]]
    poly = points_polygon(vals)
    return ConjDiffs(tuple(sort_values(poly.root_values())), poly.ord0)


def kras(a, over: int = 0, minpoly=None) -> GroupValue:
    """max nu(a - sigma a) over conjugates sigma a != a."""
    f = minpoly if minpoly is not None else _element_minpoly(a, over)
    if f.degree < 2:
        raise DegreeOne("kras needs an element of degree >= 2")
    return conjugate_differences(a, over, f).max()
