"""
First-order Newton polygons over Z_p.

The polygon of g = sum a_i x^i is the lower convex hull of the points
(i, v_p(a_i)).  Its negative-slope edges (the principal part) carry the
arithmetic: each edge of slope -h/e gives a residual polynomial over F_p,
and when every residual is squarefree the p-index of g equals the number
of lattice points with positive coordinates on or under the polygon.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from .arith import FpPoly, IntPoly, vp


class NotRegular(Exception):
    """Some residual polynomial has a repeated factor; first order is not enough."""


@dataclass(frozen=True, order=True)
class PolygonPoint:
    abscissa: int
    ordinate: Fraction


@dataclass(frozen=True)
class Edge:
    start: PolygonPoint
    end: PolygonPoint
    h: int
    e: int
    lattice_abscissas: tuple[int, ...]

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.h, self.e)

    @property
    def length(self) -> int:
        return self.end.abscissa - self.start.abscissa

    @property
    def degree(self) -> int:
        """Lattice length d: the number of steps of width e."""
        return self.length // self.e

    def ordinate_at(self, x) -> Fraction:
        return self.start.ordinate + self.slope * (x - self.start.abscissa)


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple[PolygonPoint, ...]
    vertices: tuple[PolygonPoint, ...]
    edges: tuple[Edge, ...]

    @property
    def principal(self) -> tuple[Edge, ...]:
        return tuple(ed for ed in self.edges if ed.h > 0)

    @property
    def last_vertex(self) -> PolygonPoint:
        """Right end of the principal part (the left vertex when it is empty)."""
        pr = self.principal
        return pr[-1].end if pr else self.vertices[0]

    def ordinate_at(self, x) -> Fraction:
        for ed in self.edges:
            if ed.start.abscissa <= x <= ed.end.abscissa:
                return ed.ordinate_at(x)
        raise ValueError(f"abscissa {x} outside the polygon")


def _cross(o: PolygonPoint, a: PolygonPoint, b: PolygonPoint) -> Fraction:
    return ((a.abscissa - o.abscissa) * (b.ordinate - o.ordinate)
            - (a.ordinate - o.ordinate) * (b.abscissa - o.abscissa))


def _edge(a: PolygonPoint, b: PolygonPoint) -> Edge:
    slope = Fraction(b.ordinate - a.ordinate) / (b.abscissa - a.abscissa)
    h, e = -slope.numerator, slope.denominator
    # ordinate is integral at a.abscissa + k*e when a itself is integral
    lat = tuple(range(a.abscissa, b.abscissa + 1, e)) if a.ordinate.denominator == 1 else ()
    return Edge(a, b, h, e, lat)


def polygon_from_points(pairs) -> NewtonPolygon:
    """Lower convex hull of (abscissa, ordinate) pairs, by monotone chain.

    Abscissas must be distinct.  Collinear points are dropped from the
    vertex list; they remain visible through Edge.lattice_abscissas.
    """
    pts = sorted(PolygonPoint(int(i), Fraction(y)) for i, y in pairs)
    if not pts:
        raise ValueError("no points")
    if len({q.abscissa for q in pts}) != len(pts):
        raise ValueError("abscissas must be distinct")
    hull: list[PolygonPoint] = []
    for q in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], q) <= 0:
            hull.pop()
        hull.append(q)
    edges = tuple(_edge(a, b) for a, b in zip(hull, hull[1:]))
    return NewtonPolygon(tuple(pts), tuple(hull), edges)


def gauss_valuation(g: IntPoly, p: int) -> int:
    if g.is_zero():
        raise ValueError("Gauss valuation of the zero polynomial")
    return min(vp(c, p) for c in g.coeffs if c)


def newton_polygon(g: IntPoly, p: int) -> NewtonPolygon:
    if not g.is_monic() or g[0] == 0:
        raise ValueError("need a monic polynomial with nonzero constant term")
    return polygon_from_points((i, vp(c, p)) for i, c in enumerate(g.coeffs) if c)


def residual_polynomial(g: IntPoly, p: int, edge: Edge) -> FpPoly:
    """Residues of the coefficients sitting on the edge, read as a polynomial in Y.

    The coefficient of Y^j comes from a_{s + e j}, s the left abscissa;
    points strictly above the edge contribute 0.  Normalized to be monic.
    """
    if edge.h <= 0:
        raise ValueError("residual polynomials are attached to negative slopes")
    s = edge.start.abscissa
    cs = []
    for j in range(edge.degree + 1):
        i = s + j * edge.e
        a, y = g[i], edge.ordinate_at(i)
        if a and vp(a, p) == y:
            cs.append(a // p ** int(y))
        else:
            if a and vp(a, p) < y:
                raise ValueError("edge does not belong to this polynomial's polygon")
            cs.append(0)
    res = FpPoly(p, cs)
    if res.degree != edge.degree or res[0] == 0:
        raise ValueError("edge does not belong to this polynomial's polygon")
    return res.monic()


def is_p_regular(g: IntPoly, p: int) -> bool:
    return all(residual_polynomial(g, p, ed).is_squarefree()
               for ed in newton_polygon(g, p).principal)


def lattice_count_under(poly: NewtonPolygon) -> int:
    """Lattice points (x, y) with x >= 1, y above the last principal vertex, on or under the principal part.

    For a first-order polygon of a monic polynomial the last vertex has
    ordinate 0, so this is the usual count of points with positive
    coordinates.
    """
    pr = poly.principal
    if not pr:
        return 0
    base = pr[-1].end.ordinate
    if base.denominator != 1:
        raise ValueError("last vertex must be a lattice point")
    total = 0
    for ed in pr:
        lo = max(ed.start.abscissa, 1)
        for x in range(lo, ed.end.abscissa + 1):
            if x == ed.start.abscissa and ed is not pr[0]:
                continue  # counted with the previous edge
            total += floor(ed.ordinate_at(x)) - int(base)
    return total


def polygon_lattice_count(poly: NewtonPolygon) -> int:
    return lattice_count_under(poly)


def triangle_lattice_count(t: int, b: int) -> int:
    """Points with positive coordinates on or under the segment (0, b)-(t, 0)."""
    if t < 1 or b < 1:
        raise ValueError("t and b must be positive")
    return ((t - 1) * (b - 1) + gcd(t, b) - 1) // 2


def ore_index(g: IntPoly, p: int) -> int:
    """v_p of the index of Z[x]/g when g is p-regular; raises NotRegular otherwise."""
    n = g.degree
    if not g.is_monic() or any(g[i] % p for i in range(n)):
        raise ValueError("ore_index needs a monic g congruent to x^n mod p")
    poly = newton_polygon(g, p)
    if not all(residual_polynomial(g, p, ed).is_squarefree() for ed in poly.principal):
        raise NotRegular(f"x-polygon of g at p = {p} has a non-squarefree residual")
    return polygon_lattice_count(poly)
