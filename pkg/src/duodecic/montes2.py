"""
Second-order Newton polygons.

A type (x; -h/e, psi) with key polynomial phi defines the weighted Gauss
valuation V with V(x) = h and V(p) = e.  Expanding g in powers of phi and
taking the hull of (i, V(a_i phi^i)) gives the V-polygon; when the residual
polynomials of its edges are squarefree over F_p[y]/psi, the index of g
and a p-integral basis follow from lattice counts and the phi-quotients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .arith import FpPoly, IntPoly, fp_factor, vp
from .newton import (Edge, NewtonPolygon, lattice_count_under, newton_polygon,
                     polygon_from_points, residual_polynomial)
from .theta import ThetaElement


class NotVRegular(Exception):
    """A second-order residual polynomial has a repeated root."""


@dataclass(frozen=True)
class Type2Data:
    p: int
    h: int
    e: int
    psi: FpPoly
    phi: IntPoly

    @property
    def mu(self) -> int:
        return self.psi.degree

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.h, self.e)

    @property
    def v_phi(self) -> int:
        return self.h * self.e * self.mu


@dataclass(frozen=True)
class PhiExpansion:
    coefficients: tuple[IntPoly, ...]
    quotients: tuple[IntPoly, ...]  # quotients[j - 1] is q_j


@dataclass(frozen=True)
class SecondOrderPolygon:
    polygon: NewtonPolygon
    last_vertex_ordinate: int

    @property
    def principal(self) -> tuple[Edge, ...]:
        return self.polygon.principal


def validate_key_polynomial(t: Type2Data) -> bool:
    phi, p = t.phi, t.p
    if t.psi.p != p or not t.psi.is_monic() or t.psi.degree < 1 or t.psi[0] == 0:
        return False
    if not phi.is_monic() or phi.degree != t.e * t.mu or phi[0] == 0:
        return False
    if any(phi[i] % p for i in range(phi.degree)):
        return False
    edges = newton_polygon(phi, p).principal
    if len(edges) != 1 or (edges[0].h, edges[0].e) != (t.h, t.e):
        return False
    if edges[0].start.abscissa != 0 or edges[0].end.abscissa != phi.degree:
        return False
    return residual_polynomial(phi, p, edges[0]) == t.psi


def second_order_valuation(t: Type2Data, q: IntPoly) -> int:
    """e * min(v_p(b_i) + i h / e) over the coefficients b_i of q."""
    if q.is_zero():
        raise ValueError("V of the zero polynomial")
    return min(t.e * vp(b, t.p) + i * t.h for i, b in enumerate(q.coeffs) if b)


def phi_expansion(g: IntPoly, phi: IntPoly) -> PhiExpansion:
    if phi.degree < 1:
        raise ValueError("phi must have positive degree")
    coeffs, quots = [], []
    q = g
    while True:
        q, a = q.divmod_monic(phi)
        coeffs.append(a)
        if q.is_zero():
            break
        quots.append(q)
    return PhiExpansion(tuple(coeffs), tuple(quots))


def v_newton_polygon(g: IntPoly, t: Type2Data) -> SecondOrderPolygon:
    exp = phi_expansion(g, t.phi)
    pts = [(i, second_order_valuation(t, a) + i * t.v_phi)
           for i, a in enumerate(exp.coefficients) if not a.is_zero()]
    poly = polygon_from_points(pts)
    return SecondOrderPolygon(poly, int(poly.last_vertex.ordinate))


class ResidueField:
    """F_p[y]/psi for a monic irreducible psi != y; elements are FpPoly of degree < mu."""

    def __init__(self, psi: FpPoly):
        self.psi = psi
        self.p = psi.p
        self.zero = FpPoly(self.p)
        self.one = FpPoly.one(self.p)
        self.y = FpPoly(self.p, (0, 1)) % psi

    def reduce(self, a: FpPoly) -> FpPoly:
        return a % self.psi

    def mul(self, a: FpPoly, b: FpPoly) -> FpPoly:
        return (a * b) % self.psi

    def inv(self, a: FpPoly) -> FpPoly:
        # extended Euclid: s*a + t*psi = 1
        r0, r1 = self.psi, a % self.psi
        s0, s1 = self.zero, self.one
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise ZeroDivisionError("not invertible modulo psi")
        return self.reduce(s0 * pow(r0.lc, -1, self.p))

    def y_pow(self, k: int) -> FpPoly:
        base = self.y if k >= 0 else self.inv(self.y)
        out = self.one
        for _ in range(abs(k)):
            out = self.mul(out, base)
        return out


@dataclass(frozen=True)
class ExtPoly:
    """Polynomial over F_p[y]/psi; coeffs[j] multiplies Y^j."""

    psi: FpPoly
    coeffs: tuple[FpPoly, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_over_prime_field(self) -> bool:
        return all(c.degree <= 0 for c in self.coeffs)

    def as_fp_poly(self) -> FpPoly:
        if not self.is_over_prime_field():
            raise ValueError("coefficients do not lie in F_p")
        return FpPoly(self.psi.p, (c[0] for c in self.coeffs))

    def is_squarefree(self) -> bool:
        k = ResidueField(self.psi)
        f = list(self.coeffs)
        df = [k.reduce(c * j) for j, c in enumerate(f) if j]
        return _ext_gcd_degree(k, f, df) == 0

    def __str__(self):
        if self.is_over_prime_field():
            return str(self.as_fp_poly())
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            cs = str(c).replace("Y", "z")
            mono = "" if j == 0 else ("Y" if j == 1 else f"Y^{j}")
            if c == FpPoly.one(c.p) and mono:
                parts.append(mono)
            else:
                parts.append(f"({cs}){mono}" if mono else f"({cs})")
        return " + ".join(parts)


def _trim(f):
    while f and f[-1].is_zero():
        f.pop()
    return f


def _ext_gcd_degree(k: ResidueField, a: list, b: list) -> int:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = k.inv(b[-1])
        r = list(a)
        while len(_trim(r)) >= len(b):
            c = k.mul(r[-1], inv)
            shift = len(r) - len(b)
            for i, bc in enumerate(b):
                r[shift + i] = k.reduce(r[shift + i] - k.mul(c, bc))
            _trim(r)
        a, b = b, r
    return len(a) - 1


def _residue_relative(t: Type2Data, a: IntPoly, K: int, V: int, field: ResidueField) -> FpPoly:
    """Residue of a(x) / (x^K p^V) in F_p[y]/psi, y the class of x^e / p^h.

    Requires e*V + h*K = V(a); only the terms of a realising V(a) survive.
    """
    w = second_order_valuation(t, a)
    assert t.e * V + t.h * K == w
    acc = field.zero
    for k, b in enumerate(a.coeffs):
        if b and t.e * vp(b, t.p) + t.h * k == w:
            c = (b // t.p ** vp(b, t.p)) % t.p
            acc = field.reduce(acc + field.y_pow((k - K) // t.e) * c)
    return acc


def _monomial_of_value(t: Type2Data, w: int) -> tuple[int, int]:
    """Some (K, V) with e*V + h*K = w, K in [0, e)."""
    K = (w * pow(t.h, -1, t.e)) % t.e if t.e > 1 else 0
    V = (w - t.h * K) // t.e
    return K, V


def second_order_residual(g: IntPoly, t: Type2Data, edge: Edge) -> ExtPoly:
    """Residual polynomial of a V-polygon edge, with coefficients in F_p[y]/psi.

    Coefficient j comes from the phi-coefficient a_i at i = s + j e2 when
    that point lies on the edge; every coefficient is normalised against
    one fixed monomial per step, so the result is determined up to
    Y -> c Y and an overall unit.  The result is made monic.
    """
    if edge.h <= 0:
        raise ValueError("residuals are attached to negative slopes")
    exp = phi_expansion(g, t.phi)
    field = ResidueField(t.psi)
    s, e2 = edge.start.abscissa, edge.e
    w0 = int(edge.start.ordinate) - s * t.v_phi
    step = -edge.h - e2 * t.v_phi  # change of V(a_i) per lattice step
    K0, V0 = _monomial_of_value(t, w0)
    Ks, Vs = _monomial_of_value(t, step)
    cs = []
    for j in range(edge.degree + 1):
        i = s + j * e2
        a = exp.coefficients[i] if i < len(exp.coefficients) else IntPoly()
        target = w0 + j * step
        if a.is_zero() or second_order_valuation(t, a) != target:
            if not a.is_zero() and second_order_valuation(t, a) < target:
                raise ValueError("edge does not belong to this V-polygon")
            cs.append(field.zero)
            continue
        cs.append(_residue_relative(t, a, K0 + j * Ks, V0 + j * Vs, field))
    if cs[0].is_zero() or cs[-1].is_zero():
        raise ValueError("edge does not belong to this V-polygon")
    lead = field.inv(cs[-1])
    return ExtPoly(t.psi, tuple(field.mul(c, lead) for c in cs))


def is_V_regular(g: IntPoly, types) -> bool:
    for t in types:
        vpoly = v_newton_polygon(g, t)
        for ed in vpoly.principal:
            if not second_order_residual(g, t, ed).is_squarefree():
                return False
    return True


def _first_order_edge(g: IntPoly, p: int) -> Edge:
    if not g.is_monic() or any(g[i] % p for i in range(g.degree)):
        raise ValueError("need a monic g congruent to x^n mod p")
    edges = newton_polygon(g, p).principal
    if len(edges) != 1:
        raise ValueError("first-order polygon must be one-sided")
    return edges[0]


def _check_types(g: IntPoly, p: int, types, edge: Edge):
    res = residual_polynomial(g, p, edge)
    repeated = {f for f, k in fp_factor(res) if k >= 2}
    given = {t.psi for t in types}
    if repeated != given:
        raise ValueError("types must match the repeated factors of the residual polynomial")
    for t in types:
        if t.p != p or (t.h, t.e) != (edge.h, edge.e) or not validate_key_polynomial(t):
            raise ValueError(f"invalid key data {t}")


def montes_index(g: IntPoly, p: int, types) -> int:
    """N_1 plus, for each type, mu times the V-polygon lattice count."""
    edge = _first_order_edge(g, p)
    _check_types(g, p, types, edge)
    if not is_V_regular(g, types):
        raise NotVRegular("supply different key polynomials")
    total = lattice_count_under(newton_polygon(g, p))
    for t in types:
        total += t.mu * lattice_count_under(v_newton_polygon(g, t).polygon)
    return total


def montes_p_basis(g: IntPoly, p: int, types):
    """Raw, possibly non-triangular, p-integral basis as ThetaElements.

    For each type and each u in (n - e mu, n], j in (0, b] (b the right end
    of the principal V-polygon) the element theta^(n-u) q_j(theta) is divided
    by p^floor(y_u + (Y_j - j V(phi)) / e).  Numerators are reduced modulo g.
    """
    edge = _first_order_edge(g, p)
    _check_types(g, p, types, edge)
    if not is_V_regular(g, types):
        raise NotVRegular("supply different key polynomials")
    n = g.degree
    out = []
    for t in types:
        exp = phi_expansion(g, t.phi)
        vpoly = v_newton_polygon(g, t)
        b = vpoly.polygon.last_vertex.abscissa
        for u in range(n - t.e * t.mu + 1, n + 1):
            y_u = edge.ordinate_at(u)
            for j in range(1, b + 1):
                Y_j = vpoly.polygon.ordinate_at(j)
                k = floor(y_u + Fraction(Y_j - j * t.v_phi, t.e))
                q = exp.quotients[j - 1] if j <= len(exp.quotients) else IntPoly.const(1)
                num = (IntPoly.x_pow(n - u) * q) % g
                out.append(ThetaElement.make(num, p**k))
    if len(out) != n:
        raise ValueError(f"expected {n} elements, produced {len(out)}")
    return out
