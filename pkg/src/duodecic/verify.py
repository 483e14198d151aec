"""
Independent checks on Q(theta), theta^12 = m.

Nothing here consults the case tables or the polygon engines.  Elements
are handled as coordinate vectors over the power basis; integrality comes
from characteristic polynomials of multiplication matrices, and the
p-maximal order comes from the round-2 iteration: take the p-radical R of
the current order O, replace O by {x : xR in R}, repeat until stable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm

from .arith import IntPoly, vp
from .linalg import bareiss_det, det_q, hnf_lower, hnf_lower_q, left_kernel_mod_p
from .theta import N, PIntegralBasis, ThetaElement, power_basis


def mul_vec(a, b, m: int) -> list:
    """Product of two coordinate vectors in Q[x]/(x^12 - m)."""
    out = [0] * (2 * N - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return [out[i] + (m * out[i + N] if i + N < 2 * N - 1 else 0) for i in range(N)]


def pow_vec(a, k: int, m: int) -> list:
    result = [1] + [0] * (N - 1)
    base = list(a)
    while k:
        if k & 1:
            result = mul_vec(result, base, m)
        base = mul_vec(base, base, m)
        k >>= 1
    return result


def mult_matrix(a: ThetaElement, m: int) -> list[list[Fraction]]:
    """Matrix of x -> a*x on the power basis; column j holds a*theta^j."""
    cols = []
    col = a.coeff_vector()
    for _ in range(N):
        cols.append(col)
        col = [m * col[N - 1]] + col[:N - 1]  # multiply by theta
    return [[cols[j][i] for j in range(N)] for i in range(N)]


def trace(v, m: int) -> Fraction:
    # Tr(theta^k) = 0 for 0 < k < 12, so only the constant term survives
    return N * Fraction(v[0])


def charpoly_of(num, m: int) -> list[int]:
    """Char poly of the integer element num(theta), low degree first.

    Power sums Tr(num^k) = 12 * (num^k)_0 feed Newton's identities; every
    division is exact because the elementary symmetric functions are integers.
    """
    sums, power = [], [1] + [0] * (N - 1)
    for _ in range(N):
        power = mul_vec(power, num, m)
        sums.append(N * power[0])
    e = [1]
    for k in range(1, N + 1):
        acc = sum((-1) ** (i - 1) * e[k - i] * sums[i - 1] for i in range(1, k + 1))
        e.append(acc // k)
    return [(-1) ** (N - j) * e[N - j] for j in range(N + 1)]


def is_algebraic_integer(a: ThetaElement, m: int) -> bool:
    """Characteristic polynomial of numer(theta)/d has integer coefficients.

    The char poly of numer(theta)/d has coefficient c_k / d^(12-k), where
    c_k are those of numer(theta).
    """
    cp = charpoly_of([a.numer[i] for i in range(N)], m)
    d = a.denom
    return all(c % d ** (N - k) == 0 for k, c in enumerate(cp))


def trace_form_disc(basis, m: int) -> Fraction:
    vecs = [b.coeff_vector() if isinstance(b, ThetaElement) else list(b) for b in basis]
    gram = [[trace(mul_vec(u, v, m), m) for v in vecs] for u in vecs]
    d = det_q(gram)
    if d == 0:
        raise ValueError("basis is linearly dependent")
    return d


def sylvester_discriminant(g: IntPoly) -> int:
    """Discriminant of a monic g as (-1)^(n(n-1)/2) Res(g, g')."""
    n = g.degree
    dg = IntPoly(i * c for i, c in enumerate(g.coeffs) if i)
    a = list(reversed(g.coeffs))
    b = list(reversed(dg.coeffs))
    size = 2 * n - 1
    rows = []
    for i in range(n - 1):
        rows.append([0] * i + a + [0] * (size - i - len(a)))
    for i in range(n):
        rows.append([0] * i + b + [0] * (size - i - len(b)))
    res = bareiss_det(rows)
    return (-1) ** (n * (n - 1) // 2) * res


@dataclass(frozen=True)
class OrderBasis:
    """A lattice in Q(theta) containing Z[theta], kept in lower-triangular Hermite form."""

    m: int
    matrix: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, m: int, rows, contains_power_basis=True) -> OrderBasis:
        rows = [list(r) for r in rows]
        if contains_power_basis:
            rows += [[1 if j == i else 0 for j in range(N)] for i in range(N)]
        h = hnf_lower_q(rows, N, 1 if contains_power_basis else None)
        return cls(m, tuple(tuple(r) for r in h))

    @classmethod
    def from_scaled(cls, m: int, d: int, rows, modulus: int) -> OrderBasis:
        """Lattice spanned by rows / d, given modulus * Z^12 inside the scaled lattice."""
        h = hnf_lower(rows, N, modulus)
        return cls(m, tuple(tuple(Fraction(x, d) for x in r) for r in h))

    @classmethod
    def from_elements(cls, m: int, elems) -> OrderBasis:
        return cls.from_rows(m, [e.coeff_vector() for e in elems])

    @classmethod
    def power(cls, m: int) -> OrderBasis:
        return cls.from_rows(m, [])

    @property
    def elements(self) -> tuple[ThetaElement, ...]:
        out = []
        for r in self.matrix:
            d = lcm(*(x.denominator for x in r))
            out.append(ThetaElement.make([int(x * d) for x in r], d))
        return tuple(out)

    @property
    def denominators(self) -> tuple[int, ...]:
        return tuple(int(1 / self.matrix[i][i]) for i in range(N))

    def coords(self, v) -> list[Fraction]:
        """Coordinates of v in this basis (back-substitution)."""
        v = [Fraction(x) for x in v]
        c = [Fraction(0)] * N
        for i in range(N - 1, -1, -1):
            if v[i]:
                c[i] = v[i] / self.matrix[i][i]
                row = self.matrix[i]
                for j in range(i + 1):
                    v[j] -= c[i] * row[j]
        return c

    def contains(self, v) -> bool:
        return all(x.denominator == 1 for x in self.coords(v))

    @cached_property
    def scaled(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """(D, H) with matrix = H / D and H integral."""
        d = lcm(*(x.denominator for r in self.matrix for x in r))
        return d, tuple(tuple(int(x * d) for x in r) for r in self.matrix)

    def int_coords(self, num, den: int = 1) -> list[int] | None:
        """Integer coordinates of num/den, or None when they are not all integral."""
        d, h = self.scaled
        t = [x * d for x in num]
        c = [0] * N
        for i in range(N - 1, -1, -1):
            if t[i]:
                q, r = divmod(t[i], h[i][i])
                if r:
                    return None
                c[i] = q
                row = h[i]
                for j in range(i + 1):
                    t[j] -= q * row[j]
        if den != 1:
            if any(x % den for x in c):
                return None
            c = [x // den for x in c]
        return c

    @cached_property
    def mult_table(self):
        rows = self.matrix
        return [[self.coords(mul_vec(rows[i], rows[j], self.m)) for j in range(N)] for i in range(N)]

    def is_closed(self) -> bool:
        d, h = self.scaled
        return all(self.int_coords(mul_vec(h[i], h[j], self.m), d * d) is not None
                   for i in range(N) for j in range(i, N))

    def structure_mod(self, p: int) -> list:
        """Structure constants of o/po: table[i][j] = coords of b_i b_j mod p."""
        d, h = self.scaled
        table = [[None] * N for _ in range(N)]
        for i in range(N):
            for j in range(i, N):
                c = self.int_coords(mul_vec(h[i], h[j], self.m), d * d)
                if c is None:
                    raise ValueError("order is not closed under multiplication")
                table[i][j] = table[j][i] = [x % p for x in c]
        return table

    def index_valuation(self, p: int) -> int:
        return sum(vp(d, p) for d in self.denominators)


def frobenius_exponent(p: int) -> int:
    """Smallest j with p^j >= 12."""
    j, q = 0, 1
    while q < N:
        q *= p
        j += 1
    return j


def p_radical(o: OrderBasis, p: int, m: int | None = None, check: bool = True) -> list[list[int]]:
    """F_p-basis (coordinates in o's basis) of the nilradical of o/po."""
    m = o.m if m is None else m
    if check and not o.is_closed():
        raise ValueError("order is not closed under multiplication")
    table = o.structure_mod(p)
    q = p ** frobenius_exponent(p)
    rows = [_algebra_pow([int(i == k) for k in range(N)], q, table, p) for i in range(N)]
    return left_kernel_mod_p(rows, p)


def _algebra_mul(a, b, table, p: int) -> list[int]:
    out = [0] * N
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    xy = x * y
                    for k, c in enumerate(table[i][j]):
                        out[k] += xy * c
    return [x % p for x in out]


def _algebra_pow(a, k: int, table, p: int) -> list[int]:
    # square-and-multiply in o/po, so large p never inflates coefficients
    result = [1] + [0] * (N - 1)
    base = list(a)
    while k:
        if k & 1:
            result = _algebra_mul(result, base, table, p)
        base = _algebra_mul(base, base, table, p)
        k >>= 1
    return result


def _combine_int(rows, vec) -> list[int]:
    out = [0] * N
    for a, row in zip(vec, rows):
        if a:
            for j in range(N):
                out[j] += a * row[j]
    return out


def multiplier_ring(o: OrderBasis, radical, p: int, m: int | None = None) -> OrderBasis:
    """{x in K : x R in R} for R = p o + (lifted radical vectors)."""
    m = o.m if m is None else m
    dw, hw = o.scaled
    lifted = [_combine_int(hw, v) for v in radical]
    # R = p o + radical lifts, and p Z[theta] lies in R
    ideal = OrderBasis.from_scaled(m, dw, [[p * x for x in r] for r in hw] + lifted, p * dw)
    # u in o with u R in p R, computed mod p; the new order is (p o + U) / p
    dv, hv = ideal.scaled
    table = []
    for w in hw:
        row = []
        for v in hv:
            c = ideal.int_coords(mul_vec(w, v, m), dw * dv)
            if c is None:
                raise ValueError("radical is not an ideal of the order")
            row += [x % p for x in c]
        table.append(row)
    kernel = left_kernel_mod_p(table, p)
    gens = [[p * x for x in r] for r in hw] + [_combine_int(hw, v) for v in kernel]
    return OrderBasis.from_scaled(m, dw * p, gens, dw * p)


def p_maximal_order(m: int, p: int, start: OrderBasis | None = None) -> OrderBasis:
    o = OrderBasis.power(m) if start is None else start
    while True:
        nxt = multiplier_ring(o, p_radical(o, p, check=False), p)
        if nxt.matrix == o.matrix:
            return o
        o = nxt


def round2_vp_index(m: int, p: int) -> int:
    return p_maximal_order(m, p).index_valuation(p)


@dataclass
class BasisReport:
    m: int
    p: int
    non_integral: list[int] = field(default_factory=list)
    exponent_sum: int = 0
    oracle_index: int = 0
    closed: bool = True
    maximal: bool = True
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def verify_p_basis(m: int, p: int, basis) -> BasisReport:
    """Integrality, index, ring closure and p-maximality of a triangular p-basis."""
    elems = basis.elements if isinstance(basis, PIntegralBasis) else tuple(basis)
    rep = BasisReport(m, p)
    rep.non_integral = [i for i, el in enumerate(elems) if not is_algebraic_integer(el, m)]
    if rep.non_integral:
        rep.problems.append(f"(a) elements {rep.non_integral} are not algebraic integers")
    rep.exponent_sum = sum(vp(el.denom, p) for el in elems)
    rep.oracle_index = round2_vp_index(m, p)
    if rep.exponent_sum != rep.oracle_index:
        rep.problems.append(f"(b) exponent sum {rep.exponent_sum} != oracle index {rep.oracle_index}")
    o = OrderBasis.from_elements(m, elems)
    rep.closed = o.is_closed()
    if not rep.closed:
        rep.problems.append("(c) the spanned lattice is not closed under multiplication")
        rep.maximal = False
    else:
        nxt = multiplier_ring(o, p_radical(o, p, check=False), p)
        rep.maximal = nxt.matrix == o.matrix
        if not rep.maximal:
            rep.problems.append(f"(d) the spanned order is not {p}-maximal")
    return rep


__all__ = [
    "OrderBasis", "BasisReport", "mult_matrix", "is_algebraic_integer", "trace_form_disc",
    "sylvester_discriminant", "p_radical", "multiplier_ring", "p_maximal_order",
    "round2_vp_index", "verify_p_basis", "power_basis", "frobenius_exponent",
]
