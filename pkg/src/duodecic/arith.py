"""
Integers, valuations and dense univariate polynomials.

Contents:
    vp, unit_part, factor_int   p-adic valuation and trial-division factoring
    FactoredInt                 a signed integer kept as prime -> exponent
    is_12th_power_free          input checks on m
    is_irreducible_x12_minus_m
    IntPoly                     polynomials over Z
    FpPoly                      polynomials over F_p
    fp_factor                   factorization over F_p by trial division

Polynomials store coefficients lowest degree first, with no trailing
zeros; the zero polynomial has an empty tuple and degree -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product
from math import gcd


class InvalidInput(ValueError):
    """Raised when m (or another user-level argument) is out of range."""


def vp(n: int, p: int) -> int:
    """Exponent of the prime p in the nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def unit_part(n: int, p: int) -> int:
    """n with every factor p removed; the sign is kept."""
    if n == 0:
        raise ValueError("unit part of 0 is undefined")
    while n % p == 0:
        n //= p
    return n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_int(n: int) -> dict[int, int]:
    """Trial-division factorization of |n| (n != 0)."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class FactoredInt:
    """sign * prod(p**e) with primes increasing and every e >= 1."""

    sign: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        ps = [p for p, _ in self.factors]
        if ps != sorted(set(ps)) or any(e < 1 for _, e in self.factors):
            raise ValueError("factors must have increasing primes and positive exponents")

    @classmethod
    def from_map(cls, sign: int, exps: dict[int, int]) -> FactoredInt:
        return cls(sign, tuple(sorted((p, e) for p, e in exps.items() if e)))

    @classmethod
    def of(cls, n: int) -> FactoredInt:
        return cls.from_map(1 if n > 0 else -1, factor_int(n))

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.factors)

    def exponent(self, p: int) -> int:
        return self.exponents.get(p, 0)

    @property
    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    def __mul__(self, other: FactoredInt) -> FactoredInt:
        exps = self.exponents
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) + e
        return FactoredInt.from_map(self.sign * other.sign, exps)

    def __truediv__(self, other: FactoredInt) -> FactoredInt:
        exps = self.exponents
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) - e
            if exps[p] < 0:
                raise ValueError("quotient is not an integer")
        return FactoredInt.from_map(self.sign * other.sign, exps)

    def __pow__(self, k: int) -> FactoredInt:
        return FactoredInt.from_map(self.sign**k, {p: e * k for p, e in self.factors})

    def __str__(self):
        if not self.factors:
            return str(self.sign)
        body = "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return ("-" if self.sign < 0 else "") + body


def iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, by Newton iteration on integers."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def is_perfect_power(n: int, k: int) -> bool:
    """True if n = r**k for an integer r (negative n only for odd k)."""
    if n < 0:
        return k % 2 == 1 and is_perfect_power(-n, k)
    return iroot(n, k) ** k == n


def _check_m(m: int):
    if abs(m) <= 1:
        raise InvalidInput(f"|m| must be at least 2, got {m}")


def is_12th_power_free(m: int) -> bool:
    _check_m(m)
    return all(e < 12 for e in factor_int(m).values())


def is_irreducible_x12_minus_m(m: int) -> bool:
    """Binomial criterion: m not a square, not a cube, not -4 times a fourth power."""
    _check_m(m)
    if is_perfect_power(m, 2) or is_perfect_power(m, 3):
        return False
    if m < 0 and m % 4 == 0 and is_perfect_power(-m // 4, 4):
        return False
    return True


def validate_m(m: int) -> int:
    """Raise InvalidInput unless x^12 - m defines a degree-12 field with m 12th-power-free."""
    _check_m(m)
    if not is_12th_power_free(m):
        raise InvalidInput(f"m = {m} is not 12th-power-free")
    if not is_irreducible_x12_minus_m(m):
        raise InvalidInput(f"x^12 - ({m}) is reducible over Q")
    return m


def _trim(cs) -> tuple:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial over Z; coeffs[i] multiplies x**i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def x_pow(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        return self + (-other)

    def __rsub__(self, other) -> IntPoly:
        return -self + other

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def divmod_monic(self, phi: IntPoly) -> tuple[IntPoly, IntPoly]:
        """(q, r) with self = q*phi + r and deg r < deg phi."""
        if not phi.is_monic():
            raise ValueError("divisor must be monic")
        d = phi.degree
        r = list(self.coeffs)
        if len(r) <= d:
            return IntPoly(), self
        q = [0] * (len(r) - d)
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if c:
                q[k - d] = c
                for j in range(d + 1):
                    r[k - d + j] -= c * phi.coeffs[j]
        return IntPoly(q), IntPoly(r[:d])

    def __divmod__(self, phi: IntPoly):
        return self.divmod_monic(phi)

    def __mod__(self, phi: IntPoly) -> IntPoly:
        return self.divmod_monic(phi)[1]

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def mod_p(self, p: int) -> FpPoly:
        return FpPoly(p, self.coeffs)

    def __str__(self):
        return format_poly(self.coeffs, "x")


def format_poly(coeffs, var: str) -> str:
    if not any(coeffs):
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{'*' + mono if mono else ''}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p with coefficients in [0, p)."""

    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) % self.p for c in self.coeffs))

    @classmethod
    def one(cls, p: int) -> FpPoly:
        return cls(p, (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _same(self, other: FpPoly):
        if self.p != other.p:
            raise ValueError("moduli differ")

    def __add__(self, other: FpPoly) -> FpPoly:
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, (self[i] + other[i] for i in range(n)))

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other: FpPoly) -> FpPoly:
        return self + (-other)

    def __mul__(self, other) -> FpPoly:
        if isinstance(other, int):
            return FpPoly(self.p, (c * other for c in self.coeffs))
        self._same(other)
        if self.is_zero() or other.is_zero():
            return FpPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> FpPoly:
        out = FpPoly.one(self.p)
        for _ in range(k):
            out = out * self
        return out

    def monic(self) -> FpPoly:
        if self.is_zero():
            return self
        return self * pow(self.lc, -1, self.p)

    def __divmod__(self, other: FpPoly) -> tuple[FpPoly, FpPoly]:
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p, d = self.p, other.degree
        inv = pow(other.lc, -1, p)
        r = list(self.coeffs)
        if len(r) <= d:
            return FpPoly(p), self
        q = [0] * (len(r) - d)
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k] * inv % p
            if c:
                q[k - d] = c
                for j in range(d + 1):
                    r[k - d + j] = (r[k - d + j] - c * other.coeffs[j]) % p
        return FpPoly(p, q), FpPoly(p, r[:d])

    def __floordiv__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[1]

    def derivative(self) -> FpPoly:
        return FpPoly(self.p, (i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, y: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * y + c) % self.p
        return acc

    def is_squarefree(self) -> bool:
        return fp_gcd(self, self.derivative()).degree == 0

    def __str__(self):
        # residues shown in symmetric form for p > 2, e.g. Y - 1 over F_3
        half = self.p // 2
        cs = [c - self.p if c > half and self.p > 2 else c for c in self.coeffs]
        return format_poly(cs, "Y")


def fp_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _monic_of_degree(p: int, d: int):
    for tail in product(range(p), repeat=d):
        yield FpPoly(p, tail + (1,))


@cache
def fp_irreducibles(p: int, d: int) -> tuple[FpPoly, ...]:
    """All monic irreducible polynomials of degree d over F_p."""
    out = []
    smaller = [q for k in range(1, d // 2 + 1) for q in fp_irreducibles(p, k)]
    for f in _monic_of_degree(p, d):
        if all(not (f % q).is_zero() for q in smaller):
            out.append(f)
    return tuple(out)


def fp_factor(q: FpPoly) -> list[tuple[FpPoly, int]]:
    """Factor a monic q into monic irreducibles with multiplicities.

    Trial division by every monic irreducible of degree <= deg(q)/2,
    lowest degree first; what remains is irreducible.  Output is sorted by
    (degree, coefficients).
    """
    if q.is_zero() or not q.is_monic():
        raise ValueError("fp_factor needs a monic polynomial")
    if q.degree < 1:
        raise ValueError("fp_factor needs positive degree")
    out = []
    rest = q
    d = 1
    while 2 * d <= rest.degree:
        for g in fp_irreducibles(q.p, d):
            k = 0
            while True:
                quo, rem = divmod(rest, g)
                if not rem.is_zero():
                    break
                rest, k = quo, k + 1
            if k:
                out.append((g, k))
        d += 1
    if rest.degree > 0:
        for i, (g, k) in enumerate(out):
            if g == rest:
                out[i] = (g, k + 1)
                break
        else:
            out.append((rest, 1))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out
