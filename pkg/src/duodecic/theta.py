"""Elements g(theta)/d of Q(theta) and the triangular bases built from them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import IntPoly, format_poly, vp

N = 12


@dataclass(frozen=True)
class ThetaElement:
    """numer(theta) / denom with deg numer < 12, denom >= 1 and the fraction reduced."""

    numer: IntPoly
    denom: int = 1

    def __post_init__(self):
        if self.denom < 1:
            raise ValueError("denominator must be positive")
        if self.numer.degree >= N:
            raise ValueError("numerator degree must be below 12")
        if gcd(self.numer.content(), self.denom) != 1:
            raise ValueError("fraction not reduced; use ThetaElement.make")

    @classmethod
    def make(cls, numer, denom: int = 1) -> ThetaElement:
        """Build and reduce; numer may be an IntPoly or a coefficient sequence."""
        if not isinstance(numer, IntPoly):
            numer = IntPoly(numer)
        if denom == 0:
            raise ZeroDivisionError("zero denominator")
        if denom < 0:
            numer, denom = -numer, -denom
        g = gcd(numer.content(), denom)
        if g > 1:
            numer = IntPoly(c // g for c in numer.coeffs)
            denom //= g
        return cls(numer, denom)

    @classmethod
    def power(cls, i: int) -> ThetaElement:
        return cls(IntPoly.x_pow(i))

    @property
    def degree(self) -> int:
        return self.numer.degree

    def coeff_vector(self) -> list:
        """Coordinates over 1, theta, ..., theta^11 as Fractions."""
        return [Fraction(self.numer[i], self.denom) for i in range(N)]

    def __str__(self):
        body = format_poly(self.numer.coeffs, "t")
        if self.denom == 1:
            return body
        if len([c for c in self.numer.coeffs if c]) > 1:
            body = f"({body})"
        return f"{body}/{self.denom}"


@dataclass(frozen=True)
class PIntegralBasis:
    """Triangular basis: element i has a monic numerator of degree i and denominator p^k_i."""

    p: int
    elements: tuple[ThetaElement, ...]

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(vp(el.denom, self.p) for el in self.elements)

    @property
    def index_valuation(self) -> int:
        return sum(self.exponents)

    def check(self):
        """Raise ValueError if the triangular shape is violated."""
        if len(self.elements) != N:
            raise ValueError("need 12 elements")
        prev = 0
        for i, el in enumerate(self.elements):
            if el.degree != i or el.numer.lc != 1:
                raise ValueError(f"element {i} is not monic of degree {i}")
            k = vp(el.denom, self.p)
            if el.denom != self.p**k:
                raise ValueError(f"element {i} has a denominator that is not a power of {self.p}")
            if k < prev:
                raise ValueError("denominator exponents must be non-decreasing")
            prev = k
        return self


def power_basis() -> tuple[ThetaElement, ...]:
    return tuple(ThetaElement.power(i) for i in range(N))
