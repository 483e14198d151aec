"""Triangular (Hermite) bases: per-prime normalization and CRT gluing into a global basis."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .arith import FactoredInt, vp
from .linalg import hnf_lower_q
from .theta import N, PIntegralBasis, ThetaElement, power_basis


def _p_local(el: ThetaElement, p: int) -> ThetaElement:
    # dividing by the prime-to-p part of the denominator is a unit change at p
    return ThetaElement.make(el.numer, p ** vp(el.denom, p))


def triangularize(elems, p: int) -> PIntegralBasis:
    """Triangular p-basis of the Z_(p)-module spanned by elems and Z[theta].

    Row i of the result is (theta^i + lower terms)/p^k_i with k_i
    non-decreasing.  Raises ValueError when the numerators of the Hermite
    rows are not integral, which means the input does not span a ring-like
    module (triangular form with integral numerators needs d_i | d_{i+1}).
    """
    local = [_p_local(e, p) for e in elems]
    rows = [e.coeff_vector() for e in local] + [e.coeff_vector() for e in power_basis()]
    h = hnf_lower_q(rows, N, 1)
    out = []
    for i, row in enumerate(h):
        d = row[i].denominator
        if row[i].numerator != 1 or d != p ** vp(d, p):
            raise ValueError(f"pivot {row[i]} in row {i} is not 1/p^k")
        num = [x * d for x in row]
        if any(x.denominator != 1 for x in num):
            raise ValueError(f"row {i} has a non-integral numerator over its pivot")
        out.append(ThetaElement.make([int(x) for x in num], d))
    return PIntegralBasis(p, tuple(out)).check()


@dataclass(frozen=True)
class IntegralBasis:
    """Global triangular basis; element i is (theta^i + ...)/d_i."""

    elements: tuple[ThetaElement, ...]

    @property
    def denominators(self) -> tuple[int, ...]:
        return tuple(e.denom for e in self.elements)

    def check(self) -> IntegralBasis:
        if len(self.elements) != N:
            raise ValueError("need 12 elements")
        prev = 1
        for i, el in enumerate(self.elements):
            if el.degree != i or el.numer.lc != 1:
                raise ValueError(f"element {i} is not monic of degree {i}")
            if el.denom % prev:
                raise ValueError(f"d_{i - 1} does not divide d_{i}")
            if any(not 0 <= c < el.denom for c in el.numer.coeffs[:i]) and el.denom > 1:
                raise ValueError(f"element {i} has unreduced coefficients")
            prev = el.denom
        if self.elements[0].denom != 1:
            raise ValueError("element 0 must be 1")
        return self


def _crt(residues) -> tuple[int, int]:
    """Solve x = r mod q for (r, q) pairs with pairwise coprime q."""
    x, mod = 0, 1
    for r, q in residues:
        if q == 1:
            continue
        # x + mod * s = r (mod q)
        s = (r - x) * pow(mod, -1, q) % q
        x, mod = x + mod * s, mod * q
    return x % mod, mod


def global_basis(m: int, per_prime: dict) -> IntegralBasis:
    """Glue triangular p-bases: denominators multiply, numerators by CRT.

    Coefficients are the least nonnegative residues mod t_i.  With no
    primes the power basis comes back.
    """
    for p, b in per_prime.items():
        if b.p != p:
            raise ValueError(f"basis for {b.p} filed under {p}")
        b.check()
    out = []
    for i in range(N):
        parts = [(b.elements[i], p ** b.exponents[i]) for p, b in sorted(per_prime.items())]
        t = prod(q for _, q in parts)
        coeffs = []
        for j in range(i):
            c, _ = _crt([(el.numer[j] % q, q) for el, q in parts])
            coeffs.append(c)
        out.append(ThetaElement.make(coeffs + [1], t) if t > 1 else ThetaElement.power(i))
    return IntegralBasis(tuple(out)).check()


def index_from_basis(b) -> FactoredInt:
    return FactoredInt.from_map(1, _merge(FactoredInt.of(d).exponents for d in b.denominators if d > 1))


def _merge(maps) -> dict:
    out: dict[int, int] = {}
    for mp in maps:
        for p, e in mp.items():
            out[p] = out.get(p, 0) + e
    return out


__all__ = ["triangularize", "global_basis", "index_from_basis", "IntegralBasis"]
