"""
Closed-form answers for f = x^12 - m: case classification, index valuations,
p-integral bases, discriminants and the power-basis criterion.

Wildly ramified primes (p in {2, 3} with p | v_p(m)) are looked up in the
shipped case tables (see ``casedata``); every other prime is handled by a
formula.  Primes p >= 5 with p | v_p(m) are outside both and raise
NotCovered; ``verify.round2_vp_index`` still answers for them.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import FactoredInt, InvalidInput, IntPoly, factor_int, is_prime, unit_part, validate_m, vp
from .casedata import CaseEntry, case_by_tag, load_cases, parse_fp, parse_template
from .combine import triangularize
from .montes2 import Type2Data
from .theta import N, PIntegralBasis, ThetaElement


class NotCovered(Exception):
    """No closed form is available for this (m, p)."""


@dataclass(frozen=True)
class CaseLabel:
    p: int
    tag: str
    delta: int | None = None

    @property
    def is_table_case(self) -> bool:
        return self.tag[0] in "AB"


def _f(m: int) -> IntPoly:
    return IntPoly([-m] + [0] * (N - 1) + [1])


def _delta(n: int) -> int:
    return 1 if n % 3 == 1 else -1


def _table_entry(m: int, p: int) -> CaseEntry | None:
    v, mp = vp(m, p), unit_part(m, p)
    for c in load_cases():
        if c.matches(p, v, mp):
            return c
    return None


def classify(m: int, p: int) -> CaseLabel:
    validate_m(m)
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if m % p:
        if p == 3:
            return CaseLabel(3, "T2-3a" if m * m % 9 == 1 else "T2-3b", _delta(m))
        if p == 2:
            return CaseLabel(2, {1: "T3-2a", 5: "T3-2b"}.get(m % 8, "T3-2c"))
        return CaseLabel(p, "T4")
    v = vp(m, p)
    if v % p:
        return CaseLabel(p, "T1")
    entry = _table_entry(m, p)
    if entry is None:
        raise NotCovered(f"no closed form for p = {p} with v_p(m) = {v}")
    return CaseLabel(p, entry.tag, _delta(unit_part(m, p)) if p == 3 else None)


def _tame_index(v: int) -> int:
    return (11 * (v - 1) + gcd(v, N) - 1) // 2


def vp_index(m: int, p: int) -> int:
    label = classify(m, p)
    if label.is_table_case:
        return case_by_tag(label.tag).index
    return {
        "T1": lambda: _tame_index(vp(m, p)),
        "T2-3a": lambda: 4,
        "T3-2a": lambda: 9,
        "T3-2b": lambda: 6,
    }.get(label.tag, lambda: 0)()


def _env(m: int, label: CaseLabel) -> dict:
    return {"m": m, "mp": unit_part(m, label.p), "delta": label.delta or 1}


def _shifted(q: IntPoly, count: int, denom: int, m: int) -> list[ThetaElement]:
    f = _f(m)
    return [ThetaElement.make((IntPoly.x_pow(k) * q) % f, denom) for k in range(count)]


def raw_basis(m: int, p: int) -> list[ThetaElement]:
    """The listed basis elements for (m, p), before triangular normalization."""
    label = classify(m, p)
    f = _f(m)
    powers = [ThetaElement.power(i) for i in range(N)]
    if label.is_table_case:
        c = case_by_tag(label.tag)
        return [ThetaElement.make(num % f, p**k) for num, k in c.basis_rows(_env(m, label))]
    if label.tag == "T1":
        v = vp(m, p)
        return [ThetaElement.make(IntPoly.x_pow(i), p ** (i * v // N)) for i in range(N)]
    if label.tag == "T2-3a":
        h = IntPoly.x_pow(8) + IntPoly.x_pow(4) * m + 1
        return powers[:8] + _shifted(h, 4, 3, m)
    if label.tag == "T3-2a":
        g = IntPoly([1, 0, 0, 1, 0, 0, 1, 0, 0, 1])
        return powers[:6] + _shifted(IntPoly.x_pow(6) - 1, 3, 2, m) + _shifted(g, 3, 4, m)
    if label.tag == "T3-2b":
        return powers[:6] + _shifted(IntPoly.x_pow(6) - 1, 6, 2, m)
    return powers


def p_integral_basis(m: int, p: int) -> PIntegralBasis:
    """Triangular p-integral basis with denominator exponents summing to vp_index."""
    return triangularize(raw_basis(m, p), p)


def key_data_for_case(label: CaseLabel, m: int | None = None) -> list[Type2Data]:
    """Second-order types (slope, psi, key polynomial) for a table case.

    Only delta enters the key data, so m is optional.
    """
    if not label.is_table_case:
        raise ValueError(f"{label.tag} has no second-order data")
    c = case_by_tag(label.tag)
    env = {"delta": label.delta or 1}
    if m is not None:
        env.update(m=m, mp=unit_part(m, label.p))
    return [Type2Data(c.p, t["h"], t["e"], parse_fp(t["psi"], c.p, env),
                      parse_template(t["phi"], env, var="x")) for t in c.types]


def disc_f(m: int) -> FactoredInt:
    """-2^24 3^12 m^11, factored."""
    validate_m(m)
    return FactoredInt(-1, ((2, 24), (3, 12))) * FactoredInt.of(m) ** 11


def relevant_primes(m: int) -> list[int]:
    """Primes dividing the polynomial discriminant: 2, 3 and those of m."""
    return sorted({2, 3} | set(factor_int(m)))


def index_valuations(m: int) -> dict[int, int]:
    return {p: vp_index(m, p) for p in relevant_primes(m)}


def field_discriminant(m: int) -> FactoredInt:
    ind = FactoredInt.from_map(1, index_valuations(m))
    return disc_f(m) / ind**2


def is_power_basis_monogenic(m: int) -> bool:
    """Congruence test for Z[theta] = O_K, valid for squarefree m."""
    validate_m(m)
    if any(e > 1 for e in factor_int(m).values()):
        raise InvalidInput(f"m = {m} is not squarefree")
    two, three = m % 2 == 0, m % 3 == 0
    odd_ok = m % 4 == 3
    nine_ok = m * m % 9 != 1
    if not two and not three:
        return odd_ok and nine_ok
    if not two:
        return odd_ok
    if not three:
        return nine_ok
    return True


__all__ = [
    "CaseLabel", "NotCovered", "classify", "vp_index", "p_integral_basis", "raw_basis",
    "key_data_for_case", "disc_f", "field_discriminant", "is_power_basis_monogenic",
    "relevant_primes", "index_valuations",
]
