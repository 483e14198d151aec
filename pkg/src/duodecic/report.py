"""
Per-field reports: everything the CLI prints, with a lossless JSON form.

JSON conventions (also in schema/field_report.schema.json): integers that
may exceed 64 bits are decimal strings; a factored integer is
{"sign": 1 | -1, "factors": {"2": 24, ...}}; an element g(theta)/d is
{"num": [c_0, ..., c_11 as strings], "den": "d"}.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .arith import FactoredInt, IntPoly, factor_int, validate_m
from .casedata import case_by_tag
from .combine import IntegralBasis, global_basis, triangularize
from .montes2 import montes_index
from .pure12 import (NotCovered, classify, disc_f, is_power_basis_monogenic, key_data_for_case,
                     p_integral_basis, relevant_primes, vp_index)
from .theta import N, PIntegralBasis, ThetaElement
from .verify import (OrderBasis, is_algebraic_integer, p_maximal_order, sylvester_discriminant,
                     trace_form_disc, verify_p_basis)


@dataclass
class PrimeReport:
    p: int
    case: str | None
    index: int
    source: str  # "table", "formula" or "oracle"
    basis: PIntegralBasis
    verified: bool | None = None
    checks: dict = field(default_factory=dict)


@dataclass
class FieldReport:
    m: int
    irreducible: bool
    Df: FactoredInt
    per_prime: dict[int, PrimeReport]
    dK: FactoredInt
    index: FactoredInt
    global_basis: IntegralBasis
    monogenic: bool | None
    warnings: list[str] = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool | None:
        flags = [r.verified for r in self.per_prime.values()] + [self.checks.get("ok")]
        if any(f is None for f in flags):
            return None
        return all(flags)


def prime_report(m: int, p: int) -> tuple[PrimeReport, list[str]]:
    warnings = []
    try:
        label = classify(m, p)
    except NotCovered:
        o = p_maximal_order(m, p)
        basis = triangularize(o.elements, p)
        warnings.append(f"p = {p}: no closed form; index and basis come from the round-2 oracle only")
        return PrimeReport(p, None, basis.index_valuation, "oracle", basis), warnings
    if label.is_table_case and case_by_tag(label.tag).corrections:
        warnings.append(f"p = {p}: case {label.tag} uses oracle-corrected table rows")
    src = "table" if label.is_table_case else "formula"
    return PrimeReport(p, label.tag, vp_index(m, p), src, p_integral_basis(m, p)), warnings


def build_report(m: int, verify: bool = False) -> FieldReport:
    validate_m(m)
    per, warnings = {}, []
    for p in relevant_primes(m):
        per[p], w = prime_report(m, p)
        warnings += w
    index = FactoredInt.from_map(1, {p: r.index for p, r in per.items()})
    squarefree = all(e == 1 for e in factor_int(m).values())
    rep = FieldReport(
        m=m,
        irreducible=True,
        Df=disc_f(m),
        per_prime=per,
        dK=disc_f(m) / index**2,
        index=index,
        global_basis=global_basis(m, {p: r.basis for p, r in per.items() if r.index}),
        monogenic=is_power_basis_monogenic(m) if squarefree else None,
        warnings=warnings,
    )
    if verify:
        run_checks(rep)
    return rep


def run_checks(rep: FieldReport) -> FieldReport:
    """Fill in the three-engine comparison, basis checks and discriminant identities."""
    m = rep.m
    f = IntPoly([-m] + [0] * (N - 1) + [1])
    for p, pr in rep.per_prime.items():
        br = verify_p_basis(m, p, pr.basis)
        checks = {"oracle": br.oracle_index, "problems": list(br.problems)}
        if pr.source != "oracle":
            checks["closed_form"] = pr.index
        if pr.source == "table":
            checks["montes"] = montes_index(f, p, key_data_for_case(classify(m, p), m))
        values = {v for k, v in checks.items() if k in ("oracle", "closed_form", "montes")}
        checks["agree"] = len(values) == 1
        pr.checks = checks
        pr.verified = checks["agree"] and br.ok
    disc = trace_form_disc(rep.global_basis.elements, m)
    ind = rep.index.value
    rep.checks = {
        "trace_form_disc_equals_dK": disc == rep.dK.value,
        "index_identity": disc * ind**2 == rep.Df.value,
        "resultant_equals_Df": sylvester_discriminant(f) == rep.Df.value,
        "global_integral_closed": not _global_problems(rep),
    }
    rep.checks["ok"] = all(rep.checks.values())
    return rep


def _global_problems(rep: FieldReport) -> list[str]:
    bad = [i for i, e in enumerate(rep.global_basis.elements) if not is_algebraic_integer(e, rep.m)]
    out = [f"global element {i} not integral" for i in bad]
    if not OrderBasis.from_elements(rep.m, rep.global_basis.elements).is_closed():
        out.append("global basis not closed")
    return out


# ---- JSON ----

def factored_to_json(x: FactoredInt) -> dict:
    return {"sign": x.sign, "factors": {str(p): e for p, e in x.factors}}


def factored_from_json(d: dict) -> FactoredInt:
    return FactoredInt.from_map(d["sign"], {int(p): e for p, e in d["factors"].items()})


def element_to_json(e: ThetaElement) -> dict:
    return {"num": [str(e.numer[i]) for i in range(N)], "den": str(e.denom)}


def element_from_json(d: dict) -> ThetaElement:
    return ThetaElement(IntPoly(int(c) for c in d["num"]), int(d["den"]))


def report_to_json(r: FieldReport) -> dict:
    out = {
        "m": str(r.m),
        "irreducible": r.irreducible,
        "Df": factored_to_json(r.Df),
        "dK": factored_to_json(r.dK),
        "index": factored_to_json(r.index),
        "per_prime": {
            str(p): {
                "case": pr.case,
                "index": pr.index,
                "source": pr.source,
                "basis": [element_to_json(e) for e in pr.basis.elements],
                "verified": pr.verified,
                "checks": pr.checks,
            }
            for p, pr in sorted(r.per_prime.items())
        },
        "global_basis": [element_to_json(e) for e in r.global_basis.elements],
        "warnings": list(r.warnings),
        "checks": r.checks,
    }
    if r.monogenic is not None:
        out["monogenic"] = r.monogenic
    return out


def report_from_json(d: dict) -> FieldReport:
    per = {}
    for p, pd in d["per_prime"].items():
        p = int(p)
        per[p] = PrimeReport(p, pd["case"], pd["index"], pd["source"],
                             PIntegralBasis(p, tuple(element_from_json(e) for e in pd["basis"])),
                             pd["verified"], pd["checks"])
    return FieldReport(
        m=int(d["m"]),
        irreducible=d["irreducible"],
        Df=factored_from_json(d["Df"]),
        per_prime=per,
        dK=factored_from_json(d["dK"]),
        index=factored_from_json(d["index"]),
        global_basis=IntegralBasis(tuple(element_from_json(e) for e in d["global_basis"])),
        monogenic=d.get("monogenic"),
        warnings=list(d["warnings"]),
        checks=d["checks"],
    )


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
