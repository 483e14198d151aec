"""
Loader, serializer and template evaluator for the shipped case tables.

Schema of ``data/cases.json`` (a JSON object):

    {"format": 1, "cases": [case, ...]}

Each case:

    tag             "A1" ... "A15", "B1" ... "B8"
    table           1 for p = 2, 2 for p = 3
    p               the prime
    v               v_p(m)
    modulus         the congruence modulus for m_p (the p-free part of m, sign kept)
    residues        accepted values of m_p mod modulus
    condition_text  human-readable congruence
    index           v_p of the index [O_K : Z[theta]]
    polys           named polynomials in t used by the rows, e.g. {"q1": "t^6-2"}
    basis           12 rows [numerator, k]: the element numerator(theta) / p^k
    types           second-order data {"h", "e", "psi", "phi"}; slope is -h/e,
                    psi is a polynomial in Y over F_p, phi a polynomial in x
    corrections     list of {"row", "printed", "reason"} where the stored
                    row differs from the printed one
    note            free text

Templates are sums of products of integers, t^k, the symbols m, mp
(m_p) and delta, and names from ``polys``.  Example: "t^8+3*delta*t^4+9",
"t^2*q1".
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cache
from importlib import resources

from .arith import FpPoly, IntPoly

_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")
_FACTOR = re.compile(r"^(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)(?:\^(\d+))?)$")


def parse_template(text: str, env: dict | None = None, var: str = "t",
                   polys: dict | None = None) -> IntPoly:
    """Evaluate a template to an IntPoly in ``var``.

    env maps scalar symbols (m, mp, delta) to integers; polys maps names
    to further templates.
    """
    env = env or {}
    polys = polys or {}
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty template")
    total = IntPoly(())
    pos = 0
    for mt in _TERM.finditer(text):
        if mt.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        pos = mt.end()
        sign, body = mt.groups()
        term = IntPoly.const(-1 if sign == "-" else 1)
        for tok in body.split("*"):
            fm = _FACTOR.match(tok)
            if not fm:
                raise ValueError(f"bad factor {tok!r} in {text!r}")
            num, name, exp = fm.groups()
            k = int(exp) if exp else 1
            if num is not None:
                f = IntPoly.const(int(num))
            elif name == var:
                f = IntPoly.x_pow(k)
                k = 1
            elif name in env:
                f = IntPoly.const(env[name])
            elif name in polys:
                f = parse_template(polys[name], env, var, polys)
            else:
                raise ValueError(f"unknown symbol {name!r} in {text!r}")
            term = term * f**k
        total = total + term
    if pos != len(text):
        raise ValueError(f"cannot parse {text!r}")
    return total


def parse_fp(text: str, p: int, env: dict | None = None, var: str = "Y") -> FpPoly:
    return FpPoly(p, parse_template(text, env, var).coeffs)


@dataclass(frozen=True)
class CaseEntry:
    raw: dict

    def __getattr__(self, key):
        try:
            return self.raw[key]
        except KeyError:
            raise AttributeError(key) from None

    def matches(self, p: int, v: int, mp: int) -> bool:
        return (p, v) == (self.p, self.v) and mp % self.modulus in self.residues

    def basis_rows(self, env: dict) -> list[tuple[IntPoly, int]]:
        return [(parse_template(num, env, polys=self.polys), k) for num, k in self.basis]


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)


def data_text() -> str:
    return resources.files("duodecic").joinpath("data/cases.json").read_text(encoding="utf-8")


@cache
def load_cases() -> tuple[CaseEntry, ...]:
    doc = loads(data_text())
    if doc.get("format") != 1:
        raise ValueError("unsupported case-table format")
    return tuple(CaseEntry(c) for c in doc["cases"])


def case_by_tag(tag: str) -> CaseEntry:
    for c in load_cases():
        if c.tag == tag:
            return c
    raise KeyError(tag)
