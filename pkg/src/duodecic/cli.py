"""Command-line front end: ``duodecic {index,basis,disc,verify,table,batch}``.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import InvalidInput, is_prime, validate_m
from .casedata import load_cases
from .pure12 import NotCovered, classify, relevant_primes, vp_index
from .report import build_report, dumps, element_to_json, factored_to_json, prime_report, report_to_json
from .theta import ThetaElement
from .verify import round2_vp_index

WORKERS_ENV = "DUODECIC_WORKERS"


class CliError(Exception):
    """Invalid input detected after argument parsing."""


# ---- formatting ----

def latex_poly(coeffs) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("\\theta" if i == 1 else f"\\theta^{{{i}}}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    return out + "".join(s + b for s, b in terms[1:])


def latex_element(e: ThetaElement, p: int | None = None) -> str:
    num = latex_poly(e.numer.coeffs)
    if e.denom == 1:
        return num
    den = str(e.denom)
    if p is not None:
        k = 0
        while p ** (k + 1) <= e.denom:
            k += 1
        if p**k == e.denom and k > 1:
            den = f"{p}^{{{k}}}"
    return f"\\frac{{{num}}}{{{den}}}"


def text_element(e: ThetaElement) -> str:
    return str(e).replace("t", "θ")


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _primes(m: int, p: int | None) -> list[int]:
    if p is None:
        return relevant_primes(m)
    if not is_prime(p):
        raise CliError(f"{p} is not prime")
    return [p]


# ---- commands ----

def cmd_index(args) -> int:
    m = validate_m(args.m)
    rows = {}
    for p in _primes(m, args.p):
        try:
            rows[p] = {"value": vp_index(m, p), "case": classify(m, p).tag, "source": "closed-form"}
        except NotCovered:
            print(f"warning: p = {p} not covered by a closed form; using the round-2 oracle", file=sys.stderr)
            rows[p] = {"value": round2_vp_index(m, p), "case": None, "source": "oracle"}
    if args.format == "json":
        _emit(dumps({"m": str(m), "index": {str(p): r for p, r in rows.items()}}), args.output)
    elif args.p is not None:
        _emit(f"{rows[args.p]['value']}\n", args.output)
    else:
        lines = [f"v_{p}(ind) = {r['value']}  [{r['case'] or 'oracle'}]" for p, r in rows.items()]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_basis(args) -> int:
    m = validate_m(args.m)
    if args.glob == (args.p is not None):
        raise CliError("give exactly one of --p or --global")
    if args.glob:
        els, p = build_report(m).global_basis.elements, None
    else:
        p = _primes(m, args.p)[0]
        els = prime_report(m, p)[0].basis.elements
    if args.format == "json":
        _emit(dumps({"m": str(m), "scope": "global" if p is None else str(p),
                     "basis": [element_to_json(e) for e in els]}), args.output)
    elif args.format == "latex":
        _emit("\\left\\{" + ", ".join(latex_element(e, p) for e in els) + "\\right\\}\n", args.output)
    else:
        _emit("".join(f"{text_element(e)}\n" for e in els), args.output)
    return 0


def cmd_disc(args) -> int:
    m = validate_m(args.m)
    r = build_report(m)
    if args.format == "json":
        _emit(dumps({"m": str(m), "Df": factored_to_json(r.Df), "dK": factored_to_json(r.dK),
                     "index": factored_to_json(r.index)}), args.output)
    else:
        _emit(f"D_f = {r.Df}\nind = {r.index}\nd_K = {r.dK}\n", args.output)
    return 0


def cmd_verify(args) -> int:
    m = validate_m(args.m)
    r = build_report(m, verify=True)
    if args.format == "json":
        _emit(dumps(report_to_json(r)), args.output)
    else:
        lines = []
        for p, pr in sorted(r.per_prime.items()):
            c = pr.checks
            engines = ", ".join(f"{k}={c[k]}" for k in ("closed_form", "montes", "oracle") if k in c)
            status = "ok" if pr.verified else "FAIL"
            tag = pr.case or "oracle-only"
            lines.append(f"p = {p} [{tag}]: {engines}: {status}")
            lines += [f"  {msg}" for msg in c["problems"]]
        for k, v in r.checks.items():
            if k != "ok":
                lines.append(f"{k}: {'ok' if v else 'FAIL'}")
        lines += [f"warning: {w}" for w in r.warnings]
        lines.append("all checks passed" if r.verified else "verification FAILED")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if r.verified else 1


_NAME = re.compile(r"^(q|z)(\d)('?)$")


def _latex_name(name: str) -> str:
    mt = _NAME.match(name)
    if mt:
        base, idx, prime = mt.groups()
        return f"{base}{prime}_{idx}(\\theta)" if prime else f"{base}_{idx}(\\theta)"
    return f"{name}(\\theta)"


def _latex_template(text: str, polys: dict) -> str:
    out = []
    for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
        factors = []
        for f in body.split("*"):
            if f in polys:
                factors.append(_latex_name(f))
            elif f == "t":
                factors.append("\\theta")
            elif f.startswith("t^"):
                factors.append(f"\\theta^{{{f[2:]}}}")
            else:
                factors.append({"delta": "\\delta", "mp": "m_p"}.get(f, f))
        out.append(sign + " ".join(factors))
    return "".join(out)


def _latex_condition(text: str) -> str:
    for a, b in (("≢", r"\not\equiv"), ("≡", r"\equiv"), ("δ", r"\delta"), ("±", r"\pm")):
        text = text.replace(a, b)
    return "$" + re.sub(r"\(mod (\d+)\)", r"\\pmod{\1}", text) + "$"


def _row_text(num: str, k: int, p: int, latex: bool, polys: dict) -> str:
    if latex:
        body = _latex_template(num, polys)
        if k == 0:
            return body
        return f"\\frac{{{body}}}{{{p}^{{{k}}}}}" if k > 1 else f"\\frac{{{body}}}{{{p}}}"
    if k == 0:
        return num
    den = f"{p}^{k}" if k > 1 else str(p)
    return f"({num})/{den}" if any(ch in num[1:] for ch in "+-") else f"{num}/{den}"


def render_table(which: int, fmt: str) -> str:
    cases = [c for c in load_cases() if c.table == which]
    p = cases[0].p
    latex = fmt == "latex"
    lines = []
    if latex:
        lines += ["\\begin{tabular}{lllll}", "\\hline",
                  f"Case & $v_{p}(m)$ & Condition & $v_{p}(\\mathrm{{ind}}\\,\\theta)$ & ${p}$-integral basis \\\\",
                  "\\hline"]
    else:
        lines += [f"| Case | v_{p}(m) | Condition | v_{p}(ind) | {p}-integral basis |",
                  "|---|---|---|---|---|"]
    notes = []
    for c in cases:
        mark = "*" if c.corrections else ""
        rows = ", ".join(_row_text(num, k, p, latex, c.polys) for num, k in c.basis)
        defs = [f"{_latex_name(n) if latex else n} = "
                + (_latex_template(t, c.polys) if latex else t)
                for n, t in sorted(c.polys.items())]
        if latex:
            basis = f"$\\{{{rows}\\}}$" + ("; " + "; ".join(f"${d}$" for d in defs) if defs else "")
            lines.append(f"{c.tag}{mark} & {c.v} & {_latex_condition(c.condition_text)} & {c.index} & {basis} \\\\")
        else:
            basis = "{" + rows + "}" + ("; " + "; ".join(defs) if defs else "")
            lines.append(f"| {c.tag}{mark} | {c.v} | {c.condition_text} | {c.index} | {basis} |")
        for corr in c.corrections:
            notes.append(f"{c.tag} rows {corr['row']}: printed {corr['printed']}; {corr['reason']}")
    if latex:
        lines += ["\\hline", "\\end{tabular}"]
    if notes:
        lines.append("")
        lines += [("% " if latex else "") + "* " + n for n in notes]
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    _emit(render_table(args.which, args.format), args.output)
    return 0


def _batch_one(m: int) -> dict:
    return report_to_json(build_report(m, verify=_batch_one.verify))


_batch_one.verify = False


def _init_worker(verify: bool):
    _batch_one.verify = verify


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise CliError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return max(1, min(4, os.cpu_count() or 1))


def read_batch(path: str) -> tuple[list[int], list[dict]]:
    ms, rejected = [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                ms.append(validate_m(int(text)))
            except ValueError as ex:
                rejected.append({"line": lineno, "text": text, "error": str(ex)})
    return ms, rejected


def cmd_batch(args) -> int:
    try:
        ms, rejected = read_batch(args.input)
    except OSError as ex:
        raise CliError(f"cannot read {args.input}: {ex}") from None
    n = worker_count()
    if n == 1 or len(ms) < 2:
        _init_worker(args.verify)
        reports = [_batch_one(m) for m in ms]
    else:
        with ProcessPoolExecutor(max_workers=n, initializer=_init_worker, initargs=(args.verify,)) as pool:
            reports = list(pool.map(_batch_one, ms))  # map keeps input order
    try:
        _emit(dumps(reports), args.output)
    except OSError as ex:
        raise CliError(f"cannot write {args.output}: {ex}") from None
    for r in rejected:
        print(f"rejected line {r['line']} ({r['text']}): {r['error']}", file=sys.stderr)
    print(f"{len(reports)} processed, {len(rejected)} rejected", file=sys.stderr)
    failed = args.verify and any(not all(pp["verified"] for pp in r["per_prime"].values())
                                 or not r["checks"].get("ok") for r in reports)
    return 1 if failed else 0


# ---- parser ----

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="duodecic",
                                 description="Integral bases and discriminants of Q(theta), theta^12 = m.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--output", help="write to this file instead of stdout")

    sp = sub.add_parser("index", help="v_p of the index of Z[theta]")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", type=int)
    common(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("basis", help="p-integral or global integral basis")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--global", dest="glob", action="store_true")
    common(sp, ("text", "json", "latex"))
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("disc", help="polynomial and field discriminants")
    sp.add_argument("--m", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_disc)

    sp = sub.add_parser("verify", help="cross-check every engine; exit 1 on failure")
    sp.add_argument("--m", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="regenerate a case table from the shipped data")
    sp.add_argument("--which", type=int, choices=(1, 2), required=True)
    common(sp, ("markdown", "latex"))
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("batch", help="JSON reports for a file of m values")
    sp.add_argument("--input", required=True)
    sp.add_argument("--verify", action="store_true", help="also run all checks per m")
    common(sp, ("json",))
    sp.set_defaults(func=cmd_batch)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, CliError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
