import pytest
import sympy

from duodecic.arith import FactoredInt, IntPoly, InvalidInput, factor_int, unit_part, vp
from duodecic.casedata import case_by_tag, data_text, dumps, load_cases, loads, parse_fp, parse_template
from duodecic.pure12 import (NotCovered, classify, disc_f, field_discriminant, is_power_basis_monogenic,
                             p_integral_basis, raw_basis, relevant_primes, vp_index)
from duodecic.verify import is_algebraic_integer, round2_vp_index, verify_p_basis

import corpus

# index column of the two case tables, as printed
PRINTED_INDEX = {
    "A1": 12, "A2": 13, "A3": 15, "A4": 21, "A5": 26, "A6": 28, "A7": 36, "A8": 36,
    "A9": 39, "A10": 50, "A11": 48, "A12": 43, "A13": 56, "A14": 57, "A15": 59,
    "B1": 18, "B2": 15, "B3": 36, "B4": 32, "B5": 36, "B6": 32, "B7": 51, "B8": 48,
}


def test_case_data_round_trips_byte_for_byte():
    text = data_text()
    assert dumps(loads(text)) == text


def test_every_case_is_shipped_once():
    assert [c.tag for c in load_cases()] == list(PRINTED_INDEX)
    assert {c.tag: c.index for c in load_cases()} == PRINTED_INDEX


def test_stored_rows_sum_to_index():
    for c in load_cases():
        assert sum(k for _, k in c.basis) == c.index, c.tag


def test_corrections_keep_printed_text():
    for c in load_cases():
        for corr in c.corrections:
            assert corr["printed"] and corr["reason"]


@pytest.mark.parametrize("text, expected", [
    ("t^6-2", [-2, 0, 0, 0, 0, 0, 1]),
    ("t^2*q1", [0, 0, -2, 0, 0, 0, 0, 0, 1]),
    ("t^4+6*delta", [-6, 0, 0, 0, 1]),
    ("-t+3*mp", [30, -1]),
])
def test_template_parser(text, expected):
    env = {"delta": -1, "mp": 10, "m": 40}
    assert parse_template(text, env, polys={"q1": "t^6-2"}) == IntPoly(expected)


def test_template_parser_matches_sympy():
    t, d = sympy.symbols("t delta")
    for c in load_cases():
        for name, text in c.polys.items():
            ours = parse_template(text, {"delta": -1, "m": 0, "mp": 0}, polys=c.polys)
            expr = sympy.sympify(text.replace("^", "**").replace("'", "_")).subs(d, -1)
            assert ours == IntPoly(reversed(sympy.Poly(expr, t).all_coeffs())), (c.tag, name)


@pytest.mark.parametrize("bad", ["", "t^", "2**t", "x+1", "t^2 q1"])
def test_template_parser_rejects(bad):
    with pytest.raises(ValueError):
        parse_template(bad, {}, polys={"q1": "t"})


def test_parse_fp_reduces_mod_p():
    assert parse_fp("Y-delta", 3, {"delta": 1}).coeffs == (2, 1)


def test_each_case_has_at_least_two_members_with_printed_index():
    for c in load_cases():
        ms = corpus.case_members(c)
        assert len(ms) >= 2, c.tag
        for m in ms:
            label = classify(m, c.p)
            assert label.tag == c.tag
            assert vp_index(m, c.p) == PRINTED_INDEX[c.tag] == round2_vp_index(m, c.p)


def test_delta_follows_unit_part_mod_3():
    assert classify(270, 3).delta == 1
    assert classify(-270, 3).delta == -1
    assert classify(7, 3).delta == 1 and classify(5, 3).delta == -1


def test_classification_is_total_on_small_primes(corpus_ms):
    for m in corpus_ms:
        primes = sorted(set(relevant_primes(m)) | {5, 7, 11, 13})
        for p in primes:
            try:
                label = classify(m, p)
            except NotCovered:
                assert p >= 5 and m % p == 0 and vp(m, p) % p == 0
                continue
            assert label.p == p
            if m % p and p >= 5:
                assert label.tag == "T4"


def test_not_covered_primes_still_have_an_oracle_answer():
    with pytest.raises(NotCovered):
        classify(5**5 * 2, 5)
    assert round2_vp_index(5**5 * 2, 5) == 22


def test_classify_rejects_bad_input():
    with pytest.raises(InvalidInput):
        classify(4096, 2)
    with pytest.raises(InvalidInput):
        classify(6, 4)


@pytest.mark.parametrize("m, p, expected", [
    (17, 2, 9), (5, 2, 6), (3, 2, 0), (7, 2, 0),
    (10, 3, 4), (17, 3, 4), (2, 3, 0), (5, 3, 0),
    (2 * 3**2, 3, (11 + 2 - 1) // 2), (7**5 * 2, 7, (11 * 4 + 1 - 1) // 2),
])
def test_closed_forms(m, p, expected):
    assert vp_index(m, p) == expected == round2_vp_index(m, p)


def test_formula_bases_are_p_maximal():
    for m, p in [(17, 2), (5, 2), (10, 3), (18, 3), (2 * 5**4, 5), (3 * 7**3, 7), (-17, 2), (-10, 3)]:
        assert verify_p_basis(m, p, p_integral_basis(m, p)).ok, (m, p)


def test_raw_basis_elements_are_integral():
    for c in load_cases():
        for m in corpus.case_members(c, 1, 1):
            assert all(is_algebraic_integer(e, m) for e in raw_basis(m, c.p)), (c.tag, m)


def test_b4_stored_row_three_is_theta_cubed_over_three():
    rows = case_by_tag("B4").basis
    assert rows[2] == ["t^2", 1] and rows[3] == ["t^3", 1]


def test_disc_f_value():
    for m in (60, 2352, -7, 6250):
        assert disc_f(m).value == -(2**24) * 3**12 * m**11
    assert str(disc_f(2352)) == "-2^68*3^23*7^22"


def test_field_discriminant_examples():
    assert field_discriminant(60) == FactoredInt.from_map(-1, {2: 16, 3: 23, 5: 11})
    assert field_discriminant(2352) == FactoredInt.from_map(-1, {2: 26, 3: 23, 7: 10})


def test_discriminant_exponent_parity(corpus_ms):
    for m in corpus_ms[:80]:
        df, dk = disc_f(m), field_discriminant(m)
        for p in relevant_primes(m):
            assert (df.exponent(p) - dk.exponent(p)) % 2 == 0


def test_monogenic_predicate_matches_index(reports):
    checked = 0
    for m, rep in reports.items():
        if all(e == 1 for e in factor_int(m).values()):
            assert is_power_basis_monogenic(m) == (rep.index.value == 1), m
            checked += 1
    assert checked > 20


def test_monogenic_predicate_rejects_non_squarefree():
    with pytest.raises(InvalidInput):
        is_power_basis_monogenic(20)


def test_unit_part_carries_sign_into_conditions():
    # m = -4 * 3: m_2 = -3 = 5 mod 8, so A1
    assert unit_part(-12, 2) == -3
    assert classify(-12, 2).tag == "A1"
