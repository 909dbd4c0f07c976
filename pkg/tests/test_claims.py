import json
from fractions import Fraction

import pytest

from chromind import claims as cl
from chromind.graphs import Family


def find(source, condition):
    return next(c for c in cl.builtin_claims() if c.source == source and c.condition == condition)


def test_table_shape():
    claims = cl.builtin_claims()
    assert cl.theorem_ids() == ["2.1", "2.2", "3.1", "3.2", "4.1", "4.2", "5.1", "5.2"]
    statement = [c for c in claims if c.reading == "statement"]
    assert len(statement) == 6 * 4 * 2 + 2 * 4 * 3
    assert all(c.denominator in cl.ALLOWED_DENOMINATORS for c in claims)


def test_conditions_partition_each_group():
    groups = {}
    for c in cl.builtin_claims():
        groups.setdefault((c.family, c.variant, c.index, c.reading), []).append(c)
    for key, members in groups.items():
        if key[3] != "statement":
            continue
        for n in range(cl.N_MIN, 40):
            assert sum(c.applies(n) for c in members) == 1, (key, n)


@pytest.mark.parametrize("family,variant,index,condition,n,value", [
    (Family.FLOWER, "minus", "m1", "even", 6, 39),
    (Family.BLOSSOM, "minus", "m1", "even", 4, Fraction(145, 2)),
    (Family.CLOSED_SUNFLOWER, "minus", "m2", "mod3=0", 6, 136),
    (Family.CLOSED_SUNFLOWER, "minus", "m4", "mod3=1", 7, Fraction(16 * 49 + 94 * 7 - 92, 18)),
    (Family.BLOSSOM, "plus", "m1", "odd", 5, 155),
])
def test_evaluate(family, variant, index, condition, n, value):
    claim = next(c for c in cl.builtin_claims() if (c.family, c.variant, c.index, c.condition,
                                                     c.reading) == (family, variant, index, condition, "statement"))
    assert claim.evaluate(n) == value


def test_evaluate_condition_mismatch():
    with pytest.raises(cl.ClaimsError):
        find("2.1(i)", "even").evaluate(5)


# formulas written in factored form in the source
FACTORED = {("2.1(iii)", "odd"), ("5.1(iii)@proof", "odd")}


@pytest.mark.parametrize("claim", cl.builtin_claims(), ids=lambda c: f"{c.source}-{c.condition}")
def test_transcription_audit(claim):
    assert claim.source.startswith(claim.theorem + "(")
    for n in range(3, 15):
        if claim.applies(n):
            assert cl.display_value(claim.display, n) == claim.evaluate(n)
    if (claim.source, claim.condition) not in FACTORED:
        assert claim.formula().replace(" ", "") == claim.display.replace(" ", "")


def test_reversal_pairs_share_m3():
    assert find("2.2(iii)", "even").coeffs == find("2.1(iii)", "even").coeffs


def test_label_typo_annotations():
    typo = {c.theorem for c in cl.builtin_claims() if c.note == cl.LABEL_TYPO}
    assert typo == {"4.2"}


def test_parse_errors_list_every_bad_line():
    text = ("flower minus m1 even 9 5 0 1 2.1(i) | 5n+9\n"
            "flower minus m9 even 9 5 0 1 2.1(i) | x\n"
            "flower minus m1 even 9 5 0 7 2.1(i) | x\n"
            "tulip minus m1 even 9 5 0 1 2.1(i) | x\n")
    with pytest.raises(cl.ClaimsError) as err:
        cl.parse_claims(text)
    msg = str(err.value)
    assert "line 2" in msg and "line 3" in msg and "line 4" in msg and "line 1:" not in msg


@pytest.mark.parametrize("args,verdict", [
    (("m1", Fraction(145, 2), "oracle", Fraction(85), Fraction(85), Fraction(85)), "NONINTEGER"),
    (("m4", Fraction(325, 8), "oracle", Fraction(54), Fraction(54), None), "MISMATCH"),
    (("m1", Fraction(29), "oracle", Fraction(29), Fraction(29), Fraction(29)), "MATCH"),
    (("m1", Fraction(29), "oracle", Fraction(29), Fraction(29), Fraction(30)), "MISMATCH"),
    (("m1", Fraction(29), "witness", None, Fraction(29), None), "NO_WITNESS"),
    (("m1", Fraction(29), "oracle", None, None, Fraction(29)), "SKIPPED"),
    (("m2", Fraction(30), "permutation", Fraction(30), Fraction(28), None), "MISMATCH"),
])
def test_assign_verdict(args, verdict):
    assert cl.assign_verdict(*args) == verdict


def test_verify_spot_rows():
    rows = cl.verify(cl.select(["2.1"]), [4])
    assert [r.verdict for r in rows] == ["MATCH"] * 4
    assert rows[0].claimed == rows[0].oracle_value == 29


def test_verify_nonintegers():
    rows = cl.verify([find("5.1(i)", "even")], [4, 6])
    assert [r.verdict for r in rows] == ["NONINTEGER", "NONINTEGER"]
    assert rows[0].oracle_value == 85


def test_match_rows_agree_everywhere():
    for r in cl.verify(cl.select(["2.1", "3.2"]), [4, 5]):
        if r.verdict == "MATCH":
            assert r.claimed == r.oracle_value
            assert r.witness_value in (None, r.claimed)


def test_label_typo_literal_reading_reported():
    rows = cl.verify(cl.select(["4.2"]), [6])
    assert all(r.literal_value is not None for r in rows)


def test_budget_rows_are_skipped(monkeypatch):
    monkeypatch.setenv("CHROMIND_BUDGET_VERTICES", "10")
    rows = cl.verify(cl.select(["2.1"]), [6])
    assert {r.verdict for r in rows} == {"SKIPPED"}
    assert all(r.oracle_value is None and r.witness_value is not None for r in rows)


def test_witness_semantics():
    rows = cl.verify(cl.select(["3.1"]), [4], semantics="witness")
    assert all(r.verdict != "NO_WITNESS" for r in rows)


def test_report_documents():
    rows = cl.verify(cl.select(["5.1"]), [4])
    doc = json.loads(cl.report_json(rows))
    first = doc["rows"][0]
    assert first["claimed"] == {"num": 145, "den": 2}
    assert first["oracle"] == {"num": 85, "den": 1}
    assert doc["summary"]["5.1"]["NONINTEGER"] == 1
    text = cl.report_text(rows)
    assert "Theorem 5.1" in text and "NONINTEGER" in text
    assert "Witnesses for disagreeing rows" in text


def test_report_empty_and_selection_errors():
    with pytest.raises(cl.ClaimsError):
        cl.report_json([])
    with pytest.raises(cl.ClaimsError):
        cl.select(families=[])
    with pytest.raises(cl.ClaimsError):
        cl.select(["9.9"])
    with pytest.raises(cl.ClaimsError):
        cl.verify(semantics="vibes")
