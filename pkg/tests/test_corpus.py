import pytest

from quiverres.corpus import (
    MATCH,
    PAPER_DIFF,
    load_golden,
    load_job,
    parse_term,
    run_corpus,
    run_example,
)


@pytest.fixture(scope="module")
def report():
    return run_corpus()


def diffs_of(report, name, kind=None):
    ex = next(e for e in report.examples if e.name == name)
    return [d for d in ex.diffs if d.kind == kind] if kind else ex.diffs


def test_parse_term_variants():
    job = load_job("e6")
    twist, w, issues = parse_term(r"V_1\otimes\wedge^3V_2^* \otimes \wedge^4V_3\otimes\wedge^2V_6^* \otimes A(-9)", job)
    assert twist == 9 and not issues
    assert w == ((1,), (-1, -1, -1), (1, 1, 1, 1), (0, 0, 0), (0,), (-1, -1))
    _, w2, issues = parse_term(r"V-5\wedge^2V_6^*\otimes A(-15)", job)
    assert any("missing" in i for i in issues)
    assert w2[4] == (1,) and w2[5] == (-1, -1)
    assert parse_term("A", job)[0] is None
    assert parse_term(r"V_1 \otimes A(-1) A(-2)", job)[1] is None


def test_wedge_one_equals_plain_vertex():
    job = load_job("d5")
    a = parse_term(r"\wedge^1V_4\otimes \wedge^2V_5^* \otimes A(-3)", job)[1]
    b = parse_term(r"V_4\otimes \wedge^2V_5^* \otimes A(-3)", job)[1]
    assert a == b


def test_golden_files_load():
    for name, count in (("a4", 12), ("d5", 20), ("e6", 18)):
        g = load_golden(name)
        assert len(g.terms) == count
        assert g.header.startswith("Sym(")


def test_invariants_pass(report):
    assert report.ok
    for e in report.examples:
        assert e.header_match
        assert e.verdict.normal_rational
        assert e.checks["thm33"]["violations"] == 0
        assert e.checks["hilbert"]["ok"]
        assert e.checks["bott_formula"]["mismatches"] == 0


def test_a4_flags(report):
    no_match = diffs_of(report, "a4", "no-match")
    assert {d.golden.twist for d in no_match} == {17, 24}
    top = next(d for d in no_match if d.golden.twist == 24)
    assert top.computed.table_twist == 24 and top.computed.degree == 4
    assert any("unbalanced" in n for n in top.notes)
    dup = diffs_of(report, "a4", "duplicate")
    assert len(dup) == 1 and dup[0].golden.degree == 2 and dup[0].computed.degree == 3
    absent = diffs_of(report, "a4", "absent-from-table")
    assert len(absent) == 1 and absent[0].computed.table_twist == 10
    assert sum(d.status == MATCH for d in diffs_of(report, "a4")) == 9


def test_d5_flags(report):
    kinds = sorted((d.kind or "") for d in diffs_of(report, "d5") if d.status == PAPER_DIFF)
    assert kinds == ["no-match", "typo"]
    top = diffs_of(report, "d5", "no-match")[0]
    assert top.golden.degree == 4 and top.computed.table_twist == 24


def test_e6_flags(report):
    typos = diffs_of(report, "e6", "typo")
    assert len(typos) == 2 and all(d.computed is not None for d in typos)
    f3 = [d for d in diffs_of(report, "e6") if d.golden and d.golden.degree == 3]
    assert len(f3) == 3 and all(d.status == MATCH for d in f3)


def test_every_computed_term_is_accounted_for(report):
    for e in report.examples:
        seen = [d.computed for d in e.diffs if d.computed is not None and d.kind != "duplicate"]
        assert sorted(t.key() for t in seen) == sorted(t.key() for t in e.resolution.terms)


def test_report_serialises(report):
    data = report.to_dict()
    assert data["ok"] is True
    assert [e["name"] for e in data["examples"]] == ["a4", "d5", "e6"]
    text = report.text()
    assert text.endswith("invariants: ok\n")
    assert "PAPER-DIFF [duplicate]" in text


def test_parallel_run_matches():
    serial, parallel = run_example("e6"), run_example("e6", jobs=2)
    assert serial.to_dict() == parallel.to_dict()
