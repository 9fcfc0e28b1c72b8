import logging

from hoarekit.lint import (
    CAPTURED_SUBSTITUTION, QUANTIFIED_READ, SHADOWED_SUBSTITUTION, assigned_vars, binders,
    check_program, check_substitution,
)
from hoarekit.surface import check_script, parse_formula, parse_program, parse_script
from hoarekit.syntax import Var


def test_binders_collects_nested_quantifiers():
    assert binders(parse_formula("forall A: (A = 0) & !exists B: (B = 0)")) == {"A", "B"}


def test_shadowed_substitution():
    f = parse_formula("A = 0 & forall A: (A = A)")
    codes = [finding.code for finding in check_substitution("h_assign", f, "A", Var("B"))]
    assert codes == [SHADOWED_SUBSTITUTION]


def test_captured_substitution():
    f = parse_formula("exists C: (A + C = B)")
    codes = [finding.code for finding in check_substitution("h_assign", f, "A", Var("C"))]
    assert codes == [CAPTURED_SUBSTITUTION]


def test_clean_substitution():
    assert check_substitution("spec", parse_formula("A + 0 = A"), "A", Var("D")) == []


def test_assigned_vars():
    program = parse_program("A := 0; if (A = B) { C := 1; } else { while (0 = 0) { D := 2; } }")
    assert assigned_vars(program) == {"A", "C", "D"}


def test_quantified_read(caplog):
    program = parse_program("A := 0; while (!exists C: (A + C = B)) { A := S(A); }")
    with caplog.at_level(logging.WARNING, logger="hoarekit"):
        assert check_program(program) == []
        findings = check_program(program, supplied=["C"])
    assert [finding.code for finding in findings] == [QUANTIFIED_READ]
    assert "quantified variable C" in caplog.text


def test_script_check_collects_findings():
    report = check_script(parse_script("""
    triple t {
        x = h_assign(A, `C`, {exists C: (A + C = B)})
        qed x
    }
    """))
    assert report.ok
    assert [finding.code for finding in report.items[0].findings] == [CAPTURED_SUBSTITUTION]


def test_corpus_has_no_findings(corpus_dir):
    for path in sorted(corpus_dir.glob("*.prf")):
        report = check_script(parse_script(path.read_text(encoding="utf-8")))
        assert all(not item.findings for item in report.items), path.name
