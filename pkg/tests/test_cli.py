import logging

import pytest
from click.testing import CliRunner

from hoarekit import __version__
from hoarekit.cli import EXIT_FAILED, EXIT_INVALID, EXIT_OK, cli


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    logger = logging.getLogger("hoarekit")
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, [str(arg) for arg in args])


def test_version(runner):
    result = invoke(runner, "--version")
    assert result.exit_code == EXIT_OK
    assert __version__ in result.output


def test_check_prints_one_line_per_item(runner, corpus_dir):
    result = invoke(runner, "check", corpus_dir / "prop.prf")
    assert result.exit_code == EXIT_OK
    assert result.output.splitlines() == [
        "⊢ A∧B→B∧A ✓",
        "⊢ A∨B→A∨¬¬B ✓",
        "⊢ A→A∧B ✓",
        "⊢ A∨B→A∨¬¬B ✓",
    ]


def test_check_ascii(runner, corpus_dir):
    result = invoke(runner, "check", "--print", "ascii", corpus_dir / "peano.prf")
    assert result.exit_code == EXIT_OK
    assert result.output.splitlines()[-1] == "|- forall C:forall D:(D+SC=SD+C) ✓"


def test_check_strict_mode_fails_one_item(runner, corpus_dir):
    result = invoke(runner, "check", "--mode", "strict", corpus_dir / "prop.prf")
    assert result.exit_code == EXIT_FAILED
    assert "✗ sep_under_imp:" in result.output
    assert "⊢ A∧B→B∧A ✓" in result.output


def test_check_many_files_in_order(runner, corpus_dir):
    names = ["prop.prf", "peano.prf", "hoare.prf", "counttob.prf"]
    result = invoke(runner, "check", "--workers", 3, *(corpus_dir / name for name in names))
    assert result.exit_code == EXIT_OK
    lines = result.output.splitlines()
    assert lines[0] == "⊢ A∧B→B∧A ✓"
    assert lines[4] == "⊢ ∀C:(∀D:(D+SC=SD+C)→∀D:(D+SSC=SD+SC)) ✓"
    assert lines[-1] == "{∃C:(0+C=B)} A := 0; while (¬A=B) do {A := SA;}; {¬¬A=B∧∃C:(A+C=B)} ✓"


def test_check_missing_file(runner, tmp_path):
    result = invoke(runner, "check", tmp_path / "missing.prf")
    assert result.exit_code == EXIT_INVALID


def test_check_syntax_error(runner, tmp_path):
    path = tmp_path / "broken.prf"
    path.write_text("proof p {\n  a = axiom2(A)\n}\n", encoding="utf-8")
    result = invoke(runner, "check", path)
    assert result.exit_code == EXIT_INVALID
    assert "line 3, column 1" in result.output


def test_run_prints_final_context(runner, corpus_dir):
    result = invoke(runner, "run", corpus_dir / "counttob.imp", "--set", "B=3")
    assert result.exit_code == EXIT_OK
    assert result.output == "A=3\nB=3\n"


def test_run_assert_ok(runner, corpus_dir):
    result = invoke(runner, "run", corpus_dir / "assert_ok.imp", "--set", "B=5")
    assert result.exit_code == EXIT_OK
    assert result.output == "A=5\nB=5\n"


def test_run_assert_precondition(runner, corpus_dir):
    result = invoke(runner, "run", corpus_dir / "assert_bad.imp", "--set", "B=5")
    assert result.exit_code == EXIT_FAILED
    assert "Assert: Pre-condition does not match!" in result.output


def test_run_assert_postcondition(runner, corpus_dir):
    result = invoke(runner, "run", corpus_dir / "assert_bad.imp", "--set", "B=4")
    assert result.exit_code == EXIT_FAILED
    assert "Assert: Post-condition does not match!" in result.output


def test_run_assert_option(runner, corpus_dir):
    path = corpus_dir / "counttob.imp"
    result = invoke(runner, "run", path, "--set", "B=2", "--assert", "B = SS0", "A = B")
    assert result.output == "A=2\nB=2\n"
    result = invoke(runner, "run", path, "--set", "B=2", "--assert", "B = SS0", "A = 0")
    assert result.exit_code == EXIT_FAILED
    assert "Post-condition" in result.output


def test_run_budget(runner, corpus_dir):
    result = invoke(runner, "run", corpus_dir / "loop.imp", "--max-steps", 100)
    assert result.exit_code == EXIT_FAILED
    assert "Step budget exhausted after 100 steps" in result.output


def test_run_unbound_variable(runner, corpus_dir):
    result = invoke(runner, "run", corpus_dir / "counttob.imp")
    assert result.exit_code == EXIT_FAILED
    assert "Element not found: B" in result.output


@pytest.mark.parametrize("binding", ["B", "B=-1", "B=x", "SB=1"])
def test_run_bad_binding(runner, corpus_dir, binding):
    result = invoke(runner, "run", corpus_dir / "counttob.imp", "--set", binding)
    assert result.exit_code == EXIT_INVALID


def test_run_syntax_error(runner, tmp_path):
    path = tmp_path / "broken.imp"
    path.write_text("A := ;", encoding="utf-8")
    result = invoke(runner, "run", path)
    assert result.exit_code == EXIT_INVALID


def test_run_long_program(runner, tmp_path):
    path = tmp_path / "long.imp"
    path.write_text("A := 0;\n" + "A := S(A);\n" * 1500, encoding="utf-8")
    result = invoke(runner, "run", path)
    assert result.exit_code == EXIT_OK
    assert result.output == "A=1500\n"


def test_check_large_numeral_in_qed(runner, tmp_path):
    path = tmp_path / "big.prf"
    path.write_text(
        "proof big {\n"
        "    y = fantasy {A = 1200} as h {\n"
        "        return h\n"
        "    }\n"
        "    qed y : {A = 1200 -> A = 1200}\n"
        "}\n",
        encoding="utf-8")
    result = invoke(runner, "check", path)
    assert result.exit_code == EXIT_OK
    line = result.output.strip()
    assert line.endswith(" ✓")
    assert line.count("S") == 2400


def test_run_too_deeply_nested(runner, tmp_path):
    path = tmp_path / "nested.imp"
    path.write_text("A := " + "(" * 3000 + "0" + ")" * 3000 + ";", encoding="utf-8")
    result = invoke(runner, "run", path)
    assert result.exit_code == EXIT_INVALID
    assert "nested too deeply" in result.output


def test_fmt_formula_lines(runner, tmp_path):
    path = tmp_path / "formulas.txt"
    path.write_text("# formulas\n!(A=0)&0=0\nS(A+0)\n", encoding="utf-8")
    result = invoke(runner, "fmt", path)
    assert result.exit_code == EXIT_OK
    assert result.output == "¬A=0∧0=0\nS(A+0)\n"
    result = invoke(runner, "fmt", "--style", "ascii", path)
    assert result.output == "!A=0&0=0\nS(A+0)\n"


def test_fmt_reports_the_failing_line(runner, tmp_path):
    path = tmp_path / "formulas.txt"
    path.write_text("A = 0\nA = \n", encoding="utf-8")
    result = invoke(runner, "fmt", path)
    assert result.exit_code == EXIT_INVALID
    assert "line 2" in result.output


def test_fmt_program_is_idempotent(runner, corpus_dir, tmp_path):
    first = invoke(runner, "fmt", corpus_dir / "counttob.imp")
    assert first.output == "A := 0; while (¬A=B) do {A := SA;};\n"
    path = tmp_path / "again.imp"
    path.write_text(first.output, encoding="utf-8")
    assert invoke(runner, "fmt", path).output == first.output


@pytest.mark.parametrize("name", ["prop.prf", "peano.prf", "hoare.prf", "counttob.prf"])
def test_fmt_script_is_idempotent(runner, corpus_dir, tmp_path, name):
    first = invoke(runner, "fmt", corpus_dir / name)
    assert first.exit_code == EXIT_OK
    path = tmp_path / name
    path.write_text(first.output, encoding="utf-8")
    second = invoke(runner, "fmt", path)
    assert second.output == first.output
    assert invoke(runner, "check", path).exit_code == EXIT_OK
