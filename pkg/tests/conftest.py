"""Shared fixtures."""

from pathlib import Path

import pytest

from hoarekit.kernel import Mode
from hoarekit.surface import check_script, parse_script

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def _check(name: str, mode: Mode = Mode.DEFAULT):
    return check_script(parse_script((CORPUS / name).read_text(encoding="utf-8")), mode)


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def check_corpus():
    """Check a corpus file by name, optionally in another mode."""
    return _check


@pytest.fixture(scope="session")
def prop_report():
    return _check("prop.prf")


@pytest.fixture(scope="session")
def peano_report():
    return _check("peano.prf")


@pytest.fixture(scope="session")
def hoare_report():
    return _check("hoare.prf")


@pytest.fixture(scope="session")
def counttob_report():
    return _check("counttob.prf")
