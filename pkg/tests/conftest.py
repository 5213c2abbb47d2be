from pathlib import Path

import pytest

from alt_readability import load_lexicon

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"
TEST_DATA = Path(__file__).resolve().parent / "data"


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon()


@pytest.fixture(scope="session")
def tractatus_text():
    # newline="" keeps the carriage returns the fixture was captured with
    with open(FIXTURES / "tractatus.txt", encoding="utf-8", newline="") as fh:
        return fh.read()


@pytest.fixture(scope="session")
def brasil_text():
    return (TEST_DATA / "brasil_etimologia.txt").read_text(encoding="utf-8")
