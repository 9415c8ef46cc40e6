import json
from pathlib import Path

import pytest

from defectscope.classify import scan

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus" / "default.json"


@pytest.fixture(scope="session")
def corpus_scan():
    """One full scan of the shipped corpus, shared by the corpus-wide property tests."""
    return scan(CORPUS)


@pytest.fixture(scope="session")
def corpus_reports(corpus_scan):
    return [j["report"] for j in corpus_scan["jobs"] if "report" in j]


def load_corpus():
    return json.loads(CORPUS.read_text())
