import socket

import pytest

from textbench.config import WorkbenchConfig, bundle_dir_paths
from textbench.tagging import RuleTagger

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


@pytest.fixture(autouse=True)
def no_network(monkeypatch):
    """The suite must never touch the network (the mock LLM client is used
    everywhere); any attempted socket connect fails loudly."""

    def guard(*_args, **_kwargs):
        raise RuntimeError("network access attempted during tests")

    monkeypatch.setattr(socket.socket, "connect", guard)
    monkeypatch.setattr(socket, "create_connection", guard)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def lexicon_paths() -> dict:
    return bundle_dir_paths(FIXTURES / "lexicon")


@pytest.fixture(scope="session")
def bundle(lexicon_paths):
    return WorkbenchConfig(lexicon_paths=lexicon_paths).load_lexicon()


@pytest.fixture(scope="session")
def tagger():
    return RuleTagger.load()


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return FIXTURES / "corpus"


@pytest.fixture(scope="session")
def doc1_text(corpus_dir) -> str:
    return (corpus_dir / "doc01.txt").read_text(encoding="utf-8")
