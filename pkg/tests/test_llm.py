import json

import pytest

from textbench.compare import profile_corpus
from textbench.errors import EmptyCorpus, EmptyInput, LlmUnavailable, TransientLlmError
from textbench.llm import (
    PROMPTS,
    MockChatClient,
    RetryPolicy,
    build_artificial_corpus,
    simplify_one,
)

EXPECTED_PREFIXES = {
    "simplified": "Simplify the following text: ",
    "easier": "Make the following text easier to understand: ",
    "esl": (
        "Change the following text to be easier to understand for someone "
        "who is a non-native English speaker: "
    ),
    "older": "Change the following text to be easier to understand for someone who is older: ",
    "read_aloud": "Make the following text easier to understand when read out loud: ",
}


class FlakyClient:
    model_id = "flaky"

    def __init__(self, failures, inner=None):
        self.failures = failures
        self.inner = inner or MockChatClient()

    def complete(self, message):
        if self.failures > 0:
            self.failures -= 1
            raise TransientLlmError("synthetic failure")
        return self.inner.complete(message)


def no_sleep(_s):
    pass


def test_prompt_prefixes_byte_identical():
    assert set(PROMPTS) == set(EXPECTED_PREFIXES)
    for pid, prefix in EXPECTED_PREFIXES.items():
        assert PROMPTS[pid].prefix.encode("utf-8") == prefix.encode("utf-8")


def test_prompts_match_frozen_constants(fixtures_dir):
    frozen = json.loads((fixtures_dir / "prompt_prefixes.json").read_text(encoding="utf-8"))
    assert frozen == {pid: t.prefix for pid, t in PROMPTS.items()}


def test_mock_contract():
    client = MockChatClient()
    out = client.complete("Simplify the following text: hello there my friend")
    assert out == "[simplified] hello my"


def test_simplify_one_records_result():
    result = simplify_one("hello there", "simplified", MockChatClient())
    assert result.output == "[simplified] hello"
    assert result.prompt_id == "simplified"
    assert result.model_id == "mock-simplifier"
    assert result.attempts == 1
    assert result.latency_ms >= 0


def test_empty_input_rejected():
    with pytest.raises(EmptyInput):
        simplify_one("   ", "simplified", MockChatClient())


def test_flaky_client_retries_then_succeeds():
    policy = RetryPolicy(max_attempts=3, sleep=no_sleep)
    result = simplify_one("hello", "easier", FlakyClient(failures=2), policy)
    assert result.attempts == 3


def test_retries_exhausted_raises():
    policy = RetryPolicy(max_attempts=3, sleep=no_sleep)
    with pytest.raises(LlmUnavailable):
        simplify_one("hello", "easier", FlakyClient(failures=5), policy)


def test_build_corpus_mirrors_files(tmp_path, fixtures_dir):
    out = tmp_path / "out"
    manifest = build_artificial_corpus(fixtures_dir / "snippets", "simplified", MockChatClient(), out)
    assert [r["file"] for r in manifest] == ["snippet01.txt", "snippet02.txt", "snippet03.txt"]
    assert all(r["status"] == "ok" for r in manifest)
    for record in manifest:
        assert (out / record["file"]).exists()
    lines = (out / "manifest.jsonl").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3
    assert all(json.loads(line)["model_id"] == "mock-simplifier" for line in lines)


def test_build_corpus_records_partial_failure(tmp_path):
    snippets = tmp_path / "in"
    snippets.mkdir()
    (snippets / "a.txt").write_text("some words here", encoding="utf-8")
    (snippets / "b.txt").write_text("   ", encoding="utf-8")  # EmptyInput
    (snippets / "c.txt").write_text("more words here", encoding="utf-8")
    out = tmp_path / "out"
    manifest = build_artificial_corpus(snippets, "esl", MockChatClient(), out)
    statuses = {r["file"]: r["status"] for r in manifest}
    assert statuses == {"a.txt": "ok", "b.txt": "error", "c.txt": "ok"}
    assert not (out / "b.txt").exists()


def test_build_corpus_empty_dir(tmp_path):
    empty = tmp_path / "none"
    empty.mkdir()
    with pytest.raises(EmptyCorpus):
        build_artificial_corpus(empty, "older", MockChatClient(), tmp_path / "out")


def test_mock_build_byte_deterministic(tmp_path, fixtures_dir):
    out1, out2 = tmp_path / "o1", tmp_path / "o2"
    build_artificial_corpus(fixtures_dir / "snippets", "read_aloud", MockChatClient(), out1)
    build_artificial_corpus(fixtures_dir / "snippets", "read_aloud", MockChatClient(), out2, concurrency=1)
    for path1 in sorted(out1.iterdir()):
        path2 = out2 / path1.name
        assert path1.read_bytes() == path2.read_bytes()


def test_pipeline_mock_shortens_word_count(tmp_path, fixtures_dir, bundle):
    out = tmp_path / "out"
    build_artificial_corpus(fixtures_dir / "snippets", "simplified", MockChatClient(), out)
    (out / "manifest.jsonl").unlink()  # keep only documents for profiling
    original = profile_corpus(fixtures_dir / "snippets", bundle)
    simplified = profile_corpus(out, bundle)
    assert simplified.mean_vector.word_count < original.mean_vector.word_count
