"""Prompt-templated LLM simplification with a pluggable chat client.

Five fixed prompt prefixes drive the artificial-corpus builds. The offline
mock client is byte-deterministic so whole-pipeline tests never touch the
network; the HTTP client speaks the standard chat-completion wire format
(configurable base URL and path, bearer token from ``LLM_API_KEY``).
"""

from __future__ import annotations

import json
import os
import threading
import time
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyCorpus, EmptyInput, LlmUnavailable, TransientLlmError

DEFAULT_MODEL_ID = "gpt-3.5-turbo"


@dataclass(frozen=True)
class PromptTemplate:
    id: str
    prefix: str


PROMPTS = {
    "simplified": PromptTemplate("simplified", "Simplify the following text: "),
    "easier": PromptTemplate("easier", "Make the following text easier to understand: "),
    "esl": PromptTemplate(
        "esl",
        "Change the following text to be easier to understand for someone "
        "who is a non-native English speaker: ",
    ),
    "older": PromptTemplate(
        "older",
        "Change the following text to be easier to understand for someone who is older: ",
    ),
    "read_aloud": PromptTemplate(
        "read_aloud",
        "Make the following text easier to understand when read out loud: ",
    ),
}


@dataclass(frozen=True)
class LlmJobResult:
    input: str
    prompt_id: str
    output: str
    model_id: str
    latency_ms: float
    attempts: int

    def as_dict(self) -> dict:
        return {
            "input": self.input,
            "prompt_id": self.prompt_id,
            "output": self.output,
            "model_id": self.model_id,
            "latency_ms": self.latency_ms,
            "attempts": self.attempts,
        }


@dataclass
class RetryPolicy:
    max_attempts: int = 3
    backoff_base_s: float = 0.1
    backoff_factor: float = 2.0
    sleep: object = time.sleep  # injectable for tests

    def wait(self, attempt: int) -> None:
        self.sleep(self.backoff_base_s * self.backoff_factor ** (attempt - 1))


class RateLimiter:
    """Process-wide minimum interval between request starts."""

    def __init__(self, min_interval_s: float = 0.0):
        self.min_interval_s = min_interval_s
        self._lock = threading.Lock()
        self._last = 0.0

    def acquire(self) -> None:
        if self.min_interval_s <= 0:
            return
        with self._lock:
            now = time.monotonic()
            wait = self._last + self.min_interval_s - now
            if wait > 0:
                time.sleep(wait)
                now = time.monotonic()
            self._last = now


class MockChatClient:
    """Deterministic offline stand-in for a chat-completion endpoint.

    Contract: the message's prompt prefix is recognized and stripped; the
    reply is ``[<prompt_id>] `` followed by every other word of the payload
    (a crude but deterministic shortening, so simplified corpora measurably
    drop in word count).
    """

    model_id = "mock-simplifier"

    def complete(self, message: str) -> str:
        prompt_id = "unknown"
        payload = message
        for template in PROMPTS.values():
            if message.startswith(template.prefix):
                prompt_id = template.id
                payload = message[len(template.prefix):]
                break
        words = payload.split()
        return f"[{prompt_id}] " + " ".join(words[::2])


class HttpChatClient:
    """Standard HTTPS chat-completion client (single-turn, temperature 0)."""

    def __init__(
        self,
        base_url: str,
        path: str = "/v1/chat/completions",
        model_id: str = DEFAULT_MODEL_ID,
        api_key: str | None = None,
        temperature: float = 0.0,
        timeout_s: float = 60.0,
    ):
        self.base_url = base_url.rstrip("/")
        self.path = path
        self.model_id = model_id
        self.api_key = api_key if api_key is not None else os.environ.get("LLM_API_KEY", "")
        self.temperature = temperature
        self.timeout_s = timeout_s

    def complete(self, message: str) -> str:
        import requests

        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        body = {
            "model": self.model_id,
            "messages": [{"role": "user", "content": message}],
            "temperature": self.temperature,
        }
        try:
            resp = requests.post(
                self.base_url + self.path, json=body, headers=headers, timeout=self.timeout_s
            )
        except requests.RequestException as exc:
            raise TransientLlmError(str(exc)) from exc
        if resp.status_code == 429 or resp.status_code >= 500:
            raise TransientLlmError(f"HTTP {resp.status_code}")
        if resp.status_code != 200:
            raise LlmUnavailable(f"HTTP {resp.status_code}: {resp.text[:200]}")
        data = resp.json()
        try:
            return data["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as exc:
            raise LlmUnavailable(f"malformed response: {data!r:.200}") from exc


def simplify_one(input_text: str, prompt_id: str, client, policy: RetryPolicy | None = None) -> LlmJobResult:
    """Send prefix + input as one user message, retrying transient failures."""
    if not input_text or not input_text.strip():
        raise EmptyInput("input text is empty")
    template = PROMPTS[prompt_id]
    policy = policy or RetryPolicy()
    message = template.prefix + input_text
    started = time.monotonic()
    last_error = None
    for attempt in range(1, policy.max_attempts + 1):
        try:
            output = client.complete(message)
            return LlmJobResult(
                input=input_text,
                prompt_id=prompt_id,
                output=output,
                model_id=getattr(client, "model_id", "unknown"),
                latency_ms=(time.monotonic() - started) * 1000.0,
                attempts=attempt,
            )
        except TransientLlmError as exc:
            last_error = exc
            if attempt < policy.max_attempts:
                policy.wait(attempt)
    raise LlmUnavailable(
        f"gave up after {policy.max_attempts} attempts: {last_error}"
    ) from last_error


def build_artificial_corpus(
    snippet_dir,
    prompt_id: str,
    client,
    out_dir,
    concurrency: int = 4,
    policy: RetryPolicy | None = None,
    rate_limiter: RateLimiter | None = None,
) -> list[dict]:
    """Simplify every snippet file into a mirrored output corpus.

    Writes one output document per input (same file name) plus a
    ``manifest.jsonl`` recording model, prompt, and per-file status. Partial
    failures are recorded, not fatal.
    """
    snippet_dir = Path(snippet_dir)
    out_dir = Path(out_dir)
    paths = sorted(p for p in snippet_dir.glob("*") if p.is_file())
    if not paths:
        raise EmptyCorpus(f"no snippets in {snippet_dir}")
    out_dir.mkdir(parents=True, exist_ok=True)
    limiter = rate_limiter or RateLimiter()

    def run_one(path: Path) -> dict:
        limiter.acquire()
        record = {
            "file": path.name,
            "prompt_id": prompt_id,
            "model_id": getattr(client, "model_id", "unknown"),
        }
        try:
            result = simplify_one(path.read_text(encoding="utf-8"), prompt_id, client, policy)
        except Exception as exc:  # per-file failure must not kill the build
            record.update(status="error", error=f"{type(exc).__name__}: {exc}")
            return record
        (out_dir / path.name).write_text(result.output, encoding="utf-8")
        record.update(status="ok", attempts=result.attempts)
        return record

    if concurrency > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=concurrency) as pool:
            manifest = list(pool.map(run_one, paths))
    else:
        manifest = [run_one(p) for p in paths]

    with open(out_dir / "manifest.jsonl", "w", encoding="utf-8") as fh:
        for record in manifest:  # already in sorted file order
            fh.write(json.dumps(record, sort_keys=True) + "\n")
    return manifest
