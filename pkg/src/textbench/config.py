"""Workbench configuration: lexicon paths, data directory, server and LLM
settings. Loaded from a TOML file (``WORKBENCH_CONFIG`` environment variable
or an explicit path); every table and key is optional.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .lexicon import DEFAULT_REFERENCE_MESH_DEPTH, LexiconBundle, load_bundle

LEXICON_TABLES = ("word_freq", "grammar", "concepts", "semtypes", "mesh", "thesaurus")

# conventional file names inside a bundle directory
BUNDLE_FILE_NAMES = {
    "word_freq": "word_freq.tsv",
    "grammar": "grammar.tsv",
    "concepts": "concepts.tsv",
    "semtypes": "semtypes.tsv",
    "mesh": "mesh.tsv",
    "thesaurus": "thesaurus.tsv",
}


@dataclass
class LlmSettings:
    mock: bool = True
    base_url: str = "https://api.openai.com"
    path: str = "/v1/chat/completions"
    model_id: str = "gpt-3.5-turbo"
    temperature: float = 0.0
    concurrency: int = 4
    max_attempts: int = 3
    min_interval_s: float = 0.0


@dataclass
class WorkbenchConfig:
    lexicon_paths: dict[str, str] = field(default_factory=dict)
    tagger_model: str | None = None
    data_dir: str = "data"
    host: str = "127.0.0.1"
    port: int = 8000
    reference_mesh_depth: int = DEFAULT_REFERENCE_MESH_DEPTH
    max_body_bytes: int = 1 << 20
    auth_token: str | None = None
    llm: LlmSettings = field(default_factory=LlmSettings)

    @property
    def profiles_dir(self) -> Path:
        return Path(self.data_dir) / "profiles"

    def load_lexicon(self) -> LexiconBundle:
        kwargs = {k: v for k, v in self.lexicon_paths.items() if k in LEXICON_TABLES}
        report = load_bundle(reference_mesh_depth=self.reference_mesh_depth, **kwargs)
        return report.bundle


def bundle_dir_paths(bundle_dir) -> dict[str, str]:
    """Conventionally named table files that exist inside a directory."""
    bundle_dir = Path(bundle_dir)
    paths = {}
    for table, filename in BUNDLE_FILE_NAMES.items():
        candidate = bundle_dir / filename
        if candidate.exists():
            paths[table] = str(candidate)
    return paths


def load_config(path=None) -> WorkbenchConfig:
    if path is None:
        path = os.environ.get("WORKBENCH_CONFIG")
    config = WorkbenchConfig()
    if path:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        lexicon = data.get("lexicon", {})
        if "bundle_dir" in lexicon:
            config.lexicon_paths.update(bundle_dir_paths(lexicon["bundle_dir"]))
        for table in LEXICON_TABLES:
            if table in lexicon:
                config.lexicon_paths[table] = lexicon[table]
        if "tagger_model" in lexicon:
            config.tagger_model = lexicon["tagger_model"]
        server = data.get("server", {})
        config.data_dir = server.get("data_dir", config.data_dir)
        config.host = server.get("host", config.host)
        config.port = server.get("port", config.port)
        config.max_body_bytes = server.get("max_body_bytes", config.max_body_bytes)
        config.reference_mesh_depth = server.get(
            "reference_mesh_depth", config.reference_mesh_depth
        )
        llm = data.get("llm", {})
        for key in vars(config.llm):
            if key in llm:
                setattr(config.llm, key, llm[key])
    token = os.environ.get("WORKBENCH_TOKEN")
    if token:
        config.auth_token = token
    return config
