"""Word-list resources: function-word stoplist and sentence abbreviations.

File format: one lowercase entry per line, UTF-8, `#` starts a comment.
"""

from functools import lru_cache
from importlib import resources
from pathlib import Path


def load_wordlist(path) -> frozenset[str]:
    entries = set()
    text = Path(path).read_text(encoding="utf-8")
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            entries.add(line.lower())
    return frozenset(entries)


def _data_path(name: str) -> Path:
    return Path(resources.files("textbench").joinpath("data", name))


@lru_cache(maxsize=None)
def default_stoplist() -> frozenset[str]:
    return load_wordlist(_data_path("stoplist.txt"))


@lru_cache(maxsize=None)
def default_abbreviations() -> frozenset[str]:
    return load_wordlist(_data_path("abbreviations.txt"))
