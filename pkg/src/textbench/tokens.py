"""Tokenization, lemmatization, and sentence segmentation.

Tokenization rules:
  * numbers with internal separators (phone digits, decimals, ratios such as
    ``520-555-0100`` or ``3.5``) stay one token
  * words keep internal hyphens and apostrophes (``well-known``, ``can't``)
  * every other non-space character becomes a single-character PUNCT token

Lemmas are lowercased surfaces with a small English suffix-stripping rule set
(plural -s/-es, -ing, -ed with consonant-doubling undo). The rules are an
approximation; what matters downstream is that repeated occurrences of the
same word map to the same lemma.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .wordlists import default_abbreviations

COARSE_TAGS = ("NOUN", "VERB", "ADJ", "ADV", "OTHER", "PUNCT")
CONTENT_TAGS = frozenset({"NOUN", "VERB", "ADJ", "ADV"})

_TOKEN_RE = re.compile(
    r"""
    \d+(?:[-./,:]\d+)+      # numbers with internal separators
    | \w+(?:['-]\w+)*       # words, internal hyphen/apostrophe retained
    | \S                    # anything else: single-char punctuation
    """,
    re.VERBOSE | re.UNICODE,
)

_VOWELS = set("aeiouy")
# consonants whose doubling before -ing/-ed is undone (run+n+ing -> run)
_UNDOUBLE = set("bdgmnpt")

# lexicalized singulars ending in -s that the plural rule must not touch
_S_FINAL_LEMMAS = frozenset({
    "diabetes", "measles", "rabies", "herpes", "shingles", "series", "species",
    "news", "pancreas", "lens", "mumps",
})

_CLOSERS = {'"', "'", ")", "]", "}", "”", "’"}
_TERMINALS = {".", "!", "?"}


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    start: int
    end: int
    coarse_pos: str = "OTHER"
    is_content: bool = False

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)

    def with_tag(self, coarse_pos: str, is_content: bool) -> "Token":
        return replace(self, coarse_pos=coarse_pos, is_content=is_content)


@dataclass(frozen=True)
class TaggedText:
    tokens: tuple[Token, ...]
    sentence_bounds: tuple[tuple[int, int], ...]
    source: str

    @property
    def word_count(self) -> int:
        return sum(1 for t in self.tokens if t.coarse_pos != "PUNCT")

    def sentences(self):
        for first, last in self.sentence_bounds:
            yield self.tokens[first : last + 1]


def _has_vowel(word: str) -> bool:
    return any(c in _VOWELS for c in word)


def _undouble(stem: str) -> str:
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] in _UNDOUBLE:
        return stem[:-1]
    return stem


def _strips_es(w: str) -> bool:
    # sibilant stems take -es: classes, boxes, buzzes, branches, rashes;
    # a vowel before "ch" means the stem itself ends in e (aches -> ache)
    if w.endswith(("sses", "xes", "zzes", "shes")):
        return True
    if w.endswith("ches") and len(w) >= 6 and w[-5] not in _VOWELS:
        return True
    return False


def lemma_of(surface: str) -> str:
    """Lowercase + strip plural -s/-es, -ing, -ed (with doubling undo)."""
    w = surface.lower()
    if not w.isalpha() or w in _S_FINAL_LEMMAS:
        return w
    if w.endswith("ies") and len(w) >= 5:
        return w[:-3] + "y"
    if w == "viruses":
        return "virus"
    if _strips_es(w) and len(w) - 2 >= 3:
        return w[:-2]
    if w.endswith("ing") and len(w) >= 6:
        stem = _undouble(w[:-3])
        if len(stem) >= 3 and _has_vowel(stem):
            return stem
        return w
    if w.endswith("ied") and len(w) >= 5:
        return w[:-3] + "y"
    if w.endswith("ed") and len(w) >= 5 and not w.endswith("eed"):
        stem = _undouble(w[:-2])
        if len(stem) >= 3 and _has_vowel(stem):
            return stem
        return w
    if w.endswith("s") and not w.endswith(("ss", "us", "is")):
        stem = w[:-1]
        if len(stem) >= 2:
            return stem
    return w


def _is_punct_surface(surface: str) -> bool:
    return not any(c.isalnum() for c in surface)


def tokenize(source: str) -> list[Token]:
    """Split text into tokens with character spans into ``source``."""
    tokens = []
    for m in _TOKEN_RE.finditer(source):
        surface = m.group(0)
        if _is_punct_surface(surface):
            tokens.append(
                Token(surface, surface, m.start(), m.end(), "PUNCT", False)
            )
        else:
            tokens.append(Token(surface, lemma_of(surface), m.start(), m.end()))
    return tokens


def segment_sentences(tokens, abbreviations=None) -> list[tuple[int, int]]:
    """Sentence intervals ``[first_idx, last_idx]`` partitioning the tokens.

    A boundary is placed after sentence-final punctuation (. ! ?) unless the
    preceding token is a known abbreviation; closing quotes and brackets stay
    attached to the sentence they close. A trailing sentence without final
    punctuation is still closed.
    """
    if abbreviations is None:
        abbreviations = default_abbreviations()
    bounds = []
    n = len(tokens)
    start = 0
    i = 0
    while i < n:
        tok = tokens[i]
        if tok.coarse_pos == "PUNCT" and tok.surface in _TERMINALS:
            if tok.surface == "." and i > 0:
                prev = tokens[i - 1]
                if prev.coarse_pos != "PUNCT" and prev.surface.lower() in abbreviations:
                    i += 1
                    continue
            # absorb a run of terminals (e.g. "?!" or "...") and closers
            j = i + 1
            while j < n and tokens[j].coarse_pos == "PUNCT" and (
                tokens[j].surface in _TERMINALS or tokens[j].surface in _CLOSERS
            ):
                j += 1
            bounds.append((start, j - 1))
            start = j
            i = j
        else:
            i += 1
    if start < n:
        bounds.append((start, n - 1))
    return bounds
