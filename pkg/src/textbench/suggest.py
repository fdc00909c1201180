"""Word-level simplification suggestions based on term familiarity.

A content word whose corpus frequency falls below a threshold gets a
suggestion listing thesaurus synonyms with strictly greater frequency,
sorted most-common first. Words with no better synonym are skipped.
Synonym candidates are not POS-checked beyond content status; thesaurus
edges are lemma-level.
"""

from __future__ import annotations

import json
import statistics
from dataclasses import dataclass

from .tagging import tag_text


@dataclass(frozen=True)
class Suggestion:
    span: tuple[int, int]
    original: str
    original_freq: int
    candidates: tuple[tuple[str, int], ...]  # (lemma, freq), freq descending

    def as_dict(self) -> dict:
        return {
            "span": list(self.span),
            "original": self.original,
            "original_freq": self.original_freq,
            "candidates": [{"lemma": l, "freq": f} for l, f in self.candidates],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def default_threshold(bundle) -> float:
    """Median frequency of the loaded word-frequency table (0 when empty)."""
    if not bundle.word_freq:
        return 0.0
    return statistics.median(bundle.word_freq.values())


def suggest_tagged(tagged_text, bundle, threshold=None) -> list[Suggestion]:
    if threshold is None:
        threshold = default_threshold(bundle)
    suggestions = []
    for tok in tagged_text.tokens:
        if not tok.is_content:
            continue
        freq = bundle.word_freq.get(tok.lemma, 0)
        if freq >= threshold:
            continue
        candidates = []
        for syn in bundle.synonyms.get(tok.lemma, ()):
            syn_freq = bundle.word_freq.get(syn, 0)
            if syn_freq > freq:
                candidates.append((syn, syn_freq))
        if not candidates:
            continue
        candidates.sort(key=lambda c: (-c[1], c[0]))
        suggestions.append(
            Suggestion(
                span=tok.span,
                original=tok.lemma,
                original_freq=freq,
                candidates=tuple(candidates),
            )
        )
    return suggestions


def suggest(source_text: str, bundle, threshold=None, tagger=None) -> list[Suggestion]:
    """One suggestion per below-threshold content-word occurrence."""
    tagged = tag_text(source_text, tagger=tagger)
    return suggest_tagged(tagged, bundle, threshold)


def apply_suggestion(source_text: str, suggestion: Suggestion, candidate_index: int = 0) -> str:
    """Replace the suggested span with the chosen candidate lemma."""
    lemma, _freq = suggestion.candidates[candidate_index]
    start, end = suggestion.span
    return source_text[:start] + lemma + source_text[end:]
