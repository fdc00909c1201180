"""The fourteen difficulty metrics plus word count for one text.

Every multi-valued measure uses the word-token count (punctuation excluded)
as its denominator. Texts with no ontology matches legitimately score 0 on
the domain metrics; that is not an error.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, fields

from .chains import build_chains, chain_metrics
from .lexicon import LexiconBundle, lookup_terms, sentence_structure_key
from .tagging import tag_text

FIELD_ORDER = (
    "word_count",
    "content_word_frequency",
    "grammar_frequency",
    "specificity",
    "ambiguity",
    "concept_density",
    "topic_density",
    "pct_nouns",
    "pct_verbs",
    "pct_adjectives",
    "pct_adverbs",
    "chain_count",
    "chain_length",
    "chain_span",
    "cross_chains",
)

# the similarity vector: the fourteen difficulty metrics, word count excluded
SIMILARITY_FIELDS = FIELD_ORDER[1:]

# metrics where a higher value reads easier; the rest read harder when higher
EASIER_WHEN_HIGHER = frozenset({
    "content_word_frequency",
    "grammar_frequency",
    "pct_verbs",
    "pct_adverbs",
    "chain_length",
    "chain_span",
})


def direction(metric: str) -> str:
    if metric not in FIELD_ORDER:
        raise KeyError(metric)
    return "easier_when_higher" if metric in EASIER_WHEN_HIGHER else "harder_when_higher"


@dataclass(frozen=True)
class MetricVector:
    word_count: int = 0
    content_word_frequency: float = 0.0
    grammar_frequency: float = 0.0
    specificity: float = 0.0
    ambiguity: float = 0.0
    concept_density: float = 0.0
    topic_density: float = 0.0
    pct_nouns: float = 0.0
    pct_verbs: float = 0.0
    pct_adjectives: float = 0.0
    pct_adverbs: float = 0.0
    chain_count: float = 0.0
    chain_length: float = 0.0
    chain_span: float = 0.0
    cross_chains: float = 0.0

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in FIELD_ORDER}

    def values(self) -> tuple:
        return tuple(getattr(self, name) for name in FIELD_ORDER)

    def similarity_values(self) -> tuple:
        return tuple(getattr(self, name) for name in SIMILARITY_FIELDS)

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(FIELD_ORDER)
        writer.writerow(self.values())
        return buf.getvalue()

    @classmethod
    def from_dict(cls, data: dict) -> "MetricVector":
        # word_count stays whatever numeric type it was (profile means are fractional)
        return cls(**{name: data[name] for name in FIELD_ORDER if name in data})


assert tuple(f.name for f in fields(MetricVector)) == FIELD_ORDER


@dataclass
class AnalyzeConfig:
    linkage: str = "exact"
    tagger: object = None
    key_fn: object = None
    reference_mesh_depth: int | None = None


def content_word_frequency(tagged_text, bundle: LexiconBundle) -> float:
    freqs = [
        bundle.word_freq.get(tok.lemma, 0)
        for tok in tagged_text.tokens
        if tok.is_content
    ]
    return sum(freqs) / len(freqs) if freqs else 0.0


def grammar_frequency(tagged_text, bundle: LexiconBundle, key_fn=None) -> float:
    key_fn = key_fn or sentence_structure_key
    counts = [
        bundle.grammar_freq.get(key_fn(sentence), 0)
        for sentence in tagged_text.sentences()
    ]
    return sum(counts) / len(counts) if counts else 0.0


def specificity(tagged_text, bundle: LexiconBundle, matches=None, reference_depth=None) -> float:
    if matches is None:
        matches = lookup_terms(tagged_text, bundle)
    depths = [m.mesh_depth for m in matches if m.mesh_depth is not None]
    if not depths:
        return 0.0
    reference = reference_depth or bundle.reference_mesh_depth
    return (sum(depths) / len(depths)) / reference


def ambiguity(tagged_text, bundle: LexiconBundle, matches=None) -> float:
    wc = tagged_text.word_count
    if wc == 0:
        return 0.0
    if matches is None:
        matches = lookup_terms(tagged_text, bundle)
    excess = sum(max(len(m.concepts) - 1, 0) for m in matches)
    return excess / wc


def concept_density(tagged_text, bundle: LexiconBundle, matches=None) -> float:
    wc = tagged_text.word_count
    if wc == 0:
        return 0.0
    if matches is None:
        matches = lookup_terms(tagged_text, bundle)
    concepts = set().union(*(m.concepts for m in matches)) if matches else set()
    return len(concepts) / wc


def topic_density(tagged_text, bundle: LexiconBundle, matches=None) -> float:
    wc = tagged_text.word_count
    if wc == 0:
        return 0.0
    if matches is None:
        matches = lookup_terms(tagged_text, bundle)
    semtypes: set[str] = set()
    for m in matches:
        for cid in m.concepts:
            semtypes |= bundle.concept_semtypes.get(cid, frozenset())
    return len(semtypes) / wc


def pos_percentages(tagged_text) -> tuple[float, float, float, float]:
    """(%% nouns, %% verbs, %% adjectives, %% adverbs) over word tokens."""
    wc = tagged_text.word_count
    if wc == 0:
        return (0.0, 0.0, 0.0, 0.0)
    counts = {"NOUN": 0, "VERB": 0, "ADJ": 0, "ADV": 0}
    for tok in tagged_text.tokens:
        if tok.coarse_pos in counts:
            counts[tok.coarse_pos] += 1
    return tuple(counts[tag] / wc * 100 for tag in ("NOUN", "VERB", "ADJ", "ADV"))


def analyze_tagged(tagged_text, bundle: LexiconBundle, config: AnalyzeConfig | None = None) -> MetricVector:
    """Compute the full vector for an already-tagged text."""
    config = config or AnalyzeConfig()
    wc = tagged_text.word_count
    if wc == 0:
        return MetricVector()
    matches = lookup_terms(tagged_text, bundle)
    nouns, verbs, adjs, advs = pos_percentages(tagged_text)
    chains = build_chains(tagged_text, bundle, config.linkage)
    c_count, c_length, c_span, c_cross = chain_metrics(chains, wc)
    return MetricVector(
        word_count=wc,
        content_word_frequency=content_word_frequency(tagged_text, bundle),
        grammar_frequency=grammar_frequency(tagged_text, bundle, config.key_fn),
        specificity=specificity(tagged_text, bundle, matches, config.reference_mesh_depth),
        ambiguity=ambiguity(tagged_text, bundle, matches),
        concept_density=concept_density(tagged_text, bundle, matches),
        topic_density=topic_density(tagged_text, bundle, matches),
        pct_nouns=nouns,
        pct_verbs=verbs,
        pct_adjectives=adjs,
        pct_adverbs=advs,
        chain_count=c_count,
        chain_length=c_length,
        chain_span=c_span,
        cross_chains=c_cross,
    )


def analyze(source_text: str, bundle: LexiconBundle, config: AnalyzeConfig | None = None) -> MetricVector:
    """Tokenize, tag, and score a document."""
    config = config or AnalyzeConfig()
    tagged = tag_text(source_text, tagger=config.tagger)
    return analyze_tagged(tagged, bundle, config)
