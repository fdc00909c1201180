"""textbench: text difficulty analysis and simplification workbench."""

from .chains import LexicalChain, build_chains, chain_metrics
from .compare import (
    CorpusProfile,
    RadarSeries,
    cosine_similarity,
    normalize,
    profile_corpus,
    radar_series,
    similarity_table,
)
from .lexicon import LexiconBundle, load_bundle, lookup_terms
from .metrics import FIELD_ORDER, AnalyzeConfig, MetricVector, analyze
from .speech import SpeechAnnotation, VoiceConfig, detect_say_as, render_ssml
from .suggest import Suggestion, suggest
from .tagging import RuleTagger, parse_pretagged, pos_tag, tag_text
from .tokens import TaggedText, Token, lemma_of, segment_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "AnalyzeConfig",
    "CorpusProfile",
    "FIELD_ORDER",
    "LexicalChain",
    "LexiconBundle",
    "MetricVector",
    "RadarSeries",
    "RuleTagger",
    "SpeechAnnotation",
    "Suggestion",
    "TaggedText",
    "Token",
    "VoiceConfig",
    "analyze",
    "build_chains",
    "chain_metrics",
    "cosine_similarity",
    "detect_say_as",
    "lemma_of",
    "load_bundle",
    "lookup_terms",
    "normalize",
    "parse_pretagged",
    "pos_tag",
    "profile_corpus",
    "radar_series",
    "render_ssml",
    "segment_sentences",
    "similarity_table",
    "suggest",
    "tag_text",
    "tokenize",
]
