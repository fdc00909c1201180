"""Coarse part-of-speech tagging.

The shipped tagger is a lexicon + suffix-rule tagger over the six coarse tags
(NOUN, VERB, ADJ, ADV, OTHER, PUNCT). Function words, determiners, and
auxiliaries are tagged OTHER -- they are never content bearing. The tagger is
pluggable: anything with a ``tag(tokens) -> tokens`` method works, and
pre-tagged input can bypass tagging entirely (see :func:`parse_pretagged`).

Fine-grained tags from external tag sets (Penn Treebank, Universal
Dependencies) are mapped onto the coarse tags via :data:`FINE_TO_COARSE`.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ModelMissing, ParseError
from .tokens import CONTENT_TAGS, TaggedText, Token, lemma_of, segment_sentences, tokenize
from .wordlists import _data_path, default_stoplist

# Penn Treebank and Universal Dependencies tags -> coarse tags.
# Modals (MD) and auxiliaries (AUX) are function words, hence OTHER.
FINE_TO_COARSE = {
    "NN": "NOUN", "NNS": "NOUN", "NNP": "NOUN", "NNPS": "NOUN", "PROPN": "NOUN",
    "VB": "VERB", "VBD": "VERB", "VBG": "VERB", "VBN": "VERB", "VBP": "VERB",
    "VBZ": "VERB",
    "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ",
    "RB": "ADV", "RBR": "ADV", "RBS": "ADV",
    "MD": "OTHER", "AUX": "OTHER", "DT": "OTHER", "IN": "OTHER", "CC": "OTHER",
    "TO": "OTHER", "PRP": "OTHER", "PRP$": "OTHER", "WDT": "OTHER",
    "WP": "OTHER", "WP$": "OTHER", "WRB": "OTHER", "EX": "OTHER",
    "POS": "OTHER", "PDT": "OTHER", "UH": "OTHER", "CD": "OTHER",
    "FW": "OTHER", "SYM": "OTHER", "LS": "OTHER", "RP": "OTHER",
    "DET": "OTHER", "ADP": "OTHER", "PRON": "OTHER", "CCONJ": "OTHER",
    "SCONJ": "OTHER", "PART": "OTHER", "NUM": "OTHER", "INTJ": "OTHER",
    "X": "OTHER",
    ".": "PUNCT", ",": "PUNCT", ":": "PUNCT", "``": "PUNCT", "''": "PUNCT",
    "-LRB-": "PUNCT", "-RRB-": "PUNCT", "HYPH": "PUNCT",
}

_ADJ_SUFFIXES = ("ous", "ful", "less", "able", "ible", "ive", "ish", "ary", "ical", "ic", "al")
_NOUN_SUFFIXES = ("tion", "sion", "ment", "ness", "ity", "ance", "ence", "ism",
                  "ist", "oma", "itis", "osis", "emia", "logy", "pathy")
_VERB_SUFFIXES = ("ize", "ise", "ify")
_ADV_SUFFIX = "ly"

_DETERMINERS = frozenset("""
the a an this that these those my your his her its our their each every some
any no another
""".split())

_VERB_TRIGGERS = frozenset("""
to will would can could may might must shall should do does did don't doesn't
didn't won't cannot
""".split())

_NUMBER_WORDS = frozenset("""
zero one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty
fifty sixty seventy eighty ninety hundred thousand million billion first
second third half
""".split())


def map_fine_tag(tag: str) -> str:
    if tag in ("NOUN", "VERB", "ADJ", "ADV", "OTHER", "PUNCT"):
        return tag
    return FINE_TO_COARSE.get(tag, "OTHER")


class RuleTagger:
    """Lexicon + suffix-rule coarse tagger backed by a TSV model file."""

    def __init__(self, lexicon: dict[str, str], stoplist=None):
        self.lexicon = dict(lexicon)
        self.stoplist = default_stoplist() if stoplist is None else stoplist

    @classmethod
    def load(cls, model_path=None, stoplist=None) -> "RuleTagger":
        if model_path is None:
            model_path = _data_path("tagger_model.tsv")
        path = Path(model_path)
        if not path.exists():
            raise ModelMissing(f"tagger model not found: {path}")
        lexicon = {}
        for line_no, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
            line = raw.split("#", 1)[0].rstrip()
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(path, line_no, "expected word<TAB>TAG")
            word, tag = parts
            tag = map_fine_tag(tag.strip())
            lexicon[word.strip().lower()] = tag
        return cls(lexicon, stoplist=stoplist)

    def _guess(self, token: Token, prev: Token | None) -> str:
        word = token.surface.lower()
        if word in _NUMBER_WORDS or not any(c.isalpha() for c in word):
            return "OTHER"
        lex = self.lexicon.get(word)
        if lex is not None:
            return lex
        lemma_tag = self.lexicon.get(token.lemma)
        if lemma_tag is not None:
            # an -ed/-ing form of a non-verb lexicon entry ("lasted" vs the
            # adjective "last") is decided by the context rules below instead
            if lemma_tag == "VERB" or not word.endswith(("ing", "ed")):
                return lemma_tag
        if word.endswith(_ADV_SUFFIX) and len(word) > 3:
            return "ADV"
        for suf in _NOUN_SUFFIXES:
            if word.endswith(suf) and len(word) > len(suf) + 1:
                return "NOUN"
        for suf in _ADJ_SUFFIXES:
            if word.endswith(suf) and len(word) > len(suf) + 1:
                return "ADJ"
        for suf in _VERB_SUFFIXES:
            if word.endswith(suf) and len(word) > len(suf) + 1:
                return "VERB"
        prev_word = prev.surface.lower() if prev is not None else None
        if word.endswith(("ing", "ed")) and len(word) > 4:
            if prev_word in _DETERMINERS:
                return "ADJ"
            return "VERB"
        if prev_word in _VERB_TRIGGERS:
            return "VERB"
        return "NOUN"

    def tag(self, tokens) -> list[Token]:
        tagged = []
        prev_word_tok = None
        for tok in tokens:
            if tok.coarse_pos == "PUNCT":
                tagged.append(tok)
                continue
            word = tok.surface.lower()
            if word in self.stoplist or tok.lemma in self.stoplist:
                tag = "OTHER"
            else:
                tag = self._guess(tok, prev_word_tok)
            is_content = (
                tag in CONTENT_TAGS
                and tok.lemma not in self.stoplist
                and word not in self.stoplist
            )
            tagged.append(tok.with_tag(tag, is_content))
            prev_word_tok = tok
        return tagged


def pos_tag(tokens, tagger) -> list[Token]:
    """Fill ``coarse_pos`` on every token using the given tagger."""
    return tagger.tag(tokens)


def tag_text(source: str, tagger=None, abbreviations=None, stoplist=None) -> TaggedText:
    """Tokenize, segment, and tag a document."""
    if tagger is None:
        tagger = RuleTagger.load(stoplist=stoplist)
    tokens = pos_tag(tokenize(source), tagger)
    bounds = segment_sentences(tokens, abbreviations)
    return TaggedText(tuple(tokens), tuple(bounds), source)


def apply_content_flags(tokens, stoplist=None) -> list[Token]:
    """Recompute ``is_content`` from tags and the stoplist (pre-tagged path)."""
    if stoplist is None:
        stoplist = default_stoplist()
    out = []
    for tok in tokens:
        is_content = (
            tok.coarse_pos in CONTENT_TAGS
            and tok.lemma not in stoplist
            and tok.surface.lower() not in stoplist
        )
        out.append(tok.with_tag(tok.coarse_pos, is_content))
    return out


def parse_pretagged(text: str, stoplist=None) -> TaggedText:
    """Build a TaggedText from pre-tagged input.

    Format: one token per line ``surface<TAB>tag``, blank line = sentence
    break. Tags may be coarse or any fine tag covered by the mapping table.
    The source text is reconstructed with single spaces between surfaces.
    Punctuation-only surfaces are normalized to PUNCT.
    """
    tokens: list[Token] = []
    bounds: list[tuple[int, int]] = []
    parts: list[str] = []
    sent_start = 0
    offset = 0

    def close_sentence():
        nonlocal sent_start
        if sent_start < len(tokens):
            bounds.append((sent_start, len(tokens) - 1))
            sent_start = len(tokens)

    for raw in text.splitlines():
        if not raw.strip():
            close_sentence()
            continue
        if "\t" not in raw:
            raise ParseError("<pretagged>", len(tokens) + 1, "expected surface<TAB>tag")
        surface, tag = raw.split("\t", 1)
        surface = surface.strip()
        tag = map_fine_tag(tag.strip())
        if not any(c.isalnum() for c in surface):
            tag = "PUNCT"
        start = offset
        end = start + len(surface)
        tokens.append(Token(surface, lemma_of(surface), start, end, tag, False))
        parts.append(surface)
        offset = end + 1
    close_sentence()
    source = " ".join(parts)
    return TaggedText(tuple(apply_content_flags(tokens, stoplist)), tuple(bounds), source)
