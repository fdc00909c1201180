"""Lookup tables backing the difficulty metrics.

All tables load from TSV files (UTF-8, tab-separated, ``#`` comments):

  word_freq   ``lemma<TAB>count``
  grammar     ``structure_key<TAB>count``
  concepts    ``term<TAB>concept_id[,concept_id...]``
  semtypes    ``concept_id<TAB>semtype_id[,...]``
  mesh        ``term<TAB>depth``
  thesaurus   ``lemma<TAB>lemma<TAB>{syn|rel}``

Licensed vocabularies are never shipped; users supply their own extracts in
these formats. Duplicate keys keep the larger count / the union of sets and
are counted as warnings.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyCorpus, MissingFile, ParseError

log = logging.getLogger(__name__)

MAX_TERM_TOKENS = 5
DEFAULT_REFERENCE_MESH_DEPTH = 9


@dataclass(frozen=True)
class LexiconBundle:
    word_freq: dict[str, int] = field(default_factory=dict)
    grammar_freq: dict[str, int] = field(default_factory=dict)
    term_concepts: dict[str, frozenset[str]] = field(default_factory=dict)
    concept_semtypes: dict[str, frozenset[str]] = field(default_factory=dict)
    mesh_depth: dict[str, int] = field(default_factory=dict)
    synonyms: dict[str, frozenset[str]] = field(default_factory=dict)
    related: dict[str, frozenset[str]] = field(default_factory=dict)
    reference_mesh_depth: int = DEFAULT_REFERENCE_MESH_DEPTH

    @property
    def term_keys(self) -> frozenset[str]:
        return frozenset(self.term_concepts) | frozenset(self.mesh_depth)

    def linked_lemmas(self, lemma: str, include_related: bool) -> frozenset[str]:
        linked = set(self.synonyms.get(lemma, ()))
        if include_related:
            linked |= self.related.get(lemma, set())
        return frozenset(linked)


def _iter_rows(path: Path, n_cols: int):
    if not path.exists():
        raise MissingFile(str(path))
    for line_no, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip("\n").rstrip("\r")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != n_cols:
            raise ParseError(path, line_no, f"expected {n_cols} tab-separated fields")
        yield line_no, [p.strip() for p in parts]


def _load_counts(path: Path, label: str) -> tuple[dict[str, int], int]:
    table: dict[str, int] = {}
    warnings = 0
    for line_no, (key, value) in _iter_rows(path, 2):
        key = key.lower() if label == "word_freq" else key
        try:
            count = int(value.replace(",", ""))
        except ValueError:
            raise ParseError(path, line_no, f"count is not an integer: {value!r}")
        if count < 0:
            raise ParseError(path, line_no, f"negative count: {count}")
        if key in table:
            warnings += 1
            table[key] = max(table[key], count)
        else:
            table[key] = count
    return table, warnings


def _load_sets(path: Path, lower_keys=True) -> tuple[dict[str, frozenset[str]], int]:
    table: dict[str, set[str]] = {}
    warnings = 0
    for _line_no, (key, value) in _iter_rows(path, 2):
        if lower_keys:
            key = key.lower()
        ids = {v.strip() for v in value.split(",") if v.strip()}
        if key in table:
            warnings += 1
            table[key] |= ids
        else:
            table[key] = ids
    return {k: frozenset(v) for k, v in table.items()}, warnings


def _load_mesh(path: Path) -> tuple[dict[str, int], int]:
    table: dict[str, int] = {}
    warnings = 0
    for line_no, (term, value) in _iter_rows(path, 2):
        term = term.lower()
        try:
            depth = int(value)
        except ValueError:
            raise ParseError(path, line_no, f"depth is not an integer: {value!r}")
        if depth < 1:
            raise ParseError(path, line_no, f"depth must be >= 1, got {depth}")
        if term in table:
            warnings += 1
            table[term] = max(table[term], depth)
        else:
            table[term] = depth
    return table, warnings


def _load_thesaurus(path: Path) -> tuple[dict, dict, int]:
    syn: dict[str, set[str]] = {}
    rel: dict[str, set[str]] = {}
    warnings = 0
    for line_no, (a, b, kind) in _iter_rows(path, 3):
        a, b = a.lower(), b.lower()
        if kind not in ("syn", "rel"):
            raise ParseError(path, line_no, f"edge kind must be syn or rel, got {kind!r}")
        if a == b:
            warnings += 1
            continue
        table = syn if kind == "syn" else rel
        if b in table.get(a, ()):
            warnings += 1
        table.setdefault(a, set()).add(b)
        table.setdefault(b, set()).add(a)
    freeze = lambda t: {k: frozenset(v) for k, v in t.items()}
    return freeze(syn), freeze(rel), warnings


@dataclass
class LoadReport:
    bundle: LexiconBundle
    warnings: int
    unresolved_concepts: frozenset[str]


def load_bundle(
    word_freq=None,
    grammar=None,
    concepts=None,
    semtypes=None,
    mesh=None,
    thesaurus=None,
    reference_mesh_depth: int = DEFAULT_REFERENCE_MESH_DEPTH,
) -> LoadReport:
    """Load an immutable bundle from per-table file paths (all optional)."""
    warnings = 0
    wf, gf, tc, cs, md = {}, {}, {}, {}, {}
    syn, rel = {}, {}
    if word_freq is not None:
        wf, w = _load_counts(Path(word_freq), "word_freq")
        warnings += w
    if grammar is not None:
        gf, w = _load_counts(Path(grammar), "grammar")
        warnings += w
    if concepts is not None:
        tc, w = _load_sets(Path(concepts))
        warnings += w
    if semtypes is not None:
        cs, w = _load_sets(Path(semtypes), lower_keys=False)
        warnings += w
    if mesh is not None:
        md, w = _load_mesh(Path(mesh))
        warnings += w
    if thesaurus is not None:
        syn, rel, w = _load_thesaurus(Path(thesaurus))
        warnings += w
    unresolved = frozenset(
        cid for ids in tc.values() for cid in ids if cid not in cs
    )
    for cid in sorted(unresolved):
        log.warning("concept %s has no semantic types", cid)
    bundle = LexiconBundle(
        word_freq=wf,
        grammar_freq=gf,
        term_concepts=tc,
        concept_semtypes=cs,
        mesh_depth=md,
        synonyms=syn,
        related=rel,
        reference_mesh_depth=reference_mesh_depth,
    )
    return LoadReport(bundle, warnings + len(unresolved), unresolved)


def sentence_structure_key(tokens) -> str:
    """Space-joined coarse POS sequence of one sentence's tokens."""
    return " ".join(t.coarse_pos for t in tokens)


def build_grammar_table(corpus_dir, tagger=None, key_fn=sentence_structure_key) -> Counter:
    """Count per-sentence structure keys across a directory of documents."""
    from .tagging import tag_text

    paths = sorted(p for p in Path(corpus_dir).glob("*") if p.is_file())
    if not paths:
        raise EmptyCorpus(f"no documents in {corpus_dir}")
    counts: Counter = Counter()
    for path in paths:
        tagged = tag_text(path.read_text(encoding="utf-8"), tagger=tagger)
        for sentence in tagged.sentences():
            counts[key_fn(sentence)] += 1
    return counts


def write_grammar_table(counts: Counter, out_path) -> None:
    lines = [f"{key}\t{count}" for key, count in sorted(counts.items())]
    Path(out_path).write_text("\n".join(lines) + "\n", encoding="utf-8")


@dataclass(frozen=True)
class TermMatch:
    token_interval: tuple[int, int]  # [first_token_idx, last_token_idx]
    term: str
    concepts: frozenset[str]
    mesh_depth: int | None


def lookup_terms(tagged_text, bundle: LexiconBundle) -> list[TermMatch]:
    """Greedy longest-match scan of token n-grams against the bundle's terms.

    Windows run from 5 tokens down to 1; matched intervals never overlap;
    matching is case-insensitive on lemmas.
    """
    keys = bundle.term_keys
    if not keys:
        return []
    tokens = tagged_text.tokens
    matches = []
    i = 0
    n_tokens = len(tokens)
    while i < n_tokens:
        found = None
        for n in range(min(MAX_TERM_TOKENS, n_tokens - i), 0, -1):
            term = " ".join(t.lemma for t in tokens[i : i + n])
            if term in keys:
                found = (n, term)
                break
        if found is None:
            i += 1
            continue
        n, term = found
        matches.append(
            TermMatch(
                token_interval=(i, i + n - 1),
                term=term,
                concepts=bundle.term_concepts.get(term, frozenset()),
                mesh_depth=bundle.mesh_depth.get(term),
            )
        )
        i += n
    return matches
