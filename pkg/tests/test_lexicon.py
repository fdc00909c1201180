import pytest
from hypothesis import given
from hypothesis import strategies as st

from textbench.errors import EmptyCorpus, MissingFile, ParseError
from textbench.lexicon import (
    MAX_TERM_TOKENS,
    build_grammar_table,
    load_bundle,
    lookup_terms,
)
from textbench.tagging import tag_text


def test_load_word_freq(tmp_path):
    path = tmp_path / "freq.tsv"
    path.write_text("diabetes\t1000\n", encoding="utf-8")
    report = load_bundle(word_freq=path)
    assert report.bundle.word_freq["diabetes"] == 1000
    assert report.warnings == 0


def test_duplicate_keeps_larger_count(tmp_path):
    path = tmp_path / "freq.tsv"
    path.write_text("x\t5\nx\t9\n", encoding="utf-8")
    report = load_bundle(word_freq=path)
    assert report.bundle.word_freq["x"] == 9
    assert report.warnings == 1


def test_fixture_bundle_loads_clean(lexicon_paths):
    report = load_bundle(**lexicon_paths)
    assert report.warnings == 0
    assert report.unresolved_concepts == frozenset()
    assert len(report.bundle.word_freq) >= 40


def test_missing_file():
    with pytest.raises(MissingFile):
        load_bundle(word_freq="/nonexistent/file.tsv")


def test_parse_error_reports_line(tmp_path):
    path = tmp_path / "freq.tsv"
    path.write_text("ok\t1\nbroken line\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_bundle(word_freq=path)
    assert err.value.line_no == 2


def test_negative_count_rejected(tmp_path):
    path = tmp_path / "freq.tsv"
    path.write_text("x\t-3\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_bundle(word_freq=path)


def test_thesaurus_edges_symmetric(bundle):
    for lemma, linked in bundle.synonyms.items():
        for other in linked:
            assert lemma in bundle.synonyms[other]
    for lemma, linked in bundle.related.items():
        for other in linked:
            assert lemma in bundle.related[other]


def test_load_idempotent(lexicon_paths):
    assert load_bundle(**lexicon_paths).bundle == load_bundle(**lexicon_paths).bundle


def test_mesh_depths_at_least_one(bundle):
    assert all(depth >= 1 for depth in bundle.mesh_depth.values())


# --- grammar table -----------------------------------------------------------

def test_grammar_single_sentence(tmp_path, tagger):
    (tmp_path / "doc.txt").write_text("Dogs bark.\n", encoding="utf-8")
    counts = build_grammar_table(tmp_path, tagger)
    assert counts == {"NOUN VERB PUNCT": 1}


def test_grammar_identical_structures_counted(tmp_path, tagger):
    (tmp_path / "doc.txt").write_text("Dogs bark. Cats nap.\n", encoding="utf-8")
    counts = build_grammar_table(tmp_path, tagger)
    assert counts == {"NOUN VERB PUNCT": 2}


def test_grammar_empty_corpus(tmp_path):
    with pytest.raises(EmptyCorpus):
        build_grammar_table(tmp_path)


def test_grammar_fixture_matches_brute_force(corpus_dir, tagger):
    counts = build_grammar_table(corpus_dir, tagger)
    expected = {}
    for path in sorted(corpus_dir.glob("*.txt")):
        tagged = tag_text(path.read_text(encoding="utf-8"), tagger)
        for first, last in tagged.sentence_bounds:
            key = " ".join(t.coarse_pos for t in tagged.tokens[first : last + 1])
            expected[key] = expected.get(key, 0) + 1
    assert dict(counts) == expected


# --- term lookup -------------------------------------------------------------

def brute_force_greedy(tagged, keys):
    """Independent re-statement of the greedy longest-match rule."""
    lemmas = [t.lemma for t in tagged.tokens]
    out = []
    i = 0
    while i < len(lemmas):
        hit = None
        for n in range(min(MAX_TERM_TOKENS, len(lemmas) - i), 0, -1):
            cand = " ".join(lemmas[i : i + n])
            if cand in keys:
                hit = (i, i + n - 1, cand)
                break
        if hit:
            out.append(hit)
            i = hit[1] + 1
        else:
            i += 1
    return out


def test_longest_match_beats_shorter(bundle, tagger):
    tagged = tag_text("high blood pressure hurts", tagger)
    matches = lookup_terms(tagged, bundle)
    assert matches[0].term == "high blood pressure"
    assert matches[0].token_interval == (0, 2)


def test_two_token_match_interval(bundle, tagger):
    tagged = tag_text("blood sugar level", tagger)
    matches = lookup_terms(tagged, bundle)
    assert [m.term for m in matches] == ["blood sugar"]
    assert matches[0].token_interval == (0, 1)


def test_no_terms_empty(tagger):
    from textbench.lexicon import LexiconBundle

    tagged = tag_text("nothing matches here", tagger)
    assert lookup_terms(tagged, LexiconBundle()) == []


def test_matches_case_insensitive(bundle, tagger):
    tagged = tag_text("DIABETES hurts. Diabetes hurts.", tagger)
    matches = lookup_terms(tagged, bundle)
    assert [m.term for m in matches] == ["diabetes", "diabetes"]


def test_matches_are_disjoint_and_sorted(bundle, tagger, corpus_dir):
    for path in sorted(corpus_dir.glob("*.txt")):
        tagged = tag_text(path.read_text(encoding="utf-8"), tagger)
        matches = lookup_terms(tagged, bundle)
        for prev, cur in zip(matches, matches[1:]):
            assert prev.token_interval[1] < cur.token_interval[0]
        for m in matches:
            assert m.term in bundle.term_keys


def test_fixture_sentences_match_brute_force(bundle, tagger, corpus_dir):
    keys = bundle.term_keys
    for path in sorted(corpus_dir.glob("*.txt")):
        tagged = tag_text(path.read_text(encoding="utf-8"), tagger)
        got = [(m.token_interval[0], m.token_interval[1], m.term) for m in lookup_terms(tagged, bundle)]
        assert got == brute_force_greedy(tagged, keys)


from pathlib import Path

from textbench.config import WorkbenchConfig, bundle_dir_paths

_FIXLEX = WorkbenchConfig(
    lexicon_paths=bundle_dir_paths(Path(__file__).resolve().parent.parent / "fixtures" / "lexicon")
).load_lexicon()


@given(st.lists(st.sampled_from(
    ["blood", "sugar", "level", "high", "pressure", "diabetes", "skin", "cancer", "heart", "attack", "the"]),
    min_size=1, max_size=12))
def test_greedy_property_random_sequences(words):
    bundle = _FIXLEX
    tagged = tag_text(" ".join(words))
    matches = lookup_terms(tagged, bundle)
    got = [(m.token_interval[0], m.token_interval[1], m.term) for m in matches]
    assert got == brute_force_greedy(tagged, bundle.term_keys)
    # greedy: no reported match extends to a longer bundle term at the same start
    lemmas = [t.lemma for t in tagged.tokens]
    for start, end, term in got:
        n = end - start + 1
        for longer in range(n + 1, MAX_TERM_TOKENS + 1):
            if start + longer <= len(lemmas):
                assert " ".join(lemmas[start : start + longer]) not in bundle.term_keys
