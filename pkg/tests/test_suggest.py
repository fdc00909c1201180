import json

from textbench.metrics import analyze
from textbench.suggest import apply_suggestion, default_threshold, suggest
from textbench.tagging import tag_text


def test_rare_word_gets_more_frequent_synonym(bundle):
    # cyst (10) has synonym lump (500); threshold 100 emits one suggestion
    suggestions = suggest("the cyst hurts", bundle, threshold=100)
    assert len(suggestions) == 1
    s = suggestions[0]
    assert s.original == "cyst"
    assert s.original_freq == 10
    assert s.candidates == (("lump", 500),)


def test_everything_above_threshold_empty(bundle):
    assert suggest("the doctor helped", bundle, threshold=5) == []


def test_word_without_better_synonym_skipped(bundle):
    # tumor (40) is below threshold but its only synonym growth (450) is better;
    # hypertension (15) is rare and its thesaurus link is rel-only, so no candidates
    suggestions = suggest("hypertension is common", bundle, threshold=100)
    assert suggestions == []


def test_duplicate_occurrences_one_suggestion_each(bundle):
    text = "the cyst was a cyst"
    suggestions = suggest(text, bundle, threshold=100)
    assert len(suggestions) == 2
    assert suggestions[0].span != suggestions[1].span
    for s in suggestions:
        assert text[s.span[0] : s.span[1]] == "cyst"


def test_candidates_sorted_by_frequency(bundle):
    for suggestions in (suggest("the cyst and the tumor hurt", bundle, threshold=100),):
        for s in suggestions:
            freqs = [f for _l, f in s.candidates]
            assert freqs == sorted(freqs, reverse=True)
            assert all(f > s.original_freq for f in freqs)


def test_matches_exhaustive_scan(bundle, tagger, corpus_dir):
    threshold = 300
    for path in sorted(corpus_dir.glob("*.txt")):
        text = path.read_text(encoding="utf-8")
        got = suggest(text, bundle, threshold=threshold)
        tagged = tag_text(text, tagger)
        expected = []
        for tok in tagged.tokens:
            if not tok.is_content:
                continue
            freq = bundle.word_freq.get(tok.lemma, 0)
            if freq >= threshold:
                continue
            cands = sorted(
                (
                    (syn, bundle.word_freq.get(syn, 0))
                    for syn in bundle.synonyms.get(tok.lemma, ())
                    if bundle.word_freq.get(syn, 0) > freq
                ),
                key=lambda c: (-c[1], c[0]),
            )
            if cands:
                expected.append((tok.span, tok.lemma, freq, tuple(cands)))
        assert [(s.span, s.original, s.original_freq, s.candidates) for s in got] == expected


def test_threshold_monotonicity(bundle, corpus_dir):
    text = (corpus_dir / "doc03.txt").read_text(encoding="utf-8")
    seen = suggest(text, bundle, threshold=50)
    wider = suggest(text, bundle, threshold=800)
    spans_seen = {s.span for s in seen}
    spans_wider = {s.span for s in wider}
    assert spans_seen <= spans_wider


def test_applying_top_candidate_increases_cwf(bundle):
    text = "the cyst hurts"
    suggestions = suggest(text, bundle, threshold=100)
    rewritten = apply_suggestion(text, suggestions[0])
    assert rewritten == "the lump hurts"
    before = analyze(text, bundle)
    after = analyze(rewritten, bundle)
    assert after.content_word_frequency > before.content_word_frequency


def test_default_threshold_is_table_median(bundle):
    values = sorted(bundle.word_freq.values())
    expected = (values[len(values) // 2 - 1] + values[len(values) // 2]) / 2 \
        if len(values) % 2 == 0 else values[len(values) // 2]
    assert default_threshold(bundle) == expected


def test_json_serialization(bundle):
    s = suggest("the cyst hurts", bundle, threshold=100)[0]
    data = json.loads(s.to_json())
    assert data["original"] == "cyst"
    assert data["candidates"] == [{"lemma": "lump", "freq": 500}]
    assert data["span"] == [4, 8]
