"""Acceptance gate: one test per criterion, one printed PASS/FAIL line each.

Criteria 1 and 2 compare reproduced similarity tables against the bundled
reference similarity cells under every documented configuration (two
normalization conventions x two value orientations) and report the best.
Cell tolerance is pinned at +/-0.02 and the quantitative bar at 20 of 24
cells; a JSON discrepancy report is generated on every run.
"""

import json
import random
import xml.etree.ElementTree as ET
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from textbench.chains import build_chains, chain_metrics, occurrence_partition
from textbench.compare import (
    discrepancy_report,
    field_maxima,
    load_expected_similarities,
    load_fixture_vectors,
    normalize,
    radar_series,
    similarity_table,
)
from textbench.config import WorkbenchConfig
from textbench.llm import PROMPTS, MockChatClient, build_artificial_corpus
from textbench.metrics import EASIER_WHEN_HIGHER, FIELD_ORDER, MetricVector, analyze
from textbench.server import create_app
from textbench.speech import ELEMENT_WHITELIST, render_ssml
from textbench.errors import OverlapError

ROOT = Path(__file__).resolve().parent.parent
REPORTS = ROOT / "reports"

TOLERANCE = 0.02
REQUIRED_CELLS = 20

HUMAN = ["mayo_clinic", "wikipedia", "simple_wikipedia", "bmj", "bmj_lay_summaries", "podcasts"]
GPT = ["gpt_original", "gpt_simplified", "gpt_easier", "gpt_esl", "gpt_older", "gpt_read_aloud"]
GPT_SIMPLIFIED_FIVE = GPT[1:]
ORIG = "user_study_original"
SIMP = "user_study_simplified"

CONFIGURATIONS = [
    ("include", "magnitude"),
    ("exclude", "magnitude"),
    ("include", "easiness"),
    ("exclude", "easiness"),
]


def _report(criterion: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    line = f"ACCEPTANCE {criterion}: {status}"
    if detail:
        line += f" ({detail})"
    print(line)


@pytest.fixture(scope="module")
def reference_tables(fixtures_dir):
    corpora, targets = load_fixture_vectors(fixtures_dir / "paper_tables.csv")
    expected = load_expected_similarities(fixtures_dir / "paper_similarities.csv")
    return corpora, targets, expected


def ordinal_relations(cells) -> dict[str, bool]:
    """Every ordering relation readable from the reference similarity table."""
    relations = {}
    relations["a: bmj closer to original"] = cells["bmj"][ORIG] > cells["bmj"][SIMP]
    for name in ["wikipedia", "simple_wikipedia", "bmj_lay_summaries", "podcasts"] + GPT_SIMPLIFIED_FIVE:
        relations[f"b: {name} closer to simplified"] = cells[name][SIMP] > cells[name][ORIG]
    human_orig = {h: cells[h][ORIG] for h in HUMAN}
    relations["c: bmj highest human vs original"] = max(human_orig, key=human_orig.get) == "bmj"
    relations["c: podcasts lowest human vs original"] = min(human_orig, key=human_orig.get) == "podcasts"
    human_simp = {h: cells[h][SIMP] for h in HUMAN}
    relations["d: bmj lay highest human vs simplified"] = max(human_simp, key=human_simp.get) == "bmj_lay_summaries"
    relations["e: artificial below human (vs simplified)"] = (
        max(cells[g][SIMP] for g in GPT) <= min(human_simp.values())
    )
    relations["e: artificial below human (vs original)"] = (
        max(cells[g][ORIG] for g in GPT) <= min(human_orig.values())
    )
    return relations


def test_criterion_1_similarity_ordinals(reference_tables):
    corpora, targets, _expected = reference_tables
    outcomes = {}
    for convention, orientation in CONFIGURATIONS:
        table = similarity_table(corpora, targets, convention, orientation)
        relations = ordinal_relations(table.cells)
        outcomes[(convention, orientation)] = relations
        failed = [name for name, ok in relations.items() if not ok]
        print(f"  [{convention}/{orientation}] ordinals: {len(relations) - len(failed)}"
              f"/{len(relations)} hold; failing: {failed or 'none'}")
    passed = any(all(r.values()) for r in outcomes.values())
    _report("1 (similarity ordinal reproduction)", passed,
            "no documented configuration satisfies every ordering relation" if not passed else "")
    assert passed, (
        "no documented normalization configuration reproduces every ordering "
        "relation of the reference similarity table; see printed per-"
        "configuration breakdown and reports/table5_discrepancies.json"
    )


def test_criterion_2_similarity_quantitative(reference_tables):
    corpora, targets, expected = reference_tables
    REPORTS.mkdir(exist_ok=True)
    best = None
    all_reports = {}
    for convention, orientation in CONFIGURATIONS:
        table = similarity_table(corpora, targets, convention, orientation)
        report = discrepancy_report(table, expected, tolerance=TOLERANCE)
        all_reports[f"{convention}/{orientation}"] = report
        if best is None or report["n_within"] > best["n_within"]:
            best = report
        print(f"  [{convention}/{orientation}] {report['n_within']}/{report['n_total']} "
              f"cells within ±{TOLERANCE}")
    out_path = REPORTS / "table5_discrepancies.json"
    out_path.write_text(
        json.dumps({"required_cells": REQUIRED_CELLS, "tolerance": TOLERANCE,
                    "best_configuration": f"{best['convention']}/{best['orientation']}",
                    "configurations": all_reports}, indent=2) + "\n",
        encoding="utf-8",
    )
    print(f"  discrepancy report written to {out_path}")
    passed = best["n_within"] >= REQUIRED_CELLS
    _report("2 (similarity quantitative reproduction)", passed,
            f"best configuration reproduces {best['n_within']}/24 cells within ±{TOLERANCE}, "
            f"need ≥{REQUIRED_CELLS}")
    assert passed, (
        f"best documented configuration reproduces only {best['n_within']}/24 "
        f"reference similarity cells within ±{TOLERANCE} "
        f"(required ≥{REQUIRED_CELLS}); see {out_path}"
    )


def _random_chain_case(seed):
    from textbench.lexicon import LexiconBundle
    from textbench.tokens import TaggedText, Token

    rng = random.Random(seed)
    vocab = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta"]
    words = [rng.choice(vocab) for _ in range(rng.randint(2, 30))]
    tokens = []
    pos = 0
    for w in words:
        tokens.append(Token(w, w, pos, pos + len(w), "NOUN", True))
        pos += len(w) + 1
    tagged = TaggedText(tuple(tokens), ((0, len(tokens) - 1),), " ".join(words))
    pairs = [(a, b) for i, a in enumerate(vocab) for b in vocab[i + 1:]]
    syn = {}
    rel = {}
    for a, b in pairs:
        if rng.random() < 0.1:
            syn.setdefault(a, set()).add(b)
            syn.setdefault(b, set()).add(a)
        if rng.random() < 0.1:
            rel.setdefault(a, set()).add(b)
            rel.setdefault(b, set()).add(a)
    bundle = LexiconBundle(
        synonyms={k: frozenset(v) for k, v in syn.items()},
        related={k: frozenset(v) for k, v in rel.items()},
    )
    return tagged, bundle


def _oracle_components(tagged, bundle, linkage):
    occs = [(i, t.lemma) for i, t in enumerate(tagged.tokens) if t.is_content]

    def linked(la, lb):
        if la == lb:
            return True
        if linkage == "exact":
            return False
        if lb in bundle.synonyms.get(la, ()):
            return True
        return linkage == "related" and lb in bundle.related.get(la, ())

    comps, seen = [], set()
    for i in range(len(occs)):
        if i in seen:
            continue
        comp, stack = set(), [i]
        while stack:
            k = stack.pop()
            if k in comp:
                continue
            comp.add(k)
            stack.extend(
                j for j in range(len(occs))
                if j not in comp and linked(occs[k][1], occs[j][1])
            )
        seen |= comp
        if len(comp) >= 2:
            comps.append(frozenset(occs[k][0] for k in comp))
    return set(comps)


def test_criterion_3_chain_oracle_equivalence():
    checked = 0
    for seed in range(200):
        tagged, bundle = _random_chain_case(seed)
        for linkage in ("exact", "synonym", "related"):
            chains = build_chains(tagged, bundle, linkage)
            got = {frozenset(c.member_indices) for c in chains}
            assert got == _oracle_components(tagged, bundle, linkage), (seed, linkage)
            wc = tagged.word_count
            count, length, span, cross = chain_metrics(chains, wc)
            n = len(chains)
            assert count == (n / wc if n else 0.0)
            if n:
                assert length == (sum(len(c.member_indices) for c in chains) / n) / wc
                assert span == sum(
                    min((c.last - c.first) / max(wc - 1, 1), 1.0) for c in chains
                ) / n
                crossing = sum(
                    1 for a in chains
                    if any(b is not a and a.first <= b.last and b.first <= a.last for b in chains)
                )
                assert cross == crossing / wc
            checked += 1
    _report("3 (chain oracle equivalence)", True, f"{checked} text/linkage cases")


def test_criterion_4_metric_property_suite(bundle, corpus_dir):
    texts = [p.read_text(encoding="utf-8") for p in sorted(corpus_dir.glob("*.txt"))]
    # duplication invariance of mean metrics
    for text in texts[:8]:
        single = analyze(text, bundle)
        double = analyze(text + " " + text, bundle)
        assert double.word_count == 2 * single.word_count
        for name in ("content_word_frequency", "grammar_frequency", "specificity",
                     "pct_nouns", "pct_verbs", "pct_adjectives", "pct_adverbs"):
            assert getattr(double, name) == pytest.approx(getattr(single, name)), name
    # monotone substitution: cyst -> strictly more frequent synonym lump
    before = analyze("the cyst was sore", bundle)
    after = analyze("the lump was sore", bundle)
    assert after.content_word_frequency > before.content_word_frequency
    for name in ("pct_nouns", "pct_verbs", "pct_adjectives", "pct_adverbs"):
        assert getattr(after, name) == getattr(before, name)
    # linkage monotonicity on the occurrence partition + POS bound
    from textbench.tagging import tag_text

    for text in texts:
        vec = analyze(text, bundle)
        assert vec.pct_nouns + vec.pct_verbs + vec.pct_adjectives + vec.pct_adverbs <= 100 + 1e-9
        tagged = tag_text(text)
        n_exact = len(occurrence_partition(tagged, bundle, "exact"))
        n_syn = len(occurrence_partition(tagged, bundle, "synonym"))
        n_rel = len(occurrence_partition(tagged, bundle, "related"))
        assert n_rel <= n_syn <= n_exact
    # normalization idempotence
    vectors = {f"doc{i}": analyze(t, bundle) for i, t in enumerate(texts[:5])}
    once = normalize(vectors)
    again = normalize({k: MetricVector(**v) for k, v in once.items()})
    for key in once:
        for field in FIELD_ORDER:
            assert again[key][field] == pytest.approx(once[key][field])
    _report("4 (metric property suite)", True)


def test_criterion_5_radar_correctness():
    rng = random.Random(11)

    def rand_vec():
        return MetricVector(**{name: rng.uniform(0.01, 9.0) for name in FIELD_ORDER})

    base_set = {f"v{i}": rand_vec() for i in range(5)}
    maxima = field_maxima(base_set.values())
    # all-max vector: easy axes at 1.0, hard axes at 0.0
    top = radar_series(MetricVector(**maxima), base_set, name="top")
    for axis, value in zip(top.axes, top.values):
        expected = 1.0 if axis in EASIER_WHEN_HIGHER else 0.0
        assert value == pytest.approx(expected)
    # 100 random vectors: values in [0,1]; single-metric improvement never
    # shrinks the polygon area while the maxima stay fixed
    for _ in range(100):
        vec = rand_vec()
        series = radar_series(vec, base_set, name="x")
        assert all(0.0 <= v <= 1.0 for v in series.values)
        name = rng.choice(FIELD_ORDER)
        value = getattr(vec, name)
        if name in EASIER_WHEN_HIGHER:
            improved = MetricVector(**{**vec.as_dict(), name: value * 1.3})
        else:
            improved = MetricVector(**{**vec.as_dict(), name: value * 0.7})
        improved_series = radar_series(improved, base_set, name="x")
        assert sum(improved_series.values) >= sum(series.values) - 1e-12
    _report("5 (radar correctness)", True)


def test_criterion_6_prompt_fidelity(fixtures_dir, tmp_path):
    paper_prompts = {
        "simplified": "Simplify the following text: ",
        "easier": "Make the following text easier to understand: ",
        "esl": ("Change the following text to be easier to understand for "
                "someone who is a non-native English speaker: "),
        "older": ("Change the following text to be easier to understand for "
                  "someone who is older: "),
        "read_aloud": "Make the following text easier to understand when read out loud: ",
    }
    assert {pid: t.prefix for pid, t in PROMPTS.items()} == paper_prompts
    frozen = json.loads((fixtures_dir / "prompt_prefixes.json").read_text(encoding="utf-8"))
    for pid, prefix in paper_prompts.items():
        assert frozen[pid].encode("utf-8") == prefix.encode("utf-8")
    # mock corpus build is byte-deterministic across runs
    out1, out2 = tmp_path / "r1", tmp_path / "r2"
    build_artificial_corpus(fixtures_dir / "snippets", "simplified", MockChatClient(), out1)
    build_artificial_corpus(fixtures_dir / "snippets", "simplified", MockChatClient(), out2)
    files1 = sorted(p.name for p in out1.iterdir())
    assert files1 == sorted(p.name for p in out2.iterdir())
    for name in files1:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
    _report("6 (prompt fidelity + mock determinism)", True)


def test_criterion_7_ssml_validity():
    rng = random.Random(99)
    texts = [
        "call 520-555-0100 on 1/5/2023",
        "a <tag> & some \"quotes\" here",
        "plain sentence with several words inside",
        "",
        "ünïcode tëxt works too",
    ]
    kinds = ["break", "emphasis", "prosody", "soft_voice", "say_as", "substitute", "phoneme"]
    rendered = 0
    for _ in range(1000):
        text = rng.choice(texts)
        anns = []
        for _k in range(rng.randint(0, 6)):
            kind = rng.choice(kinds)
            start = rng.randint(0, len(text))
            end = rng.randint(start, len(text))
            params = {
                "break": {"duration_ms": rng.randint(0, 10_000)},
                "emphasis": {"level": rng.choice(["reduced", "moderate", "strong"])},
                "prosody": {"volume": rng.choice(["soft", "loud"]),
                            "rate": rng.choice(["slow", "fast"])},
                "soft_voice": {},
                "say_as": {"format": rng.choice(["date", "telephone"])},
                "substitute": {"alias": "repl & <text>"},
                "phoneme": {"alphabet": "ipa", "notation": "təst"},
            }[kind]
            from textbench.speech import SpeechAnnotation

            anns.append(SpeechAnnotation(span=(start, end), kind=kind, **params))
        try:
            ssml = render_ssml(text, anns)
        except OverlapError:
            continue
        rendered += 1
        root = ET.fromstring(ssml)
        for el in root.iter():
            assert el.tag in ELEMENT_WHITELIST
        assert "".join(root.itertext()) == text
    assert rendered >= 200
    _report("7 (SSML validity)", True, f"{rendered} rendered documents checked")


def test_criterion_8_cross_path_equality(lexicon_paths, corpus_dir, tmp_path):
    from textbench.cli import main as cli_main

    config_path = tmp_path / "workbench.toml"
    config_path.write_text(
        f"""
[lexicon]
bundle_dir = "{Path(list(lexicon_paths.values())[0]).parent}"

[server]
data_dir = "{tmp_path / 'cli_data'}"
""",
        encoding="utf-8",
    )
    code = cli_main([
        "--config", str(config_path), "score", str(corpus_dir), "--save", "--name", "fixture",
    ])
    assert code == 0
    cli_bytes = (tmp_path / "cli_data" / "profiles" / "fixture.json").read_bytes()

    config = WorkbenchConfig(lexicon_paths=dict(lexicon_paths), data_dir=str(tmp_path / "srv_data"))
    client = TestClient(create_app(config))
    docs = {p.name: p.read_text(encoding="utf-8") for p in sorted(corpus_dir.glob("*.txt"))}
    assert client.post("/corpora/fixture", json={"documents": docs}).status_code == 200
    server_bytes = (tmp_path / "srv_data" / "profiles" / "fixture.json").read_bytes()
    assert cli_bytes == server_bytes

    doc = docs["doc01.txt"]
    serial = client.post("/analyze", json={"text": doc}).json()
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(
            lambda _: client.post("/analyze", json={"text": doc}).json(), range(32)
        ))
    assert all(r == serial for r in results)
    _report("8 (cross-path equality + concurrency)", True)
