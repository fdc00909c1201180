"""Batch front door: score corpora, compare against reference tables, render
radar SVGs, build grammar tables, and run LLM corpus builds.

Exit codes: 0 success, 1 internal error, 2 bad input. stdout carries data
only; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import compare as compare_mod
from .config import WorkbenchConfig, bundle_dir_paths, load_config
from .errors import EmptyCorpus, MissingFile, ParseError, TextbenchError, UnknownProfile
from .lexicon import build_grammar_table, write_grammar_table
from .llm import PROMPTS, HttpChatClient, MockChatClient, RateLimiter, RetryPolicy, build_artificial_corpus
from .metrics import FIELD_ORDER, AnalyzeConfig
from .radar_svg import render_radar_svg
from .speech import SpeechAnnotation, VoiceConfig, detect_say_as, render_ssml
from .store import ProfileStore, StoredProfile, fingerprint_paths
from .tagging import RuleTagger

# paper-style display precision per metric family
_PRECISION = {
    "word_count": 0,
    "content_word_frequency": 0,
    "grammar_frequency": 0,
    "specificity": 2,
    "ambiguity": 2,
    "concept_density": 2,
    "topic_density": 2,
    "pct_nouns": 0,
    "pct_verbs": 0,
    "pct_adjectives": 0,
    "pct_adverbs": 0,
    "chain_count": 3,
    "chain_length": 3,
    "chain_span": 3,
    "cross_chains": 4,
}


def _fmt_cell(name: str, value: float) -> str:
    digits = _PRECISION[name]
    if digits == 0:
        return f"{value:,.0f}"
    return f"{value:.{digits}f}"


def report_table(columns: dict[str, "object"], out_format: str = "text") -> str:
    """15 metric rows x N named vector columns, as aligned text or CSV."""
    names = list(columns)
    rows = []
    for metric in FIELD_ORDER:
        row = [metric] + [_fmt_cell(metric, getattr(columns[n], metric)) for n in names]
        rows.append(row)
    if out_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["metric"] + names)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [max(len(r[i]) for r in rows + [["metric"] + names]) for i in range(len(names) + 1)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(["metric"] + names, widths))]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def _bundle_from_args(args, config: WorkbenchConfig):
    paths = dict(config.lexicon_paths)
    if getattr(args, "bundle", None):
        paths = bundle_dir_paths(args.bundle)
    cfg = WorkbenchConfig(lexicon_paths=paths, reference_mesh_depth=config.reference_mesh_depth)
    return cfg.load_lexicon(), paths


def cmd_score(args, config) -> int:
    bundle, paths = _bundle_from_args(args, config)
    tagger = RuleTagger.load(config.tagger_model) if config.tagger_model else RuleTagger.load()
    profile = compare_mod.profile_corpus(
        args.dir, bundle, AnalyzeConfig(linkage=args.linkage, tagger=tagger),
        name=args.name, jobs=args.jobs,
    )
    if args.save:
        store = ProfileStore(Path(config.data_dir) / "profiles")
        target = store.save(StoredProfile(profile, fingerprint_paths(paths.values())))
        print(f"saved {target}", file=sys.stderr)
    if args.out == "json":
        print(json.dumps(profile.as_dict(), indent=2))
    else:
        sys.stdout.write(report_table({profile.name: profile.mean_vector}, "csv"))
    return 0


def cmd_compare(args, config) -> int:
    corpora, targets = compare_mod.load_fixture_vectors(args.fixtures)
    table = compare_mod.similarity_table(
        corpora, targets, convention=args.convention, orientation=args.orientation
    )
    writer = csv.writer(sys.stdout)
    target_names = list(table.targets)
    writer.writerow(["corpus"] + target_names)
    for corpus in table.corpora:
        writer.writerow([corpus] + [f"{table.cells[corpus][t]:.3f}" for t in target_names])
    if args.expected:
        expected = compare_mod.load_expected_similarities(args.expected)
        report = compare_mod.discrepancy_report(table, expected, tolerance=args.tolerance)
        if args.report:
            compare_mod.write_report(report, args.report)
            print(f"wrote discrepancy report to {args.report}", file=sys.stderr)
        print(
            f"{report['n_within']}/{report['n_total']} cells within "
            f"±{args.tolerance} of reference",
            file=sys.stderr,
        )
    return 0


def cmd_radar(args, config) -> int:
    store = ProfileStore(Path(config.data_dir) / "profiles")
    vectors = {}
    for name in [n for n in (args.profiles or "").split(",") if n]:
        vectors[name] = store.load(name).profile.mean_vector
    if args.target:
        target_path = Path(args.target)
        if target_path.exists():
            bundle, _ = _bundle_from_args(args, config)
            from .metrics import analyze

            vectors["target"] = analyze(target_path.read_text(encoding="utf-8"), bundle)
        else:
            vectors[args.target] = store.load(args.target).profile.mean_vector
    if not vectors:
        raise EmptyCorpus("no profiles or target to plot")
    series = [compare_mod.radar_series(vec, vectors, name=name) for name, vec in vectors.items()]
    svg = render_radar_svg(series)
    Path(args.out).write_text(svg, encoding="utf-8")
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def cmd_build_grammar(args, config) -> int:
    tagger = RuleTagger.load(config.tagger_model) if config.tagger_model else RuleTagger.load()
    counts = build_grammar_table(args.dir, tagger=tagger)
    write_grammar_table(counts, args.out)
    print(f"wrote {args.out} ({len(counts)} structures)", file=sys.stderr)
    return 0


def cmd_llm_build(args, config) -> int:
    if args.mock or config.llm.mock:
        client = MockChatClient()
    else:
        client = HttpChatClient(
            base_url=config.llm.base_url,
            path=config.llm.path,
            model_id=config.llm.model_id,
            temperature=config.llm.temperature,
        )
    manifest = build_artificial_corpus(
        args.snippets,
        args.prompt,
        client,
        args.out,
        concurrency=args.jobs,
        policy=RetryPolicy(max_attempts=config.llm.max_attempts),
        rate_limiter=RateLimiter(config.llm.min_interval_s),
    )
    ok = sum(1 for r in manifest if r["status"] == "ok")
    print(f"{ok}/{len(manifest)} snippets simplified into {args.out}", file=sys.stderr)
    return 0


def cmd_ssml(args, config) -> int:
    text = Path(args.textfile).read_text(encoding="utf-8")
    annotations = []
    if args.annotations:
        raw = json.loads(Path(args.annotations).read_text(encoding="utf-8"))
        annotations = [SpeechAnnotation.from_dict(a) for a in raw]
    if args.detect:
        annotations.extend(detect_say_as(text))
    voice = None
    if args.gender or args.accent:
        voice = VoiceConfig(gender=args.gender or "neutral", accent=args.accent or "en-US")
    document = render_ssml(text, annotations, voice)
    if args.out:
        Path(args.out).write_text(document, encoding="utf-8")
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        print(document)
    return 0


def cmd_serve(args, config) -> int:
    from .server import run

    if args.port:
        config.port = args.port
    if args.host:
        config.host = args.host
    run(config)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="textbench")
    parser.add_argument("--config", help="TOML config path (default: $WORKBENCH_CONFIG)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="profile a directory of documents")
    p.add_argument("dir")
    p.add_argument("--bundle", help="directory of lexicon TSVs")
    p.add_argument("--name", default=None)
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--linkage", choices=("exact", "synonym", "related"), default="exact")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--save", action="store_true", help="persist under the data directory")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("compare", help="similarity matrix over reference vectors")
    p.add_argument("--fixtures", default="fixtures/paper_tables.csv")
    p.add_argument("--convention", choices=("include", "exclude"), default="include")
    p.add_argument("--orientation", choices=("magnitude", "easiness"), default="magnitude")
    p.add_argument("--expected", help="CSV of reference similarity cells")
    p.add_argument("--tolerance", type=float, default=0.02)
    p.add_argument("--report", help="write a JSON discrepancy report here")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("radar", help="render a radar SVG for profiles and a target")
    p.add_argument("--profiles", default="")
    p.add_argument("--target", help="text file or stored profile name")
    p.add_argument("--bundle")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_radar)

    p = sub.add_parser("build-grammar", help="count sentence structures in a corpus")
    p.add_argument("dir")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build_grammar)

    p = sub.add_parser("llm-build", help="simplify a snippet corpus with an LLM")
    p.add_argument("snippets")
    p.add_argument("--prompt", choices=sorted(PROMPTS), required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=4)
    p.add_argument("--mock", action="store_true", help="use the offline deterministic client")
    p.set_defaults(func=cmd_llm_build)

    p = sub.add_parser("ssml", help="render annotated text as SSML")
    p.add_argument("textfile")
    p.add_argument("--annotations", help="JSON list of annotation objects")
    p.add_argument("--detect", action="store_true", help="auto-detect dates and phone numbers")
    p.add_argument("--gender", choices=("male", "female", "neutral"))
    p.add_argument("--accent")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ssml)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except (EmptyCorpus, MissingFile, ParseError, UnknownProfile, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TextbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
