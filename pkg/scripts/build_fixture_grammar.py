#!/usr/bin/env python3
"""Rebuild the fixture grammar table from the fixture corpus.

Run from the repo root after changing fixtures/corpus or the tagger:

    python scripts/build_fixture_grammar.py
"""

from pathlib import Path

from textbench.lexicon import build_grammar_table, write_grammar_table

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    counts = build_grammar_table(ROOT / "fixtures" / "corpus")
    out = ROOT / "fixtures" / "lexicon" / "grammar.tsv"
    write_grammar_table(counts, out)
    print(f"wrote {out} ({len(counts)} structures, {sum(counts.values())} sentences)")


if __name__ == "__main__":
    main()
