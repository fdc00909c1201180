#!/usr/bin/env python3
"""Recompute the reference similarity table from the bundled metric vectors.

Runs every documented configuration (normalization convention x value
orientation), prints the similarity matrix next to the reference cells, and
writes a JSON discrepancy report under reports/.

    python scripts/reproduce_similarity_table.py
"""

import json
from pathlib import Path

from textbench.compare import (
    discrepancy_report,
    load_expected_similarities,
    load_fixture_vectors,
    similarity_table,
)

ROOT = Path(__file__).resolve().parent.parent
TOLERANCE = 0.02


def main() -> None:
    corpora, targets = load_fixture_vectors(ROOT / "fixtures" / "paper_tables.csv")
    expected = load_expected_similarities(ROOT / "fixtures" / "paper_similarities.csv")
    reports = {}
    for convention in ("include", "exclude"):
        for orientation in ("magnitude", "easiness"):
            table = similarity_table(corpora, targets, convention, orientation)
            report = discrepancy_report(table, expected, tolerance=TOLERANCE)
            reports[f"{convention}/{orientation}"] = report
            print(f"\n=== convention={convention} orientation={orientation} "
                  f"({report['n_within']}/{report['n_total']} cells within ±{TOLERANCE})")
            print(f"{'corpus':22s} {'vs original':>24s} {'vs simplified':>24s}")
            for corpus in table.corpora:
                row = []
                for target in table.targets:
                    got = table.cells[corpus][target]
                    exp = expected[(corpus, target)]
                    row.append(f"{got:.3f} (ref {exp:.3f}, {got - exp:+.3f})")
                print(f"{corpus:22s} {row[0]:>24s} {row[1]:>24s}")
    best = max(reports, key=lambda k: reports[k]["n_within"])
    out = ROOT / "reports"
    out.mkdir(exist_ok=True)
    out_path = out / "table5_discrepancies.json"
    out_path.write_text(
        json.dumps({"tolerance": TOLERANCE, "best_configuration": best,
                    "configurations": reports}, indent=2) + "\n",
        encoding="utf-8",
    )
    print(f"\nbest configuration: {best} "
          f"({reports[best]['n_within']}/{reports[best]['n_total']} cells within ±{TOLERANCE})")
    print(f"report written to {out_path}")


if __name__ == "__main__":
    main()
