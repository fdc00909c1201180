"""Corpus profiling, max normalization, cosine similarity, radar series.

Corpora are summarized by field-wise mean vectors. Vectors are compared
after dividing each metric by its maximum over a chosen normalization set.
Two conventions are supported for that set: ``include`` (comparison targets
participate in the maxima) and ``exclude`` (maxima come from the corpus
profiles only). Similarity runs over the fourteen difficulty metrics; the
radar shows all fifteen axes including word count.

Similarity values can be computed over plain normalized magnitudes
(``magnitude``) or over direction-adjusted easiness scores (``easiness``,
the same orientation the radar uses: higher always reads easier).
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyCorpus, ZeroVector
from .metrics import (
    EASIER_WHEN_HIGHER,
    FIELD_ORDER,
    SIMILARITY_FIELDS,
    AnalyzeConfig,
    MetricVector,
    analyze,
)

CONVENTIONS = ("include", "exclude")
ORIENTATIONS = ("magnitude", "easiness")


@dataclass(frozen=True)
class CorpusProfile:
    name: str
    doc_count: int
    mean_vector: MetricVector

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "doc_count": self.doc_count,
            "mean_vector": self.mean_vector.as_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CorpusProfile":
        return cls(
            name=data["name"],
            doc_count=data["doc_count"],
            mean_vector=MetricVector.from_dict(data["mean_vector"]),
        )


def mean_vector(vectors) -> MetricVector:
    vectors = list(vectors)
    if not vectors:
        raise EmptyCorpus("cannot average zero vectors")
    n = len(vectors)
    sums = {name: 0.0 for name in FIELD_ORDER}
    for vec in vectors:
        for name in FIELD_ORDER:
            sums[name] += getattr(vec, name)
    return MetricVector(**{name: sums[name] / n for name in FIELD_ORDER})


def profile_documents(name: str, documents: dict[str, str], bundle, config=None) -> CorpusProfile:
    """Profile named document texts; result is independent of dict order."""
    if not documents:
        raise EmptyCorpus(f"corpus {name!r} has no documents")
    config = config or AnalyzeConfig()
    vectors = [analyze(documents[key], bundle, config) for key in sorted(documents)]
    return CorpusProfile(name=name, doc_count=len(vectors), mean_vector=mean_vector(vectors))


def profile_corpus(doc_dir, bundle, config=None, name=None, jobs: int = 1) -> CorpusProfile:
    """Profile every file in a directory (sorted, optionally in parallel)."""
    doc_dir = Path(doc_dir)
    paths = sorted(p for p in doc_dir.glob("*") if p.is_file())
    if not paths:
        raise EmptyCorpus(f"no documents in {doc_dir}")
    config = config or AnalyzeConfig()
    name = name or doc_dir.name
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            vectors = list(
                pool.map(lambda p: analyze(p.read_text(encoding="utf-8"), bundle, config), paths)
            )
    else:
        vectors = [analyze(p.read_text(encoding="utf-8"), bundle, config) for p in paths]
    return CorpusProfile(name=name, doc_count=len(vectors), mean_vector=mean_vector(vectors))


def field_maxima(vectors, fields=FIELD_ORDER) -> dict[str, float]:
    maxima = {}
    for name in fields:
        maxima[name] = max((getattr(v, name) for v in vectors), default=0.0)
    return maxima


def normalize(vectors: dict[str, MetricVector], fields=FIELD_ORDER) -> dict[str, dict[str, float]]:
    """Divide every field by its maximum over the input set (0 stays 0)."""
    maxima = field_maxima(vectors.values(), fields)
    out = {}
    for name, vec in vectors.items():
        out[name] = {
            f: (getattr(vec, f) / maxima[f] if maxima[f] > 0 else 0.0) for f in fields
        }
    return out


def cosine_similarity(a, b) -> float:
    """dot(a, b) / (|a| * |b|); raises ZeroVector on a zero-norm input."""
    if len(a) != len(b):
        raise ValueError(f"vector length mismatch: {len(a)} vs {len(b)}")
    norm_a = math.sqrt(sum(x * x for x in a))
    norm_b = math.sqrt(sum(y * y for y in b))
    if norm_a == 0.0 or norm_b == 0.0:
        raise ZeroVector("cosine similarity is undefined for zero vectors")
    return sum(x * y for x, y in zip(a, b)) / (norm_a * norm_b)


def _normalized_fields(vector: MetricVector, maxima, fields, orientation: str):
    values = []
    for name in fields:
        m = maxima.get(name, 0.0)
        n = getattr(vector, name) / m if m > 0 else 0.0
        n = min(max(n, 0.0), 1.0)
        if orientation == "easiness" and name not in EASIER_WHEN_HIGHER:
            n = 1.0 - n
        values.append(n)
    return tuple(values)


def similarity_vector(vector: MetricVector, maxima, orientation: str = "magnitude"):
    """The fourteen-metric vector used for cosine comparison."""
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    return _normalized_fields(vector, maxima, SIMILARITY_FIELDS, orientation)


@dataclass(frozen=True)
class RadarSeries:
    name: str
    axes: tuple[str, ...]
    values: tuple[float, ...]  # easiness scores in [0, 1]
    normalization_set: tuple[str, ...]


def radar_series(vector: MetricVector, normalization_set: dict[str, MetricVector], name: str = "text") -> RadarSeries:
    """Direction-adjusted, max-normalized axis values for one vector.

    Per axis: n = value / max over the set; easiness = n when a higher value
    reads easier, else 1 - n; values are clamped to [0, 1].
    """
    if not normalization_set:
        raise ValueError("normalization set is empty")
    maxima = field_maxima(normalization_set.values())
    values = _normalized_fields(vector, maxima, FIELD_ORDER, "easiness")
    return RadarSeries(
        name=name,
        axes=FIELD_ORDER,
        values=values,
        normalization_set=tuple(sorted(normalization_set)),
    )


@dataclass
class SimilarityTable:
    convention: str
    orientation: str
    targets: tuple[str, ...]
    corpora: tuple[str, ...]
    cells: dict[str, dict[str, float]] = field(default_factory=dict)  # corpus -> target -> sim

    def as_dict(self) -> dict:
        return {
            "convention": self.convention,
            "orientation": self.orientation,
            "targets": list(self.targets),
            "corpora": list(self.corpora),
            "cells": self.cells,
        }


def similarity_table(
    corpora: dict[str, MetricVector],
    targets: dict[str, MetricVector],
    convention: str = "include",
    orientation: str = "magnitude",
) -> SimilarityTable:
    """Cosine similarity of every corpus vector against every target vector."""
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    pool = dict(corpora)
    if convention == "include":
        pool.update(targets)
    maxima = field_maxima(pool.values(), SIMILARITY_FIELDS)
    table = SimilarityTable(
        convention=convention,
        orientation=orientation,
        targets=tuple(targets),
        corpora=tuple(corpora),
    )
    target_vecs = {
        t: similarity_vector(vec, maxima, orientation) for t, vec in targets.items()
    }
    for cname, cvec in corpora.items():
        row = {}
        nvec = similarity_vector(cvec, maxima, orientation)
        for tname, tvec in target_vecs.items():
            row[tname] = cosine_similarity(nvec, tvec)
        table.cells[cname] = row
    return table


def load_fixture_vectors(csv_path) -> tuple[dict[str, MetricVector], dict[str, MetricVector]]:
    """Read the bundled reference vectors (role: corpus or target)."""
    corpora: dict[str, MetricVector] = {}
    targets: dict[str, MetricVector] = {}
    with open(csv_path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            kwargs = {}
            for name in FIELD_ORDER:
                raw = (row.get(name) or "").strip()
                kwargs[name] = float(raw.replace(",", "")) if raw else 0.0
            vec = MetricVector(**kwargs)
            role = row["role"].strip().lower()
            if role == "target":
                targets[row["name"].strip()] = vec
            elif role == "corpus":
                corpora[row["name"].strip()] = vec
            else:
                raise ValueError(f"unknown role {row['role']!r} in {csv_path}")
    return corpora, targets


def load_expected_similarities(csv_path) -> dict[tuple[str, str], float]:
    """Reference similarity cells: columns name, target, similarity."""
    expected = {}
    with open(csv_path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            expected[(row["name"].strip(), row["target"].strip())] = float(row["similarity"])
    return expected


def discrepancy_report(table: SimilarityTable, expected: dict[tuple[str, str], float], tolerance: float = 0.02) -> dict:
    """Cell-by-cell comparison against reference similarities."""
    cells = []
    n_within = 0
    for (corpus, target), exp in sorted(expected.items()):
        got = table.cells.get(corpus, {}).get(target)
        if got is None:
            cells.append({
                "corpus": corpus, "target": target, "expected": exp,
                "computed": None, "delta": None, "within_tolerance": False,
            })
            continue
        delta = got - exp
        within = abs(delta) <= tolerance
        n_within += within
        cells.append({
            "corpus": corpus, "target": target, "expected": exp,
            "computed": round(got, 6), "delta": round(delta, 6),
            "within_tolerance": within,
        })
    return {
        "convention": table.convention,
        "orientation": table.orientation,
        "tolerance": tolerance,
        "n_within": n_within,
        "n_total": len(cells),
        "cells": cells,
        "out_of_tolerance": [c for c in cells if not c["within_tolerance"]],
    }


def write_report(report: dict, out_path) -> None:
    Path(out_path).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
