"""Pairwise similarity over embeddings: matches.json, ranking, and
distribution reporting."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

import numpy as np

from .embed import EmbeddingVector

# Bucket edges follow the score bands used when eyeballing results: weak,
# low, moderate, strong, near-duplicate.
BUCKETS = ((0.0, 0.35), (0.35, 0.60), (0.60, 0.80), (0.80, 0.95), (0.95, 1.0))


class MatchError(Exception):
    pass


@dataclass(frozen=True)
class MatchRecord:
    file1: str
    file2: str
    similarity: float

    def __post_init__(self):
        if self.file1 >= self.file2:
            raise MatchError("record pair not canonical: %r >= %r"
                             % (self.file1, self.file2))
        if not 0.0 <= self.similarity <= 1.0:
            raise MatchError("similarity %r outside [0, 1]" % self.similarity)


def cosine(a: EmbeddingVector, b: EmbeddingVector) -> float:
    """dot(a,b) / (|a||b|); zero when either vector is all-zero, so
    fallback vectors never match anything (not even each other)."""
    if a.dim != b.dim:
        raise MatchError(f"dim mismatch: {a.dim} vs {b.dim}")
    va = np.asarray(a.values)
    vb = np.asarray(b.values)
    na = float(np.linalg.norm(va))
    nb = float(np.linalg.norm(vb))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(va, vb) / (na * nb))


def similarity(a: EmbeddingVector, b: EmbeddingVector) -> float:
    """Cosine clamped into [0,1]. The lower clamp is semantic (negative
    correlation reads as "no similarity"); the upper one only absorbs
    floating-point wobble above 1.0 for identical vectors."""
    return max(0.0, min(1.0, cosine(a, b)))


def match_all(embeddings: dict[str, EmbeddingVector]) -> list[MatchRecord]:
    """One record per unordered pair (no self-pairs), sorted by
    (file1, file2)."""
    paths = sorted(embeddings)
    dims = {embeddings[p].dim for p in paths}
    if len(dims) > 1:
        by_dim: dict[int, str] = {}
        for p in paths:
            by_dim.setdefault(embeddings[p].dim, p)
        ex = sorted(by_dim.values())
        raise MatchError("dim mismatch between %r and %r" % (ex[0], ex[1]))
    records = []
    for i, p1 in enumerate(paths):
        for p2 in paths[i + 1:]:
            records.append(MatchRecord(p1, p2,
                                       similarity(embeddings[p1],
                                                  embeddings[p2])))
    return records


def rank_neighbors(query: str, records: list[MatchRecord],
                   k: int) -> list[tuple[str, float]]:
    """The k most similar counterparts of query, descending, ties broken by
    path."""
    if k <= 0:
        raise MatchError("k must be positive")
    neighbors = []
    seen_query = False
    for rec in records:
        if rec.file1 == query:
            neighbors.append((rec.file2, rec.similarity))
            seen_query = True
        elif rec.file2 == query:
            neighbors.append((rec.file1, rec.similarity))
            seen_query = True
    if not seen_query:
        raise MatchError(f"query path not present in records: {query!r}")
    neighbors.sort(key=lambda item: (-item[1], item[0]))
    return neighbors[:k]


@dataclass
class DistributionSummary:
    total: int
    buckets: list[dict]
    minimum: float
    maximum: float
    mean: float
    top: list[MatchRecord]
    bottom: list[MatchRecord]

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "buckets": self.buckets,
            "min": self.minimum,
            "max": self.maximum,
            "mean": self.mean,
            "top": [_record_json(r) for r in self.top],
            "bottom": [_record_json(r) for r in self.bottom],
        }

    def to_text(self) -> str:
        lines = ["pairs: %d" % self.total]
        for b in self.buckets:
            lines.append("  [%.2f, %.2f%s  %6d  (%.1f%%)" % (
                b["lo"], b["hi"], "]" if b["hi"] == 1.0 else ")",
                b["count"], 100.0 * b["fraction"]))
        lines.append("min %.6f  max %.6f  mean %.6f"
                     % (self.minimum, self.maximum, self.mean))
        if self.top:
            lines.append("top pairs:")
            lines += ["  %.6f  %s | %s" % (r.similarity, r.file1, r.file2)
                      for r in self.top]
        if self.bottom:
            lines.append("bottom pairs:")
            lines += ["  %.6f  %s | %s" % (r.similarity, r.file1, r.file2)
                      for r in self.bottom]
        return "\n".join(lines) + "\n"


def report_distribution(records: list[MatchRecord]) -> DistributionSummary:
    total = len(records)
    buckets = []
    for lo, hi in BUCKETS:
        if hi == 1.0:
            count = sum(1 for r in records if lo <= r.similarity <= hi)
        else:
            count = sum(1 for r in records if lo <= r.similarity < hi)
        buckets.append({"lo": lo, "hi": hi, "count": count,
                        "fraction": count / total if total else 0.0})
    scores = [r.similarity for r in records]
    ranked = sorted(records, key=lambda r: (-r.similarity, r.file1, r.file2))
    return DistributionSummary(
        total=total,
        buckets=buckets,
        minimum=min(scores) if scores else 0.0,
        maximum=max(scores) if scores else 0.0,
        mean=sum(scores) / total if total else 0.0,
        top=ranked[:10],
        bottom=list(reversed(ranked[-10:])) if ranked else [],
    )


def _record_json(rec: MatchRecord) -> dict:
    return {"file1": rec.file1, "file2": rec.file2,
            "similarity": round(rec.similarity, 6)}


def dump_matches(records: list[MatchRecord]) -> str:
    """matches.json content: array of {file1, file2, similarity} with the
    score fixed at six decimal places for byte determinism."""
    rows = []
    for rec in records:
        rows.append('  {"file1": %s, "file2": %s, "similarity": %.6f}' % (
            json.dumps(rec.file1), json.dumps(rec.file2), rec.similarity))
    if not rows:
        return "[]\n"
    return "[\n" + ",\n".join(rows) + "\n]\n"


def load_matches(path: str | os.PathLike) -> list[MatchRecord]:
    with open(path, encoding="utf-8") as fh:
        rows = json.load(fh)
    return [MatchRecord(r["file1"], r["file2"], float(r["similarity"]))
            for r in rows]


def export_neighborhood_dot(query: str, records: list[MatchRecord],
                            k: int) -> str:
    """DOT digraph of the query's top-k neighborhood, for external viewers."""
    lines = ["digraph neighborhood {",
             '  %s [shape=box];' % json.dumps(query)]
    for path, score in rank_neighbors(query, records, k):
        lines.append('  %s -> %s [label="%.4f"];'
                     % (json.dumps(query), json.dumps(path), score))
    lines.append("}")
    return "\n".join(lines) + "\n"
