"""End-to-end pipeline: derived-dataset generation, graph construction,
embedding, matching, and reporting, with a run manifest.

Stages run sequentially in the configured order; within a stage files are
processed with bounded parallelism and results are collected in path order
so all outputs are byte-deterministic.
"""

from __future__ import annotations

import hashlib
import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path, PurePosixPath
from typing import Callable, Optional

from .corpus import Language, ProgramArtifact, scan_corpus, write_mirrored
from .embed import (EmbedError, StructuralEmbedder, ServiceEmbedder,
                    embed_many, save_embeddings, load_embeddings)
from .frontends import extract_annotations, parse_c, parse_java
from .graph import (ArtifactGraph, build_dafny_graph, build_graph, linearize,
                    read_graphml, write_graphml)
from .match import dump_matches, load_matches, match_all, report_distribution
from .specgen.acsl import gen_acsl
from .specgen.jml import gen_jml
from .specgen.dafny import gen_dafny
from .transpile import c_to_csharp, c_to_java, sanitize_class_name

log = logging.getLogger("specgraph")

STAGES = ("acsl", "java", "jml", "csharp", "dafny",
          "graphs", "embed", "match", "report")
# (earlier, later): when both appear, earlier must come first.
_STAGE_DEPS = (("java", "jml"), ("csharp", "dafny"),
               ("graphs", "embed"), ("embed", "match"))
# Stages where zero successes over nonzero inputs means the run failed;
# match/report legitimately emit zero pairs for tiny inputs.
_PER_FILE_STAGES = {"acsl", "java", "jml", "csharp", "dafny",
                    "graphs", "embed"}

_EMBED_BATCH = 32


class ConfigError(Exception):
    pass


class PipelineError(Exception):
    pass


@dataclass
class PipelineConfig:
    corpus_root: str
    out_root: str
    stages: list[str]
    provider: str = "structural"
    service_endpoint: Optional[str] = None
    embed_dim: int = 256
    jobs: int = 1

    def validate(self) -> None:
        unknown = [s for s in self.stages if s not in STAGES]
        if unknown:
            raise ConfigError(f"unknown stages: {unknown}")
        if len(set(self.stages)) != len(self.stages):
            raise ConfigError("duplicate stages")
        for earlier, later in _STAGE_DEPS:
            if earlier in self.stages and later in self.stages \
                    and self.stages.index(earlier) > self.stages.index(later):
                raise ConfigError(
                    f"stage {later!r} requires {earlier!r} to run first")
        if self.provider not in ("structural", "service"):
            raise ConfigError(f"unknown provider: {self.provider}")
        if self.provider == "service" and not self.service_endpoint:
            raise ConfigError("provider 'service' needs an endpoint")
        if self.embed_dim <= 0:
            raise ConfigError("embed dim must be positive")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")


@dataclass
class StageResult:
    name: str
    inputs: int = 0
    outputs: int = 0
    failures: list[dict] = field(default_factory=list)
    duration_s: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "inputs": self.inputs,
                "outputs": self.outputs, "failures": self.failures,
                "duration_s": round(self.duration_s, 3)}


class _WarningCollector(logging.Handler):
    def __init__(self):
        super().__init__(level=logging.WARNING)
        self.records: list[dict] = []
        self.stage = ""

    def emit(self, record: logging.LogRecord) -> None:
        self.records.append({"stage": self.stage,
                             "message": record.getMessage()})


def run_pipeline(config: PipelineConfig,
                 on_status: Callable[[str], None] | None = None) -> dict:
    """Execute the configured stages; returns the manifest (also written to
    out_root/run_manifest.json). Raises ConfigError before any work when
    the config is invalid."""
    config.validate()
    out_root = Path(config.out_root)
    out_root.mkdir(parents=True, exist_ok=True)
    status = on_status or (lambda line: log.info("%s", line))
    collector = _WarningCollector()
    log.addHandler(collector)
    manifest: dict = {
        "config": {
            "corpus_root": str(config.corpus_root),
            "out_root": str(config.out_root),
            "stages": list(config.stages),
            "provider": config.provider,
            "endpoint": config.service_endpoint,
            "embed_dim": config.embed_dim,
            "jobs": config.jobs,
        },
        "started_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "input_hashes": _hash_inputs(config.corpus_root),
        "stages": [],
        "status": "ok",
    }
    fatal = False
    try:
        for stage in config.stages:
            started = time.monotonic()
            collector.stage = stage
            runner = _STAGE_RUNNERS[stage]
            try:
                result = runner(config, out_root, status)
            except Exception as exc:
                result = StageResult(stage)
                result.failures.append({"path": "", "error": str(exc)})
                fatal = True
                status(f"stage {stage} failed: {exc}")
            result.duration_s = time.monotonic() - started
            manifest["stages"].append(result.to_json())
            status("stage %s: %d in, %d out, %d failed"
                   % (stage, result.inputs, result.outputs,
                      len(result.failures)))
            if stage in _PER_FILE_STAGES and result.inputs > 0 \
                    and result.outputs == 0:
                fatal = True
            if fatal:
                break
    finally:
        log.removeHandler(collector)
    manifest["warnings"] = len(collector.records)
    manifest["status"] = "failed" if fatal else "ok"
    manifest["finished_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ",
                                            time.gmtime())
    warn_path = out_root / "warnings.jsonl"
    with open(warn_path, "w", encoding="utf-8") as fh:
        for record in collector.records:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
    with open(out_root / "run_manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=1)
        fh.write("\n")
    return manifest


def _hash_inputs(corpus_root: str) -> dict[str, str]:
    hashes = {}
    root = Path(corpus_root)
    if not root.is_dir():
        return hashes
    for lang in Language:
        for path in sorted(root.rglob("*" + lang.extension)):
            rel = PurePosixPath(path.relative_to(root)).as_posix()
            hashes[rel] = hashlib.sha256(path.read_bytes()).hexdigest()
    return hashes


# -- generation stages ---------------------------------------------------------

def transform_tree(artifacts: list[ProgramArtifact],
                   transform: Callable[[ProgramArtifact], str],
                   out_root: Path, new_ext: str, jobs: int,
                   status: Callable[[str], None],
                   stage_name: str) -> StageResult:
    """Apply transform per artifact, mirroring paths under out_root."""
    result = StageResult(stage_name, inputs=len(artifacts))

    def one(art: ProgramArtifact) -> tuple[str, str | None]:
        try:
            write_mirrored(out_root, art.path, new_ext, transform(art))
            return art.path, None
        except Exception as exc:  # per-file isolation
            return art.path, str(exc)

    outcomes = _map_jobs(artifacts, one, jobs)
    for path, error in outcomes:
        if error is None:
            result.outputs += 1
            status(f"ok {path}")
        else:
            result.failures.append({"path": path, "error": error})
            status(f"fail {path}: {error}")
    return result


def _map_jobs(items, fn, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _stage_acsl(config, out_root, status) -> StageResult:
    artifacts = scan_corpus(config.corpus_root, Language.C)
    return transform_tree(artifacts, lambda a: gen_acsl(a.source)[0],
                          out_root / "acsl", ".c", config.jobs, status,
                          "acsl")


def _stage_java(config, out_root, status) -> StageResult:
    artifacts = scan_corpus(config.corpus_root, Language.C)

    def transform(art: ProgramArtifact) -> str:
        stem = PurePosixPath(art.path).stem
        return c_to_java(art.source, sanitize_class_name(stem))

    return transform_tree(artifacts, transform, out_root / "java", ".java",
                          config.jobs, status, "java")


def _stage_jml(config, out_root, status) -> StageResult:
    artifacts = scan_corpus(out_root / "java", Language.Java)
    return transform_tree(artifacts, lambda a: gen_jml(a.source)[0],
                          out_root / "jml", ".java", config.jobs, status,
                          "jml")


def _stage_csharp(config, out_root, status) -> StageResult:
    artifacts = scan_corpus(config.corpus_root, Language.C)

    def transform(art: ProgramArtifact) -> str:
        stem = PurePosixPath(art.path).stem
        return c_to_csharp(art.source, sanitize_class_name(stem))

    return transform_tree(artifacts, transform, out_root / "csharp", ".cs",
                          config.jobs, status, "csharp")


def _stage_dafny(config, out_root, status) -> StageResult:
    artifacts = scan_corpus(out_root / "csharp", Language.CSharp)
    return transform_tree(artifacts, lambda a: gen_dafny(a.source),
                          out_root / "dafny", ".dfy", config.jobs, status,
                          "dafny")


# -- graph / embed / match / report stages -------------------------------------

def graph_for_artifact(artifact: ProgramArtifact) -> ArtifactGraph:
    """Build the attributed graph for one artifact, annotation-aware per
    language. C# has no graph form; its content flows in via the Dafny
    dataset instead."""
    if artifact.language is Language.C:
        tree = parse_c(artifact.source)
        clauses = extract_annotations(artifact.source, "ACSL")
        return build_graph(tree, clauses, artifact.path)
    if artifact.language is Language.Java:
        tree = parse_java(artifact.source)
        clauses = extract_annotations(artifact.source, "JML")
        return build_graph(tree, clauses, artifact.path)
    if artifact.language is Language.Dafny:
        return build_dafny_graph(artifact.source, artifact.path)
    raise PipelineError(f"no graph frontend for {artifact.language.name}")


def _graph_datasets(config, out_root) -> list[tuple[str, Path, Language]]:
    datasets = []
    if "acsl" in config.stages:
        datasets.append(("acsl", out_root / "acsl", Language.C))
    if "jml" in config.stages:
        datasets.append(("jml", out_root / "jml", Language.Java))
    elif "java" in config.stages:
        datasets.append(("java", out_root / "java", Language.Java))
    if "dafny" in config.stages:
        datasets.append(("dafny", out_root / "dafny", Language.Dafny))
    if not datasets:
        root = Path(config.corpus_root)
        datasets = [("corpus", root, lang)
                    for lang in (Language.C, Language.Java, Language.Dafny)]
    return datasets


def _stage_graphs(config, out_root, status) -> StageResult:
    result = StageResult("graphs")
    graphs_root = out_root / "graphs"
    for ds_name, ds_root, language in _graph_datasets(config, out_root):
        artifacts = scan_corpus(ds_root, language)
        result.inputs += len(artifacts)

        def one(art: ProgramArtifact) -> tuple[str, str | None]:
            try:
                doc = write_graphml(graph_for_artifact(art))
                write_mirrored(graphs_root / ds_name, art.path, ".graphml",
                               doc)
                return art.path, None
            except Exception as exc:
                return art.path, str(exc)

        for path, error in _map_jobs(artifacts, one, config.jobs):
            shown = f"{ds_name}/{path}"
            if error is None:
                result.outputs += 1
                status(f"ok {shown}")
            else:
                result.failures.append({"path": shown, "error": error})
                status(f"fail {shown}: {error}")
    return result


def make_provider(config: PipelineConfig):
    if config.provider == "structural":
        return StructuralEmbedder(dim=config.embed_dim)
    return ServiceEmbedder(config.service_endpoint)


def _stage_embed(config, out_root, status) -> StageResult:
    result = StageResult("embed")
    graphs_root = out_root / "graphs"
    files = sorted(graphs_root.rglob("*.graphml")) if graphs_root.is_dir() \
        else []
    result.inputs = len(files)
    if not files:
        raise PipelineError(f"no .graphml files under {graphs_root}")
    provider = make_provider(config)
    keys, texts = [], []
    for path in files:
        rel = PurePosixPath(path.relative_to(graphs_root)).as_posix()
        keys.append(rel)
        texts.append(linearize(read_graphml(path.read_text(encoding="utf-8"))))
    vectors = {}
    for start in range(0, len(keys), _EMBED_BATCH):
        batch_keys = keys[start:start + _EMBED_BATCH]
        batch_texts = texts[start:start + _EMBED_BATCH]
        try:
            for key, vec in zip(batch_keys,
                                embed_many(provider, batch_texts, batch_keys)):
                vectors[key] = vec
                result.outputs += 1
                status(f"ok {key}")
        except EmbedError as exc:
            for key in batch_keys:
                result.failures.append({"path": key, "error": str(exc)})
                status(f"fail {key}: {exc}")
    if vectors:
        save_embeddings(out_root / "embeddings.json", vectors)
    return result


def _stage_match(config, out_root, status) -> StageResult:
    result = StageResult("match")
    embeddings = load_embeddings(out_root / "embeddings.json")
    result.inputs = len(embeddings)
    records = match_all(embeddings)
    (out_root / "matches.json").write_text(dump_matches(records),
                                           encoding="utf-8")
    result.outputs = len(records)
    status(f"ok matches.json ({len(records)} pairs)")
    return result


def _stage_report(config, out_root, status) -> StageResult:
    result = StageResult("report")
    records = load_matches(out_root / "matches.json")
    result.inputs = len(records)
    summary = report_distribution(records)
    with open(out_root / "report.json", "w", encoding="utf-8") as fh:
        json.dump(summary.to_json(), fh, indent=1)
        fh.write("\n")
    (out_root / "report.txt").write_text(summary.to_text(), encoding="utf-8")
    result.outputs = 2
    status("ok report.json / report.txt")
    return result


_STAGE_RUNNERS = {
    "acsl": _stage_acsl,
    "java": _stage_java,
    "jml": _stage_jml,
    "csharp": _stage_csharp,
    "dafny": _stage_dafny,
    "graphs": _stage_graphs,
    "embed": _stage_embed,
    "match": _stage_match,
    "report": _stage_report,
}
