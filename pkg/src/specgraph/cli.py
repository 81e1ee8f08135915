"""Command-line interface.

`specgraph run` drives the whole pipeline from a config file, environment
variables (SPECGRAPH_* prefix), and flags (flags win); the remaining
subcommands expose each stage over explicit --in/--out roots. Exit codes:
0 success, 1 fatal, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path, PurePosixPath

from .corpus import Language, scan_corpus, write_mirrored
from .embed import EmbedError, embed_many, load_embeddings, save_embeddings
from .graph import linearize, read_graphml, write_graphml
from .match import dump_matches, load_matches, match_all, report_distribution
from .pipeline import (ConfigError, PipelineConfig, graph_for_artifact,
                       make_provider, run_pipeline, transform_tree, STAGES)
from .specgen.acsl import gen_acsl
from .specgen.jml import gen_jml
from .specgen.dafny import gen_dafny
from .transpile import c_to_csharp, c_to_java, sanitize_class_name

_ENV_PREFIX = "SPECGRAPH_"

EXIT_OK = 0
EXIT_FATAL = 1
EXIT_CONFIG = 2


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_CONFIG
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (OSError, ValueError, EmbedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FATAL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specgraph",
        description="Program graphs, generated contracts, and similarity "
                    "matching for C/Java/C#/Dafny artefacts.")
    parser.set_defaults(command=None)
    sub = parser.add_subparsers(dest="command")

    run = sub.add_parser("run", help="run the configured pipeline stages")
    run.add_argument("--corpus", help="corpus root directory")
    run.add_argument("--out", help="output root directory")
    run.add_argument("--stages",
                     help="comma-separated stage list (default: all): "
                          + ",".join(STAGES))
    run.add_argument("--provider", choices=["structural", "service"])
    run.add_argument("--endpoint", help="embedding service URL")
    run.add_argument("--dim", type=int, help="built-in embedder dimension")
    run.add_argument("--jobs", type=int, help="per-stage file parallelism")
    run.add_argument("--config", help="JSON config file")
    run.set_defaults(handler=_cmd_run)

    for name, language, ext, helptext in (
            ("gen-acsl", Language.C, ".c", "annotate C files with contracts"),
            ("gen-jml", Language.Java, ".java",
             "annotate Java files with contracts"),
            ("to-java", Language.C, ".java", "convert C files to Java"),
            ("to-csharp", Language.C, ".cs", "convert C files to C#"),
            ("gen-dafny", Language.CSharp, ".dfy",
             "generate Dafny methods from C# files")):
        cmd = sub.add_parser(name, help=helptext)
        cmd.add_argument("--in", dest="in_root", required=True)
        cmd.add_argument("--out", dest="out_root", required=True)
        cmd.add_argument("--jobs", type=int, default=1)
        cmd.set_defaults(handler=_cmd_transform, tool=name,
                         language=language, ext=ext)

    graphs = sub.add_parser("build-graphs",
                            help="build .graphml files for a dataset tree")
    graphs.add_argument("--in", dest="in_root", required=True)
    graphs.add_argument("--out", dest="out_root", required=True)
    graphs.add_argument("--jobs", type=int, default=1)
    graphs.set_defaults(handler=_cmd_build_graphs)

    embed = sub.add_parser("embed", help="embed .graphml files to vectors")
    embed.add_argument("--in", dest="in_root", required=True,
                       help="directory of .graphml files")
    embed.add_argument("--out", dest="out_path", required=True,
                       help="embeddings JSON path")
    embed.add_argument("--provider", choices=["structural", "service"],
                       default="structural")
    embed.add_argument("--endpoint")
    embed.add_argument("--dim", type=int, default=256)
    embed.set_defaults(handler=_cmd_embed)

    match = sub.add_parser("match", help="pairwise similarity records")
    match.add_argument("--embeddings", required=True)
    match.add_argument("--out", dest="out_path", required=True)
    match.set_defaults(handler=_cmd_match)

    report = sub.add_parser("report", help="distribution summary of matches")
    report.add_argument("--matches", required=True)
    report.add_argument("--out-json")
    report.add_argument("--out-text")
    report.set_defaults(handler=_cmd_report)
    return parser


def _env(name: str) -> str | None:
    return os.environ.get(_ENV_PREFIX + name)


def _cmd_run(args) -> int:
    file_cfg: dict = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            file_cfg = json.load(fh)

    def pick(flag_value, env_name: str, file_key: str, default):
        if flag_value is not None:
            return flag_value
        env_value = _env(env_name)
        if env_value is not None:
            return env_value
        return file_cfg.get(file_key, default)

    stages_raw = pick(args.stages, "STAGES", "stages", ",".join(STAGES))
    if isinstance(stages_raw, str):
        stages = [s for s in stages_raw.split(",") if s]
    else:
        stages = list(stages_raw)
    config = PipelineConfig(
        corpus_root=str(pick(args.corpus, "CORPUS", "corpus_root", "")),
        out_root=str(pick(args.out, "OUT", "out_root", "")),
        stages=stages,
        provider=str(pick(args.provider, "PROVIDER", "provider",
                          "structural")),
        service_endpoint=pick(args.endpoint, "ENDPOINT", "endpoint", None),
        embed_dim=int(pick(args.dim, "DIM", "dim", 256)),
        jobs=int(pick(args.jobs, "JOBS", "jobs", 1)),
    )
    if not config.corpus_root or not config.out_root:
        raise ConfigError("--corpus and --out are required (flag, env, or "
                          "config file)")
    manifest = run_pipeline(config, on_status=print)
    print("pipeline:", manifest["status"])
    return EXIT_OK if manifest["status"] == "ok" else EXIT_FATAL


_TRANSFORMS = {
    "gen-acsl": lambda art: gen_acsl(art.source)[0],
    "gen-jml": lambda art: gen_jml(art.source)[0],
    "gen-dafny": lambda art: gen_dafny(art.source),
    "to-java": lambda art: c_to_java(
        art.source, sanitize_class_name(PurePosixPath(art.path).stem)),
    "to-csharp": lambda art: c_to_csharp(
        art.source, sanitize_class_name(PurePosixPath(art.path).stem)),
}


def _cmd_transform(args) -> int:
    artifacts = scan_corpus(args.in_root, args.language)
    result = transform_tree(artifacts, _TRANSFORMS[args.tool],
                            Path(args.out_root), args.ext, args.jobs,
                            print, args.tool)
    return _summarize(result.outputs, len(result.failures), result.inputs)


def _cmd_build_graphs(args) -> int:
    ok = failed = total = 0
    for language in (Language.C, Language.Java, Language.Dafny):
        for art in scan_corpus(args.in_root, language):
            total += 1
            try:
                doc = write_graphml(graph_for_artifact(art))
                write_mirrored(args.out_root, art.path, ".graphml", doc)
                print(f"ok {art.path}")
                ok += 1
            except Exception as exc:
                print(f"fail {art.path}: {exc}")
                failed += 1
    return _summarize(ok, failed, total)


def _cmd_embed(args) -> int:
    config = PipelineConfig(corpus_root="", out_root="", stages=[],
                            provider=args.provider,
                            service_endpoint=args.endpoint,
                            embed_dim=args.dim)
    if config.provider == "service" and not config.service_endpoint:
        raise ConfigError("--provider service needs --endpoint")
    provider = make_provider(config)
    root = Path(args.in_root)
    files = sorted(root.rglob("*.graphml"))
    keys = [PurePosixPath(f.relative_to(root)).as_posix() for f in files]
    texts = [linearize(read_graphml(f.read_text(encoding="utf-8")))
             for f in files]
    vectors = dict(zip(keys, embed_many(provider, texts, keys)))
    for key in keys:
        print(f"ok {key}")
    if vectors:
        save_embeddings(args.out_path, vectors)
    return _summarize(len(vectors), 0, len(files))


def _cmd_match(args) -> int:
    embeddings = load_embeddings(args.embeddings)
    records = match_all(embeddings)
    Path(args.out_path).write_text(dump_matches(records), encoding="utf-8")
    print(f"{len(records)} pairs from {len(embeddings)} embeddings")
    return EXIT_OK


def _cmd_report(args) -> int:
    records = load_matches(args.matches)
    summary = report_distribution(records)
    if args.out_json:
        with open(args.out_json, "w", encoding="utf-8") as fh:
            json.dump(summary.to_json(), fh, indent=1)
            fh.write("\n")
    if args.out_text:
        Path(args.out_text).write_text(summary.to_text(), encoding="utf-8")
    print(summary.to_text(), end="")
    return EXIT_OK


def _summarize(ok: int, failed: int, total: int) -> int:
    print(f"{ok} ok, {failed} failed, {total} total")
    if total > 0 and ok == 0:
        return EXIT_FATAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
