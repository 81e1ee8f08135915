"""Acceptance criteria, one test per criterion.

Each test prints one "ACCEPT <name>: PASS" line when its assertions hold
(pytest -s shows them; any failure fails the test). Tolerances are pinned
in the assertions.
"""

import time

import pytest

from specgraph.corpus import Language, scan_corpus
from specgraph.embed import StructuralEmbedder, embed_graph, embed_text
from specgraph.frontends import (extract_annotations, parse_c,
                                 parse_dafny_with_specs, parse_java)
from specgraph.graph import (AST_CHILD, SPEC, build_dafny_graph, build_graph,
                             read_graphml, write_graphml)
from specgraph.match import cosine, match_all, similarity
from specgraph.pipeline import PipelineConfig, run_pipeline
from specgraph.specgen.acsl import gen_acsl
from specgraph.specgen.jml import gen_jml
from specgraph.specgen.dafny import gen_dafny
from specgraph.transpile import c_to_csharp, c_to_java, sanitize_class_name

from conftest import (ALGORITHMS, RENAMED_VARIANTS, UNRELATED,
                      write_benchmark_tree)
from test_specgen_acsl import DUAL_RETURN_FUNCTIONS
from test_specgen_dafny import MAX_CS, WHILE_CS
from test_specgen_jml import FIXTURE_CLASS
from test_transpile import GOLDENS


def report(name: str) -> None:
    print(f"ACCEPT {name}: PASS")


def test_corpus_arithmetic(tmp_path):
    base_expected, instances_expected = write_benchmark_tree(tmp_path)
    started = time.monotonic()
    base = scan_corpus(tmp_path / "base", Language.C)
    instances = scan_corpus(tmp_path / "eval", Language.C)
    elapsed = time.monotonic() - started
    assert len(base) == base_expected == 56
    assert len(instances) == instances_expected == 168
    variants = {a.variant for a in instances}
    assert variants == {"correct", "obvious", "subtle"}
    assert elapsed < 5.0
    report("corpus-arithmetic (56 base / 168 instances)")


def _ten_file_fixture() -> list[tuple[str, object, int, int]]:
    """(name, graph, tree_nodes, clause_count) for 10 mixed artifacts."""
    fixtures = []
    algo_names = sorted(ALGORITHMS)
    # four annotated C files
    for name in algo_names[:4]:
        annotated, _ = gen_acsl(ALGORITHMS[name])
        tree = parse_c(annotated)
        clauses = extract_annotations(annotated, "ACSL")
        graph = build_graph(tree, clauses, name + ".c")
        fixtures.append((name + ".c", graph, tree.node_count(), len(clauses)))
    # three JML-annotated Java files
    for name in algo_names[4:7]:
        java = c_to_java(ALGORITHMS[name], sanitize_class_name(name))
        annotated, _ = gen_jml(java)
        tree = parse_java(annotated)
        clauses = extract_annotations(annotated, "JML")
        graph = build_graph(tree, clauses, name + ".java")
        fixtures.append((name + ".java", graph, tree.node_count(),
                         len(clauses)))
    # three Dafny files from the C# route
    for name in algo_names[7:] + algo_names[:2]:
        if len(fixtures) == 10:
            break
        csharp = c_to_csharp(ALGORITHMS[name], sanitize_class_name(name))
        dafny = gen_dafny(csharp)
        tree, clauses = parse_dafny_with_specs(dafny)
        graph = build_dafny_graph(dafny, name + ".dfy")
        fixtures.append((name + ".dfy", graph, tree.node_count(),
                         len(clauses)))
    assert len(fixtures) == 10
    return fixtures


def test_graph_construction_counts():
    for name, graph, tree_nodes, clause_count in _ten_file_fixture():
        ast_edges = [e for e in graph.edges if e[2] == AST_CHILD]
        spec_edges = [e for e in graph.edges if e[2] == SPEC]
        assert len(graph.nodes) == tree_nodes + clause_count, name
        assert len(ast_edges) == tree_nodes - 1, name
        assert len(spec_edges) == clause_count, name
    report("graph-construction counts (10-file fixture)")


def test_graphml_round_trip_fixpoint():
    fixtures = _ten_file_fixture()
    started = time.monotonic()
    for name, graph, _, _ in fixtures:
        doc = write_graphml(graph)
        assert write_graphml(read_graphml(doc)) == doc, name
    elapsed = time.monotonic() - started
    assert elapsed < 1.0
    report("graphml write-read-write byte fixpoint")


def test_dual_postcondition_generation():
    for name, (source, cond, e1, e2) in DUAL_RETURN_FUNCTIONS.items():
        annotated, contracts = gen_acsl(source)
        ensures = [c for contract in contracts for c in contract.clauses
                   if c.kind == "ensures"]
        assert len(ensures) == 2, name
        assert ensures[0].text == f"({cond}) ==> \\result == {e1}", name
        assert ensures[1].text == f"!({cond}) ==> \\result == {e2}", name
        recovered = [c for c in extract_annotations(annotated, "ACSL")
                     if c.kind == "ensures"]
        assert [c.text for c in recovered] == [c.text for c in ensures], name
    report("dual postconditions on 5 conditional-return functions")


def test_jml_heuristics_exact_counts():
    _, contracts = gen_jml(FIXTURE_CLASS)
    kinds = [c.kind for contract in contracts for c in contract.clauses]
    assert kinds.count("invariant") == 3
    assert kinds.count("requires") == 1
    assert kinds.count("assignable") == 1
    assert len(kinds) == 5
    report("jml heuristics (3 invariants + 1 requires + 1 assignable)")


def test_dafny_generation_exact():
    max_out = gen_dafny(MAX_CS)
    assert max_out.count("ensures") == 2
    assert "ensures (a > b) ==> r == a" in max_out
    assert "ensures !(a > b) ==> r == b" in max_out
    while_out = gen_dafny(WHILE_CS)
    assert while_out.count("invariant") == 1
    assert while_out.count("decreases") == 1
    report("dafny dual ensures and loop invariant/decreases")


def test_transpilation_goldens():
    assert len(GOLDENS) == 10
    for c_path in GOLDENS:
        cls = sanitize_class_name(c_path.stem)
        source = c_path.read_text()
        assert c_to_java(source, cls) \
            == c_path.with_suffix(".java").read_text(), c_path.name
        assert c_to_csharp(source, cls) \
            == c_path.with_suffix(".cs").read_text(), c_path.name
    report("transpilation byte-exact goldens (10 x java + csharp)")


def test_similarity_metric_properties():
    provider = StructuralEmbedder()
    vectors = {name: embed_graph(provider,
                                 build_graph(parse_c(src), [], name))
               for name, src in sorted(ALGORITHMS.items())}
    # self-similarity
    for name, vec in vectors.items():
        assert abs(similarity(vec, vec) - 1.0) <= 1e-6, name
    # symmetry, exact
    names = sorted(vectors)
    for a in names:
        for b in names:
            assert similarity(vectors[a], vectors[b]) \
                == similarity(vectors[b], vectors[a])
    # range and count
    records = match_all(vectors)
    assert len(records) == len(names) * (len(names) - 1) // 2
    assert all(0.0 <= r.similarity <= 1.0 for r in records)
    # hand-computed cosine
    from specgraph.embed import EmbeddingVector
    a = EmbeddingVector(3, (1.0, 2.0, 2.0), "hand", "")
    b = EmbeddingVector(3, (2.0, 2.0, 1.0), "hand", "")
    assert abs(cosine(a, b) - 8.0 / 9.0) <= 1e-9
    report("similarity metric properties (self/symmetry/range/count/8-9ths)")


def test_qualitative_ordering_triples():
    provider = StructuralEmbedder()
    started = time.monotonic()

    def vec(source, origin):
        return embed_graph(provider, build_graph(parse_c(source), [],
                                                 origin))

    triples = sorted(RENAMED_VARIANTS)
    assert len(triples) >= 5
    for name in triples:
        original = vec(ALGORITHMS[name], "orig")
        variant = vec(RENAMED_VARIANTS[name], "variant")
        unrelated = vec(ALGORITHMS[UNRELATED[name]], "unrelated")
        assert similarity(original, variant) \
            > similarity(original, unrelated), name
    elapsed = time.monotonic() - started
    assert elapsed < 10.0
    report("qualitative ordering on %d algorithm triples" % len(triples))


def test_pipeline_determinism(tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    for name, source in sorted(ALGORITHMS.items()):
        (corpus / f"{name}.c").write_text(source)
    stages = ["acsl", "java", "jml", "csharp", "dafny", "graphs", "embed",
              "match"]
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    assert run_pipeline(PipelineConfig(str(corpus), str(out_a),
                                       stages))["status"] == "ok"
    assert run_pipeline(PipelineConfig(str(corpus), str(out_b),
                                       stages))["status"] == "ok"
    compared = 0
    for rel in sorted(p.relative_to(out_a) for p in out_a.rglob("*")
                      if p.is_file()):
        if rel.suffix == ".graphml" or rel.name in ("embeddings.json",
                                                    "matches.json"):
            assert (out_a / rel).read_bytes() \
                == (out_b / rel).read_bytes(), rel
            compared += 1
    assert compared > 0
    report("pipeline determinism (%d artifacts byte-identical)" % compared)
