import re

import pytest

from specgraph.frontends import (Attachment, SpecClause, SyntaxTree,
                                 extract_annotations, parse_c, parse_java)
from specgraph.graph import (AST_CHILD, SPEC, GraphError, build_dafny_graph,
                             build_graph, linearize, read_graphml,
                             write_graphml)

from conftest import ALGORITHMS

ANNOTATED_C = """\
/*@ requires x > 0;
    ensures \\result == x + 1;
*/
int increment(int x) {
    return x + 1;
}
"""


def graph_of(source: str):
    tree = parse_c(source)
    clauses = extract_annotations(source, "ACSL")
    return tree, clauses, build_graph(tree, clauses, "test.c")


def test_decl_edge_shape():
    tree = parse_c("void g(void){ int i = 0; }")
    graph = build_graph(tree, [], "g.c")
    by_id = {n.id: n for n in graph.nodes}
    decl_edges = [(s, d) for s, d, label in graph.edges
                  if label == AST_CHILD and by_id[s].kind == "DECL_STMT"]
    assert len(decl_edges) == 1
    assert by_id[decl_edges[0][1]].kind == "VAR_DECL"
    assert by_id[decl_edges[0][1]].label == "i"


def test_empty_tree_single_node():
    graph = build_graph(SyntaxTree("FILE"), [], "empty.c")
    assert len(graph.nodes) == 1
    assert graph.edges == []
    assert graph.root == graph.nodes[0].id


def test_two_clause_fixture_counts():
    tree, clauses, graph = graph_of(ANNOTATED_C)
    assert len(clauses) == 2
    spec_nodes = [n for n in graph.nodes if n.kind == "SPEC_CLAUSE"]
    spec_edges = [e for e in graph.edges if e[2] == SPEC]
    assert len(spec_nodes) == 2
    assert len(spec_edges) == 2
    targets = {e[1] for e in spec_edges}
    assert targets == {n.id for n in spec_nodes}


@pytest.mark.parametrize("name", sorted(ALGORITHMS))
def test_count_arithmetic(name):
    tree, clauses, graph = graph_of(ALGORITHMS[name])
    assert len(graph.nodes) == tree.node_count() + len(clauses)
    ast_edges = [e for e in graph.edges if e[2] == AST_CHILD]
    spec_edges = [e for e in graph.edges if e[2] == SPEC]
    assert len(ast_edges) == tree.node_count() - 1
    assert len(spec_edges) == len(clauses)


def test_clause_attaches_to_named_function():
    _, _, graph = graph_of(ANNOTATED_C)
    by_id = {n.id: n for n in graph.nodes}
    for src, dst, label in graph.edges:
        if label == SPEC:
            assert by_id[src].kind == "FUNCTION_DECL"
            assert by_id[src].label == "increment"


def test_unresolvable_clause_attaches_to_root():
    tree = parse_c("int f(void){ return 0; }")
    clause = SpecClause("requires", "x > 0",
                        Attachment("function", "missing", 99), "ACSL")
    graph = build_graph(tree, [clause], "f.c")
    spec_edge = next(e for e in graph.edges if e[2] == SPEC)
    assert spec_edge[0] == graph.root


def test_ast_child_edges_form_tree():
    _, _, graph = graph_of(ALGORITHMS["binary_search"])
    parents: dict[str, str] = {}
    for src, dst, label in graph.edges:
        if label == AST_CHILD:
            assert dst not in parents, "node with two AST parents"
            parents[dst] = src
    ids = {n.id for n in graph.nodes if n.kind != "SPEC_CLAUSE"}
    assert set(parents) == ids - {graph.root}


def test_node_id_format_and_uniqueness():
    _, _, graph = graph_of(ANNOTATED_C)
    pattern = re.compile(r"^[A-Z_]+:\d+:\d+:\d+$")
    ids = [n.id for n in graph.nodes]
    assert len(ids) == len(set(ids))
    for node_id in ids:
        assert pattern.match(node_id), node_id
    seqs = [int(i.rsplit(":", 1)[1]) for i in ids]
    assert seqs == sorted(seqs)


def test_rejects_non_file_root():
    with pytest.raises(GraphError):
        build_graph(SyntaxTree("FUNCTION_DECL", "f"), [], "x.c")


# -- GraphML -------------------------------------------------------------------

def test_root_only_document_counts():
    graph = build_graph(SyntaxTree("FILE"), [], "e.c")
    doc = write_graphml(graph)
    assert doc.count("<node ") == 1
    assert doc.count("<edge ") == 0


def test_node_data_keys():
    tree = parse_c("void g(void){ int i = 0; }")
    doc = write_graphml(build_graph(tree, [], "g.c"))
    assert '<key id="d0" for="node" attr.name="type" attr.type="string"/>' in doc
    assert re.search(r'<data key="d0">VAR_DECL</data>\s*'
                     r'<data key="d1">i</data>', doc)


def test_two_node_edge_document():
    graph = build_graph(
        SyntaxTree("FILE", children=[SyntaxTree("FUNCTION_DECL", "main")]),
        [], "m.c")
    doc = write_graphml(graph)
    node_ids = re.findall(r'<node id="([^"]+)"', doc)
    assert len(node_ids) == 2
    edge = re.search(r'<edge source="([^"]+)" target="([^"]+)">\s*'
                     r'<data key="d2">([^<]+)</data>', doc)
    assert edge
    assert edge.group(1) == node_ids[0]
    assert edge.group(2) == node_ids[1]
    assert edge.group(3) == "AST_CHILD"


@pytest.mark.parametrize("name", sorted(ALGORITHMS))
def test_write_read_write_fixpoint(name):
    _, _, graph = graph_of(ALGORITHMS[name])
    doc = write_graphml(graph)
    assert write_graphml(read_graphml(doc)) == doc


def test_round_trip_preserves_structure():
    _, _, graph = graph_of(ANNOTATED_C)
    loaded = read_graphml(write_graphml(graph))
    assert [(n.id, n.kind, n.label) for n in loaded.nodes] \
        == [(n.id, n.kind, n.label) for n in graph.nodes]
    assert loaded.edges == graph.edges
    assert loaded.root == graph.root


def test_read_rejects_dangling_edge():
    doc = write_graphml(build_graph(SyntaxTree("FILE"), [], "e.c"))
    broken = doc.replace("</graph>",
                         '<edge source="FILE:1:1:0" target="nope:1:1:9">'
                         '<data key="d2">AST_CHILD</data></edge></graph>')
    with pytest.raises(GraphError, match="unknown node"):
        read_graphml(broken)


def test_read_rejects_missing_type_key():
    doc = ('<?xml version="1.0" encoding="utf-8"?>\n'
           '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">\n'
           '<key id="d1" for="node" attr.name="label" attr.type="string"/>\n'
           '<graph edgedefault="directed">\n'
           '<node id="a"><data key="d1">x</data></node>\n'
           '</graph></graphml>')
    with pytest.raises(GraphError, match="type"):
        read_graphml(doc)


def test_read_rejects_malformed_xml():
    with pytest.raises(GraphError, match="malformed"):
        read_graphml("<graphml><unclosed>")


# -- linearization --------------------------------------------------------------

def test_single_node_label_defaults_to_kind():
    graph = build_graph(SyntaxTree("FILE"), [], "e.c")
    assert linearize(graph) == "FILE:FILE"


def test_file_function_walk():
    graph = build_graph(
        SyntaxTree("FILE", children=[SyntaxTree("FUNCTION_DECL", "main")]),
        [], "m.c")
    assert linearize(graph) == "FILE:FILE FUNCTION_DECL:main"


def test_clause_tokens_follow_owner_subtree():
    # hand walk: FILE, FUNCTION_DECL f, VAR_DECL x, COMPOUND, RETURN,
    # BINARY +, REF x, LIT 1, then the two clauses of f, in order
    _, _, graph = graph_of(ANNOTATED_C)
    tokens = linearize(graph).split(" ")
    fn_index = tokens.index("FUNCTION_DECL:increment")
    clause_indexes = [i for i, t in enumerate(tokens)
                      if t.startswith("SPEC_CLAUSE:")]
    subtree_kinds = {"VAR_DECL", "COMPOUND_STMT", "RETURN_STMT",
                     "BINARY_OPERATOR", "DECL_REF_EXPR", "INTEGER_LITERAL"}
    last_subtree = max(i for i, t in enumerate(tokens)
                      if t.split(":")[0] in subtree_kinds)
    assert clause_indexes == [last_subtree + 1, last_subtree + 2]
    assert tokens[clause_indexes[0]].startswith("SPEC_CLAUSE:requires:")
    assert fn_index < clause_indexes[0]


@pytest.mark.parametrize("name", sorted(ALGORITHMS))
def test_token_count_equals_node_count(name):
    _, _, graph = graph_of(ALGORITHMS[name])
    assert len(linearize(graph).split()) == len(graph.nodes)


def test_empty_graph_empty_text():
    from specgraph.graph import ArtifactGraph
    assert linearize(ArtifactGraph()) == ""


# -- Dafny composition ----------------------------------------------------------

def test_dafny_increment_graph():
    source = ("method increment(x: int) returns (r: int)\n"
              "    requires x > 0\n"
              "    ensures r == x + 1\n"
              "{\n    r := x + 1;\n}\n")
    graph = build_dafny_graph(source, "increment.dfy")
    by_id = {n.id: n for n in graph.nodes}
    spec_edges = [e for e in graph.edges if e[2] == SPEC]
    assert len(spec_edges) == 2
    for src, dst, _ in spec_edges:
        assert by_id[src].kind == "METHOD_DECL"


def test_dafny_empty_file_root_only():
    graph = build_dafny_graph("", "empty.dfy")
    assert len(graph.nodes) == 1
    assert graph.edges == []


def test_dafny_while_invariant_attaches_to_loop():
    source = ("method count(n: int) returns (c: int)\n"
              "{\n  var i := 0;\n  while i < n\n    invariant i <= n\n"
              "  {\n    i := i + 1;\n  }\n  c := i;\n}\n")
    graph = build_dafny_graph(source, "count.dfy")
    by_id = {n.id: n for n in graph.nodes}
    spec_edges = [e for e in graph.edges if e[2] == SPEC]
    assert len(spec_edges) == 1
    assert by_id[spec_edges[0][0]].kind == "WHILE_STMT"
