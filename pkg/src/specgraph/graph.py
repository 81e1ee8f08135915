"""Typed, attributed program graphs plus GraphML and linearization.

Nodes carry a syntactic kind (GraphML key d0, "type") and a textual label
(key d1, "label"); edges are AST_CHILD for parent-child containment and
SPEC for clause attachment. Serialization is hand-rolled so output bytes
are fully deterministic and round-trip exactly.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from xml.sax.saxutils import escape, quoteattr

from .frontends import SpecClause, SyntaxTree
from .frontends.dafny import parse_dafny_with_specs

AST_CHILD = "AST_CHILD"
SPEC = "SPEC"

_XMLNS = "http://graphml.graphdrawing.org/xmlns"

_FUNCTION_KINDS = {"FUNCTION_DECL", "METHOD_DECL"}
_LOOP_KINDS = {"FOR_STMT", "WHILE_STMT", "DO_STMT"}


class GraphError(Exception):
    pass


@dataclass(frozen=True)
class GraphNode:
    id: str
    kind: str
    label: str


@dataclass
class ArtifactGraph:
    nodes: list[GraphNode] = field(default_factory=list)
    edges: list[tuple[str, str, str]] = field(default_factory=list)
    root: str = ""
    origin: str = ""

    def node_ids(self) -> set[str]:
        return {n.id for n in self.nodes}


class _Builder:
    def __init__(self, origin: str):
        self.graph = ArtifactGraph(origin=origin)
        self.seq = 0
        self.functions: list[tuple[str, int, str]] = []  # (name, line, id)
        self.classes: list[tuple[str, int, str]] = []
        self.loops: list[tuple[int, str]] = []           # (line, id)

    def add_node(self, kind: str, label: str, line: int, col: int) -> str:
        node_id = f"{kind}:{line}:{col}:{self.seq}"
        self.seq += 1
        self.graph.nodes.append(GraphNode(node_id, kind, label or kind))
        return node_id

    def add_tree(self, node: SyntaxTree, parent_id: str | None) -> str:
        line, col = node.span
        node_id = self.add_node(node.kind, node.label, line, col)
        if parent_id is not None:
            self.graph.edges.append((parent_id, node_id, AST_CHILD))
        if node.kind in _FUNCTION_KINDS:
            self.functions.append((_simple_name(node.label), line, node_id))
        elif node.kind == "CLASS_DECL":
            self.classes.append((node.label, line, node_id))
        elif node.kind in _LOOP_KINDS:
            self.loops.append((line, node_id))
        for child in node.children:
            self.add_tree(child, node_id)
        return node_id

    def attach_clause(self, clause: SpecClause) -> None:
        attach_id = self._resolve(clause) or self.graph.root
        label = f"{clause.kind}: {clause.text}" if clause.text else clause.kind
        clause_id = self.add_node("SPEC_CLAUSE", label, clause.attach.line, 0)
        self.graph.edges.append((attach_id, clause_id, SPEC))

    def _resolve(self, clause: SpecClause) -> str | None:
        attach = clause.attach
        if attach.kind == "function":
            return _pick_named(self.functions, attach.name, attach.line)
        if attach.kind == "class":
            return _pick_named(self.classes, attach.name, attach.line)
        if attach.kind == "loop":
            candidates = [(line, nid) for line, nid in self.loops
                          if abs(line - attach.line) <= 2]
            if candidates:
                return min(candidates, key=lambda c: abs(c[0] - attach.line))[1]
        return None


def _simple_name(label: str) -> str:
    return label.split("(", 1)[0].strip()


def _pick_named(entries: list[tuple[str, int, str]], name: str | None,
                line: int) -> str | None:
    named = [e for e in entries if name is None or e[0] == name]
    if not named:
        return None
    exact = [e for e in named if e[1] == line]
    if exact:
        return exact[0][2]
    if len(named) == 1:
        return named[0][2]
    nearest = min(named, key=lambda e: abs(e[1] - line))
    return nearest[2] if abs(nearest[1] - line) <= 3 else None


def build_graph(tree: SyntaxTree, clauses: list[SpecClause],
                origin: str) -> ArtifactGraph:
    """One graph node per tree node plus one SPEC_CLAUSE node per clause.

    AST_CHILD edges mirror the tree in source order; each clause hangs off
    its attachment node (matching function/class/loop) or the root.
    """
    if tree.kind != "FILE":
        raise GraphError("tree root must be FILE, got %s" % tree.kind)
    builder = _Builder(origin)
    builder.graph.root = builder.add_tree(tree, None)
    for clause in clauses:
        builder.attach_clause(clause)
    return builder.graph


def build_dafny_graph(source: str, origin: str) -> ArtifactGraph:
    tree, clauses = parse_dafny_with_specs(source)
    return build_graph(tree, clauses, origin)


def write_graphml(graph: ArtifactGraph) -> str:
    """Byte-deterministic GraphML: nodes then edges, both in insertion
    order; d0 holds the kind ("type"), d1 the label."""
    out = [
        '<?xml version="1.0" encoding="utf-8"?>',
        f'<graphml xmlns="{_XMLNS}">',
        '  <key id="d0" for="node" attr.name="type" attr.type="string"/>',
        '  <key id="d1" for="node" attr.name="label" attr.type="string"/>',
        '  <key id="d2" for="edge" attr.name="label" attr.type="string"/>',
        '  <graph edgedefault="directed">',
    ]
    for node in graph.nodes:
        out.append(f'    <node id={quoteattr(node.id)}>')
        out.append(f'      <data key="d0">{escape(node.kind)}</data>')
        out.append(f'      <data key="d1">{escape(node.label)}</data>')
        out.append('    </node>')
    for src, dst, label in graph.edges:
        out.append(f'    <edge source={quoteattr(src)} target={quoteattr(dst)}>')
        out.append(f'      <data key="d2">{escape(label)}</data>')
        out.append('    </edge>')
    out.append('  </graph>')
    out.append('</graphml>')
    return "\n".join(out) + "\n"


def read_graphml(text: str) -> ArtifactGraph:
    """Inverse of write_graphml for documents it produced (or structural
    equivalents). write(read(t)) == t holds for all written documents."""
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise GraphError(f"malformed GraphML: {exc}") from exc
    ns = {"g": _XMLNS}
    graph_el = root.find("g:graph", ns)
    if graph_el is None:
        raise GraphError("missing <graph> element")
    node_keys, edge_keys = {}, {}
    for key in root.findall("g:key", ns):
        target = node_keys if key.get("for") == "node" else edge_keys
        target[key.get("id")] = key.get("attr.name")
    graph = ArtifactGraph()
    seen: set[str] = set()
    for el in graph_el.findall("g:node", ns):
        node_id = el.get("id")
        if node_id is None or node_id in seen:
            raise GraphError(f"bad or duplicate node id: {node_id!r}")
        seen.add(node_id)
        data = {node_keys.get(d.get("key")): (d.text or "")
                for d in el.findall("g:data", ns)}
        if "type" not in data:
            raise GraphError(f"node {node_id!r} lacks the d0 'type' key")
        graph.nodes.append(GraphNode(node_id, data["type"],
                                     data.get("label", "")))
    for el in graph_el.findall("g:edge", ns):
        src, dst = el.get("source"), el.get("target")
        if src not in seen or dst not in seen:
            raise GraphError(f"edge references unknown node: {src!r} -> {dst!r}")
        data = {edge_keys.get(d.get("key")): (d.text or "")
                for d in el.findall("g:data", ns)}
        graph.edges.append((src, dst, data.get("label", "")))
    if graph.nodes:
        graph.root = graph.nodes[0].id
    return graph


_WS_RE = re.compile(r"\s+")


def linearize(graph: ArtifactGraph) -> str:
    """Pre-order walk over AST_CHILD edges emitting one "kind:label" token
    per node; a node's SPEC children follow right after its subtree.
    Whitespace inside labels is collapsed to '_' so one node stays one
    token."""
    if not graph.nodes:
        return ""
    by_id = {n.id: n for n in graph.nodes}
    ast_children: dict[str, list[str]] = {}
    spec_children: dict[str, list[str]] = {}
    for src, dst, label in graph.edges:
        bucket = ast_children if label == AST_CHILD else spec_children
        bucket.setdefault(src, []).append(dst)
    tokens: list[str] = []

    def visit(node_id: str) -> None:
        node = by_id[node_id]
        tokens.append(f"{node.kind}:{_WS_RE.sub('_', node.label)}")
        for child in ast_children.get(node_id, []):
            visit(child)
        for clause in spec_children.get(node_id, []):
            clause_node = by_id[clause]
            tokens.append(
                f"{clause_node.kind}:{_WS_RE.sub('_', clause_node.label)}")

    visit(graph.root)
    return " ".join(tokens)
