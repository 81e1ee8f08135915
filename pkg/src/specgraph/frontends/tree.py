"""Language-neutral syntax trees and specification clauses.

Every frontend (C, Java, Dafny) produces the same structure so graphs built
from different languages stay comparable. Node kinds follow C-style names;
the full vocabulary is listed in docs/node-kinds.md.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

# Node kinds any frontend may emit. UNKNOWN_STMT / STATEMENT are the
# degradation kinds: constructs outside a frontend's subset become leaves
# carrying the raw text, never a crash.
NODE_KINDS = frozenset({
    "FILE",
    "FUNCTION_DECL", "METHOD_DECL", "CLASS_DECL", "STRUCT_DECL",
    "FIELD_DECL", "VAR_DECL", "DECL_STMT",
    "COMPOUND_STMT", "IF_STMT", "WHILE_STMT", "DO_STMT", "FOR_STMT",
    "SWITCH_STMT", "CASE_STMT", "DEFAULT_STMT",
    "RETURN_STMT", "BREAK_STMT", "CONTINUE_STMT", "NULL_STMT",
    "BINARY_OPERATOR", "UNARY_OPERATOR", "CONDITIONAL_OPERATOR",
    "CALL_EXPR", "ARRAY_SUBSCRIPT_EXPR", "MEMBER_EXPR", "NEW_EXPR",
    "INIT_LIST_EXPR", "DECL_REF_EXPR",
    "INTEGER_LITERAL", "FLOATING_LITERAL", "STRING_LITERAL",
    "CHARACTER_LITERAL", "BOOLEAN_LITERAL", "NULL_LITERAL",
    "STATEMENT", "UNKNOWN_STMT",
})

# Clause keywords understood across annotation dialects.
CLAUSE_KINDS = frozenset({
    "requires", "ensures", "invariant", "assigns", "assignable",
    "assert", "assume", "decreases",
})

# Which of the known clause kinds each dialect admits. "assigns" is the
# C-dialect frame clause, "assignable" the Java-dialect one; the rest are
# shared. Dafny has native keywords and no comment-borne clauses.
DIALECT_KINDS = {
    "ACSL": frozenset({"requires", "ensures", "invariant", "assigns",
                       "assert", "assume", "decreases"}),
    "JML": frozenset({"requires", "ensures", "invariant", "assignable",
                      "assert", "assume", "decreases"}),
    "DafnyNative": frozenset({"requires", "ensures", "invariant",
                              "assert", "assume", "decreases"}),
}

ATTACH_KINDS = frozenset({"function", "loop", "class", "file"})


class FrontendError(Exception):
    """Parse or extraction failure; carries the offending 1-based line."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass
class SyntaxTree:
    """One node of the uniform structure tree.

    span is the (line, column) of the node's first token, 1-based. offsets
    are character offsets into the original source (internal, used for
    slicing out condition/expression text) and do not take part in
    structural comparison.
    """

    kind: str
    label: str = ""
    span: tuple[int, int] = (1, 1)
    children: list["SyntaxTree"] = field(default_factory=list)
    offsets: Optional[tuple[int, int]] = field(
        default=None, compare=False, repr=False)

    def walk(self) -> Iterator["SyntaxTree"]:
        """Pre-order traversal over the subtree, including self."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def node_count(self) -> int:
        return sum(1 for _ in self.walk())

    def canonical(self) -> str:
        """Deterministic text form; two trees are structurally identical
        iff their canonical serializations are byte-equal."""
        out: list[str] = []
        self._canonical(out, 0)
        return "\n".join(out) + "\n"

    def _canonical(self, out: list[str], depth: int) -> None:
        out.append("%s%s %r @%d:%d" % (
            "  " * depth, self.kind, self.label, self.span[0], self.span[1]))
        for child in self.children:
            child._canonical(out, depth + 1)


@dataclass
class Attachment:
    """Where a clause belongs: a function/class/loop header or the file."""

    kind: str                     # function | loop | class | file
    name: Optional[str] = None    # header identifier, when one exists
    line: int = 0                 # 1-based line of the attachment target


@dataclass
class SpecClause:
    """One formal-annotation clause, stripped of comment markers."""

    kind: str                     # CLAUSE_KINDS member, or raw keyword
    text: str
    attach: Attachment
    dialect: str                  # ACSL | JML | DafnyNative

    def is_known_kind(self) -> bool:
        return self.kind in CLAUSE_KINDS

    def validate(self) -> None:
        if "/*@" in self.text or "@*/" in self.text or "//@" in self.text:
            raise ValueError("clause text contains comment delimiters: %r"
                             % self.text)
        if self.attach.kind not in ATTACH_KINDS:
            raise ValueError("bad attachment kind %r" % self.attach.kind)
        if self.is_known_kind() and self.kind not in DIALECT_KINDS[self.dialect]:
            raise ValueError("clause kind %r not valid in dialect %s"
                             % (self.kind, self.dialect))
