"""Heuristic JML contract generation for Java sources.

Class fields yield type-driven invariants right after the class header
(numeric non-negative, boolean well-formed, references non-null); methods
get non-null requires for reference parameters, an optional non-negative
result ensures for size/count-flavoured names, and an assignable clause,
all placed directly above the declaration. Structure is found with
regular expressions, not the Java parser, so it also copes with slightly
off-grammar generated code.
"""

from __future__ import annotations

import re

from ..frontends import Attachment, SpecClause
from ..frontends.brackets import extract_method_bodies
from .contracts import GeneratedContract, has_annotation_above, indent_of, splice

_NUMERIC_TYPES = {"int", "long", "short", "byte", "float", "double"}
_NON_REFERENCE = _NUMERIC_TYPES | {"boolean", "char", "void"}

# Only these name fragments imply an intrinsically non-negative result.
_NONNEG_NAME_HINTS = ("length", "size", "count", "index", "find")

_CLASS_RE = re.compile(
    r"^(\s*)(?:(?:public|private|protected|static|final|abstract)\s+)*"
    r"class\s+(\w+)", re.MULTILINE)
_METHOD_RE = re.compile(
    r"^\s*((?:(?:public|private|protected|static|final|synchronized)\s+)+)"
    r"([\w\[\]]+)\s+(\w+)\s*\(([^)]*)\)\s*\{?\s*$")
_FIELD_RE = re.compile(
    r"^\s*((?:(?:public|private|protected|static|final|transient)\s+)*)"
    r"([\w\[\]]+)\s+(\w+)\s*(=.*)?;\s*$")
_KEYWORD_STARTS = {"return", "if", "while", "for", "switch", "else", "new",
                   "case", "break", "continue", "throw", "class"}


def gen_jml(source: str) -> tuple[str, list[GeneratedContract]]:
    lines = [ln for ln in source.split("\n")
             if not ln.lstrip().startswith("#")]
    text = "\n".join(lines)
    insertions: list[tuple[int, list[str]]] = []
    contracts: list[GeneratedContract] = []
    for match in _CLASS_RE.finditer(text):
        header_line = text.count("\n", 0, match.start()) + 1
        brace = text.find("{", match.end())
        if brace < 0:
            continue
        body, body_end = extract_method_bodies(text, brace)
        brace_line = text.count("\n", 0, brace) + 1
        class_ins, class_contracts = _class_invariants(
            match.group(2), header_line, brace_line, brace, body, text, lines)
        insertions.extend(class_ins)
        contracts.extend(class_contracts)
    contracts.sort(key=lambda c: c.insertion)
    return "\n".join(splice(lines, insertions)), contracts


def _class_invariants(class_name: str, header_line: int, brace_line: int,
                      brace: int, body: str, text: str, lines: list[str],
                      ) -> tuple[list[tuple[int, list[str]]],
                                 list[GeneratedContract]]:
    insertions: list[tuple[int, list[str]]] = []
    contracts: list[GeneratedContract] = []
    indent = indent_of(lines[header_line - 1]) + "    "
    attach = Attachment("class", class_name, header_line)

    invariant_lines: list[str] = []
    clauses: list[SpecClause] = []
    for type_name, field_name in _top_level_fields(body, brace + 1, text):
        inv = _field_invariant(type_name, field_name)
        if inv is None:
            continue
        invariant_lines.append(f"{indent}//@ public invariant {inv};")
        clause = SpecClause("invariant", inv, attach, "JML")
        clause.validate()
        clauses.append(clause)
    next_line = lines[brace_line].strip() if brace_line < len(lines) else ""
    if invariant_lines and not next_line.startswith("//@ public invariant"):
        insertions.append((brace_line, invariant_lines))
        contracts.append(GeneratedContract(class_name, header_line, clauses,
                                           header_line))

    for method in _top_level_methods(body, brace + 1, text):
        line_idx, name, ret_type, params = method
        method_clauses: list[SpecClause] = []
        block: list[str] = []
        m_attach = Attachment("function", name, line_idx + 1)
        m_indent = indent_of(lines[line_idx])
        for p_type, p_name in params:
            if _is_reference(p_type):
                block.append(f"{m_indent}//@ requires {p_name} != null;")
                method_clauses.append(SpecClause(
                    "requires", f"{p_name} != null", m_attach, "JML"))
        if ret_type in _NUMERIC_TYPES and _implies_non_negative(name):
            block.append(f"{m_indent}//@ ensures \\result >= 0;")
            method_clauses.append(SpecClause(
                "ensures", "\\result >= 0", m_attach, "JML"))
        block.append(f"{m_indent}//@ assignable \\everything;")
        method_clauses.append(SpecClause(
            "assignable", "\\everything", m_attach, "JML"))
        if has_annotation_above(lines, line_idx):
            continue
        insertions.append((line_idx, block))
        contracts.append(GeneratedContract(name, line_idx + 1, method_clauses,
                                           line_idx + 1))
    return insertions, contracts


def _field_invariant(type_name: str, field_name: str) -> str | None:
    if type_name in _NUMERIC_TYPES:
        return f"{field_name} >= 0"
    if type_name == "boolean":
        return f"{field_name} == true || {field_name} == false"
    if _is_reference(type_name):
        return f"{field_name} != null"
    return None


def _is_reference(type_name: str) -> bool:
    return type_name.endswith("[]") or type_name not in _NON_REFERENCE


def _implies_non_negative(method_name: str) -> bool:
    lowered = method_name.lower()
    return any(hint in lowered for hint in _NONNEG_NAME_HINTS)


def _top_level_fields(body: str, body_offset: int,
                      text: str) -> list[tuple[str, str]]:
    fields = []
    for line, _ in _depth_zero_lines(body, body_offset, text):
        match = _FIELD_RE.match(line)
        if not match:
            continue
        type_name = match.group(2)
        if type_name in _KEYWORD_STARTS:
            continue
        fields.append((type_name, match.group(3)))
    return fields


def _top_level_methods(body: str, body_offset: int, text: str,
                       ) -> list[tuple[int, str, str, list[tuple[str, str]]]]:
    methods = []
    for line, line_idx in _depth_zero_lines(body, body_offset, text):
        match = _METHOD_RE.match(line)
        if not match:
            continue
        ret_type, name = match.group(2), match.group(3)
        if ret_type in _KEYWORD_STARTS or name in _KEYWORD_STARTS:
            continue
        methods.append((line_idx, name, ret_type,
                        _parse_params(match.group(4))))
    return methods


def _parse_params(params_text: str) -> list[tuple[str, str]]:
    params = []
    for part in params_text.split(","):
        words = part.replace("[]", "[] ").split()
        words = [w for w in words if w != "final"]
        if len(words) >= 2:
            type_name = words[-2].rstrip()
            params.append((type_name, words[-1]))
    return params


def _depth_zero_lines(body: str, body_offset: int,
                      text: str) -> list[tuple[str, int]]:
    """(line text, 0-based line index in the full text) for every line of
    the class body whose start sits at member nesting depth zero."""
    out = []
    depth = 0
    offset = body_offset
    for raw in body.split("\n"):
        stripped = raw.strip()
        if depth == 0 and stripped:
            line_idx = text.count("\n", 0, offset + (len(raw) - len(raw.lstrip())))
            out.append((raw, line_idx))
        depth += raw.count("{") - raw.count("}")
        if depth < 0:
            depth = 0
        offset += len(raw) + 1
    return out
