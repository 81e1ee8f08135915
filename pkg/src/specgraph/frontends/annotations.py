"""Regex-driven extraction of ACSL/JML clauses from comment annotations.

Dafny keeps its specification keywords in the language itself and is
handled by the Dafny frontend instead.
"""

from __future__ import annotations

import logging
import re

from .tree import CLAUSE_KINDS, DIALECT_KINDS, Attachment, FrontendError, SpecClause

log = logging.getLogger("specgraph")

# A clause attaches to the nearest header within this many lines below its
# comment; otherwise it is file-level.
_ATTACH_WINDOW = 3

# Multi-word ACSL loop clauses map onto the shared clause kinds.
_TWO_WORD_KINDS = {
    ("loop", "invariant"): "invariant",
    ("loop", "variant"): "decreases",
    ("loop", "assigns"): "assigns",
}

# Modifiers that may precede a JML keyword ("public invariant ...").
_CLAUSE_MODIFIERS = {
    "public", "private", "protected", "static", "instance",
    "spec_public", "pure", "helper", "non_null", "nullable",
}

_LOOP_RE = re.compile(r"^\s*\}?\s*(for|while|do)\b")
# The ';' right after a quantifier binder is part of the expression, not a
# clause separator.
_BINDER_RE = re.compile(r"(\\(?:forall|exists)[^;]*?);")
_CLASS_RE = re.compile(r"\b(?:class|interface)\s+([A-Za-z_]\w*)")
_FUNC_RE = re.compile(r"\b([A-Za-z_]\w*)\s*\([^;{)]*\)?")
_CONTROL_KEYWORDS = {"if", "while", "for", "switch", "return", "do", "else",
                     "assert", "sizeof", "printf", "scanf"}


def extract_annotations(source: str, dialect: str) -> list[SpecClause]:
    """All clauses found in "/*@ ... */" / "/*@ ... @*/" blocks and "//@"
    lines, classified by leading keyword and attached to the next header
    below the comment (function, class, or loop) or to the file."""
    if dialect not in ("ACSL", "JML"):
        raise ValueError(f"unsupported annotation dialect: {dialect}")
    lines = source.split("\n")
    clauses: list[SpecClause] = []
    for text, end_line in _annotation_regions(source):
        attach = _attachment_below(lines, end_line)
        for raw in _split_clauses(text):
            clause = _classify(raw, attach, dialect)
            if clause is not None:
                clauses.append(clause)
    return clauses


def _split_clauses(text: str) -> list[str]:
    guarded = _BINDER_RE.sub(lambda m: m.group(1) + "\x00", text)
    return [part.replace("\x00", ";") for part in guarded.split(";")]


def _annotation_regions(source: str) -> list[tuple[str, int]]:
    """(content, last_line) per annotation comment, in source order.

    Content has the comment markers and per-line '@'/'*' decoration
    stripped; newlines inside a block are preserved so ';' splitting still
    sees every clause.
    """
    regions: list[tuple[int, str, int]] = []
    i = 0
    n = len(source)
    line = 1
    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            i += 1
            continue
        if source.startswith("/*@", i):
            end = source.find("*/", i + 3)
            if end < 0:
                raise FrontendError("unterminated annotation block", line)
            body = source[i + 3:end]
            if body.endswith("@"):
                body = body[:-1]
            cleaned = "\n".join(_strip_decoration(ln) for ln in body.split("\n"))
            end_line = line + body.count("\n")
            regions.append((i, cleaned, end_line))
            line = end_line
            i = end + 2
            continue
        if source.startswith("/*", i):
            end = source.find("*/", i + 2)
            if end < 0:
                raise FrontendError("unterminated block comment", line)
            line += source.count("\n", i, end)
            i = end + 2
            continue
        if source.startswith("//@", i):
            end = source.find("\n", i)
            end = n if end < 0 else end
            regions.append((i, source[i + 3:end], line))
            i = end
            continue
        if source.startswith("//", i):
            end = source.find("\n", i)
            i = n if end < 0 else end
            continue
        if ch in "\"'":
            i = _skip_quoted(source, i, ch)
            continue
        i += 1
    regions.sort(key=lambda r: r[0])
    return [(text, end_line) for _, text, end_line in regions]


def _strip_decoration(line: str) -> str:
    stripped = line.lstrip()
    while stripped[:1] in ("@", "*"):
        stripped = stripped[1:].lstrip()
    return stripped


def _skip_quoted(source: str, i: int, quote: str) -> int:
    i += 1
    while i < len(source):
        if source[i] == "\\":
            i += 2
            continue
        if source[i] == quote:
            return i + 1
        if source[i] == "\n":
            return i
        i += 1
    return i


def _classify(raw: str, attach: Attachment, dialect: str) -> SpecClause | None:
    words = raw.split()
    while words and words[0] in _CLAUSE_MODIFIERS:
        words = words[1:]
    if not words:
        return None
    kind = words[0]
    rest = words[1:]
    if len(words) >= 2 and (words[0], words[1]) in _TWO_WORD_KINDS:
        kind = _TWO_WORD_KINDS[(words[0], words[1])]
        rest = words[2:]
    text = " ".join(rest)
    if kind not in CLAUSE_KINDS or kind not in DIALECT_KINDS[dialect]:
        log.warning("unknown %s clause keyword %r kept as-is", dialect, kind)
        return SpecClause(kind, text, attach, dialect)
    clause = SpecClause(kind, text, attach, dialect)
    clause.validate()
    return clause


def _attachment_below(lines: list[str], comment_end_line: int) -> Attachment:
    for offset in range(1, _ATTACH_WINDOW + 1):
        idx = comment_end_line + offset - 1  # 0-based index of candidate line
        if idx >= len(lines):
            break
        candidate = lines[idx]
        if not candidate.strip():
            continue
        loop = _LOOP_RE.match(candidate)
        if loop:
            return Attachment("loop", None, idx + 1)
        cls = _CLASS_RE.search(candidate)
        if cls:
            return Attachment("class", cls.group(1), idx + 1)
        name = _function_header_name(candidate)
        if name is not None:
            return Attachment("function", name, idx + 1)
    return Attachment("file", None, comment_end_line)


def _function_header_name(line: str) -> str | None:
    code = line.strip()
    if not code or code.startswith(("//", "/*", "*", "@", "#")):
        return None
    if code.endswith(";") and "(" not in code:
        return None
    for match in _FUNC_RE.finditer(code):
        name = match.group(1)
        if name in _CONTROL_KEYWORDS:
            continue
        before = code[:match.start()].strip()
        # a header has a return type / modifiers before the name, or is a
        # Dafny-style keyworded header
        if before or code.rstrip().endswith("{") or code.rstrip().endswith(")"):
            if code.rstrip().endswith(";") and "=" in code:
                return None
            return name
    return None
