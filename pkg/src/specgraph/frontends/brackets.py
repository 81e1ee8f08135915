"""Bracket-aware body extraction used by the pattern-based frontends."""

from __future__ import annotations

from .tree import FrontendError


def extract_method_bodies(source: str, open_index: int) -> tuple[str, int]:
    """Return (body, end) for the brace block opening at open_index.

    body is the text strictly between the braces; end is the index just past
    the closing brace. Braces inside string/char literals and comments do
    not count. Raises FrontendError (with the opening line) when no matching
    close brace exists.
    """
    if open_index >= len(source) or source[open_index] != "{":
        raise ValueError("open_index does not point at '{'")
    open_line = source.count("\n", 0, open_index) + 1
    depth = 0
    i = open_index
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == '"' or ch == "'":
            i = _skip_literal(source, i, ch)
            continue
        if source.startswith("//", i):
            j = source.find("\n", i)
            i = n if j < 0 else j + 1
            continue
        if source.startswith("/*", i):
            j = source.find("*/", i + 2)
            i = n if j < 0 else j + 2
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth == 0:
                return source[open_index + 1:i], i + 1
        i += 1
    raise FrontendError("no matching '}' for '{'", open_line)


def _skip_literal(source: str, i: int, quote: str) -> int:
    i += 1
    n = len(source)
    while i < n:
        if source[i] == "\\":
            i += 2
            continue
        if source[i] == quote:
            return i + 1
        i += 1
    return n


def split_top_statements(source: str, start: int,
                         end: int) -> list[tuple[int, int]]:
    """Spans of the top-level statements in source[start:end].

    Splits on ';' at depth zero; a brace block ends the statement that
    opened it (so an if/while keeps its block), except that a following
    'else' keeps extending the same statement.
    """
    spans = []
    i = start
    stmt_start = start
    depth = 0
    while i < end:
        ch = source[i]
        if ch in "\"'":
            i = _skip_literal(source, i, ch)
            continue
        if source.startswith("//", i):
            j = source.find("\n", i, end)
            i = end if j < 0 else j + 1
            continue
        if source.startswith("/*", i):
            j = source.find("*/", i, end)
            i = end if j < 0 else j + 2
            continue
        if ch == "(" or ch == "[":
            depth += 1
        elif ch == ")" or ch == "]":
            depth -= 1
        elif ch == "{" and depth == 0:
            _, after = extract_method_bodies(source[:end], i)
            j = after
            while j < end and source[j] in " \t\r\n":
                j += 1
            if source.startswith("else", j):
                i = after
                continue
            spans.append((stmt_start, after))
            stmt_start = after
            i = after
            continue
        elif ch == ";" and depth == 0:
            spans.append((stmt_start, i + 1))
            stmt_start = i + 1
            i += 1
            continue
        i += 1
    if source[stmt_start:end].strip():
        spans.append((stmt_start, end))
    return spans
