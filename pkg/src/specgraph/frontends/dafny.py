"""Pattern-based structure extraction for Dafny sources.

Methods and functions are located with regular expressions, bodies are
isolated by bracket matching, and statements are split on top-level
semicolons with brace blocks kept atomic and recursed into. Specification
keywords (requires/ensures/invariant/assert/decreases) become SpecClause
values attached to their method or enclosing loop.
"""

from __future__ import annotations

import re

from .brackets import extract_method_bodies, split_top_statements
from .tree import Attachment, SpecClause, SyntaxTree

_HEADER_RE = re.compile(
    r"^[ \t]*(?:ghost\s+)?(method|function|lemma|predicate)\s+([A-Za-z_'?\w]*)",
    re.MULTILINE)
_SPEC_KEYWORDS = ("requires", "ensures", "decreases", "modifies", "reads")
# modifies/reads stay raw keywords: they have no shared-kind equivalent.
_SPEC_KIND = {"requires": "requires", "ensures": "ensures",
              "decreases": "decreases", "modifies": "modifies",
              "reads": "reads"}


def parse_dafny(source: str) -> SyntaxTree:
    """Structure tree only; use parse_dafny_with_specs when the clauses are
    needed as well (graph construction does)."""
    tree, _ = parse_dafny_with_specs(source)
    return tree


def parse_dafny_with_specs(source: str) -> tuple[SyntaxTree, list[SpecClause]]:
    clauses: list[SpecClause] = []
    methods: list[SyntaxTree] = []
    for match in _HEADER_RE.finditer(source):
        name = match.group(2)
        line = source.count("\n", 0, match.start()) + 1
        sig_end, brace_at = _signature_end(source, match.end())
        label = _normalize_signature(name, source[match.end():sig_end])
        method = SyntaxTree("METHOD_DECL", label,
                            (line, match.start() - _line_start(source, match.start()) + 1),
                            offsets=(match.start(), sig_end))
        attach = Attachment("function", name, line)
        spec_text = source[sig_end:brace_at] if brace_at is not None else source[sig_end:]
        clauses.extend(_method_clauses(spec_text, attach))
        if brace_at is not None:
            body, end = extract_method_bodies(source, brace_at)
            method.offsets = (match.start(), end)
            stmts, body_clauses = _parse_statements(
                source, brace_at + 1, brace_at + 1 + len(body), attach)
            method.children.extend(stmts)
            clauses.extend(body_clauses)
        methods.append(method)
    tree = SyntaxTree("FILE", "", (1, 1), methods, offsets=(0, len(source)))
    return tree, clauses


def _normalize_signature(name: str, raw_sig: str) -> str:
    sig = " ".join(raw_sig.split())
    sig = sig.replace("( ", "(").replace(" )", ")")
    sig = sig.replace(" :", ":").replace(" ,", ",")
    sig = re.sub(r":(?=\S)", ": ", sig)
    sig = re.sub(r",(?=\S)", ", ", sig)
    return (name + sig).strip()


def _signature_end(source: str, start: int) -> tuple[int, int | None]:
    """End offset of the signature (after params/returns) and the offset of
    the body's '{' when the method has one."""
    i = start
    n = len(source)
    depth = 0
    while i < n:
        ch = source[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0:
            if ch == "{":
                return i, i
            word = _word_at(source, i)
            if word in _SPEC_KEYWORDS:
                brace = _find_body_brace(source, i)
                return i, brace
            if word in ("method", "function", "lemma", "predicate"):
                return i, None
        i += 1
    return n, None


def _find_body_brace(source: str, start: int) -> int | None:
    depth = 0
    for i in range(start, len(source)):
        ch = source[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "{" and depth == 0:
            return i
        elif depth == 0 and _word_at(source, i) in ("method", "function",
                                                    "lemma", "predicate"):
            return None
    return None


def _word_at(source: str, i: int) -> str | None:
    if i > 0 and (source[i - 1].isalnum() or source[i - 1] == "_"):
        return None
    match = re.match(r"[A-Za-z_]\w*", source[i:])
    return match.group(0) if match else None


def _line_start(source: str, pos: int) -> int:
    return source.rfind("\n", 0, pos) + 1


def _method_clauses(text: str, attach: Attachment) -> list[SpecClause]:
    clauses = []
    for kind, clause_text, _ in _split_spec_clauses(text):
        clauses.append(SpecClause(_SPEC_KIND[kind], clause_text, attach,
                                  "DafnyNative"))
    return clauses


def _split_spec_clauses(text: str) -> list[tuple[str, str, int]]:
    """(keyword, clause text, offset) triples for spec keywords in text."""
    out = []
    pattern = re.compile(r"\b(%s)\b" % "|".join(_SPEC_KEYWORDS))
    matches = list(pattern.finditer(text))
    for idx, match in enumerate(matches):
        end = matches[idx + 1].start() if idx + 1 < len(matches) else len(text)
        clause = " ".join(text[match.end():end].split())
        if clause:
            out.append((match.group(1), clause, match.start()))
    return out


def _skip_quoted(source: str, i: int, quote: str) -> int:
    i += 1
    while i < len(source):
        if source[i] == "\\":
            i += 2
            continue
        if source[i] == quote:
            return i + 1
        i += 1
    return i


def _parse_statements(source: str, start: int, end: int,
                      method_attach: Attachment,
                      loop_attach: Attachment | None = None,
                      ) -> tuple[list[SyntaxTree], list[SpecClause]]:
    nodes: list[SyntaxTree] = []
    clauses: list[SpecClause] = []
    for lo, hi in split_top_statements(source, start, end):
        text = source[lo:hi].strip()
        if not text:
            continue
        pos = lo + (len(source[lo:hi]) - len(source[lo:hi].lstrip()))
        line = source.count("\n", 0, pos) + 1
        col = pos - _line_start(source, pos) + 1
        span = (line, col)
        offsets = (pos, hi)
        first = re.match(r"[A-Za-z_]\w*", text)
        keyword = first.group(0) if first else ""
        if keyword == "while":
            node, inner = _parse_while(source, pos, hi, method_attach, line, col)
            nodes.append(node)
            clauses.extend(inner)
        elif keyword == "if":
            node, inner = _parse_if(source, pos, hi, method_attach,
                                    loop_attach, line, col)
            nodes.append(node)
            clauses.extend(inner)
        elif keyword == "return":
            expr = text[len("return"):].strip().rstrip(";").strip()
            nodes.append(SyntaxTree("RETURN_STMT", expr, span, offsets=offsets))
        elif keyword == "assert":
            body = text[len("assert"):].strip().rstrip(";").strip()
            attach = loop_attach if loop_attach is not None else method_attach
            clauses.append(SpecClause("assert", body, attach, "DafnyNative"))
        elif keyword == "assume":
            body = text[len("assume"):].strip().rstrip(";").strip()
            attach = loop_attach if loop_attach is not None else method_attach
            clauses.append(SpecClause("assume", body, attach, "DafnyNative"))
        else:
            nodes.append(SyntaxTree("STATEMENT", " ".join(text.split()),
                                    span, offsets=offsets))
    return nodes, clauses


def _parse_while(source: str, pos: int, end: int, method_attach: Attachment,
                 line: int, col: int) -> tuple[SyntaxTree, list[SpecClause]]:
    brace = _block_open(source, pos, end)
    header = source[pos + len("while"):brace if brace is not None else end]
    clauses: list[SpecClause] = []
    attach = Attachment("loop", None, line)
    cond_end = len(header)
    for spec in re.finditer(r"\b(invariant|decreases)\b", header):
        cond_end = min(cond_end, spec.start())
    cond = " ".join(header[:cond_end].split()).strip()
    cond = cond[1:-1].strip() if cond.startswith("(") and cond.endswith(")") else cond
    node = SyntaxTree("WHILE_STMT", cond, (line, col), offsets=(pos, end))
    for kind, text in _loop_spec_clauses(header[cond_end:]):
        clauses.append(SpecClause(kind, text, attach, "DafnyNative"))
    if brace is not None:
        body, _ = extract_method_bodies(source[:end], brace)
        stmts, inner = _parse_statements(source, brace + 1,
                                         brace + 1 + len(body),
                                         method_attach, attach)
        node.children.extend(stmts)
        clauses.extend(inner)
    return node, clauses


def _loop_spec_clauses(text: str) -> list[tuple[str, str]]:
    out = []
    matches = list(re.finditer(r"\b(invariant|decreases)\b", text))
    for idx, match in enumerate(matches):
        end = matches[idx + 1].start() if idx + 1 < len(matches) else len(text)
        clause = " ".join(text[match.end():end].split())
        if clause:
            out.append((match.group(1), clause))
    return out


def _parse_if(source: str, pos: int, end: int, method_attach: Attachment,
              loop_attach: Attachment | None,
              line: int, col: int) -> tuple[SyntaxTree, list[SpecClause]]:
    brace = _block_open(source, pos, end)
    clauses: list[SpecClause] = []
    if brace is None:
        node = SyntaxTree("IF_STMT", " ".join(source[pos:end].split()),
                          (line, col), offsets=(pos, end))
        return node, clauses
    cond = " ".join(source[pos + 2:brace].split())
    cond = cond[1:-1].strip() if cond.startswith("(") and cond.endswith(")") else cond
    node = SyntaxTree("IF_STMT", cond, (line, col), offsets=(pos, end))
    body, after = extract_method_bodies(source[:end], brace)
    stmts, inner = _parse_statements(source, brace + 1, brace + 1 + len(body),
                                     method_attach, loop_attach)
    node.children.extend(stmts)
    clauses.extend(inner)
    rest = source[after:end]
    else_match = re.match(r"\s*else\b", rest)
    if else_match:
        else_brace = _block_open(source, after + else_match.end(), end)
        if else_brace is not None:
            ebody, _ = extract_method_bodies(source[:end], else_brace)
            estmts, einner = _parse_statements(source, else_brace + 1,
                                               else_brace + 1 + len(ebody),
                                               method_attach, loop_attach)
            node.children.extend(estmts)
            clauses.extend(einner)
    return node, clauses


def _block_open(source: str, start: int, end: int) -> int | None:
    depth = 0
    i = start
    while i < end:
        ch = source[i]
        if ch in "\"'":
            i = _skip_quoted(source, i, ch)
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "{" and depth == 0:
            return i
        i += 1
    return None
