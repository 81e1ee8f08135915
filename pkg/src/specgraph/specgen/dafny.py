"""Verification-oriented Dafny method generation from C# sources.

Methods are located by signature patterns and bracket matching rather than
full parsing. Conditional dual returns become paired ensures clauses over
the result variable, while loops get an iteration-variable invariant and a
decreasing measure. Bodies are emitted best-effort; statements with no
Dafny counterpart are dropped and tallied in a trailing comment.
"""

from __future__ import annotations

import logging
import re

from ..frontends import FrontendError
from ..frontends.brackets import extract_method_bodies, split_top_statements

log = logging.getLogger("specgraph")

_METHOD_RE = re.compile(
    r"^[ \t]*(?:(?:public|private|protected|internal)\s+)?static\s+"
    r"([\w\[\]]+)\s+(\w+)\s*\(([^)]*)\)", re.MULTILINE)

_TYPE_MAP = {
    "int": "int", "long": "int", "short": "int", "byte": "int",
    "uint": "int", "char": "int",
    "bool": "bool", "boolean": "bool",
    "string": "string", "String": "string",
    "double": "real", "float": "real", "decimal": "real",
    "void": "",
}

_COND_BOUND_RE = re.compile(r"^\s*([A-Za-z_]\w*)\s*<\s*([A-Za-z_]\w*|\d+)\s*$")
_DECL_RE = re.compile(r"^([\w\[\]]+)\s+(\w+)\s*=\s*(.+);$", re.DOTALL)
_BARE_DECL_RE = re.compile(r"^([\w\[\]]+)\s+(\w+)\s*;$")
_ASSIGN_RE = re.compile(r"^([\w\.\[\]]+(?:\[[^\]]*\])?)\s*=(?!=)\s*(.+);$",
                        re.DOTALL)
_COMPOUND_RE = re.compile(
    r"^([\w\.\[\]]+)\s*([+\-*/%])=\s*(.+);$", re.DOTALL)
_INCDEC_RE = re.compile(r"^(\w+)\s*(\+\+|--)\s*;$")


def gen_dafny(source: str) -> str:
    """Standalone Dafny methods mirroring the C# methods' control flow."""
    methods = []
    for match in _METHOD_RE.finditer(source):
        ret_type, name, params = match.group(1), match.group(2), match.group(3)
        brace = _next_brace(source, match.end())
        if brace is None:
            continue
        try:
            body, _ = extract_method_bodies(source, brace)
        except FrontendError as exc:
            log.warning("gen_dafny: skipping %s: %s", name, exc)
            continue
        methods.append(_emit_method(name, ret_type, params, body))
    return "\n\n".join(methods) + ("\n" if methods else "")


def _next_brace(source: str, start: int) -> int | None:
    i = start
    while i < len(source) and source[i] in " \t\r\n":
        i += 1
    return i if i < len(source) and source[i] == "{" else None


def _map_type(cs_type: str) -> str:
    base = cs_type.strip()
    if base.endswith("[]"):
        return "array<int>"
    return _TYPE_MAP.get(base, "int")


def _signature(name: str, params: str, ret_type: str) -> str:
    pieces = []
    for part in params.split(","):
        words = part.replace("[]", "[] ").split()
        if len(words) >= 2:
            pieces.append(f"{words[-1]}: {_map_type(words[-2])}")
    ret = _map_type(ret_type)
    sig = f"method {name}({', '.join(pieces)})"
    if ret:
        sig += f" returns (r: {ret})"
    return sig


def _emit_method(name: str, ret_type: str, params: str, body: str) -> str:
    has_result = _map_type(ret_type) != ""
    lines = [_signature(name, params, ret_type)]
    if has_result:
        for cond, e1, e2 in _dual_returns(body):
            lines.append(f"  ensures ({cond}) ==> r == {e1}")
            lines.append(f"  ensures !({cond}) ==> r == {e2}")
    body_lines, dropped = _emit_statements(body, 0, len(body), "  ",
                                           has_result)
    lines.append("{")
    lines.extend(body_lines)
    if dropped:
        lines.append("  // note: %d unsupported statement(s) dropped" % dropped)
    lines.append("}")
    return "\n".join(lines)


def _dual_returns(body: str) -> list[tuple[str, str, str]]:
    pairs = []
    for match in re.finditer(r"\bif\s*\(", body):
        cond_end = _match_paren(body, match.end() - 1)
        if cond_end is None:
            continue
        cond = " ".join(body[match.end():cond_end].split())
        then_text, after = _branch(body, cond_end + 1)
        if then_text is None:
            continue
        else_match = re.match(r"\s*else\b", body[after:])
        if not else_match:
            continue
        else_text, _ = _branch(body, after + else_match.end())
        if else_text is None:
            continue
        e1 = _tail_return_expr(then_text)
        e2 = _tail_return_expr(else_text)
        if e1 is not None and e2 is not None:
            pairs.append((cond, e1, e2))
    return pairs


def _match_paren(text: str, open_idx: int) -> int | None:
    depth = 0
    for i in range(open_idx, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    return None


def _branch(body: str, start: int) -> tuple[str | None, int]:
    """Text of the branch starting at start: either a brace block's inside
    or a single statement up to ';'."""
    i = start
    while i < len(body) and body[i] in " \t\r\n":
        i += 1
    if i < len(body) and body[i] == "{":
        try:
            inner, after = extract_method_bodies(body, i)
        except FrontendError:
            return None, start
        return inner, after
    end = body.find(";", i)
    if end < 0:
        return None, start
    return body[i:end + 1], end + 1


def _tail_return_expr(branch_text: str) -> str | None:
    statements = [s.strip() for s in branch_text.split(";") if s.strip()]
    if not statements:
        return None
    last = statements[-1]
    match = re.match(r"^return\b\s*(.+)$", last, re.DOTALL)
    if match and match.group(1).strip():
        return " ".join(match.group(1).split())
    return None


def _emit_statements(body: str, start: int, end: int, indent: str,
                     has_result: bool) -> tuple[list[str], int]:
    lines: list[str] = []
    dropped = 0
    for lo, hi in split_top_statements(body, start, end):
        text = body[lo:hi].strip()
        if not text:
            continue
        emitted, d = _emit_one(body, lo, hi, text, indent, has_result)
        lines.extend(emitted)
        dropped += d
    return lines, dropped


def _emit_one(body: str, lo: int, hi: int, text: str, indent: str,
              has_result: bool) -> tuple[list[str], int]:
    keyword_match = re.match(r"[A-Za-z_]\w*", text)
    keyword = keyword_match.group(0) if keyword_match else ""

    if keyword == "return":
        expr = text[len("return"):].strip().rstrip(";").strip()
        if expr and has_result:
            return [f"{indent}r := {expr};", f"{indent}return;"], 0
        return [f"{indent}return;"], 0

    if keyword == "if":
        return _emit_if(body, lo, hi, indent, has_result)

    if keyword == "while":
        return _emit_while(body, lo, hi, indent, has_result)

    if keyword == "for":
        return _emit_for(body, lo, hi, indent, has_result)

    if text.startswith(("Console.WriteLine", "Console.Write")):
        inner_open = text.find("(")
        close = _match_paren(text, inner_open) if inner_open >= 0 else None
        if close is not None:
            args = text[inner_open + 1:close].strip()
            is_line = text.startswith("Console.WriteLine")
            if args and is_line:
                return [f'{indent}print {args}, "\\n";'], 0
            if args:
                return [f"{indent}print {args};"], 0
            if is_line:
                return [f'{indent}print "\\n";'], 0
            return [], 1

    decl = _DECL_RE.match(text)
    if decl and decl.group(1) not in ("return",):
        rhs = decl.group(3).strip()
        if "Console.ReadLine" in rhs:
            return [], 1
        return [f"{indent}var {decl.group(2)} := {rhs};"], 0

    bare = _BARE_DECL_RE.match(text)
    if bare and bare.group(1) not in ("return",):
        mapped = _map_type(bare.group(1))
        if bare.group(1).endswith("[]"):
            mapped = "array<int>"
        return [f"{indent}var {bare.group(2)}: {mapped or 'int'};"], 0

    incdec = _INCDEC_RE.match(text)
    if incdec:
        op = "+" if incdec.group(2) == "++" else "-"
        v = incdec.group(1)
        return [f"{indent}{v} := {v} {op} 1;"], 0

    compound = _COMPOUND_RE.match(text)
    if compound:
        lhs, op, rhs = compound.groups()
        return [f"{indent}{lhs} := {lhs} {op} {rhs.strip()};"], 0

    assign = _ASSIGN_RE.match(text)
    if assign:
        rhs = assign.group(2).strip()
        if "Console.ReadLine" in rhs:
            return [], 1
        return [f"{indent}{assign.group(1)} := {rhs};"], 0

    return [], 1


def _emit_if(body: str, lo: int, hi: int, indent: str,
             has_result: bool) -> tuple[list[str], int]:
    match = re.match(r"\s*if\s*\(", body[lo:hi])
    if not match:
        return [], 1
    cond_end = _match_paren(body, lo + match.end() - 1)
    if cond_end is None:
        return [], 1
    cond = " ".join(body[lo + match.end():cond_end].split())
    then_text, after = _branch(body, cond_end + 1)
    if then_text is None:
        return [], 1
    lines = [f"{indent}if {cond} {{"]
    then_lines, dropped = _emit_statements(then_text, 0, len(then_text),
                                           indent + "  ", has_result)
    lines.extend(then_lines)
    else_match = re.match(r"\s*else\b", body[after:hi])
    if else_match:
        else_text, _ = _branch(body, after + else_match.end())
        if else_text is not None:
            lines.append(f"{indent}}} else {{")
            else_lines, d2 = _emit_statements(else_text, 0, len(else_text),
                                              indent + "  ", has_result)
            lines.extend(else_lines)
            dropped += d2
    lines.append(f"{indent}}}")
    return lines, dropped


def _loop_specs(cond: str, indent: str) -> list[str]:
    bound = _COND_BOUND_RE.match(cond)
    if not bound:
        return []
    var, limit = bound.groups()
    return [f"{indent}  invariant {var} <= {limit}",
            f"{indent}  decreases {limit} - {var}"]


def _emit_while(body: str, lo: int, hi: int, indent: str,
                has_result: bool) -> tuple[list[str], int]:
    match = re.match(r"\s*while\s*\(", body[lo:hi])
    if not match:
        return [], 1
    cond_end = _match_paren(body, lo + match.end() - 1)
    if cond_end is None:
        return [], 1
    cond = " ".join(body[lo + match.end():cond_end].split())
    loop_text, _ = _branch(body, cond_end + 1)
    if loop_text is None:
        return [], 1
    lines = [f"{indent}while {cond}"]
    lines.extend(_loop_specs(cond, indent))
    lines.append(f"{indent}{{")
    inner, dropped = _emit_statements(loop_text, 0, len(loop_text),
                                      indent + "  ", has_result)
    lines.extend(inner)
    lines.append(f"{indent}}}")
    return lines, dropped


def _emit_for(body: str, lo: int, hi: int, indent: str,
              has_result: bool) -> tuple[list[str], int]:
    """Desugar `for (init; cond; step)` into init + while with the step
    re-emitted at the end of the loop body."""
    match = re.match(r"\s*for\s*\(", body[lo:hi])
    if not match:
        return [], 1
    header_end = _match_paren(body, lo + match.end() - 1)
    if header_end is None:
        return [], 1
    header = body[lo + match.end():header_end]
    parts = header.split(";")
    if len(parts) != 3:
        return [], 1
    init, cond, step = (p.strip() for p in parts)
    cond = " ".join(cond.split())
    loop_text, _ = _branch(body, header_end + 1)
    if loop_text is None:
        return [], 1
    lines: list[str] = []
    dropped = 0
    if init:
        emitted, dropped = _emit_one(init + ";", 0, 0, init + ";", indent,
                                     has_result)
        lines.extend(emitted)
    lines.append(f"{indent}while {cond}")
    lines.extend(_loop_specs(cond, indent))
    lines.append(f"{indent}{{")
    inner, d2 = _emit_statements(loop_text, 0, len(loop_text),
                                 indent + "  ", has_result)
    lines.extend(inner)
    dropped += d2
    if step:
        emitted, d3 = _emit_one(step + ";", 0, 0, step + ";", indent + "  ",
                                has_result)
        lines.extend(emitted)
        dropped += d3
    lines.append(f"{indent}}}")
    return lines, dropped
