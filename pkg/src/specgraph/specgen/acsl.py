"""Heuristic ACSL contract generation for C sources.

Per function (main excluded): conditional returns yield a dual ensures
pair, recognizable counting loops yield loop invariant/variant blocks plus
array validity requires and initialized-range ensures, switch returns
yield one conditional ensures per case, and functions matching no pattern
get a minimal assigns clause. Inside main, a runtime assert is placed
after calls with literal integer arguments. Generation only ever inserts
whole annotation lines, so stripping them reproduces the input.
"""

from __future__ import annotations

import logging
import re

from ..frontends import Attachment, SpecClause, SyntaxTree, parse_c
from .contracts import GeneratedContract, has_annotation_above, indent_of, splice

log = logging.getLogger("specgraph")

_ASSIGN_OPS = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
               "<<=", ">>="}
_LOOP_KINDS = {"FOR_STMT", "WHILE_STMT", "DO_STMT"}

# Sentinel for main-level smoke asserts: a call result is asserted to
# differ from INT_MIN, a lightweight "the call produced something" check.
_ASSERT_SENTINEL = "-2147483648"

_INIT_RE = re.compile(r"^(?:[A-Za-z_]\w*[\s\*]+)?([A-Za-z_]\w*)\s*=\s*(.+?)\s*$")
_COND_RE = re.compile(r"^\(?\s*([A-Za-z_]\w*)\s*(<=|<|>=|>)\s*"
                      r"([A-Za-z_]\w*|\d+)\s*\)?$")


def gen_acsl(source: str) -> tuple[str, list[GeneratedContract]]:
    tree = parse_c(source)
    lines = source.split("\n")
    insertions: list[tuple[int, list[str]]] = []
    contracts: list[GeneratedContract] = []
    for fn in tree.children:
        if fn.kind != "FUNCTION_DECL" or not _body_of(fn):
            continue
        try:
            if fn.label == "main":
                insertions.extend(_main_asserts(fn, source, lines))
            else:
                blocks, fn_contracts = _function_blocks(fn, source, lines, tree)
                insertions.extend(blocks)
                contracts.extend(fn_contracts)
        except Exception as exc:  # one bad function never spoils the file
            log.warning("gen_acsl: skipping %s: %s", fn.label or "?", exc)
    contracts.sort(key=lambda c: c.insertion)
    return "\n".join(splice(lines, insertions)), contracts


def _body_of(fn: SyntaxTree) -> SyntaxTree | None:
    for child in fn.children:
        if child.kind == "COMPOUND_STMT":
            return child
    return None


def _slice(source: str, node: SyntaxTree) -> str:
    lo, hi = node.offsets
    return " ".join(source[lo:hi].split())


def _function_blocks(fn: SyntaxTree, source: str, lines: list[str],
                     tree: SyntaxTree,
                     ) -> tuple[list[tuple[int, list[str]]],
                                list[GeneratedContract]]:
    body = _body_of(fn)
    fn_line = fn.span[0]
    attach = Attachment("function", fn.label, fn_line)
    requires: list[str] = []
    ensures: list[str] = []
    loop_blocks: list[tuple[int, list[str], list[SpecClause]]] = []

    for cond, e1, e2 in _dual_returns(body, source):
        ensures.append(f"ensures ({cond}) ==> \\result == {e1};")
        ensures.append(f"ensures !({cond}) ==> \\result == {e2};")

    for loop in _loops(body):
        info = _analyze_loop(loop, source, lines)
        if info is None:
            continue
        var, lo, bound, full = info
        clauses: list[SpecClause] = []
        block: list[str] = []
        loop_attach = Attachment("loop", None, loop.span[0])
        if full:
            block.append(f"loop invariant {lo} <= {var} <= {bound};")
            clauses.append(SpecClause(
                "invariant", f"{lo} <= {var} <= {bound}", loop_attach, "ACSL"))
            body_text = _slice(source, loop)
            accessed, written = _array_uses(body_text, var)
            for arr in accessed:
                requires.append(
                    f"requires \\valid({arr} + ({lo} .. {bound}-1));")
            for arr in written:
                ensures.append(
                    f"ensures \\forall integer k; {lo} <= k < {bound}"
                    f" ==> \\initialized(&{arr}[k]);")
        block.append(f"loop variant {bound} - {var};")
        clauses.append(SpecClause(
            "decreases", f"{bound} - {var}", loop_attach, "ACSL"))
        loop_blocks.append((loop.span[0], block, clauses))

    for cond_text, case_label, value in _switch_returns(body, source):
        ensures.append(
            f"ensures ({cond_text} == {case_label}) ==> \\result == {value};")

    clauses_text = _dedupe(requires) + _dedupe(ensures)
    if not clauses_text and not loop_blocks:
        clauses_text = [_assigns_clause(fn, body, tree)]

    insertions: list[tuple[int, list[str]]] = []
    contracts: list[GeneratedContract] = []
    if clauses_text and not has_annotation_above(lines, fn_line - 1):
        indent = indent_of(lines[fn_line - 1])
        insertions.append((fn_line - 1, _render_block(clauses_text, indent)))
        contracts.append(GeneratedContract(
            fn.label, fn_line, [_clause_from_text(t, attach) for t in clauses_text],
            fn_line))
    for loop_line, block, clauses in loop_blocks:
        if has_annotation_above(lines, loop_line - 1):
            continue
        indent = indent_of(lines[loop_line - 1])
        insertions.append((loop_line - 1, _render_block(block, indent)))
        contracts.append(GeneratedContract(fn.label, loop_line, clauses,
                                           loop_line))
    return insertions, contracts


def _render_block(clause_lines: list[str], indent: str) -> list[str]:
    if len(clause_lines) == 1:
        return [f"{indent}/*@ {clause_lines[0]} */"]
    out = [f"{indent}/*@ {clause_lines[0]}"]
    out += [f"{indent}    {text}" for text in clause_lines[1:-1]]
    out.append(f"{indent}    {clause_lines[-1]} */")
    return out


def _clause_from_text(text: str, attach: Attachment) -> SpecClause:
    body = text.rstrip(";").strip()
    keyword, _, rest = body.partition(" ")
    if keyword == "loop":  # loop invariant / loop variant
        second, _, rest = rest.partition(" ")
        kind = "invariant" if second == "invariant" else "decreases"
    else:
        kind = keyword
    clause = SpecClause(kind, rest.strip(), attach, "ACSL")
    clause.validate()
    return clause


def _dedupe(items: list[str]) -> list[str]:
    seen: set[str] = set()
    out = []
    for item in items:
        if item not in seen:
            seen.add(item)
            out.append(item)
    return out


# -- pattern (a): dual conditional returns -----------------------------------

def _dual_returns(body: SyntaxTree,
                  source: str) -> list[tuple[str, str, str]]:
    pairs = []
    for node in body.walk():
        if node.kind != "IF_STMT" or len(node.children) != 3:
            continue
        cond, then_branch, else_branch = node.children
        ret1 = _tail_return(then_branch)
        ret2 = _tail_return(else_branch)
        if ret1 is not None and ret2 is not None \
                and ret1.children and ret2.children:
            pairs.append((_clean_cond(_slice(source, cond)),
                          _slice(source, ret1.children[0]),
                          _slice(source, ret2.children[0])))
    return pairs


def _tail_return(node: SyntaxTree) -> SyntaxTree | None:
    if node.kind == "RETURN_STMT":
        return node
    if node.kind == "COMPOUND_STMT" and node.children \
            and node.children[-1].kind == "RETURN_STMT":
        return node.children[-1]
    return None


def _clean_cond(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")") \
            and _balanced_trim(text):
        text = text[1:-1].strip()
    return text


def _balanced_trim(text: str) -> bool:
    depth = 0
    for idx, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and idx != len(text) - 1:
                return False
    return depth == 0


# -- pattern (b): counting loops ---------------------------------------------

def _loops(body: SyntaxTree) -> list[SyntaxTree]:
    return [n for n in body.walk() if n.kind in _LOOP_KINDS]


def _analyze_loop(loop: SyntaxTree, source: str, lines: list[str],
                  ) -> tuple[str, str, str, bool] | None:
    """(var, lo, bound, fully_recognized) or None when not even a variant
    can be inferred."""
    if loop.kind == "FOR_STMT":
        header = _paren_text(source, loop.offsets[0])
        if header is None:
            return None
        parts = _split_semis(header)
        if len(parts) != 3:
            return None
        init, cond, inc = (p.strip() for p in parts)
        init_m = _INIT_RE.match(init)
        cond_m = _COND_RE.match(cond)
        if not cond_m:
            return None
        var, op, bound = cond_m.groups()
        lo = init_m.group(2) if init_m and init_m.group(1) == var else None
    else:
        cond_node = loop.children[1 if loop.kind == "DO_STMT" else 0]
        cond_m = _COND_RE.match(_slice(source, cond_node))
        if not cond_m:
            return None
        var, op, bound = cond_m.groups()
        lo = _initial_value_above(lines, loop.span[0], var)
        inc = _slice(source, loop)
    if op in ("<", "<="):
        if not _has_increment(inc, var):
            return None
        if op == "<" and lo is not None and _is_unit_increment(inc, var):
            return (var, lo, bound, True)
        return (var, "", bound, False)
    if op in (">", ">=") and _has_decrement(_slice(source, loop), var):
        return (bound, "", var, False)  # variant: var - bound
    return None


def _paren_text(source: str, start: int) -> str | None:
    open_idx = source.find("(", start)
    if open_idx < 0:
        return None
    depth = 0
    for i in range(open_idx, len(source)):
        if source[i] == "(":
            depth += 1
        elif source[i] == ")":
            depth -= 1
            if depth == 0:
                return source[open_idx + 1:i]
    return None


def _split_semis(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == ";" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _is_unit_increment(text: str, var: str) -> bool:
    squeezed = re.sub(r"\s+", "", text)
    forms = (f"{var}++", f"++{var}", f"{var}+=1", f"{var}={var}+1")
    return any(form in squeezed for form in forms)


def _has_increment(text: str, var: str) -> bool:
    squeezed = re.sub(r"\s+", "", text)
    return (f"{var}++" in squeezed or f"++{var}" in squeezed
            or f"{var}+=" in squeezed or f"{var}={var}+" in squeezed)


def _has_decrement(text: str, var: str) -> bool:
    squeezed = re.sub(r"\s+", "", text)
    return (f"{var}--" in squeezed or f"--{var}" in squeezed
            or f"{var}-=" in squeezed or f"{var}={var}-" in squeezed)


def _initial_value_above(lines: list[str], loop_line: int,
                         var: str) -> str | None:
    pattern = re.compile(rf"\b{re.escape(var)}\s*=\s*([^;,]+);")
    for idx in range(loop_line - 2, -1, -1):
        match = pattern.search(lines[idx])
        if match:
            return match.group(1).strip()
    return None


def _array_uses(body_text: str, var: str) -> tuple[list[str], list[str]]:
    """(accessed, written) array names indexed by var, sorted."""
    access_re = re.compile(rf"\b([A-Za-z_]\w*)\s*\[\s*{re.escape(var)}\s*\]")
    write_re = re.compile(
        rf"\b([A-Za-z_]\w*)\s*\[\s*{re.escape(var)}\s*\]\s*"
        rf"(?:[+\-*/%&|^]|<<|>>)?=(?!=)")
    accessed = sorted({m.group(1) for m in access_re.finditer(body_text)})
    written = sorted({m.group(1) for m in write_re.finditer(body_text)})
    return accessed, written


# -- pattern (c): switch-case returns ----------------------------------------

def _switch_returns(body: SyntaxTree,
                    source: str) -> list[tuple[str, str, str]]:
    out = []
    for node in body.walk():
        if node.kind != "SWITCH_STMT" or len(node.children) != 2:
            continue
        cond_text = _slice(source, node.children[0])
        for case in node.children[1].children:
            if case.kind != "CASE_STMT" or not case.children:
                continue
            last = case.children[-1]
            if last.kind == "RETURN_STMT" and last.children:
                out.append((cond_text, case.label,
                            _slice(source, last.children[0])))
    return out


# -- pattern (e): assigns fallback -------------------------------------------

def _assigns_clause(fn: SyntaxTree, body: SyntaxTree,
                    tree: SyntaxTree) -> str:
    params = {c.label for c in fn.children if c.kind == "VAR_DECL" and c.label}
    local = {n.label for n in body.walk() if n.kind == "VAR_DECL"}
    written: set[str] = set()
    for node in body.walk():
        target = None
        if node.kind == "BINARY_OPERATOR" and node.label in _ASSIGN_OPS:
            target = node.children[0]
        elif node.kind == "UNARY_OPERATOR" and node.label in ("++", "--"):
            target = node.children[0]
        if target is None:
            continue
        if target.kind == "DECL_REF_EXPR":
            if target.label not in params and target.label not in local:
                written.add(target.label)
        elif target.kind == "ARRAY_SUBSCRIPT_EXPR":
            base = target.children[0]
            if base.kind == "DECL_REF_EXPR" and base.label not in local:
                written.add(f"{base.label}[..]")
        elif target.kind == "UNARY_OPERATOR" and target.label == "*":
            operand = target.children[0]
            if operand.kind == "DECL_REF_EXPR" and operand.label not in local:
                written.add(f"*{operand.label}")
        elif target.kind == "MEMBER_EXPR":
            base = target.children[0]
            if base.kind == "DECL_REF_EXPR" and base.label not in local:
                written.add(f"{base.label}.{target.label}")
    if written:
        return "assigns " + ", ".join(sorted(written)) + ";"
    return "assigns \\nothing;"


# -- pattern (d): runtime asserts in main ------------------------------------

def _main_asserts(fn: SyntaxTree, source: str,
                  lines: list[str]) -> list[tuple[int, list[str]]]:
    body = _body_of(fn)
    insertions = []
    for node in body.walk():
        name = _assigned_literal_call(node)
        if name is None:
            continue
        end_line = source.count("\n", 0, node.offsets[1]) + 1
        if end_line < len(lines) \
                and lines[end_line].strip().startswith("//@ assert"):
            continue
        indent = indent_of(lines[end_line - 1])
        insertions.append((end_line, [
            f"{indent}//@ assert {name} != {_ASSERT_SENTINEL};"]))
    return insertions


def _assigned_literal_call(node: SyntaxTree) -> str | None:
    if node.kind == "BINARY_OPERATOR" and node.label == "=" \
            and node.children[0].kind == "DECL_REF_EXPR" \
            and node.children[1].kind == "CALL_EXPR" \
            and _all_literal_args(node.children[1]):
        return node.children[0].label
    if node.kind == "VAR_DECL" and node.children \
            and node.children[-1].kind == "CALL_EXPR" \
            and _all_literal_args(node.children[-1]):
        return node.label
    return None


def _all_literal_args(call: SyntaxTree) -> bool:
    args = call.children
    if not args:
        return False
    for arg in args:
        if arg.kind == "INTEGER_LITERAL":
            continue
        if arg.kind == "UNARY_OPERATOR" and arg.label == "-" \
                and len(arg.children) == 1 \
                and arg.children[0].kind == "INTEGER_LITERAL":
            continue
        return False
    return True
