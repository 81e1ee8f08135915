"""Rule-based, line-oriented C to Java and C to C# conversion.

Each line is rewritten independently by ordered rules (preprocessor
removal, struct/main/function-signature rewriting, printf/scanf
conversion, type mapping); the result is wrapped in class boilerplate.
Lines no rule can handle pass through verbatim behind a
"// TODO(transpile)" marker, so output is always produced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_TYPE_KEYWORDS = {"void", "int", "char", "float", "double", "long", "short",
                  "unsigned", "signed", "struct", "static", "const", "size_t"}

# Constructs with no line-level translation; they pass through marked.
_UNSUPPORTED = ("goto ", "malloc", "calloc", "realloc", "free(", "fopen",
                "fclose", "fprintf", "fscanf", "typedef", "union ", "enum ",
                "strlen", "strcmp", "strcpy", "strcat")

_FORMAT_CODES = ("%ld", "%lf", "%d", "%f", "%s", "%c", "%u")


@dataclass(frozen=True)
class RewriteRule:
    """Descriptive record of one conversion rule (both targets share the
    rule set; replacement text differs per language)."""

    id: str
    pattern: str
    replacement: str
    scope: str  # line | block | file


RULES = (
    RewriteRule("preprocessor", "lines starting with '#'", "removed", "file"),
    RewriteRule("struct", "struct definitions",
                "static inner class / struct block", "block"),
    RewriteRule("main", "int main(...)", "target entry point", "line"),
    RewriteRule("function", "free function definitions",
                "static methods", "line"),
    RewriteRule("printf", "printf(fmt, ...)",
                "println / Console.WriteLine with concatenation", "line"),
    RewriteRule("scanf", "scanf(fmt, &x, ...)",
                "typed reads per format code", "line"),
    RewriteRule("types", "char* / T* / struct T / char arrays",
                "String, arrays, class types", "line"),
    RewriteRule("passthrough", "anything else",
                "verbatim, TODO-marked when unsupported", "line"),
)


@dataclass(frozen=True)
class _Target:
    name: str
    string_type: str
    println: str
    print_fn: str
    main_sig: str
    struct_open: str          # format with {name}
    reads: dict[str, str]     # format code -> read expression
    class_open: str           # format with {name}
    preamble: tuple[str, ...]
    body_extra: tuple[str, ...]
    close: str


_JAVA = _Target(
    name="java",
    string_type="String",
    println="System.out.println",
    print_fn="System.out.print",
    main_sig="public static void main(String[] args)",
    struct_open="static class {name} {{",
    reads={
        "%d": "scanner.nextInt()",
        "%u": "scanner.nextInt()",
        "%ld": "scanner.nextLong()",
        "%f": "scanner.nextFloat()",
        "%lf": "scanner.nextDouble()",
        "%s": "scanner.next()",
        "%c": "scanner.next().charAt(0)",
    },
    class_open="public class {name} {{",
    preamble=("import java.util.*;", ""),
    body_extra=("    static Scanner scanner = new Scanner(System.in);", ""),
    close="}",
)

_CSHARP = _Target(
    name="csharp",
    string_type="string",
    println="Console.WriteLine",
    print_fn="Console.Write",
    main_sig="static void Main(string[] args)",
    struct_open="struct {name} {{",
    reads={
        "%d": "int.Parse(Console.ReadLine())",
        "%u": "uint.Parse(Console.ReadLine())",
        "%ld": "long.Parse(Console.ReadLine())",
        "%f": "float.Parse(Console.ReadLine())",
        "%lf": "double.Parse(Console.ReadLine())",
        "%s": "Console.ReadLine()",
        "%c": "Console.ReadLine()[0]",
    },
    class_open="public class {name}\n{{",
    preamble=("using System;", ""),
    body_extra=(),
    close="}",
)

_MAIN_RE = re.compile(r"^(\s*)(?:int|void)\s+main\s*\([^)]*\)\s*(\{?)\s*$")
_STRUCT_RE = re.compile(r"^(\s*)struct\s+([A-Za-z_]\w*)\s*\{\s*$")
_FUNC_RE = re.compile(
    r"^(\s*)((?:[A-Za-z_]\w*[\s\*]+)+?)([A-Za-z_]\w*)\s*"
    r"\(([^;{]*)\)\s*(\{?)\s*$")
_PRINTF_RE = re.compile(r"^(\s*)printf\s*\((.*)\)\s*;\s*$")
_SCANF_RE = re.compile(r'^(\s*)scanf\s*\(\s*"([^"]*)"\s*(?:,\s*(.*))?\)\s*;\s*$')
_RETURN_INT_RE = re.compile(r"^(\s*)return\s+\d+\s*;\s*$")


def sanitize_class_name(stem: str) -> str:
    cleaned = re.sub(r"[^0-9A-Za-z_]", "_", stem)
    if not cleaned or cleaned[0].isdigit():
        cleaned = "_" + cleaned
    return cleaned


def c_to_java(source: str, class_name: str) -> str:
    return _convert(source, class_name, _JAVA)


def c_to_csharp(source: str, class_name: str) -> str:
    return _convert(source, class_name, _CSHARP)


def _convert(source: str, class_name: str, target: _Target) -> str:
    body: list[str] = []
    in_struct_depth: int | None = None
    in_main_depth: int | None = None
    depth = 0
    for raw in source.split("\n"):
        stripped = raw.strip()
        if stripped.startswith("#"):
            continue
        converted = _convert_line(raw, stripped, target, depth,
                                  in_struct_depth, in_main_depth)
        if converted is None:         # dropped line (prototype)
            continue
        kind, text = converted
        if kind == "struct-open":
            in_struct_depth = depth
        elif kind == "struct-close":
            in_struct_depth = None
        elif kind == "main":
            in_main_depth = depth
        depth += _brace_delta(raw)
        if in_main_depth is not None and depth <= in_main_depth:
            in_main_depth = None
        body.append(text)
    out: list[str] = list(target.preamble)
    out.append(target.class_open.format(name=class_name))
    out.extend(target.body_extra)
    out.extend("    " + line if line.strip() else "" for line in body)
    out.append(target.close)
    return "\n".join(out) + "\n"


def _convert_line(raw: str, stripped: str, target: _Target, depth: int,
                  in_struct_depth: int | None, in_main_depth: int | None,
                  ) -> tuple[str, str] | None:
    struct_open = _STRUCT_RE.match(raw)
    if struct_open and depth == 0:
        indent, name = struct_open.groups()
        return "struct-open", indent + target.struct_open.format(name=name)
    if in_struct_depth is not None and stripped in ("};", "} ;"):
        indent = raw[:len(raw) - len(raw.lstrip())]
        return "struct-close", indent + "}"

    main_match = _MAIN_RE.match(raw)
    if main_match and depth == 0:
        indent, brace = main_match.groups()
        text = indent + target.main_sig + (" {" if brace else "")
        return "main", text

    if in_main_depth is not None:
        ret = _RETURN_INT_RE.match(raw)
        if ret:
            return "line", ret.group(1) + "return;"

    printf = _PRINTF_RE.match(raw)
    if printf:
        return "line", _convert_printf(printf.group(1), printf.group(2),
                                       target)
    scanf = _SCANF_RE.match(raw)
    if scanf:
        return "line", _convert_scanf(scanf.group(1), scanf.group(2),
                                      scanf.group(3) or "", target)

    func = _FUNC_RE.match(raw)
    if func and depth == 0 and in_struct_depth is None:
        converted = _convert_function(func, target)
        if converted is not None:
            return "line", converted
    if depth == 0 and in_struct_depth is None and stripped.endswith(";") \
            and re.match(r"^(\s*)((?:[A-Za-z_]\w*[\s\*]+)+?)\**\s*"
                         r"([A-Za-z_]\w*)\s*\([^;{]*\)\s*;\s*$", raw) \
            and stripped.split()[0] in _TYPE_KEYWORDS:
        return None                   # prototype: target needs none

    lowered = stripped.lower()
    if any(tok in lowered for tok in _UNSUPPORTED):
        indent = raw[:len(raw) - len(raw.lstrip())]
        return "line", indent + "// TODO(transpile) " + stripped

    return "line", _map_types(raw, target)


def _brace_delta(line: str) -> int:
    delta = 0
    in_string: str | None = None
    i = 0
    while i < len(line):
        ch = line[i]
        if in_string:
            if ch == "\\":
                i += 2
                continue
            if ch == in_string:
                in_string = None
        elif ch in "\"'":
            in_string = ch
        elif ch == "{":
            delta += 1
        elif ch == "}":
            delta -= 1
        i += 1
    return delta


def _convert_function(match: re.Match, target: _Target) -> str | None:
    indent, ret_text, name, params, brace = match.groups()
    first = ret_text.split()[0] if ret_text.split() else ""
    if first not in _TYPE_KEYWORDS:
        return None
    if name == "main":
        return None
    ret = _map_type_text(ret_text, target)
    mapped_params = ", ".join(
        p for p in (_map_param(piece, target) for piece in params.split(","))
        if p) if params.strip() and params.strip() != "void" else ""
    text = f"{indent}static {ret} {name}({mapped_params})"
    if brace:
        text += " {"
    return text


def _map_param(piece: str, target: _Target) -> str:
    piece = piece.strip()
    if not piece:
        return ""
    piece = re.sub(r"\bconst\s+", "", piece)
    # char* / char name[] -> string type
    m = re.match(r"^char\s*\*\s*(\w+)$", piece)
    if m:
        return f"{target.string_type} {m.group(1)}"
    m = re.match(r"^char\s+(\w+)\s*\[\s*\]$", piece)
    if m:
        return f"{target.string_type} {m.group(1)}"
    # T* / T name[] -> T[] name
    m = re.match(r"^(\w+)\s*\*\s*(\w+)$", piece)
    if m:
        return f"{m.group(1)}[] {m.group(2)}"
    m = re.match(r"^(\w+)\s+(\w+)\s*\[\s*\]$", piece)
    if m:
        return f"{m.group(1)}[] {m.group(2)}"
    m = re.match(r"^struct\s+(\w+)\s+(\w+)$", piece)
    if m:
        return f"{m.group(1)} {m.group(2)}"
    piece = re.sub(r"\bunsigned\s+int\b", "int", piece)
    piece = re.sub(r"\bunsigned\b", "int", piece)
    return " ".join(piece.split())


def _map_type_text(text: str, target: _Target) -> str:
    text = re.sub(r"\bconst\s+", "", text)
    text = re.sub(r"\bunsigned\s+int\b", "int", text)
    text = re.sub(r"\bunsigned\b", "int", text)
    text = re.sub(r"\bstruct\s+(\w+)", r"\1", text)
    if "*" in text:
        base = text.replace("*", " ").split()
        if base and base[0] == "char":
            return target.string_type
        if base:
            return base[0] + "[]"
    words = text.split()
    return words[-1] if words else "void"


def _map_types(raw: str, target: _Target) -> str:
    line = raw
    # char * name -> String name; char name[N] -> String name
    line = re.sub(r"\bchar\s*\*\s*", target.string_type + " ", line)
    line = re.sub(r"\bchar\s+(\w+)\s*\[\s*\d*\s*\]",
                  rf"{target.string_type} \1", line)
    # T name[N]; -> T[] name = new T[N];
    m = re.match(r"^(\s*)(int|double|float|long|short)\s+(\w+)\s*"
                 r"\[\s*(\w+)\s*\]\s*;\s*$", line)
    if m:
        indent, base, name, size = m.groups()
        return f"{indent}{base}[] {name} = new {base}[{size}];"
    # T name[] = {...}; -> T[] name = {...};
    line = re.sub(r"\b(int|double|float|long|short)\s+(\w+)\s*\[\s*\]\s*=",
                  r"\1[] \2 =", line)
    # struct instance declarations
    m = re.match(r"^(\s*)struct\s+(\w+)\s+(\w+)\s*;\s*$", line)
    if m:
        indent, struct_name, var = m.groups()
        if target.name == "java":
            return f"{indent}{struct_name} {var} = new {struct_name}();"
        return f"{indent}{struct_name} {var};"
    line = re.sub(r"\bstruct\s+(\w+)\b", r"\1", line)
    line = re.sub(r"\bunsigned\s+int\b", "int", line)
    line = re.sub(r"\bunsigned\b", "int", line)
    line = re.sub(r"\bconst\s+", "", line)
    return line


def _split_top_commas(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    in_string: str | None = None
    i = 0
    while i < len(text):
        ch = text[i]
        if in_string:
            cur.append(ch)
            if ch == "\\":
                if i + 1 < len(text):
                    cur.append(text[i + 1])
                i += 2
                continue
            if ch == in_string:
                in_string = None
            i += 1
            continue
        if ch in "\"'":
            in_string = ch
            cur.append(ch)
        elif ch in "([":
            depth += 1
            cur.append(ch)
        elif ch in ")]":
            depth -= 1
            cur.append(ch)
        elif ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
        i += 1
    tail = "".join(cur).strip()
    if tail:
        parts.append(tail)
    return parts


def _convert_printf(indent: str, args_text: str, target: _Target) -> str:
    args = _split_top_commas(args_text)
    if not args or not args[0].startswith('"'):
        return (indent + "// TODO(transpile) printf(" + args_text + ");")
    fmt = args[0][1:-1]
    values = args[1:]
    newline = fmt.endswith("\\n")
    if newline:
        fmt = fmt[:-2]
    segments, ok = _format_segments(fmt, values)
    fn = target.println if newline else target.print_fn
    if not ok:
        joined = ", ".join([f'"{fmt}"'] + values)
        return (f"{indent}{fn}({joined});"
                " // TODO(transpile) unsupported printf format")
    if not segments:
        expr = '""'
    else:
        expr = " + ".join(segments)
    return f"{indent}{fn}({expr});"


def _format_segments(fmt: str, values: list[str]) -> tuple[list[str], bool]:
    segments: list[str] = []
    text: list[str] = []
    value_index = 0
    i = 0
    while i < len(fmt):
        if fmt[i] != "%":
            text.append(fmt[i])
            i += 1
            continue
        if fmt.startswith("%%", i):
            text.append("%")
            i += 2
            continue
        code = next((c for c in _FORMAT_CODES if fmt.startswith(c, i)), None)
        if code is None or value_index >= len(values):
            return [], False
        if text:
            segments.append('"' + "".join(text) + '"')
            text = []
        segments.append(values[value_index])
        value_index += 1
        i += len(code)
    if value_index != len(values):
        return [], False
    if text:
        segments.append('"' + "".join(text) + '"')
    return segments, True


def _convert_scanf(indent: str, fmt: str, args_text: str,
                   target: _Target) -> str:
    codes = []
    i = 0
    while i < len(fmt):
        if fmt[i] == "%":
            code = next((c for c in _FORMAT_CODES if fmt.startswith(c, i)),
                        None)
            if code is None:
                codes = None
                break
            codes.append(code)
            i += len(code)
        else:
            i += 1
    values = [v.lstrip("&").strip() for v in _split_top_commas(args_text)]
    if codes is None or len(codes) != len(values) or not codes:
        return (indent + "// TODO(transpile) scanf mismatch: "
                + fmt + " / " + args_text)
    reads = [f"{var} = {target.reads[code]};"
             for code, var in zip(codes, values)]
    return indent + " ".join(reads)
