"""Tokenizer shared by the C and Java frontends.

Comments and preprocessor lines are trivia: they produce no tokens.
Annotation comments are handled separately (see annotations.py), so the
parsers never see them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tree import FrontendError

# Longest-first so e.g. ">>=" wins over ">>" and ">".
_OPERATORS = [
    "<<=", ">>=", "...",
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "+", "-", "*", "/", "%", "<", ">", "=", "!", "&", "|", "^", "~",
    "(", ")", "[", "]", "{", "}", ";", ",", ".", ":", "?",
]


@dataclass(frozen=True)
class Token:
    type: str        # IDENT | NUMBER | STRING | CHAR | PUNCT
    value: str
    line: int        # 1-based
    col: int         # 1-based
    pos: int         # character offset into the source


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)

    def advance(count: int) -> None:
        nonlocal i, line, col
        for _ in range(count):
            if source[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            advance(1)
            continue
        # Preprocessor directive: swallow the whole (possibly continued) line.
        if ch == "#" and _at_line_start(source, i):
            while i < n and not (source[i] == "\n" and source[i - 1] != "\\"):
                advance(1)
            continue
        if source.startswith("//", i):
            while i < n and source[i] != "\n":
                advance(1)
            continue
        if source.startswith("/*", i):
            start_line = line
            end = source.find("*/", i + 2)
            if end < 0:
                raise FrontendError("unterminated block comment", start_line)
            advance(end + 2 - i)
            continue
        if ch == '"':
            tok_line, tok_col, start = line, col, i
            advance(1)
            while i < n and source[i] != '"':
                advance(2 if source[i] == "\\" and i + 1 < n else 1)
            if i >= n:
                raise FrontendError("unterminated string literal", tok_line)
            advance(1)
            tokens.append(Token("STRING", source[start:i], tok_line, tok_col, start))
            continue
        if ch == "'":
            tok_line, tok_col, start = line, col, i
            advance(1)
            while i < n and source[i] != "'":
                advance(2 if source[i] == "\\" and i + 1 < n else 1)
            if i >= n:
                raise FrontendError("unterminated character literal", tok_line)
            advance(1)
            tokens.append(Token("CHAR", source[start:i], tok_line, tok_col, start))
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            tok_line, tok_col, start = line, col, i
            advance(1)
            while i < n and (source[i].isalnum() or source[i] == "."
                             or (source[i] in "+-" and source[i - 1] in "eE")):
                advance(1)
            tokens.append(Token("NUMBER", source[start:i], tok_line, tok_col, start))
            continue
        if ch.isalpha() or ch == "_":
            tok_line, tok_col, start = line, col, i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                advance(1)
            tokens.append(Token("IDENT", source[start:i], tok_line, tok_col, start))
            continue
        for op in _OPERATORS:
            if source.startswith(op, i):
                tokens.append(Token("PUNCT", op, line, col, i))
                advance(len(op))
                break
        else:
            # Anything unexpected becomes a one-character token; the parsers'
            # unknown-statement fallback will absorb it.
            tokens.append(Token("PUNCT", ch, line, col, i))
            advance(1)
    return tokens


def check_braces(tokens: list[Token]) -> None:
    """Raise when '{' / '}' do not balance, naming the offending line."""
    stack: list[Token] = []
    for tok in tokens:
        if tok.value == "{":
            stack.append(tok)
        elif tok.value == "}":
            if not stack:
                raise FrontendError("unmatched '}'", tok.line)
            stack.pop()
    if stack:
        raise FrontendError("unmatched '{'", stack[-1].line)


def _at_line_start(source: str, pos: int) -> bool:
    j = pos - 1
    while j >= 0 and source[j] in " \t":
        j -= 1
    return j < 0 or source[j] == "\n"
