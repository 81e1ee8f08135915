"""Lightweight structure extraction for C and Java sources.

These are deliberately not full compilers: a tokenizer plus recursive
descent over the statement/expression subset the corpus uses. Anything
outside the subset degrades to an UNKNOWN_STMT leaf carrying the raw text,
so parsing is total on well-bracketed input.
"""

from __future__ import annotations

from .lexer import Token, check_braces, tokenize
from .tree import FrontendError, SyntaxTree

_C_TYPE_KEYWORDS = {
    "void", "char", "short", "int", "long", "float", "double",
    "signed", "unsigned", "_Bool", "size_t", "bool",
}
_C_SPECIFIERS = {"const", "static", "extern", "register", "inline", "volatile"}

_JAVA_TYPE_KEYWORDS = {
    "void", "byte", "short", "int", "long", "float", "double",
    "boolean", "char", "String",
}
_JAVA_MODIFIERS = {
    "public", "private", "protected", "static", "final", "abstract",
    "synchronized", "native", "transient", "volatile",
}

_ASSIGN_OPS = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="}

# Binary operator precedence; assignment is lowest and right-associative.
_PRECEDENCE = {
    **{op: 1 for op in _ASSIGN_OPS},
    "||": 3, "&&": 4, "|": 5, "^": 6, "&": 7,
    "==": 8, "!=": 8,
    "<": 9, ">": 9, "<=": 9, ">=": 9,
    "<<": 10, ">>": 10,
    "+": 11, "-": 11,
    "*": 12, "/": 12, "%": 12,
}
_TERNARY_PREC = 2

_UNARY_OPS = {"!", "-", "+", "~", "*", "&", "++", "--"}


class _Unexpected(Exception):
    """Internal: current construct is outside the supported subset."""


class CLikeParser:
    language = "c"

    def __init__(self, source: str):
        self.src = source
        self.toks = tokenize(source)
        check_braces(self.toks)
        self.i = 0

    # -- token helpers ----------------------------------------------------

    def peek(self, k: int = 0) -> Token | None:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def at(self, *values: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.value in values

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise _Unexpected("eof")
        self.i += 1
        return tok

    def expect(self, value: str) -> Token:
        tok = self.peek()
        if tok is None or tok.value != value:
            raise _Unexpected(f"expected {value!r}")
        return self.next()

    def _end_of(self, tok_index: int) -> int:
        tok = self.toks[tok_index]
        return tok.pos + len(tok.value)

    def _node(self, kind: str, label: str, start: Token,
              children: list[SyntaxTree] | None = None) -> SyntaxTree:
        end = self._end_of(self.i - 1) if self.i > 0 else start.pos
        return SyntaxTree(kind, label, (start.line, start.col),
                          children or [], offsets=(start.pos, end))

    # -- entry point -------------------------------------------------------

    def parse_file(self) -> SyntaxTree:
        children = []
        while self.peek() is not None:
            children.append(self.parse_external())
        return SyntaxTree("FILE", "", (1, 1), children,
                          offsets=(0, len(self.src)))

    def parse_external(self) -> SyntaxTree:
        raise NotImplementedError

    # -- statements --------------------------------------------------------

    def parse_statement(self) -> SyntaxTree:
        start = self.i
        try:
            return self._statement()
        except _Unexpected:
            self.i = start
            return self.unknown_statement()

    def _statement(self) -> SyntaxTree:
        tok = self.peek()
        if tok is None:
            raise _Unexpected("eof")
        if tok.value == "{":
            return self.parse_compound()
        if tok.value == ";":
            self.next()
            return self._node("NULL_STMT", "", tok)
        if tok.value == "if":
            return self._if_statement()
        if tok.value == "while":
            self.next()
            self.expect("(")
            cond = self.parse_expression()
            self.expect(")")
            body = self.parse_statement()
            return self._node("WHILE_STMT", "", tok, [cond, body])
        if tok.value == "do":
            self.next()
            body = self.parse_statement()
            self.expect("while")
            self.expect("(")
            cond = self.parse_expression()
            self.expect(")")
            self.expect(";")
            return self._node("DO_STMT", "", tok, [body, cond])
        if tok.value == "for":
            return self._for_statement()
        if tok.value == "switch":
            return self._switch_statement()
        if tok.value == "return":
            self.next()
            children = []
            if not self.at(";"):
                children.append(self.parse_expression())
            self.expect(";")
            return self._node("RETURN_STMT", "", tok, children)
        if tok.value == "break":
            self.next()
            self.expect(";")
            return self._node("BREAK_STMT", "", tok)
        if tok.value == "continue":
            self.next()
            self.expect(";")
            return self._node("CONTINUE_STMT", "", tok)
        if self.is_declaration_start():
            return self.parse_declaration()
        expr = self.parse_expression(allow_comma=True)
        self.expect(";")
        return expr

    def parse_compound(self) -> SyntaxTree:
        start = self.expect("{")
        children = []
        while not self.at("}"):
            if self.peek() is None:
                raise _Unexpected("unterminated block")
            children.append(self.parse_statement())
        self.expect("}")
        return self._node("COMPOUND_STMT", "", start, children)

    def _if_statement(self) -> SyntaxTree:
        tok = self.expect("if")
        self.expect("(")
        cond = self.parse_expression()
        self.expect(")")
        then = self.parse_statement()
        children = [cond, then]
        if self.at("else"):
            self.next()
            children.append(self.parse_statement())
        return self._node("IF_STMT", "", tok, children)

    def _for_statement(self) -> SyntaxTree:
        tok = self.expect("for")
        self.expect("(")
        children: list[SyntaxTree] = []
        if not self.at(";"):
            if self.is_declaration_start():
                children.append(self.parse_declaration())
            else:
                children.append(self.parse_expression(allow_comma=True))
                self.expect(";")
        else:
            self.next()
        if not self.at(";"):
            children.append(self.parse_expression())
        self.expect(";")
        if not self.at(")"):
            children.append(self.parse_expression(allow_comma=True))
        self.expect(")")
        children.append(self.parse_statement())
        return self._node("FOR_STMT", "", tok, children)

    def _switch_statement(self) -> SyntaxTree:
        tok = self.expect("switch")
        self.expect("(")
        cond = self.parse_expression()
        self.expect(")")
        body_start = self.expect("{")
        sections: list[SyntaxTree] = []
        current: SyntaxTree | None = None
        while not self.at("}"):
            if self.peek() is None:
                raise _Unexpected("unterminated switch")
            if self.at("case"):
                case_tok = self.next()
                label_expr = self.parse_expression()
                self.expect(":")
                label_text = self._slice(label_expr)
                current = self._node("CASE_STMT", label_text, case_tok)
                sections.append(current)
            elif self.at("default"):
                default_tok = self.next()
                self.expect(":")
                current = self._node("DEFAULT_STMT", "", default_tok)
                sections.append(current)
            else:
                stmt = self.parse_statement()
                if current is not None:
                    current.children.append(stmt)
                    current.offsets = (current.offsets[0], stmt.offsets[1])
                else:
                    sections.append(stmt)
        self.expect("}")
        body = self._node("COMPOUND_STMT", "", body_start, sections)
        return self._node("SWITCH_STMT", "", tok, [cond, body])

    def unknown_statement(self) -> SyntaxTree:
        """Absorb one unparseable construct: up to ';' at depth zero, or a
        balanced brace block, never past the enclosing block's '}'."""
        first = self.peek()
        assert first is not None
        depth = 0
        start_index = self.i
        last_index = self.i
        while self.peek() is not None:
            tok = self.peek()
            if tok.value in "([{":
                depth += 1
            elif tok.value in ")]}":
                if depth == 0:
                    break
                depth -= 1
                last_index = self.i
                self.next()
                if depth == 0 and tok.value == "}":
                    if self.at(";"):
                        last_index = self.i
                        self.next()
                    break
                continue
            last_index = self.i
            self.next()
            if tok.value == ";" and depth == 0:
                break
        if self.i == start_index:
            # cursor sat on a closer; consume it so parsing always advances
            self.next()
        text = self.src[first.pos:self._end_of(last_index)]
        return SyntaxTree("UNKNOWN_STMT", text, (first.line, first.col),
                          offsets=(first.pos, self._end_of(last_index)))

    # -- declarations -------------------------------------------------------

    def is_declaration_start(self) -> bool:
        raise NotImplementedError

    def parse_declaration(self) -> SyntaxTree:
        """`type declarator (, declarator)* ;` -> DECL_STMT over VAR_DECLs."""
        start = self.peek()
        assert start is not None
        self._consume_type_tokens()
        decls = [self._declarator()]
        while self.at(","):
            self.next()
            decls.append(self._declarator())
        self.expect(";")
        return self._node("DECL_STMT", "", start, decls)

    def _consume_type_tokens(self) -> None:
        consumed = 0
        while True:
            tok = self.peek()
            if tok is None:
                raise _Unexpected("eof in type")
            if tok.value in self.specifiers or tok.value in self.type_keywords:
                self.next()
                consumed += 1
            elif tok.value == "struct" and self._is_ident(self.peek(1)):
                self.next()
                self.next()
                consumed += 1
            elif tok.value == "*":
                self.next()
            elif tok.value == "[" and self.peek(1) is not None \
                    and self.peek(1).value == "]":
                self.next()
                self.next()
            elif consumed == 0 and self._is_ident(tok) \
                    and self._is_ident(self.peek(1)):
                # typedef'd / class type followed by the declared name
                self.next()
                consumed += 1
            else:
                break
        if consumed == 0:
            raise _Unexpected("expected type")

    def _declarator(self) -> SyntaxTree:
        while self.at("*"):
            self.next()
        name_tok = self.peek()
        if not self._is_ident(name_tok):
            raise _Unexpected("expected declarator name")
        self.next()
        children: list[SyntaxTree] = []
        while self.at("["):
            self.next()
            if not self.at("]"):
                children.append(self.parse_expression())
            self.expect("]")
        if self.at("="):
            self.next()
            children.append(self._initializer())
        end = self._end_of(self.i - 1)
        return SyntaxTree("VAR_DECL", name_tok.value,
                          (name_tok.line, name_tok.col), children,
                          offsets=(name_tok.pos, end))

    def _initializer(self) -> SyntaxTree:
        if self.at("{"):
            start = self.next()
            elements = []
            while not self.at("}"):
                elements.append(self._initializer())
                if self.at(","):
                    self.next()
            self.expect("}")
            return self._node("INIT_LIST_EXPR", "", start, elements)
        return self.parse_expression()

    # -- expressions ---------------------------------------------------------

    def parse_expression(self, min_prec: int = 1,
                         allow_comma: bool = False) -> SyntaxTree:
        left = self.parse_unary()
        while True:
            tok = self.peek()
            if tok is None:
                break
            if tok.value == "?" and _TERNARY_PREC >= min_prec:
                self.next()
                then = self.parse_expression()
                self.expect(":")
                other = self.parse_expression(_TERNARY_PREC)
                left = self._combine("CONDITIONAL_OPERATOR", "", left,
                                     [left, then, other])
                continue
            if allow_comma and tok.value == ",":
                self.next()
                right = self.parse_expression()
                left = self._combine("BINARY_OPERATOR", ",", left, [left, right])
                continue
            prec = _PRECEDENCE.get(tok.value)
            if prec is None or prec < min_prec or tok.type != "PUNCT":
                break
            self.next()
            next_min = prec if tok.value in _ASSIGN_OPS else prec + 1
            right = self.parse_expression(next_min)
            left = self._combine("BINARY_OPERATOR", tok.value, left,
                                 [left, right])
        return left

    def _combine(self, kind: str, label: str, first: SyntaxTree,
                 children: list[SyntaxTree]) -> SyntaxTree:
        end = self._end_of(self.i - 1)
        return SyntaxTree(kind, label, first.span, children,
                          offsets=(first.offsets[0], end))

    def parse_unary(self) -> SyntaxTree:
        tok = self.peek()
        if tok is None:
            raise _Unexpected("eof in expression")
        if tok.type == "PUNCT" and tok.value in _UNARY_OPS:
            self.next()
            operand = self.parse_unary()
            return self._node("UNARY_OPERATOR", tok.value, tok, [operand])
        if tok.value == "sizeof":
            self.next()
            operand = self.parse_unary()
            return self._node("UNARY_OPERATOR", "sizeof", tok, [operand])
        return self.parse_postfix()

    def parse_postfix(self) -> SyntaxTree:
        node = self.parse_primary()
        while True:
            tok = self.peek()
            if tok is None:
                break
            if tok.value == "(" and node.kind in ("DECL_REF_EXPR", "MEMBER_EXPR"):
                self.next()
                args = self._argument_list()
                base = node.children if node.kind == "MEMBER_EXPR" else []
                node = SyntaxTree("CALL_EXPR", node.label, node.span,
                                  base + args,
                                  offsets=(node.offsets[0],
                                           self._end_of(self.i - 1)))
            elif tok.value == "[":
                self.next()
                index = self.parse_expression()
                self.expect("]")
                node = self._combine("ARRAY_SUBSCRIPT_EXPR", "", node,
                                     [node, index])
            elif tok.value in (".", "->"):
                self.next()
                member = self.peek()
                if not self._is_ident(member):
                    raise _Unexpected("expected member name")
                self.next()
                node = self._combine("MEMBER_EXPR", member.value, node, [node])
            elif tok.value in ("++", "--"):
                self.next()
                node = self._combine("UNARY_OPERATOR", tok.value, node, [node])
            else:
                break
        return node

    def _argument_list(self) -> list[SyntaxTree]:
        args = []
        while not self.at(")"):
            if self.peek() is None:
                raise _Unexpected("unterminated argument list")
            args.append(self.parse_expression())
            if self.at(","):
                self.next()
        self.expect(")")
        return args

    def parse_primary(self) -> SyntaxTree:
        tok = self.peek()
        if tok is None:
            raise _Unexpected("eof in expression")
        if tok.value == "(":
            if self._looks_like_cast():
                return self._cast_expression()
            self.next()
            inner = self.parse_expression(allow_comma=True)
            self.expect(")")
            return inner
        if tok.type == "NUMBER":
            self.next()
            kind = ("FLOATING_LITERAL" if self._is_float_literal(tok.value)
                    else "INTEGER_LITERAL")
            return self._node(kind, tok.value, tok)
        if tok.type == "STRING":
            self.next()
            return self._node("STRING_LITERAL", tok.value, tok)
        if tok.type == "CHAR":
            self.next()
            return self._node("CHARACTER_LITERAL", tok.value, tok)
        if tok.type == "IDENT":
            special = self.special_identifier(tok)
            if special is not None:
                return special
            self.next()
            return self._node("DECL_REF_EXPR", tok.value, tok)
        raise _Unexpected(f"unexpected token {tok.value!r}")

    def special_identifier(self, tok: Token) -> SyntaxTree | None:
        return None

    def _looks_like_cast(self) -> bool:
        # "(type) expr" with a plain type name between the parens.
        if not self.at("("):
            return False
        j = self.i + 1
        seen_type = False
        while j < len(self.toks):
            v = self.toks[j].value
            if v in self.type_keywords or v in ("struct", "*"):
                seen_type = True
                j += 1
            else:
                break
        if not seen_type or j >= len(self.toks) or self.toks[j].value != ")":
            return False
        after = self.toks[j + 1] if j + 1 < len(self.toks) else None
        return after is not None and (
            after.type in ("IDENT", "NUMBER", "STRING", "CHAR")
            or after.value in ("(",) or after.value in _UNARY_OPS)

    def _cast_expression(self) -> SyntaxTree:
        start = self.expect("(")
        type_toks = []
        while not self.at(")"):
            type_toks.append(self.next().value)
        self.expect(")")
        operand = self.parse_unary()
        label = "(%s)" % " ".join(type_toks)
        return self._node("UNARY_OPERATOR", label, start, [operand])

    # -- misc ----------------------------------------------------------------

    def _slice(self, node: SyntaxTree) -> str:
        lo, hi = node.offsets
        return " ".join(self.src[lo:hi].split())

    @staticmethod
    def _is_ident(tok: Token | None) -> bool:
        return tok is not None and tok.type == "IDENT"

    @staticmethod
    def _is_float_literal(value: str) -> bool:
        if value.lower().startswith("0x"):
            return False
        return ("." in value or "e" in value or "E" in value
                or value.endswith(("f", "F")))


class CParser(CLikeParser):
    language = "c"
    type_keywords = _C_TYPE_KEYWORDS
    specifiers = _C_SPECIFIERS

    def is_declaration_start(self) -> bool:
        tok = self.peek()
        if tok is None or tok.type != "IDENT" or tok.value == "typedef":
            return False
        if tok.value in self.type_keywords or tok.value in self.specifiers:
            return True
        if tok.value == "struct" and self._is_ident(self.peek(1)):
            return True
        # "name name" with no operator between: a typedef'd declaration
        return self._is_ident(self.peek(1)) and tok.value not in (
            "return", "else", "case")

    def parse_external(self) -> SyntaxTree:
        start = self.i
        if self.at("struct") and self._is_ident(self.peek(1)) \
                and self.peek(2) is not None and self.peek(2).value == "{":
            return self._parse_struct()
        fn = self._try_parse_function()
        if fn is not None:
            return fn
        self.i = start
        try:
            if self.is_declaration_start():
                return self.parse_declaration()
            raise _Unexpected("not a declaration")
        except _Unexpected:
            self.i = start
            return self.unknown_statement()

    def _parse_struct(self) -> SyntaxTree:
        start = self.expect("struct")
        name = self.next()
        self.expect("{")
        fields: list[SyntaxTree] = []
        while not self.at("}"):
            if self.peek() is None:
                raise _Unexpected("unterminated struct")
            mem_start = self.i
            try:
                decl = self.parse_declaration()
                for var in decl.children:
                    fields.append(SyntaxTree("FIELD_DECL", var.label, var.span,
                                             var.children, offsets=var.offsets))
            except _Unexpected:
                self.i = mem_start
                fields.append(self.unknown_statement())
        self.expect("}")
        if self.at(";"):
            self.next()
        return self._node("STRUCT_DECL", name.value, start, fields)

    def _try_parse_function(self) -> SyntaxTree | None:
        save = self.i
        start = self.peek()
        name_tok = None
        while True:
            tok = self.peek()
            if tok is None:
                break
            if self._is_ident(tok) and self.peek(1) is not None \
                    and self.peek(1).value == "(" \
                    and tok.value not in self.type_keywords:
                name_tok = self.next()
                break
            if (tok.type == "IDENT" and (tok.value in self.type_keywords
                                         or tok.value in self.specifiers
                                         or tok.value == "struct"
                                         or self._is_ident(self.peek(1))
                                         or (self.peek(1) is not None
                                             and self.peek(1).value == "*"))) \
                    or tok.value == "*":
                self.next()
                continue
            break
        if name_tok is None or self.i == save or not self.at("("):
            self.i = save
            return None
        try:
            self.next()
            params = self._parameter_list()
            if self.at("{"):
                body = self.parse_compound()
                return self._node("FUNCTION_DECL", name_tok.value,
                                  start, params + [body])
            if self.at(";"):
                self.next()
                return self._node("FUNCTION_DECL", name_tok.value,
                                  start, params)
        except _Unexpected:
            pass
        self.i = save
        return None

    def _parameter_list(self) -> list[SyntaxTree]:
        params: list[SyntaxTree] = []
        if self.at(")"):
            self.next()
            return params
        if self.at("void") and self.peek(1) is not None \
                and self.peek(1).value == ")":
            self.next()
            self.next()
            return params
        while True:
            toks: list[Token] = []
            depth = 0
            while self.peek() is not None:
                tok = self.peek()
                if depth == 0 and tok.value in (",", ")"):
                    break
                if tok.value in "([":
                    depth += 1
                elif tok.value in ")]":
                    depth -= 1
                toks.append(self.next())
            if not toks:
                raise _Unexpected("empty parameter")
            params.append(self._parameter_from_tokens(toks))
            if self.at(","):
                self.next()
                continue
            self.expect(")")
            return params

    def _parameter_from_tokens(self, toks: list[Token]) -> SyntaxTree:
        idents = [t for t in toks if t.type == "IDENT"
                  and t.value not in self.type_keywords
                  and t.value not in self.specifiers and t.value != "struct"]
        name_tok = idents[-1] if idents else None
        label = name_tok.value if name_tok is not None else ""
        anchor = name_tok if name_tok is not None else toks[0]
        end = toks[-1].pos + len(toks[-1].value)
        return SyntaxTree("VAR_DECL", label, (anchor.line, anchor.col),
                          offsets=(toks[0].pos, end))


class JavaParser(CLikeParser):
    language = "java"
    type_keywords = _JAVA_TYPE_KEYWORDS
    specifiers = _JAVA_MODIFIERS

    def is_declaration_start(self) -> bool:
        tok = self.peek()
        if tok is None or tok.type != "IDENT":
            return False
        if tok.value in ("return", "else", "case", "new"):
            return False
        if tok.value in self.type_keywords or tok.value == "final":
            return True
        nxt = self.peek(1)
        if self._is_ident(nxt):
            return True
        # "Type[] name"
        return (nxt is not None and nxt.value == "["
                and self.peek(2) is not None and self.peek(2).value == "]"
                and self._is_ident(self.peek(3)))

    def special_identifier(self, tok: Token) -> SyntaxTree | None:
        if tok.value in ("true", "false"):
            self.next()
            return self._node("BOOLEAN_LITERAL", tok.value, tok)
        if tok.value == "null":
            self.next()
            return self._node("NULL_LITERAL", tok.value, tok)
        if tok.value == "new":
            return self._new_expression(tok)
        return None

    def _new_expression(self, tok: Token) -> SyntaxTree:
        self.expect("new")
        name_parts = []
        if not self._is_ident(self.peek()):
            raise _Unexpected("expected type after new")
        name_parts.append(self.next().value)
        while self.at(".") and self._is_ident(self.peek(1)):
            self.next()
            name_parts.append(self.next().value)
        children: list[SyntaxTree] = []
        if self.at("("):
            self.next()
            children = self._argument_list()
        else:
            while self.at("["):
                self.next()
                if not self.at("]"):
                    children.append(self.parse_expression())
                self.expect("]")
        return self._node("NEW_EXPR", ".".join(name_parts), tok, children)

    def parse_external(self) -> SyntaxTree:
        while self.at("package", "import"):
            while self.peek() is not None and not self.at(";"):
                self.next()
            if self.at(";"):
                self.next()
        if self.peek() is None:
            # trailing imports only; yield an empty marker that the caller drops
            return SyntaxTree("NULL_STMT", "", (1, 1), offsets=(0, 0))
        start = self.i
        save = self.peek()
        while self.at(*sorted(_JAVA_MODIFIERS)):
            self.next()
        if self.at("class"):
            return self._parse_class(save)
        self.i = start
        return self.unknown_statement()

    def parse_file(self) -> SyntaxTree:
        children = []
        while self.peek() is not None:
            node = self.parse_external()
            if node.kind != "NULL_STMT":
                children.append(node)
        return SyntaxTree("FILE", "", (1, 1), children,
                          offsets=(0, len(self.src)))

    def _parse_class(self, start: Token) -> SyntaxTree:
        self.expect("class")
        name = self.next()
        while not self.at("{"):
            if self.peek() is None:
                raise _Unexpected("class without body")
            self.next()
        self.expect("{")
        members: list[SyntaxTree] = []
        while not self.at("}"):
            if self.peek() is None:
                raise _Unexpected("unterminated class body")
            members.append(self._parse_member(name.value))
        self.expect("}")
        return self._node("CLASS_DECL", name.value, start, members)

    def _parse_member(self, class_name: str) -> SyntaxTree:
        start = self.i
        start_tok = self.peek()
        assert start_tok is not None
        try:
            while self.at(*sorted(_JAVA_MODIFIERS)):
                self.next()
            if self.at("class"):
                return self._parse_class(start_tok)
            method = self._try_parse_method(class_name, start_tok)
            if method is not None:
                return method
            self.i = start
            return self._parse_field()
        except _Unexpected:
            self.i = start
            return self.unknown_statement()

    def _try_parse_method(self, class_name: str,
                          start_tok: Token) -> SyntaxTree | None:
        save = self.i
        # constructor: ClassName(
        if self.at(class_name) and self.peek(1) is not None \
                and self.peek(1).value == "(":
            name_tok = self.next()
        else:
            try:
                self._consume_type_tokens()
            except _Unexpected:
                self.i = save
                return None
            name_tok = self.peek()
            if not self._is_ident(name_tok) or self.peek(1) is None \
                    or self.peek(1).value != "(":
                self.i = save
                return None
            self.next()
        self.expect("(")
        params = self._java_parameter_list()
        children = list(params)
        if self.at("{"):
            children.append(self.parse_compound())
        elif self.at(";"):
            self.next()
        else:
            self.i = save
            return None
        return self._node("METHOD_DECL", name_tok.value, start_tok, children)

    def _java_parameter_list(self) -> list[SyntaxTree]:
        params: list[SyntaxTree] = []
        while not self.at(")"):
            if self.peek() is None:
                raise _Unexpected("unterminated parameter list")
            toks: list[Token] = []
            while self.peek() is not None and not self.at(",", ")"):
                toks.append(self.next())
            idents = [t for t in toks if t.type == "IDENT"]
            if not idents:
                raise _Unexpected("unnamed parameter")
            name_tok = idents[-1]
            params.append(SyntaxTree(
                "VAR_DECL", name_tok.value, (name_tok.line, name_tok.col),
                offsets=(toks[0].pos, name_tok.pos + len(name_tok.value))))
            if self.at(","):
                self.next()
        self.expect(")")
        return params

    def _parse_field(self) -> SyntaxTree:
        start_tok = self.peek()
        assert start_tok is not None
        while self.at(*sorted(_JAVA_MODIFIERS)):
            self.next()
        self._consume_type_tokens()
        fields = [self._declarator()]
        while self.at(","):
            self.next()
            fields.append(self._declarator())
        self.expect(";")
        if len(fields) == 1:
            var = fields[0]
            return SyntaxTree("FIELD_DECL", var.label, var.span, var.children,
                              offsets=(start_tok.pos, var.offsets[1]))
        converted = [SyntaxTree("FIELD_DECL", v.label, v.span, v.children,
                                offsets=v.offsets) for v in fields]
        return self._node("DECL_STMT", "", start_tok, converted)


def parse_c(source: str) -> SyntaxTree:
    """Structure tree for one C translation unit.

    Raises FrontendError on unbalanced braces or unterminated literals;
    everything else degrades to UNKNOWN_STMT leaves.
    """
    return CParser(source).parse_file()


def parse_java(source: str) -> SyntaxTree:
    """Structure tree for one Java compilation unit (classes, fields,
    methods, and the same statement subset as the C frontend)."""
    return JavaParser(source).parse_file()
