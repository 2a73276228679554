"""C#-5-level syntax validator, script-flavored.

Unlike the Java frontend, free-standing statements and member declarations
are accepted at top level (the era's compiler API happily parsed snippets
without a class shell), alongside using directives, namespaces and type
declarations. Covers the constructs that dominate Q&A snippets: properties
and auto-properties, indexers, events, operators, attributes, generics with
``>>`` splitting, nullable types, lambdas, anonymous methods and objects,
object/collection initializers, LINQ query expressions, verbatim strings
and ``@identifiers``, and preprocessor lines (skipped as trivia).

Syntax only: no binding, no type checks. Unsafe pointer syntax and a few
C#-6+ constructs are out of scope and rejected.
"""

from __future__ import annotations

from snipcheck.frontends.cstlex import LexError, Lexer, Token

KEYWORDS = frozenset(
    """abstract as base bool break byte case catch char checked class const
    continue decimal default delegate do double else enum event explicit
    extern false finally fixed float for foreach goto if implicit in int
    interface internal is lock long namespace new null object operator out
    override params private protected public readonly ref return sbyte sealed
    short sizeof stackalloc static string struct switch this throw true try
    typeof uint ulong unchecked unsafe ushort using virtual void volatile
    while""".split()
)

PREDEFINED_TYPES = frozenset(
    "bool byte sbyte char decimal double float int uint long ulong object short ushort string".split()
)
MODIFIERS = frozenset(
    """public private protected internal static readonly sealed abstract
    virtual override extern unsafe volatile new const""".split()
)
# contextual modifiers are plain identifiers; consumed only in member positions
CONTEXTUAL_MODIFIERS = frozenset(("partial", "async"))
LITERAL_KEYWORDS = frozenset(("true", "false", "null"))
ACCESSOR_NAMES = frozenset(("get", "set", "add", "remove"))
QUERY_CLAUSE_STARTERS = frozenset(("from", "let", "where", "join", "orderby", "select", "group"))

ASSIGN, CALL, NEW, INCDEC, AWAIT, OTHER = "assign", "call", "new", "incdec", "await", "other"
STATEMENT_KINDS = frozenset((ASSIGN, CALL, NEW, INCDEC, AWAIT))

ASSIGN_OPS = frozenset("= += -= *= /= %= &= |= ^= <<=".split())
OVERLOADABLE_OPS = frozenset(
    "+ - ! ~ ++ -- * / % & | ^ << == != < <= >= true false".split()
)


class CSharpSyntaxError(Exception):
    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.i = 0

    # --- token plumbing ---------------------------------------------------

    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def la(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def at(self, text: str) -> bool:
        tok = self.cur
        return tok.kind in ("PUNCT", "KW") and tok.text == text

    def at_word(self, text: str) -> bool:
        tok = self.cur
        return tok.kind == "IDENT" and tok.text == text

    def at_ident(self) -> bool:
        return self.cur.kind == "IDENT"

    def advance(self) -> Token:
        tok = self.cur
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.advance()
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"'{text}' expected")
        return self.advance()

    def expect_ident(self) -> Token:
        if not self.at_ident():
            self.fail("identifier expected")
        return self.advance()

    def fail(self, message: str) -> None:
        tok = self.cur
        if tok.kind == "EOF":
            raise CSharpSyntaxError(f"{message} at end of input", tok.line, tok.col)
        raise CSharpSyntaxError(f"{message} before '{tok.text}'", tok.line, tok.col)

    def adjacent(self, a: Token, b: Token) -> bool:
        return a.line == b.line and a.end_col == b.col

    def gt_run(self) -> tuple[int, bool]:
        if not self.at(">"):
            return 0, False
        count = 1
        while (count < 2 and self.la(count).text == ">"
               and self.adjacent(self.la(count - 1), self.la(count))):
            count += 1
        trailing_eq = (self.la(count).kind == "PUNCT" and self.la(count).text == "="
                       and self.adjacent(self.la(count - 1), self.la(count)))
        return count, trailing_eq

    # --- compilation unit (script flavored) --------------------------------

    def parse_unit(self) -> None:
        while self.cur.kind != "EOF":
            self._top_level_item()

    def _top_level_item(self) -> None:
        if self.accept(";"):
            return
        if self.at("using") and self.la().text != "(":
            self._using_directive()
            return
        if self.at("namespace"):
            self._namespace()
            return
        if self._looks_like_declaration():
            self._member_declaration(top_level=True)
            return
        mark = self.i
        try:
            self._member_declaration(top_level=True)
            return
        except CSharpSyntaxError:
            self.i = mark
        self._statement()

    def _looks_like_declaration(self) -> bool:
        tok = self.cur
        if tok.kind == "PUNCT" and tok.text == "[":
            return False  # attribute vs expression: resolved by speculation
        if tok.kind == "KW" and tok.text in ("class", "struct", "interface", "enum",
                                             "delegate", "event", "explicit", "implicit"):
            return True
        if tok.kind == "KW" and tok.text in MODIFIERS - {"new", "const", "readonly"}:
            return True
        if tok.kind == "IDENT" and tok.text == "partial" and self.la().text in (
                "class", "struct", "interface", "void"):
            return True
        return False

    def _using_directive(self) -> None:
        self.expect("using")
        if self.at_ident() and self.la().kind == "PUNCT" and self.la().text == "=":
            self.advance()
            self.advance()
            self._qualified_name()
        else:
            self._qualified_name()
        self.expect(";")

    def _namespace(self) -> None:
        self.expect("namespace")
        self._qualified_name()
        self.expect("{")
        while not self.at("}") and self.cur.kind != "EOF":
            if self.accept(";"):
                continue
            if self.at("using") and self.la().text != "(":
                self._using_directive()
            elif self.at("namespace"):
                self._namespace()
            else:
                self._member_declaration()
        self.expect("}")

    def _qualified_name(self) -> None:
        self.expect_ident()
        while ((self.at(".") or self.at("::")) and self.la().kind == "IDENT"):
            self.advance()
            self.advance()

    # --- declarations -------------------------------------------------------

    def _attributes_opt(self) -> None:
        while self.at("["):
            mark = self.i
            self.advance()
            # optional attribute target like [assembly: ...]
            if (self.at_ident() or (self.cur.kind == "KW" and self.cur.text == "return")) \
                    and self.la().kind == "PUNCT" and self.la().text == ":":
                self.advance()
                self.advance()
            try:
                while True:
                    self._qualified_name()
                    if self.at("("):
                        self._arguments()
                    if not self.accept(","):
                        break
                self.expect("]")
            except CSharpSyntaxError:
                self.i = mark
                raise

    def _modifiers_opt(self) -> None:
        while True:
            tok = self.cur
            if tok.kind == "KW" and tok.text in MODIFIERS:
                # 'new' can begin an expression statement; treat it as a
                # modifier only when a declaration plausibly follows (inside a
                # class body that is the only legal reading anyway).
                if tok.text == "new":
                    nxt = self.la()
                    decl_follows = (
                        nxt.kind == "IDENT"
                        or (nxt.kind == "KW" and (nxt.text in PREDEFINED_TYPES or nxt.text in (
                            "class", "struct", "interface", "enum", "delegate", "event",
                            "void", "static", "public", "private", "protected", "internal",
                            "virtual", "override", "readonly", "abstract", "sealed")))
                    )
                    if not decl_follows:
                        return
                self.advance()
            elif tok.kind == "IDENT" and tok.text in CONTEXTUAL_MODIFIERS:
                nxt = self.la()
                if nxt.kind == "KW" and nxt.text in ("class", "struct", "interface", "void") \
                        or nxt.kind == "KW" and nxt.text in PREDEFINED_TYPES \
                        or nxt.kind == "IDENT" and nxt.text != "=":
                    self.advance()
                else:
                    return
            else:
                return

    def _member_declaration(self, top_level: bool = False) -> None:
        self._attributes_opt()
        self._modifiers_opt()
        tok = self.cur
        if tok.kind == "KW":
            if tok.text == "class" or tok.text == "struct":
                self.advance()
                self._class_rest()
                return
            if tok.text == "interface":
                self.advance()
                self._class_rest()
                return
            if tok.text == "enum":
                self.advance()
                self._enum_rest()
                return
            if tok.text == "delegate":
                self.advance()
                self._type()
                self.expect_ident()
                self._type_params_opt()
                self._formal_params()
                self._constraints_opt()
                self.expect(";")
                return
            if tok.text == "event":
                self.advance()
                self._type()
                self.expect_ident()
                if self.at("{"):
                    self.advance()
                    while not self.at("}") and self.cur.kind != "EOF":
                        self._attributes_opt()
                        if not (self.at_ident() and self.cur.text in ACCESSOR_NAMES):
                            self.fail("'add' or 'remove' expected")
                        self.advance()
                        self._block()
                    self.expect("}")
                    return
                if self.accept("="):
                    self._expression()
                self.expect(";")
                return
            if tok.text in ("implicit", "explicit"):
                self.advance()
                self.expect("operator")
                self._type()
                self._formal_params()
                self._method_body()
                return
        if self.at("~") and self.la().kind == "IDENT":
            self.advance()
            self.advance()
            self._formal_params()
            self._block()
            return
        # constructor: Name(...) [: base(...)|this(...)] { }
        if self.at_ident() and self.la().kind == "PUNCT" and self.la().text == "(" \
                and not top_level:
            self.advance()
            self._formal_params()
            if self.accept(":"):
                if not (self.at("base") or self.at("this")):
                    self.fail("'base' or 'this' expected")
                self.advance()
                self._arguments()
            self._block()
            return
        self._type()
        if self.at("operator"):
            self.advance()
            self._operator_symbol()
            self._formal_params()
            self._method_body()
            return
        if self.at("this"):
            self.advance()
            self.expect("[")
            self._params_until("]")
            self.expect("]")
            self._accessor_block()
            return
        self.expect_ident()
        self._type_params_opt()
        if self.at("("):
            self._formal_params()
            self._constraints_opt()
            self._method_body()
            return
        if self.at("{"):
            self._accessor_block()
            return
        self._field_rest()

    def _method_body(self) -> None:
        if self.at("{"):
            self._block()
        else:
            self.expect(";")

    def _operator_symbol(self) -> None:
        tok = self.cur
        if tok.kind == "KW" and tok.text in ("true", "false"):
            self.advance()
            return
        if tok.kind == "PUNCT" and tok.text == ">":
            run, trailing_eq = self.gt_run()
            if run == 2 and not trailing_eq:
                self.advance()
                self.advance()
                return
            if run == 1 and trailing_eq:
                self.advance()
                self.advance()
                return
            self.advance()
            return
        if tok.kind == "PUNCT" and tok.text in OVERLOADABLE_OPS:
            self.advance()
            return
        self.fail("overloadable operator expected")

    def _accessor_block(self) -> None:
        self.expect("{")
        seen = 0
        while not self.at("}") and self.cur.kind != "EOF":
            self._attributes_opt()
            self._modifiers_opt()
            if self.at_ident() and self.cur.text in ACCESSOR_NAMES:
                self.advance()
                seen += 1
                if self.at("{"):
                    self._block()
                else:
                    self.expect(";")
            else:
                self.fail("'get' or 'set' expected")
        if seen == 0:
            self.fail("'get' or 'set' expected")
        self.expect("}")

    def _class_rest(self) -> None:
        self.expect_ident()
        self._type_params_opt()
        if self.accept(":"):
            self._type()
            while self.accept(","):
                self._type()
        self._constraints_opt()
        self.expect("{")
        while not self.at("}") and self.cur.kind != "EOF":
            if self.accept(";"):
                continue
            self._member_declaration()
        self.expect("}")
        self.accept(";")

    def _enum_rest(self) -> None:
        self.expect_ident()
        if self.accept(":"):
            self._type()
        self.expect("{")
        while self.at_ident() or self.at("["):
            self._attributes_opt()
            self.expect_ident()
            if self.accept("="):
                self._expression()
            if not self.accept(","):
                break
        self.expect("}")
        self.accept(";")

    def _constraints_opt(self) -> None:
        while self.at_word("where"):
            self.advance()
            self.expect_ident()
            self.expect(":")
            while True:
                if self.at("class") or self.at("struct"):
                    self.advance()
                elif self.at("new"):
                    self.advance()
                    self.expect("(")
                    self.expect(")")
                else:
                    self._type()
                if not self.accept(","):
                    break

    def _type_params_opt(self) -> None:
        if not self.at("<"):
            return
        self.advance()
        while True:
            self._attributes_opt()
            if self.at("in") or self.at("out"):
                self.advance()
            self.expect_ident()
            if not self.accept(","):
                break
        self._close_type_angle()

    def _formal_params(self) -> None:
        self.expect("(")
        self._params_until(")")
        self.expect(")")

    def _params_until(self, closer: str) -> None:
        if self.at(closer):
            return
        while True:
            self._attributes_opt()
            while self.cur.kind == "KW" and self.cur.text in ("ref", "out", "params", "this"):
                self.advance()
            self._type()
            self.expect_ident()
            if self.accept("="):
                self._expression()
            if not self.accept(","):
                break

    def _field_rest(self) -> None:
        self._declarator_rest()
        while self.accept(","):
            self.expect_ident()
            self._declarator_rest()
        self.expect(";")

    def _declarator_rest(self) -> None:
        if self.accept("="):
            self._variable_initializer()

    def _variable_initializer(self) -> None:
        if self.at("{"):
            self._array_initializer()
        else:
            self._expression()

    def _array_initializer(self) -> None:
        self.expect("{")
        while not self.at("}"):
            self._variable_initializer()
            if not self.accept(","):
                break
        self.expect("}")

    # --- types --------------------------------------------------------------

    def _type(self) -> bool:
        """Parse a type; returns True when it starts with a predefined type."""
        predefined = False
        if self.cur.kind == "KW" and self.cur.text in PREDEFINED_TYPES:
            self.advance()
            predefined = True
        elif self.at("void") and self.la().text == "*":
            self.advance()  # void* appears in old interop snippets
            predefined = True
        elif self.at("void"):
            self.advance()
            return True
        else:
            self.expect_ident()
            self._type_args_opt()
            while ((self.at(".") or self.at("::")) and self.la().kind == "IDENT"):
                self.advance()
                self.advance()
                self._type_args_opt()
        if self.at("?") and self._nullable_marker_ok():
            self.advance()
        while self.at("*"):
            self.advance()
        while self.at("[") and self.la().text in ("]", ","):
            self.advance()
            while self.accept(","):
                pass
            self.expect("]")
            if self.at("?") and self._nullable_marker_ok():
                self.advance()
        return predefined

    def _nullable_marker_ok(self) -> bool:
        # `int? x` vs ternary `a ? b : c`: a nullable marker is followed by
        # something that can continue a type usage, not an expression.
        nxt = self.la()
        if nxt.kind in ("IDENT",):
            return True
        if nxt.kind == "PUNCT" and nxt.text in (")", "]", ">", ",", "[", "("):
            return True
        return False

    def _type_args_opt(self) -> None:
        if not self.at("<"):
            return
        self.advance()
        if self.at(">"):  # unbound generic, e.g. typeof(List<>)
            self._close_type_angle()
            return
        while True:
            self._type()
            if not self.accept(","):
                break
        self._close_type_angle()

    def _close_type_angle(self) -> None:
        if not self.at(">"):
            self.fail("'>' expected")
        self.advance()

    # --- statements -----------------------------------------------------------

    def _block(self) -> None:
        self.expect("{")
        while not self.at("}") and self.cur.kind != "EOF":
            self._statement()
        self.expect("}")

    def _statement(self) -> None:
        if self.at("{"):
            self._block()
            return
        if self.accept(";"):
            return
        text = self.cur.text if self.cur.kind == "KW" else ""
        if text == "if":
            self.advance()
            self._paren_expr()
            self._statement()
            if self.accept("else"):
                self._statement()
            return
        if text == "while":
            self.advance()
            self._paren_expr()
            self._statement()
            return
        if text == "do":
            self.advance()
            self._statement()
            self.expect("while")
            self._paren_expr()
            self.expect(";")
            return
        if text == "for":
            self.advance()
            self._for_control()
            self._statement()
            return
        if text == "foreach":
            self.advance()
            self.expect("(")
            self._type()
            self.expect_ident()
            self.expect("in")
            self._expression()
            self.expect(")")
            self._statement()
            return
        if text == "using":
            self.advance()
            self.expect("(")
            self._decl_or_expr()
            self.expect(")")
            self._statement()
            return
        if text == "lock":
            self.advance()
            self._paren_expr()
            self._statement()
            return
        if text == "fixed":
            self.advance()
            self.expect("(")
            self._decl_or_expr()
            self.expect(")")
            self._statement()
            return
        if text in ("checked", "unchecked", "unsafe") and self.la().text == "{":
            self.advance()
            self._block()
            return
        if text == "try":
            self.advance()
            self._block()
            caught = False
            while self.at("catch"):
                caught = True
                self.advance()
                if self.accept("("):
                    self._type()
                    if self.at_ident():
                        self.advance()
                    self.expect(")")
                self._block()
            if self.accept("finally"):
                self._block()
            elif not caught:
                self.fail("'catch' or 'finally' expected")
            return
        if text == "switch":
            self.advance()
            self._paren_expr()
            self.expect("{")
            while self.at("case") or self.at("default"):
                while self.at("case") or self.at("default"):
                    if self.advance().text == "case":
                        self._ternary()
                    self.expect(":")
                while not (self.at("case") or self.at("default") or self.at("}")
                           or self.cur.kind == "EOF"):
                    self._statement()
            self.expect("}")
            return
        if text == "return":
            self.advance()
            if not self.at(";"):
                self._expression()
            self.expect(";")
            return
        if text == "throw":
            self.advance()
            if not self.at(";"):
                self._expression()
            self.expect(";")
            return
        if text in ("break", "continue"):
            self.advance()
            self.expect(";")
            return
        if text == "goto":
            self.advance()
            if self.accept("case"):
                self._ternary()
            elif not self.accept("default"):
                self.expect_ident()
            self.expect(";")
            return
        if text == "const":
            self.advance()
            self._type()
            self.expect_ident()
            self._field_rest()
            return
        if text in ("class", "struct", "interface", "enum", "delegate"):
            self._member_declaration()
            return
        if self.at_word("yield") and self.la().kind == "KW" \
                and self.la().text in ("return", "break"):
            self.advance()
            if self.advance().text == "return":
                self._expression()
            self.expect(";")
            return
        if self.at_ident() and self.la().kind == "PUNCT" and self.la().text == ":" \
                and self.la(2).kind != "EOF" and not self._looks_like_query_start():
            self.advance()
            self.advance()
            self._statement()
            return
        mark = self.i
        try:
            self._type()
            self.expect_ident()
            self._field_rest()
            return
        except CSharpSyntaxError:
            self.i = mark
        kind = self._expression()
        if kind not in STATEMENT_KINDS:
            self.fail("only assignment, call, increment, decrement, await, and new object expressions can be used as a statement")
        self.expect(";")

    def _looks_like_query_start(self) -> bool:
        return self.at_word("from")

    def _decl_or_expr(self) -> None:
        mark = self.i
        try:
            self._type()
            self.expect_ident()
            self._declarator_rest()
            while self.accept(","):
                self.expect_ident()
                self._declarator_rest()
            if not self.at(")"):
                raise CSharpSyntaxError("')' expected", self.cur.line, self.cur.col)
            return
        except CSharpSyntaxError:
            self.i = mark
        self._expression()

    def _paren_expr(self) -> None:
        self.expect("(")
        self._expression()
        self.expect(")")

    def _for_control(self) -> None:
        self.expect("(")
        if not self.at(";"):
            mark = self.i
            try:
                self._type()
                self.expect_ident()
                self._declarator_rest()
                while self.accept(","):
                    self.expect_ident()
                    self._declarator_rest()
            except CSharpSyntaxError:
                self.i = mark
                self._expression()
                while self.accept(","):
                    self._expression()
        self.expect(";")
        if not self.at(";"):
            self._expression()
        self.expect(";")
        if not self.at(")"):
            self._expression()
            while self.accept(","):
                self._expression()
        self.expect(")")

    # --- expressions ------------------------------------------------------------

    def _expression(self) -> str:
        lam = self._lambda_opt()
        if lam is not None:
            return lam
        if self._looks_like_query_start():
            mark = self.i
            try:
                self._query_expression()
                return OTHER
            except CSharpSyntaxError:
                self.i = mark
        kind = self._ternary()
        if self.cur.kind == "PUNCT" and self.cur.text in ASSIGN_OPS:
            self.advance()
            self._expression()
            return ASSIGN
        run, trailing_eq = self.gt_run()
        if run == 2 and trailing_eq:
            for _ in range(3):
                self.advance()
            self._expression()
            return ASSIGN
        return kind

    def _lambda_opt(self) -> str | None:
        if self.at_word("async"):
            mark = self.i
            self.advance()
            lam = self._lambda_opt()
            if lam is not None:
                return lam
            self.i = mark
            return None
        if self.at_ident() and self.la().kind == "PUNCT" and self.la().text == "=>":
            self.advance()
            self.advance()
            self._lambda_body()
            return OTHER
        if self.at("("):
            mark = self.i
            try:
                self.advance()
                if not self.at(")"):
                    while True:
                        while self.cur.kind == "KW" and self.cur.text in ("ref", "out"):
                            self.advance()
                        if self.at_ident() and self.la().text in (",", ")"):
                            self.advance()
                        else:
                            self._type()
                            self.expect_ident()
                        if not self.accept(","):
                            break
                self.expect(")")
                if not self.at("=>"):
                    raise CSharpSyntaxError("not a lambda", self.cur.line, self.cur.col)
                self.advance()
                self._lambda_body()
                return OTHER
            except CSharpSyntaxError:
                self.i = mark
        return None

    def _lambda_body(self) -> None:
        if self.at("{"):
            self._block()
        else:
            self._expression()

    def _query_expression(self) -> None:
        self._from_clause()
        self._query_body()

    def _from_clause(self) -> None:
        if not self.at_word("from"):
            self.fail("'from' expected")
        self.advance()
        mark = self.i
        try:
            self._type()
            self.expect_ident()
            if not self.at("in"):
                raise CSharpSyntaxError("'in' expected", self.cur.line, self.cur.col)
        except CSharpSyntaxError:
            self.i = mark
            self.expect_ident()
        self.expect("in")
        self._ternary()

    def _query_body(self) -> None:
        while True:
            if self.at_word("from"):
                self._from_clause()
                continue
            if self.at_word("let"):
                self.advance()
                self.expect_ident()
                self.expect("=")
                self._ternary()
                continue
            if self.at_word("where"):
                self.advance()
                self._ternary()
                continue
            if self.at_word("join"):
                self.advance()
                self.expect_ident()
                self.expect("in")
                self._ternary()
                if not self.at_word("on"):
                    self.fail("'on' expected")
                self.advance()
                self._ternary()
                if not self.at_word("equals"):
                    self.fail("'equals' expected")
                self.advance()
                self._ternary()
                if self.at_word("into"):
                    self.advance()
                    self.expect_ident()
                continue
            if self.at_word("orderby"):
                self.advance()
                while True:
                    self._ternary()
                    if self.at_word("ascending") or self.at_word("descending"):
                        self.advance()
                    if not self.accept(","):
                        break
                continue
            break
        if self.at_word("select"):
            self.advance()
            self._ternary()
        elif self.at_word("group"):
            self.advance()
            self._ternary()
            if not self.at_word("by"):
                self.fail("'by' expected")
            self.advance()
            self._ternary()
        else:
            self.fail("'select' or 'group' expected")
        if self.at_word("into"):
            self.advance()
            self.expect_ident()
            self._query_body()

    def _ternary(self) -> str:
        # '?' after a complete expression is always conditional here; nullable
        # markers only arise inside _type, which is tried first where legal.
        kind = self._coalesce()
        if self.at("?"):
            self.advance()
            self._expression()
            self.expect(":")
            self._ternary()
            return OTHER
        return kind

    def _coalesce(self) -> str:
        kind = self._binary(0)
        if self.at("??"):
            self.advance()
            self._coalesce()
            return OTHER
        return kind

    _LEVELS: list[frozenset[str]] = [
        frozenset(("||",)),
        frozenset(("&&",)),
        frozenset(("|",)),
        frozenset(("^",)),
        frozenset(("&",)),
        frozenset(("==", "!=")),
        frozenset(("<", "<=", ">", ">=", "is", "as")),
        frozenset(("<<", ">>")),
        frozenset(("+", "-")),
        frozenset(("*", "/", "%")),
    ]

    def _binary(self, level: int) -> str:
        if level >= len(self._LEVELS):
            return self._unary()
        ops = self._LEVELS[level]
        kind = self._binary(level + 1)
        while True:
            if "is" in ops and (self.at("is") or self.at("as")):
                self.advance()
                self._type()
                kind = OTHER
                continue
            if ">>" in ops:
                run, trailing_eq = self.gt_run()
                if run == 2 and not trailing_eq:
                    self.advance()
                    self.advance()
                    self._binary(level + 1)
                    kind = OTHER
                    continue
            if ">" in ops and self.at(">"):
                run, trailing_eq = self.gt_run()
                if run == 1:
                    self.advance()
                    if trailing_eq:
                        self.advance()
                    self._binary(level + 1)
                    kind = OTHER
                    continue
                return kind
            if self.cur.kind == "PUNCT" and self.cur.text in ops and self.cur.text != ">":
                self.advance()
                self._binary(level + 1)
                kind = OTHER
                continue
            return kind

    def _unary(self) -> str:
        if self.cur.kind == "PUNCT" and self.cur.text in ("+", "-", "!", "~"):
            self.advance()
            self._unary()
            return OTHER
        if self.cur.kind == "PUNCT" and self.cur.text in ("++", "--"):
            self.advance()
            self._unary()
            return INCDEC
        if self.at_word("await") and self._starts_expression(self.la()):
            self.advance()
            self._unary()
            return AWAIT
        if self.at("("):
            mark = self.i
            try:
                self.advance()
                predefined = self._type()
                self.expect(")")
                # a parenthesized predefined type can only be a cast, so any
                # unary operand (including -5) follows; reference types need
                # an unambiguous operand start to beat the paren-expr reading
                if predefined or self._starts_cast_operand():
                    self._unary()
                    return OTHER
                raise CSharpSyntaxError("not a cast", self.cur.line, self.cur.col)
            except CSharpSyntaxError:
                self.i = mark
        return self._postfix()

    def _starts_expression(self, tok: Token) -> bool:
        if tok.kind in ("IDENT", "INT", "FLOAT", "CHAR", "STR"):
            return True
        if tok.kind == "KW" and (tok.text in LITERAL_KEYWORDS or tok.text in PREDEFINED_TYPES
                                 or tok.text in ("this", "base", "new", "typeof",
                                                 "default", "checked", "unchecked",
                                                 "delegate", "sizeof")):
            return True
        if tok.kind == "PUNCT" and tok.text in ("(", "!", "~"):
            return True
        return False

    def _starts_cast_operand(self) -> bool:
        tok = self.cur
        if tok.kind in ("IDENT", "INT", "FLOAT", "CHAR", "STR"):
            return True
        if tok.kind == "KW" and (tok.text in LITERAL_KEYWORDS or tok.text in PREDEFINED_TYPES
                                 or tok.text in ("this", "base", "new", "typeof", "default",
                                                 "checked", "unchecked", "delegate", "sizeof")):
            return True
        if tok.kind == "PUNCT" and tok.text in ("(", "!", "~"):
            return True
        return False

    def _postfix(self) -> str:
        kind, was_name = self._primary()
        while True:
            if self.at(".") or self.at("::"):
                if self.la().kind != "IDENT":
                    self.advance()
                    self.fail("identifier expected")
                self.advance()
                self.advance()
                # explicit generic method call: name<T, U>(...)
                if self.at("<"):
                    mark = self.i
                    try:
                        self._type_args_opt()
                        if not self.at("("):
                            raise CSharpSyntaxError("not a generic call",
                                                    self.cur.line, self.cur.col)
                    except CSharpSyntaxError:
                        self.i = mark
                if self.at("("):
                    self._arguments()
                    kind, was_name = CALL, False
                else:
                    kind, was_name = OTHER, True
                continue
            if self.at("["):
                self.advance()
                self._expression()
                while self.accept(","):
                    self._expression()
                self.expect("]")
                kind, was_name = OTHER, False
                continue
            if self.at("(") and was_name:
                self._arguments()
                kind, was_name = CALL, False
                continue
            if self.cur.kind == "PUNCT" and self.cur.text in ("++", "--"):
                self.advance()
                return INCDEC
            return kind

    def _primary(self) -> tuple[str, bool]:
        tok = self.cur
        if tok.kind in ("INT", "FLOAT", "CHAR", "STR"):
            self.advance()
            return OTHER, False
        if tok.kind == "KW" and tok.text in LITERAL_KEYWORDS:
            self.advance()
            return OTHER, False
        if tok.kind == "IDENT":
            self.advance()
            # generic name in expression position: Foo<Bar>(...) or typeof-ish use
            if self.at("<"):
                mark = self.i
                try:
                    self._type_args_opt()
                    if not self.at("("):
                        raise CSharpSyntaxError("not a generic call",
                                                self.cur.line, self.cur.col)
                except CSharpSyntaxError:
                    self.i = mark
            return OTHER, True
        if tok.kind == "KW" and tok.text in PREDEFINED_TYPES:
            self.advance()
            self.expect(".")
            self.expect_ident()
            return OTHER, True
        if self.at("("):
            self.advance()
            self._expression()
            self.expect(")")
            return OTHER, False
        if self.at("this"):
            self.advance()
            return OTHER, False
        if self.at("base"):
            self.advance()
            if self.at("["):
                return OTHER, True
            self.expect(".")
            self.expect_ident()
            return OTHER, True
        if self.at("new"):
            self.advance()
            return self._creator(), False
        if self.at("typeof") or self.at("sizeof"):
            self.advance()
            self.expect("(")
            self._type()
            self.expect(")")
            return OTHER, False
        if self.at("default"):
            self.advance()
            self.expect("(")
            self._type()
            self.expect(")")
            return OTHER, False
        if self.at("checked") or self.at("unchecked"):
            self.advance()
            self.expect("(")
            self._expression()
            self.expect(")")
            return OTHER, False
        if self.at("delegate"):
            self.advance()
            if self.at("("):
                self._formal_params()
            self._block()
            return OTHER, False
        self.fail("invalid expression term")
        raise AssertionError  # unreachable

    def _creator(self) -> str:
        if self.at("{"):  # anonymous object: new { A = 1, b.C }
            self.advance()
            while not self.at("}"):
                mark = self.i
                if self.at_ident() and self.la().kind == "PUNCT" and self.la().text == "=":
                    self.advance()
                    self.advance()
                    self._expression()
                else:
                    self.i = mark
                    self._expression()
                if not self.accept(","):
                    break
            self.expect("}")
            return NEW
        if self.at("["):  # implicitly typed array: new[] { ... }
            self.advance()
            self.expect("]")
            self._array_initializer()
            return NEW
        self._creator_type()
        if self.at("("):
            self._arguments()
            if self.at("{"):
                self._object_or_collection_init()
            return NEW
        if self.at("["):
            self.advance()
            if self.at("]") or self.at(","):
                while self.accept(","):
                    pass
                self.expect("]")
                while self.at("[") and self.la().text in ("]", ","):
                    self.advance()
                    while self.accept(","):
                        pass
                    self.expect("]")
                self._array_initializer()
                return NEW
            self._expression()
            while self.accept(","):
                self._expression()
            self.expect("]")
            while self.at("[") and self.la().text in ("]", ","):
                self.advance()
                while self.accept(","):
                    pass
                self.expect("]")
            if self.at("{"):
                self._array_initializer()
            return NEW
        if self.at("{"):
            self._object_or_collection_init()
            return NEW
        self.fail("'(', '[', or '{' expected")
        raise AssertionError  # unreachable

    def _creator_type(self) -> None:
        if self.cur.kind == "KW" and self.cur.text in PREDEFINED_TYPES:
            self.advance()
        else:
            self.expect_ident()
            self._type_args_opt()
            while self.at(".") and self.la().kind == "IDENT":
                self.advance()
                self.advance()
                self._type_args_opt()
        if self.at("?") and self._nullable_marker_ok():
            self.advance()

    def _object_or_collection_init(self) -> None:
        self.expect("{")
        while not self.at("}"):
            if self.at_ident() and self.la().kind == "PUNCT" and self.la().text == "=":
                self.advance()
                self.advance()
                if self.at("{"):
                    self._object_or_collection_init()
                else:
                    self._expression()
            elif self.at("{"):
                self.advance()
                while not self.at("}"):
                    self._expression()
                    if not self.accept(","):
                        break
                self.expect("}")
            else:
                self._expression()
            if not self.accept(","):
                break
        self.expect("}")

    def _arguments(self) -> None:
        self.expect("(")
        if self.accept(")"):
            return
        while True:
            if self.at_ident() and self.la().kind == "PUNCT" and self.la().text == ":":
                self.advance()
                self.advance()
            while self.cur.kind == "KW" and self.cur.text in ("ref", "out"):
                self.advance()
            self._expression()
            if not self.accept(","):
                break
        self.expect(")")


def check(text: str) -> list[str]:
    """Validate a script-style unit; returns at most one error string."""
    try:
        tokens = Lexer(
            text, KEYWORDS,
            verbatim_strings=True, at_identifiers=True,
            preprocessor_lines=True, extra_punct=True,
        ).tokens()
        parser = _Parser(tokens)
        parser.parse_unit()
    except LexError as exc:
        return [f"{exc.message} (line {exc.line}, column {exc.col})"]
    except CSharpSyntaxError as exc:
        return [f"{exc.message} (line {exc.line}, column {exc.col})"]
    except RecursionError:
        return ["expression nesting too deep"]
    return []
