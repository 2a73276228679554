"""Java-7-level syntax validator.

A strict recursive-descent recognizer for the compilation-unit grammar of
the pre-lambda Java era: package/import headers and type declarations only
at top level (no top-level statements or methods), generics with ``>>``
splitting, anonymous classes, try-with-resources and multi-catch, and the
statement-expression restriction ("not a statement" for things like
``x + y;``).

It validates syntax only: no symbol resolution, no type checking. A few
era-authentic constraints are enforced because the repair heuristics rely
on them (a bare method with no enclosing class must fail to parse); exotic
corners (unicode escapes outside literals, strictfp minutiae) are accepted
leniently and noted here rather than modeled.
"""

from __future__ import annotations

from snipcheck.frontends.cstlex import LexError, Lexer, Token

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null""".split()
)

PRIMITIVES = frozenset("boolean byte char short int long float double".split())
MODIFIERS = frozenset(
    "public protected private static final abstract native synchronized transient volatile strictfp".split()
)
LITERAL_KEYWORDS = frozenset(("true", "false", "null"))

# expression kind tags; statements may only be built from a subset
ASSIGN, CALL, NEW, INCDEC, OTHER = "assign", "call", "new", "incdec", "other"
STATEMENT_KINDS = frozenset((ASSIGN, CALL, NEW, INCDEC))

ASSIGN_OPS = frozenset("= += -= *= /= %= &= |= ^= <<=".split())


class JavaSyntaxError(Exception):
    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.i = 0

    # --- token plumbing -------------------------------------------------

    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def la(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def at(self, text: str) -> bool:
        tok = self.cur
        return tok.kind in ("PUNCT", "KW") and tok.text == text

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
        found = tok.text if tok.kind != "EOF" else "end of input"
        raise JavaSyntaxError(f"{message} before '{found}'" if tok.kind != "EOF"
                              else f"{message} at end of input", tok.line, tok.col)

    def adjacent(self, a: Token, b: Token) -> bool:
        return a.line == b.line and a.end_col == b.col

    # '>' tokens are lexed singly; measure a run of adjacent '>' and whether
    # an '=' is glued to its end, e.g. ['>','>','='] -> (2, True) for '>>='.
    def gt_run(self) -> tuple[int, bool]:
        if not self.at(">"):
            return 0, False
        count = 1
        while (count < 3 and self.la(count).text == ">"
               and self.adjacent(self.la(count - 1), self.la(count))):
            count += 1
        trailing_eq = (self.la(count).text == "="
                       and self.la(count).kind == "PUNCT"
                       and self.adjacent(self.la(count - 1), self.la(count)))
        return count, trailing_eq

    # --- compilation unit ------------------------------------------------

    def parse_compilation_unit(self) -> None:
        mark = self.i
        annotations_seen = self._annotations_opt()
        if self.at("package"):
            self.advance()
            self._qualified_name()
            self.expect(";")
        elif annotations_seen:
            self.i = mark  # annotations belonged to the first type declaration
        while self.at("import"):
            self.advance()
            self.accept("static")
            self.expect_ident()
            while self.accept("."):
                if self.accept("*"):
                    break
                self.expect_ident()
            self.expect(";")
        while self.cur.kind != "EOF":
            if self.accept(";"):
                continue
            self._type_declaration()

    def _type_declaration(self) -> None:
        self._modifiers_opt()
        if self.at("class"):
            self.advance()
            self._class_rest()
        elif self.at("interface"):
            self.advance()
            self._interface_rest()
        elif self.at("enum"):
            self.advance()
            self._enum_rest()
        elif self.at("@") and self.la().text == "interface":
            self.advance()
            self.advance()
            self._annotation_type_rest()
        else:
            self.fail("class, interface, or enum expected")

    def _modifiers_opt(self) -> None:
        while True:
            if self.cur.kind == "KW" and self.cur.text in MODIFIERS:
                self.advance()
            elif self.at("@") and self.la().text != "interface":
                self._annotation()
            else:
                return

    def _annotations_opt(self) -> bool:
        seen = False
        while self.at("@") and self.la().text != "interface":
            self._annotation()
            seen = True
        return seen

    def _annotation(self) -> None:
        self.expect("@")
        self._qualified_name()
        if self.accept("("):
            if self.accept(")"):
                return
            if self.at_ident() and self.la().text == "=" and self.la().kind == "PUNCT":
                while True:
                    self.expect_ident()
                    self.expect("=")
                    self._element_value()
                    if not self.accept(","):
                        break
            else:
                self._element_value()
            self.expect(")")

    def _element_value(self) -> None:
        if self.at("{"):
            self.advance()
            while not self.at("}"):
                self._element_value()
                if not self.accept(","):
                    break
            self.expect("}")
        elif self.at("@"):
            self._annotation()
        else:
            self._ternary()

    def _qualified_name(self) -> None:
        self.expect_ident()
        while self.at(".") and self.la().kind == "IDENT":
            self.advance()
            self.advance()

    # --- type declarations -------------------------------------------------

    def _class_rest(self) -> None:
        self.expect_ident()
        self._type_params_opt()
        if self.accept("extends"):
            self._type()
        if self.accept("implements"):
            self._type_list()
        self._class_body()

    def _interface_rest(self) -> None:
        self.expect_ident()
        self._type_params_opt()
        if self.accept("extends"):
            self._type_list()
        self._class_body()

    def _enum_rest(self) -> None:
        self.expect_ident()
        if self.accept("implements"):
            self._type_list()
        self.expect("{")
        while self.at_ident() or self.at("@"):
            self._annotations_opt()
            self.expect_ident()
            if self.at("("):
                self._arguments()
            if self.at("{"):
                self._class_body()
            if not self.accept(","):
                break
        if self.accept(";"):
            while not self.at("}") and self.cur.kind != "EOF":
                self._class_member()
        self.expect("}")

    def _annotation_type_rest(self) -> None:
        self.expect_ident()
        self.expect("{")
        while not self.at("}") and self.cur.kind != "EOF":
            self._class_member(annotation_decl=True)
        self.expect("}")

    def _type_list(self) -> None:
        self._type()
        while self.accept(","):
            self._type()

    def _type_params_opt(self) -> None:
        if not self.accept("<"):
            return
        while True:
            self.expect_ident()
            if self.accept("extends"):
                self._type()
                while self.accept("&"):
                    self._type()
            if not self.accept(","):
                break
        self._close_type_angle()

    def _class_body(self) -> None:
        self.expect("{")
        while not self.at("}") and self.cur.kind != "EOF":
            self._class_member()
        self.expect("}")

    def _class_member(self, annotation_decl: bool = False) -> None:
        if self.accept(";"):
            return
        if self.at("static") and self.la().text == "{":
            self.advance()
            self._block()
            return
        if self.at("{"):
            self._block()
            return
        self._modifiers_opt()
        if self.at("class"):
            self.advance()
            self._class_rest()
            return
        if self.at("interface"):
            self.advance()
            self._interface_rest()
            return
        if self.at("enum"):
            self.advance()
            self._enum_rest()
            return
        if self.at("@") and self.la().text == "interface":
            self.advance()
            self.advance()
            self._annotation_type_rest()
            return
        self._type_params_opt()
        if self.at("void"):
            self.advance()
            self.expect_ident()
            self._method_rest(annotation_decl)
            return
        if self.at_ident() and self.la().text == "(" and self.la().kind == "PUNCT":
            self.advance()  # constructor name
            self._formal_params()
            if self.accept("throws"):
                self._qualified_name_list()
            self._block()
            return
        self._type()
        self.expect_ident()
        if self.at("("):
            self._method_rest(annotation_decl)
        else:
            self._field_rest()

    def _method_rest(self, annotation_decl: bool = False) -> None:
        self._formal_params()
        while self.at("[") and self.la().text == "]":
            self.advance()
            self.advance()
        if self.accept("throws"):
            self._qualified_name_list()
        if annotation_decl and self.accept("default"):
            self._element_value()
            self.expect(";")
            return
        if self.at("{"):
            self._block()
        else:
            self.expect(";")

    def _field_rest(self) -> None:
        self._declarator_rest()
        while self.accept(","):
            self.expect_ident()
            self._declarator_rest()
        self.expect(";")

    def _declarator_rest(self) -> None:
        while self.at("[") and self.la().text == "]":
            self.advance()
            self.advance()
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

    def _formal_params(self) -> None:
        self.expect("(")
        if self.accept(")"):
            return
        while True:
            while self.at("final") or (self.at("@") and self.la().text != "interface"):
                if self.at("final"):
                    self.advance()
                else:
                    self._annotation()
            self._type()
            self.accept("...")
            self.expect_ident()
            while self.at("[") and self.la().text == "]":
                self.advance()
                self.advance()
            if not self.accept(","):
                break
        self.expect(")")

    def _qualified_name_list(self) -> None:
        self._qualified_name()
        while self.accept(","):
            self._qualified_name()

    # --- types ----------------------------------------------------------

    def _type(self) -> bool:
        """Parse a type; returns True when it is a primitive type."""
        primitive = False
        if self.cur.kind == "KW" and self.cur.text in PRIMITIVES:
            self.advance()
            primitive = True
        else:
            self.expect_ident()
            self._type_args_opt()
            while self.at(".") and self.la().kind == "IDENT":
                self.advance()
                self.advance()
                self._type_args_opt()
        while self.at("[") and self.la().text == "]":
            self.advance()
            self.advance()
        return primitive

    def _type_args_opt(self) -> None:
        if not self.at("<"):
            return
        self.advance()
        if self.at(">"):  # diamond
            self._close_type_angle()
            return
        while True:
            if self.accept("?"):
                if self.at("extends") or self.at("super"):
                    self.advance()
                    self._type()
            else:
                self._type()
            if not self.accept(","):
                break
        self._close_type_angle()

    def _close_type_angle(self) -> None:
        if not self.at(">"):
            self.fail("'>' expected")
        self.advance()

    # --- statements -------------------------------------------------------

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
        if text == "try":
            self.advance()
            self._try_rest()
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
        if text == "synchronized":
            self.advance()
            self._paren_expr()
            self._block()
            return
        if text == "return":
            self.advance()
            if not self.at(";"):
                self._expression()
            self.expect(";")
            return
        if text == "throw":
            self.advance()
            self._expression()
            self.expect(";")
            return
        if text in ("break", "continue"):
            self.advance()
            if self.at_ident():
                self.advance()
            self.expect(";")
            return
        if text == "assert":
            self.advance()
            self._expression()
            if self.accept(":"):
                self._expression()
            self.expect(";")
            return
        if text in ("class", "interface", "enum") or (
            text in ("final", "abstract", "static", "strictfp")
            and self.la().text in ("class", "interface", "enum")
        ):
            self._type_declaration()
            return
        if self.at_ident() and self.la().text == ":" and self.la().kind == "PUNCT":
            self.advance()
            self.advance()
            self._statement()
            return
        # local variable declaration (possibly with final/annotations) vs
        # expression statement: speculate on the declaration first.
        mark = self.i
        try:
            if self.at("final") or self.at("@"):
                while self.at("final") or self.at("@"):
                    if self.at("final"):
                        self.advance()
                    else:
                        self._annotation()
                self._type()
                self.expect_ident()
            else:
                self._type()
                self.expect_ident()
            self._field_rest()
            return
        except JavaSyntaxError:
            self.i = mark
        kind = self._expression()
        if kind not in STATEMENT_KINDS:
            self.fail("not a statement")
        self.expect(";")

    def _paren_expr(self) -> None:
        self.expect("(")
        self._expression()
        self.expect(")")

    def _for_control(self) -> None:
        self.expect("(")
        # enhanced for: [final] Type ident : expr
        mark = self.i
        try:
            while self.at("final") or self.at("@"):
                if self.at("final"):
                    self.advance()
                else:
                    self._annotation()
            self._type()
            self.expect_ident()
            if self.at(":"):
                self.advance()
                self._expression()
                self.expect(")")
                return
            raise JavaSyntaxError("not enhanced", self.cur.line, self.cur.col)
        except JavaSyntaxError:
            self.i = mark
        if not self.at(";"):
            mark = self.i
            try:
                while self.at("final") or self.at("@"):
                    if self.at("final"):
                        self.advance()
                    else:
                        self._annotation()
                self._type()
                self.expect_ident()
                self._declarator_rest()
                while self.accept(","):
                    self.expect_ident()
                    self._declarator_rest()
            except JavaSyntaxError:
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

    def _try_rest(self) -> None:
        has_resources = False
        if self.at("("):
            has_resources = True
            self.advance()
            while True:
                self.accept("final")
                self._type()
                self.expect_ident()
                self.expect("=")
                self._expression()
                if not self.accept(";"):
                    break
                if self.at(")"):
                    break
            self.expect(")")
        self._block()
        caught = False
        while self.at("catch"):
            caught = True
            self.advance()
            self.expect("(")
            self.accept("final")
            self._type()
            while self.accept("|"):
                self._type()
            self.expect_ident()
            self.expect(")")
            self._block()
        if self.accept("finally"):
            self._block()
        elif not caught and not has_resources:
            self.fail("'catch' or 'finally' expected")

    # --- expressions -----------------------------------------------------

    def _expression(self) -> str:
        kind = self._ternary()
        if self.cur.kind == "PUNCT" and self.cur.text in ASSIGN_OPS:
            self.advance()
            self._expression()
            return ASSIGN
        run, trailing_eq = self.gt_run()
        if run in (2, 3) and trailing_eq:
            for _ in range(run + 1):
                self.advance()
            self._expression()
            return ASSIGN
        return kind

    def _ternary(self) -> str:
        kind = self._binary(0)
        if self.accept("?"):
            self._expression()
            self.expect(":")
            self._ternary()
            return OTHER
        return kind

    # binary precedence levels, loosest first
    _LEVELS: list[frozenset[str]] = [
        frozenset(("||",)),
        frozenset(("&&",)),
        frozenset(("|",)),
        frozenset(("^",)),
        frozenset(("&",)),
        frozenset(("==", "!=")),
        frozenset(("<", "<=", ">", ">=", "instanceof")),
        frozenset(("<<", ">>", ">>>")),
        frozenset(("+", "-")),
        frozenset(("*", "/", "%")),
    ]

    def _binary(self, level: int) -> str:
        if level >= len(self._LEVELS):
            return self._unary()
        ops = self._LEVELS[level]
        kind = self._binary(level + 1)
        while True:
            if "instanceof" in ops and self.at("instanceof"):
                self.advance()
                self._type()
                kind = OTHER
                continue
            if ">>" in ops:
                run, trailing_eq = self.gt_run()
                if run in (2, 3) and not trailing_eq:
                    for _ in range(run):
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
                return kind  # part of a shift or shift-assign; not ours
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
        if self.at("("):
            mark = self.i
            try:
                self.advance()
                primitive = self._type()
                self.expect(")")
                if primitive or self._starts_cast_operand(reference=not primitive):
                    self._unary()
                    return OTHER
                raise JavaSyntaxError("not a cast", self.cur.line, self.cur.col)
            except JavaSyntaxError:
                self.i = mark
        return self._postfix()

    def _starts_cast_operand(self, reference: bool) -> bool:
        tok = self.cur
        if tok.kind in ("IDENT", "INT", "FLOAT", "CHAR", "STR"):
            return True
        if tok.kind == "KW" and tok.text in ("this", "super", "new") | LITERAL_KEYWORDS | PRIMITIVES:
            return True
        if tok.kind == "PUNCT" and tok.text in ("(", "!", "~"):
            return True
        return False

    def _postfix(self) -> str:
        kind, was_name = self._primary()
        while True:
            if self.at("."):
                nxt = self.la()
                if nxt.kind == "IDENT":
                    self.advance()
                    self.advance()
                    if self.at("("):
                        self._arguments()
                        kind, was_name = CALL, False
                    else:
                        kind, was_name = OTHER, True
                    continue
                if nxt.text == "class":
                    self.advance()
                    self.advance()
                    kind, was_name = OTHER, False
                    continue
                if nxt.text == "this":
                    self.advance()
                    self.advance()
                    kind, was_name = OTHER, False
                    continue
                if nxt.text == "new":
                    self.advance()
                    self.advance()
                    kind = self._creator()
                    was_name = False
                    continue
                if nxt.text == "super":
                    self.advance()
                    self.advance()
                    self.expect(".")
                    self.expect_ident()
                    if self.at("("):
                        self._arguments()
                        kind = CALL
                    else:
                        kind = OTHER
                    was_name = False
                    continue
                if nxt.text == "<":
                    self.advance()  # explicit generic method invocation
                    self._type_args_opt()
                    self.expect_ident()
                    self._arguments()
                    kind, was_name = CALL, False
                    continue
                self.fail("identifier expected")
            if self.at("[") and was_name and self.la().text == "]":
                while self.at("[") and self.la().text == "]":
                    self.advance()
                    self.advance()
                self.expect(".")
                self.expect("class")
                kind, was_name = OTHER, False
                continue
            if self.at("["):
                self.advance()
                self._expression()
                self.expect("]")
                kind, was_name = OTHER, True  # array element is assignable/callable-ish
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
            return OTHER, True
        if self.at("("):
            self.advance()
            self._expression()
            self.expect(")")
            return OTHER, False
        if self.at("this"):
            self.advance()
            if self.at("("):
                self._arguments()
                return CALL, False
            return OTHER, False
        if self.at("super"):
            self.advance()
            if self.at("("):
                self._arguments()
                return CALL, False
            self.expect(".")
            self.expect_ident()
            if self.at("("):
                self._arguments()
                return CALL, False
            return OTHER, True
        if self.at("new"):
            self.advance()
            return self._creator(), False
        if tok.kind == "KW" and tok.text in PRIMITIVES:
            self.advance()
            while self.at("[") and self.la().text == "]":
                self.advance()
                self.advance()
            self.expect(".")
            self.expect("class")
            return OTHER, False
        if self.at("void"):
            self.advance()
            self.expect(".")
            self.expect("class")
            return OTHER, False
        self.fail("illegal start of expression")
        raise AssertionError  # unreachable

    def _creator(self) -> str:
        if self.at("<"):
            self.advance()
            self._type_args_opt()
        if self.cur.kind == "KW" and self.cur.text in PRIMITIVES:
            self.advance()
            return self._array_creator_rest(require_dims=True)
        self.expect_ident()
        self._type_args_opt()
        while self.at(".") and self.la().kind == "IDENT":
            self.advance()
            self.advance()
            self._type_args_opt()
        if self.at("["):
            return self._array_creator_rest(require_dims=True)
        self._arguments()
        if self.at("{"):
            self._class_body()  # anonymous class
        return NEW

    def _array_creator_rest(self, require_dims: bool) -> str:
        if not self.at("[") and require_dims:
            self.fail("'[' expected")
        saw_empty = False
        saw_sized = False
        while self.at("["):
            self.advance()
            if self.accept("]"):
                saw_empty = True
            else:
                if saw_empty:
                    self.fail("']' expected")
                self._expression()
                self.expect("]")
                saw_sized = True
        if saw_empty and not saw_sized:
            if not self.at("{"):
                self.fail("array initializer expected")
            self._array_initializer()
        elif self.at("{"):
            self.fail("illegal array initializer")
        return NEW

    def _arguments(self) -> None:
        self.expect("(")
        if self.accept(")"):
            return
        while True:
            self._expression()
            if not self.accept(","):
                break
        self.expect(")")


def check(text: str) -> list[str]:
    """Validate a compilation unit; returns at most one error string."""
    try:
        tokens = Lexer(text, KEYWORDS).tokens()
        parser = _Parser(tokens)
        parser.parse_compilation_unit()
    except LexError as exc:
        return [f"{exc.message} (line {exc.line}, column {exc.col})"]
    except JavaSyntaxError as exc:
        return [f"{exc.message} (line {exc.line}, column {exc.col})"]
    except RecursionError:
        return ["expression nesting too deep"]
    return []
