"""Shared lexer for the C-family syntax validators (Java, C#).

One deliberate quirk: ``>`` is always emitted as a single token so nested
generic closers like ``List<List<String>>`` stay splittable; the parsers
glue adjacent ``>`` runs back into shift/relational operators. ``<`` has no
such ambiguity (nested opens are never adjacent) and munches greedily.
"""

from __future__ import annotations

from dataclasses import dataclass


class LexError(Exception):
    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT KW INT FLOAT CHAR STR PUNCT EOF
    text: str
    line: int
    col: int

    @property
    def end_col(self) -> int:
        return self.col + len(self.text)


_COMMON_PUNCT = [
    "<<=", "...",
    "==", "!=", "<=", "<<", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "{", "}", "(", ")", "[", "]", ";", ",", ".", "?", ":",
    "=", "<", ">", "!", "~", "+", "-", "*", "/", "%", "&", "|", "^", "@",
]
_CSHARP_EXTRA = ["=>", "??", "::"]

_ESCAPES = set("btnfr\"'\\0au v x".replace(" ", ""))  # superset across both languages


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


class Lexer:
    def __init__(self, text: str, keywords: frozenset[str], *,
                 verbatim_strings: bool = False,
                 at_identifiers: bool = False,
                 preprocessor_lines: bool = False,
                 extra_punct: bool = False) -> None:
        self.text = text
        self.keywords = keywords
        self.verbatim_strings = verbatim_strings
        self.at_identifiers = at_identifiers
        self.preprocessor_lines = preprocessor_lines
        punct = list(_COMMON_PUNCT) + (list(_CSHARP_EXTRA) if extra_punct else [])
        self.punct = sorted(punct, key=len, reverse=True)
        self.pos = 0
        self.line = 1
        self.col = 1
        self.line_start = True  # only whitespace seen on this line so far

    def error(self, message: str) -> LexError:
        return LexError(message, self.line, self.col)

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
                self.line_start = True
            else:
                self.col += 1
            self.pos += 1

    def _peek(self, offset: int = 0) -> str:
        index = self.pos + offset
        return self.text[index] if index < len(self.text) else ""

    def tokens(self) -> list[Token]:
        out: list[Token] = []
        while True:
            tok = self._next()
            out.append(tok)
            if tok.kind == "EOF":
                return out

    def _skip_trivia(self) -> None:
        while self.pos < len(self.text):
            ch = self._peek()
            if ch in " \t\r\n\f\x0b":
                self._advance()
            elif ch == "/" and self._peek(1) == "/":
                while self.pos < len(self.text) and self._peek() != "\n":
                    self._advance()
            elif ch == "/" and self._peek(1) == "*":
                start_line, start_col = self.line, self.col
                self._advance(2)
                while self.pos < len(self.text):
                    if self._peek() == "*" and self._peek(1) == "/":
                        self._advance(2)
                        break
                    self._advance()
                else:
                    raise LexError("unterminated block comment", start_line, start_col)
            elif ch == "#" and self.preprocessor_lines and self.line_start:
                while self.pos < len(self.text) and self._peek() != "\n":
                    self._advance()
            else:
                return

    def _next(self) -> Token:
        self._skip_trivia()
        if self.pos >= len(self.text):
            return Token("EOF", "", self.line, self.col)
        line, col = self.line, self.col
        ch = self._peek()
        self.line_start = False

        if ch == "@" and self.verbatim_strings and self._peek(1) == '"':
            return self._verbatim_string(line, col)
        if ch == "@" and self.at_identifiers and _is_ident_start(self._peek(1)):
            self._advance()
            ident = self._ident_text()
            return Token("IDENT", "@" + ident, line, col)
        if _is_ident_start(ch):
            ident = self._ident_text()
            kind = "KW" if ident in self.keywords else "IDENT"
            return Token(kind, ident, line, col)
        if ch.isdigit() or (ch == "." and self._peek(1).isdigit()):
            return self._number(line, col)
        if ch == '"':
            return self._string(line, col)
        if ch == "'":
            return self._char(line, col)
        for punct in self.punct:
            if self.text.startswith(punct, self.pos):
                if punct.startswith(">") and len(punct) > 1:
                    continue  # '>' stays single; parsers glue runs
                self._advance(len(punct))
                return Token("PUNCT", punct, line, col)
        raise LexError(f"illegal character {ch!r}", line, col)

    def _ident_text(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and _is_ident_part(self._peek()):
            self._advance()
        return self.text[start:self.pos]

    def _number(self, line: int, col: int) -> Token:
        start = self.pos
        kind = "INT"
        if self._peek() == "0" and self._peek(1) in "xX":
            self._advance(2)
            if not (self._peek().isdigit() or self._peek().lower() in "abcdef"):
                raise LexError("malformed hex literal", line, col)
            while self._peek().isdigit() or self._peek().lower() in "abcdef" or self._peek() == "_":
                self._advance()
        elif self._peek() == "0" and self._peek(1) in "bB" and self._peek(2) in "01":
            self._advance(2)
            while self._peek() in "01_":
                self._advance()
        else:
            while self._peek().isdigit() or self._peek() == "_":
                self._advance()
            if self._peek() == "." and (self._peek(1).isdigit() or not _is_ident_start(self._peek(1)) and self._peek(1) != "."):
                kind = "FLOAT"
                self._advance()
                while self._peek().isdigit() or self._peek() == "_":
                    self._advance()
            if self._peek() in "eE" and (self._peek(1).isdigit() or self._peek(1) in "+-" and self._peek(2).isdigit()):
                kind = "FLOAT"
                self._advance()
                if self._peek() in "+-":
                    self._advance()
                while self._peek().isdigit():
                    self._advance()
        while self._peek().lower() in "fdlum":
            if self._peek().lower() in "fdm":
                kind = "FLOAT"
            self._advance()
        return Token(kind, self.text[start:self.pos], line, col)

    def _escape(self) -> None:
        self._advance()  # backslash
        esc = self._peek()
        if esc == "u":
            while self._peek() == "u":
                self._advance()
            for _ in range(4):
                if not (self._peek().isdigit() or self._peek().lower() in "abcdef"):
                    raise self.error("malformed unicode escape")
                self._advance()
        elif esc == "x":
            self._advance()
            digits = 0
            while self._peek().isdigit() or self._peek().lower() in "abcdef":
                self._advance()
                digits += 1
            if digits == 0:
                raise self.error("malformed hex escape")
        elif esc in "01234567":
            count = 0
            while self._peek() in "01234567" and count < 3:
                self._advance()
                count += 1
        elif esc in _ESCAPES:
            self._advance()
        else:
            raise self.error(f"illegal escape character {esc!r}")

    def _string(self, line: int, col: int) -> Token:
        start = self.pos
        self._advance()
        while True:
            ch = self._peek()
            if ch == "" or ch == "\n":
                raise LexError("unterminated string literal", line, col)
            if ch == "\\":
                self._escape()
            elif ch == '"':
                self._advance()
                return Token("STR", self.text[start:self.pos], line, col)
            else:
                self._advance()

    def _verbatim_string(self, line: int, col: int) -> Token:
        start = self.pos
        self._advance(2)  # @"
        while True:
            ch = self._peek()
            if ch == "":
                raise LexError("unterminated verbatim string literal", line, col)
            if ch == '"':
                if self._peek(1) == '"':
                    self._advance(2)
                    continue
                self._advance()
                return Token("STR", self.text[start:self.pos], line, col)
            self._advance()

    def _char(self, line: int, col: int) -> Token:
        start = self.pos
        self._advance()
        ch = self._peek()
        if ch == "" or ch == "\n":
            raise LexError("unterminated character literal", line, col)
        if ch == "'":
            raise LexError("empty character literal", line, col)
        if ch == "\\":
            self._escape()
        else:
            self._advance()
        if self._peek() != "'":
            raise LexError("invalid character literal", line, col)
        self._advance()
        return Token("CHAR", self.text[start:self.pos], line, col)
