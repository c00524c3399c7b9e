"""Reading and writing congruences in the usual notation.

    congruence := sum rel integer "(" "mod" integer ")"
    sum        := term (("+"|"-") term)*
    term       := [integer ["*"]] identifier | integer
    rel        := "≡" | "="

The first term may carry a leading sign, and so may the right-hand side and
the modulus. Constant terms on the left are moved to the right. Variables are
numbered in order of first appearance over the whole input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .congruence import LinearCongruence
from .errors import ParseError, UsageError
from .system import CongruenceSystem

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(≡|[-+*()=]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op" or "end"
    text: str
    column: int


@dataclass(frozen=True)
class ParsedInput:
    variables: tuple[str, ...]
    system: CongruenceSystem
    source_spans: tuple[tuple[int, int, int], ...]  # (line, first column, last column)


class ParseErrors(UsageError):
    """Every syntax error found in a multi-line input."""

    def __init__(self, errors: Sequence[ParseError]):
        self.errors = list(errors)
        super().__init__("\n".join(str(e) for e in self.errors))


def tokenize(text: str, line: int = 1) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col, text)
        num, ident, op = match.groups()
        start = match.start(match.lastindex) + 1
        if num is not None:
            tokens.append(Token("int", num, start))
        elif ident is not None:
            tokens.append(Token("ident", ident, start))
        else:
            tokens.append(Token("op", op, start))
        pos = match.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _LineParser:
    def __init__(self, text: str, line: int):
        self.text = text
        self.line = line
        self.tokens = tokenize(text, line)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        tok = self.peek()
        found = "end of line" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"expected {expected}, found {found}", self.line, tok.column, self.text)

    def expect_op(self, *ops: str) -> Token:
        tok = self.peek()
        if tok.kind == "op" and tok.text in ops:
            return self.advance()
        self.fail(" or ".join(repr(o) for o in ops))

    def signed_integer(self) -> int:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            sign = -1 if tok.text == "-" else 1
        if self.peek().kind != "int":
            self.fail("an integer")
        return sign * int(self.advance().text)

    def term(self, sign: int, terms: list, constant: list) -> None:
        tok = self.peek()
        if tok.kind == "int":
            value = int(self.advance().text)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "*":
                self.advance()
                if self.peek().kind != "ident":
                    self.fail("a variable name")
            if self.peek().kind == "ident":
                terms.append((self.advance().text, sign * value))
            else:
                constant[0] += sign * value
        elif tok.kind == "ident":
            if tok.text == "mod":
                self.fail("a term")
            terms.append((self.advance().text, sign))
        else:
            self.fail("a term")

    def parse(self):
        terms: list[tuple[str, int]] = []
        constant = [0]
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            sign = -1 if tok.text == "-" else 1
        self.term(sign, terms, constant)
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                self.term(-1 if tok.text == "-" else 1, terms, constant)
            else:
                break
        self.expect_op("≡", "=")
        rhs = self.signed_integer()
        self.expect_op("(")
        tok = self.peek()
        if not (tok.kind == "ident" and tok.text == "mod"):
            self.fail("'mod'")
        self.advance()
        modulus = self.signed_integer()
        self.expect_op(")")
        if self.peek().kind != "end":
            self.fail("end of line")
        if not terms:
            raise ParseError("no variables in congruence", self.line, 1, self.text)
        return terms, rhs - constant[0], modulus


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_system(text: str) -> ParsedInput:
    parsed, spans, errors = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        try:
            parsed.append(_LineParser(body, lineno).parse())
        except ParseError as e:
            errors.append(e)
            continue
        first = len(body) - len(body.lstrip()) + 1
        spans.append((lineno, first, len(body.rstrip())))
    if errors:
        raise ParseErrors(errors)
    if not parsed:
        raise ParseError("no congruence found", 1, 1, text)

    variables: list[str] = []
    for terms, _, _ in parsed:
        for name, _ in terms:
            if name not in variables:
                variables.append(name)
    rows = []
    for terms, rhs, modulus in parsed:
        coeffs = dict.fromkeys(variables, 0)
        for name, a in terms:
            coeffs[name] += a
        rows.append(LinearCongruence(tuple(coeffs.values()), rhs, modulus))
    return ParsedInput(tuple(variables), CongruenceSystem(tuple(variables), tuple(rows)), tuple(spans))


def parse_congruence(text: str) -> tuple[LinearCongruence, tuple[str, ...]]:
    parsed = parse_system(text)
    if len(parsed.system.rows) != 1:
        raise UsageError(f"expected one congruence, found {len(parsed.system.rows)}")
    return parsed.system.rows[0], parsed.variables


def render_congruence(c: LinearCongruence, names: Sequence[str], keep_zeros: bool = False) -> str:
    parts = []
    for name, a in zip(names, c.coeffs):
        if a == 0 and not keep_zeros:
            continue
        mag = abs(a)
        body = name if mag == 1 else f"{mag}{name}"
        if not parts:
            parts.append(f"-{body}" if a < 0 else body)
        else:
            parts.append(f"- {body}" if a < 0 else f"+ {body}")
    if not parts:
        parts.append(f"0{names[0]}")
    return f"{' '.join(parts)} = {c.rhs} (mod {c.modulus})"


def render_system(sys: CongruenceSystem) -> str:
    # Zero terms are written out on the first row so variable order survives a re-parse.
    lines = [
        render_congruence(row, sys.variables, keep_zeros=(i == 0))
        for i, row in enumerate(sys.rows)
    ]
    return "\n".join(lines) + "\n"
