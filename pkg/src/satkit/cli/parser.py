"""Tokenizer and recursive-descent parser for satkit scripts.

Grammar (statements end with ``;``, ``#`` starts a comment)::

    ring NAME = QQ[v1,...,vn] [/ (p1,...,pk)];
    map NAME : SRC -> TGT = [img1,...,imgm];
    gb RING;                  member RING (f);      radical-member RING (f);
    kernel MAP;               classify MAP;         sat-member MAP (f);
    scan-saturation MAP [degree N];                 seminormal MAP [degree N];
    regulous RING via MAP (f);                      iso MAP;

Polynomials: integer or ``p/q`` literals, variables, ``+ - * ^`` and
parentheses; ``^`` binds tightest, then ``*``, then ``+``/``-``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from satkit.poly import MonomialOrder, Polynomial, PolyRing

RING_COMMANDS = ("gb", "member", "radical-member")
MAP_COMMANDS = ("kernel", "classify", "sat-member", "scan-saturation", "seminormal", "iso")
COMMANDS = RING_COMMANDS + MAP_COMMANDS + ("regulous",)
POLY_COMMANDS = ("member", "radical-member", "sat-member", "regulous")
DEGREE_COMMANDS = ("scan-saturation", "seminormal")


class ScriptError(Exception):
    exit_code = 2

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.message}"


class ScriptSyntaxError(ScriptError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        if expected:
            message = f"{message}; expected {' or '.join(expected)}"
        super().__init__(message, line, column)
        self.expected = expected


class ScriptNameError(ScriptError):
    pass


@dataclass(frozen=True)
class Location:
    line: int
    column: int


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, SYM, EOF
    text: str
    line: int
    column: int
    end: int  # absolute offset just past the token


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\f\v]+)|(?P<nl>\n)|(?P<comment>\#[^\n]*)"
    r"|(?P<NAME>[a-zA-Z][a-zA-Z0-9_]*)|(?P<INT>[0-9]+)"
    r"|(?P<SYM>->|[;=\[\](),/:+\-*^])"
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        mt = _TOKEN_RE.match(text, pos)
        if mt is None:
            raise ScriptSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = mt.lastgroup
        if kind == "nl":
            line, line_start = line + 1, mt.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, mt.group(), line, mt.start() - line_start + 1, mt.end()))
        pos = mt.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1, pos))
    return tokens


@dataclass(frozen=True)
class RingDecl:
    name: str
    variables: tuple[str, ...]
    relations: tuple[Polynomial, ...]
    loc: Location = field(default=Location(0, 0), compare=False)


@dataclass(frozen=True)
class MapDecl:
    name: str
    source: str
    target: str
    images: tuple[Polynomial, ...]
    loc: Location = field(default=Location(0, 0), compare=False)


@dataclass(frozen=True)
class Command:
    verb: str
    target: str
    poly: Polynomial | None = None
    via: str | None = None
    degree: int | None = None
    loc: Location = field(default=Location(0, 0), compare=False)


Statement = Union[RingDecl, MapDecl, Command]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...] = ()

    def __len__(self):
        return len(self.statements)

    def __iter__(self):
        return iter(self.statements)


class _Parser:
    def __init__(self, text: str, order: MonomialOrder):
        self.tokens = tokenize(text)
        self.i = 0
        self.order = order
        self.rings: dict[str, PolyRing] = {}
        self.maps: dict[str, tuple[str, str]] = {}

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "EOF":
            self.i += 1
        return t

    def error(self, message: str, *expected: str, tok: Token | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise ScriptSyntaxError(f"{message} (found {found})", tok.line, tok.column, expected)

    def expect(self, text: str, context: str = "") -> Token:
        if self.tok.text != text or self.tok.kind not in ("SYM", "NAME"):
            self.error(f"unexpected token{context}", repr(text))
        return self.advance()

    def expect_name(self, what: str = "a name") -> Token:
        if self.tok.kind != "NAME":
            self.error("unexpected token", what)
        return self.advance()

    def expect_int(self) -> int:
        if self.tok.kind != "INT":
            self.error("unexpected token", "an integer")
        return int(self.advance().text)

    def command_word(self) -> Token:
        """A NAME possibly glued to further NAMEs with hyphens (``sat-member``)."""
        first = self.expect_name("a statement keyword")
        text, end = first.text, first.end
        while (
            self.tok.text == "-"
            and self.tok.end == end + 1
            and self.tokens[self.i + 1].kind == "NAME"
            and self.tokens[self.i + 1].end == end + 1 + len(self.tokens[self.i + 1].text)
        ):
            self.advance()
            nxt = self.advance()
            text += "-" + nxt.text
            end = nxt.end
        return Token("NAME", text, first.line, first.column, end)

    # names

    def declare(self, tok: Token):
        if tok.text in self.rings or tok.text in self.maps:
            raise ScriptNameError(f"{tok.text!r} is already declared", tok.line, tok.column)

    def ring_ref(self) -> tuple[str, PolyRing]:
        tok = self.expect_name("a ring name")
        if tok.text not in self.rings:
            what = "a map, not a ring" if tok.text in self.maps else "undeclared"
            raise ScriptNameError(f"{tok.text!r} is {what}", tok.line, tok.column)
        return tok.text, self.rings[tok.text]

    def map_ref(self) -> tuple[str, str, str]:
        tok = self.expect_name("a map name")
        if tok.text not in self.maps:
            what = "a ring, not a map" if tok.text in self.rings else "undeclared"
            raise ScriptNameError(f"{tok.text!r} is {what}", tok.line, tok.column)
        return (tok.text,) + self.maps[tok.text]

    # statements

    def script(self) -> Script:
        out = []
        while self.tok.kind != "EOF":
            out.append(self.statement())
        return Script(tuple(out))

    def statement(self) -> Statement:
        word = self.command_word()
        loc = Location(word.line, word.column)
        if word.text == "ring":
            stmt = self.ring_decl(loc)
        elif word.text == "map":
            stmt = self.map_decl(loc)
        elif word.text in COMMANDS:
            stmt = self.command(word.text, loc)
        else:
            self.error("unknown statement", "'ring'", "'map'", "a command", tok=word)
        self.expect(";", " at end of statement")
        return stmt

    def ring_decl(self, loc: Location) -> RingDecl:
        name = self.expect_name("a ring name")
        self.declare(name)
        self.expect("=")
        field_tok = self.expect_name("'QQ'")
        if field_tok.text != "QQ":
            self.error("only QQ is supported as coefficient field", "'QQ'", tok=field_tok)
        self.expect("[")
        variables = []
        if self.tok.text != "]":
            while True:
                v = self.expect_name("a variable name")
                if v.text in variables:
                    raise ScriptNameError(f"variable {v.text!r} repeated", v.line, v.column)
                variables.append(v.text)
                if self.tok.text != ",":
                    break
                self.advance()
        self.expect("]")
        ring = PolyRing(tuple(variables), self.order)
        relations: list[Polynomial] = []
        if self.tok.text == "/":
            self.advance()
            relations = self.poly_list(ring, "(", ")")
        self.rings[name.text] = ring
        return RingDecl(name.text, tuple(variables), tuple(relations), loc)

    def map_decl(self, loc: Location) -> MapDecl:
        name = self.expect_name("a map name")
        self.declare(name)
        self.expect(":")
        src, src_ring = self.ring_ref()
        self.expect("->")
        tgt, tgt_ring = self.ring_ref()
        self.expect("=")
        start = self.tok
        images = self.poly_list(tgt_ring, "[", "]")
        if len(images) != src_ring.nvars:
            raise ScriptSyntaxError(
                f"map {name.text} needs {src_ring.nvars} images (one per variable of {src}), got {len(images)}",
                start.line,
                start.column,
            )
        self.maps[name.text] = (src, tgt)
        return MapDecl(name.text, src, tgt, tuple(images), loc)

    def command(self, verb: str, loc: Location) -> Command:
        via = poly = degree = None
        if verb in RING_COMMANDS or verb == "regulous":
            target, ring = self.ring_ref()
            if verb == "regulous":
                kw = self.expect_name("'via'")
                if kw.text != "via":
                    self.error("unexpected token", "'via'", tok=kw)
                via, src, tgt = self.map_ref()
                if src != target:
                    raise ScriptNameError(f"map {via!r} does not start at ring {target!r}", loc.line, loc.column)
                ring = self.rings[tgt]
        else:
            target, _, tgt = self.map_ref()
            ring = self.rings[tgt]
        if verb in POLY_COMMANDS:
            self.expect("(")
            poly = self.poly(ring)
            self.expect(")")
        if verb in DEGREE_COMMANDS and self.tok.text == "degree" and self.tok.kind == "NAME":
            self.advance()
            degree = self.expect_int()
        return Command(verb, target, poly, via, degree, loc)

    # polynomials

    def poly_list(self, ring: PolyRing, open_: str, close: str) -> list[Polynomial]:
        opener = self.expect(open_)
        out = []
        if self.tok.text != close:
            while True:
                out.append(self.poly(ring))
                if self.tok.text == ",":
                    self.advance()
                    continue
                if self.tok.text != close:
                    self.error(
                        f"unclosed {open_!r} opened at line {opener.line}, column {opener.column}",
                        "','",
                        repr(close),
                    )
                break
        self.advance()
        return out

    def poly(self, ring: PolyRing) -> Polynomial:
        acc = self.term(ring)
        while self.tok.text in ("+", "-") and self.tok.kind == "SYM":
            op = self.advance().text
            rhs = self.term(ring)
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self, ring: PolyRing) -> Polynomial:
        acc = self.unary(ring)
        while self.tok.text == "*":
            self.advance()
            acc = acc * self.unary(ring)
        return acc

    def unary(self, ring: PolyRing) -> Polynomial:
        if self.tok.text == "-":
            self.advance()
            return -self.unary(ring)
        if self.tok.text == "+":
            self.advance()
            return self.unary(ring)
        return self.power(ring)

    def power(self, ring: PolyRing) -> Polynomial:
        base = self.atom(ring)
        if self.tok.text == "^":
            self.advance()
            return base ** self.expect_int()
        return base

    def atom(self, ring: PolyRing) -> Polynomial:
        tok = self.tok
        if tok.kind == "INT":
            self.advance()
            value = Fraction(int(tok.text))
            if self.tok.text == "/" and self.tokens[self.i + 1].kind == "INT":
                self.advance()
                den = self.advance()
                if int(den.text) == 0:
                    raise ScriptSyntaxError("zero denominator", den.line, den.column)
                value /= int(den.text)
            return ring.constant(value)
        if tok.kind == "NAME":
            self.advance()
            if tok.text not in ring.variables:
                raise ScriptNameError(f"unknown variable {tok.text!r} in {ring}", tok.line, tok.column)
            return ring.var(tok.text)
        if tok.text == "(":
            self.advance()
            inner = self.poly(ring)
            if self.tok.text != ")":
                self.error(f"unclosed '(' opened at line {tok.line}, column {tok.column}", "')'")
            self.advance()
            return inner
        self.error("unexpected token in polynomial", "a number", "a variable", "'('")


def parse_script(text: str, order: MonomialOrder | str = "grevlex") -> Script:
    if isinstance(order, str):
        order = MonomialOrder(order)
    return _Parser(text, order).script()


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    p = _Parser(text, ring.order)
    result = p.poly(ring)
    if p.tok.kind != "EOF":
        p.error("trailing input after polynomial", "an operator", "end of input")
    return result


def format_statement(stmt: Statement) -> str:
    """Source text for a statement; parsing it back yields an equal statement."""
    if isinstance(stmt, RingDecl):
        head = f"ring {stmt.name} = QQ[{','.join(stmt.variables)}]"
        if stmt.relations:
            head += " / (" + ", ".join(str(r) for r in stmt.relations) + ")"
        return head + ";"
    if isinstance(stmt, MapDecl):
        return f"map {stmt.name} : {stmt.source} -> {stmt.target} = [{', '.join(str(i) for i in stmt.images)}];"
    parts = [stmt.verb, stmt.target]
    if stmt.via is not None:
        parts += ["via", stmt.via]
    if stmt.poly is not None:
        parts.append(f"({stmt.poly})")
    if stmt.degree is not None:
        parts += ["degree", str(stmt.degree)]
    return " ".join(parts) + ";"
