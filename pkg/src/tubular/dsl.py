"""A small text format for tubular presentations, with a parser and printer.

Two forms are accepted:

    group NAME {
      vertex V, W;
      edge b : V(0,1) -> W(1,1);
      edge c : V(0,1) -> V(2,1);
    }

    gpq p=[0,0] q=[1,2]

Whitespace is insignificant, `#` starts a comment to end of line, and the
semicolon before `}` is optional.  Errors carry 1-based line/column positions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Edge, GpqParams, IntVec2, TubularPresentation


class DslError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "int", "punct", "eof"
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""(?P<ws>[ \t\r\n]+)
      | (?P<comment>\#[^\n]*)
      | (?P<int>-?\d+)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_.-]*)
      | (?P<punct>->|[{}();:,=\[\]])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise DslError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        col = pos - line_start + 1
        kind = m.lastgroup
        raw = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, raw, line, col))
        for i, ch in enumerate(raw):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise DslError(message, tok.line, tok.col)

    def expect(self, text: str) -> Token:
        t = self.next()
        if t.text != text:
            self.fail(f"expected {text!r}, got {t.text or 'end of input'!r}", t)
        return t

    def ident(self, what: str) -> Token:
        t = self.next()
        if t.kind != "ident":
            self.fail(f"expected {what}, got {t.text or 'end of input'!r}", t)
        return t

    def integer(self) -> int:
        t = self.next()
        if t.kind != "int":
            self.fail(f"expected integer, got {t.text or 'end of input'!r}", t)
        return int(t.text)

    def parse(self) -> TubularPresentation | GpqParams:
        head = self.peek()
        if head.text == "group":
            out = self.parse_group()
        elif head.text == "gpq":
            out = self.parse_gpq()
        else:
            self.fail("expected 'group' or 'gpq'")
        tail = self.next()
        if tail.kind != "eof":
            self.fail(f"unexpected trailing input {tail.text!r}", tail)
        return out

    def parse_group(self) -> TubularPresentation:
        self.expect("group")
        name = self.ident("group name").text
        self.expect("{")
        self.expect("vertex")
        vertices = [self.ident("vertex id").text]
        while self.peek().text == ",":
            self.next()
            vertices.append(self.ident("vertex id").text)
        self.expect(";")
        vset = set(vertices)
        if len(vset) != len(vertices):
            self.fail("duplicate vertex id")
        edges: list[Edge] = []
        seen_labels: set[str] = set()
        while self.peek().text == "edge":
            self.next()
            label_tok = self.ident("edge label")
            if label_tok.text in seen_labels:
                self.fail(f"duplicate edge label {label_tok.text!r}", label_tok)
            seen_labels.add(label_tok.text)
            self.expect(":")
            src, v = self.parse_end(vset)
            self.expect("->")
            dst, w = self.parse_end(vset)
            edges.append(Edge(label_tok.text, src, dst, v, w, label=label_tok.text))
            if self.peek().text == ";":
                self.next()
            elif self.peek().text != "}":
                self.fail("expected ';' or '}'")
        self.expect("}")
        return TubularPresentation(tuple(vertices), tuple(edges), name=name)

    def parse_end(self, vset: set[str]) -> tuple[str, IntVec2]:
        vtok = self.ident("vertex id")
        if vtok.text not in vset:
            self.fail(f"unknown vertex {vtok.text!r}", vtok)
        self.expect("(")
        x = self.integer()
        self.expect(",")
        y = self.integer()
        self.expect(")")
        if x == 0 and y == 0:
            self.fail("zero attaching vector", vtok)
        return vtok.text, IntVec2(x, y)

    def parse_gpq(self) -> GpqParams:
        self.expect("gpq")
        self.expect("p")
        self.expect("=")
        p = self.parse_int_list()
        self.expect("q")
        self.expect("=")
        q_tok = self.peek()
        q = self.parse_int_list()
        if len(p) != len(q) or not p:
            self.fail("p and q must have equal positive length", q_tok)
        return GpqParams(tuple(p), tuple(q))

    def parse_int_list(self) -> list[int]:
        self.expect("[")
        out = [self.integer()]
        while self.peek().text == ",":
            self.next()
            out.append(self.integer())
        self.expect("]")
        return out


def parse(text: str) -> TubularPresentation | GpqParams:
    """Parse the DSL; raises DslError with line/column on malformed input."""
    return _Parser(text).parse()


def unparse(obj: TubularPresentation | GpqParams) -> str:
    """Print an object in the DSL; parse(unparse(x)) is structurally x."""
    if isinstance(obj, GpqParams):
        p = ",".join(str(n) for n in obj.p)
        q = ",".join(str(n) for n in obj.q)
        return f"gpq p=[{p}] q=[{q}]\n"
    lines = [f"group {obj.name or 'G'} {{"]
    lines.append("  vertex " + ", ".join(obj.vertices) + ";")
    for e in obj.edges:
        label = e.label or e.id
        lines.append(
            f"  edge {label} : {e.src}({e.v.x},{e.v.y}) -> {e.dst}({e.w.x},{e.w.y});"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
