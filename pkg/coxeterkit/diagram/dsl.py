"""
Text notation for Coxeter diagrams.

Statements are separated by ``;`` or newlines, ``#`` starts a comment::

    nodes 4          # node count, required once
    1-2:5            # edge with mark 5 (no mark means 3)
    2-3
    3-4:inf          # thick edge, parallel mirrors
    1-4:d=0.5        # dashed edge, ultraparallel mirrors at distance 0.5
    ring 1 3         # ringed nodes

Pairs without a statement are joined by no edge (mark 2).
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..core.exceptions import DiagramSyntaxError
from .model import CoxeterDiagram, EdgeMark, MarkKind

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(
    r"(?P<number>\d+(?:\.\d*)?(?:[eE][-+]?\d+)?)"
    r"|(?P<word>[A-Za-z_]+)"
    r"|(?P<op>[-:=,])"
    r"|(?P<space>[ \t\r]+)"
    r"|(?P<bad>.)"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> List[List[_Token]]:
    """Split text into statements, each a list of tokens with positions."""
    statements: List[List[_Token]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        current: List[_Token] = []
        for match in _TOKEN_RE.finditer(line):
            kind = match.lastgroup
            column = match.start() + 1
            if kind == "space":
                continue
            if kind == "bad":
                if match.group() == ";":
                    if current:
                        statements.append(current)
                    current = []
                    continue
                raise DiagramSyntaxError(f"unexpected character '{match.group()}'",
                                         line_no, column)
            current.append(_Token(kind, match.group(), line_no, column))
        if current:
            statements.append(current)
    return statements


class _StatementParser:
    """Cursor over the tokens of one statement."""

    def __init__(self, tokens: List[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error_position(self) -> Tuple[int, int]:
        token = self.peek()
        if token is not None:
            return token.line, token.column
        last = self.tokens[-1]
        return last.line, last.column + len(last.text)

    def fail(self, message: str):
        line, column = self.error_position()
        raise DiagramSyntaxError(message, line, column)

    def take(self, kind: str, text: Optional[str] = None) -> _Token:
        token = self.peek()
        if token is None or token.kind != kind or (text is not None and token.text != text):
            expected = repr(text) if text is not None else kind
            found = "end of statement" if token is None else repr(token.text)
            self.fail(f"expected {expected}, found {found}")
        self.pos += 1
        return token

    def integer(self) -> _Token:
        token = self.take("number")
        if not token.text.isdigit():
            self.pos -= 1
            self.fail(f"expected an integer, found {token.text!r}")
        return token

    def done(self) -> bool:
        return self.pos >= len(self.tokens)


def _parse_mark(parser: _StatementParser) -> EdgeMark:
    token = parser.peek()
    if token is None:
        parser.fail("expected an edge mark after ':'")
    if token.kind == "word" and token.text == "inf":
        parser.pos += 1
        return EdgeMark.parallel()
    if token.kind == "word" and token.text == "d":
        parser.pos += 1
        parser.take("op", "=")
        sign = 1.0
        if parser.peek() is not None and parser.peek().text == "-":
            parser.pos += 1
            sign = -1.0
        value_token = parser.peek()
        value = sign * float(parser.take("number").text)
        if value <= 0:
            raise DiagramSyntaxError(f"ultraparallel distance must be positive, got {value}",
                                     value_token.line, value_token.column)
        return EdgeMark.ultraparallel(value)
    number = parser.integer()
    m = int(number.text)
    if m < 3:
        raise DiagramSyntaxError(f"edge mark must be at least 3, got {m}",
                                 number.line, number.column)
    return EdgeMark.finite(m)


def parse_diagram(text: str) -> CoxeterDiagram:
    """
    Parse diagram text into a CoxeterDiagram.

    Parameters:
    -----------
    text : str
        Diagram in the statement notation described in the module docstring.

    Returns:
    --------
    CoxeterDiagram
        The parsed diagram; unmentioned pairs have no edge.

    Raises:
    -------
    DiagramSyntaxError
        On a grammar violation, an out-of-range node, a duplicate edge or
        ``nodes`` statement, a mark below 3, or a non-positive distance. The
        error carries the line and column of the offending token.
    """
    statements = _tokenize(text)
    node_count: Optional[int] = None
    edges: Dict[Tuple[int, int], Tuple[EdgeMark, _Token, _Token]] = {}
    rings: List[_Token] = []

    for tokens in statements:
        parser = _StatementParser(tokens)
        head = parser.peek()
        if head.kind == "word" and head.text == "nodes":
            parser.pos += 1
            if node_count is not None:
                raise DiagramSyntaxError("duplicate 'nodes' statement", head.line, head.column)
            count = parser.integer()
            node_count = int(count.text)
            if node_count < 1:
                raise DiagramSyntaxError("a diagram needs at least one node",
                                         count.line, count.column)
        elif head.kind == "word" and head.text == "ring":
            parser.pos += 1
            rings.append(parser.integer())
            while not parser.done():
                if parser.peek().text == ",":
                    parser.pos += 1
                rings.append(parser.integer())
        elif head.kind == "number":
            first = parser.integer()
            parser.take("op", "-")
            second = parser.integer()
            mark = EdgeMark.finite(3)
            if not parser.done():
                parser.take("op", ":")
                mark = _parse_mark(parser)
            i, j = int(first.text), int(second.text)
            key = (min(i, j), max(i, j))
            if i == j:
                raise DiagramSyntaxError(f"edge {i}-{j} joins a node to itself",
                                         first.line, first.column)
            if key in edges:
                raise DiagramSyntaxError(f"duplicate edge {key[0]}-{key[1]}",
                                         first.line, first.column)
            edges[key] = (mark, first, second)
        else:
            parser.fail(f"unknown statement {head.text!r}")
        if not parser.done():
            parser.fail(f"unexpected {parser.peek().text!r}")

    if node_count is None:
        line = statements[-1][-1].line if statements else 1
        raise DiagramSyntaxError("missing 'nodes' statement", line, 1)

    def check(token: _Token):
        if not 1 <= int(token.text) <= node_count:
            raise DiagramSyntaxError(f"node index {token.text} out of range 1..{node_count}",
                                     token.line, token.column)

    for mark, first, second in edges.values():
        check(first)
        check(second)
    for token in rings:
        check(token)

    diagram = CoxeterDiagram(node_count, {key: value[0] for key, value in edges.items()},
                             frozenset(int(t.text) for t in rings))
    logger.debug("Parsed diagram with %d nodes and %d edges", node_count, len(edges))
    return diagram


def render(diagram: CoxeterDiagram) -> str:
    """Write a diagram in the statement notation; inverse of parse_diagram."""
    parts = [f"nodes {diagram.node_count}"]
    for (i, j), mark in diagram.edges.items():
        if mark.kind is MarkKind.FINITE and mark.value == 3:
            parts.append(f"{i}-{j}")
        else:
            parts.append(f"{i}-{j}:{mark}")
    if diagram.rings:
        parts.append("ring " + " ".join(str(r) for r in sorted(diagram.rings)))
    return "; ".join(parts)


def read_diagram_file(path: str) -> CoxeterDiagram:
    """Parse a diagram from a UTF-8 text file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_diagram(handle.read())
