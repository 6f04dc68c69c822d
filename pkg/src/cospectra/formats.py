"""Text formats: the cotree grammar and the edge-list format.

Cotree grammar (whitespace-insensitive)::

    cotree  := leaf | node
    node    := ("J" | "U") "(" item ("," item)* ")"
    item    := cotree | INT "*" leaf
    leaf    := IDENT | "_"

Edge list: first non-comment line ``n m``, then ``m`` lines ``u v`` with
0-based vertex ids.  Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from typing import Optional, Union

from cospectra.cotree import Cotree, NodeKind, normalize
from cospectra.graph import Graph

__all__ = [
    "ParseError",
    "parse_cotree",
    "format_cotree",
    "parse_edge_list",
    "format_edge_list",
    "detect_format",
    "parse_input",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),*])|(?P<bad>\S))")


def _position(text: str, offset: int) -> tuple:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", *_position(text, start))
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


def parse_cotree(text: str, *, canonical: bool = True) -> Cotree:
    """Parse cotree text; the result is normalized unless ``canonical=False``.

    A node may list a single item (``U(2*_)``); unary nodes collapse during
    normalization.  The parser is iterative, so nesting depth is unbounded.
    """
    tokens = _tokenize(text)
    kinds: list = []
    children: list = []
    labels: list = []
    stack: list = []
    root: Optional[int] = None
    i = 0

    def fail(msg, tok):
        raise ParseError(msg, *_position(text, tok[2]))

    def attach(ref):
        nonlocal root
        if stack:
            children[stack[-1]].append(ref)
        else:
            root = ref

    def leaf_label(tok):
        if tok[0] != "ident":
            fail(f"expected a leaf, found {tok[1] or 'end of input'!r}", tok)
        return None if tok[1] == "_" else tok[1]

    expect_item = True
    while True:
        tok = tokens[i]
        if expect_item:
            if tok[0] == "ident" and tok[1] in ("J", "U") and tokens[i + 1][1] == "(":
                idx = len(kinds)
                kinds.append(NodeKind(tok[1]))
                children.append([])
                attach(idx)
                stack.append(idx)
                i += 2
                continue
            if tok[0] == "int":
                if not stack:
                    fail("repetition is only allowed inside a node", tok)
                count = int(tok[1])
                if count < 1:
                    fail("repetition count must be positive", tok)
                if tokens[i + 1][1] != "*":
                    fail("expected '*' after repetition count", tokens[i + 1])
                label = leaf_label(tokens[i + 2])
                for _ in range(count):
                    labels.append(label)
                    attach(~(len(labels) - 1))
                i += 3
            elif tok[0] == "ident":
                labels.append(leaf_label(tok))
                attach(~(len(labels) - 1))
                i += 1
            else:
                fail(f"expected a node or leaf, found {tok[1] or 'end of input'!r}", tok)
            expect_item = False
            continue
        if not stack:
            if tok[0] != "eof":
                fail(f"trailing input {tok[1]!r}", tok)
            break
        if tok[1] == ",":
            expect_item = True
        elif tok[1] == ")":
            stack.pop()
        else:
            fail(f"expected ',' or ')', found {tok[1] or 'end of input'!r}", tok)
        i += 1

    if root is None:
        fail("empty input", tokens[0])
    if root < 0:
        return Cotree((), (), labels, root)
    t = Cotree(kinds, children, labels, root)
    return normalize(t) if canonical else t


def format_cotree(t: Cotree) -> str:
    """Serialize ``t``; runs of adjacent unlabeled leaves print as ``k*_``."""
    if t.root < 0:
        return t.labels[0] if t.labels[0] is not None else "_"
    labels, kinds, children = t.labels, t.kinds, t.children
    out: list = []
    # Stack entries are either a child-iterator frame or a literal string.
    stack = [(t.root, 0)]
    out.append(f"{kinds[t.root].value}(")
    while stack:
        w, pos = stack.pop()
        kids = children[w]
        if pos >= len(kids):
            out.append(")")
            continue
        if pos > 0:
            out.append(",")
        c = kids[pos]
        if c >= 0:
            stack.append((w, pos + 1))
            stack.append((c, 0))
            out.append(f"{kinds[c].value}(")
            continue
        name = labels[~c]
        if name is None:
            run = 1
            while pos + run < len(kids) and kids[pos + run] < 0 and labels[~kids[pos + run]] is None:
                run += 1
            out.append("_" if run == 1 else f"{run}*_")
            stack.append((w, pos + run))
        else:
            out.append(name)
            stack.append((w, pos + 1))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        col = raw.index(parts[0]) + 1
        if len(parts) != 2:
            raise ParseError(f"expected two integers, found {len(parts)} field(s)", lineno, col)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, found {line!r}", lineno, col) from None
        if n is None:
            if a < 1 or b < 0:
                raise ParseError("header needs n >= 1 and m >= 0", lineno, col)
            n, m = a, b
            continue
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} edges", lineno, col)
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno, col)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno, col)
        edges.append((a, b))
    if n is None:
        raise ParseError("missing 'n m' header", 1, 1)
    if len(edges) != m:
        raise ParseError(f"declared {m} edges, found {len(edges)}", max(1, text.count("\n") + 1), 1)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> str:
    """``"edges"`` when the first meaningful token is an integer, else ``"cotree"``."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return "edges" if line[0].isdigit() else "cotree"
    return "cotree"


def parse_input(text: str, fmt: Optional[str] = None) -> Union[Cotree, Graph]:
    fmt = fmt or detect_format(text)
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "cotree":
        return parse_cotree(text)
    raise ValueError(f"unknown format {fmt!r}")
