"""Graph serialization: graph6 strings and a plain edge-list format.

graph6 is the standard dense ASCII encoding (printable bytes 63..126, no
header line).  The edge-list format is a header line ``n <count>`` followed
by one ``u v`` pair per line; blank lines and ``#`` comments are tolerated
on input.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .graphs import MAX_VERTICES, Graph, from_edges

FORMAT_GRAPH6 = "graph6"
FORMAT_EDGE_LIST = "edge-list"

_EXTENSIONS = {
    ".g6": FORMAT_GRAPH6,
    ".graph6": FORMAT_GRAPH6,
    ".el": FORMAT_EDGE_LIST,
    ".edges": FORMAT_EDGE_LIST,
}


class GraphFormatError(ValueError):
    """Malformed graph text; `line` and `offset` locate the problem when known."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        loc = ""
        if line is not None:
            loc += f" (line {line}"
            if offset is not None:
                loc += f", offset {offset}"
            loc += ")"
        super().__init__(message + loc)
        self.line = line
        self.offset = offset


def _g6_char(value: int) -> str:
    return chr(value + 63)


def _g6_val(ch: str, offset: int) -> int:
    b = ord(ch)
    if not 63 <= b <= 126:
        raise GraphFormatError(f"byte {b!r} outside graph6 range 63..126", line=1, offset=offset)
    return b - 63


def serialize_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = _g6_char(n)
    else:
        head = "~" + "".join(_g6_char((n >> shift) & 0x3F) for shift in (12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append((g.adj[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(_g6_char(val))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphFormatError("empty graph6 string", line=1)
    if s.startswith(":"):
        raise GraphFormatError("sparse6 strings are not supported, expected dense graph6", line=1)
    pos = 0
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise GraphFormatError("graph6 long-long vertex counts exceed the width cap", line=1)
        if len(s) < 4:
            raise GraphFormatError("truncated graph6 vertex count", line=1)
        n = 0
        for pos in range(1, 4):
            n = (n << 6) | _g6_val(s[pos], pos)
        pos = 4
    else:
        n = _g6_val(s[0], 0)
        pos = 1
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph on {n} vertices exceeds the width cap {MAX_VERTICES}", line=1)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nchars:
        raise GraphFormatError(
            f"graph6 body too short: need {nchars} bytes for {n} vertices, got {len(body)}", line=1
        )
    if len(body) > nchars:
        raise GraphFormatError(
            f"trailing junk after graph6 body ({len(body) - nchars} extra bytes)",
            line=1,
            offset=pos + nchars,
        )
    bits = []
    for k, ch in enumerate(body):
        val = _g6_val(ch, pos + k)
        bits.extend((val >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 body", line=1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "n" or len(tokens) != 2:
                raise GraphFormatError(f"expected header 'n <count>', got {raw!r}", line=lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"vertex count {tokens[1]!r} is not an integer", line=lineno)
            if n < 0:
                raise GraphFormatError(f"negative vertex count {n}", line=lineno)
            if n > MAX_VERTICES:
                raise GraphFormatError(f"vertex count {n} exceeds the width cap {MAX_VERTICES}", line=lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v' edge pair, got {raw!r}", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {raw!r}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1} in edge ({u}, {v})", line=lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u} not allowed", line=lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header line")
    return from_edges(n, edges)


def serialize_graph(g: Graph, fmt: str) -> str:
    if fmt == FORMAT_GRAPH6:
        return serialize_graph6(g)
    if fmt == FORMAT_EDGE_LIST:
        return serialize_edge_list(g)
    raise ValueError(f"unknown graph format {fmt!r}")


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == FORMAT_GRAPH6:
        return parse_graph6(text)
    if fmt == FORMAT_EDGE_LIST:
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def format_for_path(path: str) -> str | None:
    """Guess the format from a file extension, or None if unknown."""
    return _EXTENSIONS.get(Path(path).suffix.lower())


def read_graph_file(path: str, fmt: str | None = None) -> Graph:
    """Read a graph from a file, or from standard input when path is '-'."""
    if path == "-":
        if fmt is None:
            raise ValueError("reading from stdin requires an explicit format")
        text = sys.stdin.read()
    else:
        if fmt is None:
            fmt = format_for_path(path)
            if fmt is None:
                raise ValueError(f"cannot infer graph format from {path!r}; pass one explicitly")
        text = Path(path).read_text(encoding="utf-8")
    return parse_graph(text, fmt)
