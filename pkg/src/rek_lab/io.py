"""Edge-list and graph6 readers/writers.

Edge-list text: ``#`` starts a comment, the first data line is ``n <count>``,
every following data line is a 0-indexed ``u v`` pair.
"""

from __future__ import annotations

from pathlib import Path

from rek_lab.graph import Graph, GraphError, from_edge_list


class ParseError(GraphError):
    """Malformed graph file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range in ({u}, {v}) for n={n}", lineno)
        if u == v:
            raise ParseError(f"self-loop ({u}, {v})", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing 'n <count>' header")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"order {n} too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` as a graph6 string (no trailing newline)."""
    bits = []
    masks = g.masks
    for j in range(1, g.n):
        for i in range(j):
            bits.append(masks[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return (">>graph6<<" if header else "") + _encode_n(g.n) + "".join(body)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise ParseError("graph6 characters must lie in '?'..'~'")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 8
        for d in data[2:8]:
            n = (n << 6) | d
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 4
        for d in data[1:4]:
            n = (n << 6) | d
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def detect_format(path: str | Path, override: str | None = None) -> str:
    if override:
        if override not in ("el", "g6"):
            raise ParseError(f"unknown format {override!r}; use 'el' or 'g6'")
        return override
    suffix = Path(path).suffix.lower()
    if suffix == ".g6":
        return "g6"
    if suffix in (".el", ".txt", ".edges"):
        return "el"
    raise ParseError(f"cannot infer graph format from {str(path)!r}; pass --format")


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    kind = detect_format(path, fmt)
    text = Path(path).read_text()
    if kind == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    return parse_edge_list(text)


def write_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    kind = detect_format(path, fmt)
    text = to_graph6(g) + "\n" if kind == "g6" else format_edge_list(g)
    Path(path).write_text(text)
