"""Text formats: edge-list (multigraph-capable) and graph6 (simple only).

Edge-list format: first non-comment line is the vertex count, then one
"u v" pair per line; a repeated line raises that pair's multiplicity.
Lines starting with '#' and blank lines are ignored.

graph6 follows the de-facto standard: 63-offset ASCII bytes, the upper
triangle of the adjacency matrix packed column by column in 6-bit groups.
"""

from __future__ import annotations

from .errors import Graph6MultiedgeError, LoopEdgeError, MalformedInputError, VertexOutOfRangeError
from .multigraph import MultiGraph


def parse_edgelist(text: str) -> MultiGraph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise MalformedInputError("expected vertex count on first line", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise MalformedInputError(f"bad vertex count {fields[0]!r}", lineno) from None
            if n < 0:
                raise MalformedInputError("vertex count must be non-negative", lineno)
            continue
        if len(fields) != 2:
            raise MalformedInputError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedInputError(f"non-integer endpoint in {line!r}", lineno) from None
        edges.append((u, v))
    if n is None:
        raise MalformedInputError("empty input")
    try:
        return MultiGraph(n, edges)
    except (LoopEdgeError, VertexOutOfRangeError) as exc:
        raise MalformedInputError(str(exc)) from exc


def emit_edgelist(g: MultiGraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def _g6_decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, index of first adjacency byte)."""
    if not data:
        raise MalformedInputError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise MalformedInputError("truncated graph6 vertex count")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise MalformedInputError("truncated graph6 vertex count")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def parse_graph6(text: str) -> MultiGraph:
    """Decode one graph6 line into a simple MultiGraph."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):].strip()
    data = s.encode("ascii")
    for b in data:
        if not 63 <= b <= 126:
            raise MalformedInputError(f"byte {b} outside graph6 range")
    n, at = _g6_decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[at:]
    if len(body) != need:
        raise MalformedInputError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}"
        )
    bits = []
    for b in body:
        val = b - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return MultiGraph(n, edges)


def emit_graph6(g: MultiGraph) -> str:
    """Encode a simple graph as one graph6 line."""
    if not g.is_simple():
        raise Graph6MultiedgeError("graph has parallel edges; graph6 is simple-only")
    n = g.n
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        out.extend(((n >> shift) & 63) + 63 for shift in (12, 6, 0))
    else:
        out.extend((126, 126))
        out.extend(((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return out.decode("ascii")


def parse_graph6_lines(text: str) -> list[MultiGraph]:
    """Decode a file of one graph6 string per line."""
    graphs = []
    for raw in text.splitlines():
        line = raw.strip()
        if line:
            graphs.append(parse_graph6(line))
    return graphs


def parse_graph(text: str, fmt: str = "edgelist") -> MultiGraph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown format {fmt!r}")


def emit_graph(g: MultiGraph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return emit_edgelist(g)
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
