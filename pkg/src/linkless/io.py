"""Edge-list and graph6 text formats."""
from __future__ import annotations

from .errors import ParseError
from .graph import Graph, simplify


def parse_edge_list(text: str) -> tuple[Graph, list[int]]:
    """Parse ``u v`` lines into a dense graph plus the original labels.

    Vertex ``i`` of the returned graph carries label ``labels[i]``; labels
    are the distinct integers of the file in increasing order.  Blank lines
    and ``#`` comments are ignored.  ``offset`` on errors is a 1-based line.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertex integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if a < 0 or b < 0:
            raise ParseError("vertex labels must be nonnegative", lineno)
        pairs.append((a, b))
    labels = sorted({x for p in pairs for x in p})
    index = {x: i for i, x in enumerate(labels)}
    return Graph.from_edges(((index[a], index[b]) for a, b in pairs), n=len(labels)), labels


def format_edge_list(g: Graph, labels=None) -> str:
    lab = (lambda v: v) if labels is None else (lambda v: labels[v])
    return "".join(f"{lab(u)} {lab(v)}\n" for u, v, _ in g.edges)


def _size_header(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise ValueError("graph6 supports at most 258047 vertices here")


def to_graph6(g: Graph) -> str:
    """Encode a graph (simplified first) with vertices taken in order."""
    s = simplify(g)
    index = {v: i for i, v in enumerate(s.vertices)}
    n = s.n
    bits = [0] * (n * (n - 1) // 2)
    for u, v, _ in s.edges:
        a, b = sorted((index[u], index[v]))
        bits[b * (b - 1) // 2 + a] = 1  # column-wise upper triangle
    bits += [0] * (-len(bits) % 6)
    body = bytes(63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6))
    return (_size_header(n) + body).decode("ascii")


def from_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 string; ``ParseError.offset`` is the bad byte index."""
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    start = 0
    if data.startswith(b">>graph6<<"):
        start = 10
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise ParseError(f"byte {data[i]!r} outside the graph6 range 63..126", i)
    if len(data) <= start:
        raise ParseError("empty graph6 string", start)
    if data[start] == 126:
        if len(data) > start + 1 and data[start + 1] == 126:
            raise ParseError("8-byte graph6 size headers are not supported", start + 1)
        if len(data) < start + 4:
            raise ParseError("truncated size header", len(data))
        n = ((data[start + 1] - 63) << 12) | ((data[start + 2] - 63) << 6) | (data[start + 3] - 63)
        body_start = start + 4
    else:
        n = data[start] - 63
        body_start = start + 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[body_start:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}",
                         body_start + min(len(body), need))
    bits = []
    for byte in body:
        x = byte - 63
        bits.extend((x >> (5 - t)) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", body_start + len(body) - 1)
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return Graph.from_edges(pairs, n=n)


def parse_graph(text: str, fmt: str = "auto") -> tuple[Graph, list[int]]:
    """Parse one graph in ``graph6``, ``edge-list`` or ``auto`` format."""
    if fmt == "auto":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        looks_g6 = len(lines) == 1 and len(lines[0].split()) == 1 and not lines[0].lstrip("-").isdigit()
        fmt = "graph6" if looks_g6 else "edge-list"
    if fmt == "graph6":
        stripped = text.strip()
        if "\n" in stripped:
            raise ParseError("expected a single graph6 line", stripped.index("\n"))
        g = from_graph6(stripped)
        return g, list(range(g.n))
    if fmt == "edge-list":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")
