"""graph6 encoding for graphs with at most 62 vertices."""

from __future__ import annotations

from .graph import Graph, GraphError, pair_list

MAX_ORDER = 62
HEADER = b">>graph6<<"


def _as_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    return text


def parse_graph6(text: bytes | str) -> Graph:
    data = _as_bytes(text)
    if not data:
        raise GraphError("empty graph6 string")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphError(f"graph6 byte {b!r} at position {pos} outside [63, 126]")
    n = data[0] - 63
    if n > MAX_ORDER:
        raise GraphError(f"graph6 orders above {MAX_ORDER} are not supported")
    pairs = pair_list(n)
    nbytes = (len(pairs) + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise GraphError(f"truncated graph6: need {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise GraphError(f"trailing bytes after graph6 data: {body[nbytes:]!r}")
    bits = 0
    for b in body:
        bits = bits << 6 | (b - 63)
    total = 6 * nbytes
    pad = total - len(pairs)
    if bits & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 string")
    rows = [0] * n
    for idx, (i, j) in enumerate(pairs):
        if bits >> (total - 1 - idx) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> bytes:
    if g.n > MAX_ORDER:
        raise GraphError(f"graph6 orders above {MAX_ORDER} are not supported (n={g.n})")
    pairs = pair_list(g.n)
    nbytes = (len(pairs) + 5) // 6
    bits = 0
    for i, j in pairs:
        bits = bits << 1 | (g.adj[i] >> j & 1)
    bits <<= 6 * nbytes - len(pairs)
    out = bytearray([g.n + 63])
    for shift in range(6 * (nbytes - 1), -1, -6):
        out.append((bits >> shift & 63) + 63)
    return bytes(out)


def to_graph6_str(g: Graph) -> str:
    return emit_graph6(g).decode("ascii")


def read_graph6_lines(lines) -> list[Graph]:
    """Parse every non-blank line of a graph6 file."""
    graphs = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    return graphs
