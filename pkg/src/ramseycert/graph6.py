"""graph6 encoding (upper triangle, column by column, 6 bits per printable byte)."""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("order too large for graph6")


def emit_graph6(g: Graph) -> str:
    n = g.order
    bits = []
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_order(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    if not line:
        raise Graph6Error("empty graph6 string", base)
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range 63..126", base + pos)
    values = [ord(ch) - 63 for ch in line]

    def take(start: int, count: int) -> int:
        if len(values) < start + count:
            raise Graph6Error("truncated order field", base + len(values))
        out = 0
        for v in values[start:start + count]:
            out = out << 6 | v
        return out

    if values[0] != 63:
        n, pos = values[0], 1
    elif len(values) > 1 and values[1] == 63:
        n, pos = take(2, 6), 8
    else:
        n, pos = take(1, 3), 4
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = values[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated: expected {need} data bytes, got {len(body)}", base + len(values))
    if len(body) > need:
        raise Graph6Error("trailing bytes after the adjacency data", base + pos + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and body[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("non-zero padding bits", base + pos + need - 1)
    return Graph(n, rows, check=False)
