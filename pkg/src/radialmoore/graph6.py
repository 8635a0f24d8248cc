"""graph6 encoding of simple undirected graphs.

Format reference: ``formats.txt`` shipped with nauty.  Vertex count ``N(n)``
followed by the upper triangle ``x(0,1), x(0,2), x(1,2), x(0,3), ...``
packed six bits per byte, most significant bit first, each byte offset by 63.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import Graph

HEADER = b">>graph6<<"
MAX_ORDER = (1 << 36) - 1


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_order(n: int) -> bytes:
    if n < 0 or n > MAX_ORDER:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode(g: Graph, header: bool = False) -> bytes:
    n = g.n
    bits = []
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5])
        for i in range(0, len(bits), 6)
    )
    return (HEADER if header else b"") + _encode_order(n) + body


def encode_str(g: Graph) -> str:
    return encode(g).decode("ascii")


def decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(HEADER):
        pos = len(HEADER)
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte {data[i]!r} outside printable range 63..126", i)
    if pos >= len(data):
        raise Graph6Error("missing vertex count", pos)
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        width = 3
        if pos + 1 < len(data) and data[pos + 1] == 126:
            width = 6
            pos += 1
        pos += 1
        if pos + width > len(data):
            raise Graph6Error("truncated vertex count", len(data))
        n = 0
        for b in data[pos : pos + width]:
            n = n << 6 | (b - 63)
        pos += width
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise Graph6Error(f"expected {need} adjacency bytes for n={n}, found {len(data) - pos}", pos)
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for b in data[pos:]:
        v = b - 63
        for s in range(5, -1, -1):
            if k >= nbits:
                if v >> s & 1:
                    raise Graph6Error("nonzero padding bits", pos + k // 6)
                continue
            if v >> s & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, rows)


def read_stream(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line; never raises on bad lines."""
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, decode(line)
        except Graph6Error as exc:
            yield lineno, exc


def write_stream(graphs: Iterable[Graph], out: IO[str]) -> None:
    for g in graphs:
        out.write(encode_str(g) + "\n")
