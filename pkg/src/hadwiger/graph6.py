"""graph6 encoding and decoding (nauty's ASCII format for simple graphs)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import Graph6Error
from .graph import Graph

MAX_N = (1 << 36) - 1
_HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= MAX_N:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"n={n} exceeds the graph6 limit")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` without relabelling (no trailing newline)."""
    groups = _encode_n(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        col = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                groups.append(acc)
                acc = nbits = 0
    if nbits:
        groups.append(acc << (6 - nbits))
    return "".join(chr(x + 63) for x in groups)


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line. A single trailing newline and the optional
    ``>>graph6<<`` header are accepted; anything else malformed raises
    :class:`Graph6Error` naming the byte offset."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    if text.endswith("\n"):
        text = text[:-1]
        if text.endswith("\r"):
            text = text[:-1]
    base = 0
    if text.startswith(_HEADER):
        base = len(_HEADER)
        text = text[base:]
    data = []
    for i, ch in enumerate(text):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {ch!r} outside [63, 126]", base + i)
        data.append(c - 63)
    if not data:
        raise Graph6Error("empty graph6 string", base)

    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte length header", base + len(data))
        n, pos = 0, 8
        for x in data[2:8]:
            n = (n << 6) | x
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte length header", base + len(data))
        n, pos = 0, 4
        for x in data[1:4]:
            n = (n << 6) | x

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} adjacency bytes, got {len(body)}", base + len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency data", base + pos + need)
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)

    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    return Graph(n, masks, check=False)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph or error)`` for each non-blank line (1-based)."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, from_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc
