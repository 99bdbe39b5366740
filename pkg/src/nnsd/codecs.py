"""graph6 (single-byte size variant) and plain edge-list codecs."""

from __future__ import annotations

from typing import Iterator

from .errors import (
    BadHeader,
    EdgeCountMismatch,
    MalformedHeader,
    NonCanonicalPadding,
    TooLarge,
    TruncatedBitStream,
)
from .graph import Graph, make_graph

MAX_GRAPH6_N = 62
_G6_HEADER = b">>graph6<<"


def _as_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    text = text.strip(b"\r\n")
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    return text


def encode_graph6(g: Graph) -> bytes:
    n = g.n
    if n > MAX_GRAPH6_N:
        raise TooLarge(f"graph6 single-byte sizes stop at n={MAX_GRAPH6_N}, got {n}")
    out = bytearray([n + 63])
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(text: bytes | str) -> Graph:
    data = _as_bytes(text)
    if not data:
        raise MalformedHeader("empty graph6 line")
    if any(b < 63 or b > 126 for b in data):
        raise MalformedHeader("graph6 bytes must lie in 63..126")
    n = data[0] - 63
    if n > MAX_GRAPH6_N:
        raise MalformedHeader("multi-byte graph6 size prefixes are not supported")
    total = n * (n - 1) // 2
    need = -(-total // 6)
    body = data[1:]
    if len(body) < need:
        raise TruncatedBitStream(f"expected {need} adjacency bytes, got {len(body)}")
    if len(body) > need:
        raise MalformedHeader(f"expected {need} adjacency bytes, got {len(body)}")
    pad = need * 6 - total
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise NonCanonicalPadding("padding bits must be zero")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def iter_graph6(text: bytes | str) -> Iterator[Graph]:
    """Decode every non-blank line of a graph6 file."""
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield decode_graph6(line)


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        s = raw.strip()
        if s and not s.startswith("#"):
            lines.append(s)
    return lines


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise BadHeader("missing 'n m' header line")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise BadHeader(f"bad header line: {lines[0]!r}") from None
    if n < 1 or m < 0:
        raise BadHeader(f"bad header values n={n} m={m}")
    body = lines[1:]
    if len(body) != m:
        raise EdgeCountMismatch(f"header says {m} edges, found {len(body)}")
    edges = []
    for s in body:
        parts = s.split()
        if len(parts) != 2:
            raise BadHeader(f"bad edge line: {s!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BadHeader(f"bad edge line: {s!r}") from None
        edges.append((u, v))
    return make_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def looks_like_edge_list(text: str) -> bool:
    lines = _content_lines(text)
    if not lines:
        return False
    parts = lines[0].split()
    return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
