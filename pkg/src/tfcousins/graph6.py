"""graph6 encoding, bit-exact with McKay's ``formats.txt``."""

from __future__ import annotations

from .errors import Graph6Error
from .graphs import Graph

__all__ = ["parse_graph6", "write_graph6", "HEADER"]

HEADER = ">>graph6<<"
_MAX_N = 68_719_476_735


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258_048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= _MAX_N:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} exceeds the graph6 limit")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size prefix")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size prefix")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    if n < 63:
        raise Graph6Error(f"non-minimal size prefix encodes n={n}")
    return n, 4


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character in graph6 record") from exc
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"character {chr(b)!r} at offset {i} outside 63..126")
    n, off = _decode_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[off:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, found {len(body)}")
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    bits >>= pad
    edges = []
    k = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> k & 1:
                edges.append((u, v))
            k -= 1
    return Graph(n, tuple(edges))


def write_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    masks = g.masks
    bits = 0
    nbits = 0
    for v in range(1, n):
        mv = masks[v]
        for u in range(v):
            bits = (bits << 1) | (mv >> u & 1)
        nbits += v
    pad = (-nbits) % 6
    bits <<= pad
    total = nbits + pad
    chars = [chr(((bits >> s) & 63) + 63) for s in range(total - 6, -1, -6)]
    return (HEADER if header else "") + _encode_n(n) + "".join(chars)
