"""
graph6 codec.

Layout: N(n) followed by the upper triangle of the adjacency matrix read
column by column ((0,1), (0,2), (1,2), (0,3), ...), packed 6 bits per byte
with 63 added to every byte. N(n) is one byte for n <= 62 and '~' plus three
bytes (18 bits) above that. An optional '>>graph6<<' header is accepted on
decode and never written.
"""

from typing import Union

import numpy as np

from .config import MAX_ORDER
from .errors import Graph6Error, GraphSizeError
from .graph import Graph

HEADER = b">>graph6<<"
_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)
_SHIFTS = np.arange(5, -1, -1, dtype=np.uint8)


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return b"~" + bytes(((n >> shift) & 0x3F) + 63 for shift in (12, 6, 0))


def _decode_order(data: bytes) -> tuple:
    """Return (n, number of bytes used by N(n))"""
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("graph6: truncated 8-byte vertex count")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("graph6: truncated 4-byte vertex count")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def encode_graph6(g: Graph) -> bytes:
    """Encode g as graph6 bytes (no header, no trailing newline)"""
    n = g.n
    if n < 2:
        return _encode_order(n)
    # tril indices (r > c) in row-major order walk the upper triangle column by column
    rows, cols = np.tril_indices(n, -1)
    bits = g.adjacency_matrix()[rows, cols].astype(np.int64)
    pad = (-len(bits)) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.int64)])
    body = (bits.reshape(-1, 6) @ _WEIGHTS + 63).astype(np.uint8)
    return _encode_order(n) + body.tobytes()


def decode_graph6(data: Union[bytes, str]) -> Graph:
    """Decode one graph6 record; surrounding whitespace is ignored"""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6Error(f"graph6: non-ASCII input ({e.reason})") from None
    data = bytes(data).strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("graph6: empty input")

    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"graph6: byte {b} at offset {i} outside 63..126")

    n, used = _decode_order(data)
    if n > MAX_ORDER:
        raise GraphSizeError(f"graph6: {n} vertices exceeds the cap of {MAX_ORDER}")

    body = data[used:]
    m = n * (n - 1) // 2
    needed = (m + 5) // 6
    if len(body) < needed:
        raise Graph6Error(f"graph6: truncated adjacency data ({len(body)} of {needed} bytes)")
    if len(body) > needed:
        raise Graph6Error(f"graph6: {len(body) - needed} unexpected trailing bytes")
    if m == 0:
        return Graph(n)

    values = np.frombuffer(body, dtype=np.uint8) - 63
    bits = ((values[:, None] >> _SHIFTS) & 1).ravel()[:m]
    rows, cols = np.tril_indices(n, -1)
    hits = np.nonzero(bits)[0]
    return Graph.from_edges(n, zip(rows[hits].tolist(), cols[hits].tolist()))
