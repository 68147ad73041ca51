"""graph6 encoding/decoding and DOT export.

The graph6 codec implements the standard header-less format: one length
byte for n <= 62 and the 4-byte extended length form (up to n = 258047)
beyond.  Decoding reports the byte offset of the first malformed byte.
"""

from __future__ import annotations

from .graphs import Graph

_MAX_N = 258047


def graph6_encode(g: Graph) -> str:
    if g.n > _MAX_N:
        raise ValueError(f"graph6 supports at most {_MAX_N} vertices, got {g.n}")
    chars = _encode_order(g.n)
    bits = 0
    nbits = 0
    buf = []
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            bits = (bits << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                buf.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        bits <<= 6 - nbits
        buf.append(chr(bits + 63))
    return chars + "".join(buf)


def graph6_decode(text: str) -> Graph:
    s = text.rstrip("\n")
    if not s:
        raise ValueError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for off, byte in enumerate(data):
        if not (63 <= byte <= 126):
            raise ValueError(f"invalid graph6 character at byte offset {off}")
    n, pos = _decode_order(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise ValueError(
            f"bad graph6 length at byte offset {min(pos + need, len(data))}: "
            f"expected {need} adjacency bytes for n={n}, got {len(data) - pos}"
        )
    rows = [0] * n
    # column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
    positions = ((i, j) for j in range(1, n) for i in range(j))
    done = False
    for k in range(pos, len(data)):
        group = data[k] - 63
        for shift in (5, 4, 3, 2, 1, 0):
            if done:
                pair = None
            else:
                pair = next(positions, None)
                done = pair is None
            if pair is None:
                if group >> shift & 1:
                    raise ValueError(f"nonzero padding bit at byte offset {k}")
                continue
            if group >> shift & 1:
                i, j = pair
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph._from_rows(rows)


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def _decode_order(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4:
        raise ValueError(f"truncated extended length field at byte offset {len(data)}")
    if data[1] == 126:
        raise ValueError("graph6 8-byte length form (n >= 258048) not supported")
    n = 0
    for k in range(1, 4):
        n = (n << 6) | (data[k] - 63)
    if n <= 62:
        raise ValueError("non-minimal extended length encoding at byte offset 0")
    return n, 4


def to_dot(g: Graph, name: str = "G") -> str:
    """DOT export with vertex labels equal to indices (write-only format)."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
