"""graph6 encoding (the format used by nauty/geng and the House of Graphs)."""

from __future__ import annotations

from .errors import CapacityError, Graph6Error
from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        rj = g.rows[j]
        for i in range(j):
            bits.append((rj >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(chr(63 + v))
    return _encode_order(n) + "".join(body)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", base + k)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) < 4:
            raise Graph6Error("truncated order field", base + len(s))
        if s[1] == "~":
            raise CapacityError(f"graph6 order exceeds capacity {MAX_ORDER}")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    if n < 1:
        raise Graph6Error("order must be at least 1", base)
    if n > MAX_ORDER:
        raise CapacityError(f"graph6 order {n} exceeds capacity {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    data = s[pos:]
    if len(data) != need:
        raise Graph6Error(f"expected {need} data bytes, found {len(data)}", base + pos + min(len(data), need))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(data[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need:
        pad = need * 6 - nbits
        if pad and (ord(data[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("non-zero padding bits", base + pos + need - 1)
    return Graph(n, rows)
