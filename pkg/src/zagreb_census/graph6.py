"""graph6 serialization.

The upper triangle is read column by column (x01, x02, x12, x03, ...) and
packed six bits per printable byte.  The same bit sequence, read as a
big-endian integer, is the ``code`` used by the canonical labeler, so
comparing codes of equal order is comparing graph6 strings.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .graph import MAX_ORDER, Graph, GraphError, _trusted

# below this order plain string handling beats numpy's per-call overhead
_NUMPY_ORDER = 16
_SIX = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)

_TO_CHAR = {format(v, "06b"): chr(v + 63) for v in range(64)}
_TO_BITS = {c: b for b, c in _TO_CHAR.items()}


def n_bits(n: int) -> int:
    return n * (n - 1) // 2


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))


@lru_cache(maxsize=None)
def _triangle(n: int) -> tuple[np.ndarray, np.ndarray]:
    rows = [i for j in range(1, n) for i in range(j)]
    cols = [j for j in range(1, n) for i in range(j)]
    return np.array(rows, dtype=np.intp), np.array(cols, dtype=np.intp)


def _matrix(g: Graph) -> np.ndarray:
    raw = b"".join(row.to_bytes(8, "little") for row in g.adj)
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little").reshape(g.n, 64)


def bit_string(g: Graph) -> str:
    return "".join(
        format(g.adj[j] & ((1 << j) - 1), f"0{j}b")[::-1] for j in range(1, g.n)
    )


def graph_code(g: Graph) -> int:
    bits = bit_string(g)
    return int(bits, 2) if bits else 0


def _pack(n: int, bits: str) -> str:
    bits += "0" * (-len(bits) % 6)
    body = "".join(_TO_CHAR[bits[k : k + 6]] for k in range(0, len(bits), 6))
    return _encode_order(n) + body


def encode(g: Graph) -> str:
    if g.n < _NUMPY_ORDER:
        return _pack(g.n, bit_string(g))
    i, j = _triangle(g.n)
    bits = _matrix(g)[i, j]
    bits = np.concatenate([bits, np.zeros(-bits.size % 6, dtype=np.uint8)]).reshape(-1, 6)
    return _encode_order(g.n) + ((bits @ _SIX) + 63).astype(np.uint8).tobytes().decode("ascii")


def encode_code(n: int, code: int) -> str:
    """graph6 string for the graph whose triangle bits are ``code``."""
    length = n_bits(n)
    return _pack(n, format(code, f"0{length}b") if length else "")


def _graph_from_bit_array(n: int, bits: np.ndarray) -> Graph:
    i, j = _triangle(n)
    mat = np.zeros((n, n), dtype=np.uint8)
    mat[i, j] = bits
    mat |= mat.T
    packed = np.packbits(mat, axis=1, bitorder="little")
    return _trusted(n, [int.from_bytes(row.tobytes(), "little") for row in packed])


def _graph_from_bits(n: int, bits: str) -> Graph:
    if n >= _NUMPY_ORDER:
        return _graph_from_bit_array(n, np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - 48)
    adj = [0] * n
    start = 0
    for j in range(1, n):
        low = int(bits[start : start + j][::-1], 2)
        start += j
        adj[j] |= low
        bit_j = 1 << j
        while low:
            b = low & -low
            adj[b.bit_length() - 1] |= bit_j
            low ^= b
    return _trusted(n, adj)


def graph_from_code(n: int, code: int) -> Graph:
    length = n_bits(n)
    if code < 0 or code >> length:
        raise GraphError(f"code does not fit {length} bits")
    return _graph_from_bits(n, format(code, f"0{length}b") if length else "")


def decode(text: str | bytes) -> Graph:
    """Parse one graph6 string; no header, no trailing bytes."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphError("graph6 must be ASCII") from exc
    if not text:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in text):
        raise GraphError(f"non-graph6 byte in {text!r}")
    if text[0] == "~":
        if len(text) < 4 or text[1] == "~":
            raise GraphError("unsupported graph6 order header")
        n = 0
        for c in text[1:4]:
            n = n << 6 | (ord(c) - 63)
        if n <= 62:
            raise GraphError("non-minimal graph6 order header")
        body = text[4:]
    else:
        n = ord(text[0]) - 63
        body = text[1:]
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"graph6 order {n} outside 1..{MAX_ORDER}")
    length = n_bits(n)
    if len(body) != (length + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(length + 5) // 6}")
    if n >= _NUMPY_ORDER:
        chars = np.frombuffer(body.encode("ascii"), dtype=np.uint8) - 63
        bits = np.unpackbits(chars[:, None], axis=1)[:, 2:].ravel()
        if bits[length:].any():
            raise GraphError("nonzero graph6 padding")
        return _graph_from_bit_array(n, bits[:length])
    bits = "".join(_TO_BITS[c] for c in body)
    if "1" in bits[length:]:
        raise GraphError("nonzero graph6 padding")
    return _graph_from_bits(n, bits[:length])
