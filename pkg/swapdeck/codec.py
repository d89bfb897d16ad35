"""graph6 encoding and decoding.

Only the short form (orders 1..62, one header byte) is handled; the order
cap of the library is far below that. The body holds the upper-triangle
adjacency bits in column-major order (x01; x02, x12; x03, x13, x23; ...),
six bits per printable byte offset by 63, zero-padded at the end.
"""

from typing import Iterable, Iterator, Optional, Tuple

from .core.graph import MAX_ORDER, Graph
from .errors import MalformedLine, OrderTooLarge


GRAPH6_HEADER = ">>graph6<<"
_OFFSET = 63
_SHORT_FORM_LIMIT = 62


def _body_length(order: int) -> int:
    return (order * (order - 1) // 2 + 5) // 6


def encode(g: Graph) -> str:
    """Encode a labeled graph as a graph6 line (no trailing newline).

    Raises:
        OrderTooLarge: If the graph exceeds MAX_ORDER
    """
    n = g.order
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {MAX_ORDER}")
    out = [chr(n + _OFFSET)]
    acc = 0
    filled = 0
    for j in range(1, n):
        column = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (column >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + _OFFSET))
                acc = 0
                filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + _OFFSET))
    return "".join(out)


def decode(line: str) -> Graph:
    """Decode one graph6 line.

    A leading ``>>graph6<<`` header and surrounding whitespace are ignored.

    Raises:
        MalformedLine: On a bad header, wrong body length, nonzero padding
            bits, or a character outside 63..126
        OrderTooLarge: If the encoded order exceeds MAX_ORDER
    """
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise MalformedLine("empty graph6 line")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise MalformedLine(f"character {ch!r} at position {pos} is outside 63..126")

    n = ord(text[0]) - _OFFSET
    if n > _SHORT_FORM_LIMIT:
        raise MalformedLine("long-form graph6 headers are not supported")
    if n < 1:
        raise MalformedLine("graph6 header encodes an order below 1")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {MAX_ORDER}")

    body = text[1:]
    expected = _body_length(n)
    if len(body) != expected:
        raise MalformedLine(f"order {n} needs {expected} body bytes, got {len(body)}")

    total_bits = n * (n - 1) // 2
    bits = []
    for ch in body:
        value = ord(ch) - _OFFSET
        for shift in range(5, -1, -1):
            bits.append(value >> shift & 1)
    if any(bits[total_bits:]):
        raise MalformedLine("nonzero padding bits")

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(rows))


def graph_line(raw: str) -> Optional[str]:
    """Return the stripped graph text of a stream line, or None to skip it.

    Blank lines, ``#`` comments and a bare ``>>graph6<<`` header line are
    skipped; a header glued to a graph is left for ``decode`` to strip.
    """
    text = raw.strip()
    if not text or text.startswith("#") or text == GRAPH6_HEADER:
        return None
    return text


def iter_graph6(lines: Iterable[str]) -> Iterator[Tuple[int, str]]:
    """Yield ``(line_number, text)`` for each graph line of a stream (1-based)."""
    for lineno, raw in enumerate(lines, start=1):
        text = graph_line(raw)
        if text is not None:
            yield lineno, text
