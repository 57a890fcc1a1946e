"""graph6 reading and writing (plain graph6 only, no sparse6/digraph6)."""

from __future__ import annotations

from typing import Iterable, Iterator, List, TextIO

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as one graph6 line, without the trailing newline."""
    out = [_encode_order(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record; a leading ``>>graph6<<`` header is skipped."""
    s = line.rstrip("\r\n")
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 record")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside the printable range 63..126")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("orders above 258047 are not supported")
        if len(s) < 4:
            raise Graph6Error("truncated order field")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise Graph6Error("non-canonical long order field")
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n == 0:
        raise Graph6Error("order 0 graphs are not representable")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds capacity {MAX_ORDER}")
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    if len(body) != expected:
        raise Graph6Error(f"expected {expected} data bytes for order {n}, got {len(body)}")
    pad = expected * 6 - npairs
    if pad and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blank lines (LF or CRLF)."""
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line or line == HEADER:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


def read_graph6_file(path: str) -> List[Graph]:
    with open(path, "r", encoding="ascii", newline="") as fh:
        return list(iter_graph6(fh))


def write_graph6_stream(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(write_graph6(g) + "\n")
