"""graph6 and edge-list text formats."""

from __future__ import annotations

from typing import Iterator, TextIO

from .errors import GraphError
from .graph import Graph, build_graph

HEADER = ">>graph6<<"
# three-character size field reaches 2**18 - 1; dense rows make larger graphs pointless
MAX_ORDER = 258047


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= MAX_ORDER:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise GraphError(f"graph6 encoding capped at n = {MAX_ORDER}")


def g6_encode(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def g6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"illegal graph6 character {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphError("truncated graph6 length header")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise GraphError("truncated graph6 length header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
        if n <= 62:
            raise GraphError("graph6 long length header used for n <= 62")
    if n < 1:
        raise GraphError("graph6 string encodes an empty graph")
    if n > MAX_ORDER:
        raise GraphError(f"graph6 decoding capped at n = {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} chars, expected {need} for n = {n}")
    spare = need * 6 - nbits
    if spare and body[-1] & ((1 << spare) - 1):
        raise GraphError("graph6 padding bits are not zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def edgelist_encode(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def edgelist_decode(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v`` (0-indexed)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise GraphError(f"bad edge-list header {lines[0]!r}, expected 'n m'") from None
    if len(lines) - 1 != m:
        raise GraphError(f"header announces {m} edges but {len(lines) - 1} lines follow")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"bad edge line {ln!r}") from None
    return build_graph(n, pairs)


def parse_graph(text: str) -> Graph:
    """Decode either format; a first line of two integers means edge list."""
    stripped = text.strip()
    if not stripped:
        raise GraphError("no graph in input")
    first = stripped.splitlines()[0].split()
    if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
        return edgelist_decode(stripped)
    if len(stripped.splitlines()) != 1:
        raise GraphError("expected a single graph6 line")
    return g6_decode(stripped)


def read_g6_stream(handle: TextIO) -> Iterator[tuple[int, Graph | GraphError]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line.

    Errors are yielded rather than raised so a corpus run can keep going.
    """
    for lineno, line in enumerate(handle, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, g6_decode(line)
        except GraphError as exc:
            yield lineno, exc
