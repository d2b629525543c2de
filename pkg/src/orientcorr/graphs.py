"""Undirected simple graphs on at most 62 vertices.

Vertices are 0..n-1.  The edge list is kept sorted lexicographically with
u < v in every pair; edge index i in that list is the bit position used by
orientation words throughout the package (bit set means u -> v).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphFormatError

MAX_VERTICES = 62

_G6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)


def graph_from_edges(n: int, edges) -> Graph:
    """Build a graph, validating and canonicalizing the edge list."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    seen = set()
    canon = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        canon.append((u, v))
    canon.sort()
    adjacency = [0] * n
    for u, v in canon:
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    return Graph(n, tuple(canon), tuple(adjacency))


@dataclass(frozen=True)
class Triple:
    """An ordered triple (a, s, b) of distinct vertices: source, middle, target."""

    a: int
    s: int
    b: int

    def validate(self, g: Graph) -> None:
        for v in (self.a, self.s, self.b):
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range for n={g.n}")
        if len({self.a, self.s, self.b}) != 3:
            raise ValueError(f"triple {(self.a, self.s, self.b)} is not distinct")


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphFormatError(f"cycle needs at least 3 vertices, got {n}")
    return graph_from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(v, v + 1) for v in range(n - 1)])


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            nxt |= g.adjacency[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


# graph6 byte layout: header byte 63+n, then the upper triangle of the
# adjacency matrix in column-major order (pairs (0,1),(0,2),(1,2),(0,3),...),
# packed big-endian into 6-bit groups, each offset by 63.

def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise GraphFormatError("empty graph6 string")
    for offset, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {offset}: character {ch!r} outside graph6 range")
    n = ord(line[0]) - 63
    if n == 63:
        raise GraphFormatError("byte 0: multi-byte vertex counts (n > 62) not supported")
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"byte 0: vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(line) - 1 < nchars:
        raise GraphFormatError(f"byte {len(line)}: truncated, need {nchars} data characters")
    if len(line) - 1 > nchars:
        raise GraphFormatError(f"byte {1 + nchars}: trailing garbage after graph data")
    bits = []
    for ch in line[1:]:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    for offset, bit in enumerate(bits[nbits:]):
        if bit:
            raise GraphFormatError(f"byte {1 + (nbits + offset) // 6}: nonzero padding bit")
    edges = []
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if bits[pos]:
                edges.append((u, v))
            pos += 1
    return graph_from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k:k + 6]:
            val = val << 1 | bit
        out.append(chr(63 + val))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain format: first line n, then one 'u v' pair per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint in {ln!r}") from None
        edges.append((u, v))
    return graph_from_edges(n, edges)
