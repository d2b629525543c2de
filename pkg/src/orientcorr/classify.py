"""Classify graphs by the covariance signs of their reachability triples.

Over all ordered triples (a, s, b) of distinct vertices:

* class I   - no triple is positively correlated;
* class III - no triple is negatively correlated;
* class II  - both signs occur, or some triple is exactly independent.

The classes overlap: a graph whose triples are all independent is in all
three.  Minor containment (used for the outerplanarity probe) is decided by
brute-force search over branch sets, which is why it is capped at 10
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .enumeration import DEFAULT_CAP, sweep_source
from .errors import GraphFormatError, OverCapError
from .graphs import Graph, complete_graph, graph_from_edges, is_connected, parse_graph6

MINOR_MAX_VERTICES = 10


@dataclass(frozen=True)
class ClassFlags:
    """Triple-sign census and the resulting class memberships."""

    neg_triples: int
    zero_triples: int
    pos_triples: int
    class_i: bool
    class_ii: bool
    class_iii: bool
    disconnected: bool = False

    @property
    def total_triples(self) -> int:
        return self.neg_triples + self.zero_triples + self.pos_triples


def classify(
    g: Graph,
    *,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
    allow_disconnected: bool = False,
) -> ClassFlags:
    """Census the covariance sign of every ordered triple of g."""
    if g.n < 3:
        raise ValueError(f"classification needs n >= 3, got n={g.n}")
    disconnected = not is_connected(g)
    if disconnected and not allow_disconnected:
        raise ValueError("graph is disconnected; pass allow_disconnected to census it anyway")
    neg = zero = pos = 0
    total = 1 << g.m
    for s in range(g.n):
        into, outof, joint = sweep_source(g, s, cap=cap, threads=threads)
        for a in range(g.n):
            if a == s:
                continue
            for b in range(g.n):
                if b == s or b == a:
                    continue
                diff = joint[a][b] * total - into[a] * outof[b]
                if diff < 0:
                    neg += 1
                elif diff > 0:
                    pos += 1
                else:
                    zero += 1
    return ClassFlags(
        neg_triples=neg,
        zero_triples=zero,
        pos_triples=pos,
        class_i=pos == 0,
        class_ii=(neg > 0 and pos > 0) or zero > 0,
        class_iii=neg == 0,
        disconnected=disconnected,
    )


def classify_stream(
    lines: Iterable[str],
    *,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
    outerplanar: bool = False,
) -> Iterator[dict]:
    """Classify a stream of graph6 lines, yielding one record per line.

    Yields dicts with "type" in {"graph", "skipped", "error"}, then a final
    {"type": "summary"} record.  Disconnected and over-cap graphs are
    skipped, not fatal; malformed lines become error records.
    """
    graphs = errors = skipped = 0
    class_counts = {"class_i": 0, "class_ii": 0, "class_iii": 0}
    for index, raw in enumerate(lines):
        line = raw.rstrip("\r\n")
        if not line:
            continue
        record: dict = {"type": "graph", "index": index, "graph6": line}
        try:
            g = parse_graph6(line)
        except GraphFormatError as exc:
            errors += 1
            yield {"type": "error", "index": index, "graph6": line, "error": str(exc)}
            continue
        record["n"] = g.n
        record["m"] = g.m
        if g.n < 3 or not is_connected(g):
            skipped += 1
            reason = "fewer than 3 vertices" if g.n < 3 else "disconnected"
            yield {"type": "skipped", "index": index, "graph6": line,
                   "n": g.n, "m": g.m, "reason": reason}
            continue
        try:
            flags = classify(g, cap=cap, threads=threads)
        except OverCapError as exc:
            skipped += 1
            yield {"type": "skipped", "index": index, "graph6": line,
                   "n": g.n, "m": g.m, "reason": str(exc)}
            continue
        graphs += 1
        record.update(
            neg_triples=flags.neg_triples,
            zero_triples=flags.zero_triples,
            pos_triples=flags.pos_triples,
            class_i=flags.class_i,
            class_ii=flags.class_ii,
            class_iii=flags.class_iii,
        )
        for key in class_counts:
            class_counts[key] += getattr(flags, key)
        if outerplanar:
            record["outerplanar"] = is_outerplanar(g) if g.n <= MINOR_MAX_VERTICES else None
        yield record
    summary = {"type": "summary", "graphs": graphs, "errors": errors, "skipped": skipped}
    summary.update(class_counts)
    yield summary


# ---------------------------------------------------------------------------
# Minor containment by brute force over branch sets.

def _connected_subsets(g: Graph) -> list[int]:
    subsets = []
    for mask in range(1, 1 << g.n):
        root = (mask & -mask).bit_length() - 1
        seen = frontier = 1 << root
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                nxt |= g.adjacency[v]
            frontier = nxt & mask & ~seen
            seen |= frontier
        if seen == mask:
            subsets.append(mask)
    # Small sets first so witnesses made of singletons are found immediately.
    subsets.sort(key=lambda mask: (bin(mask).count("1"), mask))
    return subsets


def has_minor(g: Graph, h: Graph) -> bool:
    """Does g contain h as a minor?  Brute force, g capped at 10 vertices.

    Searches for pairwise-disjoint connected branch sets, one per vertex of
    h, with an edge of g between every pair that is adjacent in h.
    """
    if g.n > MINOR_MAX_VERTICES:
        raise ValueError(f"minor search is capped at {MINOR_MAX_VERTICES} vertices, got n={g.n}")
    if h.n > g.n:
        return False
    subsets = _connected_subsets(g)
    neighbor_mask = []
    for mask in subsets:
        nbr = 0
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            nbr |= g.adjacency[v]
        neighbor_mask.append(nbr & ~mask)
    nbr_of = dict(zip(subsets, neighbor_mask))
    # Place high-degree vertices of h first: their adjacency constraints
    # prune hardest.
    h_deg = [bin(h.adjacency[v]).count("1") for v in range(h.n)]
    order = sorted(range(h.n), key=lambda v: -h_deg[v])
    placed: list[int] = []

    def place(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        hv = order[idx]
        required = [j for j in range(idx) if h.has_edge(hv, order[j])]
        for mask in subsets:
            if mask & used:
                continue
            nbr = nbr_of[mask]
            if all(nbr & placed[j] for j in required):
                placed.append(mask)
                if place(idx + 1, used | mask):
                    return True
                placed.pop()
        return False

    return place(0, 0)


def _k23() -> Graph:
    return graph_from_edges(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])


def is_outerplanar(g: Graph) -> bool:
    """Outerplanarity via the forbidden minors: no K4 and no K23 minor."""
    return not has_minor(g, complete_graph(4)) and not has_minor(g, _k23())
