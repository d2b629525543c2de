"""Exhaustive walk over the 2^m orientations of a graph.

An orientation is an integer word: bit i set means edge i = (u, v) of the
canonical sorted edge list is directed u -> v, clear means v -> u.  All
counts are exact Python ints, so chunked or threaded runs aggregate to the
same numbers as a single pass regardless of how the range is split.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import os

import numpy as np

from .dyadic import TripleCorrelation
from .errors import OverCapError
from .graphs import Graph, Triple

DEFAULT_CAP = 30
_AUTO_NUMPY_MIN_BITS = 10


@dataclass(frozen=True)
class OrientationCounts:
    """Occurrence counts over all 2^m orientations of one triple's events."""

    m: int
    n_c: int
    n_d: int
    n_cd: int

    @property
    def total(self) -> int:
        return 1 << self.m


def resolve_threads(threads: int) -> int:
    if threads == 0:
        return os.cpu_count() or 1
    if threads < 0:
        raise ValueError(f"thread count must be >= 0, got {threads}")
    return threads


def _out_adjacency(g: Graph, orientation: int) -> list[int]:
    out = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        if orientation >> i & 1:
            out[u] |= 1 << v
        else:
            out[v] |= 1 << u
    return out


def _reach_set(out_adj: list[int], source: int) -> int:
    """Bitset of vertices reachable from source by forward frontier expansion."""
    reach = 1 << source
    frontier = reach
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            nxt |= out_adj[v]
        frontier = nxt & ~reach
        reach |= frontier
    return reach


def reachable(g: Graph, orientation: int, source: int, target: int) -> bool:
    """Is there a directed path source -> target under this orientation word?

    Only the low m bits of the word are meaningful.
    """
    return bool(_reach_set(_out_adjacency(g, orientation), source) >> target & 1)


def _count_range_python(g: Graph, t: Triple, start: int, stop: int) -> tuple[int, int, int]:
    n_c = n_d = n_cd = 0
    a, s, b = t.a, t.s, t.b
    edges = g.edges
    n = g.n
    for word in range(start, stop):
        out = [0] * n
        for i, (u, v) in enumerate(edges):
            if word >> i & 1:
                out[u] |= 1 << v
            else:
                out[v] |= 1 << u
        c = _reach_set(out, a) >> s & 1
        d = _reach_set(out, s) >> b & 1
        n_c += c
        n_d += d
        n_cd += c & d
    return n_c, n_d, n_cd


# ---------------------------------------------------------------------------
# numpy batch kernel: evaluates many orientation words at once.  Used both by
# the exhaustive walk (words = a contiguous range) and by Monte Carlo
# (words = sampled bits, possibly several 64-bit words per orientation).

def _batch_adjacency(g: Graph, words: np.ndarray) -> np.ndarray:
    """Boolean (B, n, n) adjacency for each orientation word in the batch."""
    if words.ndim == 1:
        words = words[:, None]
    adj = np.zeros((words.shape[0], g.n, g.n), dtype=bool)
    one = np.uint64(1)
    for i, (u, v) in enumerate(g.edges):
        w, b = divmod(i, 64)
        fwd = ((words[:, w] >> np.uint64(b)) & one).astype(bool)
        adj[:, u, v] = fwd
        adj[:, v, u] = ~fwd
    return adj


def _batch_reach(adj: np.ndarray, source: int, reverse: bool = False) -> np.ndarray:
    """Boolean (B, n) reachability from source in each batched digraph."""
    if reverse:
        adj = adj.transpose(0, 2, 1)
    reach = np.zeros(adj.shape[:2], dtype=bool)
    reach[:, source] = True
    while True:
        grown = reach | (reach[:, :, None] & adj).any(axis=1)
        if np.array_equal(grown, reach):
            return reach
        reach = grown


def _batch_size(n: int) -> int:
    # Keep the (B, n, n) temporaries around a few MB.
    return min(1 << 16, max(1 << 10, (1 << 22) // (n * n)))


def _count_range_numpy(g: Graph, t: Triple, start: int, stop: int) -> tuple[int, int, int]:
    n_c = n_d = n_cd = 0
    step = _batch_size(g.n)
    for lo in range(start, stop, step):
        words = np.arange(lo, min(stop, lo + step), dtype=np.uint64)
        adj = _batch_adjacency(g, words)
        c = _batch_reach(adj, t.a)[:, t.s]
        d = _batch_reach(adj, t.s)[:, t.b]
        n_c += int(np.count_nonzero(c))
        n_d += int(np.count_nonzero(d))
        n_cd += int(np.count_nonzero(c & d))
    return n_c, n_d, n_cd


def _pick_backend(backend: str, m: int):
    if backend == "auto":
        backend = "numpy" if m >= _AUTO_NUMPY_MIN_BITS else "python"
    if backend == "python":
        return _count_range_python
    if backend == "numpy":
        return _count_range_numpy
    raise ValueError(f"unknown backend {backend!r}")


def count_events(
    g: Graph,
    t: Triple,
    *,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
    chunk_bits: int = 16,
    backend: str = "auto",
) -> OrientationCounts:
    """Count, over all orientations, how often a->s, s->b, and both hold."""
    t.validate(g)
    m = g.m
    if m > cap:
        raise OverCapError(
            f"graph has {m} edges, over the enumeration cap of {cap}; "
            f"use the Monte Carlo estimator for graphs this large"
        )
    count_range = _pick_backend(backend, m)
    total = 1 << m
    chunk = 1 << chunk_bits
    spans = [(lo, min(total, lo + chunk)) for lo in range(0, total, chunk)]
    threads = resolve_threads(threads)
    if threads > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda span: count_range(g, t, *span), spans))
    else:
        parts = [count_range(g, t, lo, hi) for lo, hi in spans]
    n_c = sum(p[0] for p in parts)
    n_d = sum(p[1] for p in parts)
    n_cd = sum(p[2] for p in parts)
    return OrientationCounts(m=m, n_c=n_c, n_d=n_d, n_cd=n_cd)


def exact_correlation(g: Graph, t: Triple, **kwargs) -> TripleCorrelation:
    """Exact joint law of the two path events, from exhaustive counting."""
    counts = count_events(g, t, **kwargs)
    return TripleCorrelation.from_scaled(counts.n_c, counts.n_d, counts.n_cd, counts.m)


def sweep_source(
    g: Graph,
    s: int,
    *,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
    backend: str = "auto",
) -> tuple[list[int], list[int], list[list[int]]]:
    """Joint counts for every ordered pair around one middle vertex s.

    One pass over all orientations yields, for each orientation, the set of
    vertices with a path into s and the set reachable from s.  Returns
    (into_counts, from_counts, joint) where joint[a][b] counts orientations
    with both a -> s and s -> b.  into_counts[s] and joint rows/columns at s
    include s itself reaching s; callers exclude s when forming triples.
    """
    if g.m > cap:
        raise OverCapError(
            f"graph has {g.m} edges, over the enumeration cap of {cap}; "
            f"use the Monte Carlo estimator for graphs this large"
        )
    if backend == "auto":
        backend = "numpy" if g.m >= _AUTO_NUMPY_MIN_BITS else "python"
    total = 1 << g.m
    if backend == "python":
        into = [0] * g.n
        outof = [0] * g.n
        joint = [[0] * g.n for _ in range(g.n)]
        for word in range(total):
            out_adj = _out_adjacency(g, word)
            in_adj = [0] * g.n
            for v in range(g.n):
                rest = out_adj[v]
                while rest:
                    u = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    in_adj[u] |= 1 << v
            into_set = _reach_set(in_adj, s)
            from_set = _reach_set(out_adj, s)
            for a in range(g.n):
                if into_set >> a & 1:
                    into[a] += 1
                    row = joint[a]
                    rest = from_set
                    while rest:
                        b = (rest & -rest).bit_length() - 1
                        rest &= rest - 1
                        row[b] += 1
                if from_set >> a & 1:
                    outof[a] += 1
        return into, outof, joint

    into_acc = np.zeros(g.n, dtype=np.int64)
    outof_acc = np.zeros(g.n, dtype=np.int64)
    joint_acc = np.zeros((g.n, g.n), dtype=np.int64)
    step = _batch_size(g.n)
    for lo in range(0, total, step):
        words = np.arange(lo, min(total, lo + step), dtype=np.uint64)
        adj = _batch_adjacency(g, words)
        into_mask = _batch_reach(adj, s, reverse=True)
        from_mask = _batch_reach(adj, s)
        into_acc += into_mask.sum(axis=0, dtype=np.int64)
        outof_acc += from_mask.sum(axis=0, dtype=np.int64)
        # float64 matmul is exact here: every entry is an integer count
        # bounded by the batch size, far under 2**53.
        joint_acc += (into_mask.astype(np.float64).T @ from_mask.astype(np.float64)).astype(np.int64)
    return list(map(int, into_acc)), list(map(int, outof_acc)), [list(map(int, row)) for row in joint_acc]
